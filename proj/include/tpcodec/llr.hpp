#pragma once

#include <vector>

namespace tpcodec {

// Log-likelihood ratios follow the convention ln P(bit=0)/P(bit=1):
// positive values favor bit 0. BPSK maps bit 0 -> +1, bit 1 -> -1.
using LlrVector = std::vector<double>;

// Hard decision: l >= 0 decides bit 0 (the l == 0 tie is fixed for determinism).
inline bool hard_bit(double l) { return l < 0.0; }

inline double phi(bool bit) { return bit ? -1.0 : 1.0; }

// Sign as used by the hard-decision convention: sign_of(0) = +1.
inline double sign_of(double l) { return l < 0.0 ? -1.0 : 1.0; }

} // namespace tpcodec
