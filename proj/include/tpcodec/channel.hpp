#pragma once

#include <cstdint>

#include "tpcodec/matrix.hpp"

namespace tpcodec {

// BPSK over AWGN with noise variance sigma^2 per real dimension, so that
// Es/N0 = 1/(2 sigma^2). All noise is counter-based: the stream for one trial
// is a pure function of (seed, trial_id) and each matrix element addresses its
// own counter, independent of evaluation order.
struct ChannelConfig {
    double sigma = 1.0;
    std::uint64_t seed = 0;
};

double es_n0_db_from_sigma(double sigma);
double sigma_from_es_n0_db(double es_n0_db);
double eb_n0_db_from_es_n0_db(double es_n0_db, double rate);
double es_n0_db_from_eb_n0_db(double eb_n0_db, double rate);

// Gaussian tail probability Q(x); the uncoded BPSK bit error rate is Q(1/sigma).
double q_function(double x);

// phi: bit 0 -> +1, bit 1 -> -1.
RealMatrix modulate(const BitMatrix& bits);
BitMatrix demap(const RealMatrix& x);

RealMatrix transmit(const RealMatrix& x, const ChannelConfig& cfg, std::uint64_t trial_id);

// Channel LLRs: elementwise 2 y / sigma^2.
LlrMatrix to_llr(const RealMatrix& y, const ChannelConfig& cfg);

} // namespace tpcodec
