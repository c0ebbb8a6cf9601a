#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tpcodec/chase.hpp"
#include "tpcodec/llr.hpp"

namespace tpcodec {

// Per-half-iteration decoder constants. alpha scales the extrinsic before it
// enters the next half-iteration; lambda1/lambda2/mu shape the piecewise-linear
// reliability map of the proposed rule; beta_pyndiah is the baseline rule's
// fallback magnitude when no competing candidate exists.
struct HalfIterParams {
    double alpha = 1.0;
    double lambda1 = 1.0;
    double lambda2 = 1.0;
    double mu = 0.0;
    double beta_pyndiah = 0.0;
};

// Likelihood bound for codewords outside the candidate list: the sign vector
// that agrees with sign(l) everywhere except the t'+1 positions ranked just
// after the p least reliable ones. Any codeword missing from the list must
// differ from the hard decision in at least those ranks, so corr_tilde upper
// bounds its correlation.
struct OutListBound {
    std::vector<std::int8_t> y_tilde; // entries in {+1, -1}
    double corr_tilde = 0.0;          // (2l)^T y_tilde
};

OutListBound build_out_list_bound(const LlrVector& l, const ReliabilityOrder& order,
                                  int t_prime);

// Reliability gap of the best list candidate carrying bit s at one position:
// delta_s = corr(best such candidate) - corr_tilde, absent when no candidate
// carries that bit.
struct HypothesisReliability {
    std::optional<double> delta0;
    std::optional<double> delta1;
};

HypothesisReliability hypothesis_deltas(const CandidateList& list, const OutListBound& bound,
                                        int i);

// Piecewise-linear reliability map: max(lambda1*(delta-mu), lambda2*(delta-mu)),
// and 0 when the hypothesis set is empty.
double psi(std::optional<double> delta, const HalfIterParams& params);

// Proposed rule: extrinsic_i = psi(delta at bit 0) - psi(delta at bit 1).
// An empty candidate list yields an all-zero extrinsic vector.
LlrVector extrinsic_proposed(const LlrVector& l, const CandidateList& list,
                             const OutListBound& bound, const HalfIterParams& params);

// Chase-Pyndiah baseline: where a competing candidate exists the soft output
// is the exact two-codeword LLR phi(best_i) * (corr(best) - corr(competitor)) / 4
// and the extrinsic subtracts the input; elsewhere the fallback
// beta_pyndiah * phi(best_i) is emitted directly as extrinsic. An empty list
// yields an all-zero extrinsic vector.
LlrVector extrinsic_pyndiah(const LlrVector& l, const CandidateList& list,
                            const HalfIterParams& params);

} // namespace tpcodec
