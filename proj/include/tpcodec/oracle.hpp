#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tpcodec/bch.hpp"
#include "tpcodec/llr.hpp"

namespace tpcodec {

// Saturation for exact a-posteriori LLRs; beyond this magnitude downstream
// behavior is sign-determined.
constexpr double kLlrMax = 60.0;

// Enumeration guard for exact soft output.
constexpr int kMaxCodebookDim = 26;

// Every codeword of one small component code.
struct Codebook {
    int n = 0;
    std::vector<HardWord> words;
};

Codebook build_codebook(const CodeSpec& spec); // throws CodeTooLarge for k > 26

// Exact bitwise a-posteriori LLR by log-sum-exp over the full codebook, with
// the posterior weight of codeword c proportional to exp(l^T phi(c) / 2).
// Results saturate at +-kLlrMax; a position where only one bit value occurs in
// the codebook saturates outright.
LlrVector exact_app_llr(const Codebook& book, const LlrVector& l);

// app - l, the exact counterpart of the list rules' extrinsic output.
LlrVector exact_extrinsic(const Codebook& book, const LlrVector& l);

// One observation of the desk-scale correlation experiment: at (trial, pos),
// the proposed criterion's bit-0 reliability gap, the exact-MAP extrinsic,
// and whether the transmitted (all-zero) codeword survived into the list.
// delta0 is NaN when no list candidate carries bit 0 at the position.
struct CorrelationRow {
    int trial = 0;
    int pos = 0;
    double delta0 = 0.0;
    double exact_ex = 0.0;
    bool in_list = false;
};

// Transmits the all-zero codeword n_trials times over AWGN at the given sigma,
// runs the Chase list stage with parameter p, and pairs each position's delta0
// with the exact-MAP extrinsic. Row order: trial-major, position-minor.
std::vector<CorrelationRow> correlate_delta_vs_exact(const CodeSpec& spec, int n_trials,
                                                     double sigma, int p,
                                                     std::uint64_t seed);

// CSV with header trial,pos,delta0,exact_ex,in_list.
void write_correlation_csv(std::ostream& out, const std::vector<CorrelationRow>& rows);

} // namespace tpcodec
