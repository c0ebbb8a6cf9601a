#pragma once

#include <vector>

#include "tpcodec/bch.hpp"
#include "tpcodec/llr.hpp"

namespace tpcodec {

// Enumeration budget guard: 2^p test patterns are generated per component word.
constexpr int kMaxChaseP = 16;

// Positions ordered by ascending reliability |l_i|, ties broken by ascending
// index. The first p entries form the perturbation set.
struct ReliabilityOrder {
    std::vector<int> indices; // permutation of [0, n)
    int p = 0;
};

ReliabilityOrder rank_reliability(const LlrVector& l, int p);

// Componentwise sign decision of l (l >= 0 -> bit 0).
HardWord hard_decision(const LlrVector& l);

// All 2^p perturbations of `hard`: pattern i flips exactly the marked
// positions selected by the bits of i, so pattern 0 is `hard` itself and
// pattern 2^p - 1 flips all p marked positions.
std::vector<HardWord> test_patterns(const HardWord& hard, const ReliabilityOrder& order);

// Distinct bounded-distance decodes of the test patterns, each scored by the
// correlation corr(c) = sum_i 2 l_i phi(c_i). Higher correlation means
// smaller Euclidean distance to the soft input.
struct CandidateList {
    std::vector<HardWord> entries; // sorted by corr descending; ties keep generation order
    std::vector<double> corr;      // corr[j] matches entries[j]
    int best_index = -1;           // -1 iff empty()

    bool empty() const { return entries.empty(); }
    int size() const { return static_cast<int>(entries.size()); }
};

CandidateList build_list(const CodeSpec& spec, const LlrVector& l, const ReliabilityOrder& order);
CandidateList build_list(const CodeSpec& spec, const LlrVector& l, int p);

} // namespace tpcodec
