#include "tpcodec/chase.hpp"

#include "tpcodec/counter_rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace tpcodec {

ReliabilityOrder rank_reliability(const LlrVector& l, int p) {
    const int n = static_cast<int>(l.size());
    if (p < 0 || p > n)
        throw UnsupportedParameters("rank_reliability: p = " + std::to_string(p) +
                                    " outside [0, n]");
    ReliabilityOrder order;
    order.p = p;
    order.indices.resize(n);
    std::iota(order.indices.begin(), order.indices.end(), 0);
    std::sort(order.indices.begin(), order.indices.end(), [&](int a, int b) {
        const double ma = std::fabs(l[a]), mb = std::fabs(l[b]);
        if (ma != mb) return ma < mb;
        return a < b;
    });
    return order;
}

HardWord hard_decision(const LlrVector& l) {
    HardWord w(static_cast<int>(l.size()));
    for (std::size_t i = 0; i < l.size(); ++i)
        if (hard_bit(l[i])) w.set(static_cast<int>(i), true);
    return w;
}

std::vector<HardWord> test_patterns(const HardWord& hard, const ReliabilityOrder& order) {
    if (order.p > kMaxChaseP)
        throw UnsupportedParameters("test_patterns: p = " + std::to_string(order.p) +
                                    " exceeds the enumeration budget");
    std::vector<HardWord> out;
    out.reserve(std::size_t(1) << order.p);
    for (std::uint32_t mask = 0; mask < (1u << order.p); ++mask) {
        HardWord w = hard;
        for (int j = 0; j < order.p; ++j)
            if ((mask >> j) & 1u) w.flip(order.indices[j]);
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

// One distinct decode, tracked as the set of positions where it differs from
// the hard decision (parity position included for extended codes).
struct CandidateRecord {
    std::array<int, kMaxChaseP + kMaxBddErrors + 1> diff{};
    int diff_len = 0;
    double corr = 0.0;
    std::uint64_t key = 0;
};

std::uint64_t diff_key(const int* diff, int len) {
    std::uint64_t h = 0x243f6a8885a308d3ULL ^ static_cast<std::uint64_t>(len);
    for (int i = 0; i < len; ++i) h = mix64(h ^ static_cast<std::uint64_t>(diff[i]));
    return h;
}

} // namespace

CandidateList build_list(const CodeSpec& spec, const LlrVector& l, const ReliabilityOrder& order) {
    const int n = spec.n;
    if (static_cast<int>(l.size()) != n)
        throw LengthMismatch("build_list: LLR length " + std::to_string(l.size()) +
                             ", expected " + std::to_string(n));
    if (static_cast<int>(order.indices.size()) != n)
        throw LengthMismatch("build_list: reliability order does not match code length");
    const int p = order.p;
    if (p > kMaxChaseP)
        throw UnsupportedParameters("build_list: p = " + std::to_string(p) +
                                    " exceeds the enumeration budget");

    const HardWord hard = hard_decision(l);
    const int nb = spec.n_base();
    const int q = spec.identity ? 1 : spec.field.order();
    const int two_t = 2 * spec.t;

    double abs_sum = 0.0;
    for (double v : l) abs_sum += std::fabs(v);

    // Parity of the hard decision over the base positions (extended codes
    // recompute their last bit from it).
    int hard_base_parity = 0;
    if (spec.extended)
        for (int i = 0; i < nb; ++i) hard_base_parity ^= hard.get(i);

    // Syndromes of the hard decision, updated incrementally: stepping through
    // the test patterns in Gray-code order flips exactly one position at a
    // time, and each flip XORs a precomputed delta into every syndrome.
    std::vector<std::uint32_t> synd = syndromes(spec, hard);
    std::array<std::array<std::uint32_t, 2 * kMaxBddErrors>, kMaxChaseP> synd_delta{};
    for (int j = 0; j < p; ++j) {
        const int pos = order.indices[j];
        if (spec.identity || pos >= nb) continue; // parity flips do not touch syndromes
        const int d = nb - 1 - pos;
        for (int jj = 1; jj <= two_t; ++jj)
            synd_delta[j][jj - 1] =
                spec.field.exp_table[(static_cast<long long>(jj) * d) % q];
    }

    std::vector<CandidateRecord> records;
    records.reserve(std::size_t(1) << p);

    std::uint32_t pattern = 0; // bit j = flip at order.indices[j]
    for (std::uint32_t s = 0; s < (1u << p); ++s) {
        if (s != 0) {
            const int j = std::countr_zero(s); // Gray-code step flips bit j
            pattern ^= 1u << j;
            for (int jj = 0; jj < two_t; ++jj) synd[jj] ^= synd_delta[j][jj];
        }

        const auto errs = bdd_from_syndromes(spec, synd);
        if (!errs) continue;

        CandidateRecord rec;
        // Differences vs the hard decision: pattern flips on base positions,
        // symmetric-differenced with the decoder's flips.
        for (std::uint32_t bits = pattern; bits != 0; bits &= bits - 1) {
            const int pos = order.indices[std::countr_zero(bits)];
            if (pos < nb) rec.diff[rec.diff_len++] = pos;
        }
        for (int e = 0; e < errs->count; ++e) {
            const int pos = errs->positions[e];
            bool cancelled = false;
            for (int i = 0; i < rec.diff_len; ++i) {
                if (rec.diff[i] == pos) {
                    rec.diff[i] = rec.diff[--rec.diff_len];
                    cancelled = true;
                    break;
                }
            }
            if (!cancelled) rec.diff[rec.diff_len++] = pos;
        }
        if (spec.extended) {
            const int cand_parity = hard_base_parity ^ (rec.diff_len & 1);
            if (cand_parity != static_cast<int>(hard.get(n - 1)))
                rec.diff[rec.diff_len++] = n - 1;
        }
        std::sort(rec.diff.begin(), rec.diff.begin() + rec.diff_len);

        double flipped_mass = 0.0;
        for (int i = 0; i < rec.diff_len; ++i) flipped_mass += std::fabs(l[rec.diff[i]]);
        rec.corr = 2.0 * abs_sum - 4.0 * flipped_mass;
        rec.key = diff_key(rec.diff.data(), rec.diff_len);

        bool duplicate = false;
        for (const auto& prev : records) {
            if (prev.key != rec.key || prev.diff_len != rec.diff_len) continue;
            if (std::equal(prev.diff.begin(), prev.diff.begin() + prev.diff_len,
                           rec.diff.begin())) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) records.push_back(rec);
    }

    // Sort by correlation descending; equal-correlation ties keep generation
    // order so the result is independent of the sort implementation.
    std::vector<int> perm(records.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return records[a].corr > records[b].corr; });

    CandidateList list;
    list.entries.reserve(records.size());
    list.corr.reserve(records.size());
    for (int idx : perm) {
        const auto& rec = records[idx];
        HardWord w = hard;
        for (int i = 0; i < rec.diff_len; ++i) w.flip(rec.diff[i]);
        list.entries.push_back(std::move(w));
        list.corr.push_back(rec.corr);
    }
    if (!list.entries.empty()) list.best_index = 0;
    return list;
}

CandidateList build_list(const CodeSpec& spec, const LlrVector& l, int p) {
    return build_list(spec, l, rank_reliability(l, p));
}

} // namespace tpcodec
