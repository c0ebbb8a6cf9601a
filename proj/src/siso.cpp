#include "tpcodec/siso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace tpcodec {

OutListBound build_out_list_bound(const LlrVector& l, const ReliabilityOrder& order,
                                  int t_prime) {
    const int n = static_cast<int>(l.size());
    if (static_cast<int>(order.indices.size()) != n)
        throw LengthMismatch("build_out_list_bound: order does not match LLR length");
    if (t_prime < 0 || order.p + t_prime + 1 > n)
        throw UnsupportedParameters("build_out_list_bound: p + t' + 1 exceeds n");

    OutListBound bound;
    bound.y_tilde.resize(n);
    double abs_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        bound.y_tilde[i] = static_cast<std::int8_t>(sign_of(l[i]));
        abs_sum += std::fabs(l[i]);
    }
    double flipped_mass = 0.0;
    for (int r = order.p; r <= order.p + t_prime; ++r) {
        const int pos = order.indices[r];
        bound.y_tilde[pos] = static_cast<std::int8_t>(-bound.y_tilde[pos]);
        flipped_mass += std::fabs(l[pos]);
    }
    bound.corr_tilde = 2.0 * (abs_sum - 2.0 * flipped_mass);
    return bound;
}

HypothesisReliability hypothesis_deltas(const CandidateList& list, const OutListBound& bound,
                                        int i) {
    HypothesisReliability out;
    for (int j = 0; j < list.size(); ++j) {
        const double d = list.corr[j] - bound.corr_tilde;
        auto& slot = list.entries[j].get(i) ? out.delta1 : out.delta0;
        if (!slot || d > *slot) slot = d;
    }
    return out;
}

double psi(std::optional<double> delta, const HalfIterParams& params) {
    if (!delta) return 0.0;
    const double centered = *delta - params.mu;
    return std::max(params.lambda1 * centered, params.lambda2 * centered);
}

namespace {

// For every position, the correlation of the best list entry whose bit
// differs from the best candidate's bit there (descending-correlation scan;
// the first entry to differ at a position is its best competitor).
void competitor_scan(const CandidateList& list, int n, std::vector<double>& comp,
                     std::vector<std::uint8_t>& has) {
    comp.assign(n, 0.0);
    has.assign(n, 0);
    const int m = list.size();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return list.corr[a] > list.corr[b]; });
    const HardWord& best = list.entries[list.best_index];
    int remaining = n;
    for (int rank = 0; rank < m && remaining > 0; ++rank) {
        const int j = perm[rank];
        if (j == list.best_index) continue;
        const auto& wa = list.entries[j].words();
        const auto& wb = best.words();
        for (std::size_t w = 0; w < wa.size(); ++w) {
            std::uint64_t diff = wa[w] ^ wb[w];
            while (diff) {
                const int i = static_cast<int>(w * 64) + std::countr_zero(diff);
                diff &= diff - 1;
                if (i < n && !has[i]) {
                    has[i] = 1;
                    comp[i] = list.corr[j];
                    --remaining;
                }
            }
        }
    }
}

} // namespace

LlrVector extrinsic_proposed(const LlrVector& l, const CandidateList& list,
                             const OutListBound& bound, const HalfIterParams& params) {
    const int n = static_cast<int>(l.size());
    LlrVector out(n, 0.0);
    if (list.empty()) return out;

    std::vector<double> comp;
    std::vector<std::uint8_t> has;
    competitor_scan(list, n, comp, has);

    const HardWord& best = list.entries[list.best_index];
    const double delta_best = list.corr[list.best_index] - bound.corr_tilde;
    const double psi_best = psi(delta_best, params);
    for (int i = 0; i < n; ++i) {
        const double psi_opp =
            has[i] ? psi(comp[i] - bound.corr_tilde, params) : 0.0;
        out[i] = best.get(i) ? psi_opp - psi_best : psi_best - psi_opp;
    }
    return out;
}

LlrVector extrinsic_pyndiah(const LlrVector& l, const CandidateList& list,
                            const HalfIterParams& params) {
    const int n = static_cast<int>(l.size());
    LlrVector out(n, 0.0);
    if (list.empty()) return out;

    std::vector<double> comp;
    std::vector<std::uint8_t> has;
    competitor_scan(list, n, comp, has);

    const HardWord& best = list.entries[list.best_index];
    const double corr_best = list.corr[list.best_index];
    for (int i = 0; i < n; ++i) {
        const double s = phi(best.get(i));
        if (has[i]) {
            const double app = s * (corr_best - comp[i]) * 0.25;
            out[i] = app - l[i];
        } else {
            out[i] = params.beta_pyndiah * s;
        }
    }
    return out;
}

} // namespace tpcodec
