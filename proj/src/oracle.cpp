#include "tpcodec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "tpcodec/chase.hpp"
#include "tpcodec/counter_rng.hpp"
#include "tpcodec/siso.hpp"

namespace tpcodec {

Codebook build_codebook(const CodeSpec& spec) {
    if (spec.k > kMaxCodebookDim)
        throw CodeTooLarge("build_codebook: k = " + std::to_string(spec.k) +
                           " exceeds the enumeration limit " +
                           std::to_string(kMaxCodebookDim));
    Codebook book;
    book.n = spec.n;
    book.words.reserve(std::size_t(1) << spec.k);
    HardWord info(spec.k);
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << spec.k); ++u) {
        for (int i = 0; i < spec.k; ++i) info.set(i, (u >> i) & 1ULL);
        book.words.push_back(encode(spec, info));
    }
    return book;
}

namespace {

// Running log-sum-exp accumulator.
struct LogSum {
    double max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;

    void add(double m) {
        if (sum == 0.0) {
            max = m;
            sum = 1.0;
        } else if (m <= max) {
            sum += std::exp(m - max);
        } else {
            sum = sum * std::exp(max - m) + 1.0;
            max = m;
        }
    }

    bool empty() const { return sum == 0.0; }
    double value() const { return max + std::log(sum); }
};

} // namespace

LlrVector exact_app_llr(const Codebook& book, const LlrVector& l) {
    const int n = book.n;
    if (static_cast<int>(l.size()) != n)
        throw LengthMismatch("exact_app_llr: LLR length does not match the codebook");

    std::vector<LogSum> acc0(n), acc1(n);
    double l_total = 0.0;
    for (double v : l) l_total += v;
    for (const auto& c : book.words) {
        // Posterior weight exponent: l^T phi(c) / 2.
        double dot = l_total;
        const auto& words = c.words();
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                const int i = static_cast<int>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                dot -= 2.0 * l[i];
            }
        }
        const double m = 0.5 * dot;
        for (int i = 0; i < n; ++i) (c.get(i) ? acc1[i] : acc0[i]).add(m);
    }

    LlrVector app(n);
    for (int i = 0; i < n; ++i) {
        double v;
        if (acc0[i].empty())
            v = -kLlrMax;
        else if (acc1[i].empty())
            v = kLlrMax;
        else
            v = acc0[i].value() - acc1[i].value();
        app[i] = std::clamp(v, -kLlrMax, kLlrMax);
    }
    return app;
}

LlrVector exact_extrinsic(const Codebook& book, const LlrVector& l) {
    LlrVector ex = exact_app_llr(book, l);
    for (std::size_t i = 0; i < ex.size(); ++i) ex[i] -= l[i];
    return ex;
}

std::vector<CorrelationRow> correlate_delta_vs_exact(const CodeSpec& spec, int n_trials,
                                                     double sigma, int p,
                                                     std::uint64_t seed) {
    const Codebook book = build_codebook(spec);
    const HardWord zero_cw(spec.n);
    const int n = spec.n;
    const double llr_scale = 2.0 / (sigma * sigma);

    std::vector<CorrelationRow> rows;
    rows.reserve(static_cast<std::size_t>(n_trials) * n);
    for (int trial = 0; trial < n_trials; ++trial) {
        const std::uint64_t stream = hash_combine(seed, static_cast<std::uint64_t>(trial));
        LlrVector l(n);
        for (int i = 0; i < n; ++i) {
            // All-zero codeword: every transmitted symbol is +1.
            const double y = 1.0 + sigma * gaussian_at(stream, static_cast<std::uint64_t>(i));
            l[i] = llr_scale * y;
        }

        const auto order = rank_reliability(l, p);
        const auto list = build_list(spec, l, order);
        const auto bound = build_out_list_bound(l, order, spec.t_prime);
        const auto exact = exact_extrinsic(book, l);

        bool in_list = false;
        for (const auto& entry : list.entries)
            if (entry == zero_cw) {
                in_list = true;
                break;
            }

        for (int i = 0; i < n; ++i) {
            CorrelationRow row;
            row.trial = trial;
            row.pos = i;
            const auto h = hypothesis_deltas(list, bound, i);
            row.delta0 = h.delta0 ? *h.delta0 : std::numeric_limits<double>::quiet_NaN();
            row.exact_ex = exact[i];
            row.in_list = in_list;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_correlation_csv(std::ostream& out, const std::vector<CorrelationRow>& rows) {
    out << "trial,pos,delta0,exact_ex,in_list\n";
    for (const auto& r : rows) {
        out << r.trial << ',' << r.pos << ',';
        if (std::isnan(r.delta0))
            out << "nan";
        else
            out << r.delta0;
        out << ',' << r.exact_ex << ',' << (r.in_list ? 1 : 0) << '\n';
    }
}

} // namespace tpcodec
