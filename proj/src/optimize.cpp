#include "tpcodec/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "tpcodec/channel.hpp"
#include "tpcodec/counter_rng.hpp"
#include "tpcodec/errors.hpp"

namespace tpcodec {

namespace {

// log2(1 + exp(v)) without overflow for large |v|.
double log2_1p_exp(double v) {
    const double kLn2 = 0.6931471805599453;
    if (v > 0.0) return (v + std::log1p(std::exp(-v))) / kLn2;
    return std::log1p(std::exp(v)) / kLn2;
}

} // namespace

double gmi_of_scaled_llrs(const std::vector<double>& llrs,
                          const std::vector<std::uint8_t>& true_bits) {
    if (llrs.size() != true_bits.size())
        throw LengthMismatch("gmi_of_scaled_llrs: " + std::to_string(llrs.size()) +
                             " LLRs vs " + std::to_string(true_bits.size()) + " bits");
    if (llrs.empty()) throw LengthMismatch("gmi_of_scaled_llrs: empty sample");
    double acc = 0.0;
    for (std::size_t j = 0; j < llrs.size(); ++j) {
        const double x = true_bits[j] ? -1.0 : 1.0;
        acc += log2_1p_exp(-x * llrs[j]);
    }
    return 1.0 - acc / static_cast<double>(llrs.size());
}

namespace {

// Deterministic helpers on top of the engine: the standard distributions are
// implementation-defined, so draw uniforms explicitly.
double unit_uniform(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= bound);
    return static_cast<std::size_t>(v % n);
}

} // namespace

DeResult de_minimize(const std::function<double(const std::vector<double>&)>& objective,
                     const std::vector<std::pair<double, double>>& bounds,
                     const DeConfig& cfg) {
    const std::size_t dim = bounds.size();
    if (dim == 0) throw ConfigError("de_minimize: empty bounds");
    for (const auto& [lo, hi] : bounds)
        if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
            throw ConfigError("de_minimize: bounds must be finite with lo <= hi");
    if (cfg.population_size < 4)
        throw ConfigError("de_minimize: population_size must be at least 4");
    if (!(cfg.weight_f > 0.0 && cfg.weight_f < 2.0))
        throw ConfigError("de_minimize: weight_f must lie in (0, 2)");
    if (!(cfg.crossover_cr > 0.0 && cfg.crossover_cr <= 1.0))
        throw ConfigError("de_minimize: crossover_cr must lie in (0, 1]");
    if (cfg.generations < 1) throw ConfigError("de_minimize: generations must be positive");

    std::mt19937_64 rng(cfg.seed);
    const std::size_t np = static_cast<std::size_t>(cfg.population_size);

    auto clamp_to_box = [&](std::vector<double>& v) {
        for (std::size_t d = 0; d < dim; ++d)
            v[d] = std::clamp(v[d], bounds[d].first, bounds[d].second);
    };

    std::vector<std::vector<double>> pop(np, std::vector<double>(dim));
    std::vector<double> value(np);
    DeResult result;
    result.best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t d = 0; d < dim; ++d) {
            const auto& [lo, hi] = bounds[d];
            pop[i][d] = lo + unit_uniform(rng) * (hi - lo);
        }
        value[i] = objective(pop[i]);
        if (value[i] < result.best_value) {
            result.best_value = value[i];
            result.best = pop[i];
        }
    }

    std::vector<double> trial(dim);
    for (int g = 0; g < cfg.generations; ++g) {
        for (std::size_t i = 0; i < np; ++i) {
            std::size_t r1, r2, r3;
            do {
                r1 = uniform_below(rng, np);
            } while (r1 == i);
            do {
                r2 = uniform_below(rng, np);
            } while (r2 == i || r2 == r1);
            do {
                r3 = uniform_below(rng, np);
            } while (r3 == i || r3 == r1 || r3 == r2);

            const std::size_t j_rand = uniform_below(rng, dim);
            for (std::size_t d = 0; d < dim; ++d) {
                const bool cross = unit_uniform(rng) < cfg.crossover_cr || d == j_rand;
                trial[d] = cross ? pop[r1][d] + cfg.weight_f * (pop[r2][d] - pop[r3][d])
                                 : pop[i][d];
            }
            clamp_to_box(trial);
            const double tv = objective(trial);
            if (tv <= value[i]) {
                pop[i] = trial;
                value[i] = tv;
                if (tv < result.best_value) {
                    result.best_value = tv;
                    result.best = trial;
                }
            }
        }
        result.generation_best.push_back(result.best_value);
    }
    return result;
}

namespace {

// One reproducible Monte Carlo frame: random nonzero information block plus
// counter-based channel noise, both derived from (seed, frame) only.
struct Frame {
    std::vector<std::uint8_t> info;
    BitMatrix cw;
    LlrMatrix l_in;
};

Frame make_frame(const TpcSpec& spec, double sigma, std::uint64_t seed, long frame) {
    Frame f;
    CounterRng bits(hash_combine(seed, 0x1bf0u, static_cast<std::uint64_t>(frame)));
    const std::size_t k = static_cast<std::size_t>(spec.k_rows()) * spec.k_cols();
    f.info.resize(k);
    bool nonzero = false;
    do {
        for (auto& b : f.info) {
            b = static_cast<std::uint8_t>(bits.next_bit());
            nonzero |= b != 0;
        }
    } while (!nonzero);
    f.cw = tpc_encode(spec, f.info);
    const ChannelConfig ch{sigma, hash_combine(seed, 0xa17au)};
    f.l_in = to_llr(transmit(modulate(f.cw), ch, static_cast<std::uint64_t>(frame)), ch);
    return f;
}

} // namespace

GmiEstimate optimize_alpha(const OptimizeContext& ctx, int half_iter,
                           const std::vector<double>& grid) {
    if (half_iter < 0 || half_iter >= static_cast<int>(ctx.spec.schedule.size()))
        throw ConfigError("optimize_alpha: half_iter out of schedule range");
    if (grid.empty()) throw ConfigError("optimize_alpha: empty grid");
    if (ctx.n_frames < 1) throw ConfigError("optimize_alpha: n_frames must be positive");

    TpcSpec spec = ctx.spec;
    spec.schedule.resize(static_cast<std::size_t>(half_iter) + 1);

    // The extrinsic produced at half_iter does not depend on its own alpha, so
    // one decode per frame supports the whole grid.
    std::vector<double> l_all, e_all;
    std::vector<std::uint8_t> bits_all;
    for (long frame = 0; frame < ctx.n_frames; ++frame) {
        const Frame f = make_frame(spec, ctx.sigma, ctx.seed, frame);
        LlrMatrix ex_last;
        (void)tpc_decode(spec, f.l_in, ctx.rule,
                         [&](int t, const LlrMatrix& ex, const LlrMatrix&) {
                             if (t == half_iter) ex_last = ex;
                         });
        for (std::size_t i = 0; i < f.l_in.data().size(); ++i) {
            l_all.push_back(f.l_in.data()[i]);
            e_all.push_back(ex_last.data()[i]);
            bits_all.push_back(f.cw.data()[i]);
        }
    }

    GmiEstimate best{-std::numeric_limits<double>::infinity(), 0.0};
    std::vector<double> app(l_all.size());
    for (double alpha : grid) {
        for (std::size_t i = 0; i < app.size(); ++i) app[i] = l_all[i] + alpha * e_all[i];
        const double g = gmi_of_scaled_llrs(app, bits_all);
        if (g > best.gmi) best = GmiEstimate{g, alpha};
    }
    return best;
}

std::vector<GmiEstimate> optimize_alpha_schedule(const OptimizeContext& ctx,
                                                 const std::vector<double>& grid) {
    OptimizeContext work = ctx;
    std::vector<GmiEstimate> out;
    out.reserve(work.spec.schedule.size());
    for (std::size_t t = 0; t < work.spec.schedule.size(); ++t) {
        const GmiEstimate pick = optimize_alpha(work, static_cast<int>(t), grid);
        work.spec.schedule[t].alpha = pick.scale;
        out.push_back(pick);
    }
    return out;
}

LambdaOptResult optimize_lambdas(const OptimizeContext& ctx, const DeConfig& cfg) {
    if (cfg.frames_per_eval < 1)
        throw ConfigError("optimize_lambdas: frames_per_eval must be positive");
    const double sigma = sigma_from_es_n0_db(cfg.objective_snr_db);

    LambdaOptResult result;
    result.schedule = ctx.spec.schedule;

    // The frame sample is fixed once for the whole pass, so every candidate at
    // every half-iteration is scored against identical noise.
    TpcSpec probe = ctx.spec;
    std::vector<Frame> frames;
    frames.reserve(static_cast<std::size_t>(cfg.frames_per_eval));
    for (long f = 0; f < cfg.frames_per_eval; ++f)
        frames.push_back(make_frame(probe, sigma, ctx.seed, f));
    const double info_bits = static_cast<double>(frames.size()) *
                             static_cast<double>(probe.k_rows()) * probe.k_cols();

    const std::vector<std::pair<double, double>> bounds(cfg.lambda_bounds.begin(),
                                                        cfg.lambda_bounds.end());
    for (std::size_t t = 0; t < result.schedule.size(); ++t) {
        TpcSpec eval_spec = ctx.spec;
        eval_spec.schedule.assign(result.schedule.begin(),
                                  result.schedule.begin() + static_cast<long>(t) + 1);

        auto objective = [&](const std::vector<double>& v) {
            eval_spec.schedule[t].lambda1 = v[0];
            eval_spec.schedule[t].lambda2 = v[1];
            eval_spec.schedule[t].mu = v[2];
            long errors = 0;
            for (const Frame& f : frames) {
                const auto decoded =
                    extract_info(eval_spec, tpc_decode(eval_spec, f.l_in, ctx.rule).decision);
                for (std::size_t i = 0; i < decoded.size(); ++i)
                    errors += decoded[i] != f.info[i];
            }
            return static_cast<double>(errors) / info_bits;
        };

        DeConfig de = cfg;
        de.seed = hash_combine(cfg.seed, static_cast<std::uint64_t>(t));
        const DeResult de_result = de_minimize(objective, bounds, de);
        result.schedule[t].lambda1 = de_result.best[0];
        result.schedule[t].lambda2 = de_result.best[1];
        result.schedule[t].mu = de_result.best[2];
        result.objective.push_back(de_result.best_value);
        result.generation_best.push_back(de_result.generation_best);
    }
    return result;
}

} // namespace tpcodec
