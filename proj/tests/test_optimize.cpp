#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tpcodec/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "tpcodec/counter_rng.hpp"
#include "tpcodec/errors.hpp"

using namespace tpcodec;

namespace {

TpcSpec small_spec(int half_iters) {
    TpcSpec s;
    s.row_code = make_code(4, 1, true); // (16,11)
    s.col_code = s.row_code;
    s.p = 4;
    s.schedule.assign(static_cast<std::size_t>(half_iters),
                      HalfIterParams{1.0, 1.0, 1.0, 0.0, 0.5});
    return s;
}

} // namespace

TEST_CASE("the rate functional hits its landmark values") {
    // Perfectly reliable, correct-sign LLRs approach 1 bit per use.
    CHECK(gmi_of_scaled_llrs({1000.0, -1000.0}, {0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
    // Uninformative LLRs are worth nothing.
    CHECK(gmi_of_scaled_llrs({0.0, 0.0, 0.0}, {0, 1, 0}) == doctest::Approx(0.0).epsilon(1e-15));
    // Confidently wrong LLRs are penalized far below zero.
    CHECK(gmi_of_scaled_llrs({-1000.0, 1000.0}, {0, 1}) < -1000.0);
    // Independent arithmetic for a hand value.
    const double expected = 1.0 - std::log2(1.0 + std::exp(-2.0));
    CHECK(gmi_of_scaled_llrs({2.0}, {0}) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(gmi_of_scaled_llrs({-2.0}, {1}) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("the rate functional never exceeds one and ignores pair order") {
    CounterRng rng(9);
    std::vector<double> llrs(500);
    std::vector<std::uint8_t> bits(500);
    for (std::size_t i = 0; i < llrs.size(); ++i) {
        llrs[i] = rng.next_uniform01() * 20.0 - 10.0;
        bits[i] = static_cast<std::uint8_t>(rng.next_bit());
    }
    const double g = gmi_of_scaled_llrs(llrs, bits);
    CHECK(g <= 1.0);

    // Reverse the pairing: same multiset of (llr, bit) pairs.
    std::vector<double> rl(llrs.rbegin(), llrs.rend());
    std::vector<std::uint8_t> rb(bits.rbegin(), bits.rend());
    CHECK(gmi_of_scaled_llrs(rl, rb) == doctest::Approx(g).epsilon(1e-12));
}

TEST_CASE("the rate functional rejects mismatched samples") {
    CHECK_THROWS_AS((void)gmi_of_scaled_llrs({1.0, 2.0}, {0}), LengthMismatch);
    CHECK_THROWS_AS((void)gmi_of_scaled_llrs({}, {}), LengthMismatch);
}

TEST_CASE("differential evolution recovers a planted quadratic optimum") {
    const std::vector<double> opt{0.9, 0.12, -14.3};
    const std::vector<double> w{1.0, 25.0, 0.0014};
    auto objective = [&](const std::vector<double>& v) {
        double s = 1e-3; // plateau offset: the planted minimum value
        for (std::size_t d = 0; d < v.size(); ++d) s += w[d] * (v[d] - opt[d]) * (v[d] - opt[d]);
        return s;
    };
    const std::vector<std::pair<double, double>> bounds{{0.0, 1.5}, {0.0, 0.3}, {-40.0, 0.0}};
    DeConfig cfg;
    cfg.seed = 11;
    const DeResult result = de_minimize(objective, bounds, cfg);
    REQUIRE(result.best.size() == 3);
    for (std::size_t d = 0; d < 3; ++d)
        CHECK(std::abs(result.best[d] - opt[d]) <= 1e-2);
    CHECK(result.best_value == doctest::Approx(objective(result.best)));
}

TEST_CASE("differential evolution is elitist and deterministic") {
    auto objective = [](const std::vector<double>& v) {
        return std::cos(3.0 * v[0]) + v[1] * v[1] + 0.1 * std::sin(20.0 * v[1]);
    };
    const std::vector<std::pair<double, double>> bounds{{-2.0, 2.0}, {-1.0, 1.0}};
    DeConfig cfg;
    cfg.population_size = 12;
    cfg.generations = 25;
    cfg.seed = 77;
    const DeResult a = de_minimize(objective, bounds, cfg);
    REQUIRE(a.generation_best.size() == 25);
    for (std::size_t g = 1; g < a.generation_best.size(); ++g)
        CHECK(a.generation_best[g] <= a.generation_best[g - 1]);

    const DeResult b = de_minimize(objective, bounds, cfg);
    CHECK(a.best == b.best);
    CHECK(a.best_value == b.best_value);
    CHECK(a.generation_best == b.generation_best);
}

TEST_CASE("differential evolution only ever evaluates inside the box") {
    const std::vector<std::pair<double, double>> bounds{{-1.0, 2.0}, {0.5, 0.6}};
    std::vector<std::vector<double>> queried;
    auto objective = [&](const std::vector<double>& v) {
        queried.push_back(v);
        return (v[0] - 10.0) * (v[0] - 10.0) + v[1]; // pushes against the upper edge
    };
    DeConfig cfg;
    cfg.population_size = 8;
    cfg.generations = 10;
    cfg.seed = 5;
    (void)de_minimize(objective, bounds, cfg);
    CHECK(queried.size() == 8u + 8u * 10u);
    for (const auto& v : queried)
        for (std::size_t d = 0; d < bounds.size(); ++d) {
            CHECK(v[d] >= bounds[d].first);
            CHECK(v[d] <= bounds[d].second);
        }
}

TEST_CASE("differential evolution validates its hyperparameters") {
    auto objective = [](const std::vector<double>& v) { return v[0]; };
    const std::vector<std::pair<double, double>> bounds{{0.0, 1.0}};
    for (int pop : {1, 3}) {
        DeConfig cfg;
        cfg.population_size = pop;
        CHECK_THROWS_AS((void)de_minimize(objective, bounds, cfg), ConfigError);
    }
    {
        DeConfig cfg;
        cfg.crossover_cr = 0.0;
        CHECK_THROWS_AS((void)de_minimize(objective, bounds, cfg), ConfigError);
        cfg.crossover_cr = 1.25;
        CHECK_THROWS_AS((void)de_minimize(objective, bounds, cfg), ConfigError);
    }
    {
        DeConfig cfg;
        cfg.weight_f = 0.0;
        CHECK_THROWS_AS((void)de_minimize(objective, bounds, cfg), ConfigError);
        cfg.weight_f = 2.0;
        CHECK_THROWS_AS((void)de_minimize(objective, bounds, cfg), ConfigError);
    }
    {
        DeConfig cfg;
        cfg.generations = 0;
        CHECK_THROWS_AS((void)de_minimize(objective, bounds, cfg), ConfigError);
    }
    CHECK_THROWS_AS((void)de_minimize(objective, {}, DeConfig{}), ConfigError);
    CHECK_THROWS_AS(
        (void)de_minimize(objective, {{0.0, std::numeric_limits<double>::infinity()}},
                          DeConfig{}),
        ConfigError);
}

TEST_CASE("a zero extrinsic makes every scale equivalent, so the smallest wins") {
    OptimizeContext ctx;
    ctx.spec = small_spec(1);
    ctx.spec.schedule[0].lambda1 = 0.0; // the proposed rule now outputs zero everywhere
    ctx.spec.schedule[0].lambda2 = 0.0;
    ctx.sigma = 0.8;
    ctx.n_frames = 4;
    ctx.seed = 31;
    const GmiEstimate pick = optimize_alpha(ctx, 0, {0.3, 0.5, 0.7});
    CHECK(pick.scale == 0.3);
}

TEST_CASE("the selected extrinsic scale beats not using the extrinsic at all") {
    OptimizeContext ctx;
    ctx.spec = small_spec(1);
    ctx.sigma = 0.7;
    ctx.n_frames = 30;
    ctx.seed = 42;
    const GmiEstimate off = optimize_alpha(ctx, 0, {0.0});
    std::vector<double> grid;
    for (double a = 0.1; a < 1.501; a += 0.1) grid.push_back(a);
    const GmiEstimate pick = optimize_alpha(ctx, 0, grid);
    CHECK(pick.gmi > off.gmi);
    CHECK(pick.scale > 0.0);
    CHECK(pick.scale <= 1.5);
}

TEST_CASE("greedy scale assignment covers the whole schedule deterministically") {
    OptimizeContext ctx;
    ctx.spec = small_spec(4);
    ctx.sigma = 0.75;
    ctx.n_frames = 12;
    ctx.seed = 3;
    const std::vector<double> grid{0.2, 0.4, 0.6, 0.8, 1.0};
    const auto a = optimize_alpha_schedule(ctx, grid);
    REQUIRE(a.size() == 4);
    for (const auto& est : a)
        CHECK(std::find(grid.begin(), grid.end(), est.scale) != grid.end());
    // Iteration should not destroy achievable rate.
    CHECK(a.back().gmi >= a.front().gmi - 0.02);

    const auto b = optimize_alpha_schedule(ctx, grid);
    for (std::size_t t = 0; t < a.size(); ++t) {
        CHECK(a[t].scale == b[t].scale);
        CHECK(a[t].gmi == b[t].gmi);
    }
}

TEST_CASE("the per-half-iteration lambda search respects its contract on a small code") {
    OptimizeContext ctx;
    ctx.spec = small_spec(1);
    ctx.seed = 19;
    DeConfig cfg;
    cfg.population_size = 6;
    cfg.generations = 4;
    cfg.frames_per_eval = 4;
    cfg.objective_snr_db = 2.0;
    cfg.seed = 19;

    const LambdaOptResult a = optimize_lambdas(ctx, cfg);
    REQUIRE(a.schedule.size() == 1);
    REQUIRE(a.objective.size() == 1);
    REQUIRE(a.generation_best.size() == 1);
    CHECK(a.schedule[0].lambda1 >= cfg.lambda_bounds[0].first);
    CHECK(a.schedule[0].lambda1 <= cfg.lambda_bounds[0].second);
    CHECK(a.schedule[0].lambda2 >= cfg.lambda_bounds[1].first);
    CHECK(a.schedule[0].lambda2 <= cfg.lambda_bounds[1].second);
    CHECK(a.schedule[0].mu >= cfg.lambda_bounds[2].first);
    CHECK(a.schedule[0].mu <= cfg.lambda_bounds[2].second);
    CHECK(a.schedule[0].alpha == ctx.spec.schedule[0].alpha); // untouched
    for (std::size_t g = 1; g < a.generation_best[0].size(); ++g)
        CHECK(a.generation_best[0][g] <= a.generation_best[0][g - 1]);

    const LambdaOptResult b = optimize_lambdas(ctx, cfg);
    CHECK(a.schedule[0].lambda1 == b.schedule[0].lambda1);
    CHECK(a.schedule[0].lambda2 == b.schedule[0].lambda2);
    CHECK(a.schedule[0].mu == b.schedule[0].mu);
    CHECK(a.objective == b.objective);
}
