#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tpcodec/tpc.hpp"

namespace tpcodec {

// Achievable-rate functional of matched (LLR, bit) pairs:
//   1 - mean(log2(1 + exp(-x_j * L_j))),  x_j = +1 for bit 0, -1 for bit 1.
// Perfectly reliable LLRs approach 1, all-zero LLRs give 0, and confidently
// wrong LLRs drive the value negative.
double gmi_of_scaled_llrs(const std::vector<double>& llrs,
                          const std::vector<std::uint8_t>& true_bits); // LengthMismatch

struct DeConfig {
    int population_size = 24;
    double weight_f = 0.7;     // differential weight, in (0, 2)
    double crossover_cr = 0.9; // crossover rate, in (0, 1]
    int generations = 40;
    // Box constraints for the (lambda1, lambda2, mu) search.
    std::array<std::pair<double, double>, 3> lambda_bounds{
        {{0.0, 1.5}, {0.0, 0.3}, {-40.0, 0.0}}};
    double objective_snr_db = 2.5; // Es/N0 driving the decoder-in-the-loop objective
    int frames_per_eval = 20;
    std::uint64_t seed = 0;
};

struct DeResult {
    std::vector<double> best;
    double best_value = 0.0;
    std::vector<double> generation_best; // elitist trace: non-increasing
};

// DE/rand/1/bin box-constrained minimizer. Deterministic given cfg.seed;
// candidates are clamped to the bounds before evaluation.
DeResult de_minimize(const std::function<double(const std::vector<double>&)>& objective,
                     const std::vector<std::pair<double, double>>& bounds,
                     const DeConfig& cfg); // ConfigError on invalid hyperparameters

// Monte Carlo context shared by the schedule optimizers: frames are generated
// from (seed, frame_index) alone, so every candidate parameter set is scored
// on the identical sample.
struct OptimizeContext {
    TpcSpec spec; // earlier half-iterations' parameters are taken from spec.schedule
    DecodeRule rule = DecodeRule::proposed;
    double sigma = 1.0; // channel noise level for extrinsic-scale selection
    int n_frames = 50;
    std::uint64_t seed = 0;
};

struct GmiEstimate {
    double gmi = 0.0;
    double scale = 0.0; // the selected extrinsic multiplier
};

// Best extrinsic scale for one half-iteration (0-based): maximizes the
// achievable-rate functional of l_in + scale * l_ex over the frozen sample;
// ties resolve to the smaller scale.
GmiEstimate optimize_alpha(const OptimizeContext& ctx, int half_iter,
                           const std::vector<double>& grid);

// Greedy forward pass assigning every half-iteration's scale in order.
std::vector<GmiEstimate> optimize_alpha_schedule(const OptimizeContext& ctx,
                                                 const std::vector<double>& grid);

struct LambdaOptResult {
    std::vector<HalfIterParams> schedule; // ctx schedule with tuned lambda1/lambda2/mu
    std::vector<double> objective;        // achieved info-bit error rate per half-iteration
    std::vector<std::vector<double>> generation_best; // one DE trace per half-iteration
};

// Sequential per-half-iteration search: for each half-iteration in order, runs
// de_minimize over (lambda1, lambda2, mu) with earlier half-iterations frozen,
// scoring candidates by the information-bit error rate after the truncated
// schedule at cfg.objective_snr_db over cfg.frames_per_eval matched frames.
LambdaOptResult optimize_lambdas(const OptimizeContext& ctx, const DeConfig& cfg);

} // namespace tpcodec
