// Command-line front end for the turbo product code library: file codec,
// Monte Carlo BER sweeps, offline parameter optimization, and the
// list-rule-vs-exact-MAP correlation table.
//
// Exit codes: 0 success (artifacts fully written), 1 generic error,
// 2 wrong-length input, 3 component code too large for exact enumeration,
// 4 --strict guardrail tripped (artifacts are still written).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tpcodec/channel.hpp"
#include "tpcodec/errors.hpp"
#include "tpcodec/optimize.hpp"
#include "tpcodec/oracle.hpp"
#include "tpcodec/schedule.hpp"
#include "tpcodec/sim.hpp"
#include "tpcodec/tpc.hpp"

namespace {

using namespace tpcodec;

constexpr int kExitLength = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitGuardrail = 4;

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Component code names: ebch-N-K (extended BCH), bch-N-K, uncoded-N.
CodeSpec parse_code_name(const std::string& name) {
    const auto bad = [&](const std::string& why) {
        return ConfigError("--code " + name + ": " + why +
                           " (expected ebch-N-K, bch-N-K, or uncoded-N)");
    };
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto dash = name.find('-', start);
        parts.push_back(name.substr(start, dash - start));
        if (dash == std::string::npos) break;
        start = dash + 1;
    }
    const auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty() || v < 1)
            throw bad("'" + s + "' is not a positive integer");
        return v;
    };
    if (parts.size() == 2 && parts[0] == "uncoded") return make_identity_code(to_int(parts[1]));
    if (parts.size() != 3 || (parts[0] != "ebch" && parts[0] != "bch"))
        throw bad("unrecognized code family");
    const bool extended = parts[0] == "ebch";
    const int n = to_int(parts[1]);
    const int k = to_int(parts[2]);
    const int n_base = extended ? n - 1 : n;
    int m = 1;
    while (m < 20 && (1 << m) - 1 < n_base) ++m;
    if ((1 << m) - 1 != n_base) throw bad("length does not match any binary BCH field");
    const int parity = n_base - k;
    if (parity <= 0 || parity % m != 0) throw bad("no designed distance yields this dimension");
    const CodeSpec spec = make_code(m, parity / m, extended);
    if (spec.n != n || spec.k != k) throw bad("no designed distance yields this dimension");
    return spec;
}

TpcSpec square_product(const std::string& code_name, int p) {
    TpcSpec spec;
    spec.row_code = parse_code_name(code_name);
    spec.col_code = spec.row_code;
    spec.p = p;
    return spec;
}

// ---- file helpers -----------------------------------------------------------

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    out.flush();
    if (!out) throw IoError("failed writing output file: " + path);
}

void require_size(const std::string& path, std::size_t actual, std::size_t expected,
                  const std::string& what) {
    if (actual != expected)
        throw LengthMismatch(path + ": " + std::to_string(actual) + " bytes, expected " +
                             std::to_string(expected) + " for " + what);
}

// Bit i of the stream lives in byte i/8 at bit position i%8 (LSB first).
std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& bytes,
                                      std::size_t n_bits) {
    std::vector<std::uint8_t> bits(n_bits);
    for (std::size_t i = 0; i < n_bits; ++i) bits[i] = (bytes[i >> 3] >> (i & 7)) & 1;
    return bits;
}

std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
    return bytes;
}

// ---- schedule resolution ----------------------------------------------------

// Default schedules are the shipped ones: the tuned table for the proposed
// rule (also used by the oracle), the classic weight sequence for Pyndiah's.
std::vector<HalfIterParams> resolve_schedule(const std::string& params_path, DecodeRule rule,
                                             int iters, bool identity) {
    if (identity) {
        if (!params_path.empty())
            throw ConfigError("an uncoded run takes no parameter schedule");
        return {};
    }
    std::vector<HalfIterParams> schedule =
        !params_path.empty()              ? load_schedule(params_path)
        : rule == DecodeRule::pyndiah     ? classic_pyndiah_schedule()
                                          : default_proposed_schedule();
    const std::size_t want = 2 * static_cast<std::size_t>(iters);
    if (schedule.size() < want)
        throw ConfigError("schedule has " + std::to_string(schedule.size()) +
                          " half-iterations but --iters " + std::to_string(iters) +
                          " needs " + std::to_string(want));
    schedule.resize(want);
    return schedule;
}

void print_code_summary(const TpcSpec& spec) {
    const CodeSpec& c = spec.row_code;
    std::printf("component code: n=%d k=%d t=%d%s%s\n", c.n, c.k, c.t,
                c.extended ? " (extended)" : "", c.identity ? " (uncoded)" : "");
    std::printf("product code: %dx%d = %d bits, %d info bits, rate %.6f\n", spec.n_rows(),
                spec.n_cols(), spec.n_rows() * spec.n_cols(), spec.k_rows() * spec.k_cols(),
                spec.rate());
}

// ---- codec ------------------------------------------------------------------

struct CodecArgs {
    std::string code = "ebch-256-239";
    std::string in;
    std::string out;
    std::string params;
    std::string rule = "proposed";
    int p = 5;
    int iters = 4;
    bool from_bits = false;
};

int cmd_codec_encode(const CodecArgs& a) {
    const TpcSpec spec = square_product(a.code, a.p);
    const int info_bits = spec.k_rows() * spec.k_cols();
    const auto bytes = read_bytes(a.in);
    require_size(a.in, bytes.size(), (static_cast<std::size_t>(info_bits) + 7) / 8,
                 std::to_string(info_bits) + " packed information bits");
    const BitMatrix cw = tpc_encode(spec, unpack_bits(bytes, static_cast<std::size_t>(info_bits)));
    const auto packed = pack_bits(cw.data());
    write_bytes(a.out, packed.data(), packed.size());
    print_code_summary(spec);
    std::printf("encoded %d info bits -> %d coded bits: %s\n", info_bits,
                spec.n_rows() * spec.n_cols(), a.out.c_str());
    return 0;
}

int cmd_codec_decode(const CodecArgs& a) {
    TpcSpec spec = square_product(a.code, a.p);
    const DecodeRule rule = parse_rule(a.rule);
    spec.schedule = resolve_schedule(a.params, rule, a.iters, spec.row_code.identity);

    const std::size_t n_bits = static_cast<std::size_t>(spec.n_rows()) * spec.n_cols();
    LlrMatrix l_in(spec.n_rows(), spec.n_cols(), 0.0);
    const auto bytes = read_bytes(a.in);
    if (a.from_bits) {
        require_size(a.in, bytes.size(), (n_bits + 7) / 8,
                     std::to_string(n_bits) + " packed coded bits");
        const auto bits = unpack_bits(bytes, n_bits);
        for (std::size_t i = 0; i < n_bits; ++i) l_in.data()[i] = bits[i] ? -4.0 : 4.0;
    } else {
        require_size(a.in, bytes.size(), 4 * n_bits,
                     std::to_string(n_bits) + " little-endian float32 LLRs");
        for (std::size_t i = 0; i < n_bits; ++i) {
            const std::uint32_t u = static_cast<std::uint32_t>(bytes[4 * i]) |
                                    static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8 |
                                    static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16 |
                                    static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24;
            float f;
            std::memcpy(&f, &u, sizeof f);
            l_in.data()[i] = f;
        }
    }
    const TpcDecodeResult result = tpc_decode(spec, l_in, rule);
    const auto info = extract_info(spec, result.decision);
    const auto packed = pack_bits(info);
    write_bytes(a.out, packed.data(), packed.size());
    print_code_summary(spec);
    std::printf("decoded %zu channel values -> %zu info bits (%s, %zu half-iterations): %s\n",
                n_bits, info.size(), rule_name(rule), spec.schedule.size(), a.out.c_str());
    return 0;
}

// ---- simulate ---------------------------------------------------------------

struct SimArgs {
    std::string code = "ebch-256-239";
    int p = 5;
    int iters = 4;
    std::string rule = "proposed";
    bool paired = false;
    std::vector<double> snr;
    bool eb = false;
    std::string params;
    std::string baseline_params;
    bool raw_beta = false;
    std::string out;
    long max_frames = 10'000'000;
    long min_bit_errors = 500;
    long min_frame_errors = 50;
    long batch_frames = 64;
    int threads = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool dry_run = false;
};

std::string sidecar_path_for(const std::string& csv_path) {
    const auto slash = csv_path.find_last_of("/\\");
    const auto dot = csv_path.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        return csv_path.substr(0, dot) + ".json";
    return csv_path + ".json";
}

SweepConfig make_sweep_config(const SimArgs& a) {
    SweepConfig cfg;
    cfg.row_code = parse_code_name(a.code);
    cfg.col_code = cfg.row_code;
    cfg.p = a.p;

    std::vector<std::pair<DecodeRule, std::string>> wanted;
    if (a.paired || a.rule == "paired")
        wanted = {{DecodeRule::proposed, a.params}, {DecodeRule::pyndiah, a.baseline_params}};
    else
        wanted = {{parse_rule(a.rule), a.params}};
    for (const auto& [rule, path] : wanted) {
        RulePlan plan;
        plan.rule = rule;
        plan.params_path = path;
        plan.schedule = resolve_schedule(path, rule, a.iters, cfg.row_code.identity);
        plan.beta_is_channel_scale = !a.raw_beta;
        cfg.rules.push_back(std::move(plan));
    }

    cfg.snr_points_db = a.snr;
    cfg.snr_is_eb_n0 = a.eb;
    cfg.max_frames = a.max_frames;
    cfg.min_bit_errors = a.min_bit_errors;
    cfg.min_frame_errors = a.min_frame_errors;
    cfg.batch_frames = a.batch_frames;
    cfg.threads = a.threads;
    cfg.seed = a.seed;
    return cfg;
}

nlohmann::json resolved_sim_json(const SimArgs& a, const SweepConfig& cfg,
                                 const std::string& sidecar) {
    nlohmann::json doc;
    doc["command"] = "simulate";
    doc["code"] = a.code;
    doc["p"] = cfg.p;
    doc["iters"] = a.iters;
    doc["snr_points_db"] = cfg.snr_points_db;
    doc["snr_scale"] = cfg.snr_is_eb_n0 ? "eb_n0" : "es_n0";
    doc["stopping"] = {{"max_frames", cfg.max_frames},
                       {"min_bit_errors", cfg.min_bit_errors},
                       {"min_frame_errors", cfg.min_frame_errors}};
    doc["batch_frames"] = cfg.batch_frames;
    doc["threads"] = cfg.threads;
    doc["seed"] = cfg.seed;
    doc["out_csv"] = a.out;
    doc["out_sidecar"] = sidecar;
    doc["rules"] = nlohmann::json::array();
    for (const auto& plan : cfg.rules) {
        nlohmann::json entry;
        entry["rule"] = rule_name(plan.rule);
        entry["params_file"] = plan.params_path.empty() ? "built-in" : plan.params_path;
        if (plan.rule == DecodeRule::pyndiah)
            entry["beta_scaled_to_llr"] = plan.beta_is_channel_scale;
        entry["schedule"] = nlohmann::json::parse(schedule_to_json(plan.schedule));
        doc["rules"].push_back(std::move(entry));
    }
    return doc;
}

int cmd_simulate(SimArgs& a) {
    if (!a.seed_given) a.seed = fresh_seed();
    const SweepConfig cfg = make_sweep_config(a);
    const std::string sidecar = sidecar_path_for(a.out);
    if (a.dry_run) {
        std::cout << resolved_sim_json(a, cfg, sidecar).dump(2) << std::endl;
        return 0;
    }
    const auto fresh = run_sweep(cfg, a.out, sidecar);
    std::printf("%zu new point(s) -> %s (sidecar %s), seed %llu\n", fresh.size(), a.out.c_str(),
                sidecar.c_str(), static_cast<unsigned long long>(a.seed));
    for (const auto& pt : fresh)
        std::printf("  %-9s snr=%g dB  frames=%ld  ber=%.4e  [%.4e, %.4e]  fer=%.4e\n",
                    pt.rule.c_str(), pt.snr_db, pt.frames, pt.ber, pt.ci95_low, pt.ci95_high,
                    pt.fer);
    return 0;
}

// ---- optimize ---------------------------------------------------------------

struct OptimizeArgs {
    std::string code = "ebch-256-239";
    int p = 5;
    int iters = 4;
    std::string rule = "proposed";
    std::string grid = "0.5:1.0:0.02"; // alpha only
    double snr_db = 2.5;
    int frames = 50;           // alpha only
    int frames_per_eval = 20;  // lambdas only
    int population = 24;       // lambdas only
    int generations = 40;      // lambdas only
    double weight_f = 0.7;     // lambdas only
    double crossover_cr = 0.9; // lambdas only
    std::string in_params;
    std::string out;
    std::string log;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool strict = false;
};

std::vector<double> parse_grid(const std::string& text) {
    const auto bad = [&] {
        return ConfigError("--grid " + text + ": expected start:stop:step with step > 0");
    };
    double v[3];
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const auto colon = text.find(':', start);
        if ((i < 2) != (colon != std::string::npos)) throw bad();
        const std::string part = text.substr(start, colon - start);
        std::size_t used = 0;
        try {
            v[i] = std::stod(part, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != part.size() || part.empty()) throw bad();
        start = colon + 1;
    }
    if (!(v[2] > 0.0) || v[1] < v[0]) throw bad();
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double x = v[0] + i * v[2];
        if (x > v[1] + 1e-9 * v[2]) break;
        grid.push_back(x);
    }
    return grid;
}

OptimizeContext make_optimize_context(const OptimizeArgs& a) {
    OptimizeContext ctx;
    ctx.spec = square_product(a.code, a.p);
    if (ctx.spec.row_code.identity)
        throw ConfigError("there is nothing to optimize for an uncoded run");
    ctx.rule = parse_rule(a.rule);
    ctx.spec.schedule = resolve_schedule(a.in_params, ctx.rule, a.iters, false);
    ctx.sigma = sigma_from_es_n0_db(a.snr_db);
    ctx.n_frames = a.frames;
    ctx.seed = a.seed;
    return ctx;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing output file: " + path);
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

int cmd_optimize_alpha(OptimizeArgs& a) {
    if (!a.seed_given) a.seed = fresh_seed();
    const OptimizeContext ctx = make_optimize_context(a);
    const std::vector<double> grid = parse_grid(a.grid);
    const auto picks = optimize_alpha_schedule(ctx, grid);

    auto schedule = ctx.spec.schedule;
    for (std::size_t t = 0; t < schedule.size(); ++t) schedule[t].alpha = picks[t].scale;
    save_schedule(a.out, schedule);

    std::string log_text = "half_iter,alpha,gmi\n";
    for (std::size_t t = 0; t < picks.size(); ++t)
        log_text += std::to_string(t + 1) + ',' + fmt_g(picks[t].scale) + ',' +
                    fmt_g(picks[t].gmi) + '\n';
    if (!a.log.empty()) write_text_file(a.log, log_text);

    for (std::size_t t = 0; t < picks.size(); ++t)
        std::printf("half-iteration %zu: alpha=%g  (achievable rate %.6f)\n", t + 1,
                    picks[t].scale, picks[t].gmi);
    std::printf("schedule -> %s, seed %llu\n", a.out.c_str(),
                static_cast<unsigned long long>(a.seed));

    if (a.strict) {
        for (std::size_t t = 0; t < picks.size(); ++t)
            if (picks[t].scale == grid.front() || picks[t].scale == grid.back()) {
                std::fprintf(stderr,
                             "guardrail: alpha at half-iteration %zu sits on the grid edge "
                             "(%g); widen --grid\n",
                             t + 1, picks[t].scale);
                return kExitGuardrail;
            }
    }
    return 0;
}

int cmd_optimize_lambdas(OptimizeArgs& a) {
    if (!a.seed_given) a.seed = fresh_seed();
    const OptimizeContext ctx = make_optimize_context(a);
    DeConfig de;
    de.population_size = a.population;
    de.weight_f = a.weight_f;
    de.crossover_cr = a.crossover_cr;
    de.generations = a.generations;
    de.objective_snr_db = a.snr_db;
    de.frames_per_eval = a.frames_per_eval;
    de.seed = a.seed;

    const LambdaOptResult result = optimize_lambdas(ctx, de);
    save_schedule(a.out, result.schedule);

    std::string log_text = "half_iter,generation,best_objective\n";
    for (std::size_t t = 0; t < result.generation_best.size(); ++t)
        for (std::size_t g = 0; g < result.generation_best[t].size(); ++g)
            log_text += std::to_string(t + 1) + ',' + std::to_string(g + 1) + ',' +
                        fmt_g(result.generation_best[t][g]) + '\n';
    if (!a.log.empty()) write_text_file(a.log, log_text);

    for (std::size_t t = 0; t < result.schedule.size(); ++t) {
        const auto& h = result.schedule[t];
        std::printf(
            "half-iteration %zu: lambda1=%g lambda2=%g mu=%g  (objective BER %.4e)\n",
            t + 1, h.lambda1, h.lambda2, h.mu, result.objective[t]);
    }
    std::printf("schedule -> %s, seed %llu\n", a.out.c_str(),
                static_cast<unsigned long long>(a.seed));

    if (a.strict) {
        const auto& b = de.lambda_bounds;
        for (std::size_t t = 0; t < result.schedule.size(); ++t) {
            const auto& h = result.schedule[t];
            const double coord[3] = {h.lambda1, h.lambda2, h.mu};
            for (int i = 0; i < 3; ++i) {
                const double span = b[static_cast<std::size_t>(i)].second -
                                    b[static_cast<std::size_t>(i)].first;
                const double edge = 1e-6 * span;
                if (coord[i] <= b[static_cast<std::size_t>(i)].first + edge ||
                    coord[i] >= b[static_cast<std::size_t>(i)].second - edge) {
                    std::fprintf(stderr,
                                 "guardrail: coordinate %d at half-iteration %zu sits on its "
                                 "bounds box (%g); widen the box or rerun\n",
                                 i, t + 1, coord[i]);
                    return kExitGuardrail;
                }
            }
        }
    }
    return 0;
}

// ---- correlate ---------------------------------------------------------------

struct CorrelateArgs {
    std::string code = "ebch-16-11";
    int trials = 2000;
    double sigma = 0.8;
    int p = 4;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out;
};

int cmd_correlate(CorrelateArgs& a) {
    if (!a.seed_given) a.seed = fresh_seed();
    const CodeSpec code = parse_code_name(a.code);
    const auto rows = correlate_delta_vs_exact(code, a.trials, a.sigma, a.p, a.seed);
    std::ofstream out(a.out, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + a.out);
    write_correlation_csv(out, rows);
    out.flush();
    if (!out) throw IoError("failed writing output file: " + a.out);
    std::printf("wrote %zu rows (%d trials x n=%d) -> %s, seed %llu\n", rows.size(), a.trials,
                code.n, a.out.c_str(), static_cast<unsigned long long>(a.seed));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"turbo product code toolkit: encode/decode, BER sweeps, parameter "
                 "optimization, and soft-output diagnostics"};
    app.require_subcommand(1);

    // codec ---------------------------------------------------------------
    CodecArgs codec_args;
    auto* codec = app.add_subcommand("codec", "encode or decode product code frames in files");
    codec->require_subcommand(1);
    auto* enc = codec->add_subcommand("encode", "packed info bits -> packed codeword bits");
    auto* dec = codec->add_subcommand(
        "decode", "float32 channel LLRs (row-major) -> packed info bits");
    for (CLI::App* c : {enc, dec}) {
        c->add_option("--code", codec_args.code, "component code (ebch-N-K, bch-N-K, uncoded-N)")
            ->capture_default_str();
        c->add_option("--in", codec_args.in, "input file")->required();
        c->add_option("--out", codec_args.out, "output file")->required();
    }
    dec->add_option("--rule", codec_args.rule, "decoder rule: proposed, pyndiah, or oracle")
        ->capture_default_str();
    dec->add_option("--params", codec_args.params,
                    "parameter schedule JSON (default: built-in for the rule)");
    dec->add_option("--p", codec_args.p, "Chase parameter (least-reliable positions)")
        ->capture_default_str()
        ->check(CLI::Range(0, 16));
    dec->add_option("--iters", codec_args.iters, "full decoding iterations")
        ->capture_default_str()
        ->check(CLI::Range(1, 64));
    dec->add_flag("--from-bits", codec_args.from_bits,
                  "input is packed hard bits; mapped to +-4.0 LLRs");

    // simulate ------------------------------------------------------------
    SimArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo BER/FER sweep over SNR points");
    sim->add_option("--code", sim_args.code, "component code (square product)")
        ->capture_default_str();
    sim->add_option("--p", sim_args.p, "Chase parameter")->capture_default_str()
        ->check(CLI::Range(0, 16));
    sim->add_option("--iters", sim_args.iters, "full decoding iterations")
        ->capture_default_str()
        ->check(CLI::Range(1, 64));
    sim->add_option("--rule", sim_args.rule, "proposed, pyndiah, oracle, or paired")
        ->capture_default_str();
    sim->add_flag("--paired", sim_args.paired,
                  "run proposed and pyndiah on identical noise per trial");
    sim->add_option("--snr", sim_args.snr, "SNR points in dB (comma separated)")
        ->required()
        ->delimiter(',');
    sim->add_flag("--eb", sim_args.eb, "SNR values are Eb/N0 (default Es/N0)");
    sim->add_option("--params", sim_args.params, "schedule JSON for the primary rule");
    sim->add_option("--baseline-params", sim_args.baseline_params,
                    "schedule JSON for the paired baseline");
    sim->add_flag("--raw-beta", sim_args.raw_beta,
                  "apply beta_pyndiah values verbatim instead of converting the "
                  "classic channel-scale constants to the LLR domain (x 2/sigma^2)");
    sim->add_option("--out", sim_args.out, "results CSV path (sidecar JSON written next to it)")
        ->required();
    sim->add_option("--max-frames", sim_args.max_frames, "frame cap per point")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sim->add_option("--min-bit-errors", sim_args.min_bit_errors, "stop threshold")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sim->add_option("--min-frame-errors", sim_args.min_frame_errors, "stop threshold")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sim->add_option("--batch-frames", sim_args.batch_frames,
                    "stopping is checked at these frame boundaries")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sim->add_option("--threads", sim_args.threads, "worker threads (never changes results)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    auto* sim_seed = sim->add_option("--seed", sim_args.seed, "master seed (default: random)");
    sim->add_flag("--dry-run", sim_args.dry_run, "print the resolved config and exit");

    // optimize ------------------------------------------------------------
    OptimizeArgs opt_args;
    auto* opt = app.add_subcommand("optimize", "fit schedule parameters offline");
    opt->require_subcommand(1);
    auto* opt_alpha = opt->add_subcommand(
        "alpha", "grid-select extrinsic scales by achievable rate");
    auto* opt_lambda = opt->add_subcommand(
        "lambdas", "differential evolution over (lambda1, lambda2, mu)");
    for (CLI::App* c : {opt_alpha, opt_lambda}) {
        c->add_option("--code", opt_args.code, "component code (square product)")
            ->capture_default_str();
        c->add_option("--p", opt_args.p, "Chase parameter")->capture_default_str()
            ->check(CLI::Range(0, 16));
        c->add_option("--iters", opt_args.iters, "full decoding iterations")
            ->capture_default_str()
            ->check(CLI::Range(1, 64));
        c->add_option("--rule", opt_args.rule, "decoder rule under optimization")
            ->capture_default_str();
        c->add_option("--in-params", opt_args.in_params,
                      "starting schedule JSON (default: built-in)");
        c->add_option("--out", opt_args.out, "schedule JSON to write")->required();
        c->add_option("--log", opt_args.log, "optimization log CSV");
        c->add_flag("--strict", opt_args.strict,
                    "exit 4 when a result sits on a search boundary");
    }
    opt_alpha->add_option("--grid", opt_args.grid, "alpha grid start:stop:step")
        ->capture_default_str();
    opt_alpha->add_option("--snr-db", opt_args.snr_db, "Es/N0 of the tuning sample")
        ->capture_default_str();
    opt_alpha->add_option("--frames", opt_args.frames, "Monte Carlo frames in the sample")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    opt_lambda->add_option("--snr-db", opt_args.snr_db, "Es/N0 of the BER objective")
        ->capture_default_str();
    opt_lambda->add_option("--frames-per-eval", opt_args.frames_per_eval,
                           "frames per candidate evaluation")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    opt_lambda->add_option("--pop", opt_args.population, "DE population size (>= 4)")
        ->capture_default_str();
    opt_lambda->add_option("--gens", opt_args.generations, "DE generations")
        ->capture_default_str();
    opt_lambda->add_option("--f", opt_args.weight_f, "DE differential weight")
        ->capture_default_str();
    opt_lambda->add_option("--cr", opt_args.crossover_cr, "DE crossover rate")
        ->capture_default_str();
    auto* opt_seed_a = opt_alpha->add_option("--seed", opt_args.seed, "seed (default: random)");
    auto* opt_seed_l = opt_lambda->add_option("--seed", opt_args.seed, "seed (default: random)");

    // correlate -----------------------------------------------------------
    CorrelateArgs corr_args;
    auto* corr = app.add_subcommand(
        "correlate", "table of list-rule reliability gaps vs exact-MAP extrinsics");
    corr->add_option("--code", corr_args.code, "small component code (exact enumeration)")
        ->capture_default_str();
    corr->add_option("--trials", corr_args.trials, "all-zero codeword transmissions")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    corr->add_option("--sigma", corr_args.sigma, "AWGN noise level")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    corr->add_option("--p", corr_args.p, "Chase parameter")->capture_default_str()
        ->check(CLI::Range(0, 16));
    corr->add_option("--out", corr_args.out, "CSV path")->required();
    auto* corr_seed = corr->add_option("--seed", corr_args.seed, "seed (default: random)");

    CLI11_PARSE(app, argc, argv);
    sim_args.seed_given = sim_seed->count() > 0;
    opt_args.seed_given = opt_seed_a->count() > 0 || opt_seed_l->count() > 0;
    corr_args.seed_given = corr_seed->count() > 0;

    try {
        if (enc->parsed()) return cmd_codec_encode(codec_args);
        if (dec->parsed()) return cmd_codec_decode(codec_args);
        if (sim->parsed()) return cmd_simulate(sim_args);
        if (opt_alpha->parsed()) return cmd_optimize_alpha(opt_args);
        if (opt_lambda->parsed()) return cmd_optimize_lambdas(opt_args);
        if (corr->parsed()) return cmd_correlate(corr_args);
    } catch (const LengthMismatch& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitLength;
    } catch (const CodeTooLarge& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitTooLarge;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1; // unreachable with require_subcommand(1)
}
