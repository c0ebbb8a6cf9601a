// Acceptance battery: nine numbered end-to-end checks, one PASS/FAIL line
// each, exit 0 only if every selected check passes. Run with no arguments for
// the full battery, or pass criterion numbers to run a subset:
//
//   ./acceptance           # all nine
//   ./acceptance 1 4 9     # just those
//
// Check 5 is the expensive one (a paired BER measurement on the (256,239)^2
// product code); everything else finishes in seconds.

#include "tpcodec/bch.hpp"
#include "tpcodec/channel.hpp"
#include "tpcodec/chase.hpp"
#include "tpcodec/counter_rng.hpp"
#include "tpcodec/errors.hpp"
#include "tpcodec/optimize.hpp"
#include "tpcodec/oracle.hpp"
#include "tpcodec/schedule.hpp"
#include "tpcodec/sim.hpp"
#include "tpcodec/siso.hpp"
#include "tpcodec/tpc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace tpcodec;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome pass(std::string what) { return {true, std::move(what)}; }

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void progress(const std::string& line) {
    std::printf("  %s\n", line.c_str());
    std::fflush(stdout);
}

int worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

HardWord random_info_word(const CodeSpec& spec, CounterRng& rng) {
    HardWord info(spec.k);
    for (int i = 0; i < spec.k; ++i) info.set(i, rng.next_bit());
    return info;
}

LlrVector awgn_llrs(const HardWord& cw, double sigma, std::uint64_t noise_seed) {
    LlrVector l(cw.size());
    const double scale = 2.0 / (sigma * sigma);
    for (int i = 0; i < cw.size(); ++i) {
        const double x = phi(cw.get(i));
        l[i] = scale * (x + sigma * gaussian_at(noise_seed, static_cast<std::uint64_t>(i)));
    }
    return l;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

// ---------------------------------------------------------------------------
// 1. Bounded-distance decoding corrects every pattern within its radius.
// ---------------------------------------------------------------------------

Outcome criterion_bdd() {
    // (15,11), t = 1: every codeword x every error of weight <= 1.
    const auto small = make_code(4, 1, false);
    long small_checked = 0;
    for (std::uint32_t msg = 0; msg < (1u << small.k); ++msg) {
        HardWord info(small.k);
        for (int i = 0; i < small.k; ++i) info.set(i, (msg >> i) & 1u);
        const HardWord cw = encode(small, info);
        for (int flip = -1; flip < small.n; ++flip) {
            HardWord noisy = cw;
            if (flip >= 0) noisy.flip(flip);
            const auto dec = bdd_decode(small, noisy);
            if (!dec || !(*dec == cw))
                return fail(fmt("(15,11): msg %u with flip at %d decoded wrong", msg, flip));
            ++small_checked;
        }
    }

    // (255,239), t = 2: random codewords x random errors of weight <= 2.
    const auto big = make_code(8, 2, false);
    const long trials = 10000;
    for (long t = 0; t < trials; ++t) {
        CounterRng rng(hash_combine(0xacce0001ULL, static_cast<std::uint64_t>(t)));
        const HardWord cw = encode(big, random_info_word(big, rng));
        HardWord noisy = cw;
        const int weight = static_cast<int>(rng.next_below(3));
        int first = -1;
        for (int e = 0; e < weight; ++e) {
            int pos = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(big.n)));
            while (pos == first) pos = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(big.n)));
            if (e == 0) first = pos;
            noisy.flip(pos);
        }
        const auto dec = bdd_decode(big, noisy);
        if (!dec || !(*dec == cw))
            return fail(fmt("(255,239): trial %ld (weight %d) decoded wrong", t, weight));
    }
    return pass(fmt("(15,11) exhaustive %ld patterns, (255,239) %ld random weight<=2 trials, all corrected",
                    small_checked, trials));
}

// ---------------------------------------------------------------------------
// 2. The Chase list covers every codeword that differs from the hard decision
//    only inside the p least-reliable positions plus at most t' others.
// ---------------------------------------------------------------------------

Outcome criterion_chase_coverage() {
    const auto spec = make_code(5, 1, true); // (32,26), t' = 1
    const int p = 4;
    const double sigma = 0.65;
    const long wanted = 10000;
    long qualified = 0, in_list = 0, nontrivial = 0, attempts = 0;
    for (attempts = 0; qualified < wanted && attempts < 400000; ++attempts) {
        CounterRng rng(hash_combine(0xacce0002ULL, static_cast<std::uint64_t>(attempts), 1));
        const HardWord cw = encode(spec, random_info_word(spec, rng));
        const auto l = awgn_llrs(cw, sigma, hash_combine(0xacce0002ULL, static_cast<std::uint64_t>(attempts), 2));
        const HardWord hd = hard_decision(l);
        const auto order = rank_reliability(l, p);

        int outside = 0, errors = 0;
        for (int i = 0; i < spec.n; ++i) {
            if (hd.get(i) == cw.get(i)) continue;
            ++errors;
            bool in_chase_set = false;
            for (int r = 0; r < p; ++r) in_chase_set |= (order.indices[r] == i);
            if (!in_chase_set) ++outside;
        }
        if (outside > spec.t_prime) continue; // outside the coverage guarantee

        ++qualified;
        if (errors > 0) ++nontrivial;
        const auto list = build_list(spec, l, order);
        bool hit = false;
        for (int j = 0; j < list.size() && !hit; ++j) hit = (list.entries[j] == cw);
        if (hit) ++in_list;
        else return fail(fmt("trial %ld qualified (%d errors, %d outside I_%d) but codeword missing from list",
                             attempts, errors, outside, p));
    }
    if (qualified < wanted)
        return fail(fmt("only %ld qualifying trials in %ld attempts", qualified, attempts));
    return pass(fmt("%ld/%ld qualifying trials covered (%ld with channel errors, %ld attempts)",
                    in_list, qualified, nontrivial, attempts));
}

// ---------------------------------------------------------------------------
// 3. With unit slopes and zero offset the smooth rule reduces exactly to the
//    max-form difference wherever both hypothesis gaps are present and >= 0.
// ---------------------------------------------------------------------------

Outcome criterion_reduction_identity() {
    const auto spec = make_code(5, 1, true);
    const HalfIterParams unit{1.0, 1.0, 1.0, 0.0, 0.0};
    const long wanted = 10000;
    long checked = 0;
    for (long trial = 0; checked < wanted && trial < 40000; ++trial) {
        CounterRng rng(hash_combine(0xacce0003ULL, static_cast<std::uint64_t>(trial), 1));
        const HardWord cw = encode(spec, random_info_word(spec, rng));
        const auto l = awgn_llrs(cw, 1.0, hash_combine(0xacce0003ULL, static_cast<std::uint64_t>(trial), 2));
        const auto order = rank_reliability(l, 4);
        const auto list = build_list(spec, l, order);
        if (list.empty()) continue;
        const auto bound = build_out_list_bound(l, order, spec.t_prime);
        const auto ex = extrinsic_proposed(l, list, bound, unit);
        for (int i = 0; i < spec.n; ++i) {
            const auto h = hypothesis_deltas(list, bound, i);
            if (!h.delta0 || !h.delta1 || *h.delta0 < 0.0 || *h.delta1 < 0.0) continue;
            const double max_form = std::max(*h.delta0, 0.0) - std::max(*h.delta1, 0.0);
            if (ex[i] != max_form) // bitwise-exact, no tolerance
                return fail(fmt("trial %ld pos %d: smooth %.17g != max-form %.17g", trial, i, ex[i], max_form));
            ++checked;
        }
    }
    if (checked < wanted) return fail(fmt("only %ld comparable positions found", checked));
    return pass(fmt("%ld positions matched the max-form output to 0 ulp", checked));
}

// ---------------------------------------------------------------------------
// 4. On a (16,11) component at ~1e-2 decoded BER, the smooth extrinsic tracks
//    the exact-MAP extrinsic more closely than the baseline's does.
// ---------------------------------------------------------------------------

Outcome criterion_oracle_closeness() {
    const auto spec = make_code(4, 1, true); // (16,11)
    const auto book = build_codebook(spec);
    const double sigma = 0.61;
    const HalfIterParams prop{1.0, 0.47, 0.025, -9.22, 0.0};
    const HalfIterParams pynd{1.0, 1.0, 1.0, 0.0, 0.2 * 2.0 / (sigma * sigma)};
    const long trials = 7000;

    std::vector<double> ex_prop, ex_pynd, ex_exact;
    ex_prop.reserve(trials * spec.n);
    ex_pynd.reserve(trials * spec.n);
    ex_exact.reserve(trials * spec.n);
    long comp_errs = 0;
    for (long t = 0; t < trials; ++t) {
        CounterRng rng(hash_combine(0xacce0004ULL, static_cast<std::uint64_t>(t), 1));
        const HardWord cw = encode(spec, random_info_word(spec, rng));
        const auto l = awgn_llrs(cw, sigma, hash_combine(0xacce0004ULL, static_cast<std::uint64_t>(t), 2));
        const auto order = rank_reliability(l, 4);
        const auto list = build_list(spec, l, order);
        const auto bound = build_out_list_bound(l, order, spec.t_prime);
        const auto ep = extrinsic_proposed(l, list, bound, prop);
        const auto ey = extrinsic_pyndiah(l, list, pynd);
        const auto ee = exact_extrinsic(book, l);
        for (int i = 0; i < spec.n; ++i) {
            ex_prop.push_back(ep[i]);
            ex_pynd.push_back(ey[i]);
            ex_exact.push_back(ee[i]);
        }
        if (!list.empty()) {
            const HardWord& dec = list.entries[list.best_index];
            comp_errs += dec.distance(cw);
        }
    }

    const double comp_ber = static_cast<double>(comp_errs) / static_cast<double>(trials * spec.n);
    const double r_prop = pearson(ex_prop, ex_exact);
    const double r_pynd = pearson(ex_pynd, ex_exact);
    if (ex_prop.size() < 100000)
        return fail(fmt("only %zu matched samples", ex_prop.size()));
    if (comp_ber < 5e-3 || comp_ber > 2e-2)
        return fail(fmt("operating point drifted: decoded component BER %.3e not ~1e-2", comp_ber));
    if (!(r_prop > r_pynd))
        return fail(fmt("pearson(smooth)=%.4f not above pearson(baseline)=%.4f over %zu samples",
                        r_prop, r_pynd, ex_prop.size()));
    return pass(fmt("pearson vs exact-MAP: smooth %.4f > baseline %.4f (%zu samples, component BER %.2e)",
                    r_prop, r_pynd, ex_prop.size(), comp_ber));
}

// ---------------------------------------------------------------------------
// 5. (256,239)^2, p = 5, 4 iterations: at the lowest SNR where the baseline
//    lands in BER [1e-4, 1e-3], the smooth rule's BER is lower with
//    non-overlapping 95% intervals under matched noise.
// ---------------------------------------------------------------------------

SweepConfig product_cfg() {
    SweepConfig cfg;
    cfg.row_code = make_code(8, 2, true); // (256,239)
    cfg.col_code = cfg.row_code;
    cfg.p = 5;
    cfg.threads = worker_threads();
    return cfg;
}

std::optional<BerPoint> measure_baseline(double snr_db) {
    SweepConfig cfg = product_cfg();
    cfg.rules = {{DecodeRule::pyndiah, classic_pyndiah_schedule(), "", true}};
    cfg.snr_points_db = {snr_db};
    cfg.min_bit_errors = 300;
    cfg.min_frame_errors = 30;
    cfg.max_frames = 500;
    cfg.batch_frames = 8;
    cfg.seed = 0x5ca0a11ULL;
    const auto pts = run_point(cfg, 0);
    if (pts.empty()) return std::nullopt;
    progress(fmt("[5] scan %.2f dB: baseline ber %.3e (%ld frames, %ld bit errors)",
                 snr_db, pts[0].ber, pts[0].frames, pts[0].bit_errors));
    return pts[0];
}

Outcome criterion_paired_ber() {
    const auto proposed = default_proposed_schedule();
    const auto baseline = classic_pyndiah_schedule();
    if (proposed.size() != 8 || baseline.size() != 8)
        return fail("built-in schedules are not 4 iterations long");

    // Phase 1: ascending scan for the lowest grid point where the baseline
    // measures inside [1e-4, 1e-3]. The waterfall is steep (the whole window
    // spans a few hundredths of a dB), hence the 0.01 dB grid.
    const double lo_edge = 1e-4, hi_edge = 1e-3;
    std::optional<double> candidate;
    double above = 0.0; // highest SNR seen with ber > 1e-3
    bool have_above = false;
    double below = 0.0; // lowest SNR seen with ber < 1e-4
    bool have_below = false;

    for (double snr = 3.30; snr <= 3.50 + 1e-9 && !candidate; snr += 0.01) {
        const auto pt = measure_baseline(snr);
        if (!pt) return fail("scan produced no measurement");
        if (pt->ber > hi_edge) {
            above = snr;
            have_above = true;
            continue;
        }
        if (pt->ber < lo_edge) {
            below = snr;
            have_below = true;
            break;
        }
        candidate = snr;
    }
    if (!candidate && !have_above && have_below) {
        // Whole grid already below the window: walk down until we bracket it.
        for (double snr = 3.29; snr >= 3.00 && !candidate; snr -= 0.02) {
            const auto pt = measure_baseline(snr);
            if (!pt) return fail("scan produced no measurement");
            if (pt->ber < lo_edge) { below = snr; continue; }
            if (pt->ber > hi_edge) { above = snr; have_above = true; break; }
            candidate = snr;
        }
    }
    for (int split = 0; split < 4 && !candidate && have_above && have_below; ++split) {
        const double mid = 0.5 * (above + below);
        const auto pt = measure_baseline(mid);
        if (!pt) return fail("scan produced no measurement");
        if (pt->ber > hi_edge) above = mid;
        else if (pt->ber < lo_edge) below = mid;
        else candidate = mid;
    }
    if (!candidate)
        return fail(fmt("no SNR with baseline BER in [1e-4,1e-3] (bracket %.3f..%.3f dB)",
                        have_above ? above : 0.0, have_below ? below : 0.0));

    // Phase 2: paired measurement at the found point with a fresh seed; both
    // rules decode the identical noise per trial. Retries shift by 0.01 dB if
    // the re-measured baseline lands outside the window.
    double snr = *candidate;
    for (int attempt = 0; attempt < 3; ++attempt) {
        SweepConfig cfg = product_cfg();
        cfg.rules = {{DecodeRule::proposed, proposed, "", true},
                     {DecodeRule::pyndiah, baseline, "", true}};
        cfg.snr_points_db = {snr};
        cfg.min_bit_errors = 500;
        cfg.min_frame_errors = 50;
        cfg.max_frames = 700;
        cfg.batch_frames = 16;
        cfg.seed = 0x9a17edULL + static_cast<std::uint64_t>(attempt);
        const auto pts = run_point(cfg, 0);
        if (pts.size() != 2) return fail("paired run did not produce two rows");
        const BerPoint& prop = pts[0].rule == "proposed" ? pts[0] : pts[1];
        const BerPoint& pynd = pts[0].rule == "pyndiah" ? pts[0] : pts[1];
        progress(fmt("[5] paired %.2f dB over %ld frames: smooth %.3e [%.2e,%.2e]  baseline %.3e [%.2e,%.2e]",
                     snr, prop.frames, prop.ber, prop.ci95_low, prop.ci95_high,
                     pynd.ber, pynd.ci95_low, pynd.ci95_high));
        if (pynd.ber < lo_edge) { snr -= 0.01; continue; }
        if (pynd.ber > hi_edge) { snr += 0.01; continue; }
        if (!(prop.ber < pynd.ber))
            return fail(fmt("at %.2f dB smooth ber %.3e not below baseline %.3e", snr, prop.ber, pynd.ber));
        if (!(prop.ci95_high < pynd.ci95_low))
            return fail(fmt("at %.2f dB intervals overlap: smooth high %.3e vs baseline low %.3e",
                            snr, prop.ci95_high, pynd.ci95_low));
        return pass(fmt("at %.2f dB Es/N0: smooth %.3e [%.2e,%.2e] < baseline %.3e [%.2e,%.2e], %ld matched frames",
                        snr, prop.ber, prop.ci95_low, prop.ci95_high,
                        pynd.ber, pynd.ci95_low, pynd.ci95_high, prop.frames));
    }
    return fail("paired re-measurement kept leaving the [1e-4,1e-3] window");
}

// ---------------------------------------------------------------------------
// 6. With the identity code the harness reproduces the uncoded BPSK curve.
// ---------------------------------------------------------------------------

Outcome criterion_uncoded_calibration() {
    const double sigmas[] = {0.5, 0.6, 0.7};
    std::string report;
    for (const double sigma : sigmas) {
        SweepConfig cfg;
        cfg.row_code = make_identity_code(8);
        cfg.col_code = cfg.row_code;
        cfg.p = 1;
        cfg.rules = {{DecodeRule::proposed, {}, "", true}}; // empty schedule: hard slicing
        cfg.snr_points_db = {es_n0_db_from_sigma(sigma)};
        cfg.min_bit_errors = 2000;
        cfg.min_frame_errors = 50;
        cfg.max_frames = 100000;
        cfg.batch_frames = 64;
        cfg.seed = 0xca11bULL;
        cfg.threads = worker_threads();
        const auto pts = run_point(cfg, 0);
        if (pts.size() != 1) return fail("expected one measurement");
        const double analytic = q_function(1.0 / sigma);
        const double width = pts[0].ci95_high - pts[0].ci95_low;
        if (std::abs(pts[0].ber - analytic) > 3.0 * width)
            return fail(fmt("sigma %.2f: ber %.4e vs Q(1/sigma) %.4e exceeds 3 interval widths (%.1e)",
                            sigma, pts[0].ber, analytic, width));
        report += fmt("%ssigma %.1f: %.4e vs %.4e", report.empty() ? "" : "; ",
                      sigma, pts[0].ber, analytic);
    }
    return pass(report + " (all within 3 interval widths)");
}

// ---------------------------------------------------------------------------
// 7. Byte-identical CSVs from repeated runs of the installed binary,
//    regardless of the thread count.
// ---------------------------------------------------------------------------

std::string file_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion_determinism() {
    const fs::path dir = fs::path("acceptance_tmp") / "determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string base = std::string(TPCODEC_TPC_BINARY) +
        " simulate --code ebch-16-11 --p 4 --iters 1 --paired --snr 2.0,2.6 --seed 424242"
        " --min-bit-errors 80 --min-frame-errors 8 --max-frames 600 --batch-frames 16";
    const fs::path a = dir / "a.csv", b = dir / "b.csv";
    const std::string run1 = base + " --threads 1 --out " + a.string() + " > /dev/null";
    const std::string run2 = base + " --threads 4 --out " + b.string() + " > /dev/null";
    if (std::system(run1.c_str()) != 0) return fail("first run exited nonzero");
    if (std::system(run2.c_str()) != 0) return fail("second run exited nonzero");
    const std::string bytes_a = file_bytes(a), bytes_b = file_bytes(b);
    if (bytes_a.empty()) return fail("first CSV is empty");
    if (bytes_a != bytes_b) return fail("CSVs differ between --threads 1 and --threads 4");
    return pass(fmt("identical %zu-byte CSVs from --threads 1 and --threads 4", bytes_a.size()));
}

// ---------------------------------------------------------------------------
// 8. The offline optimizers find known optima.
// ---------------------------------------------------------------------------

Outcome criterion_optimizer_sanity() {
    // Differential evolution on a planted quadratic over the real search box.
    const std::vector<double> target{0.9, 0.12, -14.0};
    DeConfig de;
    de.generations = 40;
    de.seed = 2026;
    const std::vector<std::pair<double, double>> bounds(de.lambda_bounds.begin(),
                                                        de.lambda_bounds.end());
    const auto quad = [&](const std::vector<double>& v) {
        double acc = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) acc += (v[i] - target[i]) * (v[i] - target[i]);
        return acc;
    };
    const DeResult res = de_minimize(quad, bounds, de);
    for (std::size_t i = 0; i < target.size(); ++i)
        if (std::abs(res.best[i] - target[i]) > 1e-2)
            return fail(fmt("DE coordinate %zu: %.5f vs planted %.5f (off by >1e-2)",
                            i, res.best[i], target[i]));

    // Grid search of the achievable-rate functional on synthetic Gaussian
    // reliabilities E = m*x + s*z; the calibrated scale is 2m/s^2 = 1.5.
    const double m = 3.0, s = 2.0, step = 0.05;
    const std::size_t n = 200000;
    std::vector<double> e(n), scaled(n);
    std::vector<std::uint8_t> bits(n);
    CounterRng bit_rng(hash_combine(0xacce0008ULL, 1));
    const std::uint64_t zstream = hash_combine(0xacce0008ULL, 2);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = bit_rng.next_bit() ? 1 : 0;
        e[i] = m * phi(bits[i]) + s * gaussian_at(zstream, i);
    }
    double best_a = 0.0, best_g = -1e300;
    for (double a = 1.0; a <= 2.0 + 1e-9; a += step) {
        for (std::size_t i = 0; i < n; ++i) scaled[i] = a * e[i];
        const double g = gmi_of_scaled_llrs(scaled, bits);
        if (g > best_g) {
            best_g = g;
            best_a = a;
        }
    }
    const double analytic = 2.0 * m / (s * s);
    if (std::abs(best_a - analytic) > step + 1e-9)
        return fail(fmt("grid search picked %.2f, analytic optimum %.2f (off by more than one step)",
                        best_a, analytic));
    return pass(fmt("DE within 1e-2 of planted triple in %d generations; grid picked %.2f vs analytic %.2f",
                    de.generations, best_a, analytic));
}

// ---------------------------------------------------------------------------
// 9. The shipped default schedule file carries the expected 8-row table.
// ---------------------------------------------------------------------------

Outcome criterion_shipped_schedule() {
    const std::string path = std::string(TPCODEC_SOURCE_DIR) + "/data/proposed_default.json";
    const auto sched = load_schedule(path);
    if (sched.size() != 8) return fail(fmt("expected 8 half-iterations, got %zu", sched.size()));
    struct Row { double alpha, l1, l2, mu; };
    const Row expected[8] = {
        {0.88, 0.47, 0.025, -9.22},  {0.86, 0.45, 0.027, -10.75},
        {0.76, 0.43, 0.029, -12.28}, {0.74, 0.41, 0.031, -13.81},
        {0.86, 0.39, 0.033, -15.35}, {0.82, 0.37, 0.035, -16.88},
        {0.84, 0.36, 0.037, -18.41}, {1.00, 0.34, 0.039, -19.94},
    };
    for (int i = 0; i < 8; ++i) {
        const auto& got = sched[i];
        const auto& want = expected[i];
        if (got.alpha != want.alpha || got.lambda1 != want.l1 || got.lambda2 != want.l2 ||
            got.mu != want.mu)
            return fail(fmt("half-iteration %d is %.3g/%.3g/%.3g/%.4g, expected %.3g/%.3g/%.3g/%.4g",
                            i + 1, got.alpha, got.lambda1, got.lambda2, got.mu,
                            want.alpha, want.l1, want.l2, want.mu));
    }
    return pass("all 8 rows match, including 0.88/0.47/0.025/-9.22 and 1.00/0.34/0.039/-19.94");
}

} // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const Criterion table[] = {
        {1, "bounded-distance decoding", criterion_bdd},
        {2, "candidate-list coverage", criterion_chase_coverage},
        {3, "reduction to the max-form rule", criterion_reduction_identity},
        {4, "closeness to the exact-MAP extrinsic", criterion_oracle_closeness},
        {5, "paired product-code BER ordering", criterion_paired_ber},
        {6, "uncoded-channel calibration", criterion_uncoded_calibration},
        {7, "deterministic simulation output", criterion_determinism},
        {8, "optimizer sanity", criterion_optimizer_sanity},
        {9, "shipped default schedule", criterion_shipped_schedule},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    for (const int id : selected) {
        if (id < 1 || id > 9) {
            std::fprintf(stderr, "usage: %s [criterion numbers 1..9]\n", argv[0]);
            return 2;
        }
    }

    bool all_pass = true;
    for (const auto& c : table) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d (%s): %s — %s [%.1fs]\n", c.id, c.title,
                    out.pass ? "PASS" : "FAIL", out.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass &= out.pass;
    }
    return all_pass ? 0 : 1;
}
