#include "tpcodec/sim.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>
#include <openssl/evp.h>

#include "tpcodec/channel.hpp"
#include "tpcodec/counter_rng.hpp"
#include "tpcodec/errors.hpp"

namespace tpcodec {

WilsonInterval wilson_95(long successes, long n) {
    if (n <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2n = z * z / nn;
    const double denom = 1.0 + z2n;
    const double center = (p + z2n / 2.0) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2n / (4.0 * nn)) / denom;
    // At the sample extremes the bound is exactly the extreme; everywhere the
    // algebra keeps the interval inside [0,1], so only rounding residue needs
    // clamping. Without this, an all-correct point can print a lower bound of
    // -1e-21 or +1e-21 depending on n.
    const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = successes == n ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_row(const BerPoint& pt) {
    std::ostringstream out;
    out << pt.rule << ',' << fmt_double(pt.snr_db) << ',' << pt.frames << ','
        << pt.bit_errors << ',' << pt.frame_errors << ',' << fmt_double(pt.ber) << ','
        << fmt_double(pt.fer) << ',' << fmt_double(pt.ci95_low) << ','
        << fmt_double(pt.ci95_high);
    return out.str();
}

void validate(const SweepConfig& cfg) {
    if (cfg.rules.empty()) throw ConfigError("sweep: no decoder rules configured");
    if (cfg.snr_points_db.empty()) throw ConfigError("sweep: no SNR points configured");
    if (cfg.max_frames < 1 || cfg.min_bit_errors < 1 || cfg.min_frame_errors < 1)
        throw ConfigError("sweep: stopping thresholds must be positive");
    if (cfg.threads < 1) throw ConfigError("sweep: threads must be positive");
    if (cfg.batch_frames < 1) throw ConfigError("sweep: batch_frames must be positive");
    for (const auto& plan : cfg.rules)
        if (plan.schedule.empty() && !cfg.row_code.identity)
            throw ConfigError("sweep: empty schedule for rule " +
                              std::string(rule_name(plan.rule)));
}

TpcSpec spec_for(const SweepConfig& cfg, const RulePlan& plan, double sigma) {
    TpcSpec spec;
    spec.row_code = cfg.row_code;
    spec.col_code = cfg.col_code;
    spec.p = cfg.p;
    spec.schedule = plan.schedule;
    if (plan.rule == DecodeRule::pyndiah && plan.beta_is_channel_scale) {
        const double llr_gain = 2.0 / (sigma * sigma);
        for (auto& par : spec.schedule) par.beta_pyndiah *= llr_gain;
    }
    return spec;
}

} // namespace

std::vector<BerPoint> run_point(const SweepConfig& cfg, int snr_index) {
    validate(cfg);
    if (snr_index < 0 || snr_index >= static_cast<int>(cfg.snr_points_db.size()))
        throw ConfigError("run_point: snr_index out of range");

    const double rate = static_cast<double>(cfg.row_code.k) * cfg.col_code.k /
                        (static_cast<double>(cfg.row_code.n) * cfg.col_code.n);
    const double snr_db = cfg.snr_points_db[static_cast<std::size_t>(snr_index)];
    const double es_db = cfg.snr_is_eb_n0 ? es_n0_db_from_eb_n0_db(snr_db, rate) : snr_db;
    const double sigma = sigma_from_es_n0_db(es_db);

    std::vector<TpcSpec> specs;
    specs.reserve(cfg.rules.size());
    for (const auto& plan : cfg.rules) specs.push_back(spec_for(cfg, plan, sigma));
    const TpcSpec& ref = specs.front();
    const long k_info = static_cast<long>(ref.k_rows()) * ref.k_cols();

    const std::size_t n_rules = cfg.rules.size();
    std::vector<std::atomic<long>> bit_errors(n_rules), frame_errors(n_rules);
    for (std::size_t r = 0; r < n_rules; ++r) {
        bit_errors[r] = 0;
        frame_errors[r] = 0;
    }

    const ChannelConfig channel{
        sigma, hash_combine(cfg.seed, static_cast<std::uint64_t>(snr_index))};

    auto run_trial = [&](long trial) {
        CounterRng bits(hash_combine(cfg.seed, static_cast<std::uint64_t>(snr_index),
                                     static_cast<std::uint64_t>(trial), 0x1f0bu));
        std::vector<std::uint8_t> info(static_cast<std::size_t>(k_info));
        bool nonzero = false;
        do {
            for (auto& b : info) {
                b = static_cast<std::uint8_t>(bits.next_bit());
                nonzero |= b != 0;
            }
        } while (!nonzero);
        const BitMatrix cw = tpc_encode(ref, info);
        const LlrMatrix l_in =
            to_llr(transmit(modulate(cw), channel, static_cast<std::uint64_t>(trial)), channel);
        for (std::size_t r = 0; r < n_rules; ++r) {
            const auto decoded =
                extract_info(specs[r], tpc_decode(specs[r], l_in, cfg.rules[r].rule).decision);
            long errs = 0;
            for (std::size_t i = 0; i < decoded.size(); ++i) errs += decoded[i] != info[i];
            if (errs > 0) {
                bit_errors[r].fetch_add(errs, std::memory_order_relaxed);
                frame_errors[r].fetch_add(1, std::memory_order_relaxed);
            }
        }
    };

    long frames = 0;
    while (frames < cfg.max_frames) {
        const long batch = std::min(cfg.batch_frames, cfg.max_frames - frames);
        if (cfg.threads == 1) {
            for (long t = 0; t < batch; ++t) run_trial(frames + t);
        } else {
            std::vector<std::thread> workers;
            std::exception_ptr failure;
            std::mutex failure_mu;
            const int nw = static_cast<int>(std::min<long>(cfg.threads, batch));
            workers.reserve(static_cast<std::size_t>(nw));
            for (int w = 0; w < nw; ++w)
                workers.emplace_back([&, w] {
                    try {
                        for (long t = w; t < batch; t += nw) run_trial(frames + t);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mu);
                        if (!failure) failure = std::current_exception();
                    }
                });
            for (auto& worker : workers) worker.join();
            if (failure) std::rethrow_exception(failure);
        }
        frames += batch;

        bool all_done = true;
        for (std::size_t r = 0; r < n_rules; ++r)
            all_done = all_done && bit_errors[r].load() >= cfg.min_bit_errors &&
                       frame_errors[r].load() >= cfg.min_frame_errors;
        if (all_done) break;
    }

    std::vector<BerPoint> points;
    points.reserve(n_rules);
    for (std::size_t r = 0; r < n_rules; ++r) {
        BerPoint pt;
        pt.rule = rule_name(cfg.rules[r].rule);
        pt.snr_db = snr_db;
        pt.frames = frames;
        pt.bit_errors = bit_errors[r].load();
        pt.frame_errors = frame_errors[r].load();
        const long n_bits = frames * k_info;
        pt.ber = static_cast<double>(pt.bit_errors) / static_cast<double>(n_bits);
        pt.fer = static_cast<double>(pt.frame_errors) / static_cast<double>(frames);
        const WilsonInterval ci = wilson_95(pt.bit_errors, n_bits);
        pt.ci95_low = ci.low;
        pt.ci95_high = ci.high;
        points.push_back(std::move(pt));
    }
    return points;
}

namespace {

nlohmann::json code_json(const CodeSpec& code) {
    return {{"n", code.n},
            {"k", code.k},
            {"t", code.t},
            {"t_prime", code.t_prime},
            {"extended", code.extended},
            {"identity", code.identity},
            {"m", code.m}};
}

nlohmann::json schedule_json(const std::vector<HalfIterParams>& schedule) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t t = 0; t < schedule.size(); ++t)
        arr.push_back({{"half_iter", t + 1},
                       {"alpha", schedule[t].alpha},
                       {"lambda1", schedule[t].lambda1},
                       {"lambda2", schedule[t].lambda2},
                       {"mu", schedule[t].mu},
                       {"beta_pyndiah", schedule[t].beta_pyndiah}});
    return arr;
}

void write_sidecar(const SweepConfig& cfg, const std::string& csv_path,
                   const std::string& sidecar_path) {
    nlohmann::json doc;
    doc["version"] = 1;
    doc["csv"] = csv_path;
    doc["csv_header"] = kBerCsvHeader;
    doc["ber_convention"] = "information bits only";
    doc["row_code"] = code_json(cfg.row_code);
    doc["col_code"] = code_json(cfg.col_code);
    doc["p"] = cfg.p;
    doc["snr_points_db"] = cfg.snr_points_db;
    doc["snr_scale"] = cfg.snr_is_eb_n0 ? "eb_n0" : "es_n0";
    doc["stopping"] = {{"max_frames", cfg.max_frames},
                       {"min_bit_errors", cfg.min_bit_errors},
                       {"min_frame_errors", cfg.min_frame_errors}};
    doc["seed"] = cfg.seed;
    doc["threads"] = cfg.threads;
    doc["batch_frames"] = cfg.batch_frames;
    doc["rules"] = nlohmann::json::array();
    for (const auto& plan : cfg.rules) {
        nlohmann::json entry;
        entry["rule"] = rule_name(plan.rule);
        entry["params_file"] = plan.params_path.empty() ? "built-in" : plan.params_path;
        if (!plan.params_path.empty())
            entry["params_sha256"] = sha256_file(plan.params_path);
        if (plan.rule == DecodeRule::pyndiah)
            entry["beta_scaled_to_llr"] = plan.beta_is_channel_scale;
        entry["schedule"] = schedule_json(plan.schedule);
        doc["rules"].push_back(entry);
    }
    std::ofstream out(sidecar_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write sidecar: " + sidecar_path);
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) throw IoError("failed writing sidecar: " + sidecar_path);
}

} // namespace

std::vector<BerPoint> run_sweep(const SweepConfig& cfg, const std::string& csv_path,
                                const std::string& sidecar_json_path) {
    validate(cfg);

    // Resume support: gather the (rule, snr) keys already present.
    std::set<std::string> done;
    bool have_file = false;
    {
        std::ifstream in(csv_path, std::ios::binary);
        if (in) {
            std::string line;
            bool first = true;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                if (first) {
                    if (line != kBerCsvHeader)
                        throw IoError(csv_path + ": existing file is not a results CSV");
                    first = false;
                    have_file = true;
                    continue;
                }
                const auto c1 = line.find(',');
                const auto c2 = line.find(',', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw IoError(csv_path + ": malformed row: " + line);
                const std::string key = line.substr(0, c2);
                if (!done.insert(key).second)
                    throw IoError(csv_path + ": duplicate row for " + key);
                have_file = true;
            }
        }
    }

    std::ofstream out(csv_path, std::ios::binary | std::ios::app);
    if (!out) throw IoError("cannot open results file: " + csv_path);
    if (!have_file) {
        out << kBerCsvHeader << '\n';
        out.flush();
    }

    std::vector<BerPoint> fresh;
    for (int s = 0; s < static_cast<int>(cfg.snr_points_db.size()); ++s) {
        const std::string snr_str = fmt_double(cfg.snr_points_db[static_cast<std::size_t>(s)]);
        std::size_t present = 0;
        for (const auto& plan : cfg.rules)
            present += done.count(std::string(rule_name(plan.rule)) + ',' + snr_str);
        if (present == cfg.rules.size()) continue; // already measured
        if (present != 0)
            throw IoError(csv_path + ": partial rows at snr_db=" + snr_str +
                          "; remove the file (or the torn rows) to recompute");

        const auto points = run_point(cfg, s);
        for (const auto& pt : points) out << csv_row(pt) << '\n';
        out.flush();
        if (!out) throw IoError("failed writing results: " + csv_path);
        fresh.insert(fresh.end(), points.begin(), points.end());
    }

    write_sidecar(cfg, csv_path, sidecar_json_path);
    return fresh;
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for hashing: " + path);

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw IoError("sha256: cannot allocate digest context");
    if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw IoError("sha256: digest init failed");
    }
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof buf);
        const std::streamsize got = in.gcount();
        if (got > 0 && EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(got)) != 1) {
            EVP_MD_CTX_free(ctx);
            throw IoError("sha256: digest update failed");
        }
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw IoError("sha256: digest final failed");
    }
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

} // namespace tpcodec
