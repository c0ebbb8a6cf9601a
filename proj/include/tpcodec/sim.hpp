#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpcodec/tpc.hpp"

namespace tpcodec {

// One decoder entered in the comparison: a rule plus its half-iteration
// schedule. params_path records where the schedule came from ("" = built-in);
// it is hashed into the result sidecar.
//
// beta_is_channel_scale: the classic Chase-Pyndiah fallback constants are
// defined for unit-amplitude channel outputs; our decoders consume LLRs,
// which are 2/sigma^2 times larger. When set (the default), beta_pyndiah
// values are multiplied by that gain at each SNR point before decoding, so
// the shipped classic schedule behaves as calibrated. Ignored by rules that
// never read beta. Clear it to apply the file's values verbatim.
struct RulePlan {
    DecodeRule rule = DecodeRule::proposed;
    std::vector<HalfIterParams> schedule;
    std::string params_path;
    bool beta_is_channel_scale = true;
};

struct SweepConfig {
    CodeSpec row_code;
    CodeSpec col_code;
    int p = 5;
    std::vector<RulePlan> rules; // every rule decodes the identical noise per trial
    std::vector<double> snr_points_db;
    bool snr_is_eb_n0 = false; // false: values are Es/N0; true: Eb/N0 (rate-converted)
    long max_frames = 10'000'000;
    long min_bit_errors = 500;
    long min_frame_errors = 50;
    std::uint64_t seed = 0;
    int threads = 1;
    long batch_frames = 64; // stopping is evaluated at fixed batch boundaries
};

// One measured point. ber counts information-bit errors only; fer counts
// frames whose decoded information block differs anywhere. The 95% interval
// is Wilson's, on the per-bit error probability.
struct BerPoint {
    std::string rule;
    double snr_db = 0.0; // echo of the configured value
    long frames = 0;
    long bit_errors = 0;
    long frame_errors = 0;
    double ber = 0.0;
    double fer = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
};

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

// 95% Wilson score interval for successes/n; brackets the point estimate.
WilsonInterval wilson_95(long successes, long n);

// Monte Carlo at one SNR point: per trial draw a random nonzero information
// block, encode, add noise addressed by (seed, snr_index, trial), and decode
// with every configured rule on that identical noise. Stops at the first batch
// boundary where every rule has both min_bit_errors and min_frame_errors, or
// at max_frames. Deterministic for fixed (cfg, snr_index) regardless of
// cfg.threads.
std::vector<BerPoint> run_point(const SweepConfig& cfg, int snr_index);

// All SNR points, streamed to csv_path (header + one row per rule per point,
// appended point-by-point) with a JSON sidecar holding the fully-resolved
// config and a SHA-256 of each schedule file. An existing CSV resumes: points
// whose rows are all present are skipped. Returns the newly computed points.
std::vector<BerPoint> run_sweep(const SweepConfig& cfg, const std::string& csv_path,
                                const std::string& sidecar_json_path);

// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path); // IoError

inline constexpr char kBerCsvHeader[] =
    "rule,snr_db,frames,bit_errors,frame_errors,ber,fer,ci95_low,ci95_high";

} // namespace tpcodec
