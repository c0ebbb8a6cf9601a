#include "tpcodec/channel.hpp"

#include <cmath>
#include <string>

#include "tpcodec/counter_rng.hpp"
#include "tpcodec/errors.hpp"
#include "tpcodec/llr.hpp"

namespace tpcodec {

double es_n0_db_from_sigma(double sigma) {
    if (sigma <= 0.0) throw ConfigError("sigma must be positive");
    return 10.0 * std::log10(1.0 / (2.0 * sigma * sigma));
}

double sigma_from_es_n0_db(double es_n0_db) {
    if (!std::isfinite(es_n0_db)) throw ConfigError("Es/N0 must be finite");
    return std::sqrt(0.5 * std::pow(10.0, -es_n0_db / 10.0));
}

double eb_n0_db_from_es_n0_db(double es_n0_db, double rate) {
    if (rate <= 0.0) throw ConfigError("rate must be positive");
    return es_n0_db - 10.0 * std::log10(rate);
}

double es_n0_db_from_eb_n0_db(double eb_n0_db, double rate) {
    if (rate <= 0.0) throw ConfigError("rate must be positive");
    return eb_n0_db + 10.0 * std::log10(rate);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

RealMatrix modulate(const BitMatrix& bits) {
    RealMatrix x(bits.rows(), bits.cols());
    for (int r = 0; r < bits.rows(); ++r)
        for (int c = 0; c < bits.cols(); ++c) x(r, c) = phi(bits(r, c) != 0);
    return x;
}

BitMatrix demap(const RealMatrix& x) {
    BitMatrix bits(x.rows(), x.cols());
    for (int r = 0; r < x.rows(); ++r)
        for (int c = 0; c < x.cols(); ++c) bits(r, c) = x(r, c) < 0.0 ? 1 : 0;
    return bits;
}

RealMatrix transmit(const RealMatrix& x, const ChannelConfig& cfg, std::uint64_t trial_id) {
    if (cfg.sigma <= 0.0) throw ConfigError("transmit: sigma must be positive");
    const std::uint64_t stream = hash_combine(cfg.seed, trial_id);
    RealMatrix y(x.rows(), x.cols());
    const int cols = x.cols();
    for (int r = 0; r < x.rows(); ++r)
        for (int c = 0; c < cols; ++c) {
            const std::uint64_t idx =
                static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(cols) + c;
            y(r, c) = x(r, c) + cfg.sigma * gaussian_at(stream, idx);
        }
    return y;
}

LlrMatrix to_llr(const RealMatrix& y, const ChannelConfig& cfg) {
    if (cfg.sigma <= 0.0) throw ConfigError("to_llr: sigma must be positive");
    const double scale = 2.0 / (cfg.sigma * cfg.sigma);
    LlrMatrix l(y.rows(), y.cols());
    for (int r = 0; r < y.rows(); ++r)
        for (int c = 0; c < y.cols(); ++c) l(r, c) = scale * y(r, c);
    return l;
}

} // namespace tpcodec
