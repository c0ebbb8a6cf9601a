#include "tpcodec/schedule.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tpcodec/errors.hpp"

namespace tpcodec {

std::vector<HalfIterParams> default_proposed_schedule() {
    // alpha, lambda1, lambda2, mu, beta_pyndiah (beta unused by this rule).
    return {
        {0.88, 0.47, 0.025, -9.22, 0.0},  {0.86, 0.45, 0.027, -10.75, 0.0},
        {0.76, 0.43, 0.029, -12.28, 0.0}, {0.74, 0.41, 0.031, -13.81, 0.0},
        {0.86, 0.39, 0.033, -15.35, 0.0}, {0.82, 0.37, 0.035, -16.88, 0.0},
        {0.84, 0.36, 0.037, -18.41, 0.0}, {1.00, 0.34, 0.039, -19.94, 0.0},
    };
}

std::vector<HalfIterParams> classic_pyndiah_schedule() {
    return {
        {0.2, 0.0, 0.0, 0.0, 0.2}, {0.3, 0.0, 0.0, 0.0, 0.4}, {0.5, 0.0, 0.0, 0.0, 0.6},
        {0.7, 0.0, 0.0, 0.0, 0.8}, {0.9, 0.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, 0.0, 1.0},
        {1.0, 0.0, 0.0, 0.0, 1.0}, {1.0, 0.0, 0.0, 0.0, 1.0},
    };
}

std::vector<HalfIterParams> schedule_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("schedule: invalid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty())
        throw ConfigError("schedule: expected a non-empty JSON array");

    const std::size_t n = doc.size();
    std::vector<HalfIterParams> schedule(n);
    std::vector<bool> seen(n, false);
    for (const auto& item : doc) {
        if (!item.is_object()) throw ConfigError("schedule: every entry must be an object");
        for (const auto& [key, value] : item.items()) {
            if (key != "half_iter" && key != "alpha" && key != "lambda1" &&
                key != "lambda2" && key != "mu" && key != "beta_pyndiah")
                throw ConfigError("schedule: unknown key '" + key + "'");
            if (!value.is_number())
                throw ConfigError("schedule: key '" + key + "' must be numeric");
        }
        for (const char* key : {"half_iter", "alpha", "lambda1", "lambda2", "mu", "beta_pyndiah"})
            if (!item.contains(key))
                throw ConfigError(std::string("schedule: missing key '") + key + "'");
        if (!item["half_iter"].is_number_integer())
            throw ConfigError("schedule: half_iter must be an integer");
        const long long h = item["half_iter"].get<long long>();
        if (h < 1 || h > static_cast<long long>(n))
            throw ConfigError("schedule: half_iter " + std::to_string(h) +
                              " out of range 1.." + std::to_string(n));
        const std::size_t t = static_cast<std::size_t>(h) - 1;
        if (seen[t])
            throw ConfigError("schedule: duplicate half_iter " + std::to_string(h));
        seen[t] = true;
        schedule[t] = HalfIterParams{item["alpha"].get<double>(), item["lambda1"].get<double>(),
                                     item["lambda2"].get<double>(), item["mu"].get<double>(),
                                     item["beta_pyndiah"].get<double>()};
    }
    return schedule;
}

std::string schedule_to_json(const std::vector<HalfIterParams>& schedule) {
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t t = 0; t < schedule.size(); ++t) {
        const auto& p = schedule[t];
        doc.push_back({{"half_iter", t + 1},
                       {"alpha", p.alpha},
                       {"lambda1", p.lambda1},
                       {"lambda2", p.lambda2},
                       {"mu", p.mu},
                       {"beta_pyndiah", p.beta_pyndiah}});
    }
    return doc.dump(2) + "\n";
}

std::vector<HalfIterParams> load_schedule(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open schedule file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return schedule_from_json(text.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void save_schedule(const std::string& path, const std::vector<HalfIterParams>& schedule) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write schedule file: " + path);
    out << schedule_to_json(schedule);
    out.flush();
    if (!out) throw IoError("failed writing schedule file: " + path);
}

} // namespace tpcodec
