#pragma once

#include <string>
#include <vector>

#include "tpcodec/siso.hpp"

namespace tpcodec {

// Shipped tuned parameters for the proposed rule: 8 half-iterations (4 full
// iterations) of the (256,239)^2 product code.
std::vector<HalfIterParams> default_proposed_schedule();

// Classic Chase-Pyndiah weighting for the same depth: the extrinsic scale
// ramps up over the early half-iterations while beta substitutes for missing
// competitors.
std::vector<HalfIterParams> classic_pyndiah_schedule();

// Schedule files are a JSON array of objects
//   {"half_iter": 1-based index, "alpha": ..., "lambda1": ..., "lambda2": ...,
//    "mu": ..., "beta_pyndiah": ...}
// covering each half-iteration exactly once. All six keys are required and no
// other keys are accepted.
std::vector<HalfIterParams> schedule_from_json(const std::string& text); // ConfigError
std::string schedule_to_json(const std::vector<HalfIterParams>& schedule);

std::vector<HalfIterParams> load_schedule(const std::string& path); // IoError / ConfigError
void save_schedule(const std::string& path, const std::vector<HalfIterParams>& schedule);

} // namespace tpcodec
