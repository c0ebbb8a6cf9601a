#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tpcodec/bch.hpp"
#include "tpcodec/matrix.hpp"
#include "tpcodec/siso.hpp"

namespace tpcodec {

// Product code: the codeword matrix has col_code.n rows and row_code.n
// columns; every row is a row_code codeword and every column a col_code
// codeword. The information block occupies the top-left k_c x k_r corner.
struct TpcSpec {
    CodeSpec row_code; // codes each row, length n_r = matrix columns
    CodeSpec col_code; // codes each column, length n_c = matrix rows
    int p = 5;         // Chase parameter shared by both orientations
    std::vector<HalfIterParams> schedule; // even length; entry 0 processes columns

    int n_rows() const { return col_code.n; }
    int n_cols() const { return row_code.n; }
    int k_rows() const { return col_code.k; }
    int k_cols() const { return row_code.k; }
    double rate() const {
        return static_cast<double>(k_rows()) * k_cols() / (static_cast<double>(n_rows()) * n_cols());
    }
};

// Which component soft-output rule drives the iteration.
enum class DecodeRule { proposed, pyndiah, oracle };

DecodeRule parse_rule(const std::string& name); // "proposed" | "pyndiah" | "oracle"
const char* rule_name(DecodeRule rule);

// Row-major info block of k_c x k_r bits -> full codeword matrix.
BitMatrix tpc_encode(const TpcSpec& spec, const std::vector<std::uint8_t>& info);

struct TpcDecodeResult {
    BitMatrix decision;
    LlrMatrix app;
};

// Observer invoked after each half-iteration t (0-based) with the extrinsic
// matrix produced at t and the updated a-posteriori matrix.
using HalfIterObserver = std::function<void(int, const LlrMatrix&, const LlrMatrix&)>;

// Iterative column/row decoding. Half-iteration t (0-based, columns first)
// runs the component rule on every column (even t) or row (odd t) of the
// previous a-posteriori matrix, then applies
//   app = l_in + schedule[t].alpha * extrinsic.
// Component soft-decode failures contribute a zero extrinsic. The final hard
// decision is the sign of the last a-posteriori matrix. Deterministic: the
// result depends only on (spec, l_in, rule).
TpcDecodeResult tpc_decode(const TpcSpec& spec, const LlrMatrix& l_in, DecodeRule rule,
                           const HalfIterObserver& observer = {});

// The systematic corner, flattened in tpc_encode's row-major info order.
std::vector<std::uint8_t> extract_info(const TpcSpec& spec, const BitMatrix& decision);

} // namespace tpcodec
