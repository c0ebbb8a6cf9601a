#include "tpcodec/tpc.hpp"

#include <memory>
#include <string>

#include "tpcodec/chase.hpp"
#include "tpcodec/llr.hpp"
#include "tpcodec/oracle.hpp"

namespace tpcodec {

DecodeRule parse_rule(const std::string& name) {
    if (name == "proposed") return DecodeRule::proposed;
    if (name == "pyndiah") return DecodeRule::pyndiah;
    if (name == "oracle") return DecodeRule::oracle;
    throw ConfigError("unknown decoder rule '" + name +
                      "' (expected proposed, pyndiah, or oracle)");
}

const char* rule_name(DecodeRule rule) {
    switch (rule) {
    case DecodeRule::proposed: return "proposed";
    case DecodeRule::pyndiah: return "pyndiah";
    case DecodeRule::oracle: return "oracle";
    }
    return "?";
}

BitMatrix tpc_encode(const TpcSpec& spec, const std::vector<std::uint8_t>& info) {
    const int R = spec.n_rows(), C = spec.n_cols();
    const int kr = spec.k_rows(), kc = spec.k_cols();
    if (static_cast<int>(info.size()) != kr * kc)
        throw LengthMismatch("tpc_encode: info length " + std::to_string(info.size()) +
                             ", expected " + std::to_string(kr * kc));
    BitMatrix m(R, C, 0);

    // Rows of the information block first.
    HardWord row_info(spec.row_code.k);
    for (int r = 0; r < kr; ++r) {
        for (int c = 0; c < kc; ++c) row_info.set(c, info[static_cast<std::size_t>(r) * kc + c]);
        const auto cw = encode(spec.row_code, row_info);
        for (int c = 0; c < C; ++c) m(r, c) = cw.get(c);
    }
    // Then every column; the parity-of-parity area completes both codes.
    HardWord col_info(spec.col_code.k);
    for (int c = 0; c < C; ++c) {
        for (int r = 0; r < kr; ++r) col_info.set(r, m(r, c));
        const auto cw = encode(spec.col_code, col_info);
        for (int r = kr; r < R; ++r) m(r, c) = cw.get(r);
    }
    return m;
}

namespace {

LlrVector component_extrinsic(const CodeSpec& code, const Codebook* book,
                              const LlrVector& vec, int p, DecodeRule rule,
                              const HalfIterParams& params) {
    if (rule == DecodeRule::oracle) return exact_extrinsic(*book, vec);
    const auto order = rank_reliability(vec, p);
    const auto list = build_list(code, vec, order);
    if (rule == DecodeRule::proposed) {
        const auto bound = build_out_list_bound(vec, order, code.t_prime);
        return extrinsic_proposed(vec, list, bound, params);
    }
    return extrinsic_pyndiah(vec, list, params);
}

} // namespace

TpcDecodeResult tpc_decode(const TpcSpec& spec, const LlrMatrix& l_in, DecodeRule rule,
                           const HalfIterObserver& observer) {
    const int R = spec.n_rows(), C = spec.n_cols();
    if (l_in.rows() != R || l_in.cols() != C)
        throw LengthMismatch("tpc_decode: LLR matrix is " + std::to_string(l_in.rows()) +
                             "x" + std::to_string(l_in.cols()) + ", expected " +
                             std::to_string(R) + "x" + std::to_string(C));

    std::unique_ptr<Codebook> col_book, row_book;
    if (rule == DecodeRule::oracle) {
        col_book = std::make_unique<Codebook>(build_codebook(spec.col_code));
        row_book = std::make_unique<Codebook>(build_codebook(spec.row_code));
    }

    LlrMatrix app = l_in;
    LlrMatrix ex(R, C, 0.0);
    LlrVector vec;
    for (std::size_t t = 0; t < spec.schedule.size(); ++t) {
        const auto& par = spec.schedule[t];
        if (t % 2 == 0) {
            // Columns: vector element r comes from matrix row r.
            vec.resize(R);
            for (int c = 0; c < C; ++c) {
                for (int r = 0; r < R; ++r) vec[r] = app(r, c);
                const auto e = component_extrinsic(spec.col_code, col_book.get(), vec,
                                                   spec.p, rule, par);
                for (int r = 0; r < R; ++r) ex(r, c) = e[r];
            }
        } else {
            vec.resize(C);
            for (int r = 0; r < R; ++r) {
                const double* src = app.row_ptr(r);
                vec.assign(src, src + C);
                const auto e = component_extrinsic(spec.row_code, row_book.get(), vec,
                                                   spec.p, rule, par);
                double* dst = ex.row_ptr(r);
                for (int c = 0; c < C; ++c) dst[c] = e[c];
            }
        }
        for (std::size_t i = 0; i < app.data().size(); ++i)
            app.data()[i] = l_in.data()[i] + par.alpha * ex.data()[i];
        if (observer) observer(static_cast<int>(t), ex, app);
    }

    TpcDecodeResult result{BitMatrix(R, C), std::move(app)};
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c)
            result.decision(r, c) = hard_bit(result.app(r, c)) ? 1 : 0;
    return result;
}

std::vector<std::uint8_t> extract_info(const TpcSpec& spec, const BitMatrix& decision) {
    const int kr = spec.k_rows(), kc = spec.k_cols();
    if (decision.rows() < kr || decision.cols() < kc)
        throw LengthMismatch("extract_info: decision matrix smaller than the info block");
    std::vector<std::uint8_t> info(static_cast<std::size_t>(kr) * kc);
    for (int r = 0; r < kr; ++r)
        for (int c = 0; c < kc; ++c) info[static_cast<std::size_t>(r) * kc + c] = decision(r, c);
    return info;
}

} // namespace tpcodec
