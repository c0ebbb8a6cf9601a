#pragma once

#include <cstdint>
#include <vector>

#include "tpcodec/errors.hpp"

namespace tpcodec {

// Arithmetic over GF(2^m), elements stored as integers in polynomial basis.
// Tables are immutable after construction and safe to share across threads.
struct FieldTables {
    int m = 0;                       // extension degree, 3 <= m <= 12
    std::uint32_t primitive_poly = 0; // degree-m binary polynomial, bit i = coeff of x^i
    std::vector<std::uint32_t> exp_table; // exp_table[e] = alpha^e, e in [0, 2^m-1)
    std::vector<int> log_table;           // log_table[x] = e with alpha^e = x; log_table[0] = -1

    int order() const { return static_cast<int>(exp_table.size()); } // 2^m - 1
};

// Compiled-in default primitive polynomial for each supported m.
std::uint32_t default_primitive_poly(int m);

// Builds exp/log tables. Throws NonPrimitivePolynomial if the polynomial does
// not generate the full multiplicative group (cycle length != 2^m - 1), and
// UnsupportedParameters for m outside [3, 12].
FieldTables build_field(int m, std::uint32_t primitive_poly);
FieldTables build_field(int m); // uses default_primitive_poly(m)

inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, const FieldTables& t) {
    if (a == 0 || b == 0) return 0;
    const int e = t.log_table[a] + t.log_table[b];
    const int q = t.order();
    return t.exp_table[e >= q ? e - q : e];
}

inline std::uint32_t gf_inv(std::uint32_t a, const FieldTables& t) {
    if (a == 0) throw DivisionByZero("gf_inv: zero element has no inverse");
    const int e = t.log_table[a];
    return t.exp_table[e == 0 ? 0 : t.order() - e];
}

inline std::uint32_t gf_div(std::uint32_t a, std::uint32_t b, const FieldTables& t) {
    if (b == 0) throw DivisionByZero("gf_div: division by zero");
    if (a == 0) return 0;
    int e = t.log_table[a] - t.log_table[b];
    if (e < 0) e += t.order();
    return t.exp_table[e];
}

// alpha^e for any integer exponent (reduced mod 2^m - 1).
inline std::uint32_t gf_pow_alpha(long long e, const FieldTables& t) {
    const int q = t.order();
    long long r = e % q;
    if (r < 0) r += q;
    return t.exp_table[static_cast<std::size_t>(r)];
}

} // namespace tpcodec
