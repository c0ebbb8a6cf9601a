#include "tpcodec/gf2m.hpp"

namespace tpcodec {

std::uint32_t default_primitive_poly(int m) {
    // Standard primitive polynomials, bit i = coefficient of x^i.
    switch (m) {
    case 3:  return 0x0b;   // x^3 + x + 1
    case 4:  return 0x13;   // x^4 + x + 1
    case 5:  return 0x25;   // x^5 + x^2 + 1
    case 6:  return 0x43;   // x^6 + x + 1
    case 7:  return 0x89;   // x^7 + x^3 + 1
    case 8:  return 0x11d;  // x^8 + x^4 + x^3 + x^2 + 1
    case 9:  return 0x211;  // x^9 + x^4 + 1
    case 10: return 0x409;  // x^10 + x^3 + 1
    case 11: return 0x805;  // x^11 + x^2 + 1
    case 12: return 0x1053; // x^12 + x^6 + x^4 + x + 1
    default:
        throw UnsupportedParameters("default_primitive_poly: m must be in [3, 12], got " +
                                    std::to_string(m));
    }
}

FieldTables build_field(int m, std::uint32_t primitive_poly) {
    if (m < 3 || m > 12)
        throw UnsupportedParameters("build_field: m must be in [3, 12], got " + std::to_string(m));
    if ((primitive_poly >> m) != 1u)
        throw NonPrimitivePolynomial("build_field: polynomial degree is not m");

    const std::uint32_t q = (1u << m) - 1;
    FieldTables t;
    t.m = m;
    t.primitive_poly = primitive_poly;
    t.exp_table.assign(q, 0);
    t.log_table.assign(std::size_t(1) << m, -1);

    // Generate the cycle alpha^0, alpha^1, ... by multiplying by x mod p(x).
    std::uint32_t a = 1;
    for (std::uint32_t e = 0; e < q; ++e) {
        if (t.log_table[a] != -1) // cycle closed early
            throw NonPrimitivePolynomial("build_field: polynomial is not primitive");
        t.exp_table[e] = a;
        t.log_table[a] = static_cast<int>(e);
        a <<= 1;
        if (a >> m) a ^= primitive_poly;
    }
    if (a != 1) // after 2^m - 1 steps alpha must wrap to 1
        throw NonPrimitivePolynomial("build_field: polynomial is not primitive");
    return t;
}

FieldTables build_field(int m) { return build_field(m, default_primitive_poly(m)); }

} // namespace tpcodec
