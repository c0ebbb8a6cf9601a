#include "tpcodec/bch.hpp"

#include <bit>
#include <string>

namespace tpcodec {

int HardWord::weight() const {
    int w = 0;
    for (std::uint64_t x : w_) w += std::popcount(x);
    return w;
}

int HardWord::distance(const HardWord& o) const {
    int d = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) d += std::popcount(w_[i] ^ o.w_[i]);
    return d;
}

namespace {

// Table of z solving z^2 + z = c; kNoRoot where the trace of c is 1.
std::vector<std::uint32_t> build_qsolve(const FieldTables& f) {
    const std::size_t size = std::size_t(1) << f.m;
    std::vector<std::uint32_t> table(size, kNoRoot);
    for (std::uint32_t z = 0; z < size; ++z) {
        const std::uint32_t c = gf_mul(z, z, f) ^ z;
        if (table[c] == kNoRoot) table[c] = z;
    }
    return table;
}

} // namespace

CodeSpec make_code(int m, int t, bool extended, const FieldTables& field) {
    if (t < 1 || t > kMaxBddErrors)
        throw UnsupportedParameters("make_code: t must be in [1, " +
                                    std::to_string(kMaxBddErrors) + "]");
    const int q = field.order(); // n_base = 2^m - 1

    // Generator polynomial: product of the distinct minimal polynomials of
    // alpha^1 .. alpha^2t, each obtained from one cyclotomic coset.
    std::vector<bool> visited(q, false);
    std::vector<std::uint8_t> g = {1};
    for (int e = 1; e <= 2 * t; ++e) {
        int x = e % q;
        if (visited[x]) continue;
        std::vector<int> coset;
        while (!visited[x]) {
            visited[x] = true;
            coset.push_back(x);
            x = (2 * x) % q;
        }
        // Minimal polynomial = prod_{c in coset} (X + alpha^c), computed over
        // GF(2^m); the result must have binary coefficients.
        std::vector<std::uint32_t> mp = {1};
        for (int c : coset) {
            const std::uint32_t root = field.exp_table[c];
            std::vector<std::uint32_t> next(mp.size() + 1, 0);
            for (std::size_t i = 0; i < mp.size(); ++i) {
                next[i + 1] ^= mp[i];
                next[i] ^= gf_mul(mp[i], root, field);
            }
            mp = std::move(next);
        }
        for (std::uint32_t c : mp) {
            if (c > 1)
                throw UnsupportedParameters("make_code: minimal polynomial not binary");
        }
        std::vector<std::uint8_t> gn(g.size() + mp.size() - 1, 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i]) continue;
            for (std::size_t j = 0; j < mp.size(); ++j)
                gn[i + j] ^= static_cast<std::uint8_t>(g[i] & mp[j]);
        }
        g = std::move(gn);
    }

    const int deg_g = static_cast<int>(g.size()) - 1;
    const int k = q - deg_g;
    if (k < 1)
        throw UnsupportedParameters("make_code: dimension would be " + std::to_string(k));
    if (deg_g > 64)
        throw UnsupportedParameters("make_code: parity degree above 64 unsupported");

    CodeSpec spec;
    spec.m = m;
    spec.t = t;
    spec.t_prime = t;
    spec.extended = extended;
    spec.n = extended ? q + 1 : q;
    spec.k = k;
    spec.generator_poly = std::move(g);
    spec.field = field;
    spec.qsolve = build_qsolve(spec.field);
    for (int i = 0; i < deg_g; ++i)
        if (spec.generator_poly[i]) spec.generator_mask |= 1ULL << i;
    return spec;
}

CodeSpec make_code(int m, int t, bool extended) {
    return make_code(m, t, extended, build_field(m));
}

CodeSpec make_identity_code(int n) {
    if (n < 1) throw UnsupportedParameters("make_identity_code: n must be >= 1");
    CodeSpec spec;
    spec.n = n;
    spec.k = n;
    spec.t = 0;
    spec.t_prime = 0;
    spec.extended = false;
    spec.m = 0;
    spec.generator_poly = {1};
    spec.identity = true;
    return spec;
}

HardWord encode(const CodeSpec& spec, const HardWord& info) {
    if (info.size() != spec.k)
        throw LengthMismatch("encode: info length " + std::to_string(info.size()) +
                             ", expected " + std::to_string(spec.k));
    HardWord cw(spec.n);
    const int r = spec.parity_degree();
    // Remainder register for division by g(x); bit i = coefficient of x^i.
    std::uint64_t reg = 0;
    const std::uint64_t reg_mask = (r >= 64) ? ~0ULL : ((1ULL << r) - 1);
    for (int i = 0; i < spec.k; ++i) {
        const bool b = info.get(i);
        cw.set(i, b);
        if (r == 0) continue;
        const bool fb = b ^ ((reg >> (r - 1)) & 1ULL);
        reg = (reg << 1) & reg_mask;
        if (fb) reg ^= spec.generator_mask;
    }
    // Position k + j holds the coefficient of x^(r-1-j).
    for (int j = 0; j < r; ++j)
        cw.set(spec.k + j, (reg >> (r - 1 - j)) & 1ULL);
    if (spec.extended) {
        int par = 0;
        for (int i = 0; i < spec.n - 1; ++i) par ^= cw.get(i);
        cw.set(spec.n - 1, par);
    }
    return cw;
}

HardWord encode(const CodeSpec& spec, std::span<const std::uint8_t> info_bits) {
    if (static_cast<int>(info_bits.size()) != spec.k)
        throw LengthMismatch("encode: info length " + std::to_string(info_bits.size()) +
                             ", expected " + std::to_string(spec.k));
    HardWord info(spec.k);
    for (int i = 0; i < spec.k; ++i) info.set(i, info_bits[i] & 1);
    return encode(spec, info);
}

std::vector<std::uint32_t> syndromes(const CodeSpec& spec, const HardWord& word) {
    std::vector<std::uint32_t> s(2 * spec.t, 0);
    if (spec.identity) return s;
    const int nb = spec.n_base();
    const int q = spec.field.order();
    for (int i = 0; i < nb; ++i) {
        if (!word.get(i)) continue;
        const int d = nb - 1 - i; // polynomial degree of position i
        for (int j = 1; j <= 2 * spec.t; ++j)
            s[j - 1] ^= spec.field.exp_table[(static_cast<long long>(j) * d) % q];
    }
    return s;
}

bool check(const CodeSpec& spec, const HardWord& word) {
    if (word.size() != spec.n) return false;
    if (spec.identity) return true;
    for (std::uint32_t s : syndromes(spec, word))
        if (s != 0) return false;
    if (spec.extended) {
        int par = 0;
        for (int i = 0; i < spec.n; ++i) par ^= word.get(i);
        if (par != 0) return false;
    }
    return true;
}

std::optional<BddErrors> bdd_from_syndromes(const CodeSpec& spec,
                                            std::span<const std::uint32_t> synd) {
    const FieldTables& f = spec.field;
    const int two_t = 2 * spec.t;
    const int q = f.order();
    const int nb = spec.n_base();

    bool all_zero = true;
    for (int j = 0; j < two_t; ++j) all_zero &= (synd[j] == 0);
    if (all_zero) return BddErrors{};

    // Berlekamp-Massey over GF(2^m). Bails out as soon as the register
    // length exceeds t, since L never decreases.
    constexpr int kCap = 2 * kMaxBddErrors + 2;
    std::array<std::uint32_t, kCap> C{}, B{}, T{};
    C[0] = B[0] = 1;
    int L = 0, shift = 1;
    std::uint32_t b = 1;
    for (int n = 0; n < two_t; ++n) {
        std::uint32_t d = synd[n];
        for (int i = 1; i <= L; ++i)
            if (C[i] && synd[n - i]) d ^= gf_mul(C[i], synd[n - i], f);
        if (d == 0) {
            ++shift;
        } else if (2 * L <= n) {
            T = C;
            const std::uint32_t coef = gf_div(d, b, f);
            for (int i = 0; i + shift < kCap; ++i)
                if (B[i]) C[i + shift] ^= gf_mul(coef, B[i], f);
            L = n + 1 - L;
            if (L > spec.t) return std::nullopt;
            B = T;
            b = d;
            shift = 1;
        } else {
            const std::uint32_t coef = gf_div(d, b, f);
            for (int i = 0; i + shift < kCap; ++i)
                if (B[i]) C[i + shift] ^= gf_mul(coef, B[i], f);
            ++shift;
        }
    }
    if (C[L] == 0) return std::nullopt; // locator degree disagrees with L

    BddErrors out;
    out.count = L;
    // Error locators X_l = alpha^d with d the polynomial degree of the error
    // position; the locator sigma(x) = prod (1 + X_l x) has roots x = X_l^-1.
    if (L == 1) {
        const int d = f.log_table[C[1]];
        out.positions[0] = nb - 1 - d;
    } else if (L == 2) {
        const std::uint32_t s1 = C[1], s2 = C[2];
        if (s1 == 0) return std::nullopt; // repeated root
        const std::uint32_t s1sq = gf_mul(s1, s1, f);
        const std::uint32_t c = gf_div(s2, s1sq, f);
        const std::uint32_t z0 = spec.qsolve[c];
        if (z0 == kNoRoot) return std::nullopt;
        const std::uint32_t scale = gf_div(s1, s2, f); // roots x = scale * z
        for (int l = 0; l < 2; ++l) {
            const std::uint32_t x = gf_mul(scale, z0 ^ static_cast<std::uint32_t>(l), f);
            const int d = (q - f.log_table[x]) % q; // X = x^-1
            out.positions[l] = nb - 1 - d;
        }
    } else {
        // Chien search for locators of degree >= 3.
        std::array<std::uint32_t, kCap> reg{};
        for (int i = 1; i <= L; ++i) reg[i] = C[i];
        int found = 0;
        for (int j = 0; j < q && found < L; ++j) {
            // reg[i] = C[i] * alpha^(i*j); evaluate sigma(alpha^j).
            std::uint32_t v = 1;
            for (int i = 1; i <= L; ++i) {
                v ^= reg[i];
                if (reg[i]) {
                    const int e = f.log_table[reg[i]] + i;
                    reg[i] = f.exp_table[e >= q ? e - q : e];
                }
            }
            if (v == 0) {
                const int d = (q - j) % q;
                out.positions[found++] = nb - 1 - d;
            }
        }
        if (found != L) return std::nullopt;
    }

    // Confirm the flips actually zero every syndrome; guards against
    // degenerate locators produced by error patterns beyond radius t.
    for (int j = 1; j <= two_t; ++j) {
        std::uint32_t s = synd[j - 1];
        for (int l = 0; l < out.count; ++l) {
            const int d = nb - 1 - out.positions[l];
            s ^= f.exp_table[(static_cast<long long>(j) * d) % q];
        }
        if (s != 0) return std::nullopt;
    }
    return out;
}

std::optional<HardWord> bdd_decode(const CodeSpec& spec, const HardWord& word) {
    if (word.size() != spec.n)
        throw LengthMismatch("bdd_decode: word length " + std::to_string(word.size()) +
                             ", expected " + std::to_string(spec.n));
    if (spec.identity) return word;
    const auto synd = syndromes(spec, word);
    const auto errs = bdd_from_syndromes(spec, synd);
    if (!errs) return std::nullopt;
    HardWord out = word;
    for (int l = 0; l < errs->count; ++l) out.flip(errs->positions[l]);
    if (spec.extended) {
        int par = 0;
        for (int i = 0; i < spec.n - 1; ++i) par ^= out.get(i);
        out.set(spec.n - 1, par);
    }
    return out;
}

} // namespace tpcodec
