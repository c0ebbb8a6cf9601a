#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tpcodec/gf2m.hpp"

namespace tpcodec {

// Fixed-length binary word with packed storage. Bit i of the codeword is
// bit (i % 64) of word (i / 64).
class HardWord {
public:
    HardWord() = default;
    explicit HardWord(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(int i, bool v) {
        const std::uint64_t mask = 1ULL << (i & 63);
        if (v) w_[i >> 6] |= mask;
        else   w_[i >> 6] &= ~mask;
    }
    void flip(int i) { w_[i >> 6] ^= 1ULL << (i & 63); }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    bool operator==(const HardWord& o) const { return n_ == o.n_ && w_ == o.w_; }

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
        for (std::uint64_t x : w_) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    int weight() const;
    int distance(const HardWord& o) const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Parameters and precomputed decoder structure of one (extended) BCH code.
// Immutable after construction; decode operations are pure functions.
struct CodeSpec {
    int n = 0;        // code length in bits (n_base, or n_base + 1 if extended)
    int k = 0;        // dimension
    int t = 0;        // guaranteed correction radius of the base code
    int t_prime = 0;  // correction radius of the code punctured at one position
    bool extended = false;
    int m = 0;        // field degree; n_base = 2^m - 1
    std::vector<std::uint8_t> generator_poly; // coeff of x^i at index i, degree n_base - k
    FieldTables field;

    // Decoder tables (derived, not part of the code identity):
    std::uint64_t generator_mask = 0;       // low deg(g) coefficients of g, packed
    std::vector<std::uint32_t> qsolve;      // qsolve[c] = z with z^2 + z = c, or kNoRoot
    bool identity = false;                  // degenerate n = k passthrough code

    int n_base() const { return extended ? n - 1 : n; }
    int parity_degree() const { return n_base() - k; }
};

constexpr std::uint32_t kNoRoot = 0xffffffffu;

// Narrow-sense BCH over GF(2^m) with designed correction radius t, optionally
// extended by one overall even-parity bit. The generator polynomial is the
// LCM of the minimal polynomials of alpha^1 .. alpha^2t.
CodeSpec make_code(int m, int t, bool extended);
CodeSpec make_code(int m, int t, bool extended, const FieldTables& field);

// Passthrough code with n = k (no parity, no correction). Used by the
// simulation harness for uncoded calibration runs.
CodeSpec make_identity_code(int n);

// Systematic encoding: info bits occupy positions [0, k), parity bits follow,
// and the extension bit (if any) makes the overall parity even.
HardWord encode(const CodeSpec& spec, const HardWord& info);
HardWord encode(const CodeSpec& spec, std::span<const std::uint8_t> info_bits);

// True iff all 2t syndromes vanish and, for extended codes, overall parity is even.
bool check(const CodeSpec& spec, const HardWord& word);

// Syndromes S_j = r(alpha^j), j = 1..2t, over the base positions (the
// extension bit never enters the syndrome machinery).
std::vector<std::uint32_t> syndromes(const CodeSpec& spec, const HardWord& word);

constexpr int kMaxBddErrors = 8;

struct BddErrors {
    int count = 0;
    std::array<int, kMaxBddErrors> positions{}; // vector indices into the base word
};

// Core bounded-distance solve from syndromes: Berlekamp-Massey for the error
// locator followed by root finding (closed-form for degree <= 2, Chien search
// beyond). Returns the flip positions, or nullopt when no codeword lies
// within Hamming radius t of the base word.
std::optional<BddErrors> bdd_from_syndromes(const CodeSpec& spec,
                                            std::span<const std::uint32_t> synd);

// Bounded-distance decoding of a full word. For extended codes the base
// positions are decoded algebraically and the parity bit is recomputed from
// the result; the parity position is never an error location. The returned
// word always passes check().
std::optional<HardWord> bdd_decode(const CodeSpec& spec, const HardWord& word);

} // namespace tpcodec
