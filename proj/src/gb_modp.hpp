#pragma once

// Buchberger kernel for prime fields: packed exponents, 32-bit residues,
// geobucket reduction. Used by groebner.cpp when the ring is small enough.

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conerank/groebner.hpp"
#include "conerank/polynomial.hpp"

namespace conerank::modp {

inline constexpr std::size_t kMaxVars = 16;
/// Keeps every 16-bit lane below 2^15, which the divisibility test needs.
inline constexpr std::uint32_t kMaxDegree = (1u << 15) - 1;

// Lane r holds the exponent of variable nvars-1-r; lane 0 is the top 16 bits
// of w[0]. Comparing words in order is then the reverse-lex tie-break.
struct Mono {
    std::array<std::uint64_t, 4> w{};
    std::uint32_t deg = 0;

    bool operator==(const Mono& o) const { return deg == o.deg && w == o.w; }
};

// grevlex: larger degree first, then smaller reverse-lex words.
inline int compare(const Mono& a, const Mono& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t k = 0; k < 4; ++k)
        if (a.w[k] != b.w[k]) return a.w[k] < b.w[k] ? 1 : -1;
    return 0;
}

struct Poly {
    // Descending order.
    std::vector<Mono> mono;
    std::vector<std::uint32_t> coeff;
    std::uint32_t sugar = 0;

    bool empty() const { return mono.empty(); }
    std::size_t size() const { return mono.size(); }
};

class Ring {
public:
    Ring(std::uint32_t p, std::size_t nvars);

    std::uint32_t p() const { return p_; }
    std::size_t nvars() const { return nvars_; }

    Mono pack(const Monomial& m) const;
    Monomial unpack(const Mono& m) const;
    std::uint32_t exponent(const Mono& m, std::size_t var) const;

    /// Nullopt when some exponent does not fit.
    std::optional<Poly> convert(const Polynomial& f) const;
    Polynomial back(const Poly& f, Field field) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t p_;
    std::size_t nvars_;
};

Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

struct Result {
    std::vector<Poly> basis;  // reduced, monic, ascending leading monomials
    bool complete = true;
    bool unit = false;
    std::size_t pairs_reduced = 0;
};

/// `deadline` bounds wall time; running past it leaves complete = false.
Result buchberger(const Ring& ring, std::vector<Poly> generators, std::size_t max_pairs,
                  std::optional<std::chrono::steady_clock::time_point> deadline);

}  // namespace conerank::modp
