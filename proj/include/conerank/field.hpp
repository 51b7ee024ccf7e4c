#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace conerank {

/// The coefficient field: ℚ, or GF(p) for a prime p < 2^31.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    /// Throws InvalidInput unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// 0 selects ℚ, anything else GF(p).
    static Field from_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::prime; }
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    bool operator==(const Field&) const = default;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Deterministic Miller-Rabin, exact for n < 2^32.
bool is_prime_u32(std::uint64_t n);

/// Smallest generator of GF(p)^*.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// An element of a Field, always in canonical form: a residue in [0, p) or
/// a reduced fraction with positive denominator.
class FieldElement {
public:
    FieldElement(Field field, long long value = 0);
    FieldElement(Field field, const mpq_class& value);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue for GF(p); throws for ℚ.
    std::uint64_t residue() const;
    /// Value for ℚ; throws for GF(p).
    const mpq_class& rational() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    /// Throws std::domain_error on division by zero.
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const;

    /// "3", "-1/2"; GF(p) residues print in [0, p).
    std::string to_string() const;

private:
    void check_same(const FieldElement& o) const;

    Field field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace conerank
