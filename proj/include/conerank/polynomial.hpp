#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conerank/field.hpp"

namespace conerank {

/// Dense exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    std::size_t nvars() const { return exps_.size(); }
    std::uint64_t degree() const { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, std::uint32_t e);

    Monomial operator*(const Monomial& o) const;
    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    /// True when no variable occurs in both.
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Graded reverse lexicographic comparison; variable 0 is the most
/// significant. Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

struct Term {
    Monomial monomial;
    FieldElement coeff;
};

/// Sparse polynomial over a Field in a fixed number of variables. Terms are
/// kept in strictly descending grevlex order with nonzero coefficients.
class Polynomial {
public:
    Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    /// Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);
    static Polynomial constant(Field field, std::size_t nvars, const FieldElement& c);
    static Polynomial constant(Field field, std::size_t nvars, long long c) {
        return constant(field, nvars, FieldElement(field, c));
    }
    static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
    static Polynomial monomial(Field field, const Monomial& m, const FieldElement& c);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Nonzero constant.
    bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
    const Term& leading_term() const { return terms_.front(); }
    std::uint64_t total_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_term(const Monomial& m, const FieldElement& c) const;
    Polynomial pow(std::uint64_t e) const;
    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;

    /// Removes the leading term; no-op on zero.
    void pop_leading_term();
    /// Trusts that `terms` are strictly descending with nonzero coefficients.
    static Polynomial from_sorted_terms(Field field, std::size_t nvars, std::vector<Term> terms);

    bool operator==(const Polynomial& o) const;

private:
    void check_compatible(const Polynomial& o) const;

    Field field_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// f(x1,...,xn) -> f(x1^2,...,xn^2).
Polynomial phi_square(const Polynomial& f);

/// Moves variable i to variable target[i] in a ring with `nvars` variables.
Polynomial map_variables(const Polynomial& f, std::size_t nvars,
                         const std::vector<std::size_t>& target);

/// Square matrix of polynomials sharing field and ring.
class PolyMatrix {
public:
    PolyMatrix(Field field, std::size_t nvars, std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

private:
    Field field_;
    std::size_t nvars_;
    std::size_t dim_;
    std::vector<Polynomial> entries_;
};

inline constexpr std::size_t kMaxDeterminantDim = 12;

/// Laplace expansion along rows with memoization on the remaining column set.
/// The 0x0 determinant is 1. Throws InvalidInput above kMaxDeterminantDim.
Polynomial determinant(const PolyMatrix& m);

/// The h-th roots of unity ζ^0, ..., ζ^(h-1). Over GF(p) needs h | p-1 and
/// uses ζ = g^((p-1)/h) for the smallest primitive root g; over ℚ only h <= 2.
/// Throws Undefined when the roots are not available.
std::vector<FieldElement> roots_of_unity(std::size_t h, Field field);

}  // namespace conerank
