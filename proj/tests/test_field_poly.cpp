#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "conerank/error.hpp"
#include "conerank/field.hpp"
#include "conerank/poly_text.hpp"
#include "conerank/polynomial.hpp"
#include "conerank/rank.hpp"

using namespace conerank;

namespace {

Polynomial random_poly(std::mt19937_64& rng, Field field, std::size_t nvars) {
    std::vector<Term> terms;
    const int count = static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) {
        Monomial m(nvars);
        for (std::size_t v = 0; v < nvars; ++v) m.set(v, static_cast<std::uint32_t>(rng() % 3));
        terms.push_back({m, FieldElement(field, static_cast<long long>(rng() % 7) - 3)});
    }
    return Polynomial::from_terms(field, nvars, std::move(terms));
}

// Leibniz formula.
Polynomial permutation_determinant(const PolyMatrix& m) {
    std::vector<std::size_t> perm(m.dim());
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial sum(m.field(), m.nvars());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        auto term = Polynomial::constant(m.field(), m.nvars(), inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m.at(i, perm[i]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
    CHECK_THROWS_AS(Field::prime(4), InvalidInput);
    CHECK_THROWS_AS(Field::prime(1), InvalidInput);
    CHECK(Field::prime(101).to_string() == "GF(101)");
    CHECK(Field::rationals().to_string() == "QQ");
    CHECK(is_prime_u32(2147483647));
    CHECK_FALSE(is_prime_u32(3215031751));
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(101) == 2);

    const auto f5 = Field::prime(5);
    FieldElement a(f5, 3), b(f5, 4);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 2);
    CHECK((a / b).residue() == 2);
    CHECK(FieldElement(f5, -1).to_string() == "4");
    CHECK(a.pow(4).is_one());
    CHECK_THROWS(a / FieldElement(f5, 0));

    const auto q = Field::rationals();
    FieldElement x(q, mpq_class(1, 2)), y(q, mpq_class(-3, 4));
    CHECK((x + y).to_string() == "-1/4");
    CHECK((x / y).to_string() == "-2/3");
    CHECK(y.inverse().to_string() == "-4/3");
}

TEST_CASE("grevlex order, variable 0 most significant") {
    auto m = [](std::vector<std::uint32_t> e) { return Monomial(std::move(e)); };
    CHECK(grevlex_compare(m({0, 0, 2}), m({1, 0, 0})) > 0);   // degree first
    CHECK(grevlex_compare(m({1, 0, 0}), m({0, 1, 0})) > 0);   // x0 > x1
    CHECK(grevlex_compare(m({1, 1, 0}), m({2, 0, 0})) < 0);   // x0^2 > x0*x1
    CHECK(grevlex_compare(m({1, 0, 1}), m({0, 2, 0})) < 0);   // smaller last exponent wins
    CHECK(grevlex_compare(m({1, 2, 0}), m({1, 2, 0})) == 0);
}

TEST_CASE("polynomial ring axioms on random inputs") {
    std::mt19937_64 rng(1);
    for (auto field : {Field::rationals(), Field::prime(3)}) {
        for (int k = 0; k < 50; ++k) {
            auto a = random_poly(rng, field, 3), b = random_poly(rng, field, 3), c = random_poly(rng, field, 3);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a - a == Polynomial(field, 3));
            CHECK(a.pow(2) == a * a);
            CHECK(phi_square(a * b) == phi_square(a) * phi_square(b));
        }
    }
}

TEST_CASE("determinant matches the Leibniz formula") {
    std::mt19937_64 rng(2);
    for (auto field : {Field::rationals(), Field::prime(2), Field::prime(7)}) {
        for (std::size_t dim = 0; dim <= 4; ++dim) {
            PolyMatrix m(field, 3, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = random_poly(rng, field, 3);
            CHECK(determinant(m) == permutation_determinant(m));
        }
    }
    CHECK_THROWS_AS(determinant(PolyMatrix(Field::rationals(), 1, kMaxDeterminantDim + 1)), InvalidInput);
}

TEST_CASE("roots of unity against brute force") {
    for (std::uint64_t p : {2, 3, 5, 7, 13, 101}) {
        const auto field = Field::prime(p);
        for (std::size_t h = 1; h <= 6; ++h) {
            std::vector<std::uint64_t> brute;
            for (std::uint64_t x = 1; x < p; ++x)
                if (FieldElement(field, static_cast<long long>(x)).pow(h).is_one()) brute.push_back(x);
            if ((p - 1) % h != 0) {
                CHECK_THROWS_AS(roots_of_unity(h, field), Undefined);
                continue;
            }
            const auto roots = roots_of_unity(h, field);
            std::vector<std::uint64_t> got;
            for (const auto& r : roots) got.push_back(r.residue());
            CHECK(got.front() == 1);
            std::sort(got.begin(), got.end());
            CHECK(got == brute);
        }
    }
    const auto q = roots_of_unity(2, Field::rationals());
    CHECK(q[1].to_string() == "-1");
    CHECK_THROWS_AS(roots_of_unity(3, Field::rationals()), Undefined);
}

TEST_CASE("polynomial text round-trips") {
    const std::vector<std::string> names{"x0", "x1", "x2", "x3"};
    const auto q = Field::rationals();
    const auto f = parse_polynomial("x0*x1*x3 - x1^2 * x3^2 - x1*x0^2", names, q);
    CHECK(format_polynomial(f, names) == "-x1^2*x3^2 - x0^2*x1 + x0*x1*x3");
    CHECK(format_polynomial(parse_polynomial("3/2*x1 + 7 - 7", names, q), names) == "3/2*x1");
    CHECK(format_polynomial(Polynomial(q, 4), names) == "0");
    const auto gf = Field::prime(5);
    CHECK(format_polynomial(parse_polynomial("-x1 + 2", names, gf), names) == "4*x1 + 2");
    CHECK_THROWS_AS(parse_polynomial("x9", names, q), InvalidInput);
    CHECK_THROWS_AS(parse_polynomial("x1 +", names, q), InvalidInput);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 50; ++k) {
        auto g = random_poly(rng, q, 4);
        CHECK(parse_polynomial(format_polynomial(g, names), names, q) == g);
    }
}

TEST_CASE("matrix rank over both fields") {
    IntMatrix m{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    CHECK(matrix_rank(m, Field::rationals()) == 3);
    CHECK(matrix_rank(m, Field::prime(2)) == 2);
    CHECK(matrix_rank({}, Field::rationals()) == 0);
    CHECK(matrix_rank({{2, 4}, {1, 2}}, Field::rationals()) == 1);
}
