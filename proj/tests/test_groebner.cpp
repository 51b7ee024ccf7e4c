#include <doctest.h>

#include <random>

#include "conerank/error.hpp"
#include "conerank/groebner.hpp"
#include "conerank/poly_text.hpp"

using namespace conerank;

namespace {

const std::vector<std::string> kNames{"x", "y", "z", "w"};

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, Field field,
                                  const std::vector<std::string>& names = kNames) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, names, field));
    return out;
}

std::vector<std::string> format_all(const std::vector<Polynomial>& ps, const std::vector<std::string>& names = kNames) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_polynomial(p, names));
    return out;
}

Polynomial random_poly(std::mt19937_64& rng, Field field, std::size_t nvars, std::size_t used) {
    std::vector<Term> terms;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
        Monomial m(nvars);
        for (std::size_t v = 0; v < used; ++v) m.set(v, static_cast<std::uint32_t>(rng() % 3));
        terms.push_back({m, FieldElement(field, static_cast<long long>(rng() % 11) - 5)});
    }
    return Polynomial::from_terms(field, nvars, std::move(terms));
}

// Same polynomials with unused variables appended.
std::vector<Polynomial> pad(const std::vector<Polynomial>& ps, std::size_t nvars) {
    std::vector<std::size_t> target(ps.front().nvars());
    for (std::size_t i = 0; i < target.size(); ++i) target[i] = i;
    std::vector<Polynomial> out;
    for (const auto& p : ps) out.push_back(map_variables(p, nvars, target));
    return out;
}

bool is_groebner(const std::vector<Polynomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto& a = basis[i].leading_term().monomial;
            const auto& b = basis[j].leading_term().monomial;
            const auto l = a.lcm(b);
            const FieldElement one(basis[i].field(), 1);
            const auto s = basis[i].times_term(l / a, one) - basis[j].times_term(l / b, one);
            if (!normal_form(s, basis).is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("twisted cubic") {
    const std::vector<std::string> gens{"x*z - y^2", "y*w - z^2", "x*w - y*z"};
    auto run = buchberger(parse_all(gens, Field::rationals()));
    REQUIRE(run.complete);
    CHECK(format_all(run.basis.basis) == std::vector<std::string>{"z^2 - y*w", "y*z - x*w", "y^2 - x*z"});
    run = buchberger(parse_all(gens, Field::prime(32003)));
    CHECK(format_all(run.basis.basis) ==
          std::vector<std::string>{"z^2 + 32002*y*w", "y*z + 32002*x*w", "y^2 + 32002*x*z"});
}

TEST_CASE("unit ideal and membership") {
    const auto q = Field::rationals();
    const auto gens = parse_all({"x*y - 1", "x"}, q);
    CHECK(buchberger(gens).basis.is_unit());
    const auto ci = parse_all({"x^2 - y", "y^2 - z"}, q);
    CHECK(in_ideal(parse_polynomial("x^4 - z", kNames, q), ci));
    CHECK_FALSE(in_ideal(parse_polynomial("x - z", kNames, q), ci));
    CHECK(in_radical(parse_polynomial("x", kNames, q), parse_all({"x^3"}, q)));
    CHECK(in_radical(parse_polynomial("x*y", kNames, q), parse_all({"x^2*y", "x*y^3"}, q)));
    CHECK_FALSE(in_radical(parse_polynomial("y", kNames, q), parse_all({"x^2*y", "x*y^3"}, q)));
}

TEST_CASE("prime-field kernel agrees with the generic engine") {
    // 17 variables push the computation onto the generic path.
    std::mt19937_64 rng(8);
    for (std::uint64_t p : {2, 3, 101, 32003}) {
        const auto field = Field::prime(p);
        for (int k = 0; k < 25; ++k) {
            std::vector<Polynomial> gens;
            for (int g = 0; g < 3; ++g) gens.push_back(random_poly(rng, field, 4, 4));
            const auto fast = buchberger(gens);
            const auto slow = buchberger(pad(gens, 17));
            REQUIRE(fast.complete);
            REQUIRE(slow.complete);
            if (fast.basis.basis.empty()) CHECK(slow.basis.basis.empty());
            else CHECK(pad(fast.basis.basis, 17) == slow.basis.basis);
            CHECK(is_groebner(fast.basis.basis));
        }
    }
}

TEST_CASE("budget exhaustion is reported") {
    const auto q = Field::rationals();
    GroebnerOptions tiny;
    tiny.max_pairs = 1;
    const auto gens = parse_all({"x*z - y^2", "y*w - z^2", "x*w - y*z"}, q);
    CHECK_FALSE(buchberger(gens, tiny).complete);
    CHECK_THROWS_AS(in_ideal(parse_polynomial("x^5*w - y^6", kNames, q), parse_all({"x^3 - y*z*w", "y^3 - x*z^2", "z^2*w - x*y^2"}, q), tiny),
                    Inconclusive);
}

TEST_CASE("radical verification reports what failed") {
    const auto q = Field::rationals();
    const std::vector<std::string> names{"a", "b", "c"};
    const MonomialIdeal ideal(3, {FaceSet{0, 1}, FaceSet{1, 2}});  // (ab, bc) = (b) ∩ (a, c)

    auto ok = verify_radical_presentation(parse_all({"a^2*b^2 + b^3*c", "b*c"}, q, names), ideal);
    CHECK(ok.pass());

    auto outside = verify_radical_presentation(parse_all({"a*b + a*c"}, q, names), ideal);
    CHECK_FALSE(outside.inclusion);
    CHECK(outside.offending_polynomial == 0u);
    CHECK(format_monomial(*outside.offending_term, names) == "a*c");

    auto too_small = verify_radical_presentation(parse_all({"a*b*c"}, q, names), ideal);
    CHECK(too_small.inclusion);
    CHECK_FALSE(too_small.radical);
    CHECK(too_small.failing_generator == FaceSet{0, 1});

    CHECK(report_to_json(ok, names) ==
          "{\n  \"pass\": true,\n  \"inclusion\": {\n    \"pass\": true,\n    \"offending_polynomial\": null,\n"
          "    \"offending_term\": null\n  },\n  \"radical\": {\n    \"pass\": true,\n    \"inconclusive\": false,\n"
          "    \"failing_generator\": null,\n    \"undecided_generator\": null\n  },\n  \"s_pairs\": " +
              std::to_string(ok.pairs_reduced) + "\n}");
    CHECK_THROWS_AS(verify_radical_presentation(parse_all({"x"}, q), ideal), InvalidInput);
}

TEST_CASE("normal forms are fully reduced") {
    const auto q = Field::rationals();
    const auto basis = buchberger(parse_all({"x*z - y^2", "y*w - z^2", "x*w - y*z"}, q)).basis.basis;
    std::mt19937_64 rng(9);
    for (int k = 0; k < 30; ++k) {
        const auto f = random_poly(rng, q, 4, 4);
        const auto r = normal_form(f, basis);
        for (const auto& t : r.terms())
            for (const auto& g : basis) CHECK_FALSE(g.leading_term().monomial.divides(t.monomial));
        CHECK(in_ideal(f - r, basis));
    }
}
