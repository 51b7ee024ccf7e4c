#include <doctest.h>

#include "conerank/error.hpp"
#include "conerank/random_complexes.hpp"
#include "conerank/sr_ideal.hpp"

using namespace conerank;

namespace {

SimplicialComplex four_cycle() {
    return SimplicialComplex::from_named_facets({{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x1", "x4"}},
                                                {"x1", "x2", "x3", "x4"});
}

}  // namespace

TEST_CASE("ideal of the four-cycle") {
    const auto c = four_cycle();
    const auto ideal = stanley_reisner_ideal(c);
    CHECK(ideal.generators() == std::vector<FaceSet>{FaceSet{0, 2}, FaceSet{1, 3}});
    CHECK(format_ideal(ideal, c.names()) == "x1*x3\nx2*x4\n");
    CHECK(height(c) == 2);
    CHECK(degree(c) == 4);
    CHECK(is_unmixed(c));
    CHECK(minimal_primes(c).size() == 4);
    CHECK(ara_lower_bound(c, Field::rationals()) == 2);
    CHECK(ideal.contains_support(FaceSet{0, 1, 2}));
    CHECK_FALSE(ideal.contains_support(FaceSet{0, 1}));
}

TEST_CASE("cone over a vertex of the four-cycle has height 3") {
    const auto c = four_cycle();
    const auto cone = cone_union(c, c.face_from_names({"x4"}), "x0");
    CHECK(height(cone) == 3);
    CHECK(ara_lower_bound(cone, Field::rationals()) == 3);
}

TEST_CASE("simplex and the empty complex") {
    const auto s = elementary_simplex(3);
    CHECK(stanley_reisner_ideal(s).is_zero());
    CHECK(height(s) == 0);
    SimplicialComplex empty;
    CHECK(stanley_reisner_ideal(empty).is_zero());
    CHECK(height(empty) == 0);
}

TEST_CASE("ideal and complex are inverse to each other") {
    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const auto c = random_complex(rng, 1 + k % 7);
        const auto ideal = stanley_reisner_ideal(c);
        CHECK(complex_from_ideal(ideal, c.names()) == c);
        for (auto f : c.faces()) CHECK_FALSE(ideal.contains_support(f));
        for (auto g : ideal.generators()) CHECK_FALSE(c.is_face(g));
        // Minimal primes are complements of facets; each prime meets every generator.
        for (auto p : minimal_primes(c))
            for (auto g : ideal.generators()) CHECK(p.intersects(g));
    }
    CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal(2, {FaceSet{0}}), {"a", "b"}), InvalidInput);
}

TEST_CASE("polynomial membership is term-wise") {
    const auto c = four_cycle();
    const auto ideal = stanley_reisner_ideal(c);
    const auto q = Field::rationals();
    const auto x = [&](std::size_t i) { return Polynomial::variable(q, 4, i); };
    CHECK(ideal.contains(x(0) * x(2) + x(1) * x(3) * x(0)));
    CHECK_FALSE(ideal.contains(x(0) * x(2) + x(0) * x(1)));
    CHECK(ideal.generator_polynomials(q).size() == 2);
}
