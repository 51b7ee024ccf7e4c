#include <doctest.h>

#include "conerank/cone_generators.hpp"
#include "conerank/error.hpp"
#include "conerank/hochster.hpp"
#include "conerank/poly_text.hpp"
#include "conerank/random_complexes.hpp"
#include "conerank/sr_ideal.hpp"

using namespace conerank;

namespace {

SimplicialComplex four_cycle() {
    return SimplicialComplex::from_named_facets({{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x1", "x4"}},
                                                {"x1", "x2", "x3", "x4"});
}

std::vector<std::string> texts(const RadicalPresentation& p) {
    std::vector<std::string> out;
    for (const auto& f : p.polynomials) out.push_back(format_polynomial(f, p.names));
    return out;
}

RadicalPresentation example(std::uint64_t characteristic, ConeOptions options = {}) {
    const auto c = four_cycle();
    return cone_generators(c, c.face_from_names({"x4"}), "x0", std::nullopt,
                           Field::from_characteristic(characteristic), options);
}

}  // namespace

TEST_CASE("frame of the four-cycle example") {
    const auto c = four_cycle();
    const auto frame = make_frame(c, c.face_from_names({"x4"}));
    CHECK(frame.facet == c.face_from_names({"x3", "x4"}));
    CHECK(frame.s == 2);
    CHECK(frame.t == 3);
    CHECK(frame.x0 == 0);
    CHECK(frame.order == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK_THROWS_AS(make_frame(c, c.face_from_names({"x1", "x3"})), InvalidInput);
    CHECK_THROWS_AS(make_frame(elementary_simplex(2), FaceSet{0, 1}), InvalidInput);
}

TEST_CASE("coefficient split and squaring") {
    const auto c = four_cycle();
    const auto frame = make_frame(c, c.face_from_names({"x4"}));
    const std::vector<std::string> names{"x0", "x1", "x2", "x3", "x4"};
    const auto q = Field::rationals();
    const auto w = build_qbar(parse_polynomial("x1*x3 + x2*x3*x4", names, q), frame);
    CHECK(format_polynomial(w.qbar, names) == "x2^2*x3^2*x4^2 + x1^2*x3^2");
    REQUIRE(w.abar.size() == 2);
    CHECK(format_polynomial(w.abar[0], names) == "x1*x3^2");
    CHECK(format_polynomial(w.abar[1], names) == "x2*x3^2*x4^2");
    CHECK_THROWS_AS(split_coefficients(parse_polynomial("x3*x4", names, q), frame), InvalidInput);
}

TEST_CASE("example over the rationals") {
    const auto p = example(0);
    CHECK(p.kind == PresentationCase::case22);
    CHECK(texts(p) == std::vector<std::string>{
                          "x1*x2*x3^2*x4^2 + x0^2*x1*x3^2 + x0*x1*x3^3 + x0^2*x2*x4^2 - x0*x2*x3*x4^2 - x0^2*x3^2",
                          "x1^2*x3^2 + x0^2*x1 - x0*x1*x3",
                          "x2^2*x4^2 + x0^2*x2 + x0*x2*x3"});
    CHECK(p.verification->pass());
    CHECK(format_presentation(p).rfind("# case=case22 field=QQ h=2 s=2 t=3 omega=[1,-1]\n", 0) == 0);
}

TEST_CASE("example in characteristic 2") {
    const auto p = example(2);
    CHECK(p.kind == PresentationCase::case21);
    CHECK(p.ell == 2u);
    const auto t = texts(p);
    REQUIRE(t.size() == 3);
    CHECK(t[1] == "x1^2*x3^2 + x0^2*x1 + x0*x1*x3");
    CHECK(t[2] == "x2^2*x4^2 + x0^2*x2 + x0*x2*x3");
    CHECK(p.verification->pass());
}

TEST_CASE("example in characteristics 3 and 5") {
    for (std::uint64_t ch : {3, 5}) {
        const auto p = example(ch);
        CHECK(p.kind == PresentationCase::case21);
        CHECK(p.ell == 1u);
        CHECK(p.size() == 3);
        CHECK(p.verification->pass());
        ConeOptions roots;
        roots.case_choice = CaseChoice::case22;
        const auto p22 = example(ch, roots);
        CHECK(p22.kind == PresentationCase::case22);
        CHECK(p22.verification->pass());
    }
}

TEST_CASE("case overrides") {
    ConeOptions one;
    one.case_choice = CaseChoice::case1;
    CHECK_THROWS_AS(example(0, one), InvalidInput);
    ConeOptions c21;
    c21.case_choice = CaseChoice::case21;
    CHECK_THROWS_AS(example(0, c21), Undefined);
    ConeOptions prefer;
    prefer.prefer_roots = true;
    CHECK(example(3, prefer).kind == PresentationCase::case22);
    CHECK(example(2, prefer).kind == PresentationCase::case21);  // 2 does not divide 1
}

TEST_CASE("case 1 over an edge") {
    const auto c = four_cycle();
    const auto f = c.face_from_names({"x1", "x2"});
    const auto p = cone_generators(c, f, "x0", std::nullopt, Field::rationals());
    CHECK(p.kind == PresentationCase::case1);
    CHECK(p.t == 2);
    CHECK(p.size() == 3);
    CHECK(p.verification->pass());
}

TEST_CASE("simplex base gives monomials") {
    const auto s = elementary_simplex(3);
    const auto p = cone_generators(s, s.face_from_names({"x1"}), "x0", std::nullopt, Field::rationals());
    CHECK(p.kind == PresentationCase::degenerate_h0);
    CHECK(texts(p) == std::vector<std::string>{"x0*x2", "x0*x3"});
    CHECK(p.verification->pass());
}

TEST_CASE("a non-monomial witness is accepted and a wrong one rejected") {
    const auto c = four_cycle();
    const auto f = c.face_from_names({"x4"});
    const auto q = Field::rationals();
    // Generates (x1*x3, x2*x4) up to radical.
    std::vector<Polynomial> witness{parse_polynomial("x1^2*x3", c.names(), q),
                                    parse_polynomial("x2*x4^3 + x1*x2*x3", c.names(), q)};
    const auto p = cone_generators(c, f, "x0", witness, q);
    CHECK(p.verification->pass());
    CHECK(p.size() == 3);

    std::vector<Polynomial> bad{parse_polynomial("x1*x3", c.names(), q)};
    CHECK_THROWS_AS(cone_generators(c, f, "x0", bad, q), VerificationFailure);
}

TEST_CASE("size law on random cones") {
    Rng rng(41);
    std::size_t checked = 0;
    for (int k = 0; k < 60; ++k) {
        const auto c = random_complex(rng, 2 + k % 5);
        if (c.is_simplex()) continue;
        const auto f = random_proper_face(rng, c);
        for (auto field : {Field::prime(2), Field::prime(3)}) {
            ConeOptions options;
            options.groebner.max_seconds = 10;
            RadicalPresentation p;
            try {
                p = cone_generators(c, f, "new", std::nullopt, field, options);
            } catch (const Undefined&) {
                continue;  // p^l too large for Case 2.1
            } catch (const Inconclusive&) {
                continue;
            }
            const std::size_t h = stanley_reisner_ideal(c).generators().size();
            const std::size_t t = c.vertex_count() - f.size();
            CHECK(p.size() == std::max(h + 1, t));
            CHECK(p.verification->pass());
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("folding along a plan") {
    // Path a-b-c-d built from the edge {c,d}.
    BuildPlan plan;
    plan.base = SimplicialComplex::from_named_facets({{"c", "d"}}, {"c", "d"});
    plan.steps.push_back({FaceSet{0}, "b", 0});
    plan.steps.push_back({FaceSet{0}, "a", 0});
    const auto path = replay_plan(plan);
    CHECK(path.names() == std::vector<std::string>{"a", "b", "c", "d"});
    const auto p = dtree_sci_generators(plan, Field::rationals());
    CHECK(p.size() == height(path));
    CHECK(p.verification->pass());

    const auto g = generalized_tree_generators(path, Field::prime(3));
    CHECK(g.size() == proj_dim(path, Field::prime(3)));
    CHECK_THROWS_AS(generalized_tree_generators(four_cycle(), Field::rationals()), Undefined);

    BuildPlan not_subfacet = plan;
    not_subfacet.steps[1].face = FaceSet{};
    CHECK_THROWS_AS(dtree_sci_generators(not_subfacet, Field::rationals()), InvalidInput);
}

TEST_CASE("lemma-3 certificate") {
    const auto p = lemma3_sci_generators(boundary_complex(4), Field::rationals());
    CHECK(texts(p) == std::vector<std::string>{"x1*x2*x3*x4"});
    CHECK(p.verification->pass());
    CHECK_THROWS_AS(lemma3_sci_generators(four_cycle(), Field::rationals()), Undefined);
}

TEST_CASE("determinant built from x1^2*x3, x2^2*x4 entries is rejected") {
    // This variant vanishes at x0 = 1, x2 = x4 = 0, x3 = t, x1 = (t-1)/t^2 with
    // t a root of t^5 - t^3 + t^2 + t - 1, where x0*x1 does not.
    const auto c = four_cycle();
    const auto f = c.face_from_names({"x4"});
    const auto p = cone_generators(c, f, "x0", std::nullopt, Field::rationals());
    const auto cone = cone_union(c, f, "x0");
    std::vector<Polynomial> variant{
        parse_polynomial("x1^2*x2^2*x3*x4 + x0^2*x2^2*x4 - x0*x2^2*x3*x4 + x0^2*x1^2*x3 + x0*x1^2*x3^2 - x0^2*x3^2",
                         cone.names(), Field::rationals()),
        p.polynomials[1], p.polynomials[2]};
    const auto report = verify_radical_presentation(variant, stanley_reisner_ideal(cone));
    CHECK(report.inclusion);
    CHECK_FALSE(report.radical);
    CHECK(report.failing_generator == cone.face_from_names({"x0", "x1"}));
}
