// One PASS/FAIL line per acceptance criterion. Exit status counts failures
// that were not announced with --expect-fail N.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "conerank/cli.hpp"
#include "conerank/cone_generators.hpp"
#include "conerank/error.hpp"
#include "conerank/hochster.hpp"
#include "conerank/poly_text.hpp"
#include "conerank/random_complexes.hpp"
#include "conerank/sr_ideal.hpp"

using namespace conerank;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) detail += (pass ? "" : "; ") + what;
        pass = pass && ok;
    }
};

// Construction facts gathered for the size law and the lower-bound law.
struct Construction {
    std::string label;
    std::size_t size = 0;
    std::size_t h = 0;
    std::size_t t = 0;
    std::size_t lower_bound = 0;
    bool witness_is_pd = false;  // |witness| = pd of the base complex
};

std::vector<Construction> constructions;

SimplicialComplex four_cycle() {
    return SimplicialComplex::from_named_facets({{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x1", "x4"}},
                                                {"x1", "x2", "x3", "x4"});
}

const std::string kFourCyclePath = std::string(CONERANK_TEST_DATA) + "/four_cycle.json";

// Determinant generators as printed for the example, built from the x1^2*x3 / x2^2*x4 matrix entries.
const std::string kPrintedDetQQ =
    "x1^2*x2^2*x3*x4+x0^2*x2^2*x4-x0*x2^2*x3*x4+x0^2*x1^2*x3+x0*x1^2*x3^2-x0^2*x3^2";
const std::string kPrintedDetGF2 =
    "x0^4*x1^2*x2^2*x3*x4 + x0^2*x1^2*x2^2*x3^3*x4 + x0^5*x1^2*x3^2 + x0^4*x1^2*x3^3 + x0^3*x1^2*x3^4 + "
    "x0^6*x1^2*x3 + x0^6*x2^2*x4 + x0^5*x2^2*x3*x4 + x0^4*x2^2*x3^2*x4 + x0^3*x2^2*x3^3*x4 + x0^4*x3^4";

std::vector<std::string> lines_after_header(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("verification:", 0) == 0) break;
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

// Runs cmd_construct on the example and checks the printed-determinant variant.
Outcome example_criterion(std::uint64_t characteristic, const std::string& second, const std::string& third,
                          const std::string& printed_det, std::optional<std::uint64_t> ell) {
    Outcome o;
    const auto start = Clock::now();
    RunConfig config;
    config.field = Field::from_characteristic(characteristic);
    const auto result = cmd_construct(kFourCyclePath, "x4", "", config);
    o.require(result.exit_code == kExitOk, "construct exit code " + std::to_string(result.exit_code));
    const auto polys = lines_after_header(result.out);
    o.require(polys.size() == 3, "expected 3 polynomials, got " + std::to_string(polys.size()));
    if (polys.size() == 3) {
        o.require(polys[1] == second, "generator 2 is '" + polys[1] + "'");
        o.require(polys[2] == third, "generator 3 is '" + polys[2] + "'");
    }
    o.require(result.out.find("verification: pass") != std::string::npos, "proof-rule variant not verified");

    const auto c = four_cycle();
    const auto f = c.face_from_names({"x4"});
    const auto pres = cone_generators(c, f, "x0", std::nullopt, config.field);
    if (ell) o.require(pres.ell == ell, "unexpected ell");
    const auto cone = cone_union(c, f, "x0");
    std::vector<Polynomial> printed{parse_polynomial(printed_det, cone.names(), config.field),
                                    pres.polynomials.at(1), pres.polynomials.at(2)};
    const auto report = verify_radical_presentation(printed, stanley_reisner_ideal(cone));
    std::string failing;
    if (report.failing_generator)
        for (auto i : report.failing_generator->indices()) failing += (failing.empty() ? "" : "*") + cone.name(i);
    o.require(report.pass(), "printed determinant variant not verified (" +
                                 (report.inclusion ? "radical misses " + failing : std::string("inclusion fails")) +
                                 "); proof-rule variant and generators 2-3 fine");

    constructions.push_back({"example char " + std::to_string(characteristic), pres.size(), pres.h, pres.t,
                             ara_lower_bound(cone, config.field),
                             pres.h == proj_dim(c, config.field)});
    const double secs = since(start);
    o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "3 polynomials, both determinant variants verified";
    return o;
}

Outcome criterion1() {
    return example_criterion(0, "x1^2*x3^2 + x0^2*x1 - x0*x1*x3", "x2^2*x4^2 + x0^2*x2 + x0*x2*x3", kPrintedDetQQ,
                             std::nullopt);
}

Outcome criterion2() {
    return example_criterion(2, "x1^2*x3^2 + x0^2*x1 + x0*x1*x3", "x2^2*x4^2 + x0^2*x2 + x0*x2*x3", kPrintedDetGF2,
                             2);
}

Outcome criterion3() {
    Outcome o;
    const auto start = Clock::now();
    const auto c = four_cycle();
    const auto f = c.face_from_names({"x4"});
    std::string cases;
    for (std::uint64_t ch : {0, 2, 3, 5}) {
        const auto field = Field::from_characteristic(ch);
        const auto p = cone_generators(c, f, "x0", std::nullopt, field, {.throw_on_failure = false});
        o.require(p.verification->pass(), "verifier rejects " + field.to_string());
        cases += (cases.empty() ? "" : ", ") + field.to_string() + ":" + to_string(p.kind);
        constructions.push_back({"example " + field.to_string(), p.size(), p.h, p.t,
                                 ara_lower_bound(cone_union(c, f, "x0"), field), p.h == proj_dim(c, field)});
    }
    const double secs = since(start);
    o.require(secs < 30.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = cases;
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto start = Clock::now();
    Rng rng(2024);
    const std::size_t count = 250;
    std::size_t failures = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const auto c = random_complex(rng, 1 + rng() % 7);
        const auto f = random_proper_face(rng, c);
        const auto cone = cone_union(c, f, "x0");
        for (auto field : {Field::prime(2), Field::rationals()}) {
            const auto lhs = proj_dim(cone, field);
            const auto rhs = std::max(proj_dim(c, field) + 1, c.vertex_count() - f.size());
            if (lhs != rhs) ++failures;
        }
    }
    o.require(failures == 0, std::to_string(failures) + " mismatches");
    const double secs = since(start);
    o.require(secs < 120.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(count) + " complexes x {GF(2), QQ}, seed 2024";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto start = Clock::now();
    Rng rng(2025);
    std::size_t tested = 0, trees = 0, failures = 0;
    while (tested < 250) {
        const auto c = random_complex(rng, 1 + rng() % 7);
        if (c.is_simplex()) continue;
        ++tested;
        const bool peels = peel_generalized_tree(c).has_value();
        trees += peels;
        if (peels != has_2_linear_resolution(c, Field::rationals())) ++failures;
    }
    o.require(failures == 0, std::to_string(failures) + " mismatches");
    o.require(trees > 0 && trees < tested, "sample does not exercise both sides");
    const double secs = since(start);
    o.require(secs < 120.0, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(tested) + " complexes (" + std::to_string(trees) + " generalized trees), seed 2025";
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto start = Clock::now();
    Rng rng(2026);
    const std::size_t count = 50;
    const auto field = Field::prime(101);
    ConeOptions options;
    options.prefer_roots = true;
    options.groebner.max_seconds = 0.2;
    std::size_t verified = 0, inconclusive = 0, wrong = 0;
    std::size_t deepest_verified = 0;
    std::string first_problem;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t d = 1 + rng() % 3;
        const std::size_t steps = rng() % 7;
        const auto complex = random_d_tree(rng, d, steps);
        const auto peel = peel_generalized_tree(complex);
        if (!peel) {
            ++wrong;
            continue;
        }
        const auto plan = plan_from_peel(*peel, BuildPlan::Base::simplex);
        try {
            const auto p = dtree_sci_generators(plan, field, options);
            const bool ok = p.size() == height(complex) && p.verification->pass();
            if (ok) {
                ++verified;
                deepest_verified = std::max(deepest_verified, steps);
            } else {
                ++wrong;
            }
            if (!plan.steps.empty()) {
                BuildPlan before = plan;
                before.steps.pop_back();
                const auto base = replay_plan(before);
                constructions.push_back({"d-tree #" + std::to_string(k), p.size(), p.h, p.t,
                                         ara_lower_bound(complex, field), p.h == proj_dim(base, field)});
            }
        } catch (const Inconclusive&) {
            ++inconclusive;
            if (first_problem.empty())
                first_problem = "d=" + std::to_string(d) + " steps=" + std::to_string(steps) + " inconclusive";
        } catch (const Error& e) {
            ++wrong;
            if (first_problem.empty()) first_problem = e.what();
        }
    }
    const double secs = since(start);
    o.require(verified == count, std::to_string(verified) + "/" + std::to_string(count) + " verified, " +
                                     std::to_string(inconclusive) + " inconclusive, " + std::to_string(wrong) +
                                     " wrong; deepest verified fold " + std::to_string(deepest_verified) +
                                     " steps; first: " + first_problem);
    o.require(secs < 180.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(count) + " d-trees verified, seed 2026";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& c : constructions) {
        if (c.h == 0) continue;
        ++checked;
        o.require(c.size == std::max(c.h + 1, c.t), c.label + ": size " + std::to_string(c.size));
    }
    o.require(checked > 0, "no constructions recorded");
    if (o.pass) o.detail = std::to_string(checked) + " constructions";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const auto start = Clock::now();
    const auto table = graded_betti(four_cycle(), Field::rationals());
    // Koszul complex on two quadrics: 1, 2 in degree 2, 1 in degree 4.
    const std::map<std::pair<int, int>, std::uint64_t> koszul{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}};
    o.require(table.entries() == koszul, "table differs from the Koszul oracle");
    o.require(regularity(table) == 3, "reg " + std::to_string(regularity(table)));
    const double secs = since(start);
    o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "beta_{1,2}=2, beta_{2,4}=1, reg 3";
    return o;
}

Outcome criterion9() {
    Outcome o;
    const auto start = Clock::now();
    const auto b4 = boundary_complex(4);
    const auto field = Field::rationals();
    const auto reg = regularity(graded_betti(b4, field));
    o.require(reg == 4, "reg " + std::to_string(reg));
    o.require(degree(b4) - codim(b4) + 1 == 4, "deg - codim + 1 != 4");
    const auto shape = recognize_lemma3_shape(b4);
    o.require(shape && shape->r == 4, "shape not recognized with r = 4");
    const auto p = lemma3_sci_generators(b4, field);
    o.require(p.size() == 1 && format_polynomial(p.polynomials[0], p.names) == "x1*x2*x3*x4",
              "unexpected certificate");
    o.require(p.verification && p.verification->pass(), "certificate not verified");
    const double secs = since(start);
    o.require(secs < 10.0, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "reg 4 = 4 - 1 + 1, r = 4, x1*x2*x3*x4 verified";
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::size_t equal = 0;
    for (const auto& c : constructions) {
        o.require(c.lower_bound <= c.size, c.label + ": lower bound " + std::to_string(c.lower_bound) + " > " +
                                               std::to_string(c.size));
        if (c.witness_is_pd) {
            o.require(c.lower_bound == c.size, c.label + ": |witness| = pd but bound " +
                                                   std::to_string(c.lower_bound) + " < " + std::to_string(c.size));
            ++equal;
        }
    }
    o.require(!constructions.empty(), "no constructions recorded");
    if (o.pass)
        o.detail = std::to_string(constructions.size()) + " runs, " + std::to_string(equal) + " with equality";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) expected_failures.insert(std::stoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7, criterion8,
                                                         criterion9, criterion10};
    int unexpected = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const int id = static_cast<int>(k + 1);
        const auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[k]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", since(start));
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << " [" << secs << " s]";
        if (!o.pass && expected_failures.count(id)) std::cout << " (known failure, see README)";
        std::cout << std::endl;
        if (!o.pass && !expected_failures.count(id)) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
