#include "conerank/cone_generators.hpp"

#include <algorithm>

#include "conerank/error.hpp"
#include "conerank/hochster.hpp"
#include "conerank/poly_text.hpp"
#include "conerank/sr_ideal.hpp"

namespace conerank {

std::string to_string(PresentationCase c) {
    switch (c) {
        case PresentationCase::case1: return "case1";
        case PresentationCase::case21: return "case21";
        case PresentationCase::case22: return "case22";
        case PresentationCase::degenerate_h0: return "degenerate-h0";
        case PresentationCase::degenerate_fx: return "degenerate-FX";
        case PresentationCase::verbatim: return "verbatim";
    }
    return "unknown";
}

ConeFrame make_frame(const SimplicialComplex& complex, FaceSet face, std::size_t x0_position) {
    if (!face.is_subset_of(complex.vertex_set()) || !complex.is_face(face))
        throw InvalidInput("F is not a face of the complex");
    if (face == complex.vertex_set()) throw InvalidInput("F = X has no cone frame");
    if (x0_position > complex.vertex_count()) throw InvalidInput("cone vertex position out of range");
    ConeFrame frame;
    frame.face = face;
    frame.x0 = x0_position;
    frame.ring_size = complex.vertex_count() + 1;
    // Largest facet containing F; among those the lexicographically greatest,
    // which keeps G at the tail of the variable order when possible.
    bool found = false;
    for (auto g : complex.facets()) {
        if (!face.is_subset_of(g)) continue;
        if (found && g.size() < frame.facet.size()) break;
        frame.facet = g;
        found = true;
    }
    const FaceSet all = complex.vertex_set();
    for (auto v : (all - frame.facet).indices()) frame.order.push_back(frame.lift(v));
    for (auto v : (frame.facet - face).indices()) frame.order.push_back(frame.lift(v));
    for (auto v : face.indices()) frame.order.push_back(frame.lift(v));
    frame.s = (all - frame.facet).size();
    frame.t = (all - face).size();
    return frame;
}

std::vector<Polynomial> split_coefficients(const Polynomial& q, const ConeFrame& frame) {
    if (q.nvars() != frame.ring_size) throw InvalidInput("witness lives in the wrong ring");
    std::vector<std::vector<Term>> parts(frame.s);
    for (const auto& term : q.terms()) {
        std::size_t j = 1;
        while (j <= frame.s && term.monomial[frame.var(j)] == 0) ++j;
        if (j > frame.s) throw InvalidInput("witness term is not in P_G = (x_1, ..., x_s)");
        Monomial reduced = term.monomial;
        reduced.set(frame.var(j), reduced[frame.var(j)] - 1);
        parts[j - 1].push_back({std::move(reduced), term.coeff});
    }
    std::vector<Polynomial> out;
    for (auto& p : parts) out.push_back(Polynomial::from_terms(q.field(), q.nvars(), std::move(p)));
    return out;
}

SquaredWitness build_qbar(const Polynomial& q, const ConeFrame& frame) {
    const auto coefficients = split_coefficients(q, frame);
    SquaredWitness out{phi_square(q), {}};
    for (std::size_t j = 1; j <= frame.s; ++j) {
        const auto xj = Polynomial::variable(q.field(), q.nvars(), frame.var(j));
        out.abar.push_back(phi_square(coefficients[j - 1]) * xj);
    }
    return out;
}

namespace {

struct Ring {
    Field field;
    std::size_t n;
    Polynomial var(std::size_t i) const { return Polynomial::variable(field, n, i); }
    Polynomial constant(long long c) const { return Polynomial::constant(field, n, c); }
};

// Ā restricted to dim x dim, with zero columns beyond s.
PolyMatrix abar_matrix(const ConeFrame& frame, const std::vector<SquaredWitness>& rows, Field field,
                       std::size_t dim) {
    PolyMatrix m(field, frame.ring_size, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim && j < frame.s; ++j) m.at(i, j) = rows.at(i).abar.at(j);
    return m;
}

RadicalPresentation base_presentation(const ConeFrame& frame, const std::vector<SquaredWitness>& rows,
                                      Field field, PresentationCase kind) {
    RadicalPresentation p;
    p.kind = kind;
    p.field = field;
    p.h = rows.size();
    p.s = frame.s;
    p.t = frame.t;
    return p;
}

void check_case2_guard(const ConeFrame& frame, const std::vector<SquaredWitness>& rows) {
    if (rows.empty() || rows.size() + 1 > frame.t)
        throw InvalidInput("Case 2 needs 1 <= h and h + 1 <= t");
    if (frame.s > rows.size()) throw InvalidInput("witness has fewer polynomials than the height of P_G");
}

}  // namespace

RadicalPresentation construct_case1(const ConeFrame& frame, const std::vector<SquaredWitness>& rows,
                                    Field field) {
    const std::size_t h = rows.size();
    const std::size_t t = frame.t;
    if (h + 1 <= t) throw InvalidInput("Case 1 needs h + 1 > t");
    const Ring ring{field, frame.ring_size};
    const auto x0 = ring.var(frame.x0);
    auto a1 = abar_matrix(frame, rows, field, t);
    for (std::size_t i = 0; i < t; ++i) a1.at(i, i) += x0;
    auto p = base_presentation(frame, rows, field, PresentationCase::case1);
    p.polynomials.push_back(determinant(a1) - x0.pow(t));
    for (std::size_t i = 1; i <= h; ++i) {
        const auto& qbar = rows[i - 1].qbar;
        p.polynomials.push_back(i <= t ? qbar + x0 * ring.var(frame.var(i)) : qbar);
    }
    return p;
}

RadicalPresentation construct_case21(const ConeFrame& frame, const std::vector<SquaredWitness>& rows,
                                     Field field) {
    check_case2_guard(frame, rows);
    if (!field.is_prime()) throw Undefined("Case 2.1 needs positive characteristic");
    const std::size_t h = rows.size();
    const std::uint64_t prime = field.characteristic();
    std::uint64_t power = prime;
    std::uint64_t ell = 1;
    while (power <= h) {
        power *= prime;
        ++ell;
    }
    if (power > kMaxCase21Power)
        throw Undefined("Case 2.1 needs p^l = " + std::to_string(power) + ", above the supported " +
                        std::to_string(kMaxCase21Power) + "; use Case 2.2");
    const Ring ring{field, frame.ring_size};
    const auto x0 = ring.var(frame.x0);
    const auto shift = x0 * (x0 - ring.var(frame.var(h + 1)));  // x0(x0 - x_{h+1})
    auto a21 = abar_matrix(frame, rows, field, h);
    for (std::size_t i = 0; i < h; ++i) a21.at(i, i) += shift;
    auto p = base_presentation(frame, rows, field, PresentationCase::case21);
    p.ell = ell;
    p.polynomials.push_back(shift.pow(power - h) * determinant(a21) - x0.pow(2 * power));
    for (std::size_t i = 1; i <= h; ++i)
        p.polynomials.push_back(rows[i - 1].qbar + shift * ring.var(frame.var(i)));
    for (std::size_t j = h + 2; j <= frame.t; ++j) p.polynomials.push_back(x0 * ring.var(frame.var(j)));
    return p;
}

RadicalPresentation construct_case22(const ConeFrame& frame, const std::vector<SquaredWitness>& rows,
                                     const std::vector<FieldElement>& omegas) {
    check_case2_guard(frame, rows);
    const std::size_t h = rows.size();
    if (omegas.size() != h) throw InvalidInput("Case 2.2 needs exactly h roots of unity");
    const Field field = omegas.front().field();
    const Ring ring{field, frame.ring_size};
    const auto x0 = ring.var(frame.x0);
    const auto pivot = ring.var(frame.var(h + 1));
    auto a22 = abar_matrix(frame, rows, field, h);
    std::vector<Polynomial> shifts;
    for (std::size_t i = 0; i < h; ++i) {
        shifts.push_back(x0 * (x0 - pivot.scaled(omegas[i])));
        a22.at(i, i) += shifts.back();
    }
    auto p = base_presentation(frame, rows, field, PresentationCase::case22);
    p.omegas = omegas;
    p.polynomials.push_back(determinant(a22) - x0.pow(2 * h));
    for (std::size_t i = 1; i <= h; ++i)
        p.polynomials.push_back(rows[i - 1].qbar + shifts[i - 1] * ring.var(frame.var(i)));
    for (std::size_t j = h + 2; j <= frame.t; ++j) p.polynomials.push_back(x0 * ring.var(frame.var(j)));
    return p;
}

std::string format_presentation(const RadicalPresentation& p) {
    std::string out = "# case=" + to_string(p.kind) + " field=" + p.field.to_string() +
                      " h=" + std::to_string(p.h) + " s=" + std::to_string(p.s) + " t=" + std::to_string(p.t);
    if (p.ell) out += " ell=" + std::to_string(*p.ell);
    if (!p.omegas.empty()) {
        out += " omega=[";
        for (std::size_t i = 0; i < p.omegas.size(); ++i) out += (i ? "," : "") + p.omegas[i].to_string();
        out += "]";
    }
    out += "\n";
    for (const auto& f : p.polynomials) out += format_polynomial(f, p.names) + "\n";
    return out;
}

void verify_presentation(RadicalPresentation& p, const SimplicialComplex& complex, const GroebnerOptions& options) {
    p.verification = verify_radical_presentation(p.polynomials, stanley_reisner_ideal(complex), options);
}

namespace {

void require_pass(const VerificationReport& report, const std::string& what) {
    if (report.inconclusive) throw Inconclusive(what + ": Gröbner budget exhausted");
    if (!report.inclusion) throw VerificationFailure(what + ": a term lies outside the monomial ideal");
    if (!report.radical) throw VerificationFailure(what + ": radical does not contain the monomial ideal");
}

}  // namespace

RadicalPresentation cone_generators(const SimplicialComplex& complex, FaceSet face, const std::string& new_vertex,
                                    const std::optional<std::vector<Polynomial>>& witness, Field field,
                                    const ConeOptions& options) {
    if (!face.is_subset_of(complex.vertex_set()) || !complex.is_face(face))
        throw InvalidInput("F is not a face of the complex");
    const auto cone = cone_union(complex, face, new_vertex, options.x0_position);

    RadicalPresentation result;
    if (face == complex.vertex_set()) {
        result.kind = PresentationCase::degenerate_fx;
        result.field = field;
    } else {
        const auto frame = make_frame(complex, face, options.x0_position);
        std::vector<Polynomial> base;
        if (witness) {
            for (const auto& q : *witness) {
                if (q.nvars() != complex.vertex_count() || !(q.field() == field))
                    throw InvalidInput("witness polynomial is not in the ring of the complex");
                if (!q.is_zero()) base.push_back(q);
            }
        } else {
            base = stanley_reisner_ideal(complex).generator_polynomials(field);
        }
        if (options.verify_witness)
            require_pass(verify_radical_presentation(base, stanley_reisner_ideal(complex), options.groebner),
                         "witness");

        std::vector<std::size_t> lift(complex.vertex_count());
        for (std::size_t v = 0; v < lift.size(); ++v) lift[v] = frame.lift(v);
        std::vector<SquaredWitness> rows;
        for (const auto& q : base) rows.push_back(build_qbar(map_variables(q, frame.ring_size, lift), frame));
        const std::size_t h = rows.size();

        if (h == 0) {
            result.kind = PresentationCase::degenerate_h0;
            result.field = field;
            result.s = frame.s;
            result.t = frame.t;
            const Ring ring{field, frame.ring_size};
            for (std::size_t j = 1; j <= frame.t; ++j)
                result.polynomials.push_back(ring.var(frame.x0) * ring.var(frame.var(j)));
        } else if (h + 1 > frame.t) {
            if (options.case_choice == CaseChoice::case21 || options.case_choice == CaseChoice::case22)
                throw InvalidInput("Case 2 requested but h + 1 > t");
            result = construct_case1(frame, rows, field);
        } else {
            CaseChoice choice = options.case_choice;
            if (choice == CaseChoice::case1) throw InvalidInput("Case 1 requested but h + 1 <= t");
            if (choice == CaseChoice::automatic) {
                choice = field.is_prime() ? CaseChoice::case21 : CaseChoice::case22;
                if (options.prefer_roots && field.is_prime() && (field.characteristic() - 1) % h == 0)
                    choice = CaseChoice::case22;
            }
            result = choice == CaseChoice::case21 ? construct_case21(frame, rows, field)
                                                  : construct_case22(frame, rows, roots_of_unity(h, field));
        }
    }
    result.names = cone.names();
    verify_presentation(result, cone, options.groebner);
    if (options.throw_on_failure) require_pass(*result.verification, "constructed presentation");
    return result;
}

SimplicialComplex replay_plan(const BuildPlan& plan) {
    SimplicialComplex current = plan.base;
    for (const auto& step : plan.steps) current = cone_union(current, step.face, step.vertex, step.position);
    return current;
}

BuildPlan plan_from_peel(const PeelSequence& peel, BuildPlan::Base base_kind) {
    BuildPlan plan;
    plan.base_kind = base_kind;
    plan.base = peel.terminal;
    for (auto it = peel.steps.rbegin(); it != peel.steps.rend(); ++it)
        plan.steps.push_back({it->base, it->vertex, it->index});
    return plan;
}

namespace {

RadicalPresentation fold(const BuildPlan& plan, Field field, const ConeOptions& options, bool subfacets_only,
                         SimplicialComplex& current) {
    current = plan.base;
    RadicalPresentation pres;
    pres.field = field;
    pres.names = current.names();
    if (plan.base_kind == BuildPlan::Base::simplex) {
        if (!current.is_simplex()) throw InvalidInput("plan base is not a simplex");
        pres.kind = PresentationCase::degenerate_fx;
    } else {
        const auto ideal = stanley_reisner_ideal(current);
        if (ideal.generators().size() != 1) throw InvalidInput("plan base is not a monomial hypersurface");
        pres.kind = PresentationCase::verbatim;
        pres.polynomials = ideal.generator_polynomials(field);
        pres.h = 1;
    }
    if (plan.steps.empty()) {
        verify_presentation(pres, current, options.groebner);
        require_pass(*pres.verification, "plan base");
    }
    for (const auto& step : plan.steps) {
        if (subfacets_only && (!current.is_pure() || !current.is_face(step.face) ||
                               static_cast<int>(step.face.size()) != current.dimension()))
            throw InvalidInput("cone step over '" + step.vertex + "' is not over a subfacet");
        ConeOptions step_options = options;
        step_options.x0_position = step.position;
        step_options.verify_witness = false;  // verified as the previous step's output
        step_options.throw_on_failure = true;
        pres = cone_generators(current, step.face, step.vertex, pres.polynomials, field, step_options);
        current = cone_union(current, step.face, step.vertex, step.position);
    }
    return pres;
}

}  // namespace

RadicalPresentation fold_plan(const BuildPlan& plan, Field field, const ConeOptions& options) {
    SimplicialComplex final_complex;
    return fold(plan, field, options, false, final_complex);
}

RadicalPresentation dtree_sci_generators(const BuildPlan& plan, Field field, const ConeOptions& options) {
    SimplicialComplex current;
    auto pres = fold(plan, field, options, true, current);
    if (pres.size() != height(current))
        throw VerificationFailure("fold produced " + std::to_string(pres.size()) + " polynomials for height " +
                                  std::to_string(height(current)));
    return pres;
}

RadicalPresentation generalized_tree_generators(const SimplicialComplex& complex, Field field,
                                                const ConeOptions& options) {
    const auto peel = peel_generalized_tree(complex);
    if (!peel) throw Undefined("complex is not a generalized tree");
    return fold_plan(plan_from_peel(*peel, BuildPlan::Base::simplex), field, options);
}

RadicalPresentation lemma3_sci_generators(const SimplicialComplex& complex, Field field, const ConeOptions& options) {
    const auto shape = recognize_lemma3_shape(complex);
    if (!shape) throw Undefined("complex is not of the form ∂Δ(r)*Δ(d-r+2) + (d-branches)");
    const auto reg = regularity(complex, field);
    const auto predicted = degree(complex) - codim(complex) + 1;
    if (reg != predicted || reg != shape->r)
        throw Undefined("reg I = " + std::to_string(reg) + " but deg - codim + 1 = " + std::to_string(predicted) +
                        " and r = " + std::to_string(shape->r));
    return dtree_sci_generators(plan_from_peel(shape->branches, BuildPlan::Base::hypersurface), field, options);
}

}  // namespace conerank
