#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conerank/field.hpp"
#include "conerank/groebner.hpp"
#include "conerank/polynomial.hpp"
#include "conerank/simplicial_complex.hpp"

namespace conerank {

enum class PresentationCase { case1, case21, case22, degenerate_h0, degenerate_fx, verbatim };

std::string to_string(PresentationCase c);

/// Which construction to use when h + 1 <= t. `automatic` picks Case 2.1 in
/// positive characteristic and Case 2.2 over ℚ.
enum class CaseChoice { automatic, case1, case21, case22 };

/// Variable layout of Δ' = Δ ∪ co_{x0} F, indices taken in the ring of Δ'.
///
/// order[k] is the Δ' index of the variable playing the role of x_{k+1}:
/// first X∖G, then G∖F, then F, each block ascending. So P_G = (x_1..x_s)
/// and X∖F = {x_1..x_t}.
struct ConeFrame {
    std::vector<std::size_t> order;
    std::size_t s = 0;
    std::size_t t = 0;
    FaceSet facet;        // G, in Δ indices
    FaceSet face;         // F, in Δ indices
    std::size_t x0 = 0;   // index of the cone vertex in Δ'
    std::size_t ring_size = 0;  // n + 1

    /// Δ index -> Δ' index.
    std::size_t lift(std::size_t v) const { return v < x0 ? v : v + 1; }
    /// Δ' index of x_k, 1 <= k <= n.
    std::size_t var(std::size_t k) const { return order.at(k - 1); }
};

/// G is the largest facet containing F, ties going to the lexicographically
/// greatest one.
/// Throws InvalidInput when F is not a face, F = X, or Δ is a simplex.
ConeFrame make_frame(const SimplicialComplex& complex, FaceSet face, std::size_t x0_position = 0);

/// Writes q (in the ring of Δ') as Σ_{j<=s} a_j x_j, sending each term to the
/// smallest j with x_j dividing it. Throws InvalidInput when some term is
/// divisible by none of x_1..x_s.
std::vector<Polynomial> split_coefficients(const Polynomial& q, const ConeFrame& frame);

/// q̄ = φ(q) together with the row ā_j = φ(a_j)·x_j, so q̄ = Σ ā_j x_j.
struct SquaredWitness {
    Polynomial qbar;
    std::vector<Polynomial> abar;  // length s
};

SquaredWitness build_qbar(const Polynomial& q, const ConeFrame& frame);

/// Up-to-radical generators for a Stanley-Reisner ideal, with the metadata
/// of the construction that produced them.
struct RadicalPresentation {
    std::vector<Polynomial> polynomials;
    PresentationCase kind = PresentationCase::verbatim;
    Field field = Field::rationals();
    std::vector<std::string> names;  // variables of the ring
    std::size_t h = 0;
    std::size_t s = 0;
    std::size_t t = 0;
    std::optional<std::uint64_t> ell;     // Case 2.1: smallest ℓ with p^ℓ > h
    std::vector<FieldElement> omegas;     // Case 2.2
    std::optional<VerificationReport> verification;

    std::size_t size() const { return polynomials.size(); }
};

/// Header line ("# case=case22 field=QQ h=2 s=2 t=3 omega=[1,-1]") followed by
/// one canonical polynomial per line.
std::string format_presentation(const RadicalPresentation& p);

/// Case 1 (h + 1 > t): det(Ā + x0·Id_t) - x0^t, q̄_i + x0·x_i (i <= t), q̄_i (i > t).
RadicalPresentation construct_case1(const ConeFrame& frame, const std::vector<SquaredWitness>& rows,
                                    Field field);

/// Case 2.1 (h + 1 <= t, char p > 0): with P = p^ℓ > h,
/// x0^(P-h)(x0 - x_{h+1})^(P-h) det A21 - x0^(2P), q̄_i + x0(x0 - x_{h+1})x_i,
/// x0·x_j for h+2 <= j <= t.
RadicalPresentation construct_case21(const ConeFrame& frame, const std::vector<SquaredWitness>& rows,
                                     Field field);

/// Case 2.2 (h + 1 <= t, h-th roots of unity ω_i available):
/// det A22 - x0^(2h), q̄_i + x0(x0 - ω_i x_{h+1})x_i, x0·x_j for h+2 <= j <= t.
RadicalPresentation construct_case22(const ConeFrame& frame, const std::vector<SquaredWitness>& rows,
                                     const std::vector<FieldElement>& omegas);

/// Largest p^ℓ accepted by Case 2.1; the generator has about 2·p^ℓ terms.
inline constexpr std::uint64_t kMaxCase21Power = 1u << 12;

struct ConeOptions {
    CaseChoice case_choice = CaseChoice::automatic;
    std::size_t x0_position = 0;
    /// In positive characteristic, let `automatic` take Case 2.2 whenever the
    /// h-th roots of unity lie in the prime field.
    bool prefer_roots = false;
    /// Check √(witness) = I_Δ before using it.
    bool verify_witness = true;
    /// Throw when the output fails verification; otherwise the report is
    /// left on the result for the caller.
    bool throw_on_failure = true;
    GroebnerOptions groebner;
};

/// Builds and verifies generators of I_{Δ'} up to radical from a witness
/// generating I_Δ up to radical (default: the minimal monomial generators).
/// Throws VerificationFailure when the witness or the output fails the check,
/// Inconclusive when the Gröbner budget runs out, Undefined when the chosen
/// case cannot run over the field.
RadicalPresentation cone_generators(const SimplicialComplex& complex, FaceSet face,
                                    const std::string& new_vertex,
                                    const std::optional<std::vector<Polynomial>>& witness, Field field,
                                    const ConeOptions& options = {});

/// Attaches a verification report against I of the complex; throws nothing.
void verify_presentation(RadicalPresentation& p, const SimplicialComplex& complex,
                         const GroebnerOptions& options = {});

struct ConeStep {
    FaceSet face;          // in the indices of the complex before the step
    std::string vertex;
    std::size_t position = 0;
};

struct BuildPlan {
    enum class Base { simplex, hypersurface };
    Base base_kind = Base::simplex;
    SimplicialComplex base;
    std::vector<ConeStep> steps;
};

SimplicialComplex replay_plan(const BuildPlan& plan);

/// Inverts a peel: the terminal complex becomes the base and the removals,
/// reversed, become cone steps.
BuildPlan plan_from_peel(const PeelSequence& peel, BuildPlan::Base base_kind);

/// Folds cone_generators over the plan, feeding each output in as the next
/// witness. A hypersurface base starts from its single monomial generator.
RadicalPresentation fold_plan(const BuildPlan& plan, Field field, const ConeOptions& options = {});

/// fold_plan restricted to d-trees: every step must cone over a subfacet; the final presentation has
/// as many polynomials as the height of the final ideal.
RadicalPresentation dtree_sci_generators(const BuildPlan& plan, Field field, const ConeOptions& options = {});

/// fold_plan over the greedy peel of a generalized tree. Throws Undefined
/// when the complex is not one.
RadicalPresentation generalized_tree_generators(const SimplicialComplex& complex, Field field,
                                                const ConeOptions& options = {});

/// Certificate for ∂Δ(r)*Δ(d-r+2) + (d-branches): the core's single monomial
/// generator folded along the branches. Throws Undefined when the shape is
/// not recognized or reg I = deg - codim + 1 fails.
RadicalPresentation lemma3_sci_generators(const SimplicialComplex& complex, Field field,
                                          const ConeOptions& options = {});

}  // namespace conerank
