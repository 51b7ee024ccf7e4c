#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conerank/polynomial.hpp"
#include "conerank/sr_ideal.hpp"

namespace conerank {

struct GroebnerOptions {
    /// S-pairs reduced before giving up with an inconclusive result.
    std::size_t max_pairs = 100000;
    /// Wall-clock budget per Buchberger run; 0 means none.
    double max_seconds = 0.0;
};

/// Reduced Gröbner basis in grevlex order: monic, no leading monomial divides
/// another, sorted by ascending leading monomial.
struct GroebnerBasis {
    std::vector<Polynomial> basis;
    std::size_t nvars = 0;
    std::string order = "grevlex";

    bool is_unit() const { return basis.size() == 1 && basis[0].is_unit(); }
};

struct GroebnerRun {
    GroebnerBasis basis;
    bool complete = true;        // false when the pair budget ran out
    std::size_t pairs_reduced = 0;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Möller criteria. Stops early once a nonzero constant appears.
/// All generators must share field and ring; zero generators are ignored.
GroebnerRun buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options = {});

/// Full reduction of f by the basis; no remaining term is divisible by a
/// leading monomial.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// f ∈ (generators). Throws Inconclusive when the pair budget runs out.
bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& generators,
              const GroebnerOptions& options = {});

/// f ∈ √(generators), via 1 ∈ (generators, 1 - y·f) with y a new last
/// variable. Throws Inconclusive when the pair budget runs out.
bool in_radical(const Polynomial& f, const std::vector<Polynomial>& generators,
                const GroebnerOptions& options = {}, std::size_t* pairs_reduced = nullptr);

struct VerificationReport {
    // J ⊆ I: every term of every polynomial is divisible by a generator of I.
    bool inclusion = true;
    std::optional<std::size_t> offending_polynomial;
    std::optional<Monomial> offending_term;
    // I ⊆ √J: every minimal generator of I lies in the radical of J.
    bool radical = true;
    bool inconclusive = false;
    std::optional<FaceSet> failing_generator;
    std::optional<FaceSet> undecided_generator;
    std::size_t pairs_reduced = 0;
    double seconds = 0.0;

    bool pass() const { return inclusion && radical && !inconclusive; }
};

/// Checks √(polynomials) = I for a squarefree monomial ideal I. Throws
/// InvalidInput when a polynomial's ring differs from the ideal's.
VerificationReport verify_radical_presentation(const std::vector<Polynomial>& polynomials,
                                               const MonomialIdeal& ideal,
                                               const GroebnerOptions& options = {});

/// Machine-readable report. Timing is omitted unless requested so that equal
/// inputs give byte-identical output.
std::string report_to_json(const VerificationReport& report, const std::vector<std::string>& names,
                           bool include_timing = false);

}  // namespace conerank
