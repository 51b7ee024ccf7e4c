#pragma once

#include <string>
#include <vector>

#include "conerank/field.hpp"
#include "conerank/polynomial.hpp"
#include "conerank/simplicial_complex.hpp"

namespace conerank {

/// Squarefree monomial ideal given by the supports of its minimal generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Keeps the inclusion-minimal supports, sorted by size then lexicographically.
    /// An empty support is the unit ideal.
    MonomialIdeal(std::size_t nvars, std::vector<FaceSet> generators);

    std::size_t nvars() const { return nvars_; }
    const std::vector<FaceSet>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    /// A monomial lies in the ideal iff its support contains a generator's.
    bool contains_support(FaceSet support) const;
    /// Term-wise membership of a polynomial.
    bool contains(const Polynomial& f) const;

    std::vector<Polynomial> generator_polynomials(Field field) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::size_t nvars_ = 0;
    std::vector<FaceSet> generators_;
};

/// Variable set of every minimal prime, one per facet, in facet order.
using PrimeList = std::vector<FaceSet>;

/// Generators = minimal non-faces of the complex.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Inverse correspondence. Throws InvalidInput on a degree-one generator or a
/// variable count that does not match the names.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal, std::vector<std::string> names);

PrimeList minimal_primes(const SimplicialComplex& complex);

/// |X| - max facet size.
std::size_t height(const SimplicialComplex& complex);
inline std::size_t codim(const SimplicialComplex& complex) { return height(complex); }

/// Number of facets of maximal dimension.
std::size_t degree(const SimplicialComplex& complex);

/// All minimal primes have the same height; equivalent to purity.
bool is_unmixed(const SimplicialComplex& complex);

/// max(pd K[Δ], largest minimal prime height): a lower bound for the number
/// of polynomials generating I_Δ up to radical.
std::size_t ara_lower_bound(const SimplicialComplex& complex, Field field);

/// One generator per line, variables in index order ("x1*x3").
std::string format_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& names);

}  // namespace conerank
