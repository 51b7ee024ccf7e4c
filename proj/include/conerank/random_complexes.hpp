#pragma once

#include <cstddef>
#include <random>

#include "conerank/simplicial_complex.hpp"

namespace conerank {

using Rng = std::mt19937_64;

/// Random facets on n vertices (1 <= n <= 64); isolated vertices are allowed.
SimplicialComplex random_complex(Rng& rng, std::size_t n);

/// A simplex on 1..3 vertices grown by random cones over arbitrary faces
/// until it has n vertices.
SimplicialComplex random_generalized_tree(Rng& rng, std::size_t n);

/// A d-simplex grown by `steps` cones over random subfacets; each new vertex
/// is inserted at a random index.
SimplicialComplex random_d_tree(Rng& rng, std::size_t d, std::size_t steps);

/// A uniformly random face of the complex other than the full vertex set.
FaceSet random_proper_face(Rng& rng, const SimplicialComplex& complex);

}  // namespace conerank
