#pragma once

#include <string>

#include "conerank/simplicial_complex.hpp"

namespace conerank {

/// Reads a complex document: {"vertices": [names...], "facets": [[names...], ...]}.
/// Vertex order fixes the index order; facet order and the order of names
/// inside a facet are irrelevant. Throws InvalidInput on malformed documents.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex load_complex(const std::string& path);

/// Writes the same document with facets in canonical order.
std::string format_complex(const SimplicialComplex& complex);

}  // namespace conerank
