#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conerank/face_set.hpp"

namespace conerank {

/// A finite abstract simplicial complex on at most 64 named vertices,
/// stored as its canonical antichain of facets.
///
/// Vertex i carries the name names()[i]; the index order is also the
/// variable order of the associated polynomial ring. Every vertex lies in
/// some facet. The complex with no vertices is {∅}, whose only facet is
/// the empty face.
class SimplicialComplex {
public:
    /// The complex {∅}.
    SimplicialComplex();

    /// Normalizes `facets` to an antichain in canonical order. Vertices that
    /// appear in no facet become singleton facets.
    /// Throws InvalidInput on an empty facet, an out-of-range vertex or a
    /// duplicate / malformed vertex name.
    static SimplicialComplex from_facets(std::vector<FaceSet> facets,
                                         std::vector<std::string> names);

    /// Same as from_facets, with facets given by vertex names.
    static SimplicialComplex from_named_facets(
        const std::vector<std::vector<std::string>>& facets,
        std::vector<std::string> names);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    FaceSet vertex_set() const { return FaceSet::range(names_.size()); }

    const std::vector<FaceSet>& facets() const { return facets_; }

    /// max facet size - 1; -1 for {∅}.
    int dimension() const;
    bool is_pure() const;
    bool is_simplex() const { return facets_.size() == 1 && facets_[0] == vertex_set(); }
    bool is_face(FaceSet f) const;

    /// All faces of size dim Δ. Throws Undefined when the complex is not pure.
    std::vector<FaceSet> subfacets() const;

    /// Every face, including ∅, sorted by size then lexicographically.
    std::vector<FaceSet> faces() const;

    /// Parses names into a face; throws InvalidInput on an unknown name.
    FaceSet face_from_names(const std::vector<std::string>& names) const;
    std::vector<std::string> face_names(FaceSet f) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<FaceSet> facets_;
};

/// Validates a vertex name: [A-Za-z_][A-Za-z0-9_']*.
bool is_valid_vertex_name(const std::string& name);

/// Removes non-maximal and duplicate sets, then sorts canonically.
std::vector<FaceSet> maximal_sets(std::vector<FaceSet> sets);

/// Δ(n): the simplex on x1..xn. Δ(0) = {∅}.
SimplicialComplex elementary_simplex(std::size_t n);
SimplicialComplex elementary_simplex(std::vector<std::string> names);
/// ∂Δ(n) = Δ(n) minus its top face, n >= 2.
SimplicialComplex boundary_complex(std::size_t n);
SimplicialComplex boundary_complex(std::vector<std::string> names);

/// Δ ∪ co_{x0} F. The new vertex gets index `position` (default 0, so it is
/// the most significant variable); later vertices shift up by one.
/// Throws InvalidInput when F is not a face, the name is taken or invalid,
/// or the position is out of range.
SimplicialComplex cone_union(const SimplicialComplex& complex, FaceSet face,
                             const std::string& new_vertex, std::size_t position = 0);

/// The subcomplex induced on Y, with vertices renumbered in index order.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, FaceSet subset);

/// Simplicial join on disjoint vertex sets; vertices of `lhs` come first.
SimplicialComplex join(const SimplicialComplex& lhs, const SimplicialComplex& rhs);

/// True iff the facet graph (edges across subfacet-sized intersections) is
/// connected. Throws Undefined on a non-pure complex.
bool is_strongly_connected(const SimplicialComplex& complex);

/// One inverse cone step: vertex `vertex` (index `index` before removal) was
/// a cone over `base`, expressed in the indices of the complex after removal.
struct PeelStep {
    std::string vertex;
    std::size_t index = 0;
    FaceSet base;
};

struct PeelSequence {
    std::vector<PeelStep> steps;   // in removal order
    SimplicialComplex terminal;    // what is left after all removals
};

/// Re-applies a peel sequence in reverse, starting from its terminal complex.
SimplicialComplex replay(const PeelSequence& peel);

/// Greedy peel of a generalized tree: repeatedly removes the smallest-index
/// vertex lying in exactly one facet. Returns nullopt when the process gets
/// stuck before a simplex remains.
std::optional<PeelSequence> peel_generalized_tree(const SimplicialComplex& complex);

bool is_generalized_tree(const SimplicialComplex& complex);

/// Pure, strongly connected generalized tree.
bool is_d_tree(const SimplicialComplex& complex);

struct Lemma3Shape {
    std::size_t r = 0;                 // size of the core's unique minimal non-face
    PeelSequence branches;             // terminal = the core ∂Δ(r)*Δ(d-r+2)
    std::vector<std::size_t> core_relabeling;  // core vertices (indices of the input): non-face first
};

/// Recognizes ∂Δ(r)*Δ(d-r+2) + (d-branches) with 4 <= r <= d+2. Branches are
/// peeled greedily (smallest index first) while purity is preserved.
std::optional<Lemma3Shape> recognize_lemma3_shape(const SimplicialComplex& complex);

}  // namespace conerank
