#include "conerank/simplicial_complex.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <unordered_set>

#include "conerank/error.hpp"

namespace conerank {

namespace {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

// Inserts a zero bit at `pos`, shifting higher bits up.
FaceSet spread(FaceSet f, std::size_t pos) {
    const std::uint64_t low = pos >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pos) - 1;
    return FaceSet((f.bits() & low) | ((f.bits() & ~low) << 1));
}

// Renumbers a face living on `support` to 0..|support|-1, keeping order.
FaceSet compress(FaceSet f, FaceSet support) {
    FaceSet out;
    std::size_t k = 0;
    for (auto i : support.indices()) {
        if (f.contains(i)) out.insert(k);
        ++k;
    }
    return out;
}

std::size_t rank_in(std::size_t v, FaceSet support) {
    const std::uint64_t below = (std::uint64_t{1} << v) - 1;
    return static_cast<std::size_t>(std::popcount(support.bits() & below));
}

// Facets of the restriction to `keep`, still in original indices.
std::vector<FaceSet> restrict_facets(const std::vector<FaceSet>& facets, FaceSet keep) {
    std::vector<FaceSet> out;
    out.reserve(facets.size());
    for (auto f : facets) out.push_back(f & keep);
    return maximal_sets(std::move(out));
}

std::vector<std::string> names_on(const std::vector<std::string>& names, FaceSet support) {
    std::vector<std::string> out;
    for (auto i : support.indices()) out.push_back(names[i]);
    return out;
}

SimplicialComplex restricted_complex(const std::vector<FaceSet>& facets, FaceSet keep,
                                     const std::vector<std::string>& names) {
    std::vector<FaceSet> compressed;
    for (auto f : restrict_facets(facets, keep)) compressed.push_back(compress(f, keep));
    if (keep.empty()) return SimplicialComplex();
    return SimplicialComplex::from_facets(std::move(compressed), names_on(names, keep));
}

std::size_t facet_count_containing(const std::vector<FaceSet>& facets, std::size_t v,
                                   FaceSet* which) {
    std::size_t count = 0;
    for (auto f : facets) {
        if (f.contains(v)) {
            ++count;
            if (which) *which = f;
        }
    }
    return count;
}

bool pure(const std::vector<FaceSet>& facets) {
    return std::all_of(facets.begin(), facets.end(),
                       [&](FaceSet f) { return f.size() == facets.front().size(); });
}

}  // namespace

bool is_valid_vertex_name(const std::string& name) {
    if (name.empty()) return false;
    const auto head = static_cast<unsigned char>(name[0]);
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        const auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || c == '_' || c == '\'';
    });
}

std::vector<FaceSet> maximal_sets(std::vector<FaceSet> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<FaceSet> out;
    // Larger sets come first, so a set is maximal iff no kept set contains it.
    for (auto s : sets) {
        const bool covered = std::any_of(out.begin(), out.end(),
                                         [&](FaceSet kept) { return s.is_subset_of(kept); });
        if (!covered) out.push_back(s);
    }
    return out;
}

SimplicialComplex::SimplicialComplex() : facets_{FaceSet{}} {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<FaceSet> facets,
                                                 std::vector<std::string> names) {
    if (names.size() > kMaxVertices)
        throw InvalidInput("at most 64 vertices are supported, got " + std::to_string(names.size()));
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (!is_valid_vertex_name(n)) throw InvalidInput("invalid vertex name '" + n + "'");
        if (!seen.insert(n).second) throw InvalidInput("duplicate vertex name '" + n + "'");
    }
    SimplicialComplex out;
    out.names_ = std::move(names);
    const FaceSet all = out.vertex_set();
    if (out.names_.empty()) {
        for (auto f : facets)
            if (!f.empty()) throw InvalidInput("facet refers to a vertex of an empty vertex set");
        return out;
    }
    FaceSet covered;
    for (auto f : facets) {
        if (f.empty()) throw InvalidInput("empty facet");
        if (!f.is_subset_of(all)) throw InvalidInput("facet vertex out of range");
        covered = covered | f;
    }
    for (auto v : (all - covered).indices()) facets.push_back(FaceSet{v});
    out.facets_ = maximal_sets(std::move(facets));
    return out;
}

SimplicialComplex SimplicialComplex::from_named_facets(
    const std::vector<std::vector<std::string>>& facets, std::vector<std::string> names) {
    SimplicialComplex lookup;
    lookup.names_ = names;
    std::vector<FaceSet> sets;
    sets.reserve(facets.size());
    for (const auto& f : facets) sets.push_back(lookup.face_from_names(f));
    return from_facets(std::move(sets), std::move(names));
}

std::optional<std::size_t> SimplicialComplex::index_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

int SimplicialComplex::dimension() const {
    return static_cast<int>(facets_.front().size()) - 1;
}

bool SimplicialComplex::is_pure() const { return pure(facets_); }

bool SimplicialComplex::is_face(FaceSet f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](FaceSet g) { return f.is_subset_of(g); });
}

std::vector<FaceSet> SimplicialComplex::subfacets() const {
    if (!is_pure()) throw Undefined("subfacets are only defined for pure complexes");
    std::vector<FaceSet> out;
    for (auto f : facets_)
        for (auto v : f.indices()) out.push_back(f - FaceSet{v});
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FaceSet> SimplicialComplex::faces() const {
    std::unordered_set<std::uint64_t> seen;
    std::vector<FaceSet> out;
    for (auto f : facets_) {
        // Enumerate submasks of f, including f and ∅.
        const std::uint64_t full = f.bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            if (seen.insert(sub).second) out.emplace_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), generator_less);
    return out;
}

FaceSet SimplicialComplex::face_from_names(const std::vector<std::string>& names) const {
    FaceSet f;
    for (const auto& n : names) {
        const auto idx = index_of(n);
        if (!idx) throw InvalidInput("unknown vertex '" + n + "'");
        f.insert(*idx);
    }
    return f;
}

std::vector<std::string> SimplicialComplex::face_names(FaceSet f) const {
    return names_on(names_, f);
}

SimplicialComplex elementary_simplex(std::size_t n) { return elementary_simplex(default_names(n)); }

SimplicialComplex elementary_simplex(std::vector<std::string> names) {
    if (names.size() > kMaxVertices) throw InvalidInput("simplex size out of range");
    if (names.empty()) return SimplicialComplex();
    const auto all = FaceSet::range(names.size());
    return SimplicialComplex::from_facets({all}, std::move(names));
}

SimplicialComplex boundary_complex(std::size_t n) { return boundary_complex(default_names(n)); }

SimplicialComplex boundary_complex(std::vector<std::string> names) {
    if (names.size() < 2 || names.size() > kMaxVertices)
        throw InvalidInput("boundary complex needs 2..64 vertices");
    const auto all = FaceSet::range(names.size());
    std::vector<FaceSet> facets;
    for (std::size_t v = 0; v < names.size(); ++v) facets.push_back(all - FaceSet{v});
    return SimplicialComplex::from_facets(std::move(facets), std::move(names));
}

SimplicialComplex cone_union(const SimplicialComplex& complex, FaceSet face,
                             const std::string& new_vertex, std::size_t position) {
    if (!complex.is_face(face) || !face.is_subset_of(complex.vertex_set()))
        throw InvalidInput("cone base is not a face of the complex");
    if (complex.index_of(new_vertex))
        throw InvalidInput("vertex name '" + new_vertex + "' already in use");
    if (position > complex.vertex_count()) throw InvalidInput("cone vertex position out of range");
    if (complex.vertex_count() + 1 > kMaxVertices) throw InvalidInput("vertex capacity exceeded");

    auto names = complex.names();
    names.insert(names.begin() + static_cast<std::ptrdiff_t>(position), new_vertex);
    std::vector<FaceSet> facets;
    for (auto f : complex.facets())
        if (!f.empty()) facets.push_back(spread(f, position));
    FaceSet apex = spread(face, position);
    apex.insert(position);
    facets.push_back(apex);
    return SimplicialComplex::from_facets(std::move(facets), std::move(names));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, FaceSet subset) {
    if (!subset.is_subset_of(complex.vertex_set()))
        throw InvalidInput("induced subset is not contained in the vertex set");
    return restricted_complex(complex.facets(), subset, complex.names());
}

SimplicialComplex join(const SimplicialComplex& lhs, const SimplicialComplex& rhs) {
    for (const auto& n : rhs.names())
        if (lhs.index_of(n)) throw InvalidInput("join requires disjoint vertex sets ('" + n + "')");
    if (lhs.vertex_count() + rhs.vertex_count() > kMaxVertices)
        throw InvalidInput("vertex capacity exceeded");
    auto names = lhs.names();
    names.insert(names.end(), rhs.names().begin(), rhs.names().end());
    const auto shift = lhs.vertex_count();
    std::vector<FaceSet> facets;
    for (auto a : lhs.facets())
        for (auto b : rhs.facets()) facets.push_back(a | FaceSet(b.bits() << shift));
    if (names.empty()) return SimplicialComplex();
    return SimplicialComplex::from_facets(std::move(facets), std::move(names));
}

bool is_strongly_connected(const SimplicialComplex& complex) {
    if (!complex.is_pure()) throw Undefined("strong connectivity is only defined for pure complexes");
    const auto& facets = complex.facets();
    const auto sub = facets.front().size() - (facets.front().empty() ? 0 : 1);
    std::vector<bool> reached(facets.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    reached[0] = true;
    while (!todo.empty()) {
        const auto a = todo.front();
        todo.pop();
        for (std::size_t b = 0; b < facets.size(); ++b) {
            if (!reached[b] && (facets[a] & facets[b]).size() == sub) {
                reached[b] = true;
                todo.push(b);
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

SimplicialComplex replay(const PeelSequence& peel) {
    SimplicialComplex current = peel.terminal;
    for (auto it = peel.steps.rbegin(); it != peel.steps.rend(); ++it)
        current = cone_union(current, it->base, it->vertex, it->index);
    return current;
}

std::optional<PeelSequence> peel_generalized_tree(const SimplicialComplex& complex) {
    PeelSequence out;
    std::vector<FaceSet> facets = complex.facets();
    FaceSet alive = complex.vertex_set();
    while (!(facets.size() == 1 && facets.front() == alive)) {
        bool peeled = false;
        for (auto v : alive.indices()) {
            FaceSet home;
            if (facet_count_containing(facets, v, &home) != 1) continue;
            const FaceSet rest = alive - FaceSet{v};
            out.steps.push_back({complex.name(v), rank_in(v, alive), compress(home - FaceSet{v}, rest)});
            alive = rest;
            facets = restrict_facets(facets, alive);
            peeled = true;
            break;
        }
        if (!peeled) return std::nullopt;
    }
    out.terminal = restricted_complex(complex.facets(), alive, complex.names());
    return out;
}

bool is_generalized_tree(const SimplicialComplex& complex) {
    return peel_generalized_tree(complex).has_value();
}

bool is_d_tree(const SimplicialComplex& complex) {
    return complex.is_pure() && is_strongly_connected(complex) && is_generalized_tree(complex);
}

std::optional<Lemma3Shape> recognize_lemma3_shape(const SimplicialComplex& complex) {
    if (!complex.is_pure() || !is_strongly_connected(complex)) return std::nullopt;
    const int d = complex.dimension();
    if (d < 2) return std::nullopt;  // r >= 4 needs d + 2 >= 4

    Lemma3Shape shape;
    std::vector<FaceSet> facets = complex.facets();
    FaceSet alive = complex.vertex_set();
    for (bool peeled = true; peeled;) {
        peeled = false;
        for (auto v : alive.indices()) {
            FaceSet home;
            if (facet_count_containing(facets, v, &home) != 1) continue;
            const FaceSet rest = alive - FaceSet{v};
            auto next = restrict_facets(facets, rest);
            if (!pure(next) || static_cast<int>(next.front().size()) != d + 1) continue;
            shape.branches.steps.push_back(
                {complex.name(v), rank_in(v, alive), compress(home - FaceSet{v}, rest)});
            alive = rest;
            facets = std::move(next);
            peeled = true;
            break;
        }
    }
    if (alive.size() != static_cast<std::size_t>(d) + 2) return std::nullopt;
    // Pure of dimension d on d+2 vertices: facets are alive∖{v} for v in the
    // unique minimal non-face.
    FaceSet nonface;
    for (auto f : facets) nonface = nonface | (alive - f);
    shape.r = nonface.size();
    if (shape.r < 4 || shape.r > static_cast<std::size_t>(d) + 2) return std::nullopt;
    shape.branches.terminal = restricted_complex(complex.facets(), alive, complex.names());
    for (auto v : nonface.indices()) shape.core_relabeling.push_back(v);
    for (auto v : (alive - nonface).indices()) shape.core_relabeling.push_back(v);
    return shape;
}

}  // namespace conerank
