#include "conerank/random_complexes.hpp"

#include <algorithm>

#include "conerank/error.hpp"

namespace conerank {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string fresh_name(const SimplicialComplex& c) {
    for (std::size_t k = c.vertex_count() + 1;; ++k) {
        auto name = "x" + std::to_string(k);
        if (!c.index_of(name)) return name;
    }
}

}  // namespace

SimplicialComplex random_complex(Rng& rng, std::size_t n) {
    if (n == 0 || n > kMaxVertices) throw InvalidInput("random_complex needs 1..64 vertices");
    const std::size_t count = uniform(rng, 1, n + 2);
    std::vector<FaceSet> facets;
    for (std::size_t k = 0; k < count; ++k) {
        FaceSet f;
        const std::size_t size = uniform(rng, 1, n);
        while (f.size() < size) f.insert(uniform(rng, 0, n - 1));
        facets.push_back(f);
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return SimplicialComplex::from_facets(std::move(facets), std::move(names));
}

SimplicialComplex random_generalized_tree(Rng& rng, std::size_t n) {
    if (n == 0) throw InvalidInput("random_generalized_tree needs n >= 1");
    auto current = elementary_simplex(std::min<std::size_t>(n, uniform(rng, 1, 3)));
    while (current.vertex_count() < n) {
        const auto faces = current.faces();
        const auto face = faces[uniform(rng, 0, faces.size() - 1)];
        current = cone_union(current, face, fresh_name(current), uniform(rng, 0, current.vertex_count()));
    }
    return current;
}

SimplicialComplex random_d_tree(Rng& rng, std::size_t d, std::size_t steps) {
    auto current = elementary_simplex(d + 1);
    for (std::size_t k = 0; k < steps; ++k) {
        const auto subfacets = current.subfacets();
        const auto face = subfacets[uniform(rng, 0, subfacets.size() - 1)];
        current = cone_union(current, face, fresh_name(current), uniform(rng, 0, current.vertex_count()));
    }
    return current;
}

FaceSet random_proper_face(Rng& rng, const SimplicialComplex& complex) {
    auto faces = complex.faces();
    faces.erase(std::remove(faces.begin(), faces.end(), complex.vertex_set()), faces.end());
    if (faces.empty()) throw InvalidInput("complex has no proper face");
    return faces[uniform(rng, 0, faces.size() - 1)];
}

}  // namespace conerank
