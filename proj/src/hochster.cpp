#include "conerank/hochster.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "conerank/error.hpp"
#include "conerank/rank.hpp"
#include "conerank/sr_ideal.hpp"

namespace conerank {

namespace {

std::vector<FaceSet> faces_of(const std::vector<FaceSet>& facets) {
    std::vector<std::uint64_t> seen;
    for (auto f : facets) {
        const std::uint64_t full = f.bits();
        for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
            seen.push_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<FaceSet> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](FaceSet a, FaceSet b) { return a.size() < b.size(); });
    return out;
}

HomologyProfile homology_of_facets(const std::vector<FaceSet>& facets, Field field) {
    const auto faces = faces_of(facets);
    const std::size_t top = faces.back().size();  // number of levels is top + 1
    std::vector<std::vector<FaceSet>> levels(top + 1);
    for (auto f : faces) levels[f.size()].push_back(f);

    // rank_of[k] = rank of the boundary from level k to level k-1 (k >= 1).
    std::vector<std::size_t> rank_of(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) {
        std::unordered_map<std::uint64_t, std::size_t> row_of;
        for (std::size_t r = 0; r < levels[k - 1].size(); ++r) row_of[levels[k - 1][r].bits()] = r;
        IntMatrix m(levels[k - 1].size(), std::vector<long long>(levels[k].size(), 0));
        for (std::size_t c = 0; c < levels[k].size(); ++c) {
            const auto face = levels[k][c];
            long long sign = 1;
            for (auto v : face.indices()) {
                m[row_of.at((face - FaceSet{v}).bits())][c] = sign;
                sign = -sign;
            }
        }
        rank_of[k] = matrix_rank(m, field);
    }
    HomologyProfile out;
    for (std::size_t k = 0; k <= top; ++k) {
        out.face_counts.push_back(levels[k].size());
        out.dims.push_back(levels[k].size() - rank_of[k] - rank_of[k + 1]);
    }
    return out;
}

std::vector<FaceSet> induced_facets(const std::vector<FaceSet>& facets, FaceSet keep) {
    std::vector<FaceSet> out;
    out.reserve(facets.size());
    for (auto f : facets) out.push_back(f & keep);
    return maximal_sets(std::move(out));
}

}  // namespace

bool HomologyProfile::acyclic() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field) {
    return homology_of_facets(complex.facets(), field);
}

BettiTable::BettiTable(Field field, std::map<std::pair<int, int>, std::uint64_t> entries)
    : field_(field) {
    for (auto& [key, value] : entries)
        if (value != 0) entries_.emplace(key, value);
}

std::uint64_t BettiTable::at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(int i) const {
    std::uint64_t sum = 0;
    for (const auto& [key, value] : entries_)
        if (key.first == i) sum += value;
    return sum;
}

int BettiTable::max_homological_degree() const {
    int best = 0;
    for (const auto& [key, value] : entries_) best = std::max(best, key.first);
    return best;
}

BettiTable graded_betti(const SimplicialComplex& complex, Field field) {
    const auto n = complex.vertex_count();
    if (n > kMaxBettiVertices)
        throw InvalidInput("Betti enumeration is capped at " + std::to_string(kMaxBettiVertices) +
                           " vertices, got " + std::to_string(n));
    std::map<std::pair<int, int>, std::uint64_t> entries;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const FaceSet y(mask);
        const int j = static_cast<int>(y.size());
        const auto profile = homology_of_facets(induced_facets(complex.facets(), y), field);
        for (int k = -1; k + 1 < static_cast<int>(profile.dims.size()); ++k) {
            const auto d = profile.dim(k);
            if (d != 0) entries[{j - k - 1, j}] += d;
        }
    }
    return BettiTable(field, std::move(entries));
}

std::size_t proj_dim(const BettiTable& table) {
    return static_cast<std::size_t>(table.max_homological_degree());
}

std::size_t proj_dim(const SimplicialComplex& complex, Field field) {
    return proj_dim(graded_betti(complex, field));
}

std::size_t regularity(const BettiTable& table) {
    int best = -1;
    for (const auto& [key, value] : table.entries())
        if (key.first >= 1) best = std::max(best, key.second - key.first);
    if (best < 0) throw Undefined("regularity of the zero ideal is not defined");
    return static_cast<std::size_t>(best + 1);
}

std::size_t regularity(const SimplicialComplex& complex, Field field) {
    if (complex.is_simplex()) throw Undefined("regularity of the zero ideal is not defined");
    return regularity(graded_betti(complex, field));
}

bool has_2_linear_resolution(const SimplicialComplex& complex, Field field) {
    if (complex.is_simplex()) throw Undefined("a simplex has the zero Stanley-Reisner ideal");
    const auto ideal = stanley_reisner_ideal(complex);
    const bool quadratic = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                       [](FaceSet g) { return g.size() == 2; });
    return quadratic && regularity(complex, field) == 2;
}

std::size_t lemma1_rhs(const SimplicialComplex& complex, FaceSet face, Field field) {
    if (!complex.is_face(face)) throw InvalidInput("F is not a face");
    if (face == complex.vertex_set()) throw InvalidInput("F must differ from the vertex set");
    return std::max(proj_dim(complex, field) + 1, complex.vertex_count() - face.size());
}

std::string format_betti_table(const BettiTable& table) {
    int max_i = 0, max_j = 0;
    for (const auto& [key, value] : table.entries()) {
        max_i = std::max(max_i, key.first);
        max_j = std::max(max_j, key.second);
    }
    std::size_t width = 1;
    for (const auto& [key, value] : table.entries()) width = std::max(width, std::to_string(value).size());
    width = std::max(width, std::to_string(max_j).size());
    std::ostringstream out;
    out << "i\\j ";
    for (int j = 0; j <= max_j; ++j) out << ' ' << std::setw(static_cast<int>(width)) << j;
    out << '\n';
    for (int i = 0; i <= max_i; ++i) {
        out << std::setw(3) << i << ' ';
        for (int j = 0; j <= max_j; ++j) {
            const auto v = table.at(i, j);
            out << ' ' << std::setw(static_cast<int>(width)) << (v == 0 ? std::string(".") : std::to_string(v));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace conerank
