#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conerank/field.hpp"
#include "conerank/simplicial_complex.hpp"

namespace conerank {

/// Reduced homology dimensions in degrees -1..dim Δ.
struct HomologyProfile {
    std::vector<std::size_t> dims;         // dims[k + 1] = dim H̃_k
    std::vector<std::size_t> face_counts;  // face_counts[k + 1] = number of k-faces (∅ is the (-1)-face)

    std::size_t dim(int k) const {
        const auto idx = static_cast<std::ptrdiff_t>(k) + 1;
        return idx < 0 || idx >= static_cast<std::ptrdiff_t>(dims.size()) ? 0 : dims[static_cast<std::size_t>(idx)];
    }
    bool acyclic() const;
};

/// Reduced simplicial homology of the augmented chain complex over `field`.
HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field);

/// Graded Betti numbers β_{i,j} of K[Δ] = K[X]/I_Δ.
class BettiTable {
public:
    BettiTable(Field field, std::map<std::pair<int, int>, std::uint64_t> entries);

    const Field& field() const { return field_; }
    std::uint64_t at(int i, int j) const;
    /// β_i = Σ_j β_{i,j}.
    std::uint64_t total(int i) const;
    /// Nonzero entries only.
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
    /// Largest i with β_i ≠ 0.
    int max_homological_degree() const;

    bool operator==(const BettiTable&) const = default;

private:
    Field field_;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

inline constexpr std::size_t kMaxBettiVertices = 16;

/// Hochster's formula: β_{i,j} = Σ_{|Y| = j} dim H̃_{j-i-1}(Δ_Y).
/// Throws InvalidInput above kMaxBettiVertices vertices.
BettiTable graded_betti(const SimplicialComplex& complex, Field field);

std::size_t proj_dim(const SimplicialComplex& complex, Field field);
std::size_t proj_dim(const BettiTable& table);

/// reg I_Δ = max{ j - i : β_{i,j} ≠ 0, i >= 1 } + 1. Throws Undefined for a
/// simplex (zero ideal).
std::size_t regularity(const SimplicialComplex& complex, Field field);
std::size_t regularity(const BettiTable& table);

/// All generators quadratic and reg I_Δ = 2. Throws Undefined for a simplex.
bool has_2_linear_resolution(const SimplicialComplex& complex, Field field);

/// max(pd K[Δ] + 1, n - |F|), the predicted pd of K[Δ ∪ co F].
/// Throws InvalidInput when F is not a face or F = X.
std::size_t lemma1_rhs(const SimplicialComplex& complex, FaceSet face, Field field);

/// Rows i, columns j; a '.' marks zero.
std::string format_betti_table(const BettiTable& table);

}  // namespace conerank
