#include "conerank/rank.hpp"

#include <gmpxx.h>

namespace conerank {

namespace {

std::size_t rank_mod_p(const IntMatrix& input, std::uint64_t p) {
    const std::size_t rows = input.size();
    if (rows == 0) return 0;
    const std::size_t cols = input[0].size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    const auto sp = static_cast<long long>(p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long long v = input[i][j] % sp;
            a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + sp : v);
        }
    const Field field = Field::prime(p);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const auto inv = FieldElement(field, static_cast<long long>(a[rank][col])).inverse().residue();
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            const std::uint64_t factor = a[i][col] * inv % p;
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = (a[i][j] + (p - factor) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_bareiss(const IntMatrix& input) {
    const std::size_t rows = input.size();
    if (rows == 0) return 0;
    const std::size_t cols = input[0].size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(input[i][j]);
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& rows, Field field) {
    if (field.is_prime()) return rank_mod_p(rows, field.characteristic());
    return rank_bareiss(rows);
}

}  // namespace conerank
