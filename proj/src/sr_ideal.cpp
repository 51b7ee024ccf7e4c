#include "conerank/sr_ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "conerank/error.hpp"
#include "conerank/hochster.hpp"

namespace conerank {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<FaceSet> generators) : nvars_(nvars) {
    const auto all = FaceSet::range(nvars);
    for (auto g : generators)
        if (!g.is_subset_of(all)) throw InvalidInput("generator uses a variable out of range");
    std::sort(generators.begin(), generators.end(), generator_less);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto g : generators) {
        const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                           [&](FaceSet kept) { return kept.is_subset_of(g); });
        if (!redundant) generators_.push_back(g);
    }
}

bool MonomialIdeal::contains_support(FaceSet support) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](FaceSet g) { return g.is_subset_of(support); });
}

bool MonomialIdeal::contains(const Polynomial& f) const {
    for (const auto& t : f.terms()) {
        FaceSet support;
        for (std::size_t i = 0; i < t.monomial.nvars(); ++i)
            if (t.monomial[i] != 0) support.insert(i);
        if (!contains_support(support)) return false;
    }
    return true;
}

std::vector<Polynomial> MonomialIdeal::generator_polynomials(Field field) const {
    std::vector<Polynomial> out;
    for (auto g : generators_) {
        Monomial m(nvars_);
        for (auto i : g.indices()) m.set(i, 1);
        out.push_back(Polynomial::monomial(field, m, FieldElement(field, 1)));
    }
    return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    const auto n = complex.vertex_count();
    std::vector<FaceSet> nonfaces;
    // Faces of size k-1; a k-set is a minimal non-face iff it is not a face and
    // every (k-1)-subset is a face.
    std::unordered_set<std::uint64_t> previous{0};
    for (std::size_t k = 1; k <= n && !previous.empty(); ++k) {
        std::unordered_set<std::uint64_t> current;
        std::unordered_set<std::uint64_t> tried;
        for (auto base : previous) {
            for (std::size_t v = 0; v < n; ++v) {
                const FaceSet b(base);
                if (b.contains(v)) continue;
                FaceSet cand = b;
                cand.insert(v);
                if (!tried.insert(cand.bits()).second) continue;
                if (complex.is_face(cand)) {
                    current.insert(cand.bits());
                    continue;
                }
                bool minimal = true;
                for (auto u : cand.indices()) {
                    if (!previous.count((cand - FaceSet{u}).bits())) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) nonfaces.push_back(cand);
            }
        }
        previous = std::move(current);
    }
    return MonomialIdeal(n, std::move(nonfaces));
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal, std::vector<std::string> names) {
    if (names.size() != ideal.nvars())
        throw InvalidInput("name count does not match the ideal's variable count");
    for (auto g : ideal.generators())
        if (g.size() <= 1) throw InvalidInput("ideal has a generator of degree at most one");
    // Minimal transversals of the generator hypergraph are the complements of
    // the facets (Berge's incremental algorithm).
    std::vector<FaceSet> transversals{FaceSet{}};
    for (auto g : ideal.generators()) {
        std::vector<FaceSet> next;
        for (auto t : transversals) {
            if (t.intersects(g)) {
                next.push_back(t);
            } else {
                for (auto v : g.indices()) {
                    FaceSet grown = t;
                    grown.insert(v);
                    next.push_back(grown);
                }
            }
        }
        std::sort(next.begin(), next.end(), generator_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        transversals.clear();
        for (auto t : next) {
            const bool redundant = std::any_of(transversals.begin(), transversals.end(),
                                               [&](FaceSet kept) { return kept.is_subset_of(t); });
            if (!redundant) transversals.push_back(t);
        }
    }
    const auto all = FaceSet::range(names.size());
    std::vector<FaceSet> facets;
    for (auto t : transversals) facets.push_back(all - t);
    if (names.empty()) return SimplicialComplex();
    return SimplicialComplex::from_facets(std::move(facets), std::move(names));
}

PrimeList minimal_primes(const SimplicialComplex& complex) {
    PrimeList out;
    for (auto f : complex.facets()) out.push_back(complex.vertex_set() - f);
    return out;
}

std::size_t height(const SimplicialComplex& complex) {
    return complex.vertex_count() - complex.facets().front().size();
}

std::size_t degree(const SimplicialComplex& complex) {
    const auto top = complex.facets().front().size();
    return static_cast<std::size_t>(std::count_if(complex.facets().begin(), complex.facets().end(),
                                                  [&](FaceSet f) { return f.size() == top; }));
}

bool is_unmixed(const SimplicialComplex& complex) {
    const auto primes = minimal_primes(complex);
    return std::all_of(primes.begin(), primes.end(),
                       [&](FaceSet p) { return p.size() == primes.front().size(); });
}

std::size_t ara_lower_bound(const SimplicialComplex& complex, Field field) {
    std::size_t bigheight = 0;
    for (auto p : minimal_primes(complex)) bigheight = std::max(bigheight, p.size());
    return std::max(proj_dim(complex, field), bigheight);
}

std::string format_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
    std::string out;
    for (auto g : ideal.generators()) {
        std::string line;
        for (auto i : g.indices()) {
            if (!line.empty()) line += '*';
            line += names.at(i);
        }
        out += (line.empty() ? "1" : line) + "\n";
    }
    return out;
}

}  // namespace conerank
