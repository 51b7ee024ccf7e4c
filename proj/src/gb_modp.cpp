#include "gb_modp.hpp"

#include <algorithm>
#include <tuple>

#include "conerank/error.hpp"

namespace conerank::modp {

namespace {

constexpr std::uint64_t kHigh = 0x8000800080008000ULL;

std::size_t lane_word(std::size_t lane) { return lane / 4; }
unsigned lane_shift(std::size_t lane) { return static_cast<unsigned>(48 - 16 * (lane % 4)); }

std::uint32_t lane_get(const Mono& m, std::size_t lane) {
    return static_cast<std::uint32_t>((m.w[lane_word(lane)] >> lane_shift(lane)) & 0xffffU);
}

void lane_set(Mono& m, std::size_t lane, std::uint32_t e) {
    auto& word = m.w[lane_word(lane)];
    const unsigned s = lane_shift(lane);
    word = (word & ~(std::uint64_t{0xffff} << s)) | (std::uint64_t{e} << s);
}

std::uint32_t powmod(std::uint32_t b, std::uint32_t e, std::uint32_t p) {
    std::uint64_t r = 1, x = b % p;
    for (; e != 0; e >>= 1) {
        if (e & 1U) r = r * x % p;
        x = x * x % p;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint16_t support_mask(const Mono& m) {
    std::uint16_t mask = 0;
    for (std::size_t lane = 0; lane < kMaxVars; ++lane)
        if (lane_get(m, lane) != 0) mask = static_cast<std::uint16_t>(mask | (1U << lane));
    return mask;
}

// Ascending run of terms, the unit a geobucket works with.
struct Run {
    std::vector<Mono> mono;
    std::vector<std::uint32_t> coeff;

    std::size_t size() const { return mono.size(); }
    bool empty() const { return mono.empty(); }
    void clear() {
        mono.clear();
        coeff.clear();
    }
};

Run merge(const Run& a, const Run& b, std::uint32_t p) {
    Run out;
    out.mono.reserve(a.size() + b.size());
    out.coeff.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const int c = compare(a.mono[i], b.mono[j]);
        if (c < 0) {
            out.mono.push_back(a.mono[i]);
            out.coeff.push_back(a.coeff[i++]);
        } else if (c > 0) {
            out.mono.push_back(b.mono[j]);
            out.coeff.push_back(b.coeff[j++]);
        } else {
            std::uint32_t s = a.coeff[i] + b.coeff[j];
            if (s >= p) s -= p;
            if (s != 0) {
                out.mono.push_back(a.mono[i]);
                out.coeff.push_back(s);
            }
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) {
        out.mono.push_back(a.mono[i]);
        out.coeff.push_back(a.coeff[i]);
    }
    for (; j < b.size(); ++j) {
        out.mono.push_back(b.mono[j]);
        out.coeff.push_back(b.coeff[j]);
    }
    return out;
}

class Geobucket {
public:
    explicit Geobucket(std::uint32_t p) : p_(p) {}

    void add(Run run) {
        if (run.empty()) return;
        std::size_t k = 0;
        while (capacity(k) < run.size()) ++k;
        for (;;) {
            if (buckets_.size() <= k) buckets_.resize(k + 1);
            if (buckets_[k].empty()) {
                buckets_[k] = std::move(run);
            } else {
                buckets_[k] = merge(buckets_[k], run, p_);
            }
            if (buckets_[k].size() <= capacity(k)) return;
            run = std::move(buckets_[k]);
            buckets_[k].clear();
            ++k;
        }
    }

    /// Pops the leading term; false when nothing is left.
    bool pop_leading(Mono& mono, std::uint32_t& coeff) {
        for (;;) {
            const Mono* best = nullptr;
            for (auto& b : buckets_) {
                if (b.empty()) continue;
                if (best == nullptr || compare(b.mono.back(), *best) > 0) best = &b.mono.back();
            }
            if (best == nullptr) return false;
            const Mono top = *best;
            std::uint64_t sum = 0;
            for (auto& b : buckets_) {
                if (!b.empty() && b.mono.back() == top) {
                    sum += b.coeff.back();
                    b.mono.pop_back();
                    b.coeff.pop_back();
                }
            }
            sum %= p_;
            if (sum != 0) {
                mono = top;
                coeff = static_cast<std::uint32_t>(sum);
                return true;
            }
        }
    }

private:
    static std::size_t capacity(std::size_t k) { return std::size_t{8} << (2 * k); }

    std::uint32_t p_;
    std::vector<Run> buckets_;
};

// coeff * mono * (f without its leading term), ascending.
Run scaled_tail(const Poly& f, const Mono& mono, std::uint32_t coeff, const Ring& ring) {
    Run out;
    if (f.size() < 2) return out;
    out.mono.reserve(f.size() - 1);
    out.coeff.reserve(f.size() - 1);
    for (std::size_t k = f.size(); k-- > 1;) {
        out.mono.push_back(mono_mul(f.mono[k], mono));
        out.coeff.push_back(ring.mul(f.coeff[k], coeff));
    }
    return out;
}

Run as_run(const Poly& f) {
    Run out;
    out.mono.assign(f.mono.rbegin(), f.mono.rend());
    out.coeff.assign(f.coeff.rbegin(), f.coeff.rend());
    return out;
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Mono lcm;
    std::uint32_t sugar;
};

class Engine {
public:
    Engine(const Ring& ring, std::size_t max_pairs, std::optional<std::chrono::steady_clock::time_point> deadline)
        : ring_(ring), max_pairs_(max_pairs), deadline_(deadline) {}

    Result run(std::vector<Poly> generators) {
        // Small generators first keeps early reductions cheap.
        std::stable_sort(generators.begin(), generators.end(),
                         [](const Poly& a, const Poly& b) { return compare(a.mono.front(), b.mono.front()) < 0; });
        for (auto& g : generators) {
            if (g.empty()) continue;
            Geobucket bucket(ring_.p());
            bucket.add(as_run(g));
            auto r = reduce(bucket, g.sugar);
            if (!r) return incomplete();
            if (!add(std::move(*r))) return unit();
        }
        while (!pairs_.empty()) {
            if (overflow_ || result_.pairs_reduced >= max_pairs_ || expired()) return incomplete();
            auto pick = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                const int c = compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
            const Pair pair = *pick;
            *pick = pairs_.back();
            pairs_.pop_back();
            ++result_.pairs_reduced;
            Geobucket bucket(ring_.p());
            const auto& f = polys_[pair.i];
            const auto& g = polys_[pair.j];
            bucket.add(scaled_tail(f, mono_div(pair.lcm, f.mono.front()), 1, ring_));
            bucket.add(scaled_tail(g, mono_div(pair.lcm, g.mono.front()), ring_.p() - 1, ring_));
            auto r = reduce(bucket, pair.sugar);
            if (!r) return incomplete();
            if (!add(std::move(*r))) return unit();
        }
        return finish();
    }

private:
    bool expired() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }

    Result incomplete() {
        result_.complete = false;
        return result_;
    }

    Result unit() {
        result_.unit = true;
        result_.complete = true;
        Poly one;
        one.mono.push_back(Mono{});
        one.coeff.push_back(1);
        result_.basis = {one};
        return result_;
    }

    // Full reduction by the active basis; result is monic. Nullopt on timeout.
    std::optional<Poly> reduce(Geobucket& bucket, std::uint32_t sugar) {
        Poly out;
        out.sugar = sugar;
        Mono lt;
        std::uint32_t lc = 0;
        std::size_t steps = 0;
        while (bucket.pop_leading(lt, lc)) {
            if ((++steps & 1023U) == 0 && expired()) return std::nullopt;
            const std::uint16_t mask = support_mask(lt);
            const Poly* divisor = nullptr;
            for (auto idx : active_) {
                if ((masks_[idx] & ~mask) != 0) continue;
                if (mono_divides(polys_[idx].mono.front(), lt)) {
                    divisor = &polys_[idx];
                    break;
                }
            }
            if (divisor == nullptr) {
                out.mono.push_back(lt);
                out.coeff.push_back(lc);
                continue;
            }
            const Mono q = mono_div(lt, divisor->mono.front());
            // Divisors are monic: subtract lc * q * divisor.
            bucket.add(scaled_tail(*divisor, q, ring_.p() - lc, ring_));
            out.sugar = std::max(out.sugar, divisor->sugar + q.deg);
        }
        if (!out.empty() && out.coeff.front() != 1) {
            const auto inv = ring_.inv(out.coeff.front());
            for (auto& c : out.coeff) c = ring_.mul(c, inv);
        }
        return out;
    }

    // Returns false when h is a nonzero constant.
    bool add(Poly h) {
        if (h.empty()) return true;
        if (h.mono.front().deg == 0) return false;
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        masks_.push_back(support_mask(polys_[hi].mono.front()));
        const Mono lh = polys_[hi].mono.front();
        const std::uint32_t sugar_h = polys_[hi].sugar;

        std::vector<Pair> fresh;
        for (auto g : active_) {
            const Mono l = mono_lcm(lh, polys_[g].mono.front());
            // Reductions never exceed the lcm degree in a degree order.
            if (l.deg > kMaxDegree) overflow_ = true;
            const std::uint32_t s =
                std::max(sugar_h + (l.deg - lh.deg), polys_[g].sugar + (l.deg - polys_[g].mono.front().deg));
            fresh.push_back({g, hi, l, s});
        }
        std::vector<Pair> kept;
        for (std::size_t k = 0; k < fresh.size(); ++k) {
            const auto& cand = fresh[k];
            bool drop = false;
            for (std::size_t m = k + 1; m < fresh.size() && !drop; ++m)
                drop = mono_divides(fresh[m].lcm, cand.lcm) && !(fresh[m].lcm == cand.lcm);
            for (std::size_t m = 0; m < kept.size() && !drop; ++m) drop = mono_divides(kept[m].lcm, cand.lcm);
            if (!drop) kept.push_back(cand);
        }
        std::vector<Pair> next;
        next.reserve(pairs_.size() + kept.size());
        for (auto& p : pairs_) {
            const bool chain = mono_divides(lh, p.lcm) &&
                               !(mono_lcm(polys_[p.i].mono.front(), lh) == p.lcm) &&
                               !(mono_lcm(polys_[p.j].mono.front(), lh) == p.lcm);
            if (!chain) next.push_back(p);
        }
        for (auto& p : kept)
            if (!mono_coprime(lh, polys_[p.i].mono.front())) next.push_back(p);
        pairs_ = std::move(next);

        std::vector<std::size_t> still;
        for (auto g : active_)
            if (!mono_divides(lh, polys_[g].mono.front())) still.push_back(g);
        still.push_back(hi);
        active_ = std::move(still);
        return true;
    }

    Result finish() {
        std::vector<std::size_t> keep = active_;
        std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
            return compare(polys_[a].mono.front(), polys_[b].mono.front()) < 0;
        });
        for (auto idx : keep) {
            const Poly& f = polys_[idx];
            // Tail-reduce against the others; leading monomials are pairwise
            // non-dividing, so only tails change.
            Geobucket bucket(ring_.p());
            Run tail;
            for (std::size_t k = f.size(); k-- > 1;) {
                tail.mono.push_back(f.mono[k]);
                tail.coeff.push_back(f.coeff[k]);
            }
            bucket.add(std::move(tail));
            Poly out;
            out.sugar = f.sugar;
            out.mono.push_back(f.mono.front());
            out.coeff.push_back(1);
            Mono lt;
            std::uint32_t lc = 0;
            while (bucket.pop_leading(lt, lc)) {
                const std::uint16_t mask = support_mask(lt);
                const Poly* divisor = nullptr;
                for (auto other : keep) {
                    if (other == idx || (masks_[other] & ~mask) != 0) continue;
                    if (mono_divides(polys_[other].mono.front(), lt)) {
                        divisor = &polys_[other];
                        break;
                    }
                }
                if (divisor == nullptr) {
                    out.mono.push_back(lt);
                    out.coeff.push_back(lc);
                } else {
                    bucket.add(scaled_tail(*divisor, mono_div(lt, divisor->mono.front()), ring_.p() - lc, ring_));
                }
            }
            result_.basis.push_back(std::move(out));
        }
        result_.complete = true;
        return result_;
    }

    const Ring& ring_;
    std::size_t max_pairs_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<Poly> polys_;
    std::vector<std::uint16_t> masks_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    bool overflow_ = false;
    Result result_;
};

}  // namespace

Ring::Ring(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {
    if (nvars > kMaxVars) throw InvalidInput("modular kernel supports at most 16 variables");
}

Mono Ring::pack(const Monomial& m) const {
    Mono out;
    for (std::size_t i = 0; i < nvars_; ++i) lane_set(out, nvars_ - 1 - i, m[i]);
    out.deg = static_cast<std::uint32_t>(m.degree());
    return out;
}

Monomial Ring::unpack(const Mono& m) const {
    std::vector<std::uint32_t> exps(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) exps[i] = lane_get(m, nvars_ - 1 - i);
    return Monomial(std::move(exps));
}

std::uint32_t Ring::exponent(const Mono& m, std::size_t var) const { return lane_get(m, nvars_ - 1 - var); }

std::optional<Poly> Ring::convert(const Polynomial& f) const {
    Poly out;
    out.mono.reserve(f.size());
    out.coeff.reserve(f.size());
    for (const auto& t : f.terms()) {
        if (t.monomial.degree() > kMaxDegree) return std::nullopt;
        out.mono.push_back(pack(t.monomial));
        out.coeff.push_back(static_cast<std::uint32_t>(t.coeff.residue()));
        out.sugar = std::max(out.sugar, out.mono.back().deg);
    }
    return out;
}

Polynomial Ring::back(const Poly& f, Field field) const {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
        terms.push_back({unpack(f.mono[k]), FieldElement(field, static_cast<long long>(f.coeff[k]))});
    return Polynomial::from_sorted_terms(field, nvars_, std::move(terms));
}

std::uint32_t Ring::inv(std::uint32_t a) const { return powmod(a, p_ - 2, p_); }

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    for (std::size_t k = 0; k < 4; ++k) out.w[k] = a.w[k] + b.w[k];
    out.deg = a.deg + b.deg;
    return out;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono out;
    for (std::size_t k = 0; k < 4; ++k) out.w[k] = a.w[k] - b.w[k];
    out.deg = a.deg - b.deg;
    return out;
}

bool mono_divides(const Mono& a, const Mono& b) {
    if (a.deg > b.deg) return false;
    // Lanes stay below 2^15, so (b | H) - a never borrows across lanes and
    // the high bit of each lane survives exactly when b >= a there.
    for (std::size_t k = 0; k < 4; ++k)
        if ((((b.w[k] | kHigh) - a.w[k]) & kHigh) != kHigh) return false;
    return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono out;
    std::uint32_t deg = 0;
    for (std::size_t lane = 0; lane < kMaxVars; ++lane) {
        const auto e = std::max(lane_get(a, lane), lane_get(b, lane));
        lane_set(out, lane, e);
        deg += e;
    }
    out.deg = deg;
    return out;
}

bool mono_coprime(const Mono& a, const Mono& b) { return (support_mask(a) & support_mask(b)) == 0; }

Result buchberger(const Ring& ring, std::vector<Poly> generators, std::size_t max_pairs,
                  std::optional<std::chrono::steady_clock::time_point> deadline) {
    for (const auto& g : generators)
        for (const auto& m : g.mono)
            if (m.deg > kMaxDegree) throw InvalidInput("exponent too large for the modular kernel");
    return Engine(ring, max_pairs, deadline).run(std::move(generators));
}

}  // namespace conerank::modp
