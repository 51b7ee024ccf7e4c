#include "conerank/groebner.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "conerank/error.hpp"
#include "conerank/poly_text.hpp"
#include "gb_modp.hpp"

namespace conerank {

namespace {

std::optional<std::chrono::steady_clock::time_point> deadline(const GroebnerOptions& options) {
    if (options.max_seconds <= 0) return std::nullopt;
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(options.max_seconds));
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

const Monomial& lead(const Polynomial& p) { return p.leading_term().monomial; }

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const Monomial& lcm) {
    // Both inputs are monic.
    const FieldElement one(a.field(), 1);
    return a.times_term(lcm / lead(a), one) - b.times_term(lcm / lead(b), one);
}

class Buchberger {
public:
    explicit Buchberger(const GroebnerOptions& options) : options_(options), deadline_(deadline(options)) {}

    GroebnerRun run(const std::vector<Polynomial>& generators) {
        GroebnerRun out;
        for (const auto& g : generators) {
            if (g.is_zero()) continue;
            out.basis.nvars = g.nvars();
            if (!add(normal_form(g.monic(), active_polys()).monic())) return unit(g, out);
        }
        while (!pairs_.empty()) {
            if (out.pairs_reduced >= options_.max_pairs ||
                (deadline_ && std::chrono::steady_clock::now() > *deadline_)) {
                out.complete = false;
                break;
            }
            const auto pick = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
                const int c = grevlex_compare(a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
            const Pair pair = *pick;
            pairs_.erase(pick);
            ++out.pairs_reduced;
            auto h = normal_form(s_polynomial(polys_[pair.i], polys_[pair.j], pair.lcm), active_polys());
            if (h.is_zero()) continue;
            if (!add(h.monic())) return unit(h, out);
        }
        // Interreduce the minimal basis.
        std::vector<std::size_t> keep = active_;
        std::sort(keep.begin(), keep.end(),
                  [&](std::size_t a, std::size_t b) { return grevlex_compare(lead(polys_[a]), lead(polys_[b])) < 0; });
        for (std::size_t k = 0; k < keep.size(); ++k) {
            std::vector<Polynomial> others;
            for (std::size_t m = 0; m < keep.size(); ++m)
                if (m != k) others.push_back(polys_[keep[m]]);
            auto tail = polys_[keep[k]];
            const Term head = tail.leading_term();
            tail.pop_leading_term();
            auto reduced = normal_form(tail, others);
            std::vector<Term> terms{head};
            terms.insert(terms.end(), reduced.terms().begin(), reduced.terms().end());
            out.basis.basis.push_back(Polynomial::from_sorted_terms(tail.field(), tail.nvars(), std::move(terms)));
        }
        return out;
    }

private:
    GroebnerRun unit(const Polynomial& like, GroebnerRun& out) {
        out.basis.basis = {Polynomial::constant(like.field(), like.nvars(), 1)};
        out.complete = true;
        return out;
    }

    std::vector<Polynomial> active_polys() const {
        std::vector<Polynomial> out;
        out.reserve(active_.size());
        for (auto i : active_) out.push_back(polys_[i]);
        return out;
    }

    // Returns false when h is a nonzero constant.
    bool add(Polynomial h) {
        if (h.is_zero()) return true;
        if (h.is_unit()) return false;
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        const Monomial& lh = lead(polys_[hi]);

        std::vector<Pair> fresh;
        for (auto g : active_) fresh.push_back({g, hi, lh.lcm(lead(polys_[g]))});
        std::vector<Pair> kept;
        for (std::size_t k = 0; k < fresh.size(); ++k) {
            const auto& cand = fresh[k];
            bool drop = false;
            if (!lh.coprime(lead(polys_[cand.i]))) {
                for (std::size_t m = k + 1; m < fresh.size() && !drop; ++m)
                    drop = fresh[m].lcm.divides(cand.lcm);
                for (std::size_t m = 0; m < kept.size() && !drop; ++m) drop = kept[m].lcm.divides(cand.lcm);
            }
            if (!drop) kept.push_back(cand);
        }
        std::vector<Pair> next;
        for (auto& p : pairs_) {
            const bool chain = lh.divides(p.lcm) && !(lead(polys_[p.i]).lcm(lh) == p.lcm) &&
                               !(lead(polys_[p.j]).lcm(lh) == p.lcm);
            if (!chain) next.push_back(std::move(p));
        }
        for (auto& p : kept)
            if (!lh.coprime(lead(polys_[p.i]))) next.push_back(std::move(p));
        pairs_ = std::move(next);

        std::vector<std::size_t> still;
        for (auto g : active_)
            if (!lh.divides(lead(polys_[g]))) still.push_back(g);
        still.push_back(hi);
        active_ = std::move(still);
        return true;
    }

    GroebnerOptions options_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<Polynomial> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

namespace {

std::optional<GroebnerRun> modular_run(const std::vector<Polynomial>& generators, const GroebnerOptions& options) {
    const Field field = generators.front().field();
    const std::size_t n = generators.front().nvars();
    if (!field.is_prime() || n > modp::kMaxVars) return std::nullopt;
    const modp::Ring ring(field.characteristic(), n);
    std::vector<modp::Poly> converted;
    for (const auto& g : generators) {
        auto c = ring.convert(g);
        if (!c) return std::nullopt;
        if (!c->empty()) converted.push_back(std::move(*c));
    }
    auto result = modp::buchberger(ring, std::move(converted), options.max_pairs, deadline(options));
    GroebnerRun run;
    run.complete = result.complete;
    run.pairs_reduced = result.pairs_reduced;
    run.basis.nvars = n;
    if (result.complete)
        for (const auto& b : result.basis) run.basis.basis.push_back(ring.back(b, field));
    return run;
}

}  // namespace

GroebnerRun buchberger(const std::vector<Polynomial>& generators, const GroebnerOptions& options) {
    for (std::size_t k = 1; k < generators.size(); ++k) {
        if (generators[k].nvars() != generators[0].nvars() || !(generators[k].field() == generators[0].field()))
            throw InvalidInput("generators live in different rings");
    }
    if (!generators.empty())
        if (auto run = modular_run(generators, options)) return *run;
    auto run = Buchberger(options).run(generators);
    if (!generators.empty()) run.basis.nvars = generators[0].nvars();
    return run;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::vector<Term> remainder;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        const Polynomial* divisor = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && lead(g).divides(lt.monomial)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(lt);
            p.pop_leading_term();
            continue;
        }
        const auto& gt = divisor->leading_term();
        p = p - divisor->times_term(lt.monomial / gt.monomial, lt.coeff / gt.coeff);
    }
    return Polynomial::from_sorted_terms(f.field(), f.nvars(), std::move(remainder));
}

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& generators, const GroebnerOptions& options) {
    if (f.is_zero()) return true;
    auto run = buchberger(generators, options);
    if (run.basis.is_unit()) return true;
    if (!run.complete) throw Inconclusive("ideal membership: S-pair budget exhausted");
    return normal_form(f, run.basis.basis).is_zero();
}

bool in_radical(const Polynomial& f, const std::vector<Polynomial>& generators, const GroebnerOptions& options,
                std::size_t* pairs_reduced) {
    if (f.is_zero()) return true;
    const std::size_t n = f.nvars();
    std::vector<std::size_t> same(n);
    for (std::size_t i = 0; i < n; ++i) same[i] = i;
    std::vector<Polynomial> extended;
    for (const auto& g : generators) {
        if (g.nvars() != n) throw InvalidInput("generator ring differs from the tested polynomial's");
        extended.push_back(map_variables(g, n + 1, same));
    }
    const auto fy = map_variables(f, n + 1, same) * Polynomial::variable(f.field(), n + 1, n);
    extended.push_back(Polynomial::constant(f.field(), n + 1, 1) - fy);
    auto run = buchberger(extended, options);
    if (pairs_reduced) *pairs_reduced += run.pairs_reduced;
    if (run.basis.is_unit()) return true;
    if (!run.complete) throw Inconclusive("radical membership: S-pair budget exhausted");
    return false;
}

VerificationReport verify_radical_presentation(const std::vector<Polynomial>& polynomials,
                                               const MonomialIdeal& ideal, const GroebnerOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    for (std::size_t k = 0; k < polynomials.size() && report.inclusion; ++k) {
        if (polynomials[k].nvars() != ideal.nvars())
            throw InvalidInput("presentation ring does not match the ideal's ring");
        for (const auto& t : polynomials[k].terms()) {
            FaceSet support;
            for (std::size_t i = 0; i < t.monomial.nvars(); ++i)
                if (t.monomial[i] != 0) support.insert(i);
            if (!ideal.contains_support(support)) {
                report.inclusion = false;
                report.offending_polynomial = k;
                report.offending_term = t.monomial;
                break;
            }
        }
    }
    if (!polynomials.empty()) {
        const Field field = polynomials.front().field();
        const auto gens = ideal.generator_polynomials(field);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            try {
                if (!in_radical(gens[k], polynomials, options, &report.pairs_reduced)) {
                    report.radical = false;
                    report.failing_generator = ideal.generators()[k];
                    break;
                }
            } catch (const Inconclusive&) {
                if (!report.inconclusive) report.undecided_generator = ideal.generators()[k];
                report.inconclusive = true;
            }
        }
    } else if (!ideal.is_zero()) {
        report.radical = false;
        report.failing_generator = ideal.generators().front();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_json(const VerificationReport& report, const std::vector<std::string>& names,
                           bool include_timing) {
    using nlohmann::ordered_json;
    auto support_text = [&](FaceSet f) {
        std::string out;
        for (auto i : f.indices()) out += (out.empty() ? "" : "*") + names.at(i);
        return out;
    };
    ordered_json doc;
    doc["pass"] = report.pass();
    ordered_json inclusion;
    inclusion["pass"] = report.inclusion;
    inclusion["offending_polynomial"] =
        report.offending_polynomial ? ordered_json(*report.offending_polynomial) : ordered_json(nullptr);
    inclusion["offending_term"] =
        report.offending_term ? ordered_json(format_monomial(*report.offending_term, names)) : ordered_json(nullptr);
    doc["inclusion"] = inclusion;
    ordered_json radical;
    radical["pass"] = report.radical && !report.inconclusive;
    radical["inconclusive"] = report.inconclusive;
    radical["failing_generator"] =
        report.failing_generator ? ordered_json(support_text(*report.failing_generator)) : ordered_json(nullptr);
    radical["undecided_generator"] =
        report.undecided_generator ? ordered_json(support_text(*report.undecided_generator)) : ordered_json(nullptr);
    doc["radical"] = radical;
    doc["s_pairs"] = report.pairs_reduced;
    if (include_timing) doc["seconds"] = report.seconds;
    return doc.dump(2);
}

}  // namespace conerank
