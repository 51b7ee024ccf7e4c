#include "conerank/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "conerank/error.hpp"

namespace conerank {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
    out.degree_ += o.degree_;
    return out;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= o.exps_[i];
    out.degree_ -= o.degree_;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out.set(i, std::max(exps_[i], o.exps_[i]));
    return out;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
    return h;
}

namespace {

bool term_greater(const Term& a, const Term& b) {
    return grevlex_compare(a.monomial, b.monomial) > 0;
}

}  // namespace

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
        if (t.monomial.nvars() != nvars) throw std::logic_error("term has wrong variable count");
    std::sort(terms.begin(), terms.end(), term_greater);
    Polynomial out(field, nvars);
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const FieldElement& c) {
    Polynomial out(field, nvars);
    if (!c.is_zero()) out.terms_.push_back({Monomial(nvars), c});
    return out;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars);
    m.set(index, 1);
    return monomial(field, m, FieldElement(field, 1));
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const FieldElement& c) {
    Polynomial out(field, m.nvars());
    if (!c.is_zero()) out.terms_.push_back({m, c});
    return out;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InvalidInput("polynomials live in rings of different sizes");
    if (!(field_ == o.field_)) throw InvalidInput("polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(field_, nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int c = grevlex_compare(terms_[i].monomial, o.terms_[j].monomial);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            auto sum = terms_[i].coeff + o.terms_[j].coeff;
            if (!sum.is_zero()) out.terms_.push_back({terms_[i].monomial, std::move(sum)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_, nvars_);
    if (terms_.size() == 1) return o.times_term(terms_[0].monomial, terms_[0].coeff);
    if (o.terms_.size() == 1) return times_term(o.terms_[0].monomial, o.terms_[0].coeff);
    std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            auto m = a.monomial * b.monomial;
            auto c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, c});
    return from_terms(field_, nvars_, std::move(terms));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial out(field_, nvars_);
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
    Polynomial out(field_, nvars_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves a monomial order.
    for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
    return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = constant(field_, nvars_, 1);
    Polynomial base = *this;
    for (; e != 0; e >>= 1) {
        if (e & 1U) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || terms_[0].coeff.is_one()) return *this;
    return scaled(terms_[0].coeff.inverse());
}

void Polynomial::pop_leading_term() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
}

Polynomial Polynomial::from_sorted_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
    Polynomial out(field, nvars);
    out.terms_ = std::move(terms);
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].monomial == o.terms_[i].monomial) || !(terms_[i].coeff == o.terms_[i].coeff))
            return false;
    }
    return true;
}

Polynomial phi_square(const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto exps = t.monomial.exponents();
        for (auto& e : exps) e *= 2;
        terms.push_back({Monomial(std::move(exps)), t.coeff});
    }
    // Doubling exponents is order preserving, so no resort is needed; from_terms
    // re-checks anyway.
    return Polynomial::from_terms(f.field(), f.nvars(), std::move(terms));
}

Polynomial map_variables(const Polynomial& f, std::size_t nvars,
                         const std::vector<std::size_t>& target) {
    if (target.size() != f.nvars()) throw std::logic_error("variable map has wrong length");
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (t.monomial[i] != 0) m.set(target.at(i), m[target[i]] + t.monomial[i]);
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(f.field(), nvars, std::move(terms));
}

PolyMatrix::PolyMatrix(Field field, std::size_t nvars, std::size_t dim)
    : field_(field), nvars_(nvars), dim_(dim), entries_(dim * dim, Polynomial(field, nvars)) {}

Polynomial determinant(const PolyMatrix& m) {
    const std::size_t n = m.dim();
    if (n > kMaxDeterminantDim)
        throw InvalidInput("determinant dimension " + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(kMaxDeterminantDim));
    // memo[mask] = det of rows (n - |mask|)..n-1 restricted to the columns in mask.
    std::vector<std::optional<Polynomial>> memo(std::size_t{1} << n);
    memo[0] = Polynomial::constant(m.field(), m.nvars(), 1);
    auto solve = [&](auto&& self, std::uint32_t mask) -> const Polynomial& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        Polynomial acc(m.field(), m.nvars());
        std::size_t position = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (!((mask >> col) & 1U)) continue;
            const auto& entry = m.at(row, col);
            if (!entry.is_zero()) {
                const auto& minor = self(self, mask & ~(1U << col));
                if (!minor.is_zero()) {
                    auto prod = entry * minor;
                    acc = position % 2 == 0 ? acc + prod : acc - prod;
                }
            }
            ++position;
        }
        slot = std::move(acc);
        return *slot;
    };
    return solve(solve, static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
}

std::vector<FieldElement> roots_of_unity(std::size_t h, Field field) {
    if (h == 0) throw InvalidInput("roots of unity need h >= 1");
    std::vector<FieldElement> out;
    if (field.is_prime()) {
        const std::uint64_t p = field.characteristic();
        if ((p - 1) % h != 0)
            throw Undefined(std::to_string(h) + "-th roots of unity are not all in " + field.to_string());
        const FieldElement zeta =
            FieldElement(field, static_cast<long long>(smallest_primitive_root(p))).pow((p - 1) / h);
        FieldElement w(field, 1);
        for (std::size_t i = 0; i < h; ++i) {
            out.push_back(w);
            w *= zeta;
        }
        return out;
    }
    if (h > 2) throw Undefined(std::to_string(h) + "-th roots of unity are not rational");
    out.emplace_back(field, 1);
    if (h == 2) out.emplace_back(field, -1);
    return out;
}

}  // namespace conerank
