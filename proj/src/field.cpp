#include "conerank/field.hpp"

#include <stdexcept>
#include <vector>

#include "conerank/error.hpp"

namespace conerank {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    for (; e != 0; e >>= 1) {
        if (e & 1U) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
    }
    return r;
}

}  // namespace

bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2, 7, 61}) {
        if (a % n == 0) continue;
        auto x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    std::vector<std::uint64_t> factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            factors.push_back(f);
            while (m % f == 0) m /= f;
        }
    }
    if (m > 1) factors.push_back(m);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto f : factors) {
            if (powmod(g, (p - 1) / f, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw std::logic_error("no primitive root found");
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime_u32(p))
        throw InvalidInput("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
    return is_prime() ? "GF(" + std::to_string(p_) + ")" : "QQ";
}

FieldElement::FieldElement(Field field, long long value) : field_(field) {
    if (field_.is_prime()) {
        const auto p = static_cast<long long>(field_.characteristic());
        long long r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    } else {
        value_ = mpq_class(static_cast<long>(value));
    }
}

FieldElement::FieldElement(Field field, const mpq_class& value) : field_(field) {
    if (field_.is_prime()) {
        const mpz_class p = field_.characteristic();
        mpz_class num = value.get_num() % p;
        mpz_class den = value.get_den() % p;
        if (num < 0) num += p;
        if (den == 0) throw std::domain_error("denominator vanishes in " + field_.to_string());
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        mpz_class r = num * inv % p;
        value_ = static_cast<std::uint64_t>(r.get_ui());
    } else {
        mpq_class q = value;
        q.canonicalize();
        value_ = std::move(q);
    }
}

bool FieldElement::is_zero() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElement::residue() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw std::logic_error("residue() on a rational element");
}

const mpq_class& FieldElement::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw std::logic_error("rational() on a prime-field element");
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw std::logic_error("mixing elements of " + field_.to_string() + " and " + o.field_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement out(field_);
    if (field_.is_prime()) {
        const auto s = residue() + o.residue();
        out.value_ = s >= field_.characteristic() ? s - field_.characteristic() : s;
    } else {
        out.value_ = mpq_class(rational() + o.rational());
    }
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    FieldElement out(field_);
    if (field_.is_prime()) {
        const auto r = residue();
        out.value_ = r == 0 ? std::uint64_t{0} : field_.characteristic() - r;
    } else {
        out.value_ = mpq_class(-rational());
    }
    return out;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement out(field_);
    if (field_.is_prime())
        out.value_ = residue() * o.residue() % field_.characteristic();
    else
        out.value_ = mpq_class(rational() * o.rational());
    return out;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in " + field_.to_string());
    FieldElement out(field_);
    if (field_.is_prime())
        out.value_ = powmod(residue(), field_.characteristic() - 2, field_.characteristic());
    else
        out.value_ = mpq_class(1 / rational());
    return out;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return *this * o.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement result(field_, 1);
    FieldElement base = *this;
    for (; e != 0; e >>= 1) {
        if (e & 1U) result *= base;
        base *= base;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && value_ == o.value_;
}

std::string FieldElement::to_string() const {
    if (field_.is_prime()) return std::to_string(residue());
    return rational().get_str();
}

}  // namespace conerank
