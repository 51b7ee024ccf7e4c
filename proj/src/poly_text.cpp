#include "conerank/poly_text.hpp"

#include <cctype>
#include <unordered_map>

#include "conerank/error.hpp"

namespace conerank {

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names.at(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        bool negative = false;
        std::string coeff;
        if (f.field().is_prime()) {
            coeff = t.coeff.to_string();
        } else {
            mpq_class q = t.coeff.rational();
            negative = q < 0;
            if (negative) q = -q;
            coeff = q.get_str();
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.monomial.is_one()) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += format_monomial(t.monomial, names);
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names, Field field)
        : text_(text), field_(field), nvars_(names.size()) {
        for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
    }

    Polynomial parse() {
        std::vector<Term> terms;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = take() == '-';
        while (true) {
            terms.push_back(term(negative));
            skip_space();
            if (at_end()) break;
            const char op = take();
            if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
            negative = op == '-';
        }
        return Polynomial::from_terms(field_, nvars_, std::move(terms));
    }

private:
    Term term(bool negative) {
        Monomial m(nvars_);
        FieldElement c(field_, negative ? -1 : 1);
        while (true) {
            skip_space();
            if (at_end()) fail("missing factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= number();
            } else {
                const auto var = name();
                std::uint32_t e = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    take();
                    skip_space();
                    e = static_cast<std::uint32_t>(integer().get_ui());
                }
                m.set(var, m[var] + e);
            }
            skip_space();
            if (at_end() || peek() != '*') break;
            take();
        }
        return {std::move(m), std::move(c)};
    }

    FieldElement number() {
        mpz_class num = integer();
        mpz_class den = 1;
        skip_space();
        if (!at_end() && peek() == '/') {
            take();
            skip_space();
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        try {
            return FieldElement(field_, mpq_class(num, den));
        } catch (const std::domain_error& e) {
            fail(e.what());
        }
    }

    mpz_class integer() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    std::size_t name() {
        const auto start = pos_;
        while (!at_end()) {
            const auto c = static_cast<unsigned char>(peek());
            if (!(std::isalnum(c) || c == '_' || c == '\'')) break;
            ++pos_;
        }
        if (start == pos_) fail("expected a variable name");
        const auto word = text_.substr(start, pos_ - start);
        const auto it = index_.find(word);
        if (it == index_.end()) fail("unknown variable '" + word + "'");
        return it->second;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("cannot parse polynomial '" + text_ + "' at offset " +
                           std::to_string(pos_) + ": " + why);
    }

    const std::string& text_;
    Field field_;
    std::size_t nvars_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                            Field field) {
    return Parser(text, names, field).parse();
}

}  // namespace conerank
