#include "cremona/text_io.hpp"

#include <cctype>
#include <sstream>

#include "cremona/rational_function.hpp"

namespace cremona {

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : p.terms()) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational abs = neg ? Rational(-c) : c;
        if (t.mono.is_one()) {
            os << abs.get_str();
        } else {
            bool star = false;
            if (abs != 1) {
                os << abs.get_str();
                star = true;
            }
            for (auto& [v, e] : t.mono.entries()) {
                if (star) os << "*";
                os << p.registry()->name_of(VarId{v});
                if (e > 1) os << "^" << e;
                star = true;
            }
        }
    }
    return os.str();
}

namespace {

// Longest run of characters legal inside a variable name. Names may carry
// braces, commas and digits ("y_{1,3}") but none of the operator characters.
bool name_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '{' || ch == '}' ||
           ch == ',';
}

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    // Consumes '+' or '-' (ASCII or U+2212); returns the sign.
    int take_sign(bool required) {
        skip_ws();
        if (i < s.size() && s[i] == '+') {
            ++i;
            return 1;
        }
        if (i < s.size() && s[i] == '-') {
            ++i;
            return -1;
        }
        if (i + 2 < s.size() + 1 && s.compare(i, 3, "\xe2\x88\x92") == 0) {
            i += 3;
            return -1;
        }
        if (required) throw error("expected '+' or '-' at position " + std::to_string(i));
        return 1;
    }
};

Rational parse_number(Cursor& c) {
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    std::string num = c.s.substr(start, c.i - start);
    if (num.empty()) throw error("expected number at position " + std::to_string(start));
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        size_t ds = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        std::string den = c.s.substr(ds, c.i - ds);
        if (den.empty()) throw error("expected denominator at position " + std::to_string(ds));
        return rational_from_string(num + "/" + den);
    }
    return rational_from_string(num);
}

std::string parse_name(Cursor& c) {
    size_t start = c.i;
    while (c.i < c.s.size() && name_char(c.s[c.i])) ++c.i;
    if (c.i == start) throw error("expected variable name at position " + std::to_string(start));
    return c.s.substr(start, c.i - start);
}

}  // namespace

Polynomial parse_polynomial(const RegistryPtr& reg, const std::string& text,
                            bool declare_missing) {
    Cursor c{text};
    if (c.done()) throw error("empty polynomial text");
    std::vector<Polynomial::Term> terms;
    bool first = true;
    while (!c.done()) {
        int sign = c.take_sign(!first);
        first = false;
        c.skip_ws();
        Rational coeff(sign);
        bool have_coeff = false;
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            coeff = parse_number(c) * sign;
            have_coeff = true;
        }
        std::vector<Monomial::Entry> entries;
        for (;;) {
            c.skip_ws();
            if (have_coeff || !entries.empty()) {
                if (c.i < c.s.size() && c.s[c.i] == '*')
                    ++c.i;
                else
                    break;
                c.skip_ws();
            }
            if (c.i >= c.s.size() || !name_char(c.s[c.i])) {
                if (entries.empty() && !have_coeff)
                    throw error("expected term at position " + std::to_string(c.i));
                break;
            }
            std::string name = parse_name(c);
            VarId v = declare_missing ? reg->ensure(name) : reg->id_of(name);
            uint32_t exp = 1;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                c.skip_ws();
                Rational e = parse_number(c);
                if (e.get_den() != 1 || e <= 0) throw error("exponent must be a positive integer");
                exp = static_cast<uint32_t>(e.get_num().get_ui());
            }
            entries.push_back({v.index, exp});
        }
        // Merge repeated variables within a term ("x*x").
        std::sort(entries.begin(), entries.end());
        std::vector<Monomial::Entry> merged;
        for (auto& e : entries) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second += e.second;
            else
                merged.push_back(e);
        }
        terms.push_back({Monomial(std::move(merged)), coeff});
    }
    return Polynomial::from_terms(reg, std::move(terms));
}

std::string to_text(const RationalFunction& f) {
    if (f.is_polynomial()) return to_text(f.num());
    return "(" + to_text(f.num()) + ")/(" + to_text(f.den()) + ")";
}

RationalFunction parse_rational_function(const RegistryPtr& reg, const std::string& text,
                                         bool declare_missing) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '(') {
        size_t split = text.find(")/(");
        size_t close = text.rfind(')');
        if (split == std::string::npos || close == std::string::npos || close < split)
            throw error("malformed rational function text: '" + text + "'");
        Polynomial num = parse_polynomial(reg, text.substr(i + 1, split - i - 1), declare_missing);
        Polynomial den = parse_polynomial(reg, text.substr(split + 3, close - split - 3),
                                          declare_missing);
        return RationalFunction(std::move(num), std::move(den));
    }
    return RationalFunction(parse_polynomial(reg, text, declare_missing));
}

}  // namespace cremona
