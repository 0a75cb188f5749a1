#include "qmrat/expr.hpp"

#include <cctype>
#include <sstream>

#include "qmrat/error.hpp"

namespace qmrat {

namespace {

struct Parser {
    const TowerSpec& tower;
    const ParamMap* params;
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos) +
                                        " in '" + text + "'");
    }

    RatFunc parse_expr() {
        RatFunc v = parse_term();
        for (;;) {
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    RatFunc parse_term() {
        RatFunc v = parse_factor();
        for (;;) {
            if (eat('*'))
                v = v * parse_factor();
            else if (eat('/'))
                v = v / parse_factor();
            else
                return v;
        }
    }

    RatFunc parse_factor() {
        int sign = 1;
        while (eat('-')) sign = -sign;
        RatFunc v = parse_atom();
        if (eat('^')) {
            long e = parse_int();
            v = v.pow(e);
        }
        if (sign < 0) v = -v;
        return v;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            error("expected integer exponent");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    RatFunc parse_atom() {
        skip_ws();
        if (pos >= text.size()) error("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RatFunc v = parse_expr();
            if (!eat(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                n = n * 10 + (text[pos] - '0');
                ++pos;
            }
            return RatFunc::constant(tower, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            if (params) {
                auto it = params->find(name);
                if (it != params->end()) return RatFunc::constant(tower, it->second);
            }
            auto id = tower.find(name);
            if (!id) error("unknown symbol '" + name + "'");
            return RatFunc::symbol(tower, *id);
        }
        error(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RatFunc parse_expr(const TowerSpec& t, const std::string& text, const ParamMap* params) {
    Parser p{t, params, text};
    RatFunc v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.error("trailing input");
    return v;
}

MultiPoly parse_poly(const TowerSpec& t, const std::string& text, const ParamMap* params) {
    RatFunc f = parse_expr(t, text, params);
    if (!f.den().is_constant())
        fail(ErrorKind::ParseError, "expected polynomial, got denominator in '" + text + "'");
    Rat d = f.den().constant_value();
    return f.num().scaled(1 / d);
}

std::string to_string(const MultiPoly& p, const TowerSpec& t) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ev, c] : p.terms()) {
        Rat coeff = c;
        if (!first)
            os << (coeff > 0 ? " + " : " - ");
        else if (coeff < 0)
            os << "-";
        first = false;
        if (coeff < 0) coeff = -coeff;
        bool printed_coeff = false;
        if (coeff != 1 || ev.is_constant()) {
            os << coeff.get_str();
            printed_coeff = true;
        }
        for (int i = 0; i < t.symbol_count(); ++i) {
            if (ev.e[i] == 0) continue;
            if (printed_coeff) os << "*";
            os << t.name(i);
            if (ev.e[i] != 1) os << "^" << ev.e[i];
            printed_coeff = true;
        }
    }
    return os.str();
}

std::string to_string(const RatFunc& f) {
    const TowerSpec& t = f.tower();
    if (f.den().is_constant() && f.den().constant_value() == 1)
        return to_string(f.num(), t);
    return "(" + to_string(f.num(), t) + ")/(" + to_string(f.den(), t) + ")";
}

} // namespace qmrat
