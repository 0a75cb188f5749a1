#include "qmrat/poly.hpp"

#include "qmrat/error.hpp"

namespace qmrat {

MultiPoly MultiPoly::constant(const Rat& c) {
    MultiPoly p;
    if (c != 0) p.terms_[ExpVec{}] = c;
    return p;
}

MultiPoly MultiPoly::symbol(int index, int exponent) {
    if (index < 0 || index >= kMaxSymbols) fail(ErrorKind::Internal, "symbol index");
    MultiPoly p;
    if (exponent == 0) return constant(1);
    ExpVec ev;
    ev.e[index] = static_cast<int16_t>(exponent);
    p.terms_[ev] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(const ExpVec& ev, const Rat& c) {
    MultiPoly p;
    if (c != 0) p.terms_[ev] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rat MultiPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) fail(ErrorKind::Internal, "constant_value of nonconstant");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const ExpVec& ev, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(ev);
    if (it == terms_.end()) {
        terms_.emplace(ev, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p;
    for (const auto& [ev, c] : terms_) p.terms_[ev] = -c;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly p = *this;
    for (const auto& [ev, c] : o.terms_) p.add_term(ev, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly p = *this;
    for (const auto& [ev, c] : o.terms_) p.add_term(ev, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly p;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec ev;
            for (int i = 0; i < kMaxSymbols; ++i)
                ev.e[i] = static_cast<int16_t>(ea.e[i] + eb.e[i]);
            p.add_term(ev, ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly p;
    if (c == 0) return p;
    for (const auto& [ev, cc] : terms_) p.terms_[ev] = cc * c;
    return p;
}

MultiPoly MultiPoly::derivative(int symbol) const {
    MultiPoly p;
    for (const auto& [ev, c] : terms_) {
        int16_t e = ev.e[symbol];
        if (e == 0) continue;
        ExpVec d = ev;
        d.e[symbol] = static_cast<int16_t>(e - 1);
        p.add_term(d, c * e);
    }
    return p;
}

int MultiPoly::max_exponent(int symbol) const {
    int m = 0;
    for (const auto& [ev, c] : terms_) {
        (void)c;
        if (ev.e[symbol] > m) m = ev.e[symbol];
    }
    return m;
}

Rat MultiPoly::content() const {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [ev, c] : terms_) {
        (void)ev;
        num_gcd = gcd(num_gcd, Int(c.get_num()));
        den_lcm = lcm(den_lcm, Int(c.get_den()));
    }
    if (num_gcd == 0) return Rat(0);
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

} // namespace qmrat
