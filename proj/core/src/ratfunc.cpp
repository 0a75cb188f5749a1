#include "qmrat/ratfunc.hpp"

#include "qmrat/error.hpp"

namespace qmrat {

RatFunc::RatFunc(const TowerSpec& t, MultiPoly num, MultiPoly den)
    : tower_(&t), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RatFunc RatFunc::constant(const TowerSpec& t, const Rat& c) {
    return RatFunc(t, MultiPoly::constant(c), MultiPoly::constant(1));
}

RatFunc RatFunc::symbol(const TowerSpec& t, int id) {
    return RatFunc(t, MultiPoly::symbol(id), MultiPoly::constant(1));
}

RatFunc RatFunc::symbol(const TowerSpec& t, const std::string& name) {
    return symbol(t, t.require(name));
}

RatFunc RatFunc::from_poly(const TowerSpec& t, const MultiPoly& p) {
    return RatFunc(t, p, MultiPoly::constant(1));
}

const TowerSpec& RatFunc::tower() const {
    if (!tower_) fail(ErrorKind::Internal, "RatFunc without tower");
    return *tower_;
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) fail(ErrorKind::Internal, "constant_value of nonconstant");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value() / den_.constant_value();
}

void RatFunc::normalize() {
    num_ = normal_form(num_, *tower_);
    den_ = normal_form(den_, *tower_);
    if (den_.is_zero()) fail(ErrorKind::ZeroDenominator, "zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(1);
        return;
    }
    // Display normalization only: make the leading denominator coefficient 1.
    Rat lead = den_.terms().begin()->second;
    if (lead != 1) {
        Rat inv = 1 / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const { return RatFunc(*tower_, -num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(*tower_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(*tower_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(*tower_, num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero");
    return RatFunc(*tower_, num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return constant(*tower_, 1);
    bool neg = e < 0;
    unsigned long k = neg ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    RatFunc base = *this;
    RatFunc acc = constant(*tower_, 1);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    if (neg) return constant(*tower_, 1) / acc;
    return acc;
}

RatFunc RatFunc::derivative(int symbol) const {
    // Quotient rule; tower generators have derivative zero with respect to
    // the function-field variables, which falls out of the exponent algebra.
    MultiPoly dn = num_.derivative(symbol);
    MultiPoly dd = den_.derivative(symbol);
    return RatFunc(*tower_, dn * den_ - num_ * dd, den_ * den_);
}

bool rf_equal(const RatFunc& f, const RatFunc& g) {
    MultiPoly cross = f.num() * g.den() - g.num() * f.den();
    return normal_form(cross, f.tower()).is_zero();
}

Substitution::Substitution(const TowerSpec& t) : tower_(&t) {
    images_.reserve(t.symbol_count());
    for (int i = 0; i < t.symbol_count(); ++i) images_.push_back(RatFunc::symbol(t, i));
}

Substitution Substitution::identity(const TowerSpec& t) { return Substitution(t); }

Substitution& Substitution::set(const std::string& name, RatFunc image) {
    return set(tower_->require(name), std::move(image));
}

Substitution& Substitution::set(int id, RatFunc image) {
    if (id < 0 || id >= tower_->symbol_count())
        fail(ErrorKind::UnknownSymbol, "substitution target out of range");
    images_[id] = std::move(image);
    return *this;
}

bool Substitution::is_identity_on(int id) const {
    return rf_equal(images_[id], RatFunc::symbol(*tower_, id));
}

bool Substitution::fixes_all_generators() const {
    for (int i = 0; i < tower_->generator_count(); ++i)
        if (!is_identity_on(i)) return false;
    return true;
}

void Substitution::validate() const {
    for (int i = 0; i < tower_->generator_count(); ++i) {
        const TowerGenerator& g = tower_->generator(i);
        if (g.kind == RelKind::Free) continue;
        const RatFunc& im = images_[i];
        RatFunc lhs, rhs;
        if (g.kind == RelKind::Omega) {
            lhs = im * im;
            rhs = RatFunc::constant(*tower_, -1) - im;
        } else {
            long d = (g.kind == RelKind::Sqrt) ? 2 : 3;
            lhs = im.pow(d);
            rhs = substitute(RatFunc::from_poly(*tower_, g.rhs), *this);
        }
        if (!rf_equal(lhs, rhs))
            fail(ErrorKind::RelationViolation,
                 "image of '" + g.name + "' violates its tower relation");
    }
}

namespace {

RatFunc substitute_poly(const MultiPoly& p, const Substitution& s) {
    const TowerSpec& t = s.tower();
    RatFunc acc = RatFunc::constant(t, 0);
    for (const auto& [ev, c] : p.terms()) {
        RatFunc term = RatFunc::constant(t, c);
        for (int i = 0; i < t.symbol_count(); ++i) {
            if (ev.e[i] == 0) continue;
            term = term * s.image(i).pow(ev.e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace

RatFunc substitute(const RatFunc& f, const Substitution& s) {
    RatFunc num = substitute_poly(f.num(), s);
    RatFunc den = substitute_poly(f.den(), s);
    if (den.is_zero())
        fail(ErrorKind::SubstitutionSingularity,
             "denominator vanishes under substitution");
    return num / den;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
    const TowerSpec& t = outer.tower();
    Substitution r(t);
    for (int i = 0; i < t.symbol_count(); ++i)
        r.set(i, substitute(inner.image(i), outer));
    return r;
}

bool substitutions_equal(const Substitution& a, const Substitution& b) {
    const TowerSpec& t = a.tower();
    for (int i = 0; i < t.symbol_count(); ++i)
        if (!rf_equal(a.image(i), b.image(i))) return false;
    return true;
}

bool jacobian_independent(const RatFunc& u, const RatFunc& v, int var_x, int var_y) {
    RatFunc det = u.derivative(var_x) * v.derivative(var_y) -
                  u.derivative(var_y) * v.derivative(var_x);
    return !det.is_zero();
}

bool jacobian_independent(const RatFunc& u, const RatFunc& v) {
    const TowerSpec& t = u.tower();
    if (t.variable_count() < 2)
        fail(ErrorKind::Internal, "jacobian needs two variables");
    int x = t.generator_count();
    return jacobian_independent(u, v, x, x + 1);
}

} // namespace qmrat
