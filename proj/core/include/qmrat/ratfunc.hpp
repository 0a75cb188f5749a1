#pragma once

#include <string>
#include <vector>

#include "qmrat/tower.hpp"

namespace qmrat {

// Exact rational function num/den over a tower.  Both parts are kept in
// normal form; den is never zero.  Equality is by cross-multiplication
// (the tower is an integral domain), not by gcd reduction.
class RatFunc {
  public:
    RatFunc() : tower_(nullptr) {}
    RatFunc(const TowerSpec& t, MultiPoly num, MultiPoly den);

    static RatFunc constant(const TowerSpec& t, const Rat& c);
    static RatFunc symbol(const TowerSpec& t, int id);
    static RatFunc symbol(const TowerSpec& t, const std::string& name);
    static RatFunc from_poly(const TowerSpec& t, const MultiPoly& p);

    const TowerSpec& tower() const;
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc pow(long e) const;

    RatFunc derivative(int symbol) const;

  private:
    void normalize();

    const TowerSpec* tower_;
    MultiPoly num_, den_;
};

// Exact equality of rational functions (f*den(g) == g*den(f) in the tower).
bool rf_equal(const RatFunc& f, const RatFunc& g);

// Total map from symbols to rational functions over one tower.  Bound
// generators must map to images consistent with their relations; validation
// runs on finish().
class Substitution {
  public:
    explicit Substitution(const TowerSpec& t);

    static Substitution identity(const TowerSpec& t);

    Substitution& set(const std::string& name, RatFunc image);
    Substitution& set(int id, RatFunc image);

    const RatFunc& image(int id) const { return images_[id]; }
    const TowerSpec& tower() const { return *tower_; }

    bool is_identity_on(int id) const;
    bool fixes_all_generators() const;

    // Checks the tower-relation consistency of every generator image.
    void validate() const;

  private:
    const TowerSpec* tower_;
    std::vector<RatFunc> images_;
};

// Simultaneous substitution, renormalized.  Throws SubstitutionSingularity
// if the denominator image vanishes.
RatFunc substitute(const RatFunc& f, const Substitution& s);

// Composition law: substitute(f, compose(s, r)) == substitute(substitute(f, r), s).
Substitution compose(const Substitution& outer, const Substitution& inner);

bool substitutions_equal(const Substitution& a, const Substitution& b);

// det d(u,v)/d(x,y) != 0 with all tower generators treated as constants.
bool jacobian_independent(const RatFunc& u, const RatFunc& v, int var_x, int var_y);
bool jacobian_independent(const RatFunc& u, const RatFunc& v);

} // namespace qmrat
