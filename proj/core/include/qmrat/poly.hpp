#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>

#include "qmrat/numtheory.hpp"

namespace qmrat {

// Hard cap on distinct symbols (tower generators + function-field variables)
// in one field.  The largest chain in the verification tables uses twelve.
inline constexpr int kMaxSymbols = 16;

// Exponent vector of one monomial, indexed by symbol id.
struct ExpVec {
    std::array<int16_t, kMaxSymbols> e{};

    auto operator<=>(const ExpVec&) const = default;

    bool is_constant() const {
        for (int16_t x : e)
            if (x != 0) return false;
        return true;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Stored in normal form with respect to a tower (see TowerSpec); the raw
// arithmetic here is relation-agnostic.
class MultiPoly {
  public:
    using Terms = std::map<ExpVec, Rat>;

    MultiPoly() = default;
    static MultiPoly constant(const Rat& c);
    static MultiPoly symbol(int index, int exponent = 1);
    static MultiPoly monomial(const ExpVec& ev, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()

    const Terms& terms() const { return terms_; }

    void add_term(const ExpVec& ev, const Rat& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rat& c) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    // Formal partial derivative with respect to one symbol.
    MultiPoly derivative(int symbol) const;

    int max_exponent(int symbol) const;

    // Rational content (gcd of coefficients); 0 for the zero polynomial.
    Rat content() const;

  private:
    Terms terms_;
};

} // namespace qmrat
