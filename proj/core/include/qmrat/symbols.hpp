#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qmrat/numtheory.hpp"

namespace qmrat {

// Three-valued symbol result.  Degree-2 symbols over Q and its quadratic
// extensions are always decided; the degree-3 symbol may honestly give up.
enum class TriValue { Zero, NonZero, Undecided };

struct Tri {
    TriValue value = TriValue::Undecided;
    std::string reason; // set for Undecided

    static Tri zero() { return {TriValue::Zero, {}}; }
    static Tri nonzero() { return {TriValue::NonZero, {}}; }
    static Tri undecided(std::string why) { return {TriValue::Undecided, std::move(why)}; }

    bool operator==(const Tri& o) const { return value == o.value; }
};

const char* tri_name(TriValue v) noexcept;

enum class BaseFieldKind { Q, QuadExt, QOmega };

struct BaseField {
    BaseFieldKind kind = BaseFieldKind::Q;
    Rat ext_m = 0; // radicand for QuadExt

    static BaseField q() { return {BaseFieldKind::Q, 0}; }
    static BaseField quad(const Rat& m) { return {BaseFieldKind::QuadExt, m}; }
    static BaseField q_omega() { return {BaseFieldKind::QOmega, 0}; }

    std::string describe() const;
};

struct SymbolQuery {
    int degree = 2; // 2 or 3
    Rat a, b;
    BaseField base;

    std::string describe() const;
};

// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite = false;
    Int p = 0;

    static Place at_infinity() { return {true, 0}; }
    static Place prime(const Int& q) { return {false, q}; }
    std::string describe() const;
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return infinite < o.infinite;
        return p < o.p;
    }
};

// Local Hilbert symbol (a,b)_v as +-1.
int hilbert_local(const Rat& a, const Rat& b, const Place& v);

// Places where (a,b) could ramify: 2, infinity, odd primes dividing a or b.
std::vector<Place> relevant_places(const Rat& a, const Rat& b);

struct HilbertResult {
    Tri tri;
    std::vector<Place> ramified; // local symbol = -1
};

// Global Hilbert symbol over Q.  Zero iff unramified everywhere.  Runs the
// product-formula self check and throws ProductFormulaViolation on a bug.
HilbertResult hilbert_Q(const Rat& a, const Rat& b);

// Integer point on the squarefree-reduced conic x^2 - a0 y^2 - b0 z^2 = 0.
struct ConicPoint {
    Int x, y, z;
    Int a0, b0;    // coefficients the point satisfies
    Rat a_root;    // a = a0 * a_root^2
    Rat b_root;    // b = b0 * b_root^2
};

struct ConicOptions {
    // Permutes the search enumeration; any seed must yield the same
    // solvable/unsolvable answer (only the returned point may differ).
    unsigned order_seed = 0;
};

// Complete decision procedure: exhaustive search inside the Holzer box of
// the reduced form.  nullopt is a proof that no nontrivial point exists.
std::optional<ConicPoint> conic_point(const Rat& a, const Rat& b,
                                      const ConicOptions& opts = {});

// Affine rational solution (s, t) of s^2 - a t^2 = b over Q, mapped back
// from the reduced conic point.
std::optional<std::array<Rat, 2>> conic_affine_point(const Rat& a, const Rat& b,
                                                     const ConicOptions& opts = {});

// Hilbert symbol of rational arguments over Q(sqrt(m)).  Exact: the class
// dies in the quadratic field iff no ramified place of (a,b) splits in it.
Tri hilbert_quadext(const Rat& a, const Rat& b, const Rat& m);

struct CubicResult {
    Tri tri;
    std::string witness; // nontrivial tame place, or the norm element found
};

// Norm-residue symbol of degree 3 over Q(omega) with rational arguments.
// NonZero via a nontrivial tame local symbol; Zero via an explicit norm
// from Q(omega, cbrt a); otherwise Undecided.
CubicResult cubic_symbol(const Rat& a, const Rat& c, long search_bound = 20);

// Evaluate a SymbolQuery through the menu above.
Tri evaluate_symbol(const SymbolQuery& q, long cubic_bound = 20);

} // namespace qmrat
