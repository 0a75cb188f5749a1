#include "qmrat/symbols.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qmrat/error.hpp"

namespace qmrat {

const char* tri_name(TriValue v) noexcept {
    switch (v) {
        case TriValue::Zero: return "zero";
        case TriValue::NonZero: return "nonzero";
        case TriValue::Undecided: return "undecided";
    }
    return "?";
}

std::string BaseField::describe() const {
    switch (kind) {
        case BaseFieldKind::Q: return "Q";
        case BaseFieldKind::QuadExt: return "Q(sqrt(" + ext_m.get_str() + "))";
        case BaseFieldKind::QOmega: return "Q(omega)";
    }
    return "?";
}

std::string SymbolQuery::describe() const {
    std::ostringstream os;
    os << "(" << a.get_str() << "," << b.get_str() << ")_" << degree << ","
       << base.describe();
    return os.str();
}

std::string Place::describe() const {
    return infinite ? std::string("oo") : p.get_str();
}

// ---------------------------------------------------------------------------
// Hilbert symbol over Q
// ---------------------------------------------------------------------------

namespace {

// Odd rational unit reduced mod 8 (num * den is congruent to num/den mod 8
// since odd squares are 1 mod 8).
int odd_unit_mod8(const Rat& u) {
    Int w = u.get_num() * u.get_den();
    Int m = w % 8;
    if (m < 0) m += 8;
    return static_cast<int>(m.get_si());
}

int eps_mod2(int w8) { return ((w8 - 1) / 2) % 2 != 0 ? 1 : 0; } // (u-1)/2 mod 2
int omega2_mod2(int w8) { return (w8 == 3 || w8 == 5) ? 1 : 0; } // (u^2-1)/8 mod 2

} // namespace

int hilbert_local(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) fail(ErrorKind::InvalidInstance, "hilbert symbol of zero");
    if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = v.p;
    long alpha = valuation(a, p);
    long beta = valuation(b, p);
    Rat u = unit_part(a, p);
    Rat w = unit_part(b, p);

    if (p == 2) {
        int ue = odd_unit_mod8(u), we = odd_unit_mod8(w);
        long e = static_cast<long>(eps_mod2(ue)) * eps_mod2(we) +
                 alpha * omega2_mod2(we) + beta * omega2_mod2(ue);
        return (e % 2 != 0) ? -1 : 1;
    }

    // Odd p: (-1)^(alpha*beta*eps(p)) * (u|p)^beta * (w|p)^alpha
    int sign = 1;
    Int pm = (p - 1) / 2;
    if ((alpha * beta) % 2 != 0 && pm % 2 == 1) sign = -sign;
    if (beta % 2 != 0) sign *= legendre(Int(u.get_num() * u.get_den()), p);
    if (alpha % 2 != 0) sign *= legendre(Int(w.get_num() * w.get_den()), p);
    return sign;
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b) {
    std::vector<Place> out;
    out.push_back(Place::at_infinity());
    out.push_back(Place::prime(2));
    for (const Int& p : odd_prime_support({a, b})) out.push_back(Place::prime(p));
    return out;
}

HilbertResult hilbert_Q(const Rat& a, const Rat& b) {
    HilbertResult res;
    int product = 1;
    for (const Place& v : relevant_places(a, b)) {
        int s = hilbert_local(a, b, v);
        product *= s;
        if (s == -1) res.ramified.push_back(v);
    }
    if (product != 1)
        fail(ErrorKind::ProductFormulaViolation,
             "local symbols of (" + a.get_str() + "," + b.get_str() +
                 ") do not multiply to +1");
    res.tri = res.ramified.empty() ? Tri::zero() : Tri::nonzero();
    return res;
}

// ---------------------------------------------------------------------------
// Conic point search (Legendre descent + Holzer box)
// ---------------------------------------------------------------------------

namespace {

struct DiagPoint {
    Int x, y, z;
};

// Search values 0..bound in an order permuted by seed (wrap-around start).
struct SweepOrder {
    long bound;
    long offset;

    long value(long i) const { return (i + offset) % (bound + 1); }
};

// Exhaustive Holzer-box search for A x^2 + B y^2 + C z^2 = 0 with A,B,C
// squarefree and pairwise coprime.  Completeness: if the form is isotropic,
// Holzer's theorem puts a solution inside |x| <= sqrt|BC|, |y| <= sqrt|AC|,
// |z| <= sqrt|AB|.
std::optional<DiagPoint> holzer_search(const Int& A, const Int& B, const Int& C,
                                       const ConicOptions& opts) {
    if ((A > 0 && B > 0 && C > 0) || (A < 0 && B < 0 && C < 0)) return std::nullopt;

    const Int bx2 = abs(B * C), by2 = abs(A * C), bz2 = abs(A * B);
    // Solve for the variable with the largest bound; sweep the other two.
    int solve_for = 0;
    if (by2 >= bx2 && by2 >= bz2)
        solve_for = 1;
    else if (bz2 >= bx2 && bz2 >= by2)
        solve_for = 2;

    Int coeff[3] = {A, B, C};
    Int sweep_bound2[2];
    int sweep_idx[2];
    {
        int k = 0;
        for (int i = 0; i < 3; ++i)
            if (i != solve_for) {
                sweep_idx[k] = i;
                sweep_bound2[k] = (i == 0 ? bx2 : i == 1 ? by2 : bz2);
                ++k;
            }
    }
    long b0 = sqrt(sweep_bound2[0]).get_si();
    long b1 = sqrt(sweep_bound2[1]).get_si();
    while (Int(b0) * b0 < sweep_bound2[0]) ++b0;
    while (Int(b1) * b1 < sweep_bound2[1]) ++b1;

    SweepOrder o0{b0, static_cast<long>(opts.order_seed % (b0 + 1))};
    SweepOrder o1{b1, static_cast<long>((opts.order_seed / 7) % (b1 + 1))};

    const Int& cs = coeff[solve_for];
    for (long i = 0; i <= b0; ++i) {
        Int u(o0.value(i));
        for (long j = 0; j <= b1; ++j) {
            Int v(o1.value(j));
            if (u == 0 && v == 0) continue;
            // cs * t^2 = -(c0 u^2 + c1 v^2)
            Int rhs = -(coeff[sweep_idx[0]] * u * u + coeff[sweep_idx[1]] * v * v);
            if (!mpz_divisible_p(rhs.get_mpz_t(), cs.get_mpz_t())) continue;
            Int t2 = rhs / cs;
            auto t = exact_isqrt(t2);
            if (!t) continue;
            Int sol[3];
            sol[sweep_idx[0]] = u;
            sol[sweep_idx[1]] = v;
            sol[solve_for] = *t;
            return DiagPoint{sol[0], sol[1], sol[2]};
        }
    }
    return std::nullopt;
}

// Legendre descent: reduce to pairwise-coprime coefficients, solve, map back.
std::optional<DiagPoint> solve_diag(Int A, Int B, Int C, const ConicOptions& opts) {
    // Shared prime across all three coefficients cancels.
    for (;;) {
        Int g = gcd(gcd(A, B), C);
        if (g == 1 || g == -1) break;
        auto fs = factorize(g);
        Int p = fs.front().first;
        A /= p;
        B /= p;
        C /= p;
    }
    auto reduce_pair = [&](Int& P, Int& Q, Int& R,
                           int r_index) -> std::optional<int> {
        // gcd(P,Q) = g > 1 coprime to R: g | R z^2 forces g | z; substituting
        // z = g z' divides the form by g and multiplies R by g.
        Int g = gcd(P, Q);
        if (g < 0) g = -g;
        if (g <= 1) return std::nullopt;
        P /= g;
        Q /= g;
        R *= g;
        return r_index;
    };
    Int P = A, Q = B, R = C;
    std::vector<int> scaled; // which variable got divided by g at each step
    std::vector<Int> gs;
    for (;;) {
        Int g12 = gcd(P, Q);
        if (abs(g12) > 1) {
            gs.push_back(abs(g12));
            scaled.push_back(2);
            reduce_pair(P, Q, R, 2);
            continue;
        }
        Int g13 = gcd(P, R);
        if (abs(g13) > 1) {
            gs.push_back(abs(g13));
            scaled.push_back(1);
            reduce_pair(P, R, Q, 1);
            continue;
        }
        Int g23 = gcd(Q, R);
        if (abs(g23) > 1) {
            gs.push_back(abs(g23));
            scaled.push_back(0);
            reduce_pair(Q, R, P, 0);
            continue;
        }
        break;
    }
    auto pt = holzer_search(P, Q, R, opts);
    if (!pt) return std::nullopt;
    // Undo the pair reductions in reverse order: the variable opposite the
    // reduced pair picks up the factor g.
    for (size_t k = scaled.size(); k-- > 0;) {
        const Int& g = gs[k];
        switch (scaled[k]) {
            case 2: pt->z *= g; break;
            case 1: pt->y *= g; break;
            case 0: pt->x *= g; break;
        }
    }
    Int d = gcd(gcd(pt->x, pt->y), pt->z);
    if (d > 1) {
        pt->x /= d;
        pt->y /= d;
        pt->z /= d;
    }
    if (pt->x < 0) pt->x = -pt->x;
    if (pt->y < 0) pt->y = -pt->y;
    if (pt->z < 0) pt->z = -pt->z;
    return pt;
}

} // namespace

std::optional<ConicPoint> conic_point(const Rat& a, const Rat& b, const ConicOptions& opts) {
    if (a == 0 || b == 0) fail(ErrorKind::InvalidInstance, "conic with zero coefficient");
    SquarefreeSplit sa = squarefree_split(a);
    SquarefreeSplit sb = squarefree_split(b);
    auto pt = solve_diag(1, -sa.squarefree, -sb.squarefree, opts);
    if (!pt) return std::nullopt;
    ConicPoint out;
    out.x = pt->x;
    out.y = pt->y;
    out.z = pt->z;
    out.a0 = sa.squarefree;
    out.b0 = sb.squarefree;
    out.a_root = sa.root;
    out.b_root = sb.root;
    return out;
}

std::optional<std::array<Rat, 2>> conic_affine_point(const Rat& a, const Rat& b,
                                                     const ConicOptions& opts) {
    if (is_square(a)) {
        // s^2 - a t^2 factors; (s - sqrt(a) t)(s + sqrt(a) t) = b splits as 1 * b.
        SquarefreeSplit sa = squarefree_split(a);
        Rat sqrt_a = sa.root; // a = 1 * root^2
        std::array<Rat, 2> st;
        st[0] = (b + 1) / 2;
        st[1] = (b - 1) / (2 * sqrt_a);
        st[0].canonicalize();
        st[1].canonicalize();
        return st;
    }
    auto cp = conic_point(a, b, opts);
    if (!cp) return std::nullopt;
    // x^2 - a (y/a_root)^2 - b (z/b_root)^2 = 0; z != 0 because a is
    // a nonsquare (z = 0 would force a0 = 1).
    if (cp->z == 0) fail(ErrorKind::Internal, "conic point at infinity for nonsquare a");
    Rat X(cp->x), Y = Rat(cp->y) / cp->a_root, Z = Rat(cp->z) / cp->b_root;
    std::array<Rat, 2> st{X / Z, Y / Z};
    st[0].canonicalize();
    st[1].canonicalize();
    return st;
}

// ---------------------------------------------------------------------------
// Hilbert symbol over a quadratic extension
// ---------------------------------------------------------------------------

Tri hilbert_quadext(const Rat& a, const Rat& b, const Rat& m) {
    if (m == 0) fail(ErrorKind::InvalidInstance, "quadratic extension by 0");
    if (is_square(m)) return hilbert_Q(a, b).tri;
    // The quaternion class of (a,b) dies in Q(sqrt m) iff no ramified place
    // splits, i.e. m is a nonsquare in every completion where (a,b)_v = -1.
    HilbertResult h = hilbert_Q(a, b);
    for (const Place& v : h.ramified) {
        bool splits = v.infinite ? is_square_in_R(m) : is_square_in_Qp(m, v.p);
        if (splits) return Tri::nonzero();
    }
    return Tri::zero();
}

// ---------------------------------------------------------------------------
// Cubic norm-residue symbol over Q(omega)
// ---------------------------------------------------------------------------

namespace {

// Eisenstein integers a + b*omega, omega^2 = -1 - omega.
struct Eis {
    Int a, b;

    Eis() : a(0), b(0) {}
    Eis(Int x, Int y) : a(std::move(x)), b(std::move(y)) {}
    explicit Eis(long x) : a(x), b(0) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const Eis& o) const { return a == o.a && b == o.b; }
};

Eis operator+(const Eis& x, const Eis& y) { return {x.a + y.a, x.b + y.b}; }
Eis operator-(const Eis& x, const Eis& y) { return {x.a - y.a, x.b - y.b}; }
Eis operator*(const Eis& x, const Eis& y) {
    // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
    Int cross = x.a * y.b + x.b * y.a;
    Int ww = x.b * y.b;
    return {x.a * y.a - ww, cross - ww};
}
Eis conj(const Eis& x) { return {x.a - x.b, -x.b}; }
Int norm(const Eis& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

Int round_div(const Int& n, const Int& d) {
    // nearest integer to n/d, ties toward +inf; d > 0
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) ++q;
    return q;
}

Eis eis_mod(const Eis& x, const Eis& m) {
    Int nm = norm(m);
    Eis t = x * conj(m);
    Eis q{round_div(t.a, nm), round_div(t.b, nm)};
    return x - q * m;
}

Eis eis_powmod(Eis base, Int e, const Eis& m) {
    Eis r(1);
    base = eis_mod(base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = eis_mod(r * base, m);
        base = eis_mod(base * base, m);
        e >>= 1;
    }
    return r;
}

bool eis_divisible(const Eis& x, const Eis& m) { return eis_mod(x, m).is_zero(); }

// Cubic residue character exponent: chi_pi(x) = omega^e, e in {0,1,2};
// nullopt when x is not coprime to pi (never hit for unit arguments).
std::optional<int> cubic_character_exp(const Eis& x, const Eis& pi) {
    Int e = (norm(pi) - 1) / 3;
    Eis r = eis_powmod(x, e, pi);
    const Eis one(1), w(Int(0), Int(1)), w2(Int(-1), Int(-1));
    if (eis_divisible(r - one, pi)) return 0;
    if (eis_divisible(r - w, pi)) return 1;
    if (eis_divisible(r - w2, pi)) return 2;
    return std::nullopt;
}

// Primes of Z[omega] above p != 3 (one for inert p, the conjugate pair for
// split p = 1 mod 3).
std::vector<Eis> eisenstein_primes_above(const Int& p) {
    if (p % 3 == 2) return {Eis{p, Int(0)}};
    // p = x^2 - xy + y^2: scan y
    for (Int y = 1; 3 * y * y <= 4 * p; ++y) {
        Int disc = 4 * p - 3 * y * y;
        auto s = exact_isqrt(disc);
        if (!s) continue;
        if ((*s + y) % 2 == 0) {
            Int x = (*s + y) / 2;
            Eis pi{x, y};
            if (norm(pi) == p) return {pi, conj(pi)};
        }
    }
    fail(ErrorKind::Internal, "no Eisenstein prime above " + p.get_str());
}

// chi_pi of a nonzero rational coprime to pi.
int cubic_character_exp_rat(const Rat& u, const Eis& pi) {
    auto en = cubic_character_exp(Eis{Int(u.get_num()), Int(0)}, pi);
    auto ed = cubic_character_exp(Eis{Int(u.get_den()), Int(0)}, pi);
    if (!en || !ed) fail(ErrorKind::Internal, "cubic character of non-unit");
    return ((*en - *ed) % 3 + 3) % 3;
}

struct NormWitness {
    Eis u, v, w;
    Int den;
};

std::string witness_string(const NormWitness& nw) {
    auto eis_str = [](const Eis& e) {
        std::ostringstream os;
        os << "(" << e.a.get_str();
        if (e.b != 0) os << (e.b > 0 ? "+" : "") << e.b.get_str() << "w";
        os << ")";
        return os.str();
    };
    std::ostringstream os;
    os << "norm(" << eis_str(nw.u) << " + " << eis_str(nw.v) << "*r + "
       << eis_str(nw.w) << "*r^2)";
    if (nw.den != 1) os << "/" << nw.den.get_str() << "^3";
    return os.str();
}

// Search x = (u + v r + w r^2)/den, r^3 = A, with N(x) = target/den^3.
// Integer pass over [-B,B]^3, then a small Eisenstein pass.
std::optional<NormWitness> norm_search(const Int& A, const Int& target_num,
                                       const Int& target_den, long bound) {
    if (bound < 0) bound = 0;
    Int T = target_num * target_den * target_den; // N(y) = T with y = x*den
    const Int A2 = A * A;
    for (long u = -bound; u <= bound; ++u) {
        Int u3 = Int(u) * u * u;
        for (long v = -bound; v <= bound; ++v) {
            Int av3 = A * Int(v) * v * v;
            Int uv = Int(u) * v;
            for (long w = -bound; w <= bound; ++w) {
                Int n = u3 + av3 + A2 * Int(w) * w * w - 3 * A * uv * w;
                if (n == T)
                    return NormWitness{Eis(u), Eis(v), Eis(w), target_den};
            }
        }
    }
    long be = std::min(bound, 3L);
    for (long ua = -be; ua <= be; ++ua)
        for (long ub = -be; ub <= be; ++ub) {
            Eis u{Int(ua), Int(ub)};
            Eis u3 = u * u * u;
            for (long va = -be; va <= be; ++va)
                for (long vb = -be; vb <= be; ++vb) {
                    Eis v{Int(va), Int(vb)};
                    Eis av3 = v * v * v;
                    av3.a *= A;
                    av3.b *= A;
                    Eis uv = u * v;
                    for (long wa = -be; wa <= be; ++wa)
                        for (long wb = -be; wb <= be; ++wb) {
                            if (ub == 0 && vb == 0 && wb == 0) continue; // integer pass covered
                            Eis w{Int(wa), Int(wb)};
                            Eis n = u3 + av3;
                            Eis w3 = w * w * w;
                            n.a += A2 * w3.a;
                            n.b += A2 * w3.b;
                            Eis m = uv * w;
                            n.a -= 3 * A * m.a;
                            n.b -= 3 * A * m.b;
                            if (n.b == 0 && n.a == T)
                                return NormWitness{u, v, w, target_den};
                        }
                }
        }
    return std::nullopt;
}

} // namespace

CubicResult cubic_symbol(const Rat& a, const Rat& c, long search_bound) {
    if (a == 0 || c == 0) fail(ErrorKind::InvalidInstance, "cubic symbol of zero");
    Int A = cubefree_part(a);
    if (A == 1 || A == -1) {
        // a is a cube (note -1 = (-1)^3): the Kummer extension collapses.
        return {Tri::zero(), "first argument is a cube"};
    }
    Int C = cubefree_part(c);

    // Tame local symbols at Eisenstein primes away from 3.
    std::vector<Int> primes;
    for (const auto& [p, e] : factorize(A)) {
        (void)e;
        if (p != 3) primes.push_back(p);
    }
    for (const auto& [p, e] : factorize(C)) {
        (void)e;
        if (p != 3 && std::find(primes.begin(), primes.end(), p) == primes.end())
            primes.push_back(p);
    }
    Rat Ar(A), Cr(C);
    for (const Int& p : primes) {
        long alpha = valuation(Ar, p);
        long gamma = valuation(Cr, p);
        if (alpha == 0 && gamma == 0) continue;
        // (a,c)_pi = chi_pi((-1)^(alpha*gamma) a^gamma / c^alpha)
        Rat u(1);
        if ((alpha * gamma) % 2 != 0) u = -u;
        for (long i = 0; i < gamma; ++i) u *= Ar;
        for (long i = 0; i < -gamma; ++i) u /= Ar;
        for (long i = 0; i < alpha; ++i) u /= Cr;
        for (long i = 0; i < -alpha; ++i) u *= Cr;
        u.canonicalize();
        for (const Eis& pi : eisenstein_primes_above(p)) {
            int e = cubic_character_exp_rat(u, pi);
            if (e != 0) {
                std::ostringstream os;
                os << "tame obstruction above p=" << p.get_str();
                return {Tri::nonzero(), os.str()};
            }
        }
    }

    // Certify Zero through an explicit global norm.
    auto w = norm_search(A, Int(Cr.get_num()), Int(Cr.get_den()), search_bound);
    if (w) return {Tri::zero(), witness_string(*w)};

    std::ostringstream os;
    os << "no tame obstruction and no norm witness within bound " << search_bound;
    return {Tri::undecided(os.str()), {}};
}

Tri evaluate_symbol(const SymbolQuery& q, long cubic_bound) {
    if (q.a == 0 || q.b == 0) fail(ErrorKind::InvalidInstance, "symbol of zero");
    if (q.degree == 2) {
        switch (q.base.kind) {
            case BaseFieldKind::Q: return hilbert_Q(q.a, q.b).tri;
            case BaseFieldKind::QuadExt: return hilbert_quadext(q.a, q.b, q.base.ext_m);
            case BaseFieldKind::QOmega:
                fail(ErrorKind::UnsupportedSymbolBase, "degree 2 over Q(omega)");
        }
    }
    if (q.degree == 3) {
        if (q.base.kind != BaseFieldKind::QOmega)
            fail(ErrorKind::UnsupportedSymbolBase,
                 "degree 3 symbols require base Q(omega)");
        return cubic_symbol(q.a, q.b, cubic_bound).tri;
    }
    fail(ErrorKind::UnsupportedSymbolBase, "degree must be 2 or 3");
}

} // namespace qmrat
