#include "qmrat/numtheory.hpp"

#include <algorithm>
#include <set>

#include "qmrat/error.hpp"

namespace qmrat {

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n == 0) fail(ErrorKind::Internal, "factorize(0)");
    Int m = abs(n);
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    Int p = 5;
    // 6k±1 wheel; inputs here are small (instance data, test ranges).
    while (p * p <= m) {
        strip(p);
        strip(p + 2);
        p += 6;
    }
    if (m > 1) out.emplace_back(m, 1);
    std::sort(out.begin(), out.end());
    return out;
}

long valuation(const Rat& q, const Int& p) {
    if (q == 0) fail(ErrorKind::Internal, "valuation of zero");
    long v = 0;
    Int num = q.get_num(), den = q.get_den();
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        --v;
    }
    return v;
}

Rat unit_part(const Rat& q, const Int& p) {
    long v = valuation(q, p);
    Rat pw(1);
    Int pp;
    mpz_pow_ui(pp.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v < 0 ? -v : v));
    if (v >= 0)
        pw = Rat(1, pp);
    else
        pw = Rat(pp, 1);
    Rat r = q * pw;
    r.canonicalize();
    return r;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rat& q) {
    return q >= 0 && is_square(Int(q.get_num())) && is_square(Int(q.get_den()));
}

bool is_perfect_cube(const Rat& q) {
    auto cube_int = [](const Int& n) {
        Int r;
        return mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) != 0;
    };
    return cube_int(Int(q.get_num())) && cube_int(Int(q.get_den()));
}

SquarefreeSplit squarefree_split(const Rat& q) {
    if (q == 0) fail(ErrorKind::Internal, "squarefree_split(0)");
    // q and num*den are in the same square class.
    Int n = q.get_num() * q.get_den();
    int sign = (n < 0) ? -1 : 1;
    Int core = 1;
    Int sq = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e % 2) core *= p;
        for (int i = 0; i < e / 2; ++i) sq *= p;
    }
    SquarefreeSplit s;
    s.squarefree = sign * core;
    // q = core*sign * root^2  =>  root^2 = q / (sign*core)
    Rat root2 = q / Rat(s.squarefree);
    root2.canonicalize();
    Int rn = sqrt(Int(root2.get_num()));
    Int rd = sqrt(Int(root2.get_den()));
    s.root = Rat(rn, rd);
    s.root.canonicalize();
    return s;
}

Int cubefree_part(const Rat& q) {
    if (q == 0) fail(ErrorKind::Internal, "cubefree_part(0)");
    Int n = q.get_num() * q.get_den() * q.get_den(); // same cube class as q
    int sign = (n < 0) ? -1 : 1;
    Int core = 1;
    for (const auto& [p, e] : factorize(n)) {
        int r = e % 3;
        for (int i = 0; i < r; ++i) core *= p;
    }
    return sign * core;
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::vector<Int> odd_prime_support(const std::vector<Rat>& values) {
    std::set<Int> primes;
    for (const Rat& v : values) {
        if (v == 0) continue;
        for (const Int& part : {Int(v.get_num()), Int(v.get_den())}) {
            if (part == 1 || part == -1) continue;
            for (const auto& [p, e] : factorize(part)) {
                (void)e;
                if (p != 2) primes.insert(p);
            }
        }
    }
    return {primes.begin(), primes.end()};
}

bool is_square_in_Qp(const Rat& q, const Int& p) {
    long v = valuation(q, p);
    if (v % 2 != 0) return false;
    Rat u = unit_part(q, p);
    if (p == 2) {
        // 2-adic units are squares iff they are 1 mod 8.
        Int num = u.get_num(), den = u.get_den();
        Int r = num * den; // odd; same square class as u mod Z_2-squares
        Int m = r % 8;
        if (m < 0) m += 8;
        return m == 1;
    }
    Int num = u.get_num(), den = u.get_den();
    return legendre(num * den, p) == 1;
}

bool is_square_in_R(const Rat& q) { return q > 0; }

std::optional<Int> exact_isqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

Rat parse_rational(const std::string& text) {
    Rat q;
    if (q.set_str(text, 10) != 0)
        fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return q;
}

} // namespace qmrat
