#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmrat {

using Int = mpz_class;
using Rat = mpq_class;

// Trial-division factorization of |n|, n != 0.  Returns (prime, exponent)
// pairs in increasing prime order; the sign is not part of the result.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// p-adic valuation of a nonzero rational (negative for denominators).
long valuation(const Rat& q, const Int& p);

// The prime-to-p part of q, i.e. q / p^valuation(q, p).
Rat unit_part(const Rat& q, const Int& p);

bool is_square(const Int& n);
bool is_square(const Rat& q);
bool is_perfect_cube(const Rat& q);

// q = squarefree * root^2 with squarefree a squarefree integer carrying
// the sign of q, root a positive rational.
struct SquarefreeSplit {
    Int squarefree;
    Rat root;
};
SquarefreeSplit squarefree_split(const Rat& q);

// Cube-free integer representative of q modulo cubes (keeps the sign).
Int cubefree_part(const Rat& q);

// Legendre symbol (a|p) for an odd prime p; 0 when p | a.
int legendre(const Int& a, const Int& p);

// Odd primes dividing the numerator or denominator of any of the inputs.
std::vector<Int> odd_prime_support(const std::vector<Rat>& values);

// Is q a square in the completion Q_p (or in R for the infinite place)?
bool is_square_in_Qp(const Rat& q, const Int& p);
bool is_square_in_R(const Rat& q);

std::optional<Int> exact_isqrt(const Int& n);

Rat parse_rational(const std::string& text); // "p/q", "p", or decimal-free

} // namespace qmrat
