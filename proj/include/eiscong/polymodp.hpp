#ifndef EISCONG_POLYMODP_HPP
#define EISCONG_POLYMODP_HPP

// Dense polynomials over F_p, ascending coefficients in [0, p). The zero
// polynomial is the empty vector.

#include <vector>

#include "eiscong/rational.hpp"

namespace eiscong::fp {

using Poly = std::vector<i64>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero
Poly from_integers(const std::vector<BigInt>& coeffs, i64 p);
Poly add(const Poly& a, const Poly& b, i64 p);
Poly sub(const Poly& a, const Poly& b, i64 p);
Poly mul(const Poly& a, const Poly& b, i64 p);
Poly rem(const Poly& a, const Poly& b, i64 p);
Poly quo(const Poly& a, const Poly& b, i64 p);
Poly monic(const Poly& a, i64 p);
Poly gcd(Poly a, Poly b, i64 p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, i64 p);
Poly powmod(const Poly& a, const BigInt& e, const Poly& m, i64 p);
/// Inverse of a modulo m, assuming gcd(a, m) = 1.
Poly invmod(const Poly& a, const Poly& m, i64 p);
/// g(h) mod m.
Poly compose_mod(const Poly& g, const Poly& h, const Poly& m, i64 p);

/// Split a monic squarefree polynomial whose irreducible factors all have
/// degree `factor_degree` (Cantor-Zassenhaus). Factors are returned monic and
/// sorted by the canonical order: compared from the leading coefficient down.
std::vector<Poly> equal_degree_factorization(const Poly& f, int factor_degree, i64 p);

/// Canonical order on monic polynomials of equal degree.
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace eiscong::fp

#endif
