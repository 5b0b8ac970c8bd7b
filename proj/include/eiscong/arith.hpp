#ifndef EISCONG_ARITH_HPP
#define EISCONG_ARITH_HPP

// Machine-word elementary number theory used by every other module.
// All routines take and return int64_t; intermediate products go through
// __int128 so moduli up to 2^62 are safe.

#include <cstdint>
#include <utility>
#include <vector>

namespace eiscong {

using i64 = std::int64_t;

struct PrimePower {
    i64 prime;
    int exponent;
    i64 value;  // prime^exponent
};

i64 mod(i64 a, i64 m);  // least nonnegative residue, m > 0
i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 base, i64 exp, i64 m);  // exp >= 0
i64 invmod(i64 a, i64 m);              // throws std::domain_error if gcd(a,m) != 1
i64 ipow(i64 base, int exp);

/// Extended Euclid: returns g = gcd(a,b) >= 0 and sets x, y with a*x + b*y = g.
i64 xgcd(i64 a, i64 b, i64& x, i64& y);

bool is_prime(i64 n);
std::vector<PrimePower> factorize(i64 n);  // n >= 1; ascending primes
std::vector<i64> divisors(i64 n);          // ascending
i64 euler_phi(i64 n);
int moebius(i64 n);
int valuation(i64 n, i64 p);  // v_p(n), n != 0
bool is_squarefree(i64 n);

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
i64 multiplicative_order(i64 a, i64 m);

/// Least primitive root modulo p^2 for an odd prime p; it generates (Z/p^k)^x
/// for every k >= 1.
i64 least_primitive_root_p2(i64 p);

/// Kronecker symbol (a/n) for any integer a and n.
int kronecker(i64 a, i64 n);

/// Some square root of a modulo an odd prime p (a must be a square mod p).
i64 sqrt_mod_prime(i64 a, i64 p);

/// All primes <= bound, ascending.
std::vector<i64> primes_up_to(i64 bound);

/// The first `count` primes different from `skip`.
std::vector<i64> first_primes_excluding(int count, i64 skip);

bool is_fundamental_discriminant(i64 d);

}  // namespace eiscong

#endif
