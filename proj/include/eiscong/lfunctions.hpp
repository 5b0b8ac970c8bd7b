#ifndef EISCONG_LFUNCTIONS_HPP
#define EISCONG_LFUNCTIONS_HPP

#include <vector>

#include "eiscong/characters.hpp"
#include "eiscong/padic.hpp"

namespace eiscong {

/// B_k with B_1 = -1/2.
BigRational bernoulli(unsigned k);

/// B_{k,psi} for primitive psi, via the Bernoulli polynomial expansion.
CyclotomicElement generalized_bernoulli(unsigned k, const DirichletCharacter& psi);

struct LValue {
    DirichletCharacter character;  // the character actually used
    int argument = 0;              // s = 1 - k
    CyclotomicElement value;
    bool euler_factor_removed = false;
    i64 removed_prime = 0;
};

/// L(1 - k, psi). Imprimitive psi includes the Euler factors at primes
/// dividing the modulus but not the conductor.
LValue l_value(int s, const DirichletCharacter& psi);

/// (1 - psi(p) p^{k-1}) L(1 - k, psi) with psi the primitive character
/// attached to theta * omega^{-k}; theta must be even. Only s <= 0.
LValue kubota_leopoldt(int s, const DirichletCharacter& theta, i64 p);

struct PrimeValuation {
    PrimeAbove prime;
    int valuation;
};

/// valuation_at(x, P) for every prime P of Q(zeta_m) above p, in canonical order.
std::vector<PrimeValuation> valuations_above(const CyclotomicElement& x, i64 p, i64 m,
                                             PrecisionPolicy policy = {});

/// Valuations of L(0, chi) at each prime above p of Q(zeta_{order(chi)}).
std::vector<PrimeValuation> lvalue_valuation(const DirichletCharacter& chi, i64 p,
                                             PrecisionPolicy policy = {});

/// 1 - theta chi_zeta(p) != 0, where chi_zeta has p-power order zeta_order.
bool euler_factor_nonvanishing(const DirichletCharacter& theta, i64 p, i64 zeta_order);

}  // namespace eiscong

#endif
