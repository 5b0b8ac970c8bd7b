#ifndef EISCONG_MODFORMS_HPP
#define EISCONG_MODFORMS_HPP

#include <map>
#include <vector>

#include "eiscong/characters.hpp"
#include "eiscong/imquad.hpp"

namespace eiscong {

/// Truncated q-expansion a_0 + a_1 q + ... + a_B q^B of a weight-one form.
struct QExpansion {
    i64 level = 1;
    DirichletCharacter nebentypus;
    i64 bound = 0;
    std::vector<CyclotomicElement> coeffs;  // size bound + 1

    const CyclotomicElement& operator[](i64 n) const { return coeffs.at(static_cast<std::size_t>(n)); }
};

/// E_1(chi): a_0 = L(0, chi)/2, a_n = sum_{t | n} chi(t). chi odd and primitive.
QExpansion eisenstein_E1(const DirichletCharacter& chi, i64 B);

/// Eigenvalues of theta_phi at primes ell <= B: 0 if inert,
/// phi(l) + phi(l^c) if split, phi(l) if ramified.
std::map<i64, CyclotomicElement> cm_prime_eigenvalues(const ClassCharacter& phi, i64 B);

/// theta_phi = sum over integral ideals a of phi([a]) q^{N(a)}. Level |d|,
/// nebentypus chi_d; phi must have order >= 3.
QExpansion theta_series(const ClassCharacter& phi, i64 B);

/// a_ell of an eigenform.
CyclotomicElement hecke_eigenvalue(const QExpansion& f, i64 ell);

/// Weight-one expansion from prime eigenvalues: Hecke recursion at good
/// primes, a_{l^k} = a_l^k at primes dividing the level, multiplicativity.
QExpansion eigenform_expand(const std::map<i64, CyclotomicElement>& prime_eigenvalues,
                            const DirichletCharacter& nebentypus, i64 level, i64 B);

/// ceil(k N prod_{l | N} (1 + 1/l) / 12), at least 1.
i64 sturm_bound(i64 N, int weight = 1);

struct HeckePolynomial {
    CyclotomicElement a_p;    // linear coefficient is -a_p
    CyclotomicElement chi_p;  // constant coefficient
    std::vector<CyclotomicElement> roots;
};

/// x^2 - a_p x + chi_d(p) for theta_phi at a prime p inert in F.
HeckePolynomial hecke_polynomial_at_p(const ClassCharacter& phi, i64 p);

}  // namespace eiscong

#endif
