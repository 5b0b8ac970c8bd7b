#include "eiscong/modforms.hpp"

#include <stdexcept>

#include "eiscong/lfunctions.hpp"

namespace eiscong {

QExpansion eisenstein_E1(const DirichletCharacter& chi, i64 B) {
    if (!chi.is_odd())
        throw std::invalid_argument("eisenstein_E1: " + chi.label() + " is even");
    if (!chi.is_primitive())
        throw std::invalid_argument("eisenstein_E1: " + chi.label() + " is not primitive");
    if (B < 0)
        throw std::invalid_argument("eisenstein_E1: negative bound");
    const i64 m = chi.order();
    QExpansion f;
    f.level = chi.modulus();
    f.nebentypus = chi;
    f.bound = B;
    f.coeffs.reserve(static_cast<std::size_t>(B + 1));
    f.coeffs.push_back(l_value(0, chi).value * BigRational(1, 2));
    // Divisor sums by sieving: add chi(t) to every multiple of t.
    std::vector<std::vector<BigInt>> sums(static_cast<std::size_t>(B + 1), std::vector<BigInt>(static_cast<std::size_t>(m)));
    for (i64 t = 1; t <= B; ++t) {
        i64 e = chi.exponent_at(t);
        if (e < 0)
            continue;
        for (i64 n = t; n <= B; n += t)
            sums[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] += 1;
    }
    for (i64 n = 1; n <= B; ++n)
        f.coeffs.push_back(CyclotomicElement::from_exponent_sums(m, std::span<const BigInt>(sums[static_cast<std::size_t>(n)])));
    return f;
}

std::map<i64, CyclotomicElement> cm_prime_eigenvalues(const ClassCharacter& phi, i64 B) {
    const ClassGroup& G = phi.group();
    std::map<i64, CyclotomicElement> out;
    for (i64 ell : primes_up_to(B)) {
        switch (splitting(ell, G.discriminant())) {
        case Splitting::Inert:
            out[ell] = CyclotomicElement(phi.order());
            break;
        case Splitting::Ramified:
            out[ell] = phi.evaluate(prime_to_class(ell, G).first);
            break;
        case Splitting::Split: {
            auto [c, cbar] = prime_to_class(ell, G);
            out[ell] = phi.evaluate(c) + phi.evaluate(cbar);
            break;
        }
        }
    }
    return out;
}

QExpansion theta_series(const ClassCharacter& phi, i64 B) {
    if (phi.order() <= 2)
        throw std::invalid_argument("theta_series: " + phi.label() +
                                    " is trivial or quadratic; its theta series is not a newform");
    const ClassGroup& G = phi.group();
    const i64 m = phi.order();
    QExpansion f;
    f.level = -G.discriminant();
    f.nebentypus = kronecker_character(G.discriminant());
    f.bound = B;
    f.coeffs.push_back(CyclotomicElement(m));
    for (i64 n = 1; n <= B; ++n) {
        std::vector<BigInt> sums(static_cast<std::size_t>(m));
        for (std::size_t cls : ideals_of_norm(n, G))
            sums[static_cast<std::size_t>(phi.exponent_at(cls))] += 1;
        f.coeffs.push_back(CyclotomicElement::from_exponent_sums(m, std::span<const BigInt>(sums)));
    }
    return f;
}

CyclotomicElement hecke_eigenvalue(const QExpansion& f, i64 ell) {
    if (ell > f.bound)
        throw std::out_of_range("hecke_eigenvalue: " + std::to_string(ell) + " exceeds the truncation " +
                                std::to_string(f.bound));
    if (!is_prime(ell))
        throw std::invalid_argument("hecke_eigenvalue: " + std::to_string(ell) + " is not prime");
    return f[ell];
}

QExpansion eigenform_expand(const std::map<i64, CyclotomicElement>& prime_eigenvalues,
                            const DirichletCharacter& nebentypus, i64 level, i64 B) {
    if (level % nebentypus.modulus() != 0)
        throw std::invalid_argument("eigenform_expand: nebentypus modulus must divide the level");
    QExpansion f;
    f.level = level;
    f.nebentypus = nebentypus;
    f.bound = B;
    f.coeffs.assign(static_cast<std::size_t>(B + 1), CyclotomicElement());
    if (B >= 1)
        f.coeffs[1] = CyclotomicElement::rational(1, 1);
    for (i64 ell : primes_up_to(B)) {
        auto it = prime_eigenvalues.find(ell);
        if (it == prime_eigenvalues.end())
            throw std::invalid_argument("eigenform_expand: missing eigenvalue at " + std::to_string(ell));
        const CyclotomicElement& a = it->second;
        const bool bad = level % ell == 0;
        CyclotomicElement chi_l = nebentypus.evaluate(ell);
        i64 prev = 1, cur = ell;
        f.coeffs[static_cast<std::size_t>(ell)] = a;
        while (cur <= B / ell) {
            i64 next = cur * ell;
            CyclotomicElement v = a * f.coeffs[static_cast<std::size_t>(cur)];
            if (!bad)
                v -= chi_l * f.coeffs[static_cast<std::size_t>(prev)];
            f.coeffs[static_cast<std::size_t>(next)] = v;
            prev = cur;
            cur = next;
        }
    }
    // Multiplicativity: n = l^k * m with l the least prime of n.
    for (i64 n = 2; n <= B; ++n) {
        auto fac = factorize(n);
        if (fac.size() == 1)
            continue;
        i64 pk = fac.front().value;
        f.coeffs[static_cast<std::size_t>(n)] =
            f.coeffs[static_cast<std::size_t>(pk)] * f.coeffs[static_cast<std::size_t>(n / pk)];
    }
    return f;
}

i64 sturm_bound(i64 N, int weight) {
    if (N < 1 || weight < 1)
        throw std::invalid_argument("sturm_bound: level and weight must be positive");
    i64 index = N;
    for (const auto& pp : factorize(N))
        index = index / pp.prime * (pp.prime + 1);
    i64 num = weight * index;
    return std::max<i64>(1, (num + 11) / 12);
}

HeckePolynomial hecke_polynomial_at_p(const ClassCharacter& phi, i64 p) {
    const i64 d = phi.group().discriminant();
    if (splitting(p, d) != Splitting::Inert)
        throw std::invalid_argument("hecke_polynomial_at_p: " + std::to_string(p) + " is not inert in Q(sqrt(" +
                                    std::to_string(d) + "))");
    HeckePolynomial h;
    h.a_p = CyclotomicElement(phi.order());
    h.chi_p = kronecker_character(d).evaluate(p);
    // x^2 + chi(p) with chi(p) = -1 at an inert prime.
    h.roots = {CyclotomicElement::rational(1, 1), CyclotomicElement::rational(1, -1)};
    return h;
}

}  // namespace eiscong
