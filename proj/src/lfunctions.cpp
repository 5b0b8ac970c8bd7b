#include "eiscong/lfunctions.hpp"

#include <mutex>
#include <stdexcept>

#include "eiscong/errors.hpp"

namespace eiscong {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational> g_bernoulli{BigRational(1)};

}  // namespace

BigRational bernoulli(unsigned k) {
    std::lock_guard lock(g_bernoulli_mutex);
    // sum_{j <= n} C(n+1, j) B_j = 0 for n >= 1.
    while (g_bernoulli.size() <= k) {
        unsigned n = static_cast<unsigned>(g_bernoulli.size());
        BigRational s(0);
        if (n > 1 && n % 2 == 1) {
            g_bernoulli.emplace_back(0);
            continue;
        }
        for (unsigned j = 0; j < n; ++j) {
            if (g_bernoulli[j] != 0)
                s += BigRational(binomial(n + 1, j)) * g_bernoulli[j];
        }
        BigRational b = -s / BigRational(n + 1);
        b.canonicalize();
        g_bernoulli.push_back(b);
    }
    return g_bernoulli[k];
}

CyclotomicElement generalized_bernoulli(unsigned k, const DirichletCharacter& psi) {
    if (k == 0)
        throw std::invalid_argument("generalized_bernoulli: k must be positive");
    if (!psi.is_primitive())
        throw std::invalid_argument("generalized_bernoulli: " + psi.label() + " is not primitive");
    const i64 f = psi.modulus();
    const i64 n = psi.order();
    // sums[i][e] = sum of a^i over 1 <= a <= f with psi(a) = zeta_n^e.
    std::vector<std::vector<BigInt>> sums(k + 1, std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (i64 a = 1; a <= f; ++a) {
        i64 e = psi.exponent_at(a);
        if (e < 0)
            continue;
        BigInt power(1);
        BigInt base(static_cast<long>(a));
        for (unsigned i = 0; i <= k; ++i) {
            sums[i][static_cast<std::size_t>(e)] += power;
            power *= base;
        }
    }
    // B_{k,psi} = sum_j C(k, j) B_j f^{j-1} P_{k-j}.
    std::vector<BigRational> total(static_cast<std::size_t>(n));
    BigRational fpow = BigRational(1) / BigRational(static_cast<long>(f));
    for (unsigned j = 0; j <= k; ++j) {
        BigRational c = BigRational(binomial(k, j)) * bernoulli(j) * fpow;
        if (c != 0) {
            for (std::size_t e = 0; e < total.size(); ++e) {
                if (sums[k - j][e] != 0)
                    total[e] += c * BigRational(sums[k - j][e]);
            }
        }
        fpow *= static_cast<long>(f);
    }
    for (auto& t : total)
        t.canonicalize();
    return CyclotomicElement::from_exponent_sums(n, std::span<const BigRational>(total));
}

LValue l_value(int s, const DirichletCharacter& psi) {
    if (s > 0)
        throw std::invalid_argument("l_value: only nonpositive integers are supported");
    const unsigned k = static_cast<unsigned>(1 - s);
    DirichletCharacter prim = psi.primitive();
    CyclotomicElement value = generalized_bernoulli(k, prim) * BigRational(-1, static_cast<long>(k));
    value = value.embed(psi.order());
    for (const auto& pp : factorize(psi.modulus())) {
        if (prim.modulus() % pp.prime == 0)
            continue;
        BigRational scale = eiscong::pow(BigInt(static_cast<long>(pp.prime)), k - 1);
        value *= CyclotomicElement::rational(psi.order(), 1) - prim.evaluate_in(pp.prime, psi.order()) * scale;
    }
    return {psi, s, value, false, 0};
}

LValue kubota_leopoldt(int s, const DirichletCharacter& theta, i64 p) {
    if (s > 0)
        throw Unsupported("kubota_leopoldt: only s = 1 - k with k >= 1 is computed");
    if (theta.is_odd())
        throw std::invalid_argument("kubota_leopoldt: " + theta.label() + " is odd");
    const unsigned k = static_cast<unsigned>(1 - s);
    DirichletCharacter psi =
        (theta * teichmuller_character(p).pow(-static_cast<i64>(k))).primitive();
    LValue base = l_value(s, psi);
    BigRational pk = eiscong::pow(BigInt(static_cast<long>(p)), k - 1);
    CyclotomicElement factor = CyclotomicElement::rational(psi.order(), 1) - psi.evaluate(p) * pk;
    return {psi, s, factor * base.value, true, p};
}

std::vector<PrimeValuation> valuations_above(const CyclotomicElement& x, i64 p, i64 m,
                                             PrecisionPolicy policy) {
    std::vector<PrimeValuation> out;
    for (const auto& P : primes_above(p, m))
        out.push_back({P, valuation_at(x, P, policy)});
    return out;
}

std::vector<PrimeValuation> lvalue_valuation(const DirichletCharacter& chi, i64 p,
                                             PrecisionPolicy policy) {
    if (!chi.is_odd())
        throw std::invalid_argument("lvalue_valuation: " + chi.label() + " is even");
    if (chi.order() % p == 0)
        throw std::invalid_argument("lvalue_valuation: order of " + chi.label() + " is divisible by p");
    LValue L = l_value(0, chi);
    if (L.value.is_zero())
        throw std::logic_error("L(0, chi) vanished for an odd character");
    return valuations_above(L.value, p, chi.value_field_order(), policy);
}

bool euler_factor_nonvanishing(const DirichletCharacter& theta, i64 p, i64 zeta_order) {
    if (zeta_order < 1 || (zeta_order > 1 && factorize(zeta_order).size() != 1) ||
        (zeta_order > 1 && zeta_order % p != 0))
        throw std::invalid_argument("euler_factor_nonvanishing: zeta order must be a power of p");
    if (zeta_order > 1) {
        // chi_zeta is ramified at p, so theta chi_zeta (p) = 0 unless theta
        // has order divisible by p and cancels it, impossible for order prime to p.
        if (theta.order() % p != 0)
            return true;
        throw Unsupported("euler_factor_nonvanishing: theta of order divisible by p");
    }
    DirichletCharacter prim = theta.primitive();
    return !(prim.evaluate(p) == CyclotomicElement::rational(1, 1));
}

}  // namespace eiscong
