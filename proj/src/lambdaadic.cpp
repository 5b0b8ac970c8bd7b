#include "eiscong/lambdaadic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eiscong/arith.hpp"

namespace eiscong {

namespace {

i64 ambient_order(const DirichletCharacter& theta, i64 p) {
    return std::lcm(p - 1, theta.order());
}

PrimeAbove ambient_prime(i64 p, i64 L) {
    return prime_lying_over(canonical_prime_above(p, p - 1), L);
}

void check_prime(i64 p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

AmbientEmbedding::AmbientEmbedding(const DirichletCharacter& theta, i64 p, int precision)
    : order_(ambient_order(theta, p)), embedding_(ambient_prime(p, order_), precision) {
    if (theta.order() % p == 0)
        throw std::invalid_argument("order of " + theta.label() + " is divisible by p");
}

PadicNumber AmbientEmbedding::lift(const PadicNumber& x) const {
    const auto& ring = embedding_.ring();
    if (x.is_zero())
        return PadicNumber(ring, x.valuation(), 0, ring->zero());
    BigInt pk = ring->prime_power(x.precision());
    return PadicNumber(ring, x.valuation(), x.precision(), ring->from_integer(x.unit()[0], pk));
}

PadicNumber specialize_c_ell(const DirichletCharacter& theta, i64 ell,
                             const SpecializationPoint& point, i64 p, int M) {
    check_prime(p);
    if (point.k < 1)
        throw std::invalid_argument("specialize_c_ell: weight must be >= 1");
    if (M < 1)
        throw std::invalid_argument("specialize_c_ell: precision must be >= 1");
    if (point.zeta_order != 1)
        throw Unsupported("specialization at zeta of order " + std::to_string(point.zeta_order) +
                          ": unsupported at desk scale");
    AmbientEmbedding amb(theta, p, M + 1);
    const auto& ring = amb.embedding().ring();
    PadicNumber one(ring, 0, M, ring->from_integer(BigInt(1), ring->prime_power(M)));
    if (ell == p)
        return one;
    if (ell < 2 || !is_prime(ell))
        throw std::invalid_argument("specialize_c_ell: ell must be prime");
    i64 e = theta.exponent_at(ell);
    if (e < 0)
        return one;
    PadicNumber a = padic_exponent_a_ell(ell, p, M);
    PadicNumber exponent = a * PadicNumber::from_integer(p, BigInt(point.k - 2), M);
    PadicNumber power = amb.lift(one_plus_p_power(p, exponent));
    PadicNumber theta_ell = amb(theta.evaluate_in(ell, amb.order()));
    PadicNumber ell_p = amb.lift(PadicNumber::from_integer(p, BigInt(static_cast<long>(ell)), M + 1));
    PadicNumber c = one + theta_ell * ell_p * power;
    return c;
}

SpecializationCheck specialization_identity(const DirichletCharacter& chi, i64 ell, int k, i64 p,
                                            int M) {
    check_prime(p);
    DirichletCharacter omega = teichmuller_character(p);
    DirichletCharacter theta = chi * omega.inverse();
    PadicNumber lhs = specialize_c_ell(theta, ell, {k, 1}, p, M);

    AmbientEmbedding amb(theta, p, M + 1);
    DirichletCharacter twist = chi * omega.pow(1 - k);
    CyclotomicElement rhs_exact = CyclotomicElement::rational(amb.order(), 1);
    if (twist.exponent_at(ell) >= 0) {
        BigRational lk = eiscong::pow(BigInt(static_cast<long>(ell)), static_cast<unsigned long>(k - 1));
        rhs_exact += twist.evaluate_in(ell, amb.order()) * lk;
    }
    PadicNumber rhs = amb(rhs_exact);
    bool holds = congruent(lhs, rhs, M);
    std::string diagnostic;
    if (!holds) {
        std::ostringstream os;
        os << "mismatch mod " << p << "^" << M << ": lhs - rhs = " << (lhs - rhs).to_string();
        diagnostic = os.str();
    }
    return SpecializationCheck{chi, theta, p, ell, k, M, lhs, rhs, rhs_exact, holds, diagnostic};
}

WeightOneConstant eisenstein_constant_at_weight_one(const DirichletCharacter& chi, i64 p,
                                                    PrecisionPolicy policy) {
    check_prime(p);
    if (!chi.is_odd())
        throw std::invalid_argument("eisenstein_constant_at_weight_one: " + chi.label() + " is even");
    if (chi.order() % p == 0)
        throw std::invalid_argument("eisenstein_constant_at_weight_one: order of " + chi.label() +
                                    " is divisible by p");
    DirichletCharacter omega = teichmuller_character(p);
    DirichletCharacter prim = chi.primitive();
    if (prim == omega || prim == omega.inverse())
        throw std::invalid_argument("eisenstein_constant_at_weight_one: " + chi.label() +
                                    " is omega^{+-1}");
    DirichletCharacter theta = (chi * omega.inverse()).primitive();
    const i64 L = ambient_order(theta, p);

    WeightOneConstant out;
    out.field_order = L;
    out.euler_factor = CyclotomicElement::rational(L, 1) - theta.evaluate_in(p, L);
    out.l_value = l_value(0, chi).value.embed(L);
    out.value = out.euler_factor * out.l_value;
    out.kubota_leopoldt = kubota_leopoldt(0, chi * omega, p).value.embed(L);
    if (out.value.is_zero())
        throw std::logic_error("weight-one constant vanished");
    out.valuations = valuations_above(out.value, p, L, policy);
    PrimeAbove canon = ambient_prime(p, L);
    for (const auto& pv : out.valuations)
        if (pv.prime == canon)
            out.canonical_valuation = pv.valuation;
    out.obstruction = out.canonical_valuation > 0;
    return out;
}

}  // namespace eiscong
