#ifndef EISCONG_LAMBDAADIC_HPP
#define EISCONG_LAMBDAADIC_HPP

#include <string>
#include <vector>

#include "eiscong/characters.hpp"
#include "eiscong/lfunctions.hpp"
#include "eiscong/padic.hpp"

namespace eiscong {

/// nu_{k,zeta}: 1 + T -> zeta * u^{k-2}, with u = 1 + p. Only zeta = 1 is
/// computed; zeta_order records the order of zeta so other points can be
/// parsed and rejected.
struct SpecializationPoint {
    int k = 2;
    i64 zeta_order = 1;
};

/// The field Q(zeta_L), L = lcm(p - 1, order(theta)), with the prime above p
/// lying over the canonical prime of Q(zeta_{p-1}). All specializations are
/// materialized in its completion so that omega and theta land compatibly.
class AmbientEmbedding {
public:
    AmbientEmbedding(const DirichletCharacter& theta, i64 p, int precision);

    i64 order() const { return order_; }
    const LocalEmbedding& embedding() const { return embedding_; }
    PadicNumber operator()(const CyclotomicElement& x) const { return embedding_(x); }
    /// An element of Z_p, viewed in the same ring.
    PadicNumber lift(const PadicNumber& x) const;

private:
    i64 order_;
    LocalEmbedding embedding_;
};

/// The Lambda-adic Eisenstein eigenvalue c_ell = 1 + theta(ell) ell (1+T)^{a_ell}
/// (c_p = 1) specialized at `point`, modulo p^M.
PadicNumber specialize_c_ell(const DirichletCharacter& theta, i64 ell,
                             const SpecializationPoint& point, i64 p, int M);

struct SpecializationCheck {
    DirichletCharacter chi;    // chi~
    DirichletCharacter theta;  // chi~ omega~^{-1}
    i64 p = 0;
    i64 ell = 0;
    int k = 1;
    int precision = 0;
    PadicNumber lhs;               // nu_{k,1}(c_ell)
    PadicNumber rhs;               // 1 + chi~ omega~^{1-k}(ell) ell^{k-1}
    CyclotomicElement rhs_exact;   // the same, in Q(zeta_L)
    bool holds = false;
    std::string diagnostic;        // empty when holds
};

/// Compares nu_{k,1}(c_ell) for theta = chi~ omega~^{-1} with the closed form
/// 1 + chi~ omega~^{1-k}(ell) ell^{k-1} modulo p^M.
SpecializationCheck specialization_identity(const DirichletCharacter& chi, i64 ell, int k, i64 p,
                                            int M);

struct WeightOneConstant {
    CyclotomicElement value;          // (1 - theta(p)) L(0, chi~), theta = chi~ omega~^{-1}
    CyclotomicElement euler_factor;   // 1 - theta(p), theta taken primitive
    CyclotomicElement l_value;        // L(0, chi~)
    CyclotomicElement kubota_leopoldt;  // L_p(0, chi~ omega~) from the interpolation formula
    i64 field_order = 1;              // all values live in Q(zeta_field_order)
    std::vector<PrimeValuation> valuations;  // of value, primes of Q(zeta_field_order) above p
    int canonical_valuation = 0;      // at the prime over the canonical prime of Q(zeta_{p-1})
    bool obstruction = false;         // canonical_valuation > 0
};

WeightOneConstant eisenstein_constant_at_weight_one(const DirichletCharacter& chi, i64 p,
                                                    PrecisionPolicy policy = {});

}  // namespace eiscong

#endif
