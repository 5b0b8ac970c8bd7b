#ifndef EISCONG_CYCLOTOMIC_HPP
#define EISCONG_CYCLOTOMIC_HPP

#include <span>
#include <string>
#include <vector>

#include "eiscong/rational.hpp"

namespace eiscong {

/// Coefficients of the m-th cyclotomic polynomial, ascending, monic of degree
/// phi(m). Results are cached process-wide; the cache is safe to share
/// between threads.
const std::vector<BigInt>& cyclotomic_polynomial(i64 m);

/// Exact element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}
/// with z = zeta_m.
///
/// Binary arithmetic between elements of different orders m1, m2 embeds both
/// into order lcm(m1, m2) first. Values are immutable once built.
class CyclotomicElement {
public:
    CyclotomicElement();  // zero of Q = Q(zeta_1)
    explicit CyclotomicElement(i64 order);
    /// Coefficients may be longer than phi(order); they are reduced.
    CyclotomicElement(i64 order, std::vector<BigRational> coeffs);

    static CyclotomicElement rational(i64 order, const BigRational& c);
    static CyclotomicElement root_of_unity(i64 order, i64 exponent);
    /// sum_e sums[e] * zeta_order^e, with sums.size() <= order.
    static CyclotomicElement from_exponent_sums(i64 order, std::span<const BigInt> sums);
    static CyclotomicElement from_exponent_sums(i64 order, std::span<const BigRational> sums);

    i64 order() const { return order_; }
    std::size_t degree() const { return coeffs_.size(); }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    const BigRational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    /// Same number viewed in Q(zeta_target); order() must divide target.
    CyclotomicElement embed(i64 target) const;
    /// Image under zeta -> zeta^a, gcd(a, order) = 1.
    CyclotomicElement galois(i64 a) const;
    CyclotomicElement conjugate() const { return galois(-1); }
    CyclotomicElement pow(unsigned long e) const;

    CyclotomicElement operator-() const;
    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const BigRational& c);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const BigRational& c) { return a *= c; }
    friend CyclotomicElement operator*(const BigRational& c, CyclotomicElement a) { return a *= c; }
    /// Equality as numbers: elements of different orders are compared in the
    /// common field.
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    /// Human-readable form such as "1/2 - 3*z + z^2" with z = zeta_m.
    std::string to_string() const;

    /// Common denominator D and integer vector X with this = X / D, D > 0.
    BigInt integral_form(std::vector<BigInt>& numerators) const;

private:
    i64 order_ = 1;
    std::vector<BigRational> coeffs_;
};

/// Field norm N_{Q(zeta_m)/Q}(x), computed as the determinant of the
/// multiplication-by-x map (fraction-free Bareiss elimination).
BigRational norm(const CyclotomicElement& x);

/// Reduce an integer polynomial (ascending) modulo the monic Phi_m in place;
/// the result has exactly phi(m) coefficients.
void reduce_mod_cyclotomic(std::vector<BigInt>& poly, i64 m);

}  // namespace eiscong

#endif
