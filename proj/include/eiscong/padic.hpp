#ifndef EISCONG_PADIC_HPP
#define EISCONG_PADIC_HPP

#include <memory>
#include <string>
#include <vector>

#include "eiscong/cyclotomic.hpp"
#include "eiscong/errors.hpp"
#include "eiscong/polymodp.hpp"

namespace eiscong {

inline constexpr int kDefaultPrecision = 30;
inline constexpr int kPrecisionCap = 480;

/// A prime P of Q(zeta_m) above p, for m = d * p^r with p not dividing d.
///
/// P is determined by a monic irreducible factor g of Phi_d mod p (the
/// unramified part); above the prime of Q(zeta_d) cut out by g there is a
/// single prime of Q(zeta_m), totally ramified of index phi(p^r).
struct PrimeAbove {
    i64 p = 0;
    i64 m = 1;
    i64 d = 1;
    int r = 0;
    fp::Poly unramified_part;  // ascending, monic, degree f
    int residue_degree = 1;
    i64 ramification_index = 1;
    int index = 0;  // position among primes_above(p, m)

    std::string label() const;  // e.g. "5:t+2"
    friend bool operator==(const PrimeAbove& a, const PrimeAbove& b) {
        return a.p == b.p && a.m == b.m && a.unramified_part == b.unramified_part;
    }
};

/// All primes of Q(zeta_m) above p in canonical order (index 0 is canonical).
std::vector<PrimeAbove> primes_above(i64 p, i64 m);
PrimeAbove canonical_prime_above(i64 p, i64 m);
/// The least prime of Q(zeta_m) lying over `base`, a prime of Q(zeta_base.m)
/// with base.m | m.
PrimeAbove prime_lying_over(const PrimeAbove& base, i64 m);

/// Z_p[t]/(G) for G a monic lift (coefficients in [0, p)) of an irreducible
/// polynomial mod p: the ring of integers of the unramified extension of
/// degree f. Elements are coefficient vectors of length f, reduced modulo a
/// caller-supplied power of p.
class UnramifiedRing {
public:
    using Elem = std::vector<BigInt>;

    UnramifiedRing(i64 p, fp::Poly modulus);
    /// Z_p itself.
    static std::shared_ptr<const UnramifiedRing> integers(i64 p);

    i64 prime() const { return p_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const fp::Poly& modulus() const { return modulus_; }
    BigInt prime_power(int k) const;

    Elem zero() const { return Elem(static_cast<std::size_t>(degree())); }
    Elem from_integer(const BigInt& n, const BigInt& pk) const;
    Elem generator(const BigInt& pk) const;  // the class of t
    Elem reduce(Elem a, const BigInt& pk) const;
    Elem add(const Elem& a, const Elem& b, const BigInt& pk) const;
    Elem sub(const Elem& a, const Elem& b, const BigInt& pk) const;
    Elem mul(const Elem& a, const Elem& b, const BigInt& pk) const;
    Elem scale(const Elem& a, const BigInt& c, const BigInt& pk) const;
    Elem pow(const Elem& a, const BigInt& e, const BigInt& pk) const;
    /// Inverse of a unit modulo p^k.
    Elem inverse(const Elem& a, int k) const;
    /// Minimum p-adic valuation over coordinates, capped at k.
    int valuation(const Elem& a, int k) const;
    /// a / p^s for a divisible by p^s, result reduced mod p^k.
    Elem divide_by_p_power(const Elem& a, int s, const BigInt& pk) const;

private:
    i64 p_;
    fp::Poly modulus_;
};

/// Element p^v * u of an unramified extension of Q_p, with u a unit known
/// modulo p^precision (relative precision). The zero-at-precision element has
/// relative precision 0 and valuation equal to its absolute precision.
class PadicNumber {
public:
    using Elem = UnramifiedRing::Elem;

    PadicNumber(std::shared_ptr<const UnramifiedRing> ring, int valuation, int precision, Elem unit);

    /// n known modulo p^absolute_precision, in Z_p.
    static PadicNumber from_integer(i64 p, const BigInt& n, int absolute_precision);
    static PadicNumber from_rational(i64 p, const BigRational& q, int absolute_precision);
    /// An integral ring element known modulo p^absolute_precision.
    static PadicNumber from_elem(std::shared_ptr<const UnramifiedRing> ring, const Elem& x,
                                 int absolute_precision);

    i64 prime() const { return ring_->prime(); }
    const std::shared_ptr<const UnramifiedRing>& ring() const { return ring_; }
    int valuation() const { return valuation_; }
    int precision() const { return precision_; }
    int absolute_precision() const { return valuation_ + precision_; }
    bool is_zero() const { return precision_ == 0; }
    const Elem& unit() const { return unit_; }

    /// The value modulo p^absolute_precision as a ring element; requires
    /// valuation >= 0.
    Elem value() const;
    /// For Z_p elements: value as an integer in [0, p^absolute_precision).
    BigInt residue() const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    PadicNumber inverse() const;
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) { return a * b.inverse(); }
    PadicNumber pow(i64 e) const;

    /// a == b modulo p^k (both known at least that far; throws otherwise).
    friend bool congruent(const PadicNumber& a, const PadicNumber& b, int k);

    std::string to_string() const;

private:
    std::shared_ptr<const UnramifiedRing> ring_;
    int valuation_;
    int precision_;
    Elem unit_;
};

/// The embedding Q(zeta_m) -> K_P for a prime P above p with p not dividing m:
/// zeta_m maps to the unique m-th root of unity congruent to t modulo
/// (p, unramified_part).
class LocalEmbedding {
public:
    LocalEmbedding(const PrimeAbove& prime, int precision);

    const PrimeAbove& prime() const { return prime_; }
    const std::shared_ptr<const UnramifiedRing>& ring() const { return ring_; }
    int precision() const { return precision_; }
    /// Image of zeta_m modulo p^precision.
    const UnramifiedRing::Elem& root() const { return root_; }

    /// x must have order dividing m.
    PadicNumber operator()(const CyclotomicElement& x) const;

private:
    PrimeAbove prime_;
    int precision_;
    std::shared_ptr<const UnramifiedRing> ring_;
    UnramifiedRing::Elem root_;
};

struct PrecisionPolicy {
    int initial = kDefaultPrecision;
    int cap = kPrecisionCap;
};

/// v_P(x) normalized by v_P(uniformizer) = 1, so v_P(p) = e. x must have order
/// dividing P.m and be nonzero.
int valuation_at(const CyclotomicElement& x, const PrimeAbove& prime,
                 PrecisionPolicy policy = {});

/// Valuation of a conjugation-invariant x in the completion of Q(zeta_{p^n})^+
/// (uniformizer has valuation 1). n = 0 infers n from the order of x.
int valuation_real(const CyclotomicElement& x, i64 p, int n = 0);

/// The (p-1)-st root of unity congruent to a mod p, modulo p^precision.
PadicNumber teichmuller(i64 a, i64 p, int precision);

/// log(x) for x a 1-unit of Z_p, computed by the alternating series.
PadicNumber padic_log(const PadicNumber& x);

/// a_ell in Z_p with ell = teichmuller(ell) * (1+p)^{a_ell}, modulo p^precision.
PadicNumber padic_exponent_a_ell(i64 ell, i64 p, int precision);

/// (1+p)^a for a in Z_p known modulo p^precision; result modulo p^(precision+1).
PadicNumber one_plus_p_power(i64 p, const PadicNumber& a);

}  // namespace eiscong

#endif
