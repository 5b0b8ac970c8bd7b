#include "eiscong/padic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace eiscong {

namespace {

BigInt big(i64 v) {
    return BigInt(static_cast<long>(v));
}

BigInt mod_big(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt rational_residue(const BigRational& q, const BigInt& pk) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), pk.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible modulo p^k");
    return mod_big(q.get_num() * inv, pk);
}

std::mutex g_primes_mutex;
std::map<std::pair<i64, i64>, std::vector<PrimeAbove>> g_primes_cache;

}  // namespace

// ---------------------------------------------------------------- PrimeAbove

std::string PrimeAbove::label() const {
    std::ostringstream os;
    os << p << ":";
    bool first = true;
    for (std::size_t i = unramified_part.size(); i-- > 0;) {
        i64 c = unramified_part[i];
        if (c == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1)
            os << c;
        os << "t";
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

std::vector<PrimeAbove> primes_above(i64 p, i64 m) {
    if (!is_prime(p))
        throw std::invalid_argument("primes_above: p is not prime");
    if (m < 1)
        throw std::invalid_argument("primes_above: order must be positive");
    {
        std::lock_guard lock(g_primes_mutex);
        auto it = g_primes_cache.find({p, m});
        if (it != g_primes_cache.end())
            return it->second;
    }
    int r = 0;
    i64 d = m;
    while (d % p == 0) {
        d /= p;
        ++r;
    }
    int f = static_cast<int>(d == 1 ? 1 : multiplicative_order(p % d, d));
    fp::Poly phi_d = fp::from_integers(cyclotomic_polynomial(d), p);
    std::vector<PrimeAbove> out;
    int index = 0;
    for (auto& g : fp::equal_degree_factorization(phi_d, f, p)) {
        PrimeAbove P;
        P.p = p;
        P.m = m;
        P.d = d;
        P.r = r;
        P.unramified_part = std::move(g);
        P.residue_degree = f;
        P.ramification_index = r == 0 ? 1 : euler_phi(ipow(p, r));
        P.index = index++;
        out.push_back(std::move(P));
    }
    std::lock_guard lock(g_primes_mutex);
    g_primes_cache.emplace(std::make_pair(p, m), out);
    return out;
}

PrimeAbove canonical_prime_above(i64 p, i64 m) {
    return primes_above(p, m).front();
}

PrimeAbove prime_lying_over(const PrimeAbove& base, i64 m) {
    if (m % base.m != 0)
        throw std::invalid_argument("prime_lying_over: base order must divide m");
    for (const auto& cand : primes_above(base.p, m)) {
        const auto& g = cand.unramified_part;
        fp::Poly t_power = fp::powmod(fp::Poly{0, 1}, big(cand.d / base.d), g, base.p);
        if (fp::compose_mod(base.unramified_part, t_power, g, base.p).empty())
            return cand;
    }
    throw std::logic_error("no prime lying over the base prime");
}

// ------------------------------------------------------------ UnramifiedRing

UnramifiedRing::UnramifiedRing(i64 p, fp::Poly modulus) : p_(p), modulus_(std::move(modulus)) {
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw std::invalid_argument("unramified ring modulus must be monic of degree >= 1");
}

std::shared_ptr<const UnramifiedRing> UnramifiedRing::integers(i64 p) {
    return std::make_shared<const UnramifiedRing>(p, fp::Poly{0, 1});
}

BigInt UnramifiedRing::prime_power(int k) const {
    return eiscong::pow(big(p_), static_cast<unsigned long>(k < 0 ? 0 : k));
}

UnramifiedRing::Elem UnramifiedRing::reduce(Elem a, const BigInt& pk) const {
    auto f = static_cast<std::size_t>(degree());
    for (std::size_t i = a.size(); i-- > f;) {
        if (a[i] == 0)
            continue;
        BigInt lead = a[i];
        std::size_t shift = i - f;
        for (std::size_t j = 0; j <= f; ++j) {
            if (modulus_[j] != 0)
                a[shift + j] -= lead * big(modulus_[j]);
        }
    }
    a.resize(f);
    for (auto& c : a)
        c = mod_big(c, pk);
    return a;
}

UnramifiedRing::Elem UnramifiedRing::from_integer(const BigInt& n, const BigInt& pk) const {
    Elem e = zero();
    e[0] = mod_big(n, pk);
    return e;
}

UnramifiedRing::Elem UnramifiedRing::generator(const BigInt& pk) const {
    return reduce(Elem{BigInt(0), BigInt(1)}, pk);
}

UnramifiedRing::Elem UnramifiedRing::add(const Elem& a, const Elem& b, const BigInt& pk) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = mod_big(a[i] + b[i], pk);
    return out;
}

UnramifiedRing::Elem UnramifiedRing::sub(const Elem& a, const Elem& b, const BigInt& pk) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = mod_big(a[i] - b[i], pk);
    return out;
}

UnramifiedRing::Elem UnramifiedRing::mul(const Elem& a, const Elem& b, const BigInt& pk) const {
    if (a.size() == 1)
        return Elem{mod_big(a[0] * b[0], pk)};
    Elem prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] += a[i] * b[j];
    }
    return reduce(std::move(prod), pk);
}

UnramifiedRing::Elem UnramifiedRing::scale(const Elem& a, const BigInt& c, const BigInt& pk) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = mod_big(a[i] * c, pk);
    return out;
}

UnramifiedRing::Elem UnramifiedRing::pow(const Elem& a, const BigInt& e, const BigInt& pk) const {
    if (e < 0)
        throw std::invalid_argument("negative exponent");
    Elem result = from_integer(BigInt(1), pk);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul(result, result, pk);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mul(result, a, pk);
    }
    return result;
}

UnramifiedRing::Elem UnramifiedRing::inverse(const Elem& a, int k) const {
    BigInt pk = prime_power(k);
    fp::Poly residue = fp::from_integers(a, p_);
    if (residue.empty())
        throw std::domain_error("inverse of a non-unit");
    fp::Poly inv0 = fp::invmod(residue, modulus_, p_);
    Elem x = zero();
    for (std::size_t i = 0; i < inv0.size(); ++i)
        x[i] = big(inv0[i]);
    int have = 1;
    Elem two = from_integer(BigInt(2), pk);
    while (have < k) {
        have *= 2;
        x = mul(x, sub(two, mul(a, x, pk), pk), pk);
    }
    return reduce(std::move(x), pk);
}

int UnramifiedRing::valuation(const Elem& a, int k) const {
    int v = k;
    for (const auto& c : a) {
        if (c == 0)
            continue;
        v = std::min(v, padic_valuation(c, p_));
    }
    return v;
}

UnramifiedRing::Elem UnramifiedRing::divide_by_p_power(const Elem& a, int s, const BigInt& pk) const {
    BigInt ps = prime_power(s);
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a[i].get_mpz_t(), ps.get_mpz_t());
        out[i] = mod_big(q, pk);
    }
    return out;
}

// --------------------------------------------------------------- PadicNumber

PadicNumber::PadicNumber(std::shared_ptr<const UnramifiedRing> ring, int valuation, int precision,
                         Elem unit)
    : ring_(std::move(ring)), valuation_(valuation), precision_(precision) {
    if (precision_ <= 0) {
        precision_ = 0;
        unit_ = ring_->zero();
        return;
    }
    BigInt pk = ring_->prime_power(precision_);
    unit = ring_->reduce(std::move(unit), pk);
    int w = ring_->valuation(unit, precision_);
    if (w >= precision_) {
        valuation_ += precision_;
        precision_ = 0;
        unit_ = ring_->zero();
        return;
    }
    valuation_ += w;
    precision_ -= w;
    unit_ = ring_->divide_by_p_power(unit, w, ring_->prime_power(precision_));
}

PadicNumber PadicNumber::from_integer(i64 p, const BigInt& n, int absolute_precision) {
    auto ring = UnramifiedRing::integers(p);
    return PadicNumber(ring, 0, absolute_precision, Elem{n});
}

PadicNumber PadicNumber::from_rational(i64 p, const BigRational& q, int absolute_precision) {
    auto ring = UnramifiedRing::integers(p);
    if (q == 0)
        return PadicNumber(ring, absolute_precision, 0, ring->zero());
    int v = padic_valuation(q, p);
    int rel = absolute_precision - v;
    if (rel <= 0)
        return PadicNumber(ring, absolute_precision, 0, ring->zero());
    BigInt pv = eiscong::pow(big(p), static_cast<unsigned long>(v < 0 ? -v : v));
    BigRational unit = v >= 0 ? BigRational(q / pv) : BigRational(q * pv);
    return PadicNumber(ring, v, rel, Elem{rational_residue(unit, ring->prime_power(rel))});
}

PadicNumber PadicNumber::from_elem(std::shared_ptr<const UnramifiedRing> ring, const Elem& x,
                                   int absolute_precision) {
    return PadicNumber(std::move(ring), 0, absolute_precision, x);
}

PadicNumber::Elem PadicNumber::value() const {
    if (valuation_ < 0)
        throw std::domain_error("value() of a non-integral p-adic number");
    BigInt pk = ring_->prime_power(absolute_precision());
    return ring_->scale(unit_, ring_->prime_power(valuation_), pk);
}

BigInt PadicNumber::residue() const {
    if (ring_->degree() != 1)
        throw std::domain_error("residue() requires a Z_p element");
    return value()[0];
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero())
        return *this;
    BigInt pk = ring_->prime_power(precision_);
    return PadicNumber(ring_, valuation_, precision_, ring_->sub(ring_->zero(), unit_, pk));
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    int abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
    int v = std::min(a.valuation_, b.valuation_);
    if (v >= abs_prec)
        return PadicNumber(a.ring_, abs_prec, 0, a.ring_->zero());
    int rel = abs_prec - v;
    const auto& ring = *a.ring_;
    BigInt pk = ring.prime_power(rel);
    auto shifted = [&](const PadicNumber& x) {
        if (x.is_zero())
            return ring.zero();
        return ring.scale(x.unit_, ring.prime_power(x.valuation_ - v), pk);
    };
    return PadicNumber(a.ring_, v, rel, ring.add(shifted(a), shifted(b), pk));
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    if (a.is_zero() || b.is_zero()) {
        int abs_prec = std::min(a.absolute_precision() + b.valuation_,
                                b.absolute_precision() + a.valuation_);
        return PadicNumber(a.ring_, abs_prec, 0, a.ring_->zero());
    }
    int rel = std::min(a.precision_, b.precision_);
    BigInt pk = a.ring_->prime_power(rel);
    return PadicNumber(a.ring_, a.valuation_ + b.valuation_, rel, a.ring_->mul(a.unit_, b.unit_, pk));
}

PadicNumber PadicNumber::inverse() const {
    if (is_zero())
        throw std::domain_error("inverse of p-adic zero");
    return PadicNumber(ring_, -valuation_, precision_, ring_->inverse(unit_, precision_));
}

PadicNumber PadicNumber::pow(i64 e) const {
    if (e < 0)
        return inverse().pow(-e);
    auto one = ring_->zero();
    one[0] = 1;
    PadicNumber result(ring_, 0, std::max(precision_, 1), one);
    PadicNumber base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

bool congruent(const PadicNumber& a, const PadicNumber& b, int k) {
    PadicNumber diff = a - b;
    if (diff.is_zero()) {
        if (diff.absolute_precision() < k)
            throw std::invalid_argument("congruent: operands not known to the requested precision");
        return true;
    }
    return diff.valuation() >= k;
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "O(" << prime() << "^" << valuation_ << ")";
        return os.str();
    }
    os << prime() << "^" << valuation_ << " * (";
    for (std::size_t i = 0; i < unit_.size(); ++i) {
        if (i > 0)
            os << ", ";
        os << unit_[i].get_str();
    }
    os << ") + O(" << prime() << "^" << absolute_precision() << ")";
    return os.str();
}

// ------------------------------------------------------------ LocalEmbedding

LocalEmbedding::LocalEmbedding(const PrimeAbove& prime, int precision)
    : prime_(prime), precision_(precision) {
    if (prime.r != 0)
        throw std::invalid_argument("LocalEmbedding requires p not dividing the order");
    ring_ = std::make_shared<const UnramifiedRing>(prime.p, prime.unramified_part);
    BigInt pk = ring_->prime_power(precision);
    const i64 d = prime.d;
    BigInt d_inv;
    BigInt dd = big(d);
    mpz_invert(d_inv.get_mpz_t(), dd.get_mpz_t(), pk.get_mpz_t());
    // Newton iteration on x^d = 1 from the residue class of t.
    root_ = ring_->generator(pk);
    auto one = ring_->from_integer(BigInt(1), pk);
    auto two = ring_->from_integer(BigInt(2), pk);
    for (int iter = 0; iter < 64; ++iter) {
        auto xd = ring_->pow(root_, dd, pk);
        auto eps = ring_->sub(xd, one, pk);
        if (ring_->valuation(eps, precision) >= precision)
            return;
        auto step = ring_->mul(ring_->mul(root_, eps, pk), ring_->sub(two, xd, pk), pk);
        root_ = ring_->sub(root_, ring_->scale(step, d_inv, pk), pk);
    }
    throw std::logic_error("Newton lifting of the root of unity did not converge");
}

PadicNumber LocalEmbedding::operator()(const CyclotomicElement& x_in) const {
    if (prime_.m % x_in.order() != 0)
        throw std::invalid_argument("element order does not divide the prime's field order");
    CyclotomicElement x = x_in.embed(prime_.m);
    const i64 p = prime_.p;
    if (x.is_zero())
        return PadicNumber(ring_, precision_, 0, ring_->zero());
    int content = std::numeric_limits<int>::max();
    for (const auto& c : x.coeffs()) {
        if (c != 0)
            content = std::min(content, padic_valuation(c, p));
    }
    BigInt pk = ring_->prime_power(precision_);
    BigInt shift = pow(big(p), static_cast<unsigned long>(std::abs(content)));
    auto acc = ring_->zero();
    for (std::size_t i = x.degree(); i-- > 0;) {
        acc = ring_->mul(acc, root_, pk);
        BigRational c = content >= 0 ? BigRational(x[i] / shift) : BigRational(x[i] * shift);
        acc[0] = mod_big(acc[0] + rational_residue(c, pk), pk);
    }
    return PadicNumber(ring_, content, precision_, acc);
}

// ---------------------------------------------------------------- valuations

namespace {

using Elem = UnramifiedRing::Elem;
using RingPoly = std::vector<Elem>;

void reduce_ring_poly(RingPoly& a, const std::vector<BigInt>& phi, const UnramifiedRing& R,
                      const BigInt& pk) {
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = a.size(); i-- > deg;) {
        std::size_t shift = i - deg;
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi[j] != 0)
                a[shift + j] = R.sub(a[shift + j], R.scale(a[i], phi[j], pk), pk);
        }
    }
    a.resize(deg, R.zero());
}

RingPoly mul_ring_poly(const RingPoly& a, const RingPoly& b, const std::vector<BigInt>& phi,
                       const UnramifiedRing& R, const BigInt& pk) {
    RingPoly prod(a.size() + b.size() - 1, R.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = R.add(prod[i + j], R.mul(a[i], b[j], pk), pk);
    }
    reduce_ring_poly(prod, phi, R, pk);
    return prod;
}

// v_P of a nonzero x with p-integral coefficients, or `precision` if the
// computation cannot see past it.
int integral_valuation(const CyclotomicElement& x, const PrimeAbove& P, int precision) {
    PrimeAbove base = P;
    base.m = P.d;
    base.r = 0;
    base.ramification_index = 1;
    LocalEmbedding emb(base, precision);
    const auto& R = *emb.ring();
    BigInt pk = R.prime_power(precision);
    const i64 q = P.m / P.d;
    // Powers of the image of zeta_d.
    std::vector<Elem> alpha_pow(static_cast<std::size_t>(P.d));
    alpha_pow[0] = R.from_integer(BigInt(1), pk);
    for (std::size_t i = 1; i < alpha_pow.size(); ++i)
        alpha_pow[i] = R.mul(alpha_pow[i - 1], emb.root(), pk);
    i64 s = 0, t = 0;
    xgcd(P.d, q, s, t);  // s*d + t*q = 1
    // zeta_m^j -> alpha^(t j mod d) * y^(s j mod q) with y a root of Phi_q.
    RingPoly X(static_cast<std::size_t>(q), R.zero());
    for (std::size_t j = 0; j < x.degree(); ++j) {
        if (x[j] == 0)
            continue;
        auto ji = static_cast<i64>(j);
        BigInt c = rational_residue(x[j], pk);
        auto& slot = X[static_cast<std::size_t>(mod(s * ji, q))];
        slot = R.add(slot, R.scale(alpha_pow[static_cast<std::size_t>(mod(t * ji, P.d))], c, pk), pk);
    }
    if (q == 1)
        return R.valuation(X[0], precision);
    const auto& phi_q = cyclotomic_polynomial(q);
    reduce_ring_poly(X, phi_q, R, pk);
    // Norm down to the unramified field: product of all y -> y^a conjugates.
    RingPoly normv{R.from_integer(BigInt(1), pk)};
    for (i64 a = 1; a < q; ++a) {
        if (gcd(a, q) != 1)
            continue;
        RingPoly conj(static_cast<std::size_t>(q), R.zero());
        for (std::size_t i = 0; i < X.size(); ++i) {
            auto& slot = conj[static_cast<std::size_t>(mod(a * static_cast<i64>(i), q))];
            slot = R.add(slot, X[i], pk);
        }
        reduce_ring_poly(conj, phi_q, R, pk);
        normv = mul_ring_poly(normv, conj, phi_q, R, pk);
    }
    for (std::size_t i = 1; i < normv.size(); ++i) {
        if (R.valuation(normv[i], precision) < precision)
            throw std::logic_error("relative norm is not a scalar");
    }
    return R.valuation(normv[0], precision);
}

}  // namespace

int valuation_at(const CyclotomicElement& x_in, const PrimeAbove& P, PrecisionPolicy policy) {
    if (P.m % x_in.order() != 0)
        throw std::invalid_argument("valuation_at: element order does not divide the prime's field order");
    CyclotomicElement x = x_in.embed(P.m);
    if (x.is_zero())
        throw std::domain_error("valuation_at: valuation of zero is undefined");
    if (P.d == 1)
        return padic_valuation(norm(x), P.p);
    int content = std::numeric_limits<int>::max();
    for (const auto& c : x.coeffs()) {
        if (c != 0)
            content = std::min(content, padic_valuation(c, P.p));
    }
    BigInt shift = pow(big(P.p), static_cast<unsigned long>(std::abs(content)));
    std::vector<BigRational> scaled(x.coeffs());
    for (auto& c : scaled)
        c = content >= 0 ? BigRational(c / shift) : BigRational(c * shift);
    CyclotomicElement unit_part(P.m, std::move(scaled));
    int precision = std::max(policy.initial, 1);
    int last = precision;
    while (precision <= policy.cap) {
        last = precision;
        int v = integral_valuation(unit_part, P, precision);
        if (v < precision)
            return static_cast<int>(content * P.ramification_index) + v;
        precision *= 2;
    }
    throw PrecisionExhausted(last);
}

int valuation_real(const CyclotomicElement& x_in, i64 p, int n) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("valuation_real: p must be an odd prime");
    CyclotomicElement x = x_in;
    if (x.order() == 2)
        x = CyclotomicElement::rational(1, x[0]);
    if (n == 0) {
        i64 o = x.order();
        n = 1;
        if (o > 1) {
            n = 0;
            while (o % p == 0) {
                o /= p;
                ++n;
            }
            if (o != 1)
                throw std::invalid_argument("valuation_real: element not in a p-power cyclotomic field");
        }
    }
    i64 m = ipow(p, n);
    if (m % x.order() != 0)
        throw std::invalid_argument("valuation_real: element not in Q(zeta_{p^n})");
    CyclotomicElement X = x.embed(m);
    if (!(X == X.conjugate()))
        throw std::invalid_argument("valuation_real: element is not fixed by complex conjugation");
    int v = valuation_at(X, canonical_prime_above(p, m));
    if (v % 2 != 0)
        throw std::logic_error("valuation_real: odd valuation for a real element");
    return v / 2;
}

// ---------------------------------------------------------- Teichmuller, log

PadicNumber teichmuller(i64 a, i64 p, int precision) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("teichmuller: p must be an odd prime");
    if (mod(a, p) == 0)
        throw std::domain_error("teichmuller: p divides a");
    BigInt pk = pow(big(p), static_cast<unsigned long>(precision));
    BigInt x = mod_big(big(a), pk);
    BigInt pp = big(p);
    for (int iter = 0; iter <= precision + 1; ++iter) {
        BigInt y;
        mpz_powm(y.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t(), pk.get_mpz_t());
        if (y == x)
            break;
        x = y;
    }
    return PadicNumber::from_integer(p, x, precision);
}

PadicNumber padic_log(const PadicNumber& x) {
    if (x.ring()->degree() != 1)
        throw std::invalid_argument("padic_log: only Z_p is supported");
    const i64 p = x.prime();
    if (x.valuation() != 0)
        throw std::domain_error("padic_log: argument is not a unit");
    int A = x.absolute_precision();
    BigInt pk = pow(big(p), static_cast<unsigned long>(A));
    BigInt z = mod_big(x.residue() - 1, pk);
    BigInt pp = big(p);
    if (mod_big(z, pp) != 0)
        throw std::domain_error("padic_log: argument is not a 1-unit");
    BigInt y;
    mpz_divexact(y.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
    BigInt sum(0);
    BigInt ypow(1);
    for (i64 n = 1;; ++n) {
        ypow = mod_big(ypow * y, pk);
        int s = valuation(n, p);
        i64 shift = n - s;
        if (shift >= A) {
            // n - v_p(n) is nondecreasing past this point once n > A + log_p(n).
            if (n > A + 64)
                break;
            continue;
        }
        BigInt n_unit = big(n / ipow(p, s));
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), n_unit.get_mpz_t(), pk.get_mpz_t());
        BigInt term = mod_big(pow(pp, static_cast<unsigned long>(shift)) * ypow * inv, pk);
        if (n % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return PadicNumber::from_integer(p, mod_big(sum, pk), A);
}

PadicNumber padic_exponent_a_ell(i64 ell, i64 p, int precision) {
    if (mod(ell, p) == 0)
        throw std::domain_error("padic_exponent_a_ell: ell must be prime to p");
    int K = precision + 1;
    PadicNumber w = PadicNumber::from_integer(p, big(ell), K) / teichmuller(ell, p, K);
    PadicNumber log_w = padic_log(w);
    PadicNumber log_u = padic_log(PadicNumber::from_integer(p, big(1 + p), K));
    PadicNumber a = log_w / log_u;
    if (a.absolute_precision() < precision)
        throw PrecisionExhausted(precision);
    if (a.is_zero())
        return PadicNumber::from_integer(p, BigInt(0), precision);
    return PadicNumber(a.ring(), a.valuation(), precision - a.valuation(), a.unit());
}

PadicNumber one_plus_p_power(i64 p, const PadicNumber& a) {
    if (a.valuation() < 0)
        throw std::domain_error("one_plus_p_power: exponent not in Z_p");
    int A = a.absolute_precision();
    BigInt pk1 = pow(big(p), static_cast<unsigned long>(A + 1));
    BigInt base = big(1 + p);
    BigInt n = a.residue();
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), n.get_mpz_t(), pk1.get_mpz_t());
    return PadicNumber::from_integer(p, r, A + 1);
}

}  // namespace eiscong
