#include "eiscong/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace eiscong {

namespace {

std::vector<BigInt> compute_cyclotomic(i64 m) {
    // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}: multiply first, then divide.
    std::vector<BigInt> poly{BigInt(1)};
    std::vector<i64> numer, denom;
    for (i64 d : divisors(m)) {
        int mu = moebius(m / d);
        if (mu == 1)
            numer.push_back(d);
        else if (mu == -1)
            denom.push_back(d);
    }
    for (i64 d : numer) {
        std::size_t n = poly.size();
        std::vector<BigInt> next(n + static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < n; ++i) {
            next[i + static_cast<std::size_t>(d)] += poly[i];
            next[i] -= poly[i];
        }
        poly = std::move(next);
    }
    for (i64 d : denom) {
        // poly = q * (x^d - 1)  =>  q[i] = q[i-d] - poly[i].
        auto du = static_cast<std::size_t>(d);
        std::size_t qn = poly.size() - du;
        std::vector<BigInt> q(qn);
        for (std::size_t i = 0; i < qn; ++i)
            q[i] = (i >= du ? q[i - du] : BigInt(0)) - poly[i];
        poly = std::move(q);
    }
    return poly;
}

std::mutex g_cyclo_mutex;
std::map<i64, std::unique_ptr<const std::vector<BigInt>>> g_cyclo_cache;

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::vector<BigRational> to_rationals(std::vector<BigInt>& ints, const BigInt& den) {
    std::vector<BigRational> out(ints.size());
    for (std::size_t i = 0; i < ints.size(); ++i)
        out[i] = make_rational(ints[i], den);
    return out;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(i64 m) {
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    {
        std::lock_guard lock(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(m);
        if (it != g_cyclo_cache.end())
            return *it->second;
    }
    auto computed = std::make_unique<const std::vector<BigInt>>(compute_cyclotomic(m));
    std::lock_guard lock(g_cyclo_mutex);
    auto [it, inserted] = g_cyclo_cache.emplace(m, std::move(computed));
    return *it->second;
}

void reduce_mod_cyclotomic(std::vector<BigInt>& poly, i64 m) {
    const auto& phi = cyclotomic_polynomial(m);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0)
            continue;
        BigInt lead = poly[i];
        std::size_t shift = i - deg;
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi[j] != 0)
                poly[shift + j] -= lead * phi[j];
        }
    }
    poly.resize(deg);
}

CyclotomicElement::CyclotomicElement() : CyclotomicElement(1) {}

CyclotomicElement::CyclotomicElement(i64 order) : order_(order) {
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(cyclotomic_polynomial(order).size() - 1, BigRational(0));
}

CyclotomicElement::CyclotomicElement(i64 order, std::vector<BigRational> coeffs) : order_(order) {
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    std::size_t deg = cyclotomic_polynomial(order).size() - 1;
    if (coeffs.size() <= deg) {
        coeffs.resize(deg, BigRational(0));
        coeffs_ = std::move(coeffs);
        return;
    }
    BigInt den(1);
    for (const auto& c : coeffs)
        den = lcm_big(den, c.get_den());
    std::vector<BigInt> ints(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        ints[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    reduce_mod_cyclotomic(ints, order);
    coeffs_ = to_rationals(ints, den);
}

CyclotomicElement CyclotomicElement::rational(i64 order, const BigRational& c) {
    CyclotomicElement x(order);
    x.coeffs_[0] = c;
    return x;
}

CyclotomicElement CyclotomicElement::root_of_unity(i64 order, i64 exponent) {
    std::vector<BigInt> poly(static_cast<std::size_t>(order));
    poly[static_cast<std::size_t>(mod(exponent, order))] = 1;
    return from_exponent_sums(order, poly);
}

CyclotomicElement CyclotomicElement::from_exponent_sums(i64 order, std::span<const BigInt> sums) {
    if (static_cast<i64>(sums.size()) > order)
        throw std::invalid_argument("more exponent classes than the order");
    std::vector<BigInt> poly(sums.begin(), sums.end());
    std::size_t deg = cyclotomic_polynomial(order).size() - 1;
    if (poly.size() < deg)
        poly.resize(deg);
    reduce_mod_cyclotomic(poly, order);
    CyclotomicElement x(order);
    for (std::size_t i = 0; i < deg; ++i)
        x.coeffs_[i] = BigRational(poly[i]);
    return x;
}

CyclotomicElement CyclotomicElement::from_exponent_sums(i64 order, std::span<const BigRational> sums) {
    if (static_cast<i64>(sums.size()) > order)
        throw std::invalid_argument("more exponent classes than the order");
    BigInt den(1);
    for (const auto& c : sums)
        den = lcm_big(den, c.get_den());
    std::vector<BigInt> ints(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i)
        ints[i] = sums[i].get_num() * (den / sums[i].get_den());
    std::size_t deg = cyclotomic_polynomial(order).size() - 1;
    if (ints.size() < deg)
        ints.resize(deg);
    reduce_mod_cyclotomic(ints, order);
    CyclotomicElement x(order);
    x.coeffs_ = to_rationals(ints, den);
    return x;
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0)
            return false;
    }
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0)
            return false;
    }
    return true;
}

bool CyclotomicElement::is_one() const {
    return is_rational() && coeffs_[0] == 1;
}

BigInt CyclotomicElement::integral_form(std::vector<BigInt>& numerators) const {
    BigInt den(1);
    for (const auto& c : coeffs_)
        den = lcm_big(den, c.get_den());
    numerators.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        numerators[i] = coeffs_[i].get_num() * (den / coeffs_[i].get_den());
    return den;
}

CyclotomicElement CyclotomicElement::embed(i64 target) const {
    if (target == order_)
        return *this;
    if (target % order_ != 0)
        throw std::invalid_argument("embed: order does not divide target");
    i64 step = target / order_;
    std::vector<BigRational> sums(static_cast<std::size_t>(target));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sums[i * static_cast<std::size_t>(step)] = coeffs_[i];
    return from_exponent_sums(target, sums);
}

CyclotomicElement CyclotomicElement::galois(i64 a) const {
    if (gcd(a, order_) != 1)
        throw std::invalid_argument("galois: exponent not a unit mod the order");
    std::vector<BigRational> sums(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        sums[static_cast<std::size_t>(mod(a * static_cast<i64>(i), order_))] += coeffs_[i];
    return from_exponent_sums(order_, sums);
}

CyclotomicElement CyclotomicElement::pow(unsigned long e) const {
    CyclotomicElement result = rational(order_, BigRational(1));
    CyclotomicElement base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    if (o.order_ != order_) {
        i64 common = lcm(order_, o.order_);
        *this = embed(common);
        return *this += o.embed(common);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
    return *this += -o;
}

CyclotomicElement& CyclotomicElement::operator*=(const BigRational& c) {
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
    if (o.order_ != order_) {
        i64 common = lcm(order_, o.order_);
        *this = embed(common);
        return *this *= o.embed(common);
    }
    if (o.is_rational())
        return *this *= o.coeffs_[0];
    if (is_rational()) {
        BigRational c = coeffs_[0];
        *this = o;
        return *this *= c;
    }
    std::vector<BigInt> a, b;
    BigInt da = integral_form(a);
    BigInt db = o.integral_form(b);
    std::vector<BigInt> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0)
                prod[i + j] += a[i] * b[j];
        }
    }
    reduce_mod_cyclotomic(prod, order_);
    coeffs_ = to_rationals(prod, BigInt(da * db));
    return *this;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    i64 common = lcm(a.order_, b.order_);
    return a.embed(common).coeffs_ == b.embed(common).coeffs_;
}

std::string CyclotomicElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto& c = coeffs_[i];
        if (c == 0)
            continue;
        BigRational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "z";
        if (i > 1)
            os << "^" << i;
    }
    if (first)
        os << "0";
    return os.str();
}

BigRational norm(const CyclotomicElement& x) {
    std::vector<BigInt> v;
    BigInt den = x.integral_form(v);
    std::size_t n = v.size();
    if (x.is_rational())
        return BigRational(pow(x[0].get_num(), n), pow(x[0].get_den(), n));
    const auto& phi = cyclotomic_polynomial(x.order());
    // Column j of the multiplication matrix is X * z^j reduced mod Phi_m.
    std::vector<std::vector<BigInt>> mat(n, std::vector<BigInt>(n));
    std::vector<BigInt> col = v;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            mat[i][j] = col[i];
        BigInt top = col[n - 1];
        for (std::size_t i = n - 1; i > 0; --i)
            col[i] = col[i - 1];
        col[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < n; ++i)
                col[i] -= top * phi[i];
        }
    }
    // Bareiss fraction-free elimination.
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (mat[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && mat[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return BigRational(0);
            std::swap(mat[k], mat[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                mat[i][j] = std::move(t);
            }
        }
        prev = mat[k][k];
    }
    BigInt det = mat[n - 1][n - 1] * sign;
    return make_rational(det, pow(den, n));
}

}  // namespace eiscong
