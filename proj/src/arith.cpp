#include "eiscong/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace eiscong {

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0)
        return 0;
    return std::abs(a / gcd(a, b) * b);
}

i64 mulmod(i64 a, i64 b, i64 m) {
    __int128 r = static_cast<__int128>(mod(a, m)) * mod(b, m);
    return static_cast<i64>(r % m);
}

i64 powmod(i64 base, i64 exp, i64 m) {
    if (m == 1)
        return 0;
    i64 result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

i64 xgcd(i64 a, i64 b, i64& x, i64& y) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

i64 invmod(i64 a, i64 m) {
    i64 x, y;
    if (xgcd(mod(a, m), m, x, y) != 1)
        throw std::domain_error("invmod: argument not invertible");
    return mod(x, m);
}

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

bool is_prime(i64 n) {
    if (n < 2)
        return false;
    for (i64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0)
            return n == small;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<PrimePower> factorize(i64 n) {
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
            pp.value *= p;
        }
        out.push_back(pp);
    }
    if (n > 1)
        out.push_back({n, 1, n});
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (const auto& pp : factorize(n)) {
        std::size_t base = out.size();
        i64 pk = 1;
        for (int e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (const auto& pp : factorize(n))
        r = r / pp.prime * (pp.prime - 1);
    return r;
}

int moebius(i64 n) {
    int r = 1;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1)
            return 0;
        r = -r;
    }
    return r;
}

int valuation(i64 n, i64 p) {
    if (n == 0)
        throw std::domain_error("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool is_squarefree(i64 n) {
    return moebius(std::abs(n)) != 0;
}

i64 multiplicative_order(i64 a, i64 m) {
    if (gcd(a, m) != 1)
        throw std::domain_error("multiplicative_order: not a unit");
    if (m == 1)
        return 1;
    i64 order = euler_phi(m);
    for (const auto& pp : factorize(order)) {
        for (int e = 0; e < pp.exponent; ++e) {
            if (powmod(a, order / pp.prime, m) == 1)
                order /= pp.prime;
            else
                break;
        }
    }
    return order;
}

i64 least_primitive_root_p2(i64 p) {
    i64 m = p * p;
    i64 phi = p * (p - 1);
    for (i64 g = 2; g < m; ++g) {
        if (g % p == 0)
            continue;
        if (multiplicative_order(g, m) == phi)
            return g;
    }
    throw std::logic_error("no primitive root found");
}

int kronecker(i64 a, i64 n) {
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            result = -result;
    }
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    if (v > 0) {
        if ((a & 1) == 0)
            return 0;
        i64 r8 = mod(a, 8);
        if ((v & 1) && (r8 == 3 || r8 == 5))
            result = -result;
    }
    // Jacobi symbol (a/n) for odd n > 0.
    a = mod(a, n);
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 r8 = n % 8;
            if (r8 == 3 || r8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

i64 sqrt_mod_prime(i64 a, i64 p) {
    a = mod(a, p);
    if (a == 0 || p == 2)
        return a;
    if (powmod(a, (p - 1) / 2, p) != 1)
        throw std::domain_error("sqrt_mod_prime: not a quadratic residue");
    // Tonelli-Shanks.
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    i64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    i64 c = powmod(z, q, p);
    i64 r = powmod(a, (q + 1) / 2, p);
    i64 t = powmod(a, q, p);
    int m = s;
    while (t != 1) {
        int i = 1;
        i64 t2 = mulmod(t, t, p);
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        i64 b = c;
        for (int j = 0; j < m - i - 1; ++j)
            b = mulmod(b, b, p);
        r = mulmod(r, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    return r;
}

std::vector<i64> primes_up_to(i64 bound) {
    std::vector<i64> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
    for (i64 i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        out.push_back(i);
        for (i64 j = i * i; j <= bound; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<i64> first_primes_excluding(int count, i64 skip) {
    std::vector<i64> out;
    for (i64 n = 2; static_cast<int>(out.size()) < count; ++n) {
        if (n != skip && is_prime(n))
            out.push_back(n);
    }
    return out;
}

bool is_fundamental_discriminant(i64 d) {
    if (d == 0 || d == 1)
        return false;
    i64 r = mod(d, 4);
    if (r == 1)
        return is_squarefree(d);
    if (r != 0)
        return false;
    i64 m = d / 4;
    i64 r4 = mod(m, 4);
    return (r4 == 2 || r4 == 3) && is_squarefree(m);
}

}  // namespace eiscong
