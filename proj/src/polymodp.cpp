#include "eiscong/polymodp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace eiscong::fp {

using eiscong::invmod;
using eiscong::mod;
using eiscong::mulmod;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const Poly& a) {
    return static_cast<int>(a.size()) - 1;
}

Poly from_integers(const std::vector<BigInt>& coeffs, i64 p) {
    Poly out(coeffs.size());
    BigInt pp(static_cast<long>(p));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), coeffs[i].get_mpz_t(), pp.get_mpz_t());
        out[i] = r.get_si();
    }
    trim(out);
    return out;
}

Poly add(const Poly& a, const Poly& b, i64 p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = mod(out[i] + b[i], p);
    trim(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b, i64 p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = mod(out[i] - b[i], p);
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, i64 p) {
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod(out[i + j] + mulmod(a[i], b[j], p), p);
    }
    trim(out);
    return out;
}

namespace {

void divide(const Poly& a, const Poly& b, i64 p, Poly& q, Poly& r) {
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    int db = degree(b);
    i64 inv_lead = invmod(b.back(), p);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        i64 c = mulmod(r.back(), inv_lead, p);
        q[static_cast<std::size_t>(shift)] = c;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(shift + j);
            r[idx] = mod(r[idx] - mulmod(c, b[static_cast<std::size_t>(j)], p), p);
        }
        trim(r);
    }
    trim(q);
}

}  // namespace

Poly rem(const Poly& a, const Poly& b, i64 p) {
    Poly q, r;
    divide(a, b, p, q, r);
    return r;
}

Poly quo(const Poly& a, const Poly& b, i64 p) {
    Poly q, r;
    divide(a, b, p, q, r);
    return q;
}

Poly monic(const Poly& a, i64 p) {
    if (a.empty())
        return a;
    i64 inv = invmod(a.back(), p);
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = mulmod(a[i], inv, p);
    return out;
}

Poly gcd(Poly a, Poly b, i64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, i64 p) {
    return rem(mul(a, b, p), m, p);
}

Poly powmod(const Poly& a, const BigInt& e, const Poly& m, i64 p) {
    Poly result = rem(Poly{1}, m, p);
    Poly base = rem(a, m, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(result, result, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mulmod(result, base, m, p);
    }
    return result;
}

Poly invmod(const Poly& a, const Poly& m, i64 p) {
    // Extended Euclid tracking only the coefficient of a.
    Poly r0 = m, r1 = rem(a, m, p);
    Poly s0, s1{1};
    while (!r1.empty()) {
        Poly q, r;
        divide(r0, r1, p, q, r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r0) != 0)
        throw std::domain_error("polynomial not invertible modulo m");
    i64 inv = invmod(r0[0], p);
    Poly out = rem(s0, m, p);
    for (auto& c : out)
        c = mulmod(c, inv, p);
    trim(out);
    return out;
}

Poly compose_mod(const Poly& g, const Poly& h, const Poly& m, i64 p) {
    Poly acc;
    for (std::size_t i = g.size(); i-- > 0;) {
        acc = mulmod(acc, h, m, p);
        acc = add(acc, Poly{g[i]}, p);
    }
    return rem(acc, m, p);
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<Poly> equal_degree_factorization(const Poly& f, int factor_degree, i64 p) {
    Poly start = monic(f, p);
    if (degree(start) % factor_degree != 0)
        throw std::invalid_argument("degree not a multiple of the factor degree");
    std::vector<Poly> done, pending{start};
    // Fixed seed: only the splitting path depends on it, never the output.
    std::mt19937_64 rng(0x5eedu);
    BigInt q = pow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(factor_degree));
    BigInt half = (q - 1) / 2;
    while (!pending.empty()) {
        Poly g = pending.back();
        pending.pop_back();
        if (degree(g) == factor_degree) {
            done.push_back(g);
            continue;
        }
        Poly split;
        while (true) {
            Poly a(static_cast<std::size_t>(degree(g)));
            for (auto& c : a)
                c = static_cast<i64>(rng() % static_cast<std::uint64_t>(p));
            trim(a);
            if (degree(a) < 1)
                continue;
            Poly t;
            if (p == 2) {
                // Trace map a + a^2 + ... + a^(2^(k-1)).
                Poly term = rem(a, g, p);
                t = term;
                for (int i = 1; i < factor_degree; ++i) {
                    term = mulmod(term, term, g, p);
                    t = add(t, term, p);
                }
            } else {
                t = sub(powmod(a, half, g, p), Poly{1}, p);
            }
            Poly d = gcd(t, g, p);
            if (degree(d) > 0 && degree(d) < degree(g)) {
                split = d;
                break;
            }
        }
        pending.push_back(split);
        pending.push_back(monic(quo(g, split, p), p));
    }
    std::sort(done.begin(), done.end(), canonical_less);
    return done;
}

}  // namespace eiscong::fp
