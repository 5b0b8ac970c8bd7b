#include "eiscong/characters.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "eiscong/padic.hpp"

namespace eiscong {

namespace {

std::mutex g_group_mutex;
std::map<i64, std::shared_ptr<const DirichletGroup>> g_group_cache;

i64 crt_unit(i64 local_value, i64 local_mod, i64 q) {
    // The unit congruent to local_value mod local_mod and to 1 mod q/local_mod.
    i64 rest = q / local_mod;
    if (rest == 1)
        return mod(local_value, q);
    i64 inv = invmod(mod(rest, local_mod), local_mod);
    // x = 1 + rest * t with 1 + rest * t = local_value mod local_mod.
    i64 t = mulmod(mod(local_value - 1, local_mod), inv, local_mod);
    return mod(1 + rest * t, q);
}

struct LocalPart {
    i64 prime;
    int exponent;
    std::vector<i64> exps;  // one entry per factor of p^k
};

std::vector<LocalPart> local_parts(const DirichletCharacter& chi) {
    std::vector<LocalPart> out;
    const auto& f = chi.group().factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (out.empty() || out.back().prime != f[i].prime)
            out.push_back({f[i].prime, f[i].exponent, {}});
        out.back().exps.push_back(chi.exponents()[i]);
    }
    return out;
}

// Exponents of a local part lifted from p^k to p^K (K >= k), as a vector
// matching the factors of (Z/p^K)^x.
std::vector<i64> lift_local(i64 p, int k, const std::vector<i64>& exps, int K) {
    if (p != 2) {
        if (k == 0)
            return {0};
        return {exps[0] * ipow(p, K - k)};
    }
    std::vector<i64> out;
    if (K >= 2)
        out.push_back(k >= 2 ? exps[0] : 0);
    if (K >= 3)
        out.push_back(k >= 3 ? exps[1] * ipow(2, K - k) : 0);
    return out;
}

int local_conductor_exponent(i64 p, int k, const std::vector<i64>& exps) {
    if (p != 2) {
        if (exps[0] == 0)
            return 0;
        return std::max(1, k - std::min(valuation(exps[0], p), k));
    }
    i64 sign = k >= 2 ? exps[0] : 0;
    i64 five = k >= 3 ? exps[1] : 0;
    if (five == 0)
        return sign == 0 ? 0 : 2;
    return k - valuation(five, 2);
}

DirichletCharacter from_local_parts(i64 q, const std::vector<LocalPart>& parts) {
    auto group = DirichletGroup::get(q);
    std::vector<i64> exps;
    std::map<i64, const LocalPart*> by_prime;
    for (const auto& lp : parts)
        by_prime[lp.prime] = &lp;
    const auto& f = group->factors();
    std::size_t i = 0;
    while (i < f.size()) {
        i64 p = f[i].prime;
        int K = f[i].exponent;
        auto it = by_prime.find(p);
        std::vector<i64> lifted = it == by_prime.end()
                                      ? lift_local(p, 0, {}, K)
                                      : lift_local(p, it->second->exponent, it->second->exps, K);
        for (i64 e : lifted) {
            exps.push_back(e);
            ++i;
        }
    }
    return DirichletCharacter(group, std::move(exps));
}

}  // namespace

// ------------------------------------------------------------ DirichletGroup

DirichletGroup::DirichletGroup(i64 q) : q_(q) {
    if (q < 1)
        throw std::invalid_argument("modulus must be positive");
    phi_ = euler_phi(q);
    exponent_ = 1;
    for (const auto& pp : factorize(q)) {
        const i64 p = pp.prime;
        const i64 pk = pp.value;
        auto add_factor = [&](i64 gen, i64 order) {
            Factor f{p, pp.exponent, pk, gen, order, crt_unit(gen, pk, q)};
            std::vector<i64> table(static_cast<std::size_t>(pk), -1);
            i64 x = 1;
            for (i64 j = 0; j < order; ++j) {
                table[static_cast<std::size_t>(x)] = j;
                x = mulmod(x, gen, pk);
            }
            factors_.push_back(f);
            tables_.push_back(std::move(table));
            exponent_ = lcm(exponent_, order);
        };
        if (p == 2) {
            if (pp.exponent >= 2)
                add_factor(pk - 1, 2);
            if (pp.exponent >= 3)
                add_factor(5, pk / 4);
        } else {
            add_factor(mod(least_primitive_root_p2(p), pk), pk / p * (p - 1));
        }
    }
}

std::shared_ptr<const DirichletGroup> DirichletGroup::get(i64 q) {
    std::lock_guard lock(g_group_mutex);
    auto it = g_group_cache.find(q);
    if (it != g_group_cache.end())
        return it->second;
    auto g = std::make_shared<const DirichletGroup>(q);
    g_group_cache.emplace(q, g);
    return g;
}

std::vector<i64> DirichletGroup::log(i64 a) const {
    if (gcd(a, q_) != 1)
        throw std::domain_error("discrete log of a non-unit");
    std::vector<i64> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        i64 r = mod(a, f.local_mod);
        if (f.prime == 2 && f.order == 2 && f.generator == f.local_mod - 1) {
            // The -1 factor: read off r mod 4.
            out[i] = r % 4 == 1 ? 0 : 1;
            continue;
        }
        if (f.prime == 2) {
            // The 5 factor: strip the sign first.
            if (r % 4 == 3)
                r = f.local_mod - r;
        }
        i64 l = tables_[i][static_cast<std::size_t>(r)];
        if (l < 0)
            throw std::logic_error("discrete log table miss");
        out[i] = l;
    }
    return out;
}

i64 DirichletGroup::exp(const std::vector<i64>& logs) const {
    i64 x = 1 % q_;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        x = mulmod(x, powmod(factors_[i].global_gen, mod(logs[i], factors_[i].order), q_), q_);
    return x;
}

// ------------------------------------------------------- DirichletCharacter

DirichletCharacter::DirichletCharacter() : DirichletCharacter(DirichletGroup::get(1), {}) {}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const DirichletGroup> group,
                                       std::vector<i64> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& f = group_->factors();
    if (exponents_.size() != f.size())
        throw std::invalid_argument("exponent vector does not match the group");
    order_ = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        exponents_[i] = mod(exponents_[i], f[i].order);
        order_ = lcm(order_, f[i].order / gcd(exponents_[i], f[i].order));
    }
}

DirichletCharacter DirichletCharacter::trivial(i64 q) {
    auto g = DirichletGroup::get(q);
    return DirichletCharacter(g, std::vector<i64>(g->factors().size(), 0));
}

DirichletCharacter DirichletCharacter::from_conrey(i64 q, i64 n) {
    if (q < 1)
        throw std::invalid_argument("modulus must be positive");
    if (gcd(n, q) != 1)
        throw std::invalid_argument("Conrey index " + std::to_string(n) + " is not a unit mod " +
                                    std::to_string(q));
    auto g = DirichletGroup::get(q);
    return DirichletCharacter(g, g->log(n));
}

DirichletCharacter DirichletCharacter::from_label(std::string_view label) {
    auto dot = label.find('.');
    if (dot == std::string_view::npos)
        throw std::invalid_argument("character label must look like q.n: " + std::string(label));
    auto parse = [&](std::string_view s) {
        i64 v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("bad character label: " + std::string(label));
        return v;
    };
    return from_conrey(parse(label.substr(0, dot)), parse(label.substr(dot + 1)));
}

std::vector<DirichletCharacter> DirichletCharacter::all(i64 q) {
    std::vector<DirichletCharacter> out;
    for (i64 n = 1; n <= q; ++n) {
        if (gcd(n, q) == 1)
            out.push_back(from_conrey(q, n));
    }
    return out;
}

i64 DirichletCharacter::conrey_index() const {
    i64 n = group_->exp(exponents_);
    return modulus() == 1 ? 1 : n;
}

std::string DirichletCharacter::label() const {
    return std::to_string(modulus()) + "." + std::to_string(conrey_index());
}

i64 DirichletCharacter::exponent_at(i64 a) const {
    if (gcd(a, modulus()) != 1)
        return -1;
    const auto& f = group_->factors();
    auto logs = group_->log(a);
    // Work in Z/L with L the group exponent, then scale down to Z/order.
    const i64 L = group_->exponent();
    i64 s = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s = mod(s + mulmod(mulmod(exponents_[i], logs[i], L), L / f[i].order, L), L);
    return s / (L / order_);
}

CyclotomicElement DirichletCharacter::evaluate(i64 a) const {
    return evaluate_in(a, order_);
}

CyclotomicElement DirichletCharacter::evaluate_in(i64 a, i64 target) const {
    if (target % order_ != 0)
        throw std::invalid_argument("target field does not contain the character values");
    i64 k = exponent_at(a);
    if (k < 0)
        return CyclotomicElement(target);
    return CyclotomicElement::root_of_unity(target, k * (target / order_));
}

bool DirichletCharacter::is_odd() const {
    if (modulus() <= 2)
        return false;
    return exponent_at(-1) != 0;
}

i64 DirichletCharacter::conductor() const {
    i64 c = 1;
    for (const auto& lp : local_parts(*this))
        c *= ipow(lp.prime, local_conductor_exponent(lp.prime, lp.exponent, lp.exps));
    return c;
}

DirichletCharacter DirichletCharacter::primitive() const {
    std::vector<LocalPart> parts;
    i64 c = 1;
    for (const auto& lp : local_parts(*this)) {
        int ce = local_conductor_exponent(lp.prime, lp.exponent, lp.exps);
        if (ce == 0)
            continue;
        c *= ipow(lp.prime, ce);
        LocalPart out{lp.prime, ce, {}};
        if (lp.prime != 2) {
            out.exps.push_back(lp.exps[0] / ipow(lp.prime, lp.exponent - ce));
        } else {
            out.exps.push_back(lp.exps[0]);
            if (ce >= 3)
                out.exps.push_back(lp.exps[1] / ipow(2, lp.exponent - ce));
        }
        parts.push_back(std::move(out));
    }
    return from_local_parts(c, parts);
}

DirichletCharacter DirichletCharacter::extend(i64 Q) const {
    if (Q % modulus() != 0)
        throw std::invalid_argument("extend: modulus must divide the target");
    if (Q == modulus())
        return *this;
    return from_local_parts(Q, local_parts(*this));
}

DirichletCharacter DirichletCharacter::pow(i64 e) const {
    std::vector<i64> exps(exponents_.size());
    const auto& f = group_->factors();
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = mulmod(exponents_[i], mod(e, f[i].order), f[i].order);
    return DirichletCharacter(group_, std::move(exps));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    i64 Q = lcm(a.modulus(), b.modulus());
    DirichletCharacter x = a.extend(Q), y = b.extend(Q);
    std::vector<i64> exps(x.exponents_.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = x.exponents_[i] + y.exponents_[i];
    return DirichletCharacter(x.group_, std::move(exps));
}

bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
}

// -------------------------------------------------------------- free helpers

NpDecomposition decompose_Np(const DirichletCharacter& chi, i64 p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("decompose_Np: p must be an odd prime");
    if (chi.conductor() % (p * p) == 0)
        throw std::invalid_argument("decompose_Np: p^2 divides the conductor of " + chi.label());
    std::vector<LocalPart> tame_parts, wild_parts;
    i64 N = chi.modulus();
    for (auto& lp : local_parts(chi)) {
        if (lp.prime == p) {
            N /= ipow(p, lp.exponent);
            // Restrict to conductor p (already known to divide p).
            if (lp.exps[0] != 0)
                wild_parts.push_back({p, 1, {lp.exps[0] / ipow(p, lp.exponent - 1)}});
        } else {
            tame_parts.push_back(std::move(lp));
        }
    }
    return {from_local_parts(N, tame_parts), from_local_parts(p, wild_parts)};
}

DirichletCharacter teichmuller_character(i64 p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("teichmuller_character: p must be an odd prime");
    auto group = DirichletGroup::get(p);
    i64 g = group->factors().front().generator;
    if (p == 3)
        return DirichletCharacter(group, {1});
    // zeta_{p-1} maps to the root r of the canonical linear factor t + c.
    PrimeAbove P = canonical_prime_above(p, p - 1);
    i64 r = mod(-P.unramified_part[0], p);
    i64 x = 1;
    for (i64 s = 0; s < p - 1; ++s) {
        if (x == g)
            return DirichletCharacter(group, {s});
        x = mulmod(x, r, p);
    }
    throw std::logic_error("teichmuller_character: generator not a power of the root");
}

DirichletCharacter kronecker_character(i64 d) {
    if (!is_fundamental_discriminant(d))
        throw std::invalid_argument("kronecker_character: " + std::to_string(d) +
                                    " is not a fundamental discriminant");
    i64 q = d < 0 ? -d : d;
    auto group = DirichletGroup::get(q);
    std::vector<i64> exps;
    for (const auto& f : group->factors())
        exps.push_back(kronecker(d, f.global_gen) == 1 ? 0 : f.order / 2);
    return DirichletCharacter(group, std::move(exps));
}

}  // namespace eiscong
