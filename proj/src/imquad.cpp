#include "eiscong/imquad.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace eiscong {

namespace {

using i128 = __int128;

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

i64 checked_c(i128 b, i64 d, i128 a) {
    i128 num = b * b - d;
    if (num % (4 * a) != 0)
        throw std::logic_error("form composition produced a non-integral c");
    i128 c = num / (4 * a);
    if (c > INT64_MAX)
        throw std::overflow_error("form coefficient overflow");
    return static_cast<i64>(c);
}

std::mutex g_cg_mutex;
std::map<i64, std::shared_ptr<const ClassGroup>> g_cg_cache;

}  // namespace

bool QuadForm::is_reduced() const {
    i64 ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

std::string QuadForm::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

QuadForm reduce(QuadForm f) {
    if (f.a <= 0 || f.discriminant() >= 0)
        throw std::invalid_argument("reduce: form is not positive definite");
    const i64 d = f.discriminant();
    while (true) {
        // b into (-a, a].
        i64 k = floor_div(f.a - f.b, 2 * f.a);
        if (k != 0) {
            f.b += 2 * f.a * k;
            f.c = checked_c(f.b, d, f.a);
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm principal_form(i64 d) {
    i64 b = mod(d, 2);
    return {1, b, (b * b - d) / 4};
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    const i64 D = f.discriminant();
    if (g.discriminant() != D)
        throw std::invalid_argument("compose: discriminant mismatch");
    QuadForm f1 = f, f2 = g;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    i64 s = (f1.b + f2.b) / 2;
    i64 n = f2.b - s;
    i64 y1 = 0, dd = f1.a;
    if (f2.a % f1.a != 0) {
        i64 u = 0, v = 0;
        dd = xgcd(f2.a, f1.a, u, v);
        y1 = u;
    }
    i64 x2 = 0, y2 = -1, d1 = dd;
    if (s % dd != 0) {
        i64 x = 0, y = 0;
        d1 = xgcd(s, dd, x, y);
        x2 = x;
        y2 = -y;
    }
    i64 v1 = f1.a / d1, v2 = f2.a / d1;
    i128 r128 = (static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * f2.c) % v1;
    if (r128 < 0)
        r128 += v1;
    i128 b3 = f2.b + 2 * static_cast<i128>(v2) * r128;
    i128 a3 = static_cast<i128>(v1) * v2;
    QuadForm out;
    out.a = static_cast<i64>(a3);
    // Bring b into (-a, a] before forming c to keep numbers small.
    i128 k = (a3 - b3) / (2 * a3);
    if ((a3 - b3) % (2 * a3) != 0 && (a3 - b3) < 0)
        --k;
    b3 += 2 * a3 * k;
    out.b = static_cast<i64>(b3);
    out.c = checked_c(b3, D, a3);
    return reduce(out);
}

QuadForm inverse(const QuadForm& f) {
    return reduce({f.a, -f.b, f.c});
}

Splitting splitting(i64 ell, i64 d) {
    int k = kronecker(d, ell);
    return k == 1 ? Splitting::Split : k == -1 ? Splitting::Inert : Splitting::Ramified;
}

const char* to_string(Splitting s) {
    switch (s) {
    case Splitting::Split:
        return "split";
    case Splitting::Inert:
        return "inert";
    case Splitting::Ramified:
        return "ramified";
    }
    return "?";
}

// --------------------------------------------------------------- ClassGroup

ClassGroup::ClassGroup(i64 d) : d_(d) {
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("class group: " + std::to_string(d) +
                                    " is not a negative fundamental discriminant");
    for (i64 a = 1; 3 * a * a <= -d; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            i64 c = num / (4 * a);
            QuadForm f{a, b, c};
            if (f.is_reduced())
                forms_.push_back(f);
        }
    }
    std::sort(forms_.begin(), forms_.end(), [](const QuadForm& x, const QuadForm& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    const std::size_t h = forms_.size();
    if (forms_.front() != principal_form(d))
        throw std::logic_error("principal form is not first");
    table_.assign(h * h, 0);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = i; j < h; ++j) {
            std::size_t k = index_of(compose(forms_[i], forms_[j]));
            table_[i * h + j] = k;
            table_[j * h + i] = k;
        }
    }
    inverse_.resize(h);
    orders_.resize(h);
    for (std::size_t i = 0; i < h; ++i) {
        inverse_[i] = index_of(inverse(forms_[i]));
        i64 o = 1;
        for (std::size_t x = i; x != 0; x = mul(x, i))
            ++o;
        orders_[i] = o;
    }

    // Cyclic decomposition by repeated maximal-order quotients.
    coords_.assign(h, {});
    std::vector<bool> in_sub(h, false);
    std::vector<std::size_t> sub{0};
    in_sub[0] = true;
    while (sub.size() < h) {
        std::size_t best = 0;
        i64 best_order = 0;
        for (std::size_t g = 0; g < h; ++g) {
            if (in_sub[g])
                continue;
            i64 k = 1;
            for (std::size_t x = g; !in_sub[x]; x = mul(x, g))
                ++k;
            if (k > best_order) {
                best_order = k;
                best = g;
            }
        }
        // Adjust best by y in the subgroup with y^k = best^k so that the new
        // cyclic factor meets the subgroup trivially.
        std::size_t target = pow(best, best_order);
        std::size_t gen = h;
        for (std::size_t y : sub) {
            if (pow(y, best_order) == target) {
                gen = mul(best, inv(y));
                break;
            }
        }
        if (gen == h)
            throw std::logic_error("class group decomposition failed");
        std::vector<std::size_t> grown;
        std::vector<std::vector<i64>> grown_coords;
        std::size_t x = 0;
        for (i64 e = 0; e < best_order; ++e) {
            for (std::size_t y : sub) {
                std::size_t z = mul(x, y);
                auto c = coords_[y];
                c.push_back(e);
                grown.push_back(z);
                grown_coords.push_back(std::move(c));
            }
            x = mul(x, gen);
        }
        for (std::size_t i = 0; i < grown.size(); ++i) {
            in_sub[grown[i]] = true;
            coords_[grown[i]] = std::move(grown_coords[i]);
        }
        sub = std::move(grown);
        structure_.push_back(best_order);
        generators_.push_back(gen);
    }
    for (auto& c : coords_)
        c.resize(structure_.size(), 0);
}

std::size_t ClassGroup::index_of(const QuadForm& f) const {
    QuadForm r = reduce(f);
    auto it = std::lower_bound(forms_.begin(), forms_.end(), r, [](const QuadForm& x, const QuadForm& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    if (it == forms_.end() || *it != r)
        throw std::invalid_argument("form " + r.to_string() + " is not in the class group");
    return static_cast<std::size_t>(it - forms_.begin());
}

std::size_t ClassGroup::pow(std::size_t i, i64 e) const {
    e = mod(e, orders_[i]);
    std::size_t r = 0;
    for (i64 k = 0; k < e; ++k)
        r = mul(r, i);
    return r;
}

i64 ClassGroup::exponent() const {
    return structure_.empty() ? 1 : structure_.front();
}

std::vector<i64> ClassGroup::p_part(i64 p) const {
    std::vector<i64> out;
    for (i64 n : structure_) {
        int v = valuation(n, p);
        if (v > 0)
            out.push_back(ipow(p, v));
    }
    return out;
}

std::shared_ptr<const ClassGroup> reduced_forms(i64 d) {
    {
        std::lock_guard lock(g_cg_mutex);
        auto it = g_cg_cache.find(d);
        if (it != g_cg_cache.end())
            return it->second;
    }
    auto G = std::make_shared<const ClassGroup>(d);
    std::lock_guard lock(g_cg_mutex);
    g_cg_cache.emplace(d, G);
    return G;
}

std::pair<std::size_t, std::size_t> prime_to_class(i64 ell, const ClassGroup& G) {
    const i64 d = G.discriminant();
    if (!is_prime(ell))
        throw std::invalid_argument("prime_to_class: " + std::to_string(ell) + " is not prime");
    Splitting s = splitting(ell, d);
    if (s == Splitting::Inert)
        throw std::invalid_argument("prime_to_class: " + std::to_string(ell) + " is inert");
    i64 b = 0;
    if (ell == 2) {
        if (s == Splitting::Split)
            b = 1;
        else
            b = mod(d, 8) == 0 ? 0 : 2;
    } else if (s == Splitting::Ramified) {
        b = mod(d, 2) == 0 ? 0 : ell;
    } else {
        i64 r = sqrt_mod_prime(mod(d, ell), ell);
        r = std::min(r, ell - r);
        b = mod(r - d, 2) == 0 ? r : r + ell;
    }
    QuadForm f{ell, b, (b * b - d) / (4 * ell)};
    std::size_t c = G.index_of(f);
    return {c, G.inv(c)};
}

std::vector<std::size_t> ideals_of_norm(i64 n, const ClassGroup& G) {
    if (n < 1)
        throw std::invalid_argument("ideals_of_norm: n must be positive");
    std::vector<std::size_t> classes{0};
    for (const auto& pp : factorize(n)) {
        const i64 ell = pp.prime;
        const int k = pp.exponent;
        std::vector<std::size_t> local;
        switch (splitting(ell, G.discriminant())) {
        case Splitting::Inert:
            if (k % 2 != 0)
                return {};
            local.push_back(0);
            break;
        case Splitting::Ramified:
            local.push_back(G.pow(prime_to_class(ell, G).first, k));
            break;
        case Splitting::Split: {
            auto [c, cbar] = prime_to_class(ell, G);
            for (int i = 0; i <= k; ++i)
                local.push_back(G.mul(G.pow(c, i), G.pow(cbar, k - i)));
            break;
        }
        }
        std::vector<std::size_t> next;
        for (std::size_t x : classes) {
            for (std::size_t y : local)
                next.push_back(G.mul(x, y));
        }
        classes = std::move(next);
    }
    return classes;
}

// ----------------------------------------------------------- ClassCharacter

ClassCharacter::ClassCharacter(std::shared_ptr<const ClassGroup> group, std::vector<i64> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)), order_(1) {
    const auto& n = group_->structure();
    if (exponents_.size() != n.size())
        throw std::invalid_argument("class character: exponent vector does not match the group");
    for (std::size_t i = 0; i < n.size(); ++i) {
        exponents_[i] = mod(exponents_[i], n[i]);
        order_ = lcm(order_, n[i] / gcd(exponents_[i], n[i]));
    }
}

i64 ClassCharacter::exponent_at(std::size_t cls) const {
    const auto& n = group_->structure();
    const auto& x = group_->coordinates(cls);
    const i64 L = group_->exponent();
    i64 s = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
        s = mod(s + mulmod(mulmod(exponents_[i], x[i], L), L / n[i], L), L);
    return s / (L / order_);
}

CyclotomicElement ClassCharacter::evaluate(std::size_t cls) const {
    return CyclotomicElement::root_of_unity(order_, exponent_at(cls));
}

CyclotomicElement ClassCharacter::evaluate_in(std::size_t cls, i64 target) const {
    if (target % order_ != 0)
        throw std::invalid_argument("target field does not contain the character values");
    return CyclotomicElement::root_of_unity(target, exponent_at(cls) * (target / order_));
}

ClassCharacter ClassCharacter::inverse() const {
    std::vector<i64> e(exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = -exponents_[i];
    return ClassCharacter(group_, std::move(e));
}

std::string ClassCharacter::label() const {
    std::string s = std::to_string(group_->discriminant()) + ":[";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i > 0)
            s += ",";
        s += std::to_string(exponents_[i]);
    }
    return s + "]";
}

std::vector<CharacterPair> characters_of_order(std::shared_ptr<const ClassGroup> G, i64 n) {
    if (n < 1 || G->exponent() % n != 0)
        throw std::invalid_argument("characters_of_order: " + std::to_string(n) +
                                    " does not divide the group exponent " + std::to_string(G->exponent()));
    const auto& inv = G->structure();
    std::vector<CharacterPair> out;
    std::vector<i64> e(inv.size(), 0);
    while (true) {
        ClassCharacter phi(G, e);
        if (phi.order() == n) {
            ClassCharacter phi_inv = phi.inverse();
            if (phi.exponents() <= phi_inv.exponents())
                out.push_back({phi, phi_inv});
        }
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == inv[i])
            e[i++] = 0;
        if (i == e.size())
            break;
    }
    return out;
}

}  // namespace eiscong
