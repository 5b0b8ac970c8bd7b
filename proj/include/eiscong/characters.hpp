#ifndef EISCONG_CHARACTERS_HPP
#define EISCONG_CHARACTERS_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "eiscong/cyclotomic.hpp"

namespace eiscong {

/// (Z/q)^x as a product of cyclic factors with fixed Conrey generators.
///
/// Odd p^k uses the least primitive root mod p^2; 2^k (k >= 2) contributes
/// a factor generated by -1 and, for k >= 3, a factor generated by 5.
/// Instances are shared and immutable; obtain them through get().
class DirichletGroup {
public:
    struct Factor {
        i64 prime;
        int exponent;    // k in p^k
        i64 local_mod;   // p^k
        i64 generator;   // as a residue mod p^k
        i64 order;       // order of the generator
        i64 global_gen;  // unit mod q: generator here, 1 on every other prime
    };

    static std::shared_ptr<const DirichletGroup> get(i64 q);

    i64 modulus() const { return q_; }
    i64 size() const { return phi_; }
    /// lcm of factor orders.
    i64 exponent() const { return exponent_; }
    const std::vector<Factor>& factors() const { return factors_; }
    /// Discrete logs of a unit a mod q against each factor's generator.
    std::vector<i64> log(i64 a) const;
    /// Unit mod q with the given discrete logs.
    i64 exp(const std::vector<i64>& logs) const;

    explicit DirichletGroup(i64 q);  // prefer get()

private:
    i64 q_;
    i64 phi_;
    i64 exponent_;
    std::vector<Factor> factors_;
    std::vector<std::vector<i64>> tables_;  // per factor: residue -> log, -1 if undefined
};

/// A Dirichlet character mod q, stored as exponents against the factors of
/// DirichletGroup(q): chi(g_i) = exp(2 pi i e_i / ord(g_i)).
class DirichletCharacter {
public:
    DirichletCharacter();  // trivial mod 1
    DirichletCharacter(std::shared_ptr<const DirichletGroup> group, std::vector<i64> exponents);

    static DirichletCharacter trivial(i64 q);
    static DirichletCharacter from_conrey(i64 q, i64 n);
    /// Parses "q.n".
    static DirichletCharacter from_label(std::string_view label);
    /// All characters mod q in Conrey index order.
    static std::vector<DirichletCharacter> all(i64 q);

    i64 modulus() const { return group_->modulus(); }
    const DirichletGroup& group() const { return *group_; }
    const std::vector<i64>& exponents() const { return exponents_; }
    i64 conrey_index() const;
    std::string label() const;

    i64 order() const { return order_; }
    /// Order of the cyclotomic field holding all values; equals order().
    i64 value_field_order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }
    bool is_odd() const;
    bool is_even() const { return !is_odd(); }

    /// chi(a) = zeta_order^k; returns k in [0, order) or -1 when gcd(a, q) > 1.
    i64 exponent_at(i64 a) const;
    CyclotomicElement evaluate(i64 a) const;
    /// Value as an element of Q(zeta_target), order() | target.
    CyclotomicElement evaluate_in(i64 a, i64 target) const;

    i64 conductor() const;
    bool is_primitive() const { return conductor() == modulus(); }
    /// The primitive character inducing this one.
    DirichletCharacter primitive() const;
    /// The character mod Q induced from this one (modulus() | Q).
    DirichletCharacter extend(i64 Q) const;

    DirichletCharacter pow(i64 e) const;
    DirichletCharacter inverse() const { return pow(-1); }
    /// Product on the lcm of the moduli.
    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b);

private:
    std::shared_ptr<const DirichletGroup> group_;
    std::vector<i64> exponents_;
    i64 order_ = 1;
};

/// chi = chi_N * chi_p with chi_N of modulus prime to p and chi_p of modulus p.
struct NpDecomposition {
    DirichletCharacter tame;  // chi_N
    DirichletCharacter wild;  // chi_p
};
NpDecomposition decompose_Np(const DirichletCharacter& chi, i64 p);

/// The Teichmuller character mod p: omega(a) is the (p-1)-st root of unity
/// congruent to a modulo the canonical prime above p of Q(zeta_{p-1}).
DirichletCharacter teichmuller_character(i64 p);

/// The primitive character a -> (d/a) of modulus |d|, d a fundamental
/// discriminant.
DirichletCharacter kronecker_character(i64 d);

}  // namespace eiscong

#endif
