#ifndef EISCONG_IMQUAD_HPP
#define EISCONG_IMQUAD_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eiscong/cyclotomic.hpp"

namespace eiscong {

/// Positive definite binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    i64 a = 1, b = 1, c = 1;

    i64 discriminant() const { return b * b - 4 * a * c; }
    /// |b| <= a <= c, and b >= 0 if |b| = a or a = c.
    bool is_reduced() const;
    std::string to_string() const;  // "(a,b,c)"
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

QuadForm reduce(QuadForm f);
QuadForm principal_form(i64 d);
/// Reduced representative of the composed class.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm inverse(const QuadForm& f);

enum class Splitting { Split, Inert, Ramified };
Splitting splitting(i64 ell, i64 d);
const char* to_string(Splitting s);

/// Class group of the imaginary quadratic field of fundamental discriminant
/// d < 0, realized on reduced forms. Element indices refer to forms(); index 0
/// is the principal class.
class ClassGroup {
public:
    explicit ClassGroup(i64 d);

    i64 discriminant() const { return d_; }
    i64 h() const { return static_cast<i64>(forms_.size()); }
    i64 w() const { return d_ == -3 ? 6 : d_ == -4 ? 4 : 2; }
    const std::vector<QuadForm>& forms() const { return forms_; }

    std::size_t index_of(const QuadForm& f) const;  // f need not be reduced
    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * forms_.size() + j]; }
    std::size_t inv(std::size_t i) const { return inverse_[i]; }
    std::size_t pow(std::size_t i, i64 e) const;
    i64 order(std::size_t i) const { return orders_[i]; }

    /// Invariant factors n_1 >= n_2 >= ... with n_{i+1} | n_i (empty if h = 1).
    const std::vector<i64>& structure() const { return structure_; }
    const std::vector<std::size_t>& generators() const { return generators_; }
    /// Exponents of element i against generators().
    const std::vector<i64>& coordinates(std::size_t i) const { return coords_[i]; }
    i64 exponent() const;
    /// Orders of the primary cyclic factors of the p-part.
    std::vector<i64> p_part(i64 p) const;

private:
    i64 d_;
    std::vector<QuadForm> forms_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<i64> orders_;
    std::vector<i64> structure_;
    std::vector<std::size_t> generators_;
    std::vector<std::vector<i64>> coords_;
};

/// reduced_forms(d): the class group, shared and immutable.
std::shared_ptr<const ClassGroup> reduced_forms(i64 d);

/// Classes of the two primes above a split or ramified ell (equal when ramified).
std::pair<std::size_t, std::size_t> prime_to_class(i64 ell, const ClassGroup& G);

/// Classes of all integral ideals of norm n, one entry per ideal.
std::vector<std::size_t> ideals_of_norm(i64 n, const ClassGroup& G);

/// Character of Cl(F): phi(g_i) = zeta_{n_i}^{e_i} on the generators.
class ClassCharacter {
public:
    ClassCharacter(std::shared_ptr<const ClassGroup> group, std::vector<i64> exponents);

    const ClassGroup& group() const { return *group_; }
    const std::shared_ptr<const ClassGroup>& group_ptr() const { return group_; }
    const std::vector<i64>& exponents() const { return exponents_; }
    i64 order() const { return order_; }
    /// phi(class) = zeta_order^k with k returned in [0, order).
    i64 exponent_at(std::size_t cls) const;
    CyclotomicElement evaluate(std::size_t cls) const;
    CyclotomicElement evaluate_in(std::size_t cls, i64 target) const;
    ClassCharacter inverse() const;
    std::string label() const;  // "d:[e1,e2,...]"
    friend bool operator==(const ClassCharacter& a, const ClassCharacter& b) {
        return a.group_->discriminant() == b.group_->discriminant() && a.exponents_ == b.exponents_;
    }

private:
    std::shared_ptr<const ClassGroup> group_;
    std::vector<i64> exponents_;
    i64 order_;
};

struct CharacterPair {
    ClassCharacter phi;
    ClassCharacter phi_inverse;
};

/// All characters of exact order n grouped as {phi, phi^{-1}} pairs; the
/// representative phi has the lexicographically smaller exponent vector.
/// Throws if n does not divide the exponent of G.
std::vector<CharacterPair> characters_of_order(std::shared_ptr<const ClassGroup> G, i64 n);

}  // namespace eiscong

#endif
