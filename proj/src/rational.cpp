#include "eiscong/rational.hpp"

#include <stdexcept>

namespace eiscong {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_wire(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        throw std::invalid_argument("malformed integer");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("malformed integer: " + std::string(s));
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_integer(text));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator: " + std::string(text));
    return make_rational(parse_integer(text.substr(0, slash)), den);
}

int padic_valuation(const BigInt& n, i64 p) {
    if (n == 0)
        throw std::domain_error("p-adic valuation of zero");
    BigInt pp(static_cast<long>(p));
    BigInt r;
    return static_cast<int>(mpz_remove(r.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

int padic_valuation(const BigRational& q, i64 p) {
    if (q == 0)
        throw std::domain_error("p-adic valuation of zero");
    return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace eiscong
