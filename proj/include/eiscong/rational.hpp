#ifndef EISCONG_RATIONAL_HPP
#define EISCONG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "eiscong/arith.hpp"

namespace eiscong {

using BigInt = mpz_class;
/// Canonical (lowest terms, positive denominator) arbitrary-precision rational.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Always "num/den", including "0/1" and "5/1"; the wire format for values.
std::string to_wire(const BigRational& q);
/// Accepts "num/den" or a bare integer; throws std::invalid_argument otherwise.
BigRational parse_rational(std::string_view text);

/// v_p of a nonzero integer or rational; throws std::domain_error on zero.
int padic_valuation(const BigInt& n, i64 p);
int padic_valuation(const BigRational& q, i64 p);

BigInt pow(const BigInt& base, unsigned long exp);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace eiscong

#endif
