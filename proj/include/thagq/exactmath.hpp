#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace thagq {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);

/// Binomial coefficient; zero when k < 0 or k > n, and for n < 0.
BigInt binomial(long n, long k);

/// top! / prod(parts_i!). Any negative part gives 0; nonnegative parts
/// that do not sum to `top` raise DomainError.
BigInt multinomial(long top, std::span<const long> parts);
BigInt multinomial(long top, std::initializer_list<long> parts);

BigInt pow2(unsigned long e);

bool is_integral(const BigRational& q);

/// Exact decision of p >= q * sqrt(y). Requires y >= 0.
bool geq_with_radical(const BigRational& p, const BigRational& q, const BigRational& y);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

}  // namespace thagq
