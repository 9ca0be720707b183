#include "thagq/exactmath.hpp"

#include "thagq/errors.hpp"

#include <numeric>

namespace thagq {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt multinomial(long top, std::span<const long> parts) {
  for (long p : parts)
    if (p < 0) return 0;
  long sum = std::accumulate(parts.begin(), parts.end(), 0L);
  if (sum != top) throw DomainError("multinomial parts do not sum to the top index");
  // Product of binomials: C(top, p0) * C(top - p0, p1) * ...
  BigInt r = 1;
  long rest = top;
  for (long p : parts) {
    r *= binomial(rest, p);
    rest -= p;
  }
  return r;
}

BigInt multinomial(long top, std::initializer_list<long> parts) {
  return multinomial(top, std::span<const long>(parts.begin(), parts.size()));
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

bool is_integral(const BigRational& q) { return q.get_den() == 1; }

bool geq_with_radical(const BigRational& p, const BigRational& q, const BigRational& y) {
  if (sgn(y) < 0) throw DomainError("geq_with_radical: negative radicand");
  BigRational p2 = p * p;
  BigRational q2y = q * q * y;
  if (sgn(q) <= 0 || sgn(y) == 0) {
    // Right-hand side is <= 0.
    if (sgn(p) >= 0) return true;
    return p2 <= q2y;
  }
  return sgn(p) >= 0 && p2 >= q2y;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

}  // namespace thagq
