#pragma once

#include "thagq/exactmath.hpp"

#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace thagq {

/// Univariate polynomial in t with exact rational coefficients.
///
/// Coefficients are indexed by exponent and never carry trailing zeros, so
/// structural equality is polynomial equality. The zero polynomial has
/// degree `UniPoly::kMinusInfinity`.
class UniPoly {
public:
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const BigRational& c);
  static UniPoly monomial(const BigRational& c, int exponent);
  static UniPoly from_integers(const std::vector<BigInt>& coeffs);

  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^k; zero outside the stored range (including k < 0).
  BigRational coeff(int k) const;
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_integral() const;
  /// Integer coefficients; throws ConsistencyError when any is fractional.
  std::vector<BigInt> integer_coeffs() const;

  BigRational evaluate(const BigRational& t) const;

  /// Multiplication by t^k, k >= 0.
  UniPoly shifted(int k) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const BigRational& c);
  UniPoly operator-() const;

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
  friend UniPoly operator*(const BigRational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "2*t^2 + 17*t + 16".
  std::string to_string() const;

private:
  void trim();

  std::vector<BigRational> coeffs_;
};

}  // namespace thagq
