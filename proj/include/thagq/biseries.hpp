#pragma once

#include "thagq/unipoly.hpp"

#include <vector>

namespace thagq {

/// Power series in u truncated after u^order, with UniPoly coefficients.
/// Binary operations truncate to the smaller order of their operands.
class BiSeries {
public:
  explicit BiSeries(int order);
  BiSeries(int order, std::vector<UniPoly> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const UniPoly& coeff(int i) const;
  void set_coeff(int i, UniPoly p);
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }

  BiSeries truncated(int order) const;

  /// Division by u. The u^0 coefficient must be zero; the order drops by one.
  BiSeries divided_by_u() const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries operator-() const;

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BigRational& c);
  friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::vector<UniPoly> coeffs_;
};

/// a / b. The u^0 coefficient of b must be a nonzero constant polynomial.
BiSeries series_divide(const BiSeries& a, const BiSeries& b);

/// The square root with constant term 1. The u^0 coefficient of s must be
/// the constant polynomial 1.
BiSeries series_sqrt(const BiSeries& s);

}  // namespace thagq
