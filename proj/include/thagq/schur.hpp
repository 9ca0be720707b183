#pragma once

#include "thagq/partitions.hpp"

#include <map>
#include <string>
#include <vector>

namespace thagq {

/// Integer combination of Schur functions s_lambda, all of one degree.
class SchurSum {
public:
  using Terms = std::map<Partition, BigInt, RevLex>;

  explicit SchurSum(int degree = 0);
  static SchurSum single(const Partition& lambda, const BigInt& coeff = 1);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Partition& lambda) const;

  /// Adds c * s_lambda; lambda must have size == degree().
  void add(const Partition& lambda, const BigInt& c);

  bool all_nonnegative() const;

  SchurSum& operator+=(const SchurSum& o);
  SchurSum& operator-=(const SchurSum& o);
  SchurSum& operator*=(const BigInt& c);
  SchurSum operator-() const;
  friend SchurSum operator+(SchurSum a, const SchurSum& b) { return a += b; }
  friend SchurSum operator-(SchurSum a, const SchurSum& b) { return a -= b; }
  friend SchurSum operator*(SchurSum a, const BigInt& c) { return a *= c; }
  friend bool operator==(const SchurSum&, const SchurSum&) = default;

  /// e.g. "s(2) + 3*s(1,1)"
  std::string to_string() const;

private:
  void require_degree(const SchurSum& o) const;

  int degree_ = 0;
  Terms terms_;
};

/// Shapes mu containing lambda with mu/lambda a vertical (resp. horizontal)
/// strip of the given size, in reverse lexicographic order.
std::vector<Partition> vertical_strips(const Partition& lambda, int size);
std::vector<Partition> horizontal_strips(const Partition& lambda, int size);

/// e_i * s, by the Pieri rule.
SchurSum pieri_e(int i, const SchurSum& s);
/// h_i * s, by the Pieri rule.
SchurSum pieri_h(int i, const SchurSum& s);

/// e_n[mX] * s: the m-fold e-convolution applied to s through Pieri steps.
SchurSum e_plethysm_times(int n, int m, const SchurSum& s);

/// Schur expansion of e_n[mX].
SchurSum e_plethysm_mX(int n, int m);

/// Sum of coeff * f^lambda: the dimension of the represented virtual module.
BigInt dimension_of(const SchurSum& s);

}  // namespace thagq
