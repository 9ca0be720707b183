#pragma once

#include "thagq/schur.hpp"
#include "thagq/unipoly.hpp"

#include <map>

namespace thagq {

/// A polynomial in t whose coefficients are SchurSums of degree n, i.e. the
/// Frobenius image of a graded (virtual) S_n-representation.
class GradedSchur {
public:
  explicit GradedSchur(int n = 0);

  int n() const { return n_; }
  const std::map<int, SchurSum>& by_degree() const { return by_degree_; }
  /// Coefficient of t^k; the zero SchurSum when absent.
  SchurSum at(int k) const;
  /// Adds s * t^k. Zero coefficients are never stored.
  void add(int k, const SchurSum& s);
  int max_t_degree() const;
  bool all_nonnegative() const;

  friend bool operator==(const GradedSchur&, const GradedSchur&) = default;

private:
  int n_;
  std::map<int, SchurSum> by_degree_;
};

/// Closed formula in the basis s_(3^i, 2^j, 1^(n-3i-2j)).
GradedSchur q_equi_explicit(int n);
/// sum_i e_i * s_(2^k, 1^(n-2k-i)) per power t^k.
GradedSchur q_equi_induction(int n);
/// e_n[2X] + sum_k t^k sum_j (-1)^j s_(j+2, 2^(k-1)) e_(n-2k-j)[2X].
GradedSchur q_equi_e2x(int n);
/// Frobenius image of the equivariant KL polynomial of T_n.
GradedSchur p_equi(int n);
/// sum_i (-1)^i e_(n-i)[3X] P_i.
GradedSchur q_from_p(int n);

UniPoly graded_dimension(const GradedSchur& g);

}  // namespace thagq
