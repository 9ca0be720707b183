#pragma once

#include "thagq/unipoly.hpp"

#include <string_view>
#include <vector>

namespace thagq {

/// c_{n,k} = b_{n,k} * d_{n,k}.
struct DecompCell {
  int n = 0;
  int k = 0;
  BigInt d;
  BigRational b;
  BigInt c;
};

/// Lower bound X(n,k) = rational_part + radical_scale * sqrt(y).
struct BoundData {
  int n = 0;
  int k = 0;
  BigInt y;
  BigRational x_rational_part;
  BigRational x_radical_scale;
};

/// Quadratic a x^2 + b x + c whose larger root is X(n,k).
struct FQuadratic {
  BigInt a;
  BigInt b;
  BigInt c;
};

/// d_{n,k}; zero outside 0 <= k, 2k <= n.
BigInt d_coeff(int n, int k);

/// d_{n,k} for all 0 <= n <= max_n, computed once.
class DTable {
public:
  explicit DTable(int max_n);
  int max_n() const { return max_n_; }
  /// Zero outside the support; DomainError past max_n.
  BigInt operator()(int n, int k) const;

private:
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;
};

BigRational b_coeff(int n, int k);

/// Throws ConsistencyError when c (from q_closed) != b * d.
DecompCell decomposition(int n, int k);
/// As above with Q_{T_n} supplied.
DecompCell decomposition(int n, int k, const UniPoly& q_tn);

/// y(n,k), the radicand of X(n,k).
BigInt y_value(int n, int k);
/// Requires n >= 2k + 1, k >= 1.
BoundData bound_data(int n, int k);
FQuadratic f_quadratic(int n, int k);

/// The three d-recurrences at (n, k); needs n >= 2k + 1, k >= 1.
bool d_recurrences_hold(int n, int k);
bool d_recurrences_hold(const DTable& d, int n, int k);

/// d_{n,k} / d_{n-1,k} >= X(n,k), decided exactly; needs n >= 2k + 1, k >= 1.
/// Also asserts y(n,k) > 0.
bool x_bound_holds(int n, int k);
bool x_bound_holds(const DTable& d, int n, int k);

/// p^2 - q^2 y for the comparison made by x_bound_holds (the squared slack
/// when p >= 0).
BigRational x_bound_squared_gap(const DTable& d, int n, int k);

/// Quadratic identity linking d^2 - d d to f_{n,k}, and disc(f_{n,k}) = y;
/// needs n >= 2k + 3, k >= 1.
bool f_identity_holds(int n, int k);
bool f_identity_holds(const DTable& d, int n, int k);

enum class Family { thagomizer, k2n };
std::string_view to_string(Family f);
/// Throws DomainError on an unknown name.
Family parse_family(std::string_view name);

struct LogConcavityVerdict {
  bool log_concave = false;
  bool no_internal_zeros = false;
};

LogConcavityVerdict coefficient_verdict(const std::vector<BigInt>& a);
/// Verdict for Q_{T_n} or Q_{K_{2,n}}; n >= 1.
LogConcavityVerdict logconcavity_verdict(Family family, int n);

/// The integer inequality left over for Q_{K_{2,n}}; n >= 1.
bool corollary_inequality_holds(int n);

}  // namespace thagq
