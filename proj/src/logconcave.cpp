#include "thagq/logconcave.hpp"

#include "thagq/errors.hpp"
#include "thagq/klpoly.hpp"

namespace thagq {

BigInt d_coeff(int n, int k) {
  if (k < 0 || 2 * k > n) return 0;
  // sum_{m=0}^{n-2k} (n - 2k - m + 1) * C(n - k + 1, m), with i = m + 2k.
  const long top = n - k + 1;
  BigInt binom = 1;
  BigInt sum = 0;
  for (long m = 0; m <= n - 2 * k; ++m) {
    sum += binom * (n - 2 * k - m + 1);
    binom *= top - m;
    binom /= m + 1;
  }
  return sum;
}

DTable::DTable(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw DomainError("DTable needs max_n >= 0");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; 2 * k <= n; ++k) rows_[static_cast<std::size_t>(n)].push_back(d_coeff(n, k));
}

BigInt DTable::operator()(int n, int k) const {
  if (n > max_n_) throw DomainError("DTable lookup past max_n = " + std::to_string(max_n_));
  if (n < 0 || k < 0 || 2 * k > n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigRational b_coeff(int n, int k) { return make_rational(binomial(n + 1, k), n + 1); }

DecompCell decomposition(int n, int k) {
  if (n < 0) throw DomainError("decomposition needs n >= 0");
  return decomposition(n, k, q_closed(n));
}

DecompCell decomposition(int n, int k, const UniPoly& q_tn) {
  if (n < 0) throw DomainError("decomposition needs n >= 0");
  DecompCell cell;
  cell.n = n;
  cell.k = k;
  cell.d = d_coeff(n, k);
  cell.b = k < 0 ? BigRational(0) : b_coeff(n, k);
  BigRational c = q_tn.coeff(k);
  if (c.get_den() != 1) throw ConsistencyError("non-integral c_{n,k}");
  cell.c = c.get_num();
  if (BigRational(cell.c) != cell.b * BigRational(cell.d))
    throw ConsistencyError("c != b * d at (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return cell;
}

BigInt y_value(int n, int k) {
  const BigInt N = n;
  const BigInt K = k;
  BigInt a = 4 * N * N + (4 - 12 * K) * N + 9 * K * K - 5 * K;
  BigInt b = 4 * N * N * N * N + (28 - 36 * K) * N * N * N + (60 - 149 * K + 117 * K * K) * N * N +
             (36 - 174 * K + 276 * K * K - 162 * K * K * K) * N + 81 * K * K * K * K -
             171 * K * K * K + 135 * K * K - 45 * K;
  return a * b;
}

namespace {

void require_bound_range(int n, int k, const char* what) {
  if (k < 1 || n < 2 * k + 1)
    throw DomainError(std::string(what) + " needs k >= 1 and n >= 2k + 1, got (" + std::to_string(n) +
                      ", " + std::to_string(k) + ")");
}

void require_identity_range(int n, int k) {
  if (k < 1 || n < 2 * k + 3)
    throw DomainError("f_identity_holds needs k >= 1 and n >= 2k + 3, got (" + std::to_string(n) + ", " +
                      std::to_string(k) + ")");
}

}  // namespace

BoundData bound_data(int n, int k) {
  require_bound_range(n, k, "bound_data");
  BoundData bd;
  bd.n = n;
  bd.k = k;
  bd.y = y_value(n, k);
  if (sgn(bd.y) <= 0)
    throw ConsistencyError("y(n,k) <= 0 at (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  const long p = 2L * n - 3L * k + 3;
  const long q = 2L * n - 3L * k;
  const long r = static_cast<long>(n) - 2L * k;
  bd.x_rational_part = (3 + make_rational(k - 1, p) + make_rational(k + 3, r) - make_rational(k + 2, q)) / 2;
  bd.x_radical_scale = make_rational(1, BigInt(2) * p * q * r);
  return bd;
}

FQuadratic f_quadratic(int n, int k) {
  const BigInt N = n;
  const BigInt K = k;
  FQuadratic f;
  f.a = (2 * N - 3 * K + 3) * (2 * N - 3 * K) * (N - 2 * K);
  f.b = 45 * K * K * K - (87 * N + 60) * K * K + (56 * N * N + 75 * N + 15) * K - 12 * N * (N + 1) * (N + 1);
  f.c = -2 * (9 * K * K * K - 3 * (7 * N + 5) * K * K + (16 * N * N + 21 * N + 5) * K - 4 * N * (N + 1) * (N + 1));
  return f;
}

bool d_recurrences_hold(int n, int k) { return d_recurrences_hold(DTable(n + 1), n, k); }

bool d_recurrences_hold(const DTable& d, int n, int k) {
  require_bound_range(n, k, "d_recurrences_hold");
  const BigInt N = n;
  const BigInt K = k;
  const BigInt dm = d(n - 1, k);
  const BigInt d0 = d(n, k);
  bool up = (N - 2 * K + 1) * d(n + 1, k) == -2 * (N - K + 1) * dm + (3 * N - 5 * K + 4) * d0;
  bool down = (N - 2 * K + 1) * d(n - 1, k - 1) == -2 * (N - K + 1) * dm + (2 * N - 3 * K + 3) * d0;
  bool side = 2 * K * (N - K) * d(n - 1, k + 1) ==
              (4 * N * N + (4 - 13 * K) * N + 11 * K * K - 5 * K) * dm - (2 * N * N - 7 * N * K + 6 * K * K) * d0;
  return up && down && side;
}

bool x_bound_holds(int n, int k) { return x_bound_holds(DTable(n), n, k); }

bool x_bound_holds(const DTable& d, int n, int k) {
  BoundData bd = bound_data(n, k);
  const BigRational prev(d(n - 1, k));
  BigRational p = BigRational(d(n, k)) - bd.x_rational_part * prev;
  BigRational q = bd.x_radical_scale * prev;
  return geq_with_radical(p, q, BigRational(bd.y));
}

BigRational x_bound_squared_gap(const DTable& d, int n, int k) {
  BoundData bd = bound_data(n, k);
  const BigRational prev(d(n - 1, k));
  BigRational p = BigRational(d(n, k)) - bd.x_rational_part * prev;
  BigRational q = bd.x_radical_scale * prev;
  return p * p - q * q * bd.y;
}

bool f_identity_holds(int n, int k) { return f_identity_holds(DTable(n), n, k); }

bool f_identity_holds(const DTable& d, int n, int k) {
  require_identity_range(n, k);
  const BigInt dm = d(n - 1, k);
  if (dm == 0) throw ConsistencyError("d_{n-1,k} vanishes inside its support");
  BigInt lhs = BigInt(2) * k * (n - k) * (n - 2 * k + 1) * (dm * dm - d(n - 1, k + 1) * d(n - 1, k - 1));
  FQuadratic f = f_quadratic(n, k);
  BigRational x = make_rational(d(n, k), dm);
  BigRational rhs = BigRational(dm * dm) * (BigRational(f.a) * x * x + BigRational(f.b) * x + BigRational(f.c));
  bool identity = rhs == BigRational(lhs);
  bool discriminant = f.b * f.b - 4 * f.a * f.c == y_value(n, k);
  return identity && discriminant;
}

std::string_view to_string(Family f) { return f == Family::thagomizer ? "thagomizer" : "k2n"; }

Family parse_family(std::string_view name) {
  if (name == "thagomizer") return Family::thagomizer;
  if (name == "k2n") return Family::k2n;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

LogConcavityVerdict coefficient_verdict(const std::vector<BigInt>& a) {
  LogConcavityVerdict v;
  v.log_concave = true;
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) v.log_concave = false;
  v.no_internal_zeros = true;
  std::size_t first = a.size(), last = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) {
      if (first == a.size()) first = i;
      last = i;
    }
  for (std::size_t i = first; i < last; ++i)
    if (a[i] == 0) v.no_internal_zeros = false;
  return v;
}

LogConcavityVerdict logconcavity_verdict(Family family, int n) {
  if (n < 1) throw DomainError("logconcavity_verdict needs n >= 1");
  UniPoly q = family == Family::thagomizer ? q_closed(n) : q_k2n(n);
  return coefficient_verdict(q.integer_coeffs());
}

bool corollary_inequality_holds(int n) {
  if (n < 1) throw DomainError("corollary_inequality_holds needs n >= 1");
  const BigInt N = n;
  const BigInt p = pow2(static_cast<unsigned long>(n));
  const BigInt half = pow2(static_cast<unsigned long>(n - 1));
  BigInt first = p * (N - 5) + 4 * (N + 1);
  BigInt lhs = 3 * N * first * first;
  BigInt rhs = 4 * (N - 1) * (half * (N - 2) + N) * (p * (N - 8) + 4 * N * (N - 1) + 16);
  return lhs - rhs >= 0;
}

}  // namespace thagq
