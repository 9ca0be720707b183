#include "thagq/equivariant.hpp"

#include "thagq/errors.hpp"

namespace thagq {

GradedSchur::GradedSchur(int n) : n_(n) {
  if (n < 0) throw DomainError("GradedSchur needs n >= 0");
}

SchurSum GradedSchur::at(int k) const {
  auto it = by_degree_.find(k);
  return it == by_degree_.end() ? SchurSum(n_) : it->second;
}

void GradedSchur::add(int k, const SchurSum& s) {
  if (k < 0) throw DomainError("negative t-exponent");
  if (s.degree() != n_) throw DomainError("GradedSchur coefficient has the wrong degree");
  if (s.is_zero()) return;
  auto [it, inserted] = by_degree_.try_emplace(k, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) by_degree_.erase(it);
  }
}

int GradedSchur::max_t_degree() const {
  return by_degree_.empty() ? UniPoly::kMinusInfinity : by_degree_.rbegin()->first;
}

bool GradedSchur::all_nonnegative() const {
  for (const auto& [k, s] : by_degree_)
    if (!s.all_nonnegative()) return false;
  return true;
}

namespace {

void require_n(int n) {
  if (n < 0) throw DomainError("n must be nonnegative");
}

}  // namespace

GradedSchur q_equi_explicit(int n) {
  require_n(n);
  GradedSchur g(n);
  for (int k = 0; k <= n / 2; ++k) {
    SchurSum s(n);
    for (int i = 0; i <= k; ++i)
      for (int j = k - i; 3 * i + 2 * j <= n; ++j)
        s.add(Partition::from_runs({{3, i}, {2, j}, {1, n - 3 * i - 2 * j}}), n - 3 * i - 2 * j + 1);
    g.add(k, s);
  }
  return g;
}

GradedSchur q_equi_induction(int n) {
  require_n(n);
  GradedSchur g(n);
  for (int k = 0; k <= n / 2; ++k) {
    SchurSum s(n);
    for (int i = 0; i <= n - 2 * k; ++i)
      s += pieri_e(i, SchurSum::single(Partition::from_runs({{2, k}, {1, n - 2 * k - i}})));
    g.add(k, s);
  }
  return g;
}

GradedSchur q_equi_e2x(int n) {
  require_n(n);
  GradedSchur g(n);
  g.add(0, e_plethysm_mX(n, 2));
  for (int k = 1; k <= n / 2; ++k) {
    SchurSum s(n);
    for (int j = 0; j <= n - 2 * k; ++j) {
      SchurSum term =
          e_plethysm_times(n - 2 * k - j, 2, SchurSum::single(Partition::from_runs({{j + 2, 1}, {2, k - 1}})));
      if (j % 2 == 0)
        s += term;
      else
        s -= term;
    }
    g.add(k, s);
  }
  return g;
}

GradedSchur p_equi(int n) {
  require_n(n);
  GradedSchur g(n);
  if (n == 0) {
    g.add(0, SchurSum::single(Partition{}));
    return g;
  }
  g.add(0, SchurSum::single(Partition{n}));
  for (int j = 2; j <= n; ++j)
    for (int k = 0; k <= j / 2 - 1; ++k) {
      // (j-2k, 2^k): j - 2k >= 2 always holds within these bounds.
      SchurSum shape = SchurSum::single(Partition::from_runs({{j - 2 * k, 1}, {2, k}}));
      g.add(k + 1, pieri_h(n - j, shape));
    }
  return g;
}

GradedSchur q_from_p(int n) {
  require_n(n);
  GradedSchur g(n);
  for (int i = 0; i <= n; ++i) {
    GradedSchur p = p_equi(i);
    for (const auto& [k, piece] : p.by_degree()) {
      SchurSum term = e_plethysm_times(n - i, 3, piece);
      g.add(k, i % 2 == 0 ? term : -term);
    }
  }
  return g;
}

UniPoly graded_dimension(const GradedSchur& g) {
  std::vector<BigRational> coeffs;
  for (const auto& [k, s] : g.by_degree()) {
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1, 0);
    coeffs[static_cast<std::size_t>(k)] = BigRational(dimension_of(s));
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace thagq
