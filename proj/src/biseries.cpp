#include "thagq/biseries.hpp"

#include "thagq/errors.hpp"

#include <algorithm>

namespace thagq {

BiSeries::BiSeries(int order) {
  if (order < 0) throw DomainError("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

BiSeries::BiSeries(int order, std::vector<UniPoly> coeffs) : BiSeries(order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

const UniPoly& BiSeries::coeff(int i) const {
  if (i < 0 || i > order()) throw DomainError("series coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(i)];
}

void BiSeries::set_coeff(int i, UniPoly p) {
  if (i < 0 || i > order()) throw DomainError("series coefficient beyond truncation order");
  coeffs_[static_cast<std::size_t>(i)] = std::move(p);
}

BiSeries BiSeries::truncated(int order) const {
  if (order > this->order()) throw DomainError("cannot extend a truncated series");
  return BiSeries(order, std::vector<UniPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

BiSeries BiSeries::divided_by_u() const {
  if (!coeffs_[0].is_zero())
    throw ConsistencyError("series is not divisible by u: constant coefficient " +
                           coeffs_[0].to_string());
  if (order() == 0) throw DomainError("dividing an order-0 series by u leaves nothing");
  return BiSeries(order() - 1, std::vector<UniPoly>(coeffs_.begin() + 1, coeffs_.end()));
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  int n = std::min(a.order(), b.order());
  BiSeries r(n);
  for (int m = 0; m <= n; ++m) {
    UniPoly acc;
    for (int i = 0; i <= m; ++i) {
      const UniPoly& x = a.coeff(i);
      const UniPoly& y = b.coeff(m - i);
      if (x.is_zero() || y.is_zero()) continue;
      acc += x * y;
    }
    r.set_coeff(m, std::move(acc));
  }
  return r;
}

BiSeries operator*(const BiSeries& a, const BigRational& c) {
  BiSeries r = a;
  for (int i = 0; i <= r.order(); ++i) r.set_coeff(i, a.coeff(i) * c);
  return r;
}

BiSeries series_divide(const BiSeries& a, const BiSeries& b) {
  const UniPoly& b0 = b.coeff(0);
  if (b0.degree() != 0)
    throw DomainError("series divisor must have a nonzero constant u^0 coefficient");
  BigRational inv = 1 / b0.coeff(0);
  int n = std::min(a.order(), b.order());
  BiSeries q(n);
  for (int m = 0; m <= n; ++m) {
    UniPoly acc = a.coeff(m);
    for (int i = 1; i <= m; ++i) {
      const UniPoly& bi = b.coeff(i);
      const UniPoly& qj = q.coeff(m - i);
      if (bi.is_zero() || qj.is_zero()) continue;
      acc -= bi * qj;
    }
    q.set_coeff(m, acc * inv);
  }
  return q;
}

BiSeries series_sqrt(const BiSeries& s) {
  if (!(s.coeff(0) == UniPoly{1}))
    throw DomainError("series_sqrt needs constant coefficient 1, got " + s.coeff(0).to_string());
  const BigRational half(1, 2);
  int n = s.order();
  BiSeries r(n);
  r.set_coeff(0, UniPoly{1});
  // From r*r = s: 2 r_m = s_m - sum_{i=1}^{m-1} r_i r_{m-i}.
  for (int m = 1; m <= n; ++m) {
    UniPoly acc = s.coeff(m);
    for (int i = 1; i < m; ++i) {
      const UniPoly& x = r.coeff(i);
      const UniPoly& y = r.coeff(m - i);
      if (x.is_zero() || y.is_zero()) continue;
      acc -= x * y;
    }
    r.set_coeff(m, acc * half);
  }
  return r;
}

}  // namespace thagq
