#include "thagq/unipoly.hpp"

#include "thagq/errors.hpp"

#include <algorithm>

namespace thagq {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const BigRational& c) { return monomial(c, 0); }

UniPoly UniPoly::monomial(const BigRational& c, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent in monomial");
  UniPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, BigRational(0));
  p.coeffs_.back() = c;
  return p;
}

UniPoly UniPoly::from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<BigRational> q;
  q.reserve(coeffs.size());
  for (const auto& c : coeffs) q.emplace_back(c);
  return UniPoly(std::move(q));
}

int UniPoly::degree() const {
  return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
}

BigRational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool UniPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigRational& c) { return c.get_den() == 1; });
}

std::vector<BigInt> UniPoly::integer_coeffs() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].get_den() != 1)
      throw ConsistencyError("non-integral coefficient " + coeffs_[k].get_str() + " at t^" +
                             std::to_string(k));
    out.push_back(coeffs_[k].get_num());
  }
  return out;
}

BigRational UniPoly::evaluate(const BigRational& t) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw DomainError("negative shift");
  if (is_zero()) return {};
  UniPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(k), BigRational(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  UniPoly r;
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1) && k > 0;
    if (!unit) s += mag.get_str();
    if (k > 0) {
      if (!unit) s += "*";
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace thagq
