#include "thagq/schur.hpp"

#include "thagq/errors.hpp"

#include <algorithm>
#include <functional>

namespace thagq {

SchurSum::SchurSum(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("negative SchurSum degree");
}

SchurSum SchurSum::single(const Partition& lambda, const BigInt& coeff) {
  SchurSum s(lambda.size());
  s.add(lambda, coeff);
  return s;
}

BigInt SchurSum::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurSum::add(const Partition& lambda, const BigInt& c) {
  if (lambda.size() != degree_)
    throw DomainError("partition " + lambda.to_string() + " does not have size " +
                      std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SchurSum::all_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return sgn(kv.second) >= 0; });
}

void SchurSum::require_degree(const SchurSum& o) const {
  if (o.degree_ != degree_)
    throw DomainError("SchurSum degree mismatch: " + std::to_string(degree_) + " vs " +
                      std::to_string(o.degree_));
}

SchurSum& SchurSum::operator+=(const SchurSum& o) {
  require_degree(o);
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

SchurSum& SchurSum::operator-=(const SchurSum& o) {
  require_degree(o);
  for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
  return *this;
}

SchurSum& SchurSum::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, v] : terms_) v *= c;
  return *this;
}

SchurSum SchurSum::operator-() const {
  SchurSum r = *this;
  for (auto& [lambda, v] : r.terms_) v = -v;
  return r;
}

std::string SchurSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "s" + lambda.to_string();
  }
  return out;
}

std::vector<Partition> vertical_strips(const Partition& lambda, int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  const int rows = lambda.length() + size;
  std::vector<int> mu(static_cast<std::size_t>(rows));
  // Each row gains at most one box; rows are visited top to bottom.
  std::function<void(int, int)> rec = [&](int r, int remaining) {
    if (remaining == 0) {
      for (int q = r; q < rows; ++q) mu[static_cast<std::size_t>(q)] = lambda.row(q + 1);
      std::vector<int> parts;
      for (int v : mu)
        if (v > 0) parts.push_back(v);
      out.emplace_back(std::move(parts));
      return;
    }
    if (rows - r < remaining) return;
    const int base = lambda.row(r + 1);
    const int cap = r == 0 ? base + 1 : mu[static_cast<std::size_t>(r - 1)];
    if (base + 1 <= cap) {
      mu[static_cast<std::size_t>(r)] = base + 1;
      rec(r + 1, remaining - 1);
    }
    if (base > 0) {
      mu[static_cast<std::size_t>(r)] = base;
      rec(r + 1, remaining);
    }
  };
  rec(0, size);
  std::sort(out.begin(), out.end(), RevLex{});
  return out;
}

std::vector<Partition> horizontal_strips(const Partition& lambda, int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  const int rows = lambda.length() + 1;
  std::vector<int> mu(static_cast<std::size_t>(rows));
  // Row r (1-based, r >= 2) may grow up to lambda_{r-1}; row 1 is unbounded.
  std::function<void(int, int)> rec = [&](int r, int remaining) {
    if (r == rows) {
      if (remaining != 0) return;
      std::vector<int> parts;
      for (int v : mu)
        if (v > 0) parts.push_back(v);
      out.emplace_back(std::move(parts));
      return;
    }
    const int base = lambda.row(r + 1);
    const int room = r == 0 ? remaining : std::min(remaining, lambda.row(r) - base);
    for (int add = room; add >= 0; --add) {
      mu[static_cast<std::size_t>(r)] = base + add;
      rec(r + 1, remaining - add);
    }
  };
  rec(0, size);
  std::sort(out.begin(), out.end(), RevLex{});
  return out;
}

namespace {

template <typename Strips>
SchurSum pieri(int i, const SchurSum& s, Strips strips) {
  if (i < 0) throw DomainError("Pieri multiplication by a negative degree");
  SchurSum out(s.degree() + i);
  for (const auto& [lambda, c] : s.terms())
    for (const auto& mu : strips(lambda, i)) out.add(mu, c);
  return out;
}

}  // namespace

SchurSum pieri_e(int i, const SchurSum& s) { return pieri(i, s, vertical_strips); }

SchurSum pieri_h(int i, const SchurSum& s) { return pieri(i, s, horizontal_strips); }

SchurSum e_plethysm_times(int n, int m, const SchurSum& s) {
  if (n < 0) throw DomainError("e_plethysm_times: negative degree");
  if (m < 0) throw DomainError("e_plethysm_times: negative multiplicity");
  // level[d] = e_d[cX] * s after c rounds of e_n[(c+1)X] = sum_j e_j e_{n-j}[cX].
  std::vector<SchurSum> level;
  level.reserve(static_cast<std::size_t>(n) + 1);
  level.push_back(s);
  for (int d = 1; d <= n; ++d) level.emplace_back(s.degree() + d);
  for (int c = 1; c <= m; ++c) {
    std::vector<SchurSum> next;
    next.reserve(level.size());
    for (int d = 0; d <= n; ++d) {
      SchurSum acc(s.degree() + d);
      for (int j = 0; j <= d; ++j) {
        const SchurSum& prev = level[static_cast<std::size_t>(d - j)];
        if (!prev.is_zero()) acc += pieri_e(j, prev);
      }
      next.push_back(std::move(acc));
    }
    level = std::move(next);
  }
  return level[static_cast<std::size_t>(n)];
}

SchurSum e_plethysm_mX(int n, int m) {
  if (m < 1) throw DomainError("e_plethysm_mX needs m >= 1");
  return e_plethysm_times(n, m, SchurSum::single(Partition{}));
}

BigInt dimension_of(const SchurSum& s) {
  BigInt total = 0;
  for (const auto& [lambda, c] : s.terms()) total += c * syt_count(lambda);
  return total;
}

}  // namespace thagq
