#include "thagq/partitions.hpp"

#include "thagq/errors.hpp"

#include <functional>
#include <numeric>

namespace thagq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw DomainError("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_runs(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> parts;
  for (auto [value, mult] : runs) {
    if (mult < 0) throw DomainError("negative multiplicity in partition run");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
  }
  return Partition(std::move(parts));
}

int Partition::row(int r) const {
  if (r < 1 || r > length()) return 0;
  return parts_[static_cast<std::size_t>(r - 1)];
}

bool Partition::contains_cell(int r, int c) const { return r >= 1 && c >= 1 && c <= row(r); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 1; c <= row(1); ++c) {
    int len = 0;
    while (row(len + 1) >= c) ++len;
    out.push_back(len);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

int hook_length(const Partition& lambda, int row, int col) {
  if (!lambda.contains_cell(row, col))
    throw DomainError("cell (" + std::to_string(row) + "," + std::to_string(col) +
                      ") is outside " + lambda.to_string());
  int arm = lambda.row(row) - col;
  int leg = 0;
  while (lambda.row(row + leg + 1) >= col) ++leg;
  return arm + leg + 1;
}

BigInt syt_count(const Partition& lambda) {
  BigInt hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) hooks *= hook_length(lambda, r, c);
  BigInt n_fact = factorial(static_cast<unsigned long>(lambda.size()));
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n_fact.get_mpz_t(), hooks.get_mpz_t());
  return q;
}

BigInt dim_two_column(int n, int k, int i) {
  if (k < 0 || i < 0 || i > n - 2 * k)
    throw DomainError("dim_two_column: need 0 <= k and 0 <= i <= n - 2k");
  BigInt num = BigInt(n - 2 * k - i + 1) * factorial(static_cast<unsigned long>(n - i));
  BigInt den = factorial(static_cast<unsigned long>(k)) *
               factorial(static_cast<unsigned long>(n - k - i + 1));
  if (num % den != 0) throw ConsistencyError("dim_two_column is not integral");
  return num / den;
}

BigInt dim_three_column(int n, int i, int j) {
  if (i < 0 || j < 0 || 3 * i + 2 * j > n)
    throw DomainError("dim_three_column: need i, j >= 0 and 3i + 2j <= n");
  BigInt num = BigInt(j + 1) * (n - 3 * i - j + 2) * (n - 3 * i - 2 * j + 1) *
               factorial(static_cast<unsigned long>(n));
  BigInt den = factorial(static_cast<unsigned long>(i)) *
               factorial(static_cast<unsigned long>(i + j + 1)) *
               factorial(static_cast<unsigned long>(n - 2 * i - j + 2));
  if (num % den != 0) throw ConsistencyError("dim_three_column is not integral");
  return num / den;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest part first at every level yields reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace thagq
