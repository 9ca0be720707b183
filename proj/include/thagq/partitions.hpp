#pragma once

#include "thagq/exactmath.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace thagq {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
public:
  Partition() = default;
  /// Throws DomainError unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Builds (a1^m1, a2^m2, ...) from (value, multiplicity) runs. Runs with
  /// multiplicity 0 are dropped; negative multiplicities are a DomainError.
  static Partition from_runs(std::initializer_list<std::pair<int, int>> runs);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Row length, 1-based; 0 past the last row.
  int row(int r) const;
  bool contains_cell(int row, int col) const;
  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; reverse of this is the serialization order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Orders partitions reverse-lexicographically: (3) before (2,1) before (1,1,1).
struct RevLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// arm + leg + 1 for the cell (row, col), 1-based.
int hook_length(const Partition& lambda, int row, int col);

/// Number of standard Young tableaux, by the hook-length formula.
BigInt syt_count(const Partition& lambda);

/// dim V_(2^k, 1^(n-2k-i)) from its closed form.
BigInt dim_two_column(int n, int k, int i);

/// dim V_(3^i, 2^j, 1^(n-3i-2j)) from its closed form.
BigInt dim_three_column(int n, int i, int j);

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace thagq
