#include "thagq/errors.hpp"
#include "thagq/schur.hpp"

#include <doctest.h>

#include <set>

using namespace thagq;

namespace {

SchurSum s(std::initializer_list<int> parts, long c = 1) { return SchurSum::single(Partition(parts), c); }
SchurSum empty() { return SchurSum::single(Partition{}); }

bool contains(const Partition& mu, const Partition& lambda) {
  for (int r = 1; r <= lambda.length(); ++r)
    if (mu.row(r) < lambda.row(r)) return false;
  return true;
}

// All mu of the right size that contain lambda and differ by at most one
// cell per row (vertical) or per column (horizontal).
std::set<std::vector<int>> strips_by_filter(const Partition& lambda, int i, bool vertical) {
  std::set<std::vector<int>> out;
  for (const auto& mu : partitions_of(lambda.size() + i)) {
    if (!contains(mu, lambda)) continue;
    bool ok = true;
    for (int r = 1; r <= mu.length() && ok; ++r)
      ok = vertical ? mu.row(r) - lambda.row(r) <= 1 : mu.row(r + 1) <= lambda.row(r);
    if (ok) out.insert(mu.parts());
  }
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<Partition>& v) {
  std::set<std::vector<int>> out;
  for (const auto& p : v) out.insert(p.parts());
  return out;
}

// s_lambda(1, ..., 1) with N ones: product over cells of (N + col - row) / hook.
BigRational principal(const Partition& lambda, int N) {
  BigRational v = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) v *= make_rational(N + c - r, hook_length(lambda, r, c));
  return v;
}

BigRational principal(const SchurSum& x, int N) {
  BigRational v = 0;
  for (const auto& [lambda, c] : x.terms()) v += BigRational(c) * principal(lambda, N);
  return v;
}

}  // namespace

TEST_CASE("Pieri examples") {
  CHECK(pieri_e(1, s({1})) == s({2}) + s({1, 1}));
  CHECK(pieri_e(3, empty()) == s({1, 1, 1}));
  CHECK(pieri_e(2, s({2})) == s({3, 1}) + s({2, 1, 1}));
  CHECK(pieri_h(0, s({2, 1})) == s({2, 1}));
  CHECK(pieri_h(1, s({1})) == s({2}) + s({1, 1}));
  CHECK(pieri_h(2, s({2})) == s({4}) + s({3, 1}) + s({2, 2}));
  CHECK_THROWS_AS(pieri_e(-1, s({1})), DomainError);
}

TEST_CASE("strip enumeration matches a filter over all partitions") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int i = 0; i <= 4; ++i) {
        CHECK(as_set(vertical_strips(lambda, i)) == strips_by_filter(lambda, i, true));
        CHECK(as_set(horizontal_strips(lambda, i)) == strips_by_filter(lambda, i, false));
        const SchurSum e = pieri_e(i, SchurSum::single(lambda));
        const SchurSum h = pieri_h(i, SchurSum::single(lambda));
        for (const auto& [mu, c] : e.terms()) CHECK(c == 1);
        for (const auto& [mu, c] : h.terms()) CHECK(c == 1);
      }
}

TEST_CASE("Pieri products agree under the principal specialization") {
  // e_i(1^N) = C(N, i) and h_i(1^N) = C(N + i - 1, i).
  const int N = 7;
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (int i = 0; i <= 4; ++i) {
        SchurSum x = SchurSum::single(lambda);
        BigRational base = principal(lambda, N);
        CHECK(principal(pieri_e(i, x), N) == BigRational(binomial(N, i)) * base);
        CHECK(principal(pieri_h(i, x), N) == BigRational(binomial(N + i - 1, i)) * base);
      }
}

TEST_CASE("e_n[mX]") {
  CHECK(e_plethysm_mX(4, 1) == s({1, 1, 1, 1}));
  CHECK(e_plethysm_mX(1, 3) == s({1}, 3));
  CHECK(e_plethysm_mX(2, 2) == s({2}) + s({1, 1}, 3));
  CHECK(e_plethysm_mX(0, 3) == empty());
  CHECK_THROWS_AS(e_plethysm_mX(2, 0), DomainError);
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 7; ++n) {
      SchurSum e = e_plethysm_mX(n, m);
      // Dimension m^n, and e_n[mX](1^N) = e_n(1^{mN}) = C(mN, n).
      BigInt mn;
      mpz_ui_pow_ui(mn.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
      CHECK(dimension_of(e) == mn);
      CHECK(principal(e, 4) == BigRational(binomial(4 * m, n)));
      CHECK(e_plethysm_times(n, m, s({2, 1})).degree() == n + 3);
    }
}

TEST_CASE("dimension_of") {
  CHECK(dimension_of(empty()) == 1);
  CHECK(dimension_of(s({2}) + s({1, 1}, 3)) == 4);
  CHECK(dimension_of(s({3, 1}, 2) - s({2, 2})) == 4);
}

TEST_CASE("SchurSum bookkeeping") {
  SchurSum x = s({2}) - s({2});
  CHECK(x.is_zero());
  CHECK(x == SchurSum(2));
  CHECK_THROWS_AS(s({2}) + s({1}), DomainError);
  SchurSum y(3);
  CHECK_THROWS_AS(y.add(Partition({2}), 1), DomainError);
  CHECK((s({2}) + s({1, 1}, 3)).to_string() == "s(2) + 3*s(1,1)");
  CHECK((s({2}) * 0).is_zero());
  CHECK_FALSE((s({2}) - s({1, 1})).all_nonnegative());
}

TEST_CASE("alternating strip identity, m <= 10 and 1 <= k <= 6") {
  for (int m = 0; m <= 10; ++m)
    for (int k = 1; k <= 6; ++k) {
      SchurSum lhs(m + 2 * k);
      for (int j = 0; j <= m; ++j) {
        SchurSum term = pieri_e(m - j, SchurSum::single(Partition::from_runs({{j + 2, 1}, {2, k - 1}})));
        if (j % 2 == 0) lhs += term;
        else lhs -= term;
      }
      CHECK(lhs == SchurSum::single(Partition::from_runs({{2, k}, {1, m}})));
    }
}

TEST_CASE("two-column induction identity, n <= 16") {
  for (int n = 0; n <= 16; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      SchurSum lhs(n), rhs(n);
      for (int i = 0; i <= n - 2 * k; ++i)
        lhs += pieri_e(i, SchurSum::single(Partition::from_runs({{2, k}, {1, n - 2 * k - i}})));
      for (int i = 0; i <= k; ++i)
        for (int j = k - i; 3 * i + 2 * j <= n; ++j)
          rhs.add(Partition::from_runs({{3, i}, {2, j}, {1, n - 3 * i - 2 * j}}), n - 3 * i - 2 * j + 1);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("alternating e/h convolution vanishes") {
  for (int n = 1; n <= 12; ++n) {
    SchurSum total(n);
    for (int j = 0; j <= n; ++j) {
      SchurSum term = pieri_e(j, pieri_h(n - j, empty()));
      if (j % 2 == 0) total += term;
      else total -= term;
    }
    CHECK(total.is_zero());
  }
}
