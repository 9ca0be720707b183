#include "thagq/errors.hpp"
#include "thagq/klpoly.hpp"
#include "thagq/logconcave.hpp"

#include <doctest.h>

using namespace thagq;

namespace {

// d_{n,k} straight from its defining sum.
BigInt d_direct(int n, int k) {
  if (k < 0 || 2 * k > n) return 0;
  BigInt d = 0;
  for (int m = 0; m <= n - 2 * k; ++m) d += BigInt(n - 2 * k - m + 1) * binomial(n - k + 1, m);
  return d;
}

}  // namespace

TEST_CASE("d values") {
  CHECK(d_coeff(2, 1) == 1);
  CHECK(d_coeff(3, 1) == 5);
  CHECK(d_coeff(4, 1) == 17);
  CHECK(d_coeff(2, 0) == 12);
  CHECK(d_coeff(3, 2) == 0);
  CHECK(d_coeff(3, -1) == 0);
  DTable table(60);
  for (int n = 0; n <= 60; ++n)
    for (int k = -1; k <= n / 2 + 1; ++k) {
      CHECK(d_coeff(n, k) == d_direct(n, k));
      CHECK(table(n, k) == d_direct(n, k));
    }
  CHECK_THROWS_AS(table(61, 1), DomainError);
}

TEST_CASE("c = b * d") {
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      DecompCell cell = decomposition(n, k);
      CHECK(BigRational(cell.c) == q_closed(n).coeff(k));
      CHECK(cell.b == make_rational(binomial(n + 1, k), n + 1));
      CHECK(cell.d == d_direct(n, k));
    }
  CHECK_THROWS_AS(decomposition(4, 1, UniPoly{16, 18, 2}), ConsistencyError);
}

TEST_CASE("bound data at the first base case") {
  BoundData bd = bound_data(3, 1);
  CHECK(bd.y == 4608);
  CHECK(bd.x_rational_part == 3);
  CHECK(bd.x_radical_scale == make_rational(1, 36));
  CHECK_THROWS_AS(bound_data(2, 1), DomainError);
  CHECK_THROWS_AS(bound_data(5, 0), DomainError);
}

TEST_CASE("d recurrences, checked against the defining sum") {
  for (int n = 3; n <= 60; ++n)
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      const BigInt N = n, K = k;
      CHECK((N - 2 * K + 1) * d_direct(n + 1, k) ==
            -2 * (N - K + 1) * d_direct(n - 1, k) + (3 * N - 5 * K + 4) * d_direct(n, k));
      CHECK(d_recurrences_hold(n, k));
    }
  CHECK_THROWS_AS(d_recurrences_hold(4, 2), DomainError);
}

TEST_CASE("x bound and its base-case slack") {
  DTable d(80);
  for (int n = 3; n <= 80; ++n)
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      CHECK(y_value(n, k) > 0);
      CHECK(x_bound_holds(d, n, k));
    }
  // At n = 2k+1 the squared slack is 16k(k+1)(k+2)(k+5) / (2(k+2)(k+5))^2.
  for (int k = 1; k <= 30; ++k) {
    const int n = 2 * k + 1;
    BoundData bd = bound_data(n, k);
    BigRational prev(d_direct(n - 1, k));
    BigRational p = BigRational(d_direct(n, k)) - bd.x_rational_part * prev;
    BigRational q = bd.x_radical_scale * prev;
    BigInt scale = BigInt(2) * (k + 2) * (k + 5);
    CHECK((p * p - q * q * bd.y) * BigRational(scale * scale) == BigRational(BigInt(16) * k * (k + 1) * (k + 2) * (k + 5)));
    CHECK(x_bound_squared_gap(d, n, k) == p * p - q * q * bd.y);
  }
  CHECK(x_bound_holds(3, 1));
}

TEST_CASE("f quadratic identity and discriminant") {
  FQuadratic f = f_quadratic(5, 1);
  CHECK(f.b * f.b - 4 * f.a * f.c == y_value(5, 1));
  for (int n = 5; n <= 60; ++n)
    for (int k = 1; 2 * k + 3 <= n; ++k) {
      CHECK(f_identity_holds(n, k));
      BigInt mid = d_direct(n - 1, k);
      CHECK(mid * mid >= d_direct(n - 1, k + 1) * d_direct(n - 1, k - 1));
    }
  CHECK_THROWS_AS(f_identity_holds(4, 1), DomainError);
}

TEST_CASE("coefficient verdicts") {
  auto v = [](std::vector<long> a) {
    std::vector<BigInt> b(a.begin(), a.end());
    return coefficient_verdict(b);
  };
  CHECK(v({1, 2, 1}).log_concave);
  CHECK(v({1, 2, 1}).no_internal_zeros);
  CHECK_FALSE(v({1, 1, 2}).log_concave);
  CHECK_FALSE(v({1, 0, 1}).log_concave);
  CHECK_FALSE(v({1, 0, 1}).no_internal_zeros);
  CHECK(v({0, 0, 3, 1}).no_internal_zeros);
  CHECK(v({}).log_concave);
  for (int n = 1; n <= 80; ++n) {
    for (Family f : {Family::thagomizer, Family::k2n}) {
      LogConcavityVerdict lv = logconcavity_verdict(f, n);
      CHECK(lv.log_concave);
      CHECK(lv.no_internal_zeros);
    }
  }
  CHECK_THROWS_AS(logconcavity_verdict(Family::k2n, 0), DomainError);
}

TEST_CASE("corollary inequality") {
  CHECK(corollary_inequality_holds(1));
  CHECK(corollary_inequality_holds(5));
  CHECK(corollary_inequality_holds(20));
  for (int n = 1; n <= 300; ++n) CHECK(corollary_inequality_holds(n));
  CHECK_THROWS_AS(corollary_inequality_holds(0), DomainError);
}

TEST_CASE("family names") {
  CHECK(parse_family("k2n") == Family::k2n);
  CHECK(to_string(Family::thagomizer) == "thagomizer");
  CHECK_THROWS_AS(parse_family("tree"), DomainError);
}
