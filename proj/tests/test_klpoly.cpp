#include "thagq/errors.hpp"
#include "thagq/klpoly.hpp"
#include "thagq/matroid_oracle.hpp"
#include "thagq/parallel.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace thagq;

TEST_CASE("initial values by every method") {
  const std::vector<UniPoly> expected{UniPoly{1}, UniPoly{2}, UniPoly{4, 1}, UniPoly{8, 5}, UniPoly{16, 17, 2}};
  for (KLMethod m : {KLMethod::closed, KLMethod::hook, KLMethod::recurrence, KLMethod::series}) {
    CAPTURE(to_string(m));
    CHECK(q_sequence(4, m) == expected);
  }
  for (int n = 0; n <= 4; ++n) {
    CHECK(q_closed(n) == expected[static_cast<std::size_t>(n)]);
    CHECK(q_hook(n) == expected[static_cast<std::size_t>(n)]);
  }
  CHECK(q_recurrence_seq(0) == std::vector<UniPoly>{UniPoly{1}});
  CHECK(q_recurrence_seq(1).size() == 2);
}

TEST_CASE("lattice-of-flats recursion agrees for n <= 5") {
  for (int n = 1; n <= 5; ++n) CHECK(q_kls(lattice_of_flats(build_family(Family::thagomizer, n))) == q_closed(n));
}

TEST_CASE("closed, hook, recurrence and series agree") {
  const int max_n = 80;
  std::vector<UniPoly> closed = q_sequence(max_n, KLMethod::closed);
  CHECK(q_sequence(max_n, KLMethod::hook) == closed);
  CHECK(q_recurrence_seq(max_n) == closed);
  std::vector<UniPoly> series = q_sequence(40, KLMethod::series);
  CHECK(series == std::vector<UniPoly>(closed.begin(), closed.begin() + 41));
}

TEST_CASE("closed form satisfies the order-3 recurrence") {
  // Evaluated directly on closed-form values rather than generated by it.
  for (int n = 0; n <= 40; ++n) {
    UniPoly lhs = q_closed(n + 3) * BigRational(n + 4);
    UniPoly rhs = UniPoly{-2, 7, 4} * q_closed(n) * BigRational(-(n + 1)) +
                  UniPoly{-5 * n - 11, 2 * n - 1} * q_closed(n + 1) + UniPoly{4 * n + 13, n + 4} * q_closed(n + 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("coefficient structure") {
  for (int n = 0; n <= 60; ++n) {
    UniPoly q = q_closed(n);
    CHECK(q.degree() == n / 2);
    for (const auto& c : q.coeffs()) {
      CHECK(c.get_den() == 1);
      CHECK(sgn(c) > 0);
    }
    // c_{n,k} = C(n+1,k)/(n+1) * sum_{m} (n-2k-m+1) C(n-k+1, m)
    for (int k = 0; k <= n / 2; ++k) {
      BigInt d = 0;
      for (int m = 0; m <= n - 2 * k; ++m) d += BigInt(n - 2 * k - m + 1) * binomial(n - k + 1, m);
      CHECK(q.coeff(k) == make_rational(binomial(n + 1, k) * d, n + 1));
    }
  }
}

TEST_CASE("generating functions") {
  BiSeries psi = psi_series(6);
  CHECK(psi.order() == 6);
  CHECK(psi.coeff(2) == (UniPoly{4, 1}));
  CHECK(psi.coeff(4) == (UniPoly{16, 17, 2}));
  BiSeries phi = phi_series(4);
  CHECK(phi.coeff(0).is_zero());
  std::vector<UniPoly> p = p_from_phi(3);
  CHECK(p[0] == UniPoly{1});
  CHECK(p[1] == UniPoly{1});
  CHECK(p[2] == (UniPoly{1, 1}));
  CHECK_THROWS_AS(psi_series(-1), DomainError);
}

TEST_CASE("P and Q binomial relation") {
  std::vector<UniPoly> q = q_sequence(40, KLMethod::closed);
  std::vector<UniPoly> p = p_from_phi(40);
  for (int n = 0; n <= 40; ++n) CHECK(pq_relation_check(n, q, p));
  CHECK(pq_relation_check(5));
  // A perturbed P must break it.
  std::vector<UniPoly> bad = p;
  bad[3] += UniPoly{1};
  CHECK_FALSE(pq_relation_check(3, q, bad));
  CHECK_THROWS_AS(pq_relation_check(50, q, p), DomainError);
}

TEST_CASE("K_{2,n}") {
  CHECK(q_k2n(1) == UniPoly{1});
  CHECK(q_k2n(3) == (UniPoly{7, 7}));
  for (int n = 1; n <= 4; ++n) CHECK(q_k2n(n) == q_kls(lattice_of_flats(build_family(Family::k2n, n))));
  CHECK_THROWS_AS(q_k2n(0), DomainError);
}

TEST_CASE("closed forms for the first three coefficients") {
  for (int n = 1; n <= 120; ++n)
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(small_k_closed_form(n, k) == q_closed(n).coeff(k));
    }
  CHECK_THROWS_AS(small_k_closed_form(5, 4), DomainError);
}

TEST_CASE("method names and tables") {
  CHECK(parse_kl_method("hook") == KLMethod::hook);
  CHECK(to_string(KLMethod::series) == "series");
  CHECK_THROWS_AS(parse_kl_method("guess"), DomainError);
  KLTable t = build_kl_table(10, KLMethod::recurrence);
  CHECK(t.q_polys.size() == 11);
  CHECK(t.p_polys.size() == 11);
  CHECK(t.q_polys[4] == (UniPoly{16, 17, 2}));
  CHECK_THROWS_AS(q_closed(-1), DomainError);
}

TEST_CASE("parallel_map keeps index order and rethrows") {
  setenv("THAGQ_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  std::vector<int> v = parallel_map(50, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map(10,
                               [](std::size_t i) {
                                 if (i == 7) throw DomainError("boom");
                                 return 0;
                               }),
                  DomainError);
  CHECK(q_sequence(30, KLMethod::hook) == q_recurrence_seq(30));
  setenv("THAGQ_THREADS", "junk", 1);
  CHECK(thread_count() >= 1);
  unsetenv("THAGQ_THREADS");
}
