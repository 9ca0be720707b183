#include "thagq/verify.hpp"

#include "thagq/equivariant.hpp"
#include "thagq/errors.hpp"
#include "thagq/klpoly.hpp"
#include "thagq/logconcave.hpp"
#include "thagq/matroid_oracle.hpp"
#include "thagq/parallel.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <tuple>

namespace thagq {

namespace {

using Inputs = std::map<std::string, long long>;

std::string describe(const BigInt& v) { return to_string(v); }
std::string describe(const BigRational& v) { return to_string(v); }
std::string describe(const UniPoly& p) { return p.to_string(); }
std::string describe(const SchurSum& s) { return s.to_string(); }
std::string describe(const GradedSchur& g) { return to_json(g).dump(); }
std::string describe(long long v) { return std::to_string(v); }

// Checks gathered by one task; merged in task order.
struct Partial {
  long long checks = 0;
  std::vector<FailureRecord> failures;
  std::map<std::string, std::string> notes;

  void fail(std::string check, Inputs in, std::string expected, std::string actual) {
    failures.push_back({std::move(check), std::move(in), std::move(expected), std::move(actual)});
  }

  void expect(bool ok, const std::string& check, const Inputs& in) {
    ++checks;
    if (!ok) fail(check, in, "true", "false");
  }

  template <typename E, typename A>
  void expect_eq(const std::string& check, const Inputs& in, const E& expected, const A& actual) {
    ++checks;
    if (!(expected == actual)) fail(check, in, describe(expected), describe(actual));
  }

  // Runs fn, turning any exception into a failure of `check`.
  void guard(const std::string& check, const Inputs& in, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      ++checks;
      fail(check, in, "no exception", e.what());
    }
  }
};

void merge(SuiteReport& r, Partial&& p) {
  r.checks_run += p.checks;
  for (auto& f : p.failures) r.failures.push_back(std::move(f));
  for (auto& [k, v] : p.notes) r.notes[k] = std::move(v);
}

template <typename Fn>
void run_parallel(SuiteReport& r, std::size_t count, Fn&& fn) {
  auto parts = parallel_map(count, [&](std::size_t i) {
    Partial p;
    fn(i, p);
    return p;
  });
  for (auto& p : parts) merge(r, std::move(p));
}

void sort_failures(SuiteReport& r) {
  std::stable_sort(r.failures.begin(), r.failures.end(), [](const FailureRecord& a, const FailureRecord& b) {
    return std::tie(a.check, a.inputs) < std::tie(b.check, b.inputs);
  });
}

Partition two_column(int k, int ones) { return Partition::from_runs({{2, k}, {1, ones}}); }
Partition three_column(int i, int j, int ones) { return Partition::from_runs({{3, i}, {2, j}, {1, ones}}); }

SchurSum empty_shape() { return SchurSum::single(Partition{}); }

// ---------------------------------------------------------------- identities

void identities_at(int n, int max_k, Partial& p) {
  const Inputs at_n{{"n", n}};
  p.guard("syt_square_sum", at_n, [&] {
    BigInt sum = 0;
    for (const auto& lambda : partitions_of(n)) {
      BigInt f = syt_count(lambda);
      sum += f * f;
    }
    p.expect_eq("syt_square_sum", at_n, factorial(static_cast<unsigned long>(n)), sum);
  });

  p.guard("dim_two_column", at_n, [&] {
    for (int k = 0; 2 * k <= n; ++k)
      for (int i = 0; i <= n - 2 * k; ++i)
        p.expect_eq("dim_two_column", {{"n", n}, {"k", k}, {"i", i}}, syt_count(two_column(k, n - 2 * k - i)),
                    dim_two_column(n, k, i));
  });

  p.guard("dim_three_column", at_n, [&] {
    for (int i = 0; 3 * i <= n; ++i)
      for (int j = 0; 3 * i + 2 * j <= n; ++j)
        p.expect_eq("dim_three_column", {{"n", n}, {"i", i}, {"j", j}},
                    syt_count(three_column(i, j, n - 3 * i - 2 * j)), dim_three_column(n, i, j));
  });

  if (n >= 1)
    p.guard("e_h_alternating_sum", at_n, [&] {
      SchurSum total(n);
      for (int j = 0; j <= n; ++j) {
        SchurSum term = pieri_e(j, pieri_h(n - j, empty_shape()));
        if (j % 2 == 0) total += term;
        else total -= term;
      }
      p.expect_eq("e_h_alternating_sum", at_n, SchurSum(n), total);
    });

  p.guard("pieri_unit_coefficients", at_n, [&] {
    if (n > 10) return;
    for (const auto& lambda : partitions_of(n))
      for (int i = 0; i <= 4; ++i) {
        SchurSum s = SchurSum::single(lambda);
        bool unit = true;
        for (const SchurSum& out : {pieri_e(i, s), pieri_h(i, s)})
          for (const auto& [mu, c] : out.terms()) unit = unit && c == 1;
        p.expect(unit, "pieri_unit_coefficients", {{"n", n}, {"i", i}});
      }
  });

  // The alternating strip identity is indexed by m; run it at m = n.
  const int m = n;
  for (int k = 1; k <= max_k; ++k) {
    const Inputs in{{"m", m}, {"k", k}};
    p.guard("alternating_strip_identity", in, [&] {
      SchurSum lhs(m + 2 * k);
      for (int j = 0; j <= m; ++j) {
        SchurSum term = pieri_e(m - j, SchurSum::single(Partition::from_runs({{j + 2, 1}, {2, k - 1}})));
        if (j % 2 == 0) lhs += term;
        else lhs -= term;
      }
      p.expect_eq("alternating_strip_identity", in, SchurSum::single(two_column(k, m)), lhs);
    });
  }

  for (int k = 0; 2 * k <= n; ++k) {
    const Inputs in{{"n", n}, {"k", k}};
    p.guard("two_column_induction_identity", in, [&] {
      SchurSum lhs(n);
      for (int i = 0; i <= n - 2 * k; ++i) lhs += pieri_e(i, SchurSum::single(two_column(k, n - 2 * k - i)));
      SchurSum rhs(n);
      for (int i = 0; i <= k; ++i)
        for (int j = k - i; 3 * i + 2 * j <= n; ++j) rhs.add(three_column(i, j, n - 3 * i - 2 * j), n - 3 * i - 2 * j + 1);
      p.expect_eq("two_column_induction_identity", in, rhs, lhs);
    });
  }
}

SuiteReport verify_identities(int max_n, int max_k) {
  SuiteReport r;
  r.suite_name = "identities";
  r.parameters = {{"max_n", max_n}, {"max_k", max_k}};
  run_parallel(r, static_cast<std::size_t>(max_n) + 1,
               [&](std::size_t n, Partial& p) { identities_at(static_cast<int>(n), max_k, p); });
  return r;
}

// --------------------------------------------------------------- equivariant

SuiteReport verify_equivariant(int max_n) {
  SuiteReport r;
  r.suite_name = "equivariant";
  r.parameters = {{"max_n", max_n}};
  std::vector<UniPoly> p_polys = p_from_phi(max_n);
  // Largest n first so the expensive tasks start early.
  auto parts = parallel_map(static_cast<std::size_t>(max_n) + 1, [&](std::size_t idx) {
    const int n = max_n - static_cast<int>(idx);
    const Inputs in{{"n", n}};
    Partial p;
    p.guard("equivariant_routes", in, [&] {
      GradedSchur explicit_form = q_equi_explicit(n);
      const std::pair<const char*, std::function<GradedSchur(int)>> routes[] = {
          {"induction_route", q_equi_induction}, {"e2x_route", q_equi_e2x}, {"from_p_route", q_from_p}};
      for (const auto& [name, route] : routes) {
        GradedSchur g = route(n);
        p.expect_eq(name, in, explicit_form, g);
        p.expect(g.all_nonnegative(), std::string(name) + "_nonnegative", in);
      }
      p.expect(explicit_form.all_nonnegative(), "explicit_nonnegative", in);
      p.expect(explicit_form.max_t_degree() <= n / 2, "t_degree_bound", in);
      p.expect_eq("graded_dimension", in, q_closed(n), graded_dimension(explicit_form));
      GradedSchur pe = p_equi(n);
      p.expect(pe.all_nonnegative(), "p_equi_nonnegative", in);
      p.expect_eq("p_equi_graded_dimension", in, p_polys[static_cast<std::size_t>(n)], graded_dimension(pe));
    });
    return p;
  });
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) merge(r, std::move(*it));
  return r;
}

// -------------------------------------------------------------------- klpoly

constexpr int kPsiCap = 64;
constexpr int kPqCap = 60;

SuiteReport verify_klpoly(int max_n) {
  SuiteReport r;
  r.suite_name = "klpoly";
  const int psi_n = std::min(max_n, kPsiCap);
  const int pq_n = std::min(max_n, kPqCap);
  r.parameters = {{"max_n", max_n}, {"series_max_n", psi_n}, {"pq_max_n", pq_n}};

  Partial p;
  std::vector<UniPoly> closed, hook, rec, psi, phi_p;
  p.guard("build_tables", {{"max_n", max_n}}, [&] {
    closed = q_sequence(max_n, KLMethod::closed);
    hook = q_sequence(max_n, KLMethod::hook);
    rec = q_recurrence_seq(max_n);
    psi = q_sequence(psi_n, KLMethod::series);
    phi_p = p_from_phi(pq_n);
  });
  if (!p.failures.empty()) {
    merge(r, std::move(p));
    return r;
  }

  const UniPoly initial[] = {UniPoly{1}, UniPoly{2}, UniPoly{4, 1}};
  for (int n = 0; n <= std::min(max_n, 2); ++n)
    p.expect_eq("initial_value", {{"n", n}}, initial[n], closed[static_cast<std::size_t>(n)]);

  for (int n = 0; n <= max_n; ++n) {
    const Inputs in{{"n", n}};
    const UniPoly& q = closed[static_cast<std::size_t>(n)];
    p.expect_eq("hook_vs_closed", in, q, hook[static_cast<std::size_t>(n)]);
    p.expect_eq("recurrence_vs_closed", in, q, rec[static_cast<std::size_t>(n)]);
    if (n <= psi_n) p.expect_eq("series_vs_closed", in, q, psi[static_cast<std::size_t>(n)]);
    p.expect(q.degree() == n / 2, "degree_is_floor_half", in);
    bool positive = true;
    for (const auto& c : q.coeffs()) positive = positive && c.get_den() == 1 && sgn(c) > 0;
    p.expect(positive, "positive_integer_coefficients", in);
    if (n >= 1) {
      p.guard("k2n_relation", in, [&] {
        UniPoly k2n = q_k2n(n);
        p.expect_eq("k2n_relation", in, q + UniPoly{-1, n - 1}, k2n);
      });
      for (int k = 1; k <= 3; ++k)
        p.expect_eq("small_k_closed_form", {{"n", n}, {"k", k}}, q.coeff(k), small_k_closed_form(n, k));
    }
    if (n <= pq_n) p.expect(pq_relation_check(n, closed, phi_p), "pq_relation", in);
  }
  if (pq_n >= 2) p.expect_eq("p_t2", {{"n", 2}}, (UniPoly{1, 1}), phi_p[2]);
  merge(r, std::move(p));
  return r;
}

// ---------------------------------------------------------------- logconcave

SuiteReport verify_logconcave(int max_n, std::optional<int> max_k) {
  SuiteReport r;
  r.suite_name = "logconcave";
  r.parameters = {{"max_n", max_n}};
  if (max_k) r.parameters["max_k"] = *max_k;
  const int k_limit = max_k.value_or(std::numeric_limits<int>::max());
  const DTable d(max_n + 1);

  struct Slack {
    bool set = false;
    BigRational value;
    int n = 0;
  };

  auto parts = parallel_map(static_cast<std::size_t>(max_n), [&](std::size_t idx) {
    const int n = max_n - static_cast<int>(idx);
    const Inputs at_n{{"n", n}};
    Partial p;
    std::map<int, Slack> slack;
    p.guard("logconcave_row", at_n, [&] {
      UniPoly q = q_closed(n);
      p.expect(logconcavity_verdict(Family::thagomizer, n).log_concave, "thagomizer_verdict", at_n);
      p.expect(coefficient_verdict(q.integer_coeffs()).no_internal_zeros, "thagomizer_no_internal_zeros", at_n);
      LogConcavityVerdict k2 = logconcavity_verdict(Family::k2n, n);
      p.expect(k2.log_concave, "k2n_verdict", at_n);
      p.expect(k2.no_internal_zeros, "k2n_no_internal_zeros", at_n);
      p.expect(corollary_inequality_holds(n), "corollary_inequality", at_n);

      for (int k = 0; 2 * k <= n; ++k) {
        const Inputs in{{"n", n}, {"k", k}};
        DecompCell cell = decomposition(n, k, q);
        p.expect_eq("decomposition_d", in, d(n, k), cell.d);
        p.expect_eq("decomposition_c", in, cell.b * BigRational(cell.d), BigRational(cell.c));
      }
      for (int k = 1; 2 * k < n; ++k) {
        BigRational b0 = b_coeff(n, k);
        p.expect(b0 * b0 >= b_coeff(n, k + 1) * b_coeff(n, k - 1), "b_logconcave", {{"n", n}, {"k", k}});
      }
      for (int k = 1; k <= k_limit && 2 * k + 1 <= n; ++k) {
        const Inputs in{{"n", n}, {"k", k}};
        p.expect(y_value(n, k) > 0, "y_positive", in);
        p.expect(d_recurrences_hold(d, n, k), "d_recurrences", in);
        p.expect(x_bound_holds(d, n, k), "x_bound", in);
        BigRational gap = x_bound_squared_gap(d, n, k);
        Slack& s = slack[k];
        if (!s.set || gap < s.value) s = {true, gap, n};
        if (n == 2 * k + 1) {
          // Base case: the squared slack, scaled by (2(k+2)(k+5))^2, is 16k(k+1)(k+2)(k+5).
          BigInt scale = BigInt(2) * (k + 2) * (k + 5);
          BigInt expected = BigInt(16) * k * (k + 1) * (k + 2) * (k + 5);
          p.expect_eq("x_bound_base_slack", in, BigRational(expected), gap * BigRational(scale * scale));
        }
        if (2 * k + 3 <= n) {
          p.expect(f_identity_holds(d, n, k), "f_identity", in);
          BigInt mid = d(n - 1, k);
          p.expect(mid * mid >= d(n - 1, k + 1) * d(n - 1, k - 1), "d_logconcave", in);
        }
      }
    });
    return std::pair{std::move(p), std::move(slack)};
  });

  std::map<int, Slack> overall;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    merge(r, std::move(it->first));
    for (const auto& [k, s] : it->second) {
      Slack& o = overall[k];
      if (!o.set || s.value < o.value) o = s;
    }
  }
  for (const auto& [k, s] : overall) {
    char key[32];
    std::snprintf(key, sizeof key, "min_squared_slack_k%03d", k);
    r.notes[key] = to_string(s.value) + " at n=" + std::to_string(s.n);
  }
  return r;
}

// -------------------------------------------------------------------- oracle

SuiteReport verify_oracle(int max_n) {
  SuiteReport r;
  r.suite_name = "oracle";
  r.parameters = {{"max_n", max_n}};

  // Interval targets T_m and B_m for m <= max_n + 1.
  std::vector<FlatLattice> thag_targets, bool_targets;
  for (int m = 0; m <= max_n + 1; ++m) {
    if (m <= max_n) thag_targets.push_back(lattice_of_flats(thagomizer_graph(m)));
    bool_targets.push_back(lattice_of_flats(boolean_graph(m)));
  }

  auto parts = parallel_map(static_cast<std::size_t>(2 * max_n), [&](std::size_t idx) {
    const Family family = idx % 2 == 0 ? Family::thagomizer : Family::k2n;
    const int n = static_cast<int>(idx / 2) + 1;
    const std::string prefix(to_string(family));
    const Inputs in{{"n", n}};
    Partial p;
    p.guard(prefix + "_oracle", in, [&] {
      MultiGraph g = build_family(family, n);
      FlatLattice L = lattice_of_flats(g);
      for (const auto& problem : lattice_problems(g, L)) {
        ++p.checks;
        p.fail(prefix + "_lattice", in, "no problems", problem);
      }
      ++p.checks;
      UniPoly q = q_kls(L);
      if (family == Family::thagomizer) {
        p.expect_eq("thagomizer_q", in, q_closed(n), q);
        BigInt three_n;
        mpz_ui_pow_ui(three_n.get_mpz_t(), 3, static_cast<unsigned long>(n));
        p.expect_eq("thagomizer_flat_count", in, BigInt(three_n + pow2(static_cast<unsigned long>(n))), BigInt(L.size()));
        std::vector<int> counts = L.rank_counts();
        for (int rk = 0; rk <= n + 1; ++rk) {
          BigInt expected = binomial(n, rk) * pow2(static_cast<unsigned long>(rk)) + binomial(n, rk - 1);
          BigInt actual = rk < static_cast<int>(counts.size()) ? BigInt(counts[static_cast<std::size_t>(rk)]) : BigInt(0);
          p.expect_eq("thagomizer_rank_count", {{"n", n}, {"rank", rk}}, expected, actual);
        }
        for (EdgeSet flat : L.flats) {
          ThagomizerIntervalModel model = thagomizer_interval_model(n, flat);
          const FlatLattice& target = model.boolean ? bool_targets.at(static_cast<std::size_t>(model.size))
                                                    : thag_targets.at(static_cast<std::size_t>(model.size));
          const long long rank = L.rank_of[static_cast<std::size_t>(L.find(flat))];
          const long long expected_size = model.boolean ? n - rank + 1 : n - rank;
          const Inputs fin{{"n", n}, {"flat", static_cast<long long>(flat)}};
          p.expect_eq("interval_model_size", fin, expected_size, static_cast<long long>(model.size));
          p.expect(is_upper_interval_isomorphism(L, flat, target, model.map), "interval_isomorphism", fin);
        }
      } else {
        p.expect_eq("k2n_q", in, q_k2n(n), q);
      }
    });
    return p;
  });
  for (auto& p : parts) merge(r, std::move(p));
  return r;
}

constexpr int kNoCap = std::numeric_limits<int>::max();

const std::map<std::string, SuiteLimits>& limits_table() {
  static const std::map<std::string, SuiteLimits> table{
      {"identities", {16, 30}}, {"equivariant", {12, 24}}, {"klpoly", {50, kNoCap}},
      {"logconcave", {50, kNoCap}}, {"oracle", {4, 6}},
  };
  return table;
}

constexpr int kIdentitiesDefaultMaxK = 6;

SuiteReport run_one(const std::string& suite, int max_n, std::optional<int> max_k) {
  if (suite == "identities") return verify_identities(max_n, max_k.value_or(kIdentitiesDefaultMaxK));
  if (suite == "equivariant") return verify_equivariant(max_n);
  if (suite == "klpoly") return verify_klpoly(max_n);
  if (suite == "logconcave") return verify_logconcave(max_n, max_k);
  return verify_oracle(max_n);
}

}  // namespace

std::optional<SuiteLimits> suite_limits(const std::string& suite) {
  auto it = limits_table().find(suite);
  if (it == limits_table().end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "equivariant", "klpoly", "logconcave", "oracle", "all"};
  return names;
}

SuiteReport run_verify(const std::string& suite, std::optional<int> max_n, std::optional<int> max_k) {
  if (max_n && *max_n < 0) throw UsageError("--max-n must be nonnegative");
  if (max_k && *max_k < 0) throw UsageError("--max-k must be nonnegative");
  if (suite == "all") {
    SuiteReport r;
    r.suite_name = "all";
    if (max_n) r.parameters["max_n"] = *max_n;
    if (max_k) r.parameters["max_k"] = *max_k;
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      SuiteLimits lim = *suite_limits(name);
      const int n = max_n ? std::min(*max_n, lim.cap) : lim.default_max_n;
      SuiteReport sub = run_one(name, n, max_k);
      r.parameters[name + ".max_n"] = n;
      if (max_n && n < *max_n) r.notes[name + ".clamped"] = "max_n clamped to " + std::to_string(n);
      r.checks_run += sub.checks_run;
      for (auto& f : sub.failures) {
        f.check = name + "." + f.check;
        r.failures.push_back(std::move(f));
      }
      for (auto& [k, v] : sub.notes) r.notes[name + "." + k] = std::move(v);
    }
    sort_failures(r);
    return r;
  }
  auto lim = suite_limits(suite);
  if (!lim) throw UsageError("unknown suite '" + suite + "'");
  const int n = max_n.value_or(lim->default_max_n);
  if (n > lim->cap)
    throw UsageError("--max-n " + std::to_string(n) + " exceeds the " + suite + " cap of " + std::to_string(lim->cap));
  SuiteReport r = run_one(suite, n, max_k);
  sort_failures(r);
  return r;
}

Json report_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite_name;
  Json range = Json::object();
  for (const auto& [k, v] : r.parameters) range[k] = v;
  j["range"] = range;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json in = Json::object();
    for (const auto& [k, v] : f.inputs) in[k] = v;
    failures.push_back({{"check", f.check}, {"inputs", in}, {"expected", f.expected}, {"actual", f.actual}});
  }
  j["failures"] = failures;
  j["checked"] = r.checks_run;
  if (!r.notes.empty()) {
    Json notes = Json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    j["notes"] = notes;
  }
  return j;
}

}  // namespace thagq
