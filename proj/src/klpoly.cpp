#include "thagq/klpoly.hpp"

#include "thagq/errors.hpp"
#include "thagq/parallel.hpp"

namespace thagq {

std::string_view to_string(KLMethod m) {
  switch (m) {
    case KLMethod::closed: return "closed";
    case KLMethod::hook: return "hook";
    case KLMethod::recurrence: return "recurrence";
    case KLMethod::series: return "series";
  }
  return "?";
}

KLMethod parse_kl_method(std::string_view name) {
  for (KLMethod m : {KLMethod::closed, KLMethod::hook, KLMethod::recurrence, KLMethod::series})
    if (to_string(m) == name) return m;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

namespace {

void require_nonneg(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be nonnegative");
}

// Asserts integrality and returns the same polynomial.
UniPoly checked_integral(UniPoly p, const char* what, int n) {
  if (!p.is_integral())
    throw ConsistencyError(std::string(what) + "(" + std::to_string(n) +
                           ") has a non-integral coefficient: " + p.to_string());
  return p;
}

}  // namespace

UniPoly q_closed(int n) {
  require_nonneg(n, "q_closed");
  std::vector<BigRational> coeffs;
  for (int k = 0; k <= n / 2; ++k) {
    BigInt sum = 0;
    for (int i = 2 * k; i <= n; ++i)
      sum += BigInt(n - i + 1) * multinomial(n + 1, {k, i - 2 * k, n + k - i + 1});
    coeffs.push_back(make_rational(sum, n + 1));
  }
  return checked_integral(UniPoly(std::move(coeffs)), "q_closed", n);
}

UniPoly q_hook(int n) {
  require_nonneg(n, "q_hook");
  std::vector<BigInt> fact(static_cast<std::size_t>(n) + 3);
  fact[0] = 1;
  for (std::size_t m = 1; m < fact.size(); ++m) fact[m] = fact[m - 1] * static_cast<unsigned long>(m);
  auto f = [&](int m) -> const BigInt& { return fact[static_cast<std::size_t>(m)]; };

  // The (i, j) summand does not depend on k; it contributes to every k with
  // i <= k <= i + j (and i + j <= n/2 within the j range). Accumulate each
  // summand once into a difference array over k.
  const int top = n / 2;
  std::vector<BigRational> diff(static_cast<std::size_t>(top) + 2, BigRational(0));
  for (int i = 0; i <= top; ++i)
    for (int j = 0; 3 * i + 2 * j <= n; ++j) {
      BigInt mult = n - 3 * i - 2 * j + 1;
      BigInt num = BigInt(j + 1) * (n - 3 * i - j + 2) * mult * mult * f(n);
      BigInt den = f(i) * f(i + j + 1) * f(n - 2 * i - j + 2);
      BigRational term = make_rational(num, den);
      diff[static_cast<std::size_t>(i)] += term;
      diff[static_cast<std::size_t>(i + j + 1)] -= term;
    }
  std::vector<BigRational> coeffs;
  BigRational run = 0;
  for (int k = 0; k <= top; ++k) {
    run += diff[static_cast<std::size_t>(k)];
    coeffs.push_back(run);
  }
  return checked_integral(UniPoly(std::move(coeffs)), "q_hook", n);
}

std::vector<UniPoly> q_recurrence_seq(int max_n) {
  require_nonneg(max_n, "q_recurrence_seq");
  std::vector<UniPoly> q{UniPoly{1}, UniPoly{2}, UniPoly{4, 1}};
  const UniPoly quad{-2, 7, 4};  // (t + 2)(4t - 1)
  for (int n = 0; n + 3 <= max_n; ++n) {
    const auto& q0 = q[static_cast<std::size_t>(n)];
    const auto& q1 = q[static_cast<std::size_t>(n + 1)];
    const auto& q2 = q[static_cast<std::size_t>(n + 2)];
    UniPoly rhs = quad * q0 * BigRational(-(n + 1)) + UniPoly{-5 * n - 11, 2 * n - 1} * q1 +
                  UniPoly{4 * n + 13, n + 4} * q2;
    UniPoly next = rhs * BigRational(1, n + 4);
    if (!next.is_integral())
      throw ConsistencyError("recurrence division by " + std::to_string(n + 4) +
                             " is inexact at n = " + std::to_string(n + 3));
    q.push_back(std::move(next));
  }
  q.resize(static_cast<std::size_t>(max_n) + 1);
  return q;
}

BiSeries psi_series(int order) {
  require_nonneg(order, "psi_series");
  // sqrt((1-4t)u^2 - 2u + 1), one order deeper to survive the u-division.
  BiSeries radicand(order + 1, {UniPoly{1}, UniPoly{-2}, UniPoly{1, -4}});
  BiSeries root = series_sqrt(radicand);
  BiSeries numer = BiSeries(order + 1, {UniPoly{1}, UniPoly{-3}}) - root;
  // 2u(tu + 2u - 1) = u * (-2 + (2t + 4)u)
  BiSeries denom(order, {UniPoly{-2}, UniPoly{4, 2}});
  return series_divide(numer.divided_by_u(), denom);
}

BiSeries phi_series(int order) {
  require_nonneg(order, "phi_series");
  // 1 - 4u(1 - u + tu) = 1 - 4u + (4 - 4t)u^2
  BiSeries radicand(order, {UniPoly{1}, UniPoly{-4}, UniPoly{4, -4}});
  BiSeries numer = BiSeries(order, {UniPoly{1}}) - series_sqrt(radicand);
  if (!numer.coeff(0).is_zero())
    throw ConsistencyError("phi numerator has a nonzero constant term");
  BiSeries denom(order, {UniPoly{2}, UniPoly{-2, 2}});
  return series_divide(numer, denom);
}

std::vector<UniPoly> p_from_phi(int max_n) {
  require_nonneg(max_n, "p_from_phi");
  BiSeries phi = phi_series(max_n + 1);
  std::vector<UniPoly> p;
  p.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) p.push_back(checked_integral(phi.coeff(n + 1), "p_from_phi", n));
  return p;
}

bool pq_relation_check(int n) {
  require_nonneg(n, "pq_relation_check");
  std::vector<UniPoly> q;
  for (int i = 0; i <= n; ++i) q.push_back(q_closed(i));
  return pq_relation_check(n, q, p_from_phi(n));
}

bool pq_relation_check(int n, const std::vector<UniPoly>& q, const std::vector<UniPoly>& p) {
  require_nonneg(n, "pq_relation_check");
  if (q.size() <= static_cast<std::size_t>(n) || p.size() <= static_cast<std::size_t>(n))
    throw DomainError("pq_relation_check: tables too short");
  UniPoly lhs, rhs;
  for (int i = 0; i <= n; ++i) {
    BigInt c = binomial(n, i);
    BigInt sign_pow;
    mpz_pow_ui(sign_pow.get_mpz_t(), BigInt(-2).get_mpz_t(), static_cast<unsigned long>(n - i));
    lhs += q[static_cast<std::size_t>(i)] * BigRational(c * sign_pow);
    rhs += p[static_cast<std::size_t>(i)] * BigRational(i % 2 == 0 ? c : BigInt(-c));
  }
  return lhs == rhs;
}

UniPoly q_k2n(int n) {
  if (n < 1) throw DomainError("q_k2n needs n >= 1");
  UniPoly q = q_closed(n) + UniPoly{-1, n - 1};
  for (const auto& c : q.coeffs())
    if (sgn(c) < 0) throw ConsistencyError("Q_{K_{2,n}} has a negative coefficient");
  return q;
}

BigRational small_k_closed_form(int n, int k) {
  BigRational two_n = n >= 0 ? BigRational(pow2(static_cast<unsigned long>(n)))
                             : BigRational(1, pow2(static_cast<unsigned long>(-n)));
  switch (k) {
    case 1: return two_n / 2 * (n - 2) + 1;
    case 2: return BigRational(n) * (two_n * (n - 5) + 4 * (n + 1)) / 8;
    case 3: return BigRational(n) * (n - 1) * (two_n * (n - 8) + 4 * n * (n - 1) + 16) / 48;
    default: throw DomainError("closed forms exist for k = 1, 2, 3 only");
  }
}

std::vector<UniPoly> q_sequence(int max_n, KLMethod method) {
  require_nonneg(max_n, "q_sequence");
  std::size_t count = static_cast<std::size_t>(max_n) + 1;
  switch (method) {
    case KLMethod::closed:
      return parallel_map(count, [](std::size_t n) { return q_closed(static_cast<int>(n)); });
    case KLMethod::hook:
      return parallel_map(count, [](std::size_t n) { return q_hook(static_cast<int>(n)); });
    case KLMethod::recurrence: return q_recurrence_seq(max_n);
    case KLMethod::series: {
      BiSeries psi = psi_series(max_n);
      std::vector<UniPoly> out;
      for (int n = 0; n <= max_n; ++n) out.push_back(checked_integral(psi.coeff(n), "psi_series", n));
      return out;
    }
  }
  throw DomainError("unknown method");
}

KLTable build_kl_table(int max_n, KLMethod method) {
  KLTable t;
  t.max_n = max_n;
  t.method = method;
  t.q_polys = q_sequence(max_n, method);
  t.p_polys = p_from_phi(max_n);
  if (!(t.q_polys.at(0) == UniPoly{1})) throw ConsistencyError("Q_{T_0} != 1");
  for (int n = 0; n <= max_n; ++n) {
    const UniPoly& q = t.q_polys[static_cast<std::size_t>(n)];
    if (q.degree() > n / 2) throw ConsistencyError("Q_{T_n} degree exceeds n/2 at n = " + std::to_string(n));
    for (const auto& c : q.coeffs())
      if (c.get_den() != 1 || sgn(c) < 0)
        throw ConsistencyError("Q_{T_n} coefficient not a nonnegative integer at n = " + std::to_string(n));
  }
  return t;
}

}  // namespace thagq
