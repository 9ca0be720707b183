#pragma once

#include "thagq/biseries.hpp"
#include "thagq/unipoly.hpp"

#include <string_view>
#include <vector>

namespace thagq {

enum class KLMethod { closed, hook, recurrence, series };

std::string_view to_string(KLMethod m);
/// Throws DomainError on an unknown name.
KLMethod parse_kl_method(std::string_view name);

/// Q_{T_n} from the multinomial closed form.
UniPoly q_closed(int n);
/// Q_{T_n} from the hook-length triple sum.
UniPoly q_hook(int n);
/// Q_{T_0}, ..., Q_{T_max_n} from the order-3 recurrence in n.
std::vector<UniPoly> q_recurrence_seq(int max_n);

/// Generating function of Q_{T_n} in u, to u^order.
BiSeries psi_series(int order);
/// Generating function of P_{T_n} (shifted: u^{n+1} carries P_{T_n}), to u^order.
BiSeries phi_series(int order);

/// P_{T_0}, ..., P_{T_max_n} read off phi_series.
std::vector<UniPoly> p_from_phi(int max_n);

/// The binomial-transform identity linking Q_{T_i} and P_{T_i}, at n.
bool pq_relation_check(int n);
/// Same, with precomputed tables (both must reach index n).
bool pq_relation_check(int n, const std::vector<UniPoly>& q, const std::vector<UniPoly>& p);

/// Q_{K_{2,n}} = Q_{T_n} + (n-1)t - 1, n >= 1.
UniPoly q_k2n(int n);

/// The closed forms of c_{n,1}, c_{n,2}, c_{n,3} (k in {1,2,3}).
BigRational small_k_closed_form(int n, int k);

struct KLTable {
  int max_n = 0;
  std::vector<UniPoly> q_polys;
  std::vector<UniPoly> p_polys;
  KLMethod method = KLMethod::closed;
};

/// Builds Q by `method` and P from phi_series, then checks the table
/// invariants (degree, nonnegative integer coefficients, Q_{T_0} = 1).
KLTable build_kl_table(int max_n, KLMethod method);

/// Q_{T_n} for 0 <= n <= max_n by one method.
std::vector<UniPoly> q_sequence(int max_n, KLMethod method);

}  // namespace thagq
