// Command-line front end for the thagq library.

#include "thagq/equivariant.hpp"
#include "thagq/errors.hpp"
#include "thagq/klpoly.hpp"
#include "thagq/logconcave.hpp"
#include "thagq/matroid_oracle.hpp"
#include "thagq/serialize.hpp"
#include "thagq/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace thagq;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  int max_n = 0;
  std::optional<int> verify_max_n;
  std::optional<int> max_k;
  std::optional<std::string> format;
  std::string method = "closed";
  std::string route = "explicit";
  std::string out = "csv";
  std::string suite;
  std::string family;
  std::string graph_file;
  int max_edges = kDefaultMaxEdges;
};

bool wants_json(const Options& o, const char* fallback = "text") { return o.format.value_or(fallback) == "json"; }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

UniPoly q_by_method(int n, KLMethod method) {
  if (method == KLMethod::recurrence || method == KLMethod::series) return q_sequence(n, method).back();
  return method == KLMethod::closed ? q_closed(n) : q_hook(n);
}

int cmd_qt(const Options& o) {
  UniPoly q = q_by_method(o.n, parse_kl_method(o.method));
  if (wants_json(o)) print_json(poly_to_json(q, o.n));
  else std::cout << q.to_string() << '\n';
  return kExitOk;
}

int cmd_qk2n(const Options& o) {
  UniPoly q = q_k2n(o.n);
  if (wants_json(o)) print_json(poly_to_json(q, o.n));
  else std::cout << q.to_string() << '\n';
  return kExitOk;
}

int cmd_equivariant(const Options& o) {
  GradedSchur g = o.route == "explicit"    ? q_equi_explicit(o.n)
                  : o.route == "induction" ? q_equi_induction(o.n)
                  : o.route == "e2x"       ? q_equi_e2x(o.n)
                  : o.route == "from_p"    ? q_from_p(o.n)
                                           : p_equi(o.n);
  if (wants_json(o)) {
    print_json(to_json(g));
  } else {
    for (const auto& [k, s] : g.by_degree()) std::cout << "t^" << k << ": " << s.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_table(const Options& o) {
  const KLMethod method = parse_kl_method(o.method);
  std::vector<UniPoly> qs = q_sequence(o.max_n, method);
  if (o.out == "csv") {
    std::cout << "n,k,c_nk\n";
    for (int n = 0; n <= o.max_n; ++n) {
      const UniPoly& q = qs[static_cast<std::size_t>(n)];
      for (int k = 0; k <= q.degree(); ++k) std::cout << n << ',' << k << ',' << to_string(q.coeff(k)) << '\n';
    }
  } else {
    Json polys = Json::array();
    for (int n = 0; n <= o.max_n; ++n) polys.push_back(poly_to_json(qs[static_cast<std::size_t>(n)], n));
    print_json({{"method", std::string(to_string(method))}, {"max_n", o.max_n}, {"q", polys}});
  }
  return kExitOk;
}

std::string inputs_text(const std::map<std::string, long long>& in) {
  std::string s;
  for (const auto& [k, v] : in) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

int cmd_verify(const Options& o) {
  SuiteReport r = run_verify(o.suite, o.verify_max_n, o.max_k);
  if (wants_json(o)) {
    print_json(report_to_json(r));
  } else {
    std::cout << "suite " << r.suite_name << ':';
    for (const auto& [k, v] : r.parameters) std::cout << ' ' << k << '=' << v;
    std::cout << "\nchecked " << r.checks_run << ", failures " << r.failures.size() << '\n';
    for (const auto& f : r.failures)
      std::cout << "FAIL " << f.check << " [" << inputs_text(f.inputs) << "] expected " << f.expected << ", got "
                << f.actual << '\n';
    for (const auto& [k, v] : r.notes) std::cout << "note " << k << ": " << v << '\n';
  }
  return r.ok() ? kExitOk : kExitFailed;
}

int cmd_oracle(const Options& o) {
  MultiGraph g;
  if (!o.graph_file.empty()) {
    std::ifstream in(o.graph_file);
    if (!in) throw DomainError("cannot open graph file '" + o.graph_file + "'");
    g = parse_graph(in);
  } else {
    g = build_family(parse_family(o.family), o.n);
  }
  FlatLattice L = lattice_of_flats(g, o.max_edges);
  UniPoly chi = char_poly_interval(L, L.flats.front());
  UniPoly q = q_kls(L);
  if (!wants_json(o, "json")) {
    std::cout << "vertices " << g.vertex_count << "\nedges " << g.edges.size() << "\nrank " << L.rank()
              << "\nflats " << L.size() << "\ncharacteristic polynomial " << chi.to_string() << "\nQ " << q.to_string()
              << '\n';
    return kExitOk;
  }
  Json counts = Json::array();
  for (int c : L.rank_counts()) counts.push_back(c);
  print_json({{"vertices", g.vertex_count},
              {"edges", g.edges.size()},
              {"rank", L.rank()},
              {"flat_count", L.size()},
              {"flats_by_rank", counts},
              {"characteristic_polynomial", poly_to_json(chi)},
              {"q", poly_to_json(q)}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse Kazhdan-Lusztig polynomials of thagomizer matroids"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json"};
  const std::vector<std::string> methods{"closed", "hook", "recurrence", "series"};

  auto* qt = app.add_subcommand("qt", "Q_{T_n} by one method");
  qt->add_option("--n", o.n, "n >= 0")->required()->check(CLI::NonNegativeNumber);
  qt->add_option("--method", o.method, "closed|hook|recurrence|series")->check(CLI::IsMember(methods));
  qt->add_option("--format", o.format, "text|json")->check(CLI::IsMember(formats));

  auto* qk = app.add_subcommand("qk2n", "Q_{K_{2,n}}");
  qk->add_option("--n", o.n, "n >= 1")->required()->check(CLI::PositiveNumber);
  qk->add_option("--format", o.format, "text|json")->check(CLI::IsMember(formats));

  auto* eq = app.add_subcommand("equivariant", "Schur expansion of the equivariant polynomial");
  eq->add_option("--n", o.n, "n >= 0")->required()->check(CLI::NonNegativeNumber);
  eq->add_option("--route", o.route, "explicit|induction|e2x|from_p|p")
      ->check(CLI::IsMember({"explicit", "induction", "e2x", "from_p", "p"}));
  eq->add_option("--format", o.format, "text|json")->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "Coefficient table of Q_{T_0..max_n}");
  table->add_option("--max-n", o.max_n, "largest n")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--out", o.out, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--method", o.method, "closed|hook|recurrence|series")->check(CLI::IsMember(methods));

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", o.suite, "identities|equivariant|klpoly|logconcave|oracle|all")->required();
  verify->add_option("--max-n", o.verify_max_n, "largest n (suite default when omitted)");
  verify->add_option("--max-k", o.max_k, "largest k where the suite has a k range");
  verify->add_option("--format", o.format, "text|json")->check(CLI::IsMember(formats));

  auto* oracle = app.add_subcommand("oracle", "Lattice of flats and Q from the defining recursion");
  auto* fam = oracle->add_option("--family", o.family, "thagomizer|k2n")->check(CLI::IsMember({"thagomizer", "k2n"}));
  auto* on = oracle->add_option("--n", o.n, "n >= 1")->check(CLI::PositiveNumber);
  auto* gf = oracle->add_option("--graph-file", o.graph_file, "graph in 'v <count>' / 'e <a> <b>' format");
  oracle->add_option("--max-edges", o.max_edges, "edge-count guard")->check(CLI::Range(1, 63));
  oracle->add_option("--format", o.format, "json|text (default json)")->check(CLI::IsMember(formats));
  fam->needs(on);
  on->needs(fam);
  gf->excludes(fam);
  gf->excludes(on);

  try {
    app.parse(argc, argv);
    if (oracle->parsed() && o.graph_file.empty() && o.family.empty())
      throw CLI::RequiredError("oracle needs --family with --n, or --graph-file");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (qt->parsed()) return cmd_qt(o);
    if (qk->parsed()) return cmd_qk2n(o);
    if (eq->parsed()) return cmd_equivariant(o);
    if (table->parsed()) return cmd_table(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_oracle(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kExitFailed;
  }
}
