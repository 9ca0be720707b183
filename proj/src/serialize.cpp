#include "thagq/serialize.hpp"

#include "thagq/errors.hpp"

namespace thagq {

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const SchurSum& s) {
  Json out = Json::array();
  for (const auto& [lambda, c] : s.terms()) out.push_back({{"partition", to_json(lambda)}, {"coeff", c.get_str()}});
  return out;
}

SchurSum schur_from_json(const Json& j, int degree) {
  if (!j.is_array()) throw DomainError("SchurSum JSON must be an array");
  SchurSum s(degree);
  for (const auto& term : j) s.add(partition_from_json(term.at("partition")), BigInt(term.at("coeff").get<std::string>()));
  return s;
}

Json to_json(const GradedSchur& g) {
  Json terms = Json::array();
  for (const auto& [k, s] : g.by_degree()) terms.push_back({{"k", k}, {"schur", to_json(s)}});
  return {{"n", g.n()}, {"terms", terms}};
}

GradedSchur graded_from_json(const Json& j) {
  GradedSchur g(j.at("n").get<int>());
  for (const auto& term : j.at("terms")) g.add(term.at("k").get<int>(), schur_from_json(term.at("schur"), g.n()));
  return g;
}

Json poly_to_json(const UniPoly& p, std::optional<int> n) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  Json out = Json::object();
  if (n) out["n"] = *n;
  out["coeffs"] = coeffs;
  return out;
}

std::pair<std::optional<int>, UniPoly> poly_from_json(const Json& j) {
  std::optional<int> n;
  if (j.contains("n")) n = j.at("n").get<int>();
  std::vector<BigRational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
  return {n, UniPoly(std::move(coeffs))};
}

BigRational rational_from_string(const std::string& s) {
  BigRational q;
  if (q.set_str(s, 10) != 0) throw DomainError("not a decimal rational: '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace thagq
