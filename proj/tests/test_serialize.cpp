#include "thagq/equivariant.hpp"
#include "thagq/errors.hpp"
#include "thagq/klpoly.hpp"
#include "thagq/serialize.hpp"
#include "thagq/verify.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace thagq;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(THAGQ_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("partition and Schur round trips") {
  Partition p{3, 2, 2, 1};
  CHECK(to_json(p).dump() == "[3,2,2,1]");
  CHECK(partition_from_json(to_json(p)) == p);
  CHECK(partition_from_json(Json::array()) == Partition{});
  CHECK_THROWS_AS(partition_from_json(Json::array({1, 2})), DomainError);

  SchurSum s = SchurSum::single(Partition{2}) + SchurSum::single(Partition{1, 1}, 3);
  CHECK(to_json(s).dump() == R"([{"partition":[2],"coeff":"1"},{"partition":[1,1],"coeff":"3"}])");
  CHECK(schur_from_json(to_json(s), 2) == s);
  CHECK_THROWS_AS(schur_from_json(Json::object(), 2), DomainError);
}

TEST_CASE("graded and polynomial round trips") {
  for (int n = 0; n <= 7; ++n) {
    GradedSchur g = q_equi_explicit(n);
    CHECK(graded_from_json(to_json(g)) == g);
    CHECK(graded_from_json(Json::parse(to_json(g).dump())) == g);
  }
  UniPoly q{16, 17, 2};
  CHECK(poly_to_json(q, 4).dump() == R"({"n":4,"coeffs":["16","17","2"]})");
  auto [n, back] = poly_from_json(poly_to_json(q, 4));
  CHECK(n == 4);
  CHECK(back == q);
  UniPoly frac(std::vector<BigRational>{make_rational(-1, 3), 2});
  auto [none, frac_back] = poly_from_json(poly_to_json(frac));
  CHECK_FALSE(none.has_value());
  CHECK(frac_back == frac);
}

TEST_CASE("rational strings") {
  CHECK(rational_from_string("6/4") == make_rational(3, 2));
  CHECK(rational_from_string("-12") == -12);
  CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);
  CHECK_THROWS_AS(rational_from_string("x"), DomainError);
}

TEST_CASE("verify reports") {
  SuiteReport r = run_verify("klpoly", 12);
  CHECK(r.ok());
  CHECK(r.checks_run > 0);
  Json j = report_to_json(r);
  CHECK(j["suite"] == "klpoly");
  CHECK(j["range"]["max_n"] == 12);
  CHECK(j["failures"].empty());
  CHECK(j["checked"] == r.checks_run);
  CHECK(report_to_json(run_verify("klpoly", 12)).dump() == j.dump());

  CHECK_THROWS_AS(run_verify("bogus", 10), UsageError);
  CHECK_THROWS_AS(run_verify("oracle", 9), UsageError);
  CHECK_THROWS_AS(run_verify("klpoly", -1), UsageError);
  CHECK(run_verify("oracle", 3).ok());
  CHECK(run_verify("identities", 6, 3).ok());
  CHECK(run_verify("equivariant", 6).ok());
  CHECK(run_verify("logconcave", 30).ok());

  SuiteReport all = run_verify("all", 8);
  CHECK(all.ok());
  CHECK(all.parameters.at("oracle.max_n") == 6);
  CHECK(all.notes.count("oracle.clamped") == 1);
  CHECK(suite_limits("equivariant")->default_max_n == 12);
  CHECK_FALSE(suite_limits("all").has_value());
}

TEST_CASE("cli: polynomials") {
  RunResult r = run_cli("qt --n 4");
  CHECK(r.status == 0);
  CHECK(r.out == "2*t^2 + 17*t + 16\n");
  for (const char* m : {"hook", "recurrence", "series"})
    CHECK(run_cli(std::string("qt --n 4 --method ") + m).out == r.out);

  RunResult j = run_cli("qt --n 9 --format json");
  CHECK(j.status == 0);
  auto [n, q] = poly_from_json(Json::parse(j.out));
  CHECK(n == 9);
  CHECK(q == q_closed(9));

  CHECK(run_cli("qk2n --n 3").out == "7*t + 7\n");
  CHECK(run_cli("qk2n --n 0").status == 2);
  CHECK(run_cli("qt").status == 2);
  CHECK(run_cli("qt --n -1").status == 2);
  CHECK(run_cli("qt --n 3 --method guess").status == 2);
  CHECK(run_cli("").status == 2);
}

TEST_CASE("cli: equivariant and table") {
  RunResult e = run_cli("equivariant --n 6 --format json");
  CHECK(e.status == 0);
  CHECK(graded_from_json(Json::parse(e.out)) == q_equi_explicit(6));
  CHECK(run_cli("equivariant --n 2").out == "t^0: s(2) + 3*s(1,1)\nt^1: s(2)\n");
  RunResult p = run_cli("equivariant --n 2 --route p --format json");
  CHECK(graded_from_json(Json::parse(p.out)) == p_equi(2));

  RunResult csv = run_cli("table --max-n 5 --out csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("n,k,c_nk\n0,0,1\n1,0,2\n2,0,4\n2,1,1\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 13);

  RunResult tj = run_cli("table --max-n 10 --out json --method hook");
  Json t = Json::parse(tj.out);
  CHECK(t["method"] == "hook");
  for (int i = 0; i <= 10; ++i) CHECK(poly_from_json(t["q"][static_cast<std::size_t>(i)]).second == q_closed(i));
  CHECK(run_cli("table --max-n 5 --out xml").status == 2);
}

TEST_CASE("cli: verify") {
  RunResult a = run_cli("verify --suite klpoly --max-n 20 --format json");
  RunResult b = run_cli("verify --suite klpoly --max-n 20 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["suite"] == "klpoly");
  CHECK(j["failures"].empty());
  CHECK(j["checked"].get<long long>() > 0);

  RunResult text = run_cli("verify --suite oracle --max-n 3");
  CHECK(text.status == 0);
  CHECK(text.out.find("failures 0") != std::string::npos);

  CHECK(run_cli("verify --suite bogus --max-n 10").status == 2);
  CHECK(run_cli("verify --suite oracle --max-n 9").status == 2);
  CHECK(run_cli("verify --max-n 9").status == 2);
}

TEST_CASE("cli: oracle") {
  RunResult r = run_cli("oracle --family thagomizer --n 2");
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["vertices"] == 4);
  CHECK(j["edges"] == 5);
  CHECK(j["rank"] == 3);
  CHECK(j["flat_count"] == 13);
  CHECK(j["flats_by_rank"] == Json::array({1, 5, 6, 1}));
  CHECK(poly_from_json(j["q"]).second == (UniPoly{4, 1}));
  CHECK(poly_from_json(j["characteristic_polynomial"]).second == (UniPoly{-4, 8, -5, 1}));

  auto path = std::filesystem::temp_directory_path() / "thagq_triangle_test.txt";
  {
    std::ofstream f(path);
    f << "# triangle\nv 3\ne 0 1\ne 1 2\ne 0 2\n";
  }
  RunResult g = run_cli("oracle --graph-file " + path.string());
  CHECK(g.status == 0);
  CHECK(poly_from_json(Json::parse(g.out)["q"]).second == UniPoly{2});
  CHECK(run_cli("oracle --graph-file " + path.string() + " --format text").out.find("Q 2\n") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run_cli("oracle --family thagomizer --n 7").status == 2);
  CHECK(run_cli("oracle --family thagomizer").status == 2);
  CHECK(run_cli("oracle").status == 2);
  CHECK(run_cli("oracle --graph-file /nonexistent/graph.txt").status == 2);
}
