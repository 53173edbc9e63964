#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "ctri/golden.hpp"
#include "ctri/triangle_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using ctri::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("ctri_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("count") {
  auto r = run({"count", "--depth", "2", "--colors", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "72960\n");
  r = run({"count", "--depth", "3", "--colors", "3", "--no-top-symmetry", "--threads", "2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("total") == "528");
  CHECK(j.at("normalized") == "88");
  CHECK(j.at("two_adic_valuation") == 3);
  r = run({"count", "--depth", "4", "--colors", "4", "--max-frontier", "2"});
  CHECK(r.code == 3);
}

TEST_CASE("qpoly") {
  CHECK(run({"qpoly", "--colors", "3"}).out == "4 20 20 4\n");
  CHECK(run({"qpoly", "--colors", "3", "--normalized"}).out == "1 5 5 1\n");
  CHECK(run({"qpoly", "--colors", "4", "--sigma", "1 3 4 2"}).out == "0 0 32 24\n");
  const auto j = nlohmann::json::parse(run({"qpoly", "--colors", "2", "--json"}).out);
  CHECK(j.at("coeffs") == nlohmann::json::array({"2", "2"}));
  CHECK(run({"qpoly", "--colors", "3", "--sigma", "1 1 2"}).code == 2);
  CHECK(run({"qpoly", "--colors", "3", "--sigma", "1 2"}).code == 2);
  CHECK(run({"qpoly", "--colors", "13"}).code == 3);
}

TEST_CASE("coeffs") {
  CHECK(run({"coeffs", "--colors", "6", "--kmax", "3"}).out == "1 20 245\n");
  const auto r = run({"coeffs", "--colors", "6", "--kmax", "3", "--inv-cap", "1", "--json"});
  CHECK(nlohmann::json::parse(r.out).at("heuristic") == true);
  CHECK(run({"coeffs", "--colors", "40", "--kmax", "2"}).code == 3);
}

TEST_CASE("psi of a triangle file") {
  const fs::path dir = scratch("psi");
  fs::create_directories(dir);
  {
    std::ofstream(dir / "t.txt") << ctri::to_text(ctri::golden::example_triangle_n3());
    std::ofstream(dir / "t.json") << ctri::to_json(ctri::golden::example_triangle_n3()).dump();
    std::ofstream(dir / "bad.txt") << "2 2\n1 2\n2 1 1 2\n";
  }
  CHECK(run({"psi", (dir / "t.txt").string()}).out == "5\n");
  const auto j = nlohmann::json::parse(run({"psi", (dir / "t.json").string(), "--json"}).out);
  CHECK(j.at("levels") == nlohmann::json::array({2, 3}));
  CHECK(run({"psi", (dir / "bad.txt").string()}).code == 2);
  CHECK(run({"psi", (dir / "missing.txt").string()}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("analogs, hankel, cumulants") {
  CHECK(run({"analogs", "--which", "HZ", "--n", "3"}).out == "1 3 3 1\n");
  CHECK(run({"analogs", "--which", "XX", "--n", "3"}).code == 2);
  const auto h = nlohmann::json::parse(run({"hankel", "--size", "3", "--offset", "1", "--json"}).out);
  CHECK(std::abs(h.at("smallest_positive_root").at("value").get<double>() - 0.04641) < 1e-4);
  CHECK(run({"hankel", "--size", "3", "--offset", "2"}).code == 2);
  const auto c = run({"cumulants", "--orders", "2"});
  CHECK(c.out == "kappa_1 = 5 n - 10\nkappa_2 = 51 n - 216\n");
  CHECK(run({"cumulants", "--orders", "6"}).code == 2);
}

TEST_CASE("cumulants from a samples file") {
  const fs::path dir = scratch("cum");
  fs::create_directories(dir);
  // a_1 = 5n - 10 and a_2 = (25n^2 - 49n - 116) / 2
  std::ofstream(dir / "s.json")
      << R"({"coefficients": [{"k": 1, "threshold": 3, "samples": [[3, 5], [4, 10]]},
                              {"k": 2, "threshold": 5, "samples": [[5, "132"], [6, "245"], [7, "383"]]}]})";
  const auto r = run({"cumulants", "--orders", "2", "--samples", (dir / "s.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "kappa_1 = 5 n - 10\nkappa_2 = 51 n - 216\n");
  std::ofstream(dir / "bad.json") << R"({"coefficients": [{"k": 1, "samples": [[3, 5], [4, 10], [5, 16]]}]})";
  CHECK(run({"cumulants", "--orders", "1", "--samples", (dir / "bad.json").string()}).code == 1);
  fs::remove_all(dir);
}

TEST_CASE("conjectures") {
  const auto r = run({"conjectures", "--n-max", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS log-concavity n=7") != std::string::npos);
  CHECK(r.out.find("PASS a_3 formula n=7") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("sample writes reproducible outputs") {
  const fs::path a = scratch("sa"), b = scratch("sb");
  const std::vector<std::string> base{"sample", "--colors", "4", "--q", "0.4", "--steps", "20000", "--burnin", "1000",
                                      "--thin", "5", "--seed", "11", "--pgm"};
  auto args = base;
  args.insert(args.end(), {"--out", a.string()});
  CHECK(run(args).code == 0);
  args = base;
  args.insert(args.end(), {"--out", b.string(), "--json"});
  const auto r = run(args);
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("runs").at(0).at("samples") == 3800);
  for (const char* f : {"level1.csv", "level2.csv", "psi_hist.csv", "level1.pgm"}) {
    CHECK(slurp(a / f) == slurp(b / f));
  }
  CHECK(run({"sample", "--colors", "3", "--q", "2", "--out", a.string()}).code == 2);
  CHECK(run({"sample", "--preset", "fig4", "--out", a.string()}).code == 2);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--depth", "2", "--colors", "3", "--bogus"}).code == 2);
  CHECK(run({"count", "--colors", "3"}).code == 2);
  const auto r = run({"count"});
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify --fast passes") {
  const auto r = run({"verify", "--fast"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
