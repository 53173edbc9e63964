#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctri/dumont.hpp"
#include "ctri/enumeration.hpp"
#include "ctri/golden.hpp"
#include "ctri/parallel.hpp"
#include "ctri/psi.hpp"
#include "ctri/q_enumeration.hpp"
#include "ctri/sampler.hpp"
#include "ctri/triangle_io.hpp"
#include "verify.hpp"

namespace ctri::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for inputs beyond what an algorithm supports in memory or time.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + to_decimal(x);
  return s;
}

json decimal_array(const std::vector<BigInt>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_decimal(x));
  return a;
}

std::string rational_text(const Rational& r) {
  return denominator(r) == 1 ? numerator(r).str() : numerator(r).str() + "/" + denominator(r).str();
}

json rational_poly_json(const RationalPolynomialInN& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_text(c));
  return {{"coeffs", a}, {"text", p.to_string()}};
}

std::vector<Color> parse_sigma(const std::string& text) {
  std::vector<Color> sigma;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw UsageError("--sigma: '" + tok + "' is not an integer");
    }
    if (v < 1 || v > 255) throw UsageError("--sigma entries must lie in 1..n");
    sigma.push_back(static_cast<Color>(v));
  }
  std::vector<Color> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i + 1) throw UsageError("--sigma must be a permutation of 1..n");
  }
  return sigma;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  bool json = false;
  int threads = default_thread_count();
};

void add_json(CLI::App* cmd, Common& c) { cmd->add_flag("--json", c.json, "Machine-readable output"); }
void add_threads(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "Worker threads (default: $CTRI_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
}

// ---- count

struct CountArgs {
  Common c;
  int depth = 2;
  int colors = 3;
  bool no_symmetry = false;
  std::size_t batch_size = 10'000'000;
  std::size_t max_frontier = 200'000'000;
};

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  if (a.colors > ExtensionPlan::kMaxPalette) {
    throw ResourceLimit("count supports at most " + std::to_string(ExtensionPlan::kMaxPalette) + " colors");
  }
  CountOptions o;
  o.use_top_symmetry = !a.no_symmetry;
  o.batch_size = a.batch_size;
  o.threads = a.c.threads;
  o.max_frontier = a.max_frontier;
  CountReport r;
  try {
    r = count_triangles(a.depth, a.colors, o);
  } catch (const ResourceLimitExceeded& e) {
    err << "frontier limit reached at level " << e.level() << " (" << e.frontier_size() << " rows)\n";
    throw ResourceLimit(e.what());
  }
  if (a.c.json) {
    json frontier = r.frontier_sizes;
    out << json{{"depth", r.depth},
                {"colors", r.palette},
                {"total", to_decimal(r.total)},
                {"normalized", to_decimal(r.normalized)},
                {"two_adic_valuation", r.two_adic},
                {"elapsed_seconds", r.elapsed_seconds},
                {"states_checked", r.states_checked},
                {"frontier_sizes", frontier}}
               .dump(2)
        << "\n";
  } else {
    out << to_decimal(r.total) << "\n";
  }
  return kSuccess;
}

// ---- qpoly

struct QpolyArgs {
  Common c;
  int colors = 3;
  std::string sigma;
  bool normalized = false;
};

int cmd_qpoly(const QpolyArgs& a, std::ostream& out) {
  QPolynomial p;
  json extra;
  if (!a.sigma.empty()) {
    const auto sigma = parse_sigma(a.sigma);
    if (static_cast<int>(sigma.size()) != a.colors) throw UsageError("--sigma must have --colors entries");
    if (a.colors > 7) throw ResourceLimit("--sigma is supported for at most 7 colors");
    p = h_sigma_polynomial(sigma);
    extra = {{"sigma", sigma}};
  } else {
    if (a.colors > kMaxQPolyColors) {
      throw ResourceLimit("qpoly supports at most " + std::to_string(kMaxQPolyColors) + " colors");
    }
    p = a.normalized ? p_polynomial(a.colors, a.c.threads) : t2_q_polynomial(a.colors, a.c.threads);
  }
  if (a.c.json) {
    json j{{"colors", a.colors}, {"normalized", a.normalized && a.sigma.empty()}, {"coeffs", decimal_array(p.coeffs())}};
    if (!extra.is_null()) j.update(extra);
    out << j.dump(2) << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return kSuccess;
}

// ---- coeffs

struct CoeffsArgs {
  Common c;
  int colors = 3;
  int kmax = 6;
  std::optional<int> inv_cap;
};

int cmd_coeffs(const CoeffsArgs& a, std::ostream& out) {
  if (a.colors > 31) throw ResourceLimit("coeffs supports at most 31 colors");
  const auto r = low_coefficients(a.colors, a.kmax, a.inv_cap, a.c.threads);
  if (a.c.json) {
    out << json{{"colors", a.colors}, {"kmax", a.kmax}, {"coeffs", decimal_array(r.coeffs)},
                {"heuristic", r.heuristic}, {"nodes", r.nodes}}
               .dump(2)
        << "\n";
  } else {
    out << join(r.coeffs) << "\n";
    if (r.heuristic) out << "heuristic: bottom rows restricted by --inv-cap\n";
  }
  return kSuccess;
}

// ---- psi

struct PsiArgs {
  Common c;
  std::string file;
};

int cmd_psi(const PsiArgs& a, std::ostream& out) {
  Triangle t = [&] {
    try {
      return parse_triangle(read_file(a.file));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(a.file + ": " + e.what());
    }
  }();
  if (auto issue = diagnose_triangle(t)) throw UsageError(a.file + ": " + issue->message);
  std::vector<long long> levels;
  for (int k = 1; k < t.depth(); ++k) levels.push_back(psi_vertex(t.level(k), t.level(k + 1)));
  const long long total = psi_total(t);
  if (a.c.json) {
    out << json{{"psi", total}, {"levels", levels}}.dump(2) << "\n";
  } else {
    out << total << "\n";
  }
  return kSuccess;
}

// ---- analogs

struct AnalogArgs {
  Common c;
  std::string which;
  int n = 1;
};

int cmd_analogs(const AnalogArgs& a, std::ostream& out) {
  if (a.n > 8) throw ResourceLimit("analogs supports n <= 8");
  QPolynomial p;
  if (a.which == "R") {
    p = q_analog_randrianarivony(a.n);
  } else if (a.which == "HZ") {
    p = q_analog_han_zeng(a.n);
  } else {
    p = q_analog_zeng_zhou(a.n);
  }
  if (a.c.json) {
    out << json{{"which", a.which}, {"n", a.n}, {"coeffs", decimal_array(p.coeffs())}}.dump(2) << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return kSuccess;
}

// ---- hankel

struct HankelArgs {
  Common c;
  int size = 5;
  int offset = 0;
  double tolerance = 1e-6;
};

int cmd_hankel(const HankelArgs& a, std::ostream& out) {
  if (2 * (a.size - 1) + a.offset > kMaxQPolyColors) throw ResourceLimit("Hankel matrix needs T_2(n; q) beyond n = 12");
  const auto r = hankel_report(a.size, a.offset, a.tolerance, a.c.threads);
  if (a.c.json) {
    json j{{"size", r.k}, {"offset", r.offset}, {"determinant", decimal_array(r.determinant.coeffs())}};
    if (r.smallest_positive_root) {
      j["smallest_positive_root"] = {{"value", r.smallest_positive_root->value},
                                     {"lo", rational_text(r.smallest_positive_root->lo)},
                                     {"hi", rational_text(r.smallest_positive_root->hi)}};
    } else {
      j["smallest_positive_root"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << r.determinant.to_string() << "\n";
    if (r.smallest_positive_root) {
      out << "smallest positive root " << std::setprecision(10) << r.smallest_positive_root->value << "\n";
    } else {
      out << "no root in (0, 1)\n";
    }
  }
  return kSuccess;
}

// ---- cumulants

struct CumulantArgs {
  Common c;
  int orders = 5;
  std::string samples;
};

// Samples file: {"coefficients": [{"k": 2, "threshold": 5, "samples": [[11, "1185"], ...]}, ...]}
std::vector<RationalPolynomialInN> coefficient_polys_from_file(const std::string& path, int orders) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::vector<RationalPolynomialInN> polys(static_cast<std::size_t>(orders) + 1);
  std::vector<bool> have(polys.size(), false);
  try {
    for (const auto& entry : j.at("coefficients")) {
      const int k = entry.at("k").get<int>();
      if (k < 1 || k > orders) continue;
      const int threshold = entry.value("threshold", 0);
      std::vector<std::pair<int, BigInt>> samples;
      for (const auto& s : entry.at("samples")) {
        const auto& v = s.at(1);
        samples.emplace_back(s.at(0).get<int>(), v.is_string() ? parse_bigint(v.get<std::string>())
                                                                 : BigInt(v.get<long long>()));
      }
      polys[static_cast<std::size_t>(k)] = fit_coefficient_polynomial(k, samples, threshold);
      have[static_cast<std::size_t>(k)] = true;
    }
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  for (int k = 1; k <= orders; ++k) {
    if (!have[static_cast<std::size_t>(k)]) throw UsageError(path + ": no samples for k = " + std::to_string(k));
  }
  return polys;
}

int cmd_cumulants(const CumulantArgs& a, std::ostream& out) {
  std::vector<RationalPolynomialInN> a_k;
  if (a.samples.empty()) {
    const auto formulas = golden::coefficient_formulas();
    if (a.orders > static_cast<int>(formulas.size())) {
      throw UsageError("built-in coefficient formulas go up to order " + std::to_string(formulas.size()));
    }
    a_k.resize(static_cast<std::size_t>(a.orders) + 1);
    for (const auto& f : formulas) {
      if (f.k <= a.orders) a_k[static_cast<std::size_t>(f.k)] = f.poly;
    }
  } else {
    a_k = coefficient_polys_from_file(a.samples, a.orders);
  }
  std::vector<RationalPolynomialInN> moments{RationalPolynomialInN::constant(1)};
  for (int k = 1; k <= a.orders; ++k) moments.push_back(a_k[static_cast<std::size_t>(k)] * Rational(factorial(k)));
  const auto kappa = moments_to_cumulants(moments);
  if (a.c.json) {
    json arr = json::array();
    for (int k = 1; k <= a.orders; ++k) {
      arr.push_back({{"k", k}, {"kappa", rational_poly_json(kappa[static_cast<std::size_t>(k)])}});
    }
    out << json{{"cumulants", arr}}.dump(2) << "\n";
  } else {
    for (int k = 1; k <= a.orders; ++k) out << "kappa_" << k << " = " << kappa[static_cast<std::size_t>(k)].to_string() << "\n";
  }
  return kSuccess;
}

// ---- conjectures

struct ConjArgs {
  Common c;
  int n_max = 9;
};

int cmd_conjectures(const ConjArgs& a, std::ostream& out) {
  if (a.n_max > kMaxQPolyColors) throw ResourceLimit("conjectures needs P_n(q) for n <= 12");
  if (a.n_max < 1) throw UsageError("--n-max must be at least 1");
  json rows = json::array();
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    all = all && ok;
    rows.push_back({{"check", name}, {"pass", ok}});
    if (!a.c.json) out << (ok ? "PASS " : "FAIL ") << name << "\n";
  };
  const auto formulas = golden::coefficient_formulas();
  for (int n = 1; n <= a.n_max; ++n) {
    const QPolynomial p = p_polynomial(n, a.c.threads);
    report("log-concavity n=" + std::to_string(n), log_concavity_check(p));
    for (const auto& f : formulas) {
      if (n < f.threshold) continue;
      report("a_" + std::to_string(f.k) + " formula n=" + std::to_string(n),
             f.poly.evaluate(Rational(n)) == Rational(p.coeff(f.k)));
    }
  }
  for (const auto& f : formulas) {
    report("leading coefficient k=" + std::to_string(f.k), leading_coefficient_check(f.poly, f.k));
  }
  if (a.c.json) out << json{{"checks", rows}, {"pass", all}}.dump(2) << "\n";
  return all ? kSuccess : kVerificationFailed;
}

// ---- sample

struct SampleArgs {
  Common c;
  std::string preset;
  int colors = 3;
  double q = 1.0;
  std::uint64_t steps = 1'000'000;
  std::uint64_t burnin = 0;
  std::uint64_t thin = 1;
  std::uint64_t seed = 1;
  std::string out;
  bool pgm = false;
  bool final_state = false;
  bool validate = false;
  CLI::App* cmd = nullptr;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  std::vector<SamplerConfig> configs;
  auto given = [&](const char* flag) { return a.cmd->count(flag) > 0; };
  if (!a.preset.empty()) {
    configs = sampler_preset(a.preset);
  } else {
    configs.emplace_back();
  }
  for (auto& c : configs) {
    if (a.preset.empty() || given("--colors")) c.n = a.colors;
    if (a.preset.empty() || given("--q")) c.q = a.q;
    if (a.preset.empty() || given("--steps")) c.steps = a.steps;
    if (a.preset.empty() || given("--burnin")) c.burn_in = a.burnin;
    if (a.preset.empty() || given("--thin")) c.thinning = a.thin;
    if (a.preset.empty() || given("--seed")) c.seed = a.seed;
    c.validate_every_step = a.validate;
    try {
      validate_config(c);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  json runs = json::array();
  for (const auto& c : configs) {
    std::filesystem::path dir = a.out;
    if (configs.size() > 1) {
      std::ostringstream sub;
      sub << "q" << c.q;
      dir /= sub.str();
    }
    const RunResult r = run_chain(c);
    write_outputs(r, c, dir, OutputOptions{a.pgm, a.final_state});
    runs.push_back({{"dir", dir.string()},
                    {"colors", c.n},
                    {"q", c.q},
                    {"samples", r.stats.samples},
                    {"acceptance_rate", r.stats.acceptance_rate()},
                    {"final_psi", r.final_state.psi}});
    if (!a.c.json) {
      out << dir.string() << ": n=" << c.n << " q=" << c.q << " samples=" << r.stats.samples
          << " acceptance=" << r.stats.acceptance_rate() << " final_psi=" << r.final_state.psi << "\n";
    }
  }
  if (a.c.json) out << json{{"runs", runs}}.dump(2) << "\n";
  return kSuccess;
}

// ---- verify

struct VerifyArgs {
  Common c;
  bool fast = false;
  bool slow = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions o;
  o.fast = a.fast;
  o.slow = a.slow;
  o.threads = a.c.threads;
  if (!a.c.json) {
    o.on_result = [&](const CheckResult& r) {
      out << status_label(r.status) << " " << r.group << ": " << r.name;
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << std::endl;
    };
  }
  const auto results = run_golden_suite(o);
  std::size_t failed = 0, passed = 0, skipped = 0;
  json rows = json::array();
  for (const auto& r : results) {
    failed += r.status == CheckStatus::Fail;
    passed += r.status == CheckStatus::Pass;
    skipped += r.status == CheckStatus::Skip;
    rows.push_back({{"group", r.group}, {"name", r.name}, {"status", status_label(r.status)}, {"detail", r.detail}});
  }
  if (a.c.json) {
    out << json{{"checks", rows}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}.dump(2) << "\n";
  } else {
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed ? kVerificationFailed : kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored interlacing triangles: enumeration, q-statistics and sampling", "ctri"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "Count colored interlacing triangles T_N(n)");
  c_count->add_option("--depth", count.depth, "Depth N")->required()->check(CLI::Range(1, 64));
  c_count->add_option("--colors", count.colors, "Palette size n")->required()->check(CLI::PositiveNumber);
  c_count->add_flag("--no-top-symmetry", count.no_symmetry, "Do not quotient the final level by boundary swaps");
  c_count->add_option("--batch-size", count.batch_size, "Source rows per batch")->check(CLI::PositiveNumber);
  c_count->add_option("--max-frontier", count.max_frontier, "Abort (exit 3) above this many distinct rows")
      ->check(CLI::PositiveNumber);
  add_threads(c_count, count.c);
  add_json(c_count, count.c);

  QpolyArgs qpoly;
  auto* c_qpoly = app.add_subcommand("qpoly", "T_2(n; q), or the bottom-row refinement with --sigma");
  c_qpoly->add_option("--colors", qpoly.colors, "Palette size n")->required()->check(CLI::PositiveNumber);
  c_qpoly->add_option("--sigma", qpoly.sigma, "Bottom row, e.g. \"1 3 4 2\"");
  c_qpoly->add_flag("--normalized", qpoly.normalized, "Divide by 2^(n-1)");
  add_threads(c_qpoly, qpoly.c);
  add_json(c_qpoly, qpoly.c);

  CoeffsArgs coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "Low-degree coefficients a_0..a_{K-1} of T_2(n; q) / 2^(n-1)");
  c_coeffs->add_option("--colors", coeffs.colors, "Palette size n")->required()->check(CLI::PositiveNumber);
  c_coeffs->add_option("--kmax", coeffs.kmax, "Number of coefficients K")->required()->check(CLI::PositiveNumber);
  c_coeffs->add_option("--inv-cap", coeffs.inv_cap, "Only bottom rows with at most this many inversions (heuristic)")
      ->check(CLI::NonNegativeNumber);
  add_threads(c_coeffs, coeffs.c);
  add_json(c_coeffs, coeffs.c);

  PsiArgs psi;
  auto* c_psi = app.add_subcommand("psi", "Total psi of a triangle file (text or JSON)");
  c_psi->add_option("file", psi.file, "Triangle file")->required();
  add_json(c_psi, psi.c);

  AnalogArgs analogs;
  auto* c_analogs = app.add_subcommand("analogs", "Classical q-analogs of the Genocchi medians");
  c_analogs->add_option("--which", analogs.which, "R, HZ or ZZ")->required()->check(CLI::IsMember({"R", "HZ", "ZZ"}));
  c_analogs->add_option("--n", analogs.n, "Index n")->required()->check(CLI::PositiveNumber);
  add_json(c_analogs, analogs.c);

  HankelArgs hankel;
  auto* c_hankel = app.add_subcommand("hankel", "Hankel determinant of T_2(n; q) and its smallest root in (0, 1)");
  c_hankel->add_option("--size", hankel.size, "Matrix size k")->required()->check(CLI::PositiveNumber);
  c_hankel->add_option("--offset", hankel.offset, "0 or 1")->check(CLI::Range(0, 1));
  c_hankel->add_option("--tolerance", hankel.tolerance, "Root bracket width")->check(CLI::PositiveNumber);
  add_threads(c_hankel, hankel.c);
  add_json(c_hankel, hankel.c);

  CumulantArgs cumulants;
  auto* c_cum = app.add_subcommand("cumulants", "Cumulants of the normalized coefficients k! a_k(n)");
  c_cum->add_option("--orders", cumulants.orders, "Highest order")->check(CLI::PositiveNumber);
  c_cum->add_option("--samples", cumulants.samples, "JSON file with (n, a_k(n)) samples to fit instead of built-ins");
  add_json(c_cum, cumulants.c);

  ConjArgs conj;
  auto* c_conj = app.add_subcommand("conjectures", "Check log-concavity and coefficient formulas against P_n(q)");
  c_conj->add_option("--n-max", conj.n_max, "Largest n")->check(CLI::PositiveNumber);
  add_threads(c_conj, conj.c);
  add_json(c_conj, conj.c);

  SampleArgs sample;
  auto* c_sample = app.add_subcommand("sample", "Metropolis-Hastings sampling of depth-2 triangles");
  sample.cmd = c_sample;
  c_sample->add_option("--preset", sample.preset, "fig2-top, fig2-bottom or fig3")
      ->check(CLI::IsMember({"fig2-top", "fig2-bottom", "fig3"}));
  c_sample->add_option("--colors", sample.colors, "Palette size n");
  c_sample->add_option("--q", sample.q, "Weight parameter in (0, 1]");
  c_sample->add_option("--steps", sample.steps, "Total steps");
  c_sample->add_option("--burnin", sample.burnin, "Steps before the first sample");
  c_sample->add_option("--thin", sample.thin, "Steps between samples");
  c_sample->add_option("--seed", sample.seed, "RNG seed");
  c_sample->add_option("--out", sample.out, "Output directory")->required();
  c_sample->add_flag("--pgm", sample.pgm, "Also write PGM heatmaps");
  c_sample->add_flag("--final-state", sample.final_state, "Also write final_state.json");
  c_sample->add_flag("--validate", sample.validate, "Fully validate every accepted state");
  add_threads(c_sample, sample.c);  // accepted for uniformity; the chain is sequential
  add_json(c_sample, sample.c);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Recompute all reference values; exit 1 on any mismatch");
  c_verify->add_flag("--fast", verify.fast, "Skip the slower coefficient prefixes");
  c_verify->add_flag("--slow", verify.slow, "Include the large cells and P_8, P_9");
  add_threads(c_verify, verify.c);
  add_json(c_verify, verify.c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsageError;
  }

  try {
    if (c_count->parsed()) return cmd_count(count, out, err);
    if (c_qpoly->parsed()) return cmd_qpoly(qpoly, out);
    if (c_coeffs->parsed()) return cmd_coeffs(coeffs, out);
    if (c_psi->parsed()) return cmd_psi(psi, out);
    if (c_analogs->parsed()) return cmd_analogs(analogs, out);
    if (c_hankel->parsed()) return cmd_hankel(hankel, out);
    if (c_cum->parsed()) return cmd_cumulants(cumulants, out);
    if (c_conj->parsed()) return cmd_conjectures(conj, out);
    if (c_sample->parsed()) return cmd_sample(sample, out);
    if (c_verify->parsed()) return cmd_verify(verify, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace ctri::cli
