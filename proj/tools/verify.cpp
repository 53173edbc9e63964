#include "verify.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "ctri/dumont.hpp"
#include "ctri/enumeration.hpp"
#include "ctri/golden.hpp"
#include "ctri/psi.hpp"
#include "ctri/q_enumeration.hpp"
#include "ctri/sampler.hpp"

namespace ctri::cli {

const char* status_label(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

namespace {

class Suite {
 public:
  explicit Suite(const VerifyOptions& o) : opts_(o) {}

  void add(std::string group, std::string name, bool ok, std::string detail = {}) {
    emit({std::move(group), std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }
  void skip(std::string group, std::string name, std::string why) {
    emit({std::move(group), std::move(name), CheckStatus::Skip, std::move(why)});
  }
  // Runs body; an exception becomes a failure instead of aborting the suite.
  template <class F>
  void guarded(const std::string& group, const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(group, name, false, std::string("threw: ") + e.what());
    }
  }

  const VerifyOptions& opts() const { return opts_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void emit(CheckResult r) {
    if (opts_.on_result) opts_.on_result(r);
    results_.push_back(std::move(r));
  }
  const VerifyOptions& opts_;
  std::vector<CheckResult> results_;
};

std::string cell_name(int depth, int colors) {
  return "T_" + std::to_string(depth) + "(" + std::to_string(colors) + ")";
}

void check_counts(Suite& s, std::map<std::pair<int, int>, BigInt>& computed) {
  CountOptions co;
  co.threads = s.opts().threads;
  for (const auto& cell : golden::triangle_counts()) {
    const std::string name = cell_name(cell.depth, cell.colors);
    if (cell.slow && !s.opts().slow) {
      s.skip("counts", name, "large cell, run with --slow");
      continue;
    }
    s.guarded("counts", name, [&] {
      const BigInt total = count_triangles(cell.depth, cell.colors, co).total;
      computed[{cell.depth, cell.colors}] = total;
      s.add("counts", name, total == BigInt(cell.value), to_decimal(total));
    });
  }
  // first row and column follow closed forms
  s.guarded("counts", "T_1(n) = n!", [&] {
    bool ok = true;
    for (int n = 1; n <= 7; ++n) ok = ok && count_triangles(1, n, co).total == factorial(n);
    s.add("counts", "T_1(n) = n! for n <= 7", ok);
  });
  s.guarded("counts", "T_N(2) = 2^N", [&] {
    bool ok = true;
    for (int depth = 1; depth <= 8; ++depth) ok = ok && count_triangles(depth, 2, co).total == (BigInt(1) << depth);
    s.add("counts", "T_N(2) = 2^N for N <= 8", ok);
  });

  for (const auto& v : golden::two_adic_valuations()) {
    const std::string name = "v2(" + cell_name(v.depth, v.colors) + " / n!)";
    const auto it = computed.find({v.depth, v.colors});
    if (it == computed.end()) {
      s.skip("valuations", name, "count not computed");
      continue;
    }
    const int got = two_adic_valuation(it->second / factorial(v.colors));
    s.add("valuations", name, got == v.valuation, std::to_string(got));
  }
  for (const auto& d : golden::prime_divisors()) {
    const std::string name = std::to_string(d.divisor) + " | " + cell_name(d.depth, d.colors);
    const auto it = computed.find({d.depth, d.colors});
    if (it == computed.end()) {
      s.skip("divisors", name, "count not computed");
      continue;
    }
    s.add("divisors", name, divisor_check(it->second, d.divisor));
  }
}

void check_genocchi(Suite& s) {
  const auto h = golden::genocchi_medians();
  for (std::size_t n = 0; n < h.size(); ++n) {
    s.guarded("genocchi", "H_" + std::to_string(n), [&] {
      const BigInt got = count_dumont(static_cast<int>(n), s.opts().threads);
      s.add("genocchi", "H_" + std::to_string(n), got == h[n], to_decimal(got));
    });
  }
  s.guarded("genocchi", "T_2(n) = n! H_n", [&] {
    bool ok = true;
    CountOptions co;
    co.threads = s.opts().threads;
    for (int n = 1; n <= 6; ++n) {
      ok = ok && count_triangles(2, n, co).total == factorial(n) * count_dumont(n, s.opts().threads);
    }
    s.add("genocchi", "T_2(n) = n! H_n for n <= 6", ok);
  });
}

void check_qpolys(Suite& s) {
  const int max_n = s.opts().slow ? golden::p_listing_max() : 7;
  for (int n = 1; n <= golden::p_listing_max(); ++n) {
    const std::string name = "P_" + std::to_string(n);
    if (n > max_n) {
      s.skip("qpoly", name, "run with --slow");
      continue;
    }
    s.guarded("qpoly", name, [&] {
      const QPolynomial p = p_polynomial(n, s.opts().threads);
      const int deg = n * (n - 1) / 2;
      const bool ok = p == golden::p_listing(n) && p.degree() == deg && palindrome_check(p, deg) &&
                      log_concavity_check(p);
      s.add("qpoly", name, ok, p.to_string());
    });
  }
  for (const auto& h : golden::h_sigma_values()) {
    std::string sigma;
    for (auto c : h.sigma) sigma += std::to_string(c);
    s.guarded("qpoly", "H^" + sigma, [&] {
      const QPolynomial got = h_sigma_polynomial(h.sigma);
      s.add("qpoly", "H^" + sigma, got == h.poly, got.to_string());
    });
  }
}

void check_analogs(Suite& s) {
  struct Family {
    golden::Analog which;
    const char* label;
    QPolynomial (*compute)(int);
  };
  const Family families[] = {
      {golden::Analog::Randrianarivony, "R", q_analog_randrianarivony},
      {golden::Analog::HanZeng, "HZ", q_analog_han_zeng},
      {golden::Analog::ZengZhou, "ZZ", q_analog_zeng_zhou},
  };
  for (const auto& f : families) {
    for (int n = 1; n <= 5; ++n) {
      const std::string name = std::string(f.label) + " n=" + std::to_string(n);
      s.guarded("analogs", name, [&] {
        const QPolynomial got = f.compute(n);
        const bool ok = got == golden::known_analog(f.which, n) &&
                        got.evaluate(BigInt(1)) == golden::genocchi_medians()[static_cast<std::size_t>(n)];
        s.add("analogs", name, ok, got.to_string());
      });
    }
  }
}

void check_low_coefficients(Suite& s) {
  const int a1_max = s.opts().fast ? 9 : (s.opts().slow ? 15 : 13);
  s.guarded("coefficients", "a_1 law", [&] {
    bool ok = true;
    for (int n = 3; n <= a1_max; ++n) ok = ok && a1_check(n, s.opts().threads);
    s.add("coefficients", "a_1(n) = 5(n - 2) for 3 <= n <= " + std::to_string(a1_max), ok);
  });
  const int prefix_max = s.opts().fast ? golden::p_prefix_min() - 1 : (s.opts().slow ? golden::p_prefix_max() : 13);
  for (int n = golden::p_prefix_min(); n <= golden::p_prefix_max(); ++n) {
    const std::string name = "prefix P_" + std::to_string(n);
    if (n > prefix_max) {
      s.skip("coefficients", name, s.opts().fast ? "skipped by --fast" : "run with --slow");
      continue;
    }
    s.guarded("coefficients", name, [&] {
      const auto want = golden::p_prefix(n);
      const auto got = low_coefficients(n, static_cast<int>(want.size()), std::nullopt, s.opts().threads);
      std::string text;
      for (const auto& c : got.coeffs) text += (text.empty() ? "" : " ") + to_decimal(c);
      s.add("coefficients", name, got.coeffs == want && !got.heuristic, text);
    });
  }
  for (const auto& f : golden::coefficient_formulas()) {
    s.add("coefficients", "leading coefficient of " + std::to_string(f.k) + "! a_" + std::to_string(f.k),
          leading_coefficient_check(f.poly, f.k));
  }
  s.guarded("cumulants", "cumulants of k! a_k", [&] {
    std::vector<RationalPolynomialInN> moments{RationalPolynomialInN::constant(1)};
    for (const auto& f : golden::coefficient_formulas()) moments.push_back(f.poly * Rational(factorial(f.k)));
    const auto kappa = moments_to_cumulants(moments);
    const auto want = golden::cumulant_formulas();
    for (std::size_t k = 1; k < want.size(); ++k) {
      s.add("cumulants", "kappa_" + std::to_string(k), kappa[k] == want[k], kappa[k].to_string());
    }
  });
}

void check_hankel(Suite& s) {
  for (const auto& root : golden::hankel_roots()) {
    const std::string name = "size " + std::to_string(root.size) + " offset " + std::to_string(root.offset);
    s.guarded("hankel", name, [&] {
      const HankelReport r = hankel_report(root.size, root.offset, 1e-7, s.opts().threads);
      if (!r.smallest_positive_root) {
        s.add("hankel", name, false, "no root in (0, 1)");
        return;
      }
      const double c = r.smallest_positive_root->value;
      const bool ok = std::abs(c - root.value) <= 1e-4 && r.determinant.evaluate(c / 2) < 0 &&
                      r.determinant.evaluate(BigInt(1)) >= 0;
      std::ostringstream os;
      os << "root " << c;
      s.add("hankel", name, ok, os.str());
    });
  }
}

void check_examples(Suite& s) {
  s.guarded("psi", "examples", [&] {
    const Triangle t = golden::example_triangle_n3();
    s.add("psi", "merged rendering", merge_rows(t.level(1), t.level(2)).to_string() ==
                                         golden::example_triangle_n3_merged_first());
    const auto want = golden::example_triangle_n3_psi();
    s.add("psi", "n=3 depth-3 example",
          psi_vertex(t.level(1), t.level(2)) == want[0] && psi_vertex(t.level(2), t.level(3)) == want[1]);
    s.add("psi", "n=4 depth-2 example",
          psi_vertex(golden::example_depth2_bottom(), golden::example_depth2_top()) == golden::example_depth2_psi() &&
              psi_formula(golden::example_depth2_bottom(), golden::example_depth2_top()) ==
                  golden::example_depth2_psi());
    s.add("psi", "psi below inv(sigma)",
          psi_vertex(golden::example_low_psi_bottom(), golden::example_low_psi_top()) ==
              golden::example_low_psi_value());
  });
}

void check_sampler(Suite& s) {
  for (int n = 1; n <= 4; ++n) {
    s.guarded("sampler", "connectivity n=" + std::to_string(n), [&] {
      const auto r = connectivity_check(n);
      s.add("sampler", "connectivity n=" + std::to_string(n), r.connected() && r.total == r.reached,
            std::to_string(r.reached) + " of " + std::to_string(r.total));
    });
  }
  for (double q : {0.2, 0.5, 1.0}) {
    std::ostringstream name;
    name << "TV n=3 q=" << q;
    s.guarded("sampler", name.str(), [&] {
      SamplerConfig c;
      c.n = 3;
      c.q = q;
      c.steps = 10'000'000;
      c.thinning = 10;
      c.seed = 12345;
      std::map<std::string, std::uint64_t> counts;
      run_chain(c, [&](const Depth2State& st) { ++counts[st.key()]; });
      const double tv = total_variation_distance(exact_distribution(3, q), counts);
      std::ostringstream os;
      os << "tv " << tv;
      s.add("sampler", name.str(), tv < 0.01, os.str());
    });
  }
}

}  // namespace

std::vector<CheckResult> run_golden_suite(const VerifyOptions& options) {
  Suite s(options);
  std::map<std::pair<int, int>, BigInt> computed;
  check_counts(s, computed);
  check_genocchi(s);
  check_qpolys(s);
  check_analogs(s);
  check_low_coefficients(s);
  check_hankel(s);
  check_examples(s);
  check_sampler(s);
  return s.take();
}

}  // namespace ctri::cli
