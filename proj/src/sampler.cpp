#include "ctri/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ctri/enumeration.hpp"
#include "ctri/psi.hpp"
#include "ctri/triangle_io.hpp"

namespace ctri {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SamplerRng::SamplerRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), engine_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t SamplerRng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index needs a positive bound");
  // Lemire's nearly divisionless method.
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double SamplerRng::uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::string SamplerRng::algorithm_id() {
  return "mt19937_64(splitmix64(seed ^ splitmix64(stream)));index=lemire-multiply-shift;real=53-bit";
}

Depth2State Depth2State::identity(int n) {
  if (n < 1) throw std::invalid_argument("palette must be at least 1");
  Depth2State s;
  s.n = n;
  for (int c = 1; c <= n; ++c) {
    s.bottom.push_back(static_cast<Color>(c));
    s.top.push_back(static_cast<Color>(c));
    s.top.push_back(static_cast<Color>(c));
  }
  s.psi = 0;
  return s;
}

Depth2State Depth2State::from_rows(std::vector<Color> bottom, std::vector<Color> top) {
  const int n = static_cast<int>(bottom.size());
  if (n < 1 || top.size() != 2 * bottom.size()) throw std::invalid_argument("depth-2 rows have sizes n and 2n");
  require_color_permutation(bottom, n);
  Depth2State s;
  s.n = n;
  s.bottom = std::move(bottom);
  s.top = std::move(top);
  if (!Row(n, 2, s.top).has_valid_multiplicities() || !s.interlaces()) {
    throw std::invalid_argument("rows do not form a depth-2 triangle");
  }
  s.psi = s.recompute_psi();
  return s;
}

Depth2State Depth2State::from_triangle(const Triangle& t) {
  if (t.depth() != 2) throw std::invalid_argument("expected a depth-2 triangle");
  const auto b = t.level(1).entries();
  const auto u = t.level(2).entries();
  return from_rows(std::vector<Color>(b.begin(), b.end()), std::vector<Color>(u.begin(), u.end()));
}

Triangle Depth2State::to_triangle() const { return Triangle({Row(n, 1, bottom), Row(n, 2, top)}); }

bool Depth2State::interlaces() const { return is_interlacing(n, 1, bottom, top); }

long long Depth2State::recompute_psi() const { return psi_scan(n, 1, bottom, top); }

std::string Depth2State::key() const {
  std::string k;
  k.reserve(bottom.size() + top.size());
  for (Color c : bottom) k.push_back(static_cast<char>(c));
  for (Color c : top) k.push_back(static_cast<char>(c));
  return k;
}

namespace {

// For a color with top slots t1 < t2 and bottom position j (all 1-based), the
// merged order puts the bottom entry between top slots 2j-1 and 2j. The top
// row is read with entries swap_at, swap_at+1 (0-based) exchanged.
bool color_interlaces(const Depth2State& s, Color c, int swap_at) {
  int t1 = 0, t2 = 0;
  for (int p = 1; p <= 2 * s.n; ++p) {
    int read = p - 1;
    if (read == swap_at) {
      read = swap_at + 1;
    } else if (read == swap_at + 1) {
      read = swap_at;
    }
    if (s.top[static_cast<std::size_t>(read)] != c) continue;
    (t1 ? t2 : t1) = p;
  }
  int j = 0;
  for (int p = 1; p <= s.n; ++p) {
    if (s.bottom[static_cast<std::size_t>(p - 1)] == c) j = p;
  }
  return t1 <= 2 * j - 1 && t2 >= 2 * j;
}

}  // namespace

bool level2_swap_is_valid(const Depth2State& state, int p) {
  if (p < 1 || p > 2 * state.n - 1) throw std::out_of_range("level-2 swap position out of range");
  const Color a = state.top[static_cast<std::size_t>(p - 1)];
  const Color b = state.top[static_cast<std::size_t>(p)];
  if (a == b) return true;
  return color_interlaces(state, a, p - 1) && color_interlaces(state, b, p - 1);
}

namespace {

// Top entries overwritten by a move, for undoing a rejected proposal.
struct TopEdits {
  int count = 0;
  std::array<int, 2> index{};
  std::array<Color, 2> old{};
  void set(std::vector<Color>& top, int p, Color c) {
    index[static_cast<std::size_t>(count)] = p;
    old[static_cast<std::size_t>(count)] = top[static_cast<std::size_t>(p)];
    ++count;
    top[static_cast<std::size_t>(p)] = c;
  }
  void undo(std::vector<Color>& top) const {
    for (int e = count - 1; e >= 0; --e) top[static_cast<std::size_t>(index[static_cast<std::size_t>(e)])] = old[static_cast<std::size_t>(e)];
  }
};

// Applies the level-1 swap to s in place, leaving s.psi stale.
TopEdits level1_apply(Depth2State& s, int i) {
  const int n = s.n;
  if (i < 1 || i > n - 1) throw std::out_of_range("level-1 swap position out of range");
  const Color a = s.bottom[static_cast<std::size_t>(i - 1)];
  const Color b = s.bottom[static_cast<std::size_t>(i)];
  std::swap(s.bottom[static_cast<std::size_t>(i - 1)], s.bottom[static_cast<std::size_t>(i)]);

  // 0-based top indices of the between region.
  const int left = 2 * i - 1;
  const int right = 2 * i;
  auto& top = s.top;
  auto in_region = [&](Color c) -> int {
    for (int p = left; p <= right; ++p) {
      if (top[static_cast<std::size_t>(p)] == c) return p;
    }
    return -1;
  };
  // Nearest copy of c strictly left (dir = -1) or right (dir = +1) of the region.
  auto nearest_outside = [&](Color c, int dir) -> int {
    if (dir < 0) {
      for (int p = left - 1; p >= 0; --p) {
        if (top[static_cast<std::size_t>(p)] == c) return p;
      }
    } else {
      for (int p = right + 1; p < 2 * n; ++p) {
        if (top[static_cast<std::size_t>(p)] == c) return p;
      }
    }
    throw std::logic_error("level-1 reconciliation found no copy outside the between region");
  };

  TopEdits edits;
  const int pa = in_region(a);
  const int pb = in_region(b);
  if (pa >= 0 && pb < 0) {
    const int rb = nearest_outside(b, +1);
    edits.set(top, pa, b);
    edits.set(top, rb, a);
  } else if (pb >= 0 && pa < 0) {
    const int la = nearest_outside(a, -1);
    edits.set(top, pb, a);
    edits.set(top, la, b);
  } else if (pa >= 0 && pb >= 0) {
    const int la = nearest_outside(a, -1);
    const int rb = nearest_outside(b, +1);
    edits.set(top, la, b);
    edits.set(top, rb, a);
  }
  return edits;
}

}  // namespace

std::optional<Depth2State> level2_swap(const Depth2State& state, int p) {
  if (!level2_swap_is_valid(state, p)) return std::nullopt;
  Depth2State next = state;
  auto& top = next.top;
  if (top[static_cast<std::size_t>(p - 1)] != top[static_cast<std::size_t>(p)]) {
    std::swap(top[static_cast<std::size_t>(p - 1)], top[static_cast<std::size_t>(p)]);
    next.psi = next.recompute_psi();
  }
  return next;
}

Depth2State level1_swap(const Depth2State& state, int i) {
  Depth2State next = state;
  level1_apply(next, i);
  next.psi = next.recompute_psi();
  return next;
}

StepOutcome mh_step(Depth2State& state, double q, SamplerRng& rng) {
  const int n = state.n;
  const int moves = 3 * n - 2;
  const int move = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(moves)));
  const double u = rng.uniform_real();
  const long long before = state.psi;
  long long after = before;
  TopEdits edits;
  int level1_at = 0;
  const bool level2 = move < 2 * n - 1;
  if (level2) {
    const int p = move + 1;
    if (!level2_swap_is_valid(state, p)) return {StepKind::Invalid, move};
    if (state.top[static_cast<std::size_t>(p - 1)] == state.top[static_cast<std::size_t>(p)]) {
      return {StepKind::Accepted, move};
    }
    std::swap(state.top[static_cast<std::size_t>(p - 1)], state.top[static_cast<std::size_t>(p)]);
    after = state.recompute_psi();
  } else {
    level1_at = move - (2 * n - 1) + 1;
    edits = level1_apply(state, level1_at);
    after = state.recompute_psi();
  }
  const long long delta = after - before;
  // u < 1 always, so alpha >= 1 accepts.
  const double alpha = delta == 0 ? 1.0 : std::pow(q, static_cast<double>(delta));
  if (u < alpha) {
    state.psi = after;
    return {StepKind::Accepted, move};
  }
  if (level2) {
    std::swap(state.top[static_cast<std::size_t>(move)], state.top[static_cast<std::size_t>(move + 1)]);
  } else {
    edits.undo(state.top);
    std::swap(state.bottom[static_cast<std::size_t>(level1_at - 1)], state.bottom[static_cast<std::size_t>(level1_at)]);
  }
  return {StepKind::Rejected, move};
}

void validate_config(const SamplerConfig& config) {
  if (config.n < 1 || config.n > 255) throw std::invalid_argument("sampler palette must be in 1..255");
  if (!(config.q > 0.0) || !(config.q <= 1.0)) throw std::invalid_argument("q must lie in (0, 1]");
  if (config.thinning < 1) throw std::invalid_argument("thinning must be at least 1");
  if (config.steps < config.burn_in) throw std::invalid_argument("steps must be at least burn_in");
}

void SamplerStats::record(const Depth2State& state) {
  for (int p = 0; p < n; ++p) ++level1_heatmap[state.bottom[static_cast<std::size_t>(p)] - 1u][static_cast<std::size_t>(p)];
  for (int p = 0; p < 2 * n; ++p) ++level2_heatmap[state.top[static_cast<std::size_t>(p)] - 1u][static_cast<std::size_t>(p)];
  ++psi_histogram[state.psi];
  ++samples;
}

RunResult run_chain(const SamplerConfig& config, const std::function<void(const Depth2State&)>& on_sample) {
  validate_config(config);
  const int n = config.n;
  RunResult result{SamplerStats{}, Depth2State::identity(n)};
  SamplerStats& stats = result.stats;
  stats.n = n;
  stats.level1_heatmap.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  stats.level2_heatmap.assign(static_cast<std::size_t>(n),
                              std::vector<std::uint64_t>(static_cast<std::size_t>(2 * n), 0));

  SamplerRng rng(config.seed);
  Depth2State& state = result.final_state;
  for (std::uint64_t t = 1; t <= config.steps; ++t) {
    const StepOutcome outcome = mh_step(state, config.q, rng);
    ++stats.steps;
    switch (outcome.kind) {
      case StepKind::Invalid: ++stats.invalid; break;
      case StepKind::Rejected: ++stats.rejected; break;
      case StepKind::Accepted:
        ++stats.accepted;
        if (config.validate_every_step) {
          if (!validate_triangle(state.to_triangle()) || state.psi != state.recompute_psi()) {
            throw std::logic_error("sampler produced an invalid state at step " + std::to_string(t));
          }
        }
        break;
    }
#ifndef NDEBUG
    if (t % 100000 == 0 && state.psi != state.recompute_psi()) {
      throw std::logic_error("cached psi drifted at step " + std::to_string(t));
    }
#endif
    if (t > config.burn_in && (t - config.burn_in) % config.thinning == 0) {
      stats.record(state);
      if (on_sample) on_sample(state);
    }
  }
  return result;
}

std::vector<SamplerConfig> sampler_preset(const std::string& name) {
  SamplerConfig c;
  c.seed = 1;
  c.preset = name;
  if (name == "fig2-top" || name == "fig2-bottom") {
    c.n = 50;
    c.q = name == "fig2-top" ? 0.2 : 0.98;
    c.steps = 10'000'000;
    c.burn_in = 0;
    c.thinning = c.steps;  // one sample: the final state
    return {c};
  }
  if (name == "fig3") {
    c.n = 25;
    c.burn_in = 1'000'000;
    c.thinning = 10'000;
    c.steps = c.burn_in + c.thinning * 100'000;
    SamplerConfig low = c, high = c;
    low.q = 0.2;
    high.q = 0.9;
    return {low, high};
  }
  throw std::invalid_argument("unknown preset '" + name + "' (expected fig2-top, fig2-bottom or fig3)");
}

namespace {

void write_matrix_csv(const std::filesystem::path& path, const std::vector<std::vector<std::uint64_t>>& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
    out << '\n';
  }
}

void write_pgm(const std::filesystem::path& path, const std::vector<std::vector<std::uint64_t>>& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::uint64_t peak = 0;
  for (const auto& row : m) peak = std::max(peak, *std::max_element(row.begin(), row.end()));
  out << "P5\n" << cols << ' ' << rows << "\n255\n";
  for (const auto& row : m) {
    for (std::uint64_t v : row) {
      const auto level = peak ? static_cast<unsigned char>((v * 255 + peak / 2) / peak) : 0;
      out.put(static_cast<char>(level));
    }
  }
}

}  // namespace

void write_outputs(const RunResult& result, const SamplerConfig& config, const std::filesystem::path& dir,
                   const OutputOptions& options) {
  std::filesystem::create_directories(dir);
  const SamplerStats& stats = result.stats;
  write_matrix_csv(dir / "level1.csv", stats.level1_heatmap);
  write_matrix_csv(dir / "level2.csv", stats.level2_heatmap);
  {
    std::ofstream out(dir / "psi_hist.csv");
    if (!out) throw std::runtime_error("cannot write psi_hist.csv");
    out << "psi,count\n";
    for (const auto& [psi, count] : stats.psi_histogram) out << psi << ',' << count << '\n';
  }
  nlohmann::json meta = {
      {"config",
       {{"n", config.n},
        {"q", config.q},
        {"steps", config.steps},
        {"burn_in", config.burn_in},
        {"thinning", config.thinning},
        {"seed", config.seed},
        {"preset", config.preset}}},
      {"rng", SamplerRng::algorithm_id()},
      {"samples", stats.samples},
      {"accepted", stats.accepted},
      {"rejected", stats.rejected},
      {"invalid", stats.invalid},
      {"acceptance_rate", stats.acceptance_rate()},
      {"final_psi", result.final_state.psi},
  };
  {
    std::ofstream out(dir / "meta.json");
    if (!out) throw std::runtime_error("cannot write meta.json");
    out << meta.dump(2) << '\n';
  }
  if (options.pgm) {
    write_pgm(dir / "level1.pgm", stats.level1_heatmap);
    write_pgm(dir / "level2.pgm", stats.level2_heatmap);
  }
  if (options.final_state) {
    std::ofstream out(dir / "final_state.json");
    if (!out) throw std::runtime_error("cannot write final_state.json");
    out << to_json(result.final_state.to_triangle()).dump() << '\n';
  }
}

std::vector<Depth2State> all_depth2_states(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("exhaustive depth-2 enumeration supports 1..6 colors");
  const Row identity = Row::staircase(n, 1);
  std::vector<std::vector<Color>> tops;
  ExtensionPlan(n, 1, identity.entries(), false).for_each([&](std::span<const Color> t) {
    tops.emplace_back(t.begin(), t.end());
  });
  std::vector<Color> sigma(identity.entries().begin(), identity.entries().end());
  std::vector<Depth2State> states;
  do {
    for (const auto& t : tops) {
      Depth2State s;
      s.n = n;
      s.bottom = sigma;
      s.top.resize(t.size());
      for (std::size_t p = 0; p < t.size(); ++p) s.top[p] = sigma[t[p] - 1u];
      s.psi = s.recompute_psi();
      states.push_back(std::move(s));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return states;
}

std::map<std::string, double> exact_distribution(int n, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  const auto states = all_depth2_states(n);
  double z = 0.0;
  for (const auto& s : states) z += std::pow(q, static_cast<double>(s.psi));
  std::map<std::string, double> out;
  for (const auto& s : states) out[s.key()] = std::pow(q, static_cast<double>(s.psi)) / z;
  return out;
}

std::map<std::string, Rational> exact_distribution(int n, const Rational& q) {
  if (q <= 0) throw std::invalid_argument("q must be positive");
  const auto states = all_depth2_states(n);
  const long long max_psi = psi_upper_bound(n, 1);
  std::vector<Rational> powers(static_cast<std::size_t>(max_psi) + 1, Rational(1));
  for (std::size_t e = 1; e < powers.size(); ++e) powers[e] = powers[e - 1] * q;
  Rational z = 0;
  for (const auto& s : states) z += powers[static_cast<std::size_t>(s.psi)];
  std::map<std::string, Rational> out;
  for (const auto& s : states) out[s.key()] = powers[static_cast<std::size_t>(s.psi)] / z;
  return out;
}

double total_variation_distance(const std::map<std::string, double>& exact,
                                const std::map<std::string, std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (const auto& [key, c] : counts) total += c;
  if (total == 0) throw std::invalid_argument("no samples");
  double sum = 0.0;
  for (const auto& [key, p] : exact) {
    const auto it = counts.find(key);
    const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
    sum += std::abs(observed - p);
  }
  for (const auto& [key, c] : counts) {
    if (!exact.contains(key)) sum += static_cast<double>(c) / static_cast<double>(total);
  }
  return sum / 2.0;
}

ConnectivityReport connectivity_check(int n) {
  ConnectivityReport report;
  report.total = all_depth2_states(n).size();
  std::unordered_set<std::string> seen;
  std::deque<Depth2State> queue;
  const Depth2State start = Depth2State::identity(n);
  seen.insert(start.key());
  queue.push_back(start);
  while (!queue.empty()) {
    const Depth2State s = std::move(queue.front());
    queue.pop_front();
    auto visit = [&](Depth2State next) {
      if (seen.insert(next.key()).second) queue.push_back(std::move(next));
    };
    for (int p = 1; p <= 2 * n - 1; ++p) {
      if (auto next = level2_swap(s, p)) visit(std::move(*next));
    }
    for (int i = 1; i <= n - 1; ++i) visit(level1_swap(s, i));
  }
  report.reached = seen.size();
  return report;
}

}  // namespace ctri
