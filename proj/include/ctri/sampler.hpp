#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctri/bigint.hpp"
#include "ctri/core_model.hpp"

namespace ctri {

/// Seedable 64-bit stream: std::mt19937_64 keyed by splitmix64(seed, stream).
/// Index and real draws are implemented here rather than through the standard
/// distributions, whose output is not specified bit-for-bit across libraries.
class SamplerRng {
 public:
  explicit SamplerRng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform integer in [0, bound), bound >= 1 (multiply-shift with rejection).
  std::uint64_t uniform_index(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_real();
  /// Independent stream derived from the same seed.
  SamplerRng split(std::uint64_t stream) const { return SamplerRng(seed_, stream); }

  static std::string algorithm_id();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Depth-2 triangle: bottom is a permutation of 1..n, top holds each color twice.
struct Depth2State {
  int n = 0;
  std::vector<Color> bottom;
  std::vector<Color> top;
  long long psi = 0;  // cached psi(bottom, top)

  /// bottom (1..n), top (1,1,2,2,...,n,n), psi 0.
  static Depth2State identity(int n);
  /// Builds a state from rows and computes psi; throws if they do not interlace.
  static Depth2State from_rows(std::vector<Color> bottom, std::vector<Color> top);
  static Depth2State from_triangle(const Triangle& t);
  Triangle to_triangle() const;

  bool interlaces() const;
  long long recompute_psi() const;
  /// Compact key (bottom then top, one byte per color), unique per state.
  std::string key() const;

  friend bool operator==(const Depth2State&, const Depth2State&) = default;
};

/// Exchanges top entries p and p+1 (1-based, 1 <= p <= 2n-1). Returns
/// std::nullopt when the result does not interlace. Equal colors give the
/// same state back.
std::optional<Depth2State> level2_swap(const Depth2State& state, int p);

/// Validity of level2_swap from the two affected colors only.
bool level2_swap_is_valid(const Depth2State& state, int p);

/// Exchanges bottom entries i and i+1 (1-based, 1 <= i <= n-1) and repairs the
/// top row. The two top entries between bottom positions i and i+1 in merged
/// order (1-based top slots 2i and 2i+1) form the between region.
Depth2State level1_swap(const Depth2State& state, int i);

enum class StepKind { Invalid, Rejected, Accepted };

struct StepOutcome {
  StepKind kind;
  int move;  // 0-based move index in [0, 3n-2)
};

/// One Metropolis-Hastings step: a uniform move among the 2n-1 level-2 and the
/// n-1 level-1 swaps, accepted with probability min(1, q^(psi' - psi)).
/// Always consumes exactly two draws from rng.
StepOutcome mh_step(Depth2State& state, double q, SamplerRng& rng);

struct SamplerConfig {
  int n = 3;
  double q = 1.0;
  std::uint64_t steps = 1'000'000;
  std::uint64_t burn_in = 0;
  std::uint64_t thinning = 1;
  std::uint64_t seed = 1;
  bool validate_every_step = false;  // full validation of each accepted state
  std::string preset;                // informational
};

/// Throws std::invalid_argument on an inconsistent configuration.
void validate_config(const SamplerConfig& config);

struct SamplerStats {
  int n = 0;
  std::vector<std::vector<std::uint64_t>> level1_heatmap;  // [color][position], n x n
  std::vector<std::vector<std::uint64_t>> level2_heatmap;  // [color][position], n x 2n
  std::map<long long, std::uint64_t> psi_histogram;
  std::uint64_t samples = 0;
  std::uint64_t steps = 0;
  std::uint64_t invalid = 0;
  std::uint64_t rejected = 0;
  std::uint64_t accepted = 0;

  /// Accepted moves over all steps (invalid level-2 proposals count as steps).
  double acceptance_rate() const { return steps ? static_cast<double>(accepted) / static_cast<double>(steps) : 0.0; }
  void record(const Depth2State& state);
};

struct RunResult {
  SamplerStats stats;
  Depth2State final_state;
};

/// Runs the chain from the identity state: burn_in steps, then a sample every
/// thinning steps until steps in total. on_sample sees every sampled state.
RunResult run_chain(const SamplerConfig& config,
                    const std::function<void(const Depth2State&)>& on_sample = {});

/// Named figure presets: "fig2-top", "fig2-bottom", "fig3" (two configs, q = 0.2 and 0.9).
std::vector<SamplerConfig> sampler_preset(const std::string& name);

struct OutputOptions {
  bool pgm = false;
  bool final_state = false;
};

/// Writes level1.csv, level2.csv, psi_hist.csv, meta.json and optionally the
/// PGM heatmaps and final_state.json into dir (created if needed).
void write_outputs(const RunResult& result, const SamplerConfig& config, const std::filesystem::path& dir,
                   const OutputOptions& options = {});

/// Every depth-2 state for a palette of size n (n! * H_n of them).
std::vector<Depth2State> all_depth2_states(int n);

/// Probability q^psi / T_2(n; q) of each state, keyed by Depth2State::key().
std::map<std::string, double> exact_distribution(int n, double q);
std::map<std::string, Rational> exact_distribution(int n, const Rational& q);

/// Total variation distance between an exact distribution and observed counts,
/// both keyed by Depth2State::key(). Keys missing on either side count as zero.
double total_variation_distance(const std::map<std::string, double>& exact,
                                const std::map<std::string, std::uint64_t>& counts);

struct ConnectivityReport {
  std::size_t reached = 0;
  std::size_t total = 0;
  bool connected() const { return reached == total; }
};

/// Breadth-first search over both move types from the identity state.
ConnectivityReport connectivity_check(int n);

}  // namespace ctri
