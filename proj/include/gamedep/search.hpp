#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamedep/derivation.hpp"
#include "gamedep/formula.hpp"

namespace gamedep {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) *
/// 0x94D049BB133111EB; return z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound) by reduction modulo `bound`.
  constexpr std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

enum class SearchMode { Systematic, Random };

struct SearchBounds {
  std::uint32_t max_strategies = 2;
  std::vector<Rational> payoff_values{Rational(0), Rational(1)};
  std::uint64_t max_profiles = 100'000;  // games above this are skipped
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::Random;
  std::uint64_t sample_count = 20000;    // game budget in either mode
};

/// Names accepted by builtin_game: coordination, table2, parity, consensus,
/// gamma1_mean_mod(<odd prime>), gamma2_rps.
std::vector<std::string> builtin_game_names();
Game builtin_game(std::string_view name);

/// gamma1 .. gamma5: the example dependency graphs.
DependencyGraph builtin_graph(std::string_view name);

/// Deterministic in (graph, bounds.seed, index). The generator is seeded
/// with `seed + index * 0xD1B54A32D192ED03`; strategy counts are drawn
/// first (1 + below(max_strategies), player order), then every payoff cell
/// (player order, row-major) as payoff_values[below(|payoff_values|)].
/// Strategy labels are "0", "1", ...
Game random_game(const DependencyGraph& graph, const SearchBounds& bounds, std::uint64_t index);

struct SearchOutcome {
  std::optional<Game> counterexample;
  std::uint64_t examined = 0;  // games whose formula value was computed
  std::uint64_t skipped = 0;   // games above max_profiles
  bool exhausted = false;      // systematic mode enumerated the whole space
};

/// Systematic order: strategy-count vectors by total then lexicographically,
/// then payoff assignments lexicographically over cells (player order,
/// row-major; earlier cells most significant; values in payoff_values
/// order). Random order: random_game(graph, bounds, 0), (…, 1), ...
SearchOutcome find_counterexample(const DependencyGraph& graph, const Formula& formula,
                                  const SearchBounds& bounds);

struct SoundnessReport {
  std::uint64_t games_tested = 0;
  std::uint64_t games_satisfying = 0;
  std::uint64_t atoms_checked = 0;
  std::uint64_t violations = 0;
  std::optional<Game> violating_game;
  std::optional<DependenceAtom> violating_atom;

  std::string str(const DependencyGraph& graph) const;
};

/// Samples random games (random_game stream), keeps those satisfying every
/// hypothesis and checks every derivable `X |> closure(X)` against them.
SoundnessReport fuzz_soundness(const DependencyGraph& graph, const Hypotheses& hyps,
                               const SearchBounds& bounds);

}  // namespace gamedep
