#pragma once
// Random graphs, games and formulas for round-trip and property tests.

#include <string>
#include <vector>

#include "gamedep/core.hpp"
#include "gamedep/formula.hpp"
#include "gamedep/search.hpp"

namespace gen {

using gamedep::SplitMix64;

inline std::string name(SplitMix64& rng, const char* first_chars) {
  static const char tail[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
  const std::string firsts(first_chars);
  std::string out(1, firsts[rng.below(firsts.size())]);
  const std::size_t len = rng.below(5);
  for (std::size_t i = 0; i < len; ++i) out += tail[rng.below(sizeof(tail) - 1)];
  return out;
}

inline gamedep::DependencyGraph graph(SplitMix64& rng, std::size_t max_players) {
  const std::size_t n = 1 + rng.below(max_players);
  std::vector<std::string> names;
  while (names.size() < n) {
    std::string candidate = name(rng, "abcdefghijklmnopqrstuvwxyzPQ");
    if (!gamedep::is_player_name(candidate)) continue;
    bool fresh = true;
    for (const auto& existing : names) fresh = fresh && existing != candidate;
    if (fresh) names.push_back(candidate);
  }
  gamedep::DependencyGraph g(names);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.below(3) == 0) g.add_edge(u, v);
    }
  }
  return g;
}

inline gamedep::Rational rational(SplitMix64& rng) {
  const auto num = static_cast<std::int64_t>(rng.below(41)) - 20;
  const auto den = static_cast<std::int64_t>(1 + rng.below(6));
  return gamedep::Rational(num, den);
}

// Some tables full, some empty, some partial.
inline gamedep::Game game(SplitMix64& rng, std::size_t max_players, std::size_t max_strategies) {
  const auto g = graph(rng, max_players);
  std::vector<std::vector<std::string>> labels(g.size());
  for (auto& list : labels) {
    const std::size_t k = 1 + rng.below(max_strategies);
    while (list.size() < k) {
      std::string candidate = name(rng, "abcxyz0189-.");
      bool fresh = true;
      for (const auto& existing : list) fresh = fresh && existing != candidate;
      if (fresh) list.push_back(candidate);
    }
  }
  gamedep::Game out(g, labels);
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto fill = rng.below(3);
    auto& table = out.table(v);
    for (std::size_t cell = 0; cell < table.size(); ++cell) {
      if (fill == 0 || (fill == 1 && rng.below(2) == 0)) table.set(cell, rational(rng));
    }
  }
  return out;
}

inline gamedep::PlayerSet subset(SplitMix64& rng, std::size_t n) {
  return gamedep::PlayerSet(rng.below(std::uint64_t{1} << n));
}

inline gamedep::Formula formula(SplitMix64& rng, std::size_t n, int depth) {
  const auto pick = depth <= 0 ? rng.below(4) : rng.below(8);
  if (pick == 0) return gamedep::Formula::falsum();
  if (pick < 4) return gamedep::Formula::atom(subset(rng, n), subset(rng, n));
  if (pick < 6) return gamedep::Formula::negation(formula(rng, n, depth - 1));
  return gamedep::Formula::implies(formula(rng, n, depth - 1), formula(rng, n, depth - 1));
}

}  // namespace gen
