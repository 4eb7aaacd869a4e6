#include "gamedep/equilibrium.hpp"

#include <algorithm>

#include "gamedep/error.hpp"

namespace gamedep {

bool EquilibriumSet::contains(const StrategyProfile& s) const {
  return std::binary_search(profiles.begin(), profiles.end(), s);
}

Rational payoff_of(const Game& game, PlayerIndex v, const StrategyProfile& s) {
  const PayoffTable& table = game.table(v);
  return table.value(table.index_of(s));
}

bool is_equilibrium(const Game& game, const StrategyProfile& s) {
  for (PlayerIndex v = 0; v < game.player_count(); ++v) {
    const PayoffTable& table = game.table(v);
    const std::size_t stride = table.stride(v);
    const std::size_t cell = table.index_of(s);
    const std::size_t base = cell - stride * s.choice[v];
    const Rational current = table.value(cell);
    for (std::uint32_t x = 0; x < game.strategy_count(v); ++x) {
      if (x != s.choice[v] && table.value(base + stride * x) > current) return false;
    }
  }
  return true;
}

EquilibriumSet enumerate_equilibria(const Game& game, std::uint64_t max_profiles) {
  const std::uint64_t total = game.profile_count();
  if (total > max_profiles) {
    throw Error(ErrorKind::Resource, "game has " + (total == UINT64_MAX ? std::string("too many") : std::to_string(total)) +
                                         " profiles, above the cap of " + std::to_string(max_profiles));
  }
  const std::size_t n = game.player_count();
  EquilibriumSet out;
  StrategyProfile s{std::vector<std::uint32_t>(n, 0)};
  // Row-major walk: the last player varies fastest, which yields the
  // canonical order directly.
  while (true) {
    if (is_equilibrium(game, s)) out.profiles.push_back(s);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++s.choice[i] < game.strategy_count(i)) break;
      s.choice[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace gamedep
