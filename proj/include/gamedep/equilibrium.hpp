#pragma once

#include <cstdint>
#include <vector>

#include "gamedep/core.hpp"

namespace gamedep {

inline constexpr std::uint64_t kDefaultMaxProfiles = 10'000'000;

/// Pure Nash equilibria in canonical order: lexicographic by player
/// declaration order, then strategy declaration order.
struct EquilibriumSet {
  std::vector<StrategyProfile> profiles;

  std::size_t size() const noexcept { return profiles.size(); }
  bool empty() const noexcept { return profiles.empty(); }
  auto begin() const { return profiles.begin(); }
  auto end() const { return profiles.end(); }
  bool contains(const StrategyProfile& s) const;

  friend bool operator==(const EquilibriumSet&, const EquilibriumSet&) = default;
};

/// Looks up v's table at the restriction of `s` to Adj+(v).
Rational payoff_of(const Game& game, PlayerIndex v, const StrategyProfile& s);

/// No player gains strictly by a unilateral deviation; ties are allowed.
bool is_equilibrium(const Game& game, const StrategyProfile& s);

/// Exhaustive check of every profile. Throws Error(Resource) when the
/// profile count exceeds `max_profiles`.
EquilibriumSet enumerate_equilibria(const Game& game, std::uint64_t max_profiles = kDefaultMaxProfiles);

}  // namespace gamedep
