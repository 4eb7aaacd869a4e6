#pragma once

#include <cstdint>

#include "gamedep/equilibrium.hpp"
#include "gamedep/formula.hpp"

namespace gamedep {

/// True iff every two equilibria agreeing on `lhs` also agree on `rhs`.
bool depends(const EquilibriumSet& equilibria, PlayerSet lhs, PlayerSet rhs);

/// Largest set determined by `lhs`: the players whose strategy is constant
/// within every group of equilibria sharing a projection onto `lhs`.
PlayerSet determined_by(const EquilibriumSet& equilibria, PlayerSet lhs, std::size_t player_count);

/// A game together with its equilibrium set, computed once at construction.
class GameModel {
 public:
  explicit GameModel(Game game, std::uint64_t max_profiles = kDefaultMaxProfiles);

  const Game& game() const noexcept { return game_; }
  const EquilibriumSet& equilibria() const noexcept { return equilibria_; }

  bool depends(PlayerSet lhs, PlayerSet rhs) const;
  bool holds(const Formula& formula) const;

 private:
  Game game_;
  EquilibriumSet equilibria_;
};

bool holds(const EquilibriumSet& equilibria, const Formula& formula);
bool holds(const Game& game, const Formula& formula);

}  // namespace gamedep
