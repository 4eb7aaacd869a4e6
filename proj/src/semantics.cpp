#include "gamedep/semantics.hpp"

#include <unordered_map>

namespace gamedep {

namespace {

struct ProjectionHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t x : key) h = (h ^ x) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::uint32_t> project(const StrategyProfile& s, const std::vector<PlayerIndex>& players) {
  std::vector<std::uint32_t> key;
  key.reserve(players.size());
  for (PlayerIndex v : players) key.push_back(s.choice[v]);
  return key;
}

}  // namespace

bool depends(const EquilibriumSet& equilibria, PlayerSet lhs, PlayerSet rhs) {
  const auto lhs_players = lhs.members();
  const auto rhs_players = (rhs - lhs).members();
  if (rhs_players.empty()) return true;
  std::unordered_map<std::vector<std::uint32_t>, const StrategyProfile*, ProjectionHash> first_of_group;
  for (const auto& s : equilibria) {
    const auto [it, inserted] = first_of_group.try_emplace(project(s, lhs_players), &s);
    if (!inserted && project(*it->second, rhs_players) != project(s, rhs_players)) return false;
  }
  return true;
}

PlayerSet determined_by(const EquilibriumSet& equilibria, PlayerSet lhs, std::size_t player_count) {
  const auto lhs_players = lhs.members();
  PlayerSet constant = PlayerSet::first(player_count);
  std::unordered_map<std::vector<std::uint32_t>, const StrategyProfile*, ProjectionHash> first_of_group;
  for (const auto& s : equilibria) {
    const auto [it, inserted] = first_of_group.try_emplace(project(s, lhs_players), &s);
    if (inserted) continue;
    const StrategyProfile& rep = *it->second;
    (constant - lhs).for_each([&](PlayerIndex v) {
      if (rep.choice[v] != s.choice[v]) constant = constant.without(v);
    });
  }
  return constant;
}

GameModel::GameModel(Game game, std::uint64_t max_profiles)
    : game_(std::move(game)), equilibria_(enumerate_equilibria(game_, max_profiles)) {}

bool GameModel::depends(PlayerSet lhs, PlayerSet rhs) const { return gamedep::depends(equilibria_, lhs, rhs); }

bool GameModel::holds(const Formula& formula) const { return gamedep::holds(equilibria_, formula); }

bool holds(const EquilibriumSet& equilibria, const Formula& formula) {
  switch (formula.kind()) {
    case Formula::Kind::Falsum: return false;
    case Formula::Kind::Atom: return depends(equilibria, formula.lhs(), formula.rhs());
    case Formula::Kind::Implication:
      return !holds(equilibria, formula.antecedent()) || holds(equilibria, formula.consequent());
  }
  return false;
}

bool holds(const Game& game, const Formula& formula) { return holds(enumerate_equilibria(game), formula); }

}  // namespace gamedep
