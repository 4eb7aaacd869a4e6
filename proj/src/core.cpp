#include "gamedep/core.hpp"

#include <algorithm>
#include <cctype>

#include "gamedep/error.hpp"

namespace gamedep {

std::vector<PlayerIndex> PlayerSet::members() const {
  std::vector<PlayerIndex> out;
  out.reserve(size());
  for_each([&](PlayerIndex i) { out.push_back(i); });
  return out;
}

bool is_player_name(std::string_view name) noexcept {
  if (name.empty() || name == "false") return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool is_strategy_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.';
  });
}

// ---------------------------------------------------------------------------
// DependencyGraph

DependencyGraph::DependencyGraph(std::vector<std::string> names)
    : names_(std::move(names)), adjacency_(names_.size()) {
  if (names_.size() > kMaxPlayers) {
    throw Error(ErrorKind::Resource, "at most " + std::to_string(kMaxPlayers) + " players are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_player_name(names_[i])) throw Error(ErrorKind::Input, "invalid player name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error(ErrorKind::Input, "duplicate player '" + names_[i] + "'");
    }
  }
}

void DependencyGraph::add_edge(PlayerIndex u, PlayerIndex v) {
  if (u >= size() || v >= size()) throw Error(ErrorKind::Input, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::Input, "loop on '" + names_[u] + "'");
  if (adjacency_[u].contains(v)) {
    throw Error(ErrorKind::Input, "duplicate edge " + names_[u] + " " + names_[v]);
  }
  adjacency_[u] = adjacency_[u].with(v);
  adjacency_[v] = adjacency_[v].with(u);
}

std::optional<PlayerIndex> DependencyGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<PlayerIndex, PlayerIndex>> DependencyGraph::edges() const {
  std::vector<std::pair<PlayerIndex, PlayerIndex>> out;
  for (PlayerIndex u = 0; u < size(); ++u) {
    (adjacency_[u] - PlayerSet::first(u + 1)).for_each([&](PlayerIndex v) { out.emplace_back(u, v); });
  }
  return out;
}

std::size_t DependencyGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& adj : adjacency_) degree_sum += adj.size();
  return degree_sum / 2;
}

PlayerSet border(const DependencyGraph& graph, PlayerSet region) {
  if (!region.subset_of(graph.vertices())) throw Error(ErrorKind::Input, "region mentions an unknown player");
  PlayerSet out;
  region.for_each([&](PlayerIndex v) {
    if (!(graph.neighbors(v) - region).empty()) out = out.with(v);
  });
  return out;
}

PlayerSet adj_plus(const DependencyGraph& graph, PlayerIndex v) {
  if (v >= graph.size()) throw Error(ErrorKind::Input, "unknown player index " + std::to_string(v));
  return graph.neighbors(v).with(v);
}

Cut make_cut(const DependencyGraph& graph, PlayerSet left) {
  if (!left.subset_of(graph.vertices())) throw Error(ErrorKind::Input, "cut mentions an unknown player");
  return Cut{left, graph.vertices() - left};
}

bool is_cut(const DependencyGraph& graph, const Cut& cut) noexcept {
  return (cut.left & cut.right).empty() && (cut.left | cut.right) == graph.vertices();
}

// ---------------------------------------------------------------------------
// Profiles

bool agrees_on(const StrategyProfile& s, const StrategyProfile& t, PlayerSet players) {
  bool same = true;
  players.for_each([&](PlayerIndex v) { same = same && s.choice.at(v) == t.choice.at(v); });
  return same;
}

StrategyProfile splice_profiles(const StrategyProfile& s, const StrategyProfile& t, const Cut& cut) {
  if (s.size() != t.size()) throw Error(ErrorKind::Input, "profiles of different games");
  const PlayerSet all = PlayerSet::first(s.size());
  if (!(cut.left & cut.right).empty() || (cut.left | cut.right) != all) {
    throw Error(ErrorKind::Input, "not a cut of the player set");
  }
  StrategyProfile e = t;
  cut.left.for_each([&](PlayerIndex v) { e.choice[v] = s.choice[v]; });
  return e;
}

// ---------------------------------------------------------------------------
// PayoffTable

PayoffTable::PayoffTable(PlayerSet scope, const std::vector<std::uint32_t>& strategy_counts)
    : scope_(scope), players_(scope.members()) {
  radix_.reserve(players_.size());
  std::size_t cells = 1;
  for (PlayerIndex v : players_) {
    const std::size_t count = strategy_counts.at(v);
    radix_.push_back(count);
    if (count != 0 && cells > kMaxTableCells / count) {
      throw Error(ErrorKind::Resource, "payoff table exceeds " + std::to_string(kMaxTableCells) + " cells");
    }
    cells *= count;
  }
  strides_.assign(players_.size(), 1);
  for (std::size_t i = players_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * radix_[i];
  values_.assign(cells, Rational());
  set_.assign(cells, 0);
}

std::size_t PayoffTable::index_of(const StrategyProfile& profile) const {
  std::size_t cell = 0;
  for (std::size_t i = 0; i < players_.size(); ++i) cell += strides_[i] * profile.choice[players_[i]];
  return cell;
}

std::size_t PayoffTable::index_of_local(const std::vector<std::uint32_t>& local) const {
  if (local.size() != players_.size()) throw Error(ErrorKind::Input, "local assignment has the wrong arity");
  std::size_t cell = 0;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (local[i] >= radix_[i]) throw Error(ErrorKind::Input, "strategy index out of range");
    cell += strides_[i] * local[i];
  }
  return cell;
}

std::vector<std::uint32_t> PayoffTable::local_of(std::size_t cell) const {
  std::vector<std::uint32_t> local(players_.size());
  for (std::size_t i = 0; i < players_.size(); ++i) {
    local[i] = static_cast<std::uint32_t>((cell / strides_[i]) % radix_[i]);
  }
  return local;
}

std::size_t PayoffTable::stride(PlayerIndex v) const {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (players_[i] == v) return strides_[i];
  }
  return 0;
}

std::size_t PayoffTable::set_count() const noexcept {
  return static_cast<std::size_t>(std::count(set_.begin(), set_.end(), char{1}));
}

void PayoffTable::set(std::size_t cell, Rational value) {
  values_.at(cell) = value;
  set_.at(cell) = 1;
}

// ---------------------------------------------------------------------------
// Game

Game::Game(DependencyGraph graph, std::vector<std::vector<std::string>> strategies)
    : graph_(std::move(graph)), strategies_(std::move(strategies)) {
  if (strategies_.size() != graph_.size()) {
    throw Error(ErrorKind::Input, "expected one strategy list per player");
  }
  std::vector<std::uint32_t> counts;
  for (PlayerIndex v = 0; v < graph_.size(); ++v) {
    const auto& labels = strategies_[v];
    if (labels.empty()) throw Error(ErrorKind::Input, "player '" + graph_.name(v) + "' has no strategies");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!is_strategy_label(labels[i])) {
        throw Error(ErrorKind::Input, "invalid strategy label '" + labels[i] + "'");
      }
      if (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i), labels[i]) !=
          labels.begin() + static_cast<std::ptrdiff_t>(i)) {
        throw Error(ErrorKind::Input, "duplicate strategy '" + labels[i] + "' for player '" + graph_.name(v) + "'");
      }
    }
    counts.push_back(static_cast<std::uint32_t>(labels.size()));
  }
  tables_.reserve(graph_.size());
  for (PlayerIndex v = 0; v < graph_.size(); ++v) tables_.emplace_back(adj_plus(graph_, v), counts);
}

std::optional<std::uint32_t> Game::find_strategy(PlayerIndex v, std::string_view label) const {
  const auto& labels = strategies_.at(v);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::uint64_t Game::profile_count() const noexcept {
  std::uint64_t total = 1;
  for (const auto& labels : strategies_) {
    if (total > UINT64_MAX / labels.size()) return UINT64_MAX;
    total *= labels.size();
  }
  return total;
}

std::vector<std::string> validate(const Game& game) {
  std::vector<std::string> warnings;
  for (PlayerIndex v = 0; v < game.player_count(); ++v) {
    const auto& table = game.table(v);
    const std::size_t set = table.set_count();
    if (set != 0 && set != table.size()) {
      warnings.push_back("player " + game.graph().name(v) + ": " + std::to_string(table.size() - set) + " of " +
                         std::to_string(table.size()) + " payoff entries unspecified (default 0)");
    }
  }
  return warnings;
}

}  // namespace gamedep
