#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamedep/rational.hpp"

namespace gamedep {

/// Players are identified by their declaration index within a graph.
using PlayerIndex = std::size_t;

inline constexpr std::size_t kMaxPlayers = 64;

/// Subset of a graph's players, as a bitmask over declaration indices.
class PlayerSet {
 public:
  constexpr PlayerSet() = default;
  constexpr explicit PlayerSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PlayerSet single(PlayerIndex i) { return PlayerSet(std::uint64_t{1} << i); }
  static constexpr PlayerSet first(std::size_t n) {
    return PlayerSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(PlayerIndex i) const noexcept { return i < 64 && ((bits_ >> i) & 1U) != 0; }
  constexpr bool subset_of(PlayerSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  constexpr PlayerSet with(PlayerIndex i) const { return PlayerSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr PlayerSet without(PlayerIndex i) const { return PlayerSet(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr PlayerSet operator|(PlayerSet a, PlayerSet b) { return PlayerSet(a.bits_ | b.bits_); }
  friend constexpr PlayerSet operator&(PlayerSet a, PlayerSet b) { return PlayerSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr PlayerSet operator-(PlayerSet a, PlayerSet b) { return PlayerSet(a.bits_ & ~b.bits_); }
  constexpr PlayerSet& operator|=(PlayerSet o) { bits_ |= o.bits_; return *this; }
  constexpr PlayerSet& operator&=(PlayerSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(PlayerSet, PlayerSet) = default;
  friend constexpr auto operator<=>(PlayerSet, PlayerSet) = default;

  /// Calls `f(index)` for each member in ascending declaration order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(static_cast<PlayerIndex>(std::countr_zero(rest)));
    }
  }

  std::vector<PlayerIndex> members() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Player names must start with a letter and continue with letters, digits
/// or underscores. `false` is reserved by the formula grammar.
bool is_player_name(std::string_view name) noexcept;

/// Strategy labels are opaque tokens of letters, digits, `_`, `-` and `.`.
bool is_strategy_label(std::string_view label) noexcept;

/// Undirected simple graph over named players.
class DependencyGraph {
 public:
  DependencyGraph() = default;
  explicit DependencyGraph(std::vector<std::string> names);

  void add_edge(PlayerIndex u, PlayerIndex v);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(PlayerIndex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<PlayerIndex> find(std::string_view name) const;

  PlayerSet vertices() const noexcept { return PlayerSet::first(names_.size()); }
  PlayerSet neighbors(PlayerIndex v) const { return adjacency_.at(v); }
  bool adjacent(PlayerIndex u, PlayerIndex v) const { return adjacency_.at(u).contains(v); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<PlayerIndex, PlayerIndex>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<PlayerSet> adjacency_;
};

/// Members of `region` with at least one neighbour outside `region`.
PlayerSet border(const DependencyGraph& graph, PlayerSet region);

/// The player together with all its neighbours.
PlayerSet adj_plus(const DependencyGraph& graph, PlayerIndex v);

/// Partition of the vertex set into `left` (U) and `right` (W).
struct Cut {
  PlayerSet left;
  PlayerSet right;

  friend bool operator==(const Cut&, const Cut&) = default;
};

Cut make_cut(const DependencyGraph& graph, PlayerSet left);
bool is_cut(const DependencyGraph& graph, const Cut& cut) noexcept;

/// One strategy index per player, in declaration order.
struct StrategyProfile {
  std::vector<std::uint32_t> choice;

  std::size_t size() const noexcept { return choice.size(); }
  std::uint32_t operator[](PlayerIndex v) const { return choice[v]; }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

bool agrees_on(const StrategyProfile& s, const StrategyProfile& t, PlayerSet players);

/// Takes `s` on `cut.left` and `t` on `cut.right`.
StrategyProfile splice_profiles(const StrategyProfile& s, const StrategyProfile& t, const Cut& cut);

/// Payoff function of one player, keyed by the strategies of exactly the
/// players in its Adj+ set. Cells are laid out row-major over those players
/// in declaration order (last player fastest). Unset cells read as 0.
class PayoffTable {
 public:
  PayoffTable() = default;
  PayoffTable(PlayerSet scope, const std::vector<std::uint32_t>& strategy_counts);

  PlayerSet scope() const noexcept { return scope_; }
  const std::vector<PlayerIndex>& players() const noexcept { return players_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Cell index of the restriction of a full profile to the scope.
  std::size_t index_of(const StrategyProfile& profile) const;
  /// Cell index of an assignment listing one strategy per scope member, in
  /// scope order.
  std::size_t index_of_local(const std::vector<std::uint32_t>& local) const;
  /// Inverse of index_of_local.
  std::vector<std::uint32_t> local_of(std::size_t cell) const;
  /// Stride of player `v` in the cell index, or 0 when v is out of scope.
  std::size_t stride(PlayerIndex v) const;

  Rational value(std::size_t cell) const { return values_.at(cell); }
  bool is_set(std::size_t cell) const { return set_.at(cell) != 0; }
  std::size_t set_count() const noexcept;
  void set(std::size_t cell, Rational value);

  friend bool operator==(const PayoffTable&, const PayoffTable&) = default;

 private:
  PlayerSet scope_;
  std::vector<PlayerIndex> players_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> values_;
  std::vector<char> set_;
};

inline constexpr std::size_t kMaxTableCells = std::size_t{1} << 26;

/// Finite strategic game over a dependency graph.
class Game {
 public:
  Game() = default;
  /// One non-empty, duplicate-free label list per player. Payoff tables
  /// start empty (all zero).
  Game(DependencyGraph graph, std::vector<std::vector<std::string>> strategies);

  const DependencyGraph& graph() const noexcept { return graph_; }
  std::size_t player_count() const noexcept { return graph_.size(); }

  const std::vector<std::string>& strategies(PlayerIndex v) const { return strategies_.at(v); }
  std::uint32_t strategy_count(PlayerIndex v) const {
    return static_cast<std::uint32_t>(strategies_.at(v).size());
  }
  std::optional<std::uint32_t> find_strategy(PlayerIndex v, std::string_view label) const;

  const PayoffTable& table(PlayerIndex v) const { return tables_.at(v); }
  PayoffTable& table(PlayerIndex v) { return tables_.at(v); }

  /// Number of full profiles, saturating at UINT64_MAX.
  std::uint64_t profile_count() const noexcept;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  DependencyGraph graph_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<PayoffTable> tables_;
};

/// Structural warnings (partially filled payoff tables). Never throws; the
/// remaining invariants are enforced at construction.
std::vector<std::string> validate(const Game& game);

}  // namespace gamedep
