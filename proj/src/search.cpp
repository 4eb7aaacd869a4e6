#include "gamedep/search.hpp"

#include <charconv>
#include <functional>

#include "gamedep/error.hpp"
#include "gamedep/parser.hpp"
#include "gamedep/prover.hpp"
#include "gamedep/semantics.hpp"

namespace gamedep {

namespace {

DependencyGraph make_graph(std::vector<std::string> names,
                           std::initializer_list<std::pair<const char*, const char*>> edges) {
  DependencyGraph g(std::move(names));
  for (const auto& [u, v] : edges) g.add_edge(*g.find(u), *g.find(v));
  return g;
}

std::vector<std::string> labels(std::initializer_list<const char*> names) { return {names.begin(), names.end()}; }

std::vector<std::string> numbered_labels(std::uint32_t count) {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(std::to_string(i));
  return out;
}

// Fills every cell of v's table; `payoff` receives one strategy index per
// Adj+(v) member, in declaration order.
void fill(Game& game, PlayerIndex v, const std::function<Rational(const std::vector<std::uint32_t>&)>& payoff) {
  PayoffTable& table = game.table(v);
  for (std::size_t cell = 0; cell < table.size(); ++cell) table.set(cell, payoff(table.local_of(cell)));
}

Rational indicator(bool b) { return Rational(b ? 1 : 0); }

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Game two_player_matrix(std::vector<std::string> rows, std::vector<std::string> cols,
                       const std::vector<std::vector<int>>& common_payoff) {
  Game game(make_graph({"a", "b"}, {{"a", "b"}}), {std::move(rows), std::move(cols)});
  const auto cell = [&](const std::vector<std::uint32_t>& s) { return Rational(common_payoff[s[0]][s[1]]); };
  fill(game, 0, cell);
  fill(game, 1, cell);
  return game;
}

Game triangle_game(const std::function<bool(const std::vector<std::uint32_t>&)>& rewarded) {
  Game game(make_graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}),
            {labels({"0", "1"}), labels({"0", "1"}), labels({"0", "1"})});
  for (PlayerIndex v = 0; v < 3; ++v) fill(game, v, [&](const auto& s) { return indicator(rewarded(s)); });
  return game;
}

Game mean_mod_game(std::uint32_t p) {
  Game game(builtin_graph("gamma1"), std::vector<std::vector<std::string>>(4, numbered_labels(p)));
  // b sees (a, b, c); c sees (b, c, d).
  fill(game, 1, [p](const auto& s) { return indicator((2 * s[1]) % p == (s[0] + s[2]) % p); });
  fill(game, 2, [p](const auto& s) { return indicator((2 * s[1]) % p == (s[0] + s[2]) % p); });
  return game;
}

// r beats s, s beats p, p beats r.
bool beats(std::uint32_t x, std::uint32_t y) { return (x + 3 - y) % 3 == 1; }

Game rps_game() {
  const auto rps = labels({"r", "p", "s"});
  Game game(builtin_graph("gamma2"), {rps, rps, rps, rps});
  // b and c both see (a, b, c, d).
  fill(game, 1, [](const auto& s) { return indicator(s[0] != s[3] && beats(s[1], s[2])); });
  fill(game, 2, [](const auto& s) { return indicator(s[0] != s[3] && beats(s[2], s[1])); });
  return game;
}

std::optional<std::uint32_t> mean_mod_argument(std::string_view name) {
  constexpr std::string_view prefix = "gamma1_mean_mod(";
  if (name.substr(0, prefix.size()) != prefix || name.back() != ')') return std::nullopt;
  const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  std::uint32_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::Input, "gamma1_mean_mod expects an integer modulus");
  }
  return p;
}

}  // namespace

std::vector<std::string> builtin_game_names() {
  return {"coordination", "table2", "parity", "consensus", "gamma1_mean_mod(<odd prime>)", "gamma2_rps"};
}

Game builtin_game(std::string_view name) {
  if (name == "coordination") return two_player_matrix(labels({"a1", "a2"}), labels({"b1", "b2"}), {{1, 0}, {0, 1}});
  if (name == "table2") {
    return two_player_matrix(labels({"a1", "a2", "a3"}), labels({"b1", "b2"}), {{1, 0}, {0, 1}, {1, 0}});
  }
  if (name == "parity") return triangle_game([](const auto& s) { return (s[0] + s[1] + s[2]) % 2 == 0; });
  if (name == "consensus") return triangle_game([](const auto& s) { return s[0] == s[1] && s[1] == s[2]; });
  if (name == "gamma2_rps") return rps_game();
  if (auto p = mean_mod_argument(name)) {
    if (*p == 2 || !is_prime(*p)) throw Error(ErrorKind::Input, "gamma1_mean_mod needs an odd prime modulus");
    if (*p > 101) throw Error(ErrorKind::Resource, "gamma1_mean_mod modulus is capped at 101");
    return mean_mod_game(*p);
  }
  throw Error(ErrorKind::Input, "unknown built-in game '" + std::string(name) + "'");
}

DependencyGraph builtin_graph(std::string_view name) {
  if (name == "gamma1") return make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  if (name == "gamma2") {
    return make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
  }
  if (name == "gamma3") return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  if (name == "gamma4") {
    return make_graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
  }
  if (name == "gamma5") {
    return make_graph({"a", "b", "c", "d", "e", "f"},
                      {{"a", "d"}, {"b", "e"}, {"c", "f"}, {"d", "e"}, {"d", "f"}, {"e", "f"}});
  }
  throw Error(ErrorKind::Input, "unknown built-in graph '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

Game random_game(const DependencyGraph& graph, const SearchBounds& bounds, std::uint64_t index) {
  if (bounds.max_strategies == 0) throw Error(ErrorKind::Input, "max_strategies must be positive");
  if (bounds.payoff_values.empty()) throw Error(ErrorKind::Input, "payoff_values must not be empty");
  SplitMix64 rng(bounds.seed + index * 0xD1B54A32D192ED03ULL);
  std::vector<std::vector<std::string>> strategies;
  for (PlayerIndex v = 0; v < graph.size(); ++v) {
    strategies.push_back(numbered_labels(static_cast<std::uint32_t>(1 + rng.below(bounds.max_strategies))));
  }
  Game game(graph, std::move(strategies));
  for (PlayerIndex v = 0; v < graph.size(); ++v) {
    PayoffTable& table = game.table(v);
    for (std::size_t cell = 0; cell < table.size(); ++cell) {
      table.set(cell, bounds.payoff_values[rng.below(bounds.payoff_values.size())]);
    }
  }
  return game;
}

namespace {

bool refutes(const Game& game, const Formula& formula) { return !holds(enumerate_equilibria(game), formula); }

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

// Calls visit(counts) over [1..k]^n ordered by sum, then lexicographically.
// Stops early when visit returns false; returns false in that case.
bool for_each_count_vector(std::size_t n, std::uint32_t k, const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> counts(n, 1);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t remaining) -> bool {
    if (pos == n) return remaining == 0 ? visit(counts) : true;
    const std::size_t slots_after = n - pos - 1;
    for (std::uint32_t c = 1; c <= k; ++c) {
      if (c > remaining) break;
      const std::size_t rest = remaining - c;
      if (rest < slots_after || rest > slots_after * k) continue;
      counts[pos] = c;
      if (!rec(pos + 1, rest)) return false;
    }
    return true;
  };
  for (std::size_t total = n; total <= n * k; ++total) {
    if (!rec(0, total)) return false;
  }
  return true;
}

SearchOutcome systematic_search(const DependencyGraph& graph, const Formula& formula, const SearchBounds& bounds) {
  SearchOutcome out;
  const auto& values = bounds.payoff_values;
  const bool finished = for_each_count_vector(graph.size(), bounds.max_strategies, [&](const auto& counts) {
    std::vector<std::vector<std::string>> strategies;
    for (auto c : counts) strategies.push_back(numbered_labels(c));
    Game game(graph, std::move(strategies));

    std::vector<std::pair<PlayerIndex, std::size_t>> cells;
    for (PlayerIndex v = 0; v < graph.size(); ++v) {
      for (std::size_t cell = 0; cell < game.table(v).size(); ++cell) cells.emplace_back(v, cell);
    }
    if (game.profile_count() > bounds.max_profiles) {
      const std::uint64_t games = saturating_pow(values.size(), cells.size());
      out.skipped = games > UINT64_MAX - out.skipped ? UINT64_MAX : out.skipped + games;
      return true;
    }

    std::vector<std::size_t> digits(cells.size(), 0);
    for (const auto& [v, cell] : cells) game.table(v).set(cell, values[0]);
    while (true) {
      if (out.examined >= bounds.sample_count) return false;
      ++out.examined;
      if (refutes(game, formula)) {
        out.counterexample = game;
        return false;
      }
      // Odometer: last cell fastest.
      std::size_t i = cells.size();
      while (i > 0) {
        --i;
        digits[i] = (digits[i] + 1) % values.size();
        game.table(cells[i].first).set(cells[i].second, values[digits[i]]);
        if (digits[i] != 0) break;
        if (i == 0) return true;
      }
      if (cells.empty()) return true;
    }
  });
  out.exhausted = finished;
  return out;
}

}  // namespace

SearchOutcome find_counterexample(const DependencyGraph& graph, const Formula& formula, const SearchBounds& bounds) {
  if (!formula.players().subset_of(graph.vertices())) {
    throw Error(ErrorKind::Input, "formula mentions a player outside the graph");
  }
  if (bounds.max_strategies == 0) throw Error(ErrorKind::Input, "max_strategies must be positive");
  if (bounds.payoff_values.empty()) throw Error(ErrorKind::Input, "payoff_values must not be empty");
  if (bounds.mode == SearchMode::Systematic) return systematic_search(graph, formula, bounds);

  SearchOutcome out;
  for (std::uint64_t i = 0; i < bounds.sample_count; ++i) {
    Game game = random_game(graph, bounds, i);
    if (game.profile_count() > bounds.max_profiles) {
      ++out.skipped;
      continue;
    }
    ++out.examined;
    if (refutes(game, formula)) {
      out.counterexample = std::move(game);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string SoundnessReport::str(const DependencyGraph& graph) const {
  std::string out = "games tested: " + std::to_string(games_tested) + "\n" +
                    "games satisfying hypotheses: " + std::to_string(games_satisfying) + "\n" +
                    "derivable atoms checked: " + std::to_string(atoms_checked) + "\n" +
                    "violations: " + std::to_string(violations) + "\n";
  if (violating_atom) out += "violating atom: " + print_atom(*violating_atom, graph) + "\n";
  if (violating_game) out += "violating game:\n" + print_game(*violating_game);
  return out;
}

SoundnessReport fuzz_soundness(const DependencyGraph& graph, const Hypotheses& hyps, const SearchBounds& bounds) {
  const ClosureTable table = saturate(graph, hyps);
  const std::uint64_t sets = std::uint64_t{1} << graph.size();
  SoundnessReport report;
  for (std::uint64_t i = 0; i < bounds.sample_count; ++i) {
    Game game = random_game(graph, bounds, i);
    if (game.profile_count() > bounds.max_profiles) continue;
    const EquilibriumSet ne = enumerate_equilibria(game, bounds.max_profiles);
    ++report.games_tested;
    bool satisfied = true;
    for (const auto& h : hyps) satisfied = satisfied && depends(ne, h.lhs, h.rhs);
    if (!satisfied) continue;
    ++report.games_satisfying;
    for (std::uint64_t x = 0; x < sets; ++x) {
      const PlayerSet lhs(x);
      const PlayerSet rhs = table.closure(lhs);
      ++report.atoms_checked;
      if (!depends(ne, lhs, rhs)) {
        if (report.violations++ == 0) {
          report.violating_atom = DependenceAtom{lhs, rhs};
          report.violating_game = game;
        }
      }
    }
  }
  return report;
}

}  // namespace gamedep
