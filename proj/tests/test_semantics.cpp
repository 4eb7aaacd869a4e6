#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gamedep/parser.hpp"
#include "gamedep/search.hpp"
#include "gamedep/semantics.hpp"
#include "oracles.hpp"

using namespace gamedep;

namespace {

bool check(const Game& game, const char* formula) { return holds(game, parse_formula(formula, game.graph())); }

Game random_small_game(SplitMix64& rng, std::uint64_t index) {
  const auto g = oracle::random_graph(rng, 1 + rng.below(5), 45);
  SearchBounds bounds;
  bounds.max_strategies = 3;
  bounds.payoff_values = {Rational(0), Rational(1)};
  bounds.seed = rng.next();
  return random_game(g, bounds, index);
}

}  // namespace

TEST_CASE("dependence verdicts of the example games") {
  const Game coord = builtin_game("coordination");
  CHECK(check(coord, "a |> b"));
  CHECK(check(coord, "b |> a"));

  const Game table2 = builtin_game("table2");
  CHECK(check(table2, "a |> b"));
  CHECK_FALSE(check(table2, "b |> a"));

  const Game parity = builtin_game("parity");
  CHECK(check(parity, "a,b |> c"));
  CHECK_FALSE(check(parity, "a |> c"));

  const Game consensus = builtin_game("consensus");
  CHECK(check(consensus, "a |> b,c"));

  const Game rps = builtin_game("gamma2_rps");
  CHECK(check(rps, "a |> d"));
  CHECK_FALSE(check(rps, "b,c |> d"));
  CHECK_FALSE(check(rps, "a |> d -> b,c |> d"));

  const Game mean = builtin_game("gamma1_mean_mod(5)");
  CHECK(check(mean, "a,b |> c,d"));
  CHECK(check(mean, "a,c |> b,d"));
  CHECK_FALSE(check(mean, "a |> b"));
}

TEST_CASE("formula connectives") {
  const Game coord = builtin_game("coordination");
  CHECK_FALSE(check(coord, "false"));
  CHECK(check(coord, "false -> a |> b"));
  CHECK(check(coord, "a,b |> a"));
  CHECK(check(coord, "!false"));
  CHECK(check(coord, "!!(a |> b)"));
  CHECK_FALSE(check(coord, "{} |> a"));
  CHECK(check(coord, "a |> {}"));
}

TEST_CASE("at most one equilibrium makes every atom true") {
  Game unique(builtin_graph("gamma3"), std::vector<std::vector<std::string>>(3, {"0", "1"}));
  for (std::size_t cell = 0; cell < unique.table(0).size(); ++cell) {
    unique.table(0).set(cell, Rational(unique.table(0).local_of(cell)[0] == 1 ? 1 : 0));
  }
  for (std::size_t cell = 0; cell < unique.table(1).size(); ++cell) {
    unique.table(1).set(cell, Rational(unique.table(1).local_of(cell)[1] == 1 ? 1 : 0));
  }
  for (std::size_t cell = 0; cell < unique.table(2).size(); ++cell) {
    unique.table(2).set(cell, Rational(unique.table(2).local_of(cell)[1] == 1 ? 1 : 0));
  }
  const auto ne = enumerate_equilibria(unique);
  REQUIRE(ne.size() == 1);
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) CHECK(depends(ne, PlayerSet(a), PlayerSet(b)));
  }
  CHECK(depends(EquilibriumSet{}, PlayerSet(0), PlayerSet(7)));
}

TEST_CASE("grouped dependence agrees with the pairwise definition") {
  SplitMix64 rng(21);
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Game game = random_small_game(rng, i);
    const auto ne = enumerate_equilibria(game);
    const std::uint64_t sets = std::uint64_t{1} << game.player_count();
    for (std::uint64_t a = 0; a < sets; ++a) {
      PlayerSet largest;
      for (std::uint64_t b = 0; b < sets; ++b) {
        const bool expected = oracle::depends(ne.profiles, PlayerSet(a), PlayerSet(b));
        CHECK(depends(ne, PlayerSet(a), PlayerSet(b)) == expected);
        if (expected) largest |= PlayerSet(b);
      }
      CHECK(determined_by(ne, PlayerSet(a), game.player_count()) == largest);
    }
  }
}

TEST_CASE("game model caches its equilibria") {
  const GameModel model(builtin_game("gamma2_rps"));
  CHECK(model.equilibria().size() == 27);
  const auto& g = model.game().graph();
  CHECK(model.holds(parse_formula("a |> d", g)));
  CHECK(model.depends(PlayerSet::single(3), PlayerSet::single(0)));
  CHECK_FALSE(model.holds(parse_formula("a |> d -> b,c |> d", g)));
}

TEST_CASE("the four axioms are sound on random games") {
  SplitMix64 rng(22);
  std::uint64_t contiguity_instances = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Game game = random_small_game(rng, i);
    const auto ne = enumerate_equilibria(game);
    const auto& g = game.graph();
    const std::size_t n = g.size();
    const std::uint64_t sets = std::uint64_t{1} << n;
    std::vector<PlayerSet> det(sets);
    for (std::uint64_t x = 0; x < sets; ++x) det[x] = determined_by(ne, PlayerSet(x), n);
    auto dep = [&](PlayerSet a, PlayerSet b) { return b.subset_of(det[a.bits()]); };

    for (std::uint64_t a = 0; a < sets; ++a) {
      for (std::uint64_t b = 0; b < sets; ++b) {
        const PlayerSet A(a), B(b);
        if (B.subset_of(A)) CHECK(dep(A, B));
        if (!dep(A, B)) continue;
        for (std::uint64_t c = 0; c < sets; ++c) {
          CHECK(dep(A | PlayerSet(c), B | PlayerSet(c)));
          if (dep(B, PlayerSet(c))) CHECK(dep(A, PlayerSet(c)));
          CHECK(dep(A | PlayerSet(c), B));
          CHECK(dep(A, B & PlayerSet(c)));
        }
      }
    }
    // depends(A u B, C) => depends(B(U) u B(W) u B, C) for A in U, C in W.
    for (std::uint64_t u = 0; u < sets; ++u) {
      const Cut cut = make_cut(g, PlayerSet(u));
      const PlayerSet walls = border(g, cut.left) | border(g, cut.right);
      for (std::uint64_t a = u;; a = (a - 1) & u) {
        for (std::uint64_t b = 0; b < sets; ++b) {
          const PlayerSet lhs = PlayerSet(a) | PlayerSet(b);
          const PlayerSet c = det[lhs.bits()] & cut.right;
          ++contiguity_instances;
          CHECK(dep(walls | PlayerSet(b), c));
        }
        if (a == 0) break;
      }
    }
  }
  CHECK(contiguity_instances > 10000);
}
