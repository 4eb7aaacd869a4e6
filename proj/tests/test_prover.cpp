#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gamedep/error.hpp"
#include "gamedep/parser.hpp"
#include "gamedep/prover.hpp"
#include "gamedep/search.hpp"
#include "oracles.hpp"

using namespace gamedep;

namespace {

Hypotheses hyps_of(const DependencyGraph& g, std::initializer_list<const char*> atoms) {
  Hypotheses out;
  for (const char* a : atoms) out.push_back(parse_atom(a, g));
  return out;
}

DependenceAtom atom(const DependencyGraph& g, const char* text) { return parse_atom(text, g); }

std::size_t count_rule(const Derivation& d, Rule rule) {
  return static_cast<std::size_t>(
      std::count_if(d.steps.begin(), d.steps.end(), [&](const DerivationStep& s) { return s.rule == rule; }));
}

// Proves `goal` and checks the result against the strict kernel.
Derivation proved(const DependencyGraph& g, const Hypotheses& hyps, const char* goal) {
  const auto target = atom(g, goal);
  const auto d = derive_tree(g, hyps, target.lhs, target.rhs);
  REQUIRE(d.has_value());
  CHECK(d->conclusion() == target);
  const auto result = check_derivation(g, hyps, *d);
  CHECK_MESSAGE(result.valid, result.diagnostic);
  return *d;
}

}  // namespace

TEST_CASE("derivations on the example graphs") {
  const auto g1 = builtin_graph("gamma1");
  const auto p1 = proved(g1, hyps_of(g1, {"a |> d"}), "b,c |> d");
  CHECK(print_derivation(p1, g1) ==
        "1. a |> d [Hypothesis]\n"
        "2. b,c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]\n");

  proved(g1, hyps_of(g1, {"a,c |> d", "d,b |> a"}), "b,c |> a,d");

  const auto g4 = builtin_graph("gamma4");
  proved(g4, hyps_of(g4, {"a,c |> e"}), "b,c,d |> e");

  const auto g5 = builtin_graph("gamma5");
  const auto p4 = proved(g5, hyps_of(g5, {"a |> b", "b |> c", "c |> a"}), "d,e,f |> a,b,c");
  CHECK(count_rule(p4, Rule::Contiguity) >= 3);
  CHECK(count_rule(p4, Rule::Augmentation) >= 1);
  CHECK(count_rule(p4, Rule::Transitivity) >= 2);
}

TEST_CASE("closure examples") {
  const auto g1 = builtin_graph("gamma1");
  const auto t = saturate(g1, hyps_of(g1, {"a |> d"}));
  CHECK(t.closure(atom(g1, "b,c |> d").lhs).contains(3));

  const auto g3 = builtin_graph("gamma3");
  const auto t3 = saturate(g3, hyps_of(g3, {"a |> c"}));
  CHECK_FALSE(t3.closure(PlayerSet::single(1)).contains(2));
  CHECK_FALSE(derives(g3, hyps_of(g3, {"a |> c"}), PlayerSet::single(1), PlayerSet::single(2)));
  CHECK_FALSE(derive_tree(g3, hyps_of(g3, {"a |> c"}), PlayerSet::single(1), PlayerSet::single(2)));

  for (const char* name : {"gamma1", "gamma2", "gamma4", "gamma5"}) {
    const auto g = builtin_graph(name);
    const auto empty = saturate(g, {});
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.size()); ++x) CHECK(empty.closure(PlayerSet(x)) == PlayerSet(x));
  }
}

TEST_CASE("reflexive goals take one step") {
  const auto g = builtin_graph("gamma1");
  const auto d = derive_tree(g, {}, atom(g, "a,b |> a").lhs, atom(g, "a,b |> a").rhs);
  REQUIRE(d);
  REQUIRE(d->steps.size() == 1);
  CHECK(d->steps[0].rule == Rule::Reflexivity);
  CHECK(derives(g, {}, atom(g, "a,b,c |> a,c").lhs, atom(g, "a,b,c |> a,c").rhs));
}

TEST_CASE("resource guard and scope checks") {
  std::vector<std::string> names;
  for (int i = 0; i < 13; ++i) names.push_back("p" + std::to_string(i));
  const DependencyGraph big(names);
  try {
    saturate(big, {});
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
    CHECK(std::string(e.what()).find("12") != std::string::npos);
  }
  names.pop_back();
  CHECK_NOTHROW(saturate(DependencyGraph(names), {}));

  const auto g = builtin_graph("gamma3");
  CHECK_THROWS_AS(saturate(g, {{PlayerSet::single(5), PlayerSet::single(0)}}), Error);
}

TEST_CASE("checker rejects malformed steps") {
  const auto g1 = builtin_graph("gamma1");
  const auto hyps = hyps_of(g1, {"a |> d"});
  auto reject = [&](const std::string& text, std::size_t step, const std::string& fragment) {
    const auto result = check_derivation(g1, hyps, parse_derivation(text, g1));
    CHECK_FALSE(result.valid);
    CHECK(result.step == step);
    CHECK_MESSAGE(result.diagnostic.find(fragment) != std::string::npos, result.diagnostic);
    CHECK(result.diagnostic.rfind("step " + std::to_string(step) + ": ", 0) == 0);
  };

  reject("1. a |> d [Hypothesis]\n2. b,c |> d [Contiguity 1 cut={c,d}|{a,b} A={a}]\n", 2, "A ⊄ U");
  reject("1. a |> d [Hypothesis]\n2. b,c |> d [Contiguity 1 cut={a,b}|{b,c,d} A={a}]\n", 2, "not a cut");
  reject("1. a |> d [Hypothesis]\n2. c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]\n", 2, "B(U)");
  reject("1. a |> d [Hypothesis]\n2. b,c |> d [Contiguity 1 cut={a,b,c,d}|{} A={a}]\n", 2, "C ⊄ W");
  reject("1. a |> b [Hypothesis]\n", 1, "not among the hypotheses");
  reject("1. a |> b [Reflexivity]\n", 1, "not a subset");
  reject("1. a |> a [Reflexivity]\n2. c |> c [Reflexivity]\n3. a |> c [Transitivity 1 2]\n", 3, "middle sets differ");
  reject("1. a |> d [Hypothesis]\n2. a,b |> d [Augmentation 1 C={b}]\n", 2, "both sides");
  reject("1. a |> d [Hypothesis]\n2. a |> d,b [LeftMonotonicity 1 C={b}]\n", 2, "left side");

  CHECK(check_derivation(g1, hyps,
                         parse_derivation("1. a |> d [Hypothesis]\n2. a,b |> d [LeftMonotonicity 1 C={b}]\n", g1))
            .valid);
  // B may keep part of A.
  CHECK(check_derivation(g1, hyps,
                         parse_derivation("1. a |> d [Hypothesis]\n2. a,b,c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]\n", g1))
            .valid);
}

TEST_CASE("open checking collects assumptions") {
  const auto g1 = builtin_graph("gamma1");
  const auto d = parse_derivation("1. a |> d [Hypothesis]\n2. b,c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]\n", g1);
  const auto open = check_derivation_open(g1, d);
  CHECK(open.valid);
  REQUIRE(open.assumed.size() == 1);
  CHECK(open.assumed[0] == atom(g1, "a |> d"));
  CHECK_FALSE(check_derivation(g1, {}, d).valid);
  CHECK_FALSE(check_derivation(g1, {}, Derivation{}).valid);
}

TEST_CASE("sparse sets") {
  const auto g1 = builtin_graph("gamma1");
  CHECK(sparse(g1, atom(g1, "a,d |> a").lhs));
  CHECK_FALSE(sparse(g1, atom(g1, "a,b |> a").lhs));
  CHECK_FALSE(sparse(g1, atom(g1, "a,c |> a").lhs));
  CHECK(sparse(g1, PlayerSet()));
  const auto g5 = builtin_graph("gamma5");
  CHECK(sparse(g5, atom(g5, "a,b,c |> a").lhs));

  SplitMix64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_graph(rng, 1 + rng.below(8), 30);
    const PlayerSet w(rng.below(std::uint64_t{1} << g.size()));
    CHECK(sparse(g, w) == oracle::sparse(g, w));
  }
}

TEST_CASE("general principle") {
  const auto g1 = builtin_graph("gamma1");
  const PlayerSet ad = atom(g1, "a,d |> a").lhs;
  const auto d = general_principle(g1, ad);
  REQUIRE(d);
  CHECK(d->conclusion() == atom(g1, "b,c |> a,d"));
  CHECK(check_derivation(g1, general_principle_hypotheses(g1, ad), *d).valid);
  // The two-hypothesis form a,c |> d and b,d |> a weakens these left sides.
  const auto two_hyps = hyps_of(g1, {"a,c |> d", "d,b |> a"});
  for (const auto& h : general_principle_hypotheses(g1, ad)) {
    CHECK(std::any_of(two_hyps.begin(), two_hyps.end(),
                      [&](const DependenceAtom& p) { return p.rhs == h.rhs && p.lhs.subset_of(h.lhs); }));
  }

  const auto empty = general_principle(g1, PlayerSet());
  REQUIRE(empty);
  REQUIRE(empty->steps.size() == 1);
  CHECK(empty->steps[0].rule == Rule::Reflexivity);

  const auto g5 = builtin_graph("gamma5");
  const auto p4 = general_principle(g5, atom(g5, "a,b,c |> a").lhs);
  REQUIRE(p4);
  CHECK(p4->conclusion() == atom(g5, "d,e,f |> a,b,c"));

  CHECK_THROWS_AS(general_principle(g1, atom(g1, "a,b |> a").lhs), Error);
}

TEST_CASE("closure table invariants") {
  SplitMix64 rng(32);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_graph(rng, 1 + rng.below(6), 40);
    const std::uint64_t sets = std::uint64_t{1} << g.size();
    Hypotheses hyps;
    for (int k = static_cast<int>(rng.below(4)); k > 0; --k) hyps.push_back({PlayerSet(rng.below(sets)), PlayerSet(rng.below(sets))});
    const auto t = saturate(g, hyps);
    for (std::uint64_t x = 0; x < sets; ++x) {
      const PlayerSet cx = t.closure(PlayerSet(x));
      CHECK(PlayerSet(x).subset_of(cx));
      CHECK(t.closure(cx) == cx);
      PlayerSet(~x & (sets - 1)).for_each([&](PlayerIndex v) { CHECK(cx.subset_of(t.closure(PlayerSet(x).with(v)))); });
    }
  }
}

TEST_CASE("every emitted derivation verifies") {
  SplitMix64 rng(33);
  std::size_t nontrivial = 0;
  for (int i = 0; i < 80; ++i) {
    const auto g = oracle::random_graph(rng, 2 + rng.below(5), 45);
    const std::uint64_t sets = std::uint64_t{1} << g.size();
    Hypotheses hyps;
    for (int k = 1 + static_cast<int>(rng.below(3)); k > 0; --k) {
      hyps.push_back({PlayerSet(rng.below(sets)), PlayerSet(rng.below(sets))});
    }
    const auto t = saturate(g, hyps);
    for (std::uint64_t x = 0; x < sets; ++x) {
      const PlayerSet cx = t.closure(PlayerSet(x));
      const auto d = t.derivation(PlayerSet(x), cx);
      REQUIRE(d);
      CHECK(d->conclusion() == DependenceAtom{PlayerSet(x), cx});
      const auto result = check_derivation(g, hyps, *d);
      CHECK_MESSAGE(result.valid, result.diagnostic);
      CHECK(parse_derivation(print_derivation(*d, g), g) == *d);
      if (cx != PlayerSet(x)) ++nontrivial;
      const PlayerSet outside = g.vertices() - cx;
      if (!outside.empty()) CHECK_FALSE(t.derivation(PlayerSet(x), cx.with(outside.members().front())));
    }
  }
  CHECK(nontrivial > 100);
}

TEST_CASE("closure derivability equals naive saturation on every small hypothesis set") {
  // All graphs on up to 3 vertices, all hypothesis sets of at most two atoms.
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::pair<PlayerIndex, PlayerIndex>> pairs;
    for (PlayerIndex u = 0; u < n; ++u)
      for (PlayerIndex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t sets = std::uint64_t{1} << n;
    std::vector<DependenceAtom> atoms;
    for (std::uint64_t l = 0; l < sets; ++l)
      for (std::uint64_t r = 0; r < sets; ++r)
        if ((r & ~l) != 0) atoms.push_back({PlayerSet(l), PlayerSet(r)});

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
      DependencyGraph g(names);
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);

      std::vector<Hypotheses> schedule{{}};
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        schedule.push_back({atoms[i]});
        for (std::size_t j = i + 1; j < atoms.size(); ++j) schedule.push_back({atoms[i], atoms[j]});
      }
      for (const auto& hyps : schedule) {
        const auto t = saturate(g, hyps);
        const oracle::NaiveProver naive(g, hyps);
        for (std::uint64_t l = 0; l < sets; ++l) {
          for (std::uint64_t r = 0; r < sets; ++r) {
            ++compared;
            if (t.derives(PlayerSet(l), PlayerSet(r)) != naive.derives(PlayerSet(l), PlayerSet(r))) {
              FAIL_CHECK("mismatch on " << print_graph(g) << " at " << l << " |> " << r);
            }
          }
        }
      }
    }
  }
  CHECK(compared > 100000);
}

TEST_CASE("naive oracle reproduces the known verdicts") {
  const auto g1 = builtin_graph("gamma1");
  const oracle::NaiveProver p1(g1, hyps_of(g1, {"a |> d"}));
  CHECK(p1.derives(atom(g1, "b,c |> d").lhs, atom(g1, "b,c |> d").rhs));
  CHECK_FALSE(p1.derives(atom(g1, "b |> d").lhs, atom(g1, "b |> d").rhs));
  const oracle::NaiveProver p2(g1, hyps_of(g1, {"a,c |> d", "d,b |> a"}));
  CHECK(p2.derives(atom(g1, "b,c |> a,d").lhs, atom(g1, "b,c |> a,d").rhs));

  const auto g3 = builtin_graph("gamma3");
  const oracle::NaiveProver p3(g3, hyps_of(g3, {"a |> c"}));
  CHECK_FALSE(p3.derives(PlayerSet::single(1), PlayerSet::single(2)));
  CHECK(p3.derives(PlayerSet::single(0), PlayerSet(0b101)));

  const oracle::NaiveProver none(g1, {});
  CHECK(none.derives(PlayerSet(0b0111), PlayerSet(0b0011)));
  CHECK_FALSE(none.derives(PlayerSet(0b0111), PlayerSet(0b1000)));
}
