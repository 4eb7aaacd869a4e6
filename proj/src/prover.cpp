#include "gamedep/prover.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gamedep/error.hpp"

namespace gamedep {

const char* to_string(Rule rule) noexcept {
  switch (rule) {
    case Rule::Hypothesis: return "Hypothesis";
    case Rule::Reflexivity: return "Reflexivity";
    case Rule::Augmentation: return "Augmentation";
    case Rule::Transitivity: return "Transitivity";
    case Rule::Contiguity: return "Contiguity";
    case Rule::LeftMonotonicity: return "LeftMonotonicity";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Saturation
//
// The table is the least closure operator that contains the hypotheses and
// is closed under the contiguity rule. Three passes are repeated until none
// adds a fact:
//   monotone   cl(X) includes cl(X - {i})              (left monotonicity)
//   closure    cl(X) includes cl(cl(X))                (augmentation + transitivity)
//   contiguity c in cl(X), c in W  =>  c in cl(B(U) u B(W) u (X - U))
// Contiguity only uses the split A = X n U, B = X - U; any other split has a
// larger left side, reachable from this one by monotonicity.

ClosureTable saturate(const DependencyGraph& graph, const Hypotheses& hyps) {
  const std::size_t n = graph.size();
  if (n > kMaxProverVertices) {
    throw Error(ErrorKind::Resource, "prover supports at most " + std::to_string(kMaxProverVertices) +
                                         " vertices, graph has " + std::to_string(n));
  }
  for (const auto& h : hyps) {
    if (!(h.lhs | h.rhs).subset_of(graph.vertices())) {
      throw Error(ErrorKind::Input, "hypothesis mentions a player outside the graph");
    }
  }

  ClosureTable t;
  t.n_ = n;
  t.hyps_ = hyps;
  const std::uint64_t sets = std::uint64_t{1} << n;
  t.closure_.assign(sets, PlayerSet());
  t.facts_.assign(sets * (n == 0 ? 1 : n), ClosureTable::Fact{});

  using Source = ClosureTable::Source;
  std::uint32_t seq = 0;
  bool changed = false;
  auto add = [&](std::uint64_t x, PlayerSet missing, Source source, std::uint64_t from, std::uint64_t aux) {
    if (missing.empty()) return;
    t.closure_[x] |= missing;
    missing.for_each([&](PlayerIndex c) { t.fact(x, c) = {source, ++seq, from, aux}; });
    changed = true;
  };

  for (std::uint64_t x = 0; x < sets; ++x) add(x, PlayerSet(x), Source::Reflexive, 0, 0);
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    const std::uint64_t x = hyps[i].lhs.bits();
    add(x, hyps[i].rhs - t.closure_[x], Source::Hypothesis, 0, i);
  }

  std::vector<PlayerSet> double_border(sets);
  for (std::uint64_t u = 0; u < sets; ++u) {
    const PlayerSet left(u);
    double_border[u] = border(graph, left) | border(graph, graph.vertices() - left);
  }

  do {
    changed = false;
    for (std::uint64_t x = 1; x < sets; ++x) {
      PlayerSet(x).for_each([&](PlayerIndex i) {
        const std::uint64_t smaller = PlayerSet(x).without(i).bits();
        add(x, t.closure_[smaller] - t.closure_[x], Source::Monotone, smaller, 0);
      });
    }
    for (std::uint64_t x = 0; x < sets; ++x) {
      const std::uint64_t y = t.closure_[x].bits();
      if (y != x) add(x, t.closure_[y] - t.closure_[x], Source::Closure, y, 0);
    }
    for (std::uint64_t x = 0; x < sets; ++x) {
      const PlayerSet gained = t.closure_[x] - PlayerSet(x);
      if (gained.empty()) continue;
      for (std::uint64_t u = 1; u + 1 < sets; ++u) {
        const PlayerSet left(u);
        const PlayerSet across = gained - left;
        if (across.empty()) continue;
        const std::uint64_t target = (double_border[u] | (PlayerSet(x) - left)).bits();
        add(target, across - t.closure_[target], Source::Contiguity, x, u);
      }
    }
  } while (changed);
  return t;
}

bool derives(const DependencyGraph& graph, const Hypotheses& hyps, PlayerSet lhs, PlayerSet rhs) {
  return saturate(graph, hyps).derives(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Derivation rebuild

namespace {

enum class Via { Reflexive, Hypothesis, Monotone, Closure, Contiguity };

struct Justification {
  Via via;
  std::uint64_t from;  // predecessor set
  std::uint64_t aux;   // hypothesis index or cut side U
};

DerivationStep make_step(PlayerSet lhs, PlayerSet rhs, Rule rule, std::vector<std::size_t> premises = {}) {
  DerivationStep step;
  step.atom = {lhs, rhs};
  step.rule = rule;
  step.premises = std::move(premises);
  return step;
}

class DerivationBuilder {
 public:
  using Lookup = std::function<Justification(std::uint64_t, PlayerIndex)>;

  DerivationBuilder(std::size_t n, const Hypotheses& hyps, Lookup lookup)
      : all_(PlayerSet::first(n)), hyps_(hyps), lookup_(std::move(lookup)) {}

  std::size_t push(DerivationStep step) {
    if (auto it = index_.find(step.atom); it != index_.end()) return it->second;
    steps_.push_back(std::move(step));
    index_.emplace(steps_.back().atom, steps_.size());
    return steps_.size();
  }

  // x |> c for a saturated fact.
  std::size_t fact(std::uint64_t x, PlayerIndex c) {
    const PlayerSet lhs(x);
    const PlayerSet rhs = PlayerSet::single(c);
    if (auto it = index_.find({lhs, rhs}); it != index_.end()) return it->second;

    const Justification j = lookup_(x, c);
    switch (j.via) {
      case Via::Reflexive: return push(make_step(lhs, rhs, Rule::Reflexivity));
      case Via::Hypothesis: {
        const DependenceAtom& h = hyps_.at(j.aux);
        const std::size_t hi = push(make_step(h.lhs, h.rhs, Rule::Hypothesis));
        if (h.rhs == rhs) return hi;
        const std::size_t ri = push(make_step(h.rhs, rhs, Rule::Reflexivity));
        return push(make_step(lhs, rhs, Rule::Transitivity, {hi, ri}));
      }
      case Via::Monotone: {
        const std::size_t p = fact(j.from, c);
        DerivationStep step = make_step(lhs, rhs, Rule::LeftMonotonicity, {p});
        step.added = lhs - PlayerSet(j.from);
        return push(std::move(step));
      }
      case Via::Closure: {
        const std::size_t wide = widen(lhs, PlayerSet(j.from));
        const std::size_t tail = fact(j.from, c);
        return push(make_step(lhs, rhs, Rule::Transitivity, {wide, tail}));
      }
      case Via::Contiguity: {
        const std::size_t p = fact(j.from, c);
        DerivationStep step = make_step(lhs, rhs, Rule::Contiguity, {p});
        const PlayerSet left(j.aux);
        step.cut = Cut{left, all_ - left};
        step.split = PlayerSet(j.from) & left;
        return push(std::move(step));
      }
    }
    return 0;
  }

  // x |> y for x a subset of y, adding one element e of y - x at a time:
  //   x |> e  --Aug(cur)-->  cur |> cur,e  --Trans with x |> cur-->  x |> cur,e
  std::size_t widen(PlayerSet x, PlayerSet y) {
    std::size_t acc = 0;
    PlayerSet cur = x;
    (y - x).for_each([&](PlayerIndex e) {
      const std::size_t fe = fact(x.bits(), e);
      DerivationStep aug = make_step(cur, cur.with(e), Rule::Augmentation, {fe});
      aug.added = cur;
      const std::size_t ai = push(std::move(aug));
      acc = acc == 0 ? ai : push(make_step(x, cur.with(e), Rule::Transitivity, {acc, ai}));
      cur = cur.with(e);
    });
    return acc;
  }

  // Keeps only the ancestors of `goal`, renumbered.
  Derivation finish(std::size_t goal) const {
    std::vector<char> keep(steps_.size() + 1, 0);
    keep[goal] = 1;
    for (std::size_t k = goal; k >= 1; --k) {
      if (!keep[k]) continue;
      for (std::size_t p : steps_[k - 1].premises) keep[p] = 1;
    }
    std::vector<std::size_t> renumber(steps_.size() + 1, 0);
    Derivation out;
    for (std::size_t k = 1; k <= goal; ++k) {
      if (!keep[k]) continue;
      DerivationStep step = steps_[k - 1];
      for (auto& p : step.premises) p = renumber[p];
      out.steps.push_back(std::move(step));
      renumber[k] = out.steps.size();
    }
    return out;
  }

 private:
  PlayerSet all_;
  const Hypotheses& hyps_;
  Lookup lookup_;
  std::vector<DerivationStep> steps_;
  std::map<DependenceAtom, std::size_t> index_;
};

}  // namespace

std::optional<Derivation> ClosureTable::derivation(PlayerSet lhs, PlayerSet rhs) const {
  const PlayerSet all = PlayerSet::first(n_);
  if (!(lhs | rhs).subset_of(all)) throw Error(ErrorKind::Input, "goal mentions a player outside the graph");
  if (!derives(lhs, rhs)) return std::nullopt;

  DerivationBuilder builder(n_, hyps_, [this](std::uint64_t x, PlayerIndex c) {
    const Fact& f = fact(x, c);
    switch (f.source) {
      case Source::Reflexive: return Justification{Via::Reflexive, 0, 0};
      case Source::Hypothesis: return Justification{Via::Hypothesis, 0, f.cut};
      case Source::Monotone: return Justification{Via::Monotone, f.from, 0};
      case Source::Closure: return Justification{Via::Closure, f.from, 0};
      case Source::Contiguity: return Justification{Via::Contiguity, f.from, f.cut};
      case Source::None: break;
    }
    throw Error(ErrorKind::Input, "no justification recorded for a closure fact");
  });

  std::size_t goal;
  const PlayerSet extra = rhs - lhs;
  if (extra.empty()) {
    goal = builder.push(make_step(lhs, rhs, Rule::Reflexivity));
  } else if (rhs == extra && extra.size() == 1) {
    goal = builder.fact(lhs.bits(), extra.members().front());
  } else {
    const PlayerSet wide = lhs | extra;
    goal = builder.widen(lhs, wide);
    if (wide != rhs) {
      const std::size_t proj = builder.push(make_step(wide, rhs, Rule::Reflexivity));
      goal = builder.push(make_step(lhs, rhs, Rule::Transitivity, {goal, proj}));
    }
  }
  return builder.finish(goal);
}

std::optional<Derivation> derive_tree(const DependencyGraph& graph, const Hypotheses& hyps, PlayerSet lhs,
                                      PlayerSet rhs) {
  return saturate(graph, hyps).derivation(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Checking

namespace {

DerivationCheck check_impl(const DependencyGraph& graph, const Hypotheses* hyps, const Derivation& d) {
  DerivationCheck result;
  const PlayerSet all = graph.vertices();
  auto reject = [&](std::size_t k, const std::string& why) {
    result.valid = false;
    result.step = k;
    result.diagnostic = "step " + std::to_string(k) + ": " + why;
    return result;
  };
  if (d.steps.empty()) return reject(0, "empty derivation");

  for (std::size_t k = 1; k <= d.steps.size(); ++k) {
    const DerivationStep& step = d.steps[k - 1];
    const DependenceAtom& atom = step.atom;
    if (!(atom.lhs | atom.rhs).subset_of(all)) return reject(k, "atom mentions a player outside the graph");
    for (std::size_t p : step.premises) {
      if (p == 0 || p >= k) return reject(k, "premise " + std::to_string(p) + " does not precede this step");
    }
    auto premise = [&](std::size_t i) -> const DependenceAtom& { return d.steps[step.premises.at(i) - 1].atom; };
    auto arity = [&](std::size_t want) { return step.premises.size() == want; };

    switch (step.rule) {
      case Rule::Hypothesis: {
        if (!arity(0)) return reject(k, "Hypothesis takes no premises");
        if (hyps != nullptr && std::find(hyps->begin(), hyps->end(), atom) == hyps->end()) {
          return reject(k, "not among the hypotheses");
        }
        if (std::find(result.assumed.begin(), result.assumed.end(), atom) == result.assumed.end()) {
          result.assumed.push_back(atom);
        }
        break;
      }
      case Rule::Reflexivity:
        if (!arity(0)) return reject(k, "Reflexivity takes no premises");
        if (!atom.rhs.subset_of(atom.lhs)) return reject(k, "right side is not a subset of the left side");
        break;
      case Rule::Augmentation: {
        if (!arity(1)) return reject(k, "Augmentation takes one premise");
        const auto& p = premise(0);
        if (atom != DependenceAtom{p.lhs | step.added, p.rhs | step.added}) {
          return reject(k, "conclusion is not the premise with C added to both sides");
        }
        break;
      }
      case Rule::Transitivity: {
        if (!arity(2)) return reject(k, "Transitivity takes two premises");
        const auto& p = premise(0);
        const auto& q = premise(1);
        if (p.rhs != q.lhs) return reject(k, "middle sets differ");
        if (atom != DependenceAtom{p.lhs, q.rhs}) return reject(k, "conclusion does not chain the premises");
        break;
      }
      case Rule::Contiguity: {
        if (!arity(1)) return reject(k, "Contiguity takes one premise");
        const auto& p = premise(0);
        const Cut& cut = step.cut;
        if (!is_cut(graph, cut)) return reject(k, "(U, W) is not a cut");
        if (!step.split.subset_of(cut.left)) return reject(k, "A ⊄ U");
        if (!step.split.subset_of(p.lhs)) return reject(k, "A is not part of the premise's left side");
        if (!p.rhs.subset_of(cut.right)) return reject(k, "C ⊄ W");
        if (atom.rhs != p.rhs) return reject(k, "right side differs from the premise");
        // Some B with (premise lhs - A) <= B <= premise lhs must give
        // conclusion lhs = B(U) u B(W) u B.
        const PlayerSet walls = border(graph, cut.left) | border(graph, cut.right);
        const PlayerSet least = walls | (p.lhs - step.split);
        const PlayerSet most = walls | p.lhs;
        if (!least.subset_of(atom.lhs) || !atom.lhs.subset_of(most)) {
          return reject(k, "left side is not B(U),B(W),B for the given cut and split");
        }
        break;
      }
      case Rule::LeftMonotonicity: {
        if (!arity(1)) return reject(k, "LeftMonotonicity takes one premise");
        const auto& p = premise(0);
        if (atom != DependenceAtom{p.lhs | step.added, p.rhs}) {
          return reject(k, "conclusion is not the premise with C added to the left side");
        }
        break;
      }
    }
  }
  result.valid = true;
  result.step = 0;
  result.diagnostic.clear();
  return result;
}

}  // namespace

DerivationCheck check_derivation(const DependencyGraph& graph, const Hypotheses& hyps, const Derivation& derivation) {
  return check_impl(graph, &hyps, derivation);
}

DerivationCheck check_derivation_open(const DependencyGraph& graph, const Derivation& derivation) {
  return check_impl(graph, nullptr, derivation);
}

// ---------------------------------------------------------------------------
// Sparse sets

bool sparse(const DependencyGraph& graph, PlayerSet set) {
  if (!set.subset_of(graph.vertices())) throw Error(ErrorKind::Input, "set mentions a player outside the graph");
  bool ok = true;
  set.for_each([&](PlayerIndex w) {
    PlayerSet near = graph.neighbors(w);
    near.for_each([&](PlayerIndex v) { near |= graph.neighbors(v); });
    if (!(near & set.without(w)).empty()) ok = false;
  });
  return ok;
}

Hypotheses general_principle_hypotheses(const DependencyGraph& graph, PlayerSet sparse_set) {
  Hypotheses hyps;
  sparse_set.for_each([&](PlayerIndex w) {
    hyps.push_back({graph.vertices().without(w), PlayerSet::single(w)});
  });
  return hyps;
}

DependenceAtom general_principle_goal(const DependencyGraph& graph, PlayerSet sparse_set) {
  return {graph.vertices() - sparse_set, sparse_set};
}

std::optional<Derivation> general_principle(const DependencyGraph& graph, PlayerSet sparse_set) {
  if (!sparse(graph, sparse_set)) throw Error(ErrorKind::Input, "set is not sparse");
  const DependenceAtom goal = general_principle_goal(graph, sparse_set);
  return derive_tree(graph, general_principle_hypotheses(graph, sparse_set), goal.lhs, goal.rhs);
}

}  // namespace gamedep
