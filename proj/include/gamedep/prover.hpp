#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamedep/derivation.hpp"

namespace gamedep {

/// Saturation enumerates every subset and every cut, so cost grows as 4^n.
inline constexpr std::size_t kMaxProverVertices = 12;

/// Closure of every player set under the hypotheses and the four rules.
/// closure(X) holds every single player c with X |> c derivable; a
/// justification is kept for each such fact so that derivations can be
/// rebuilt.
class ClosureTable {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  PlayerSet closure(PlayerSet x) const { return closure_.at(x.bits()); }
  bool derives(PlayerSet lhs, PlayerSet rhs) const { return rhs.subset_of(closure(lhs)); }

  /// Explicit derivation of `lhs |> rhs`, or nullopt when not derivable.
  std::optional<Derivation> derivation(PlayerSet lhs, PlayerSet rhs) const;

 private:
  friend ClosureTable saturate(const DependencyGraph& graph, const Hypotheses& hyps);

  enum class Source : std::uint8_t { None, Reflexive, Hypothesis, Monotone, Closure, Contiguity };

  // Fact "X |> c". `seq` orders facts by discovery; every premise has a
  // smaller seq than its conclusion.
  struct Fact {
    Source source = Source::None;
    std::uint32_t seq = 0;
    std::uint64_t from = 0;  // predecessor set (Monotone, Closure, Contiguity)
    std::uint64_t cut = 0;   // U of the cut (Contiguity); hypothesis index (Hypothesis)
  };

  Fact& fact(std::uint64_t x, PlayerIndex c) { return facts_[x * n_ + c]; }
  const Fact& fact(std::uint64_t x, PlayerIndex c) const { return facts_[x * n_ + c]; }

  std::size_t n_ = 0;
  Hypotheses hyps_;
  std::vector<PlayerSet> closure_;
  std::vector<Fact> facts_;
};

/// Throws Error(Resource) above kMaxProverVertices and Error(Input) when a
/// hypothesis mentions players outside the graph.
ClosureTable saturate(const DependencyGraph& graph, const Hypotheses& hyps);

bool derives(const DependencyGraph& graph, const Hypotheses& hyps, PlayerSet lhs, PlayerSet rhs);

std::optional<Derivation> derive_tree(const DependencyGraph& graph, const Hypotheses& hyps,
                                      PlayerSet lhs, PlayerSet rhs);

struct DerivationCheck {
  bool valid = false;
  std::size_t step = 0;      // 1-based offending step, 0 when valid or empty
  std::string diagnostic;    // "step <k>: <reason>"
  Hypotheses assumed;        // atoms cited by Hypothesis steps

  explicit operator bool() const noexcept { return valid; }
};

/// Verifies every step against its rule schema; Hypothesis steps must cite
/// a member of `hyps`.
DerivationCheck check_derivation(const DependencyGraph& graph, const Hypotheses& hyps,
                                 const Derivation& derivation);

/// Same, but Hypothesis steps are accepted as open assumptions and
/// collected in the result.
DerivationCheck check_derivation_open(const DependencyGraph& graph, const Derivation& derivation);

/// Every two distinct members of `set` are at distance >= 3.
bool sparse(const DependencyGraph& graph, PlayerSet set);

Hypotheses general_principle_hypotheses(const DependencyGraph& graph, PlayerSet sparse_set);
DependenceAtom general_principle_goal(const DependencyGraph& graph, PlayerSet sparse_set);

/// Derivation of (V - W) |> W from {(V - {w}) |> w : w in W}. Throws
/// Error(Input) when W is not sparse.
std::optional<Derivation> general_principle(const DependencyGraph& graph, PlayerSet sparse_set);

}  // namespace gamedep
