#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gamedep/core.hpp"

namespace gamedep {

/// `lhs |> rhs`.
struct DependenceAtom {
  PlayerSet lhs;
  PlayerSet rhs;

  friend bool operator==(const DependenceAtom&, const DependenceAtom&) = default;
  friend auto operator<=>(const DependenceAtom&, const DependenceAtom&) = default;
};

using Hypotheses = std::vector<DependenceAtom>;

enum class Rule {
  Hypothesis,
  Reflexivity,
  Augmentation,
  Transitivity,
  Contiguity,
  LeftMonotonicity,
};

const char* to_string(Rule rule) noexcept;

/// One numbered line of a derivation. Premises are 1-based indices of
/// earlier steps.
///
///   Augmentation      premises[0], `added` = C
///   Transitivity      premises[0] (A |> B), premises[1] (B |> C)
///   Contiguity        premises[0], `cut` = (U, W), `split` = A
///   LeftMonotonicity  premises[0], `added` joined to the left side
struct DerivationStep {
  DependenceAtom atom;
  Rule rule = Rule::Hypothesis;
  std::vector<std::size_t> premises;
  PlayerSet added;
  Cut cut;
  PlayerSet split;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Derivation {
  std::vector<DerivationStep> steps;

  const DependenceAtom& conclusion() const { return steps.back().atom; }
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

}  // namespace gamedep
