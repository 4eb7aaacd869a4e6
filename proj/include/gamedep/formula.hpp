#pragma once

#include <memory>

#include "gamedep/core.hpp"

namespace gamedep {

/// Dependence formula: falsum, an atom `lhs |> rhs`, or an implication.
/// Immutable; copies share subtrees.
class Formula {
 public:
  enum class Kind { Falsum, Atom, Implication };

  static Formula falsum();
  static Formula atom(PlayerSet lhs, PlayerSet rhs);
  static Formula implies(Formula antecedent, Formula consequent);
  /// `!f`, i.e. `f -> false`.
  static Formula negation(Formula f);

  Kind kind() const noexcept { return kind_; }
  bool is_falsum() const noexcept { return kind_ == Kind::Falsum; }
  bool is_atom() const noexcept { return kind_ == Kind::Atom; }
  bool is_implication() const noexcept { return kind_ == Kind::Implication; }

  PlayerSet lhs() const noexcept { return lhs_; }
  PlayerSet rhs() const noexcept { return rhs_; }
  const Formula& antecedent() const { return *antecedent_; }
  const Formula& consequent() const { return *consequent_; }

  /// Union of every player set mentioned.
  PlayerSet players() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  Formula() = default;

  Kind kind_ = Kind::Falsum;
  PlayerSet lhs_;
  PlayerSet rhs_;
  std::shared_ptr<const Formula> antecedent_;
  std::shared_ptr<const Formula> consequent_;
};

}  // namespace gamedep
