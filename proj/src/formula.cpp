#include "gamedep/formula.hpp"

namespace gamedep {

Formula Formula::falsum() { return Formula(); }

Formula Formula::atom(PlayerSet lhs, PlayerSet rhs) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.lhs_ = lhs;
  f.rhs_ = rhs;
  return f;
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  Formula f;
  f.kind_ = Kind::Implication;
  f.antecedent_ = std::make_shared<const Formula>(std::move(antecedent));
  f.consequent_ = std::make_shared<const Formula>(std::move(consequent));
  return f;
}

Formula Formula::negation(Formula f) { return implies(std::move(f), falsum()); }

PlayerSet Formula::players() const {
  switch (kind_) {
    case Kind::Falsum: return PlayerSet();
    case Kind::Atom: return lhs_ | rhs_;
    case Kind::Implication: return antecedent_->players() | consequent_->players();
  }
  return PlayerSet();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Formula::Kind::Falsum: return true;
    case Formula::Kind::Atom: return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
    case Formula::Kind::Implication:
      return *a.antecedent_ == *b.antecedent_ && *a.consequent_ == *b.consequent_;
  }
  return false;
}

}  // namespace gamedep
