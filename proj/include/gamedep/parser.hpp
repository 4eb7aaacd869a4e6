#pragma once

// Line-oriented text formats. `#` starts a comment, blank lines are ignored,
// identifiers are case-sensitive ASCII.
//
//   graph:      players <id>+
//               edge <id> <id>
//   game:       graph lines, plus
//               strategies <player> <label>+
//               payoff <player> <p1>=<label> ... <pk>=<label> <rational>
//               where {p1..pk} is exactly Adj+(player)
//   formula:    imp := unary ('->' imp)? ; unary := '!' unary | primary
//               primary := 'false' | '(' imp ')' | set '|>' set
//               set := '{' idlist? '}' | idlist ; idlist := id (',' id)*
//   derivation: <idx>. <atom> [<Rule> <args>]   one step per line

#include <string>
#include <string_view>
#include <utility>

#include "gamedep/core.hpp"
#include "gamedep/derivation.hpp"
#include "gamedep/formula.hpp"

namespace gamedep {

DependencyGraph parse_graph(std::string_view text);
Game parse_game(std::string_view text);
Formula parse_formula(std::string_view text, const DependencyGraph& graph);
/// A formula that must be a single atom.
DependenceAtom parse_atom(std::string_view text, const DependencyGraph& graph);
Derivation parse_derivation(std::string_view text, const DependencyGraph& graph);

std::string print_graph(const DependencyGraph& graph);
std::string print_game(const Game& game);
std::string print_formula(const Formula& formula, const DependencyGraph& graph);
std::string print_atom(const DependenceAtom& atom, const DependencyGraph& graph);
std::string print_derivation(const Derivation& derivation, const DependencyGraph& graph);

/// `a,b,c` in declaration order; `{}` for the empty set.
std::string print_set(PlayerSet set, const DependencyGraph& graph);
/// `{a,b,c}` with braces always.
std::string print_braced_set(PlayerSet set, const DependencyGraph& graph);
/// `a=a1 b=b2 ...`
std::string print_profile(const Game& game, const StrategyProfile& profile);

}  // namespace gamedep
