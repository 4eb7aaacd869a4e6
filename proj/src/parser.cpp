#include "gamedep/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "gamedep/error.hpp"

namespace gamedep {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Splits into non-empty, comment-stripped, whitespace-tokenized lines.
std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message) { throw Error(ErrorKind::Parse, message, line); }

PlayerIndex lookup(const DependencyGraph& graph, const std::string& name, int line) {
  if (auto v = graph.find(name)) return *v;
  fail(line, "undeclared player '" + name + "'");
}

struct GraphSection {
  DependencyGraph graph;
  std::vector<Line> rest;  // lines other than players/edge
};

GraphSection read_graph(std::string_view text, bool game_document) {
  GraphSection out;
  bool have_players = false;
  for (auto& line : tokenize_lines(text)) {
    const std::string& head = line.tokens[0];
    if (head == "players") {
      if (have_players) fail(line.number, "second players line");
      if (line.tokens.size() < 2) fail(line.number, "players line declares no players");
      std::vector<std::string> names(line.tokens.begin() + 1, line.tokens.end());
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_player_name(names[i])) fail(line.number, "invalid player name '" + names[i] + "'");
        for (std::size_t j = 0; j < i; ++j) {
          if (names[i] == names[j]) fail(line.number, "duplicate player '" + names[i] + "'");
        }
      }
      if (names.size() > kMaxPlayers) {
        throw Error(ErrorKind::Resource, "at most " + std::to_string(kMaxPlayers) + " players are supported",
                    line.number);
      }
      out.graph = DependencyGraph(std::move(names));
      have_players = true;
      continue;
    }
    if (!have_players) fail(line.number, "missing players line before '" + head + "'");
    if (head == "edge") {
      if (line.tokens.size() != 3) fail(line.number, "edge expects two players");
      const PlayerIndex u = lookup(out.graph, line.tokens[1], line.number);
      const PlayerIndex v = lookup(out.graph, line.tokens[2], line.number);
      if (u == v) fail(line.number, "loop edge on '" + line.tokens[1] + "'");
      if (out.graph.adjacent(u, v)) fail(line.number, "duplicate edge " + line.tokens[1] + " " + line.tokens[2]);
      out.graph.add_edge(u, v);
    } else if (game_document && (head == "strategies" || head == "payoff")) {
      out.rest.push_back(std::move(line));
    } else {
      fail(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!have_players) fail(1, "missing players line");
  return out;
}

// ---------------------------------------------------------------------------
// Formula lexer / recursive-descent parser

enum class Tok { Id, False, LBrace, RBrace, Comma, LParen, RParen, Arrow, Triangle, Bang, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const DependencyGraph& graph) : text_(text), graph_(graph) { lex(); }

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) error(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const Token& at, const std::string& message, ErrorKind kind = ErrorKind::Parse) const {
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < at.offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    throw Error(kind, "column " + std::to_string(at.offset - line_start + 1) + ": " + message, line);
  }

  void lex() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char ch = text_[i];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      auto two = text_.substr(i, 2);
      if (two == "->") {
        tokens_.push_back({Tok::Arrow, "->", i});
        i += 2;
      } else if (two == "|>") {
        tokens_.push_back({Tok::Triangle, "|>", i});
        i += 2;
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t j = i;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
        std::string word(text_.substr(i, j - i));
        tokens_.push_back({word == "false" ? Tok::False : Tok::Id, word, i});
        i = j;
      } else {
        Tok kind;
        switch (ch) {
          case '{': kind = Tok::LBrace; break;
          case '}': kind = Tok::RBrace; break;
          case ',': kind = Tok::Comma; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case '!': kind = Tok::Bang; break;
          default: error(Token{Tok::End, "", i}, std::string("unexpected character '") + ch + "'");
        }
        tokens_.push_back({kind, std::string(1, ch), i});
        ++i;
      }
    }
    tokens_.push_back({Tok::End, "end of input", text_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) error(peek(), std::string("expected ") + what + ", found '" + peek().text + "'");
    ++pos_;
  }

  Formula implication() {
    Formula left = unary();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      return Formula::implies(std::move(left), implication());
    }
    return left;
  }

  Formula unary() {
    if (peek().kind == Tok::Bang) {
      ++pos_;
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (peek().kind) {
      case Tok::False: ++pos_; return Formula::falsum();
      case Tok::LParen: {
        ++pos_;
        Formula inner = implication();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Id:
      case Tok::LBrace: {
        const PlayerSet lhs = set();
        expect(Tok::Triangle, "'|>'");
        const PlayerSet rhs = set();
        return Formula::atom(lhs, rhs);
      }
      default: error(peek(), "expected a formula, found '" + peek().text + "'");
    }
  }

  PlayerSet set() {
    PlayerSet out;
    if (peek().kind == Tok::LBrace) {
      ++pos_;
      if (peek().kind == Tok::RBrace) {
        ++pos_;
        return out;
      }
      out = idlist();
      expect(Tok::RBrace, "'}'");
      return out;
    }
    return idlist();
  }

  PlayerSet idlist() {
    PlayerSet out = PlayerSet::single(player());
    while (peek().kind == Tok::Comma) {
      ++pos_;
      out = out.with(player());
    }
    return out;
  }

  PlayerIndex player() {
    const Token& tok = peek();
    if (tok.kind != Tok::Id) error(tok, "expected a player, found '" + tok.text + "'");
    ++pos_;
    if (auto v = graph_.find(tok.text)) return *v;
    error(tok, "player '" + tok.text + "' is not in the graph", ErrorKind::Scope);
  }

  std::string_view text_;
  const DependencyGraph& graph_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool prints_as_negation(const Formula& f) { return f.is_implication() && f.consequent().is_falsum(); }

// `{a,b}` inside derivation arguments.
PlayerSet parse_braced(std::string_view text, const DependencyGraph& graph, int line) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    fail(line, "expected a braced player set, found '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  PlayerSet out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string name(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const auto v = graph.find(name);
    if (!v) throw Error(ErrorKind::Scope, "player '" + name + "' is not in the graph", line);
    out = out.with(*v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (Rule r : {Rule::Hypothesis, Rule::Reflexivity, Rule::Augmentation, Rule::Transitivity, Rule::Contiguity,
                 Rule::LeftMonotonicity}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

std::size_t parse_index(std::string_view text, int line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail(line, "expected a step index, found '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------

DependencyGraph parse_graph(std::string_view text) { return read_graph(text, false).graph; }

Game parse_game(std::string_view text) {
  GraphSection section = read_graph(text, true);
  const DependencyGraph& graph = section.graph;

  std::vector<std::optional<std::vector<std::string>>> strategies(graph.size());
  std::vector<const Line*> payoffs;
  for (const auto& line : section.rest) {
    if (line.tokens[0] == "payoff") {
      payoffs.push_back(&line);
      continue;
    }
    if (line.tokens.size() < 3) fail(line.number, "strategies expects a player and at least one label");
    const PlayerIndex v = lookup(graph, line.tokens[1], line.number);
    if (strategies[v]) fail(line.number, "second strategies line for '" + line.tokens[1] + "'");
    std::vector<std::string> labels(line.tokens.begin() + 2, line.tokens.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!is_strategy_label(labels[i])) fail(line.number, "invalid strategy label '" + labels[i] + "'");
      for (std::size_t j = 0; j < i; ++j) {
        if (labels[i] == labels[j]) fail(line.number, "duplicate strategy '" + labels[i] + "'");
      }
    }
    strategies[v] = std::move(labels);
  }

  std::vector<std::vector<std::string>> labels;
  for (PlayerIndex v = 0; v < graph.size(); ++v) {
    if (!strategies[v]) {
      const int at = section.rest.empty() ? 1 : section.rest.back().number;
      fail(at, "player '" + graph.name(v) + "' has no strategies line");
    }
    labels.push_back(std::move(*strategies[v]));
  }

  Game game = [&] {
    try {
      return Game(graph, std::move(labels));
    } catch (const Error& e) {
      throw Error(e.kind(), e.message(), section.rest.empty() ? 1 : section.rest.front().number);
    }
  }();

  for (const Line* line : payoffs) {
    const auto& tokens = line->tokens;
    if (tokens.size() < 4) fail(line->number, "payoff expects a player, an assignment and a value");
    const PlayerIndex owner = lookup(graph, tokens[1], line->number);
    PayoffTable& table = game.table(owner);

    std::map<PlayerIndex, std::uint32_t> assignment;
    PlayerSet keyed;
    for (std::size_t i = 2; i + 1 < tokens.size(); ++i) {
      const auto eq = tokens[i].find('=');
      if (eq == std::string::npos) fail(line->number, "expected <player>=<strategy>, found '" + tokens[i] + "'");
      const std::string name = tokens[i].substr(0, eq);
      const std::string label = tokens[i].substr(eq + 1);
      const PlayerIndex p = lookup(graph, name, line->number);
      if (keyed.contains(p)) fail(line->number, "player '" + name + "' assigned twice");
      const auto s = game.find_strategy(p, label);
      if (!s) fail(line->number, "'" + label + "' is not a strategy of '" + name + "'");
      keyed = keyed.with(p);
      assignment[p] = *s;
    }
    if (keyed != table.scope()) {
      throw Error(ErrorKind::Locality,
                  "payoff of '" + tokens[1] + "' must be keyed by exactly {" +
                      print_set(table.scope(), graph) + "}, got {" + print_set(keyed, graph) + "}",
                  line->number);
    }
    const auto value = Rational::parse(tokens.back());
    if (!value) fail(line->number, "malformed payoff value '" + tokens.back() + "'");

    std::vector<std::uint32_t> local;
    for (const auto& [p, s] : assignment) local.push_back(s);  // std::map iterates in declaration order
    const std::size_t cell = table.index_of_local(local);
    if (table.is_set(cell)) fail(line->number, "duplicate payoff entry");
    table.set(cell, *value);
  }
  return game;
}

Formula parse_formula(std::string_view text, const DependencyGraph& graph) {
  return FormulaParser(text, graph).parse();
}

DependenceAtom parse_atom(std::string_view text, const DependencyGraph& graph) {
  const Formula f = parse_formula(text, graph);
  if (!f.is_atom()) throw Error(ErrorKind::Parse, "expected a single atom '<set> |> <set>'", 1);
  return DependenceAtom{f.lhs(), f.rhs()};
}

Derivation parse_derivation(std::string_view text, const DependencyGraph& graph) {
  Derivation out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    const bool last = end == text.size();
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
    if (raw.empty()) {
      if (last) break;
      continue;
    }

    const auto dot = raw.find(". ");
    if (dot == std::string_view::npos) fail(number, "expected '<index>. <atom> [<Rule> ...]'");
    const std::size_t index = parse_index(raw.substr(0, dot), number);
    if (index != out.steps.size() + 1) {
      fail(number, "step numbered " + std::to_string(index) + ", expected " + std::to_string(out.steps.size() + 1));
    }
    const auto open = raw.find('[', dot);
    if (open == std::string_view::npos || raw.back() != ']') fail(number, "missing '[<Rule> ...]' justification");

    DerivationStep step;
    try {
      step.atom = parse_atom(raw.substr(dot + 2, open - dot - 2), graph);
    } catch (const Error& e) {
      throw Error(e.kind(), e.message(), number);
    }

    std::istringstream args(std::string(raw.substr(open + 1, raw.size() - open - 2)));
    std::string word;
    args >> word;
    const auto rule = rule_from_name(word);
    if (!rule) fail(number, "unknown rule '" + word + "'");
    step.rule = *rule;

    bool have_added = false;
    bool have_cut = false;
    bool have_split = false;
    while (args >> word) {
      if (std::isdigit(static_cast<unsigned char>(word[0]))) {
        step.premises.push_back(parse_index(word, number));
      } else if (word.rfind("C=", 0) == 0) {
        step.added = parse_braced(std::string_view(word).substr(2), graph, number);
        have_added = true;
      } else if (word.rfind("A=", 0) == 0) {
        step.split = parse_braced(std::string_view(word).substr(2), graph, number);
        have_split = true;
      } else if (word.rfind("cut=", 0) == 0) {
        const std::string_view body = std::string_view(word).substr(4);
        const auto bar = body.find("}|{");
        if (bar == std::string_view::npos) fail(number, "expected cut={U}|{W}");
        step.cut.left = parse_braced(body.substr(0, bar + 1), graph, number);
        step.cut.right = parse_braced(body.substr(bar + 2), graph, number);
        have_cut = true;
      } else {
        fail(number, "unexpected argument '" + word + "'");
      }
    }

    std::size_t want_premises = 0;
    bool want_added = false;
    bool want_cut = false;
    switch (step.rule) {
      case Rule::Hypothesis:
      case Rule::Reflexivity: break;
      case Rule::Augmentation:
      case Rule::LeftMonotonicity: want_premises = 1; want_added = true; break;
      case Rule::Transitivity: want_premises = 2; break;
      case Rule::Contiguity: want_premises = 1; want_cut = true; break;
    }
    if (step.premises.size() != want_premises || have_added != want_added || have_cut != want_cut ||
        have_split != want_cut) {
      fail(number, std::string("wrong arguments for ") + to_string(step.rule));
    }
    out.steps.push_back(std::move(step));
    if (last) break;
  }
  if (out.steps.empty()) fail(number, "derivation has no steps");
  return out;
}

// ---------------------------------------------------------------------------

std::string print_set(PlayerSet set, const DependencyGraph& graph) {
  if (set.empty()) return "{}";
  std::string out;
  set.for_each([&](PlayerIndex v) {
    if (!out.empty()) out += ',';
    out += graph.name(v);
  });
  return out;
}

std::string print_braced_set(PlayerSet set, const DependencyGraph& graph) {
  return set.empty() ? "{}" : "{" + print_set(set, graph) + "}";
}

std::string print_graph(const DependencyGraph& graph) {
  std::string out = "players";
  for (const auto& name : graph.names()) out += " " + name;
  out += "\n";
  for (const auto& [u, v] : graph.edges()) out += "edge " + graph.name(u) + " " + graph.name(v) + "\n";
  return out;
}

std::string print_game(const Game& game) {
  const DependencyGraph& graph = game.graph();
  std::string out = print_graph(graph);
  for (PlayerIndex v = 0; v < graph.size(); ++v) {
    out += "strategies " + graph.name(v);
    for (const auto& label : game.strategies(v)) out += " " + label;
    out += "\n";
  }
  for (PlayerIndex v = 0; v < graph.size(); ++v) {
    const PayoffTable& table = game.table(v);
    for (std::size_t cell = 0; cell < table.size(); ++cell) {
      if (!table.is_set(cell)) continue;
      out += "payoff " + graph.name(v);
      const auto local = table.local_of(cell);
      for (std::size_t i = 0; i < local.size(); ++i) {
        const PlayerIndex p = table.players()[i];
        out += " " + graph.name(p) + "=" + game.strategies(p)[local[i]];
      }
      out += " " + table.value(cell).str() + "\n";
    }
  }
  return out;
}

std::string print_formula(const Formula& formula, const DependencyGraph& graph) {
  switch (formula.kind()) {
    case Formula::Kind::Falsum: return "false";
    case Formula::Kind::Atom: return print_set(formula.lhs(), graph) + " |> " + print_set(formula.rhs(), graph);
    case Formula::Kind::Implication: break;
  }
  const Formula& ante = formula.antecedent();
  if (prints_as_negation(formula)) {
    const std::string inner = print_formula(ante, graph);
    return ante.is_implication() && !prints_as_negation(ante) ? "!(" + inner + ")" : "!" + inner;
  }
  std::string left = print_formula(ante, graph);
  if (ante.is_implication() && !prints_as_negation(ante)) left = "(" + left + ")";
  return left + " -> " + print_formula(formula.consequent(), graph);
}

std::string print_atom(const DependenceAtom& atom, const DependencyGraph& graph) {
  return print_set(atom.lhs, graph) + " |> " + print_set(atom.rhs, graph);
}

std::string print_derivation(const Derivation& derivation, const DependencyGraph& graph) {
  std::string out;
  for (std::size_t i = 0; i < derivation.steps.size(); ++i) {
    const DerivationStep& step = derivation.steps[i];
    out += std::to_string(i + 1) + ". " + print_atom(step.atom, graph) + " [" + to_string(step.rule);
    for (std::size_t p : step.premises) out += " " + std::to_string(p);
    switch (step.rule) {
      case Rule::Augmentation:
      case Rule::LeftMonotonicity: out += " C=" + print_braced_set(step.added, graph); break;
      case Rule::Contiguity:
        out += " cut=" + print_braced_set(step.cut.left, graph) + "|" + print_braced_set(step.cut.right, graph) +
               " A=" + print_braced_set(step.split, graph);
        break;
      default: break;
    }
    out += "]\n";
  }
  return out;
}

std::string print_profile(const Game& game, const StrategyProfile& profile) {
  std::string out;
  for (PlayerIndex v = 0; v < game.player_count(); ++v) {
    if (v != 0) out += ' ';
    out += game.graph().name(v) + "=" + game.strategies(v).at(profile.choice.at(v));
  }
  return out;
}

}  // namespace gamedep
