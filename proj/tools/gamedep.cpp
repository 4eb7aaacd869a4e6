// gamedep command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamedep/gamedep.h"

namespace {

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

struct Failure {
  std::string message;
};

void require(gd_status status) {
  if (status != GD_OK) throw Failure{gd_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Owns a string returned by the C API.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { gd_string_free(ptr_); }
  char** out() { return &ptr_; }
  std::string str() const { return ptr_ == nullptr ? std::string() : std::string(ptr_); }

 private:
  char* ptr_ = nullptr;
};

template <class T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr_); }
  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using Graph = Handle<gd_graph, gd_graph_free>;
using Game = Handle<gd_game, gd_game_free>;

void load_graph(Graph& graph, const std::string& path) { require(gd_graph_parse(read_file(path).c_str(), graph.out())); }
void load_game(Game& game, const std::string& path) { require(gd_game_parse(read_file(path).c_str(), game.out())); }

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  for (const auto& s : items) out.push_back(s.c_str());
  return out;
}

struct SearchOptions {
  std::uint32_t max_strategies = 0;
  std::string values;
  std::string mode;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::uint64_t max_profiles = 0;

  gd_search_bounds bounds() const {
    gd_search_bounds b;
    gd_search_bounds_init(&b);
    if (max_strategies != 0) b.max_strategies = max_strategies;
    if (!values.empty()) b.payoff_values = values.c_str();
    if (mode == "systematic") b.mode = GD_SEARCH_SYSTEMATIC;
    if (mode == "random") b.mode = GD_SEARCH_RANDOM;
    b.seed = seed;
    if (samples != 0) b.sample_count = samples;
    if (max_profiles != 0) b.max_profiles = max_profiles;
    return b;
  }
};

void add_search_options(CLI::App* cmd, SearchOptions& opts) {
  cmd->add_option("--max-strategies", opts.max_strategies, "strategies per player, at most")->check(CLI::Range(1, 64));
  cmd->add_option("--values", opts.values, "comma-separated payoff values, e.g. 0,1");
  cmd->add_option("--mode", opts.mode, "systematic or random")->check(CLI::IsMember({"systematic", "random"}));
  cmd->add_option("--seed", opts.seed, "random seed");
  cmd->add_option("--samples", opts.samples, "number of games to examine");
  cmd->add_option("--max-profiles", opts.max_profiles, "skip games with more profiles than this");
}

CLI::Option* add_assume(CLI::App* cmd, std::vector<std::string>& assume) {
  return cmd->add_option("--assume", assume, "hypothesis atom, e.g. \"a |> d\" (repeatable)")->allow_extra_args(false);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional dependence in Nash equilibria of graphical games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gd_version()));

  std::string file;
  std::string file2;
  std::string formula;
  std::vector<std::string> assume;
  SearchOptions search;

  auto* ne = app.add_subcommand("ne", "list the pure Nash equilibria of a game");
  ne->add_option("game-file", file)->required();

  auto* check = app.add_subcommand("check", "model-check a formula against a game");
  check->add_option("game-file", file)->required();
  check->add_option("formula", formula)->required();

  auto* prove = app.add_subcommand("prove", "derive a dependence atom from hypotheses");
  prove->add_option("graph-file", file)->required();
  add_assume(prove, assume);
  prove->add_option("goal", formula)->required();

  auto* refute = app.add_subcommand("refute", "search for a game in which a formula fails");
  refute->add_option("graph-file", file)->required();
  refute->add_option("formula", formula)->required();
  add_search_options(refute, search);

  auto* validate = app.add_subcommand("validate", "check a game file and report incomplete payoff tables");
  validate->add_option("game-file", file)->required();

  auto* fuzz = app.add_subcommand("fuzz-soundness", "test derivable atoms on random games satisfying the hypotheses");
  fuzz->add_option("graph-file", file)->required();
  add_assume(fuzz, assume);
  add_search_options(fuzz, search);

  auto* prove_check = app.add_subcommand("prove-check", "verify a derivation file");
  prove_check->add_option("graph-file", file)->required();
  prove_check->add_option("derivation-file", file2)->required();
  add_assume(prove_check, assume);

  auto* builtin = app.add_subcommand("builtin", "print a built-in game or graph");
  builtin->add_option("name", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailure;
  }

  try {
    if (ne->parsed()) {
      Game game;
      load_game(game, file);
      Text text;
      std::size_t count = 0;
      require(gd_game_equilibria(game.get(), text.out(), &count));
      std::cout << text.str() << "total: " << count << "\n";
      return kAffirmative;
    }

    if (check->parsed()) {
      Game game;
      load_game(game, file);
      int holds = 0;
      require(gd_game_check(game.get(), formula.c_str(), &holds));
      std::cout << (holds ? "holds" : "fails") << "\n";
      return holds ? kAffirmative : kNegative;
    }

    if (prove->parsed()) {
      Graph graph;
      load_graph(graph, file);
      const auto atoms = c_strings(assume);
      int derivable = 0;
      Text text;
      require(gd_prove(graph.get(), atoms.data(), atoms.size(), formula.c_str(), &derivable, text.out()));
      if (!derivable) {
        std::cout << "not derivable\n";
        return kNegative;
      }
      std::cout << text.str();
      return kAffirmative;
    }

    if (refute->parsed()) {
      Graph graph;
      load_graph(graph, file);
      const gd_search_bounds bounds = search.bounds();
      int found = 0;
      Text text;
      std::uint64_t examined = 0;
      int exhausted = 0;
      require(gd_refute(graph.get(), formula.c_str(), &bounds, &found, text.out(), &examined, &exhausted));
      if (!found) {
        std::cout << "no counterexample within bounds (" << examined << " games examined)\n";
        return kNegative;
      }
      std::cout << text.str();
      return kAffirmative;
    }

    if (validate->parsed()) {
      Game game;
      load_game(game, file);
      Text text;
      std::size_t count = 0;
      require(gd_game_validate(game.get(), text.out(), &count));
      std::string warnings = text.str();
      std::istringstream lines(warnings);
      for (std::string line; std::getline(lines, line);) std::cerr << "warning: " << line << "\n";
      std::cout << "valid";
      if (count > 0) std::cout << " (" << count << (count == 1 ? " warning)" : " warnings)");
      std::cout << "\n";
      return kAffirmative;
    }

    if (fuzz->parsed()) {
      Graph graph;
      load_graph(graph, file);
      const auto atoms = c_strings(assume);
      const gd_search_bounds bounds = search.bounds();
      std::uint64_t violations = 0;
      Text text;
      require(gd_fuzz_soundness(graph.get(), atoms.data(), atoms.size(), &bounds, &violations, text.out()));
      std::cout << text.str();
      return violations == 0 ? kAffirmative : kNegative;
    }

    if (prove_check->parsed()) {
      Graph graph;
      load_graph(graph, file);
      const std::string derivation = read_file(file2);
      const auto atoms = c_strings(assume);
      int valid = 0;
      Text text;
      require(gd_derivation_check(graph.get(), atoms.empty() ? nullptr : atoms.data(), atoms.size(),
                                  derivation.c_str(), &valid, text.out()));
      std::cout << text.str();
      return valid ? kAffirmative : kNegative;
    }

    if (builtin->parsed()) {
      Text text;
      Game game;
      if (gd_game_builtin(file.c_str(), game.out()) == GD_OK) {
        require(gd_game_print(game.get(), text.out()));
      } else {
        Graph graph;
        if (gd_graph_builtin(file.c_str(), graph.out()) != GD_OK) throw Failure{"unknown builtin '" + file + "'"};
        require(gd_graph_print(graph.get(), text.out()));
      }
      std::cout << text.str();
      return kAffirmative;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kFailure;
  }
  return kFailure;
}
