#include "gamedep/gamedep.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "gamedep/error.hpp"
#include "gamedep/parser.hpp"
#include "gamedep/prover.hpp"
#include "gamedep/search.hpp"
#include "gamedep/semantics.hpp"

struct gd_graph {
  gamedep::DependencyGraph graph;
};

struct gd_game {
  gamedep::Game game;
  std::optional<gamedep::EquilibriumSet> equilibria;

  const gamedep::EquilibriumSet& ne() {
    if (!equilibria) equilibria = gamedep::enumerate_equilibria(game);
    return *equilibria;
  }
};

namespace {

thread_local std::string last_error;

gd_status status_of(gamedep::ErrorKind kind) {
  switch (kind) {
    case gamedep::ErrorKind::Input: return GD_ERR_INPUT;
    case gamedep::ErrorKind::Parse: return GD_ERR_PARSE;
    case gamedep::ErrorKind::Scope: return GD_ERR_SCOPE;
    case gamedep::ErrorKind::Locality: return GD_ERR_LOCALITY;
    case gamedep::ErrorKind::Resource: return GD_ERR_RESOURCE;
  }
  return GD_ERR_INTERNAL;
}

template <class F>
gd_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return GD_OK;
  } catch (const gamedep::Error& e) {
    last_error = std::string(gamedep::to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GD_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return GD_ERR_INTERNAL;
  }
}

gd_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return GD_ERR_ARGUMENT;
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

gamedep::Hypotheses read_assumptions(const gamedep::DependencyGraph& graph, const char* const* atoms,
                                     std::size_t count) {
  gamedep::Hypotheses hyps;
  for (std::size_t i = 0; i < count; ++i) {
    if (atoms[i] == nullptr) throw gamedep::Error(gamedep::ErrorKind::Input, "null assumption");
    hyps.push_back(gamedep::parse_atom(atoms[i], graph));
  }
  return hyps;
}

gamedep::SearchBounds read_bounds(const gd_search_bounds* in) {
  gamedep::SearchBounds out;
  if (in == nullptr) return out;
  out.max_strategies = in->max_strategies;
  out.max_profiles = in->max_profiles;
  out.seed = in->seed;
  out.sample_count = in->sample_count;
  out.mode = in->mode == GD_SEARCH_SYSTEMATIC ? gamedep::SearchMode::Systematic : gamedep::SearchMode::Random;
  if (in->payoff_values != nullptr) {
    out.payoff_values.clear();
    std::string_view list(in->payoff_values);
    std::size_t pos = 0;
    while (pos <= list.size()) {
      const std::size_t comma = std::min(list.find(',', pos), list.size());
      const auto value = gamedep::Rational::parse(list.substr(pos, comma - pos));
      if (!value) {
        throw gamedep::Error(gamedep::ErrorKind::Input,
                             "malformed payoff value '" + std::string(list.substr(pos, comma - pos)) + "'");
      }
      out.payoff_values.push_back(*value);
      pos = comma + 1;
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* gd_version(void) { return "1.0.0"; }

const char* gd_last_error(void) { return last_error.c_str(); }

const char* gd_status_name(gd_status status) {
  switch (status) {
    case GD_OK: return "ok";
    case GD_ERR_ARGUMENT: return "argument error";
    case GD_ERR_INPUT: return "input error";
    case GD_ERR_PARSE: return "parse error";
    case GD_ERR_SCOPE: return "scope error";
    case GD_ERR_LOCALITY: return "locality error";
    case GD_ERR_RESOURCE: return "resource error";
    case GD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gd_string_free(char* text) { std::free(text); }

gd_status gd_graph_parse(const char* text, gd_graph** out) {
  if (text == nullptr) return missing("text");
  if (out == nullptr) return missing("out");
  return guarded([&] { *out = new gd_graph{gamedep::parse_graph(text)}; });
}

gd_status gd_graph_builtin(const char* name, gd_graph** out) {
  if (name == nullptr) return missing("name");
  if (out == nullptr) return missing("out");
  return guarded([&] { *out = new gd_graph{gamedep::builtin_graph(name)}; });
}

void gd_graph_free(gd_graph* graph) { delete graph; }

gd_status gd_graph_print(const gd_graph* graph, char** out_text) {
  if (graph == nullptr) return missing("graph");
  if (out_text == nullptr) return missing("out_text");
  return guarded([&] { *out_text = duplicate(gamedep::print_graph(graph->graph)); });
}

size_t gd_graph_vertex_count(const gd_graph* graph) { return graph == nullptr ? 0 : graph->graph.size(); }

gd_status gd_game_parse(const char* text, gd_game** out) {
  if (text == nullptr) return missing("text");
  if (out == nullptr) return missing("out");
  return guarded([&] { *out = new gd_game{gamedep::parse_game(text), std::nullopt}; });
}

gd_status gd_game_builtin(const char* name, gd_game** out) {
  if (name == nullptr) return missing("name");
  if (out == nullptr) return missing("out");
  return guarded([&] { *out = new gd_game{gamedep::builtin_game(name), std::nullopt}; });
}

void gd_game_free(gd_game* game) { delete game; }

gd_status gd_game_print(const gd_game* game, char** out_text) {
  if (game == nullptr) return missing("game");
  if (out_text == nullptr) return missing("out_text");
  return guarded([&] { *out_text = duplicate(gamedep::print_game(game->game)); });
}

gd_status gd_game_graph(const gd_game* game, gd_graph** out) {
  if (game == nullptr) return missing("game");
  if (out == nullptr) return missing("out");
  return guarded([&] { *out = new gd_graph{game->game.graph()}; });
}

gd_status gd_game_validate(const gd_game* game, char** out_warnings, size_t* out_count) {
  if (game == nullptr) return missing("game");
  return guarded([&] {
    const auto warnings = gamedep::validate(game->game);
    std::string text;
    for (const auto& w : warnings) text += w + "\n";
    if (out_warnings != nullptr) *out_warnings = duplicate(text);
    if (out_count != nullptr) *out_count = warnings.size();
  });
}

gd_status gd_game_equilibria(gd_game* game, char** out_text, size_t* out_count) {
  if (game == nullptr) return missing("game");
  return guarded([&] {
    const auto& ne = game->ne();
    if (out_text != nullptr) {
      std::string text;
      for (const auto& s : ne) text += gamedep::print_profile(game->game, s) + "\n";
      *out_text = duplicate(text);
    }
    if (out_count != nullptr) *out_count = ne.size();
  });
}

gd_status gd_game_check(gd_game* game, const char* formula, int* out_holds) {
  if (game == nullptr) return missing("game");
  if (formula == nullptr) return missing("formula");
  if (out_holds == nullptr) return missing("out_holds");
  return guarded([&] {
    const auto f = gamedep::parse_formula(formula, game->game.graph());
    *out_holds = gamedep::holds(game->ne(), f) ? 1 : 0;
  });
}

gd_status gd_prove(const gd_graph* graph, const char* const* assumptions, size_t count, const char* goal,
                   int* out_derivable, char** out_derivation) {
  if (graph == nullptr) return missing("graph");
  if (goal == nullptr) return missing("goal");
  if (count != 0 && assumptions == nullptr) return missing("assumptions");
  if (out_derivable == nullptr) return missing("out_derivable");
  return guarded([&] {
    const auto hyps = read_assumptions(graph->graph, assumptions, count);
    const auto target = gamedep::parse_atom(goal, graph->graph);
    const auto tree = gamedep::derive_tree(graph->graph, hyps, target.lhs, target.rhs);
    *out_derivable = tree ? 1 : 0;
    if (out_derivation != nullptr) {
      *out_derivation = duplicate(tree ? gamedep::print_derivation(*tree, graph->graph) : std::string());
    }
  });
}

gd_status gd_derivation_check(const gd_graph* graph, const char* const* assumptions, size_t count,
                              const char* derivation, int* out_valid, char** out_report) {
  if (graph == nullptr) return missing("graph");
  if (derivation == nullptr) return missing("derivation");
  if (count != 0 && assumptions == nullptr) return missing("assumptions");
  if (out_valid == nullptr) return missing("out_valid");
  return guarded([&] {
    const auto& g = graph->graph;
    const auto d = gamedep::parse_derivation(derivation, g);
    const bool open = count == 0 && assumptions == nullptr;
    const auto result =
        open ? gamedep::check_derivation_open(g, d) : gamedep::check_derivation(g, read_assumptions(g, assumptions, count), d);
    *out_valid = result.valid ? 1 : 0;
    if (out_report != nullptr) {
      std::string text;
      if (result.valid) {
        text = "verified: " + gamedep::print_atom(d.conclusion(), g) + "\n";
        if (open) {
          for (const auto& h : result.assumed) text += "open assumption: " + gamedep::print_atom(h, g) + "\n";
        }
      } else {
        text = result.diagnostic + "\n";
      }
      *out_report = duplicate(text);
    }
  });
}

void gd_search_bounds_init(gd_search_bounds* bounds) {
  if (bounds == nullptr) return;
  const gamedep::SearchBounds defaults;
  bounds->max_strategies = defaults.max_strategies;
  bounds->payoff_values = "0,1";
  bounds->max_profiles = defaults.max_profiles;
  bounds->seed = defaults.seed;
  bounds->mode = defaults.mode == gamedep::SearchMode::Systematic ? GD_SEARCH_SYSTEMATIC : GD_SEARCH_RANDOM;
  bounds->sample_count = defaults.sample_count;
}

gd_status gd_refute(const gd_graph* graph, const char* formula, const gd_search_bounds* bounds, int* out_found,
                    char** out_game_text, uint64_t* out_examined, int* out_exhausted) {
  if (graph == nullptr) return missing("graph");
  if (formula == nullptr) return missing("formula");
  if (out_found == nullptr) return missing("out_found");
  return guarded([&] {
    const auto f = gamedep::parse_formula(formula, graph->graph);
    const auto outcome = gamedep::find_counterexample(graph->graph, f, read_bounds(bounds));
    *out_found = outcome.counterexample ? 1 : 0;
    if (out_game_text != nullptr) {
      *out_game_text = duplicate(outcome.counterexample ? gamedep::print_game(*outcome.counterexample) : std::string());
    }
    if (out_examined != nullptr) *out_examined = outcome.examined;
    if (out_exhausted != nullptr) *out_exhausted = outcome.exhausted ? 1 : 0;
  });
}

gd_status gd_fuzz_soundness(const gd_graph* graph, const char* const* assumptions, size_t count,
                            const gd_search_bounds* bounds, uint64_t* out_violations, char** out_report) {
  if (graph == nullptr) return missing("graph");
  if (count != 0 && assumptions == nullptr) return missing("assumptions");
  if (out_violations == nullptr) return missing("out_violations");
  return guarded([&] {
    const auto hyps = read_assumptions(graph->graph, assumptions, count);
    const auto report = gamedep::fuzz_soundness(graph->graph, hyps, read_bounds(bounds));
    *out_violations = report.violations;
    if (out_report != nullptr) *out_report = duplicate(report.str(graph->graph));
  });
}

}  // extern "C"
