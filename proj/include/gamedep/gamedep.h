/*
 * gamedep C API.
 *
 * Opaque handles, integer status codes, text in and out. Every function
 * returns GD_OK on success; on failure gd_last_error() describes the
 * problem for the calling thread. Strings returned through `char**` out
 * parameters are owned by the caller and released with gd_string_free().
 */
#ifndef GAMEDEP_GAMEDEP_H
#define GAMEDEP_GAMEDEP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GAMEDEP_BUILDING)
#    define GD_API __declspec(dllexport)
#  else
#    define GD_API __declspec(dllimport)
#  endif
#else
#  define GD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gd_status {
  GD_OK = 0,
  GD_ERR_ARGUMENT = 1, /* null pointer or invalid option */
  GD_ERR_INPUT = 2,
  GD_ERR_PARSE = 3,
  GD_ERR_SCOPE = 4,
  GD_ERR_LOCALITY = 5,
  GD_ERR_RESOURCE = 6,
  GD_ERR_INTERNAL = 7
} gd_status;

typedef enum gd_search_mode { GD_SEARCH_SYSTEMATIC = 0, GD_SEARCH_RANDOM = 1 } gd_search_mode;

typedef struct gd_graph gd_graph;
typedef struct gd_game gd_game;

typedef struct gd_search_bounds {
  uint32_t max_strategies;
  const char* payoff_values; /* comma-separated rationals, e.g. "0,1,1/2" */
  uint64_t max_profiles;
  uint64_t seed;
  gd_search_mode mode;
  uint64_t sample_count;
} gd_search_bounds;

GD_API const char* gd_version(void);
GD_API const char* gd_last_error(void);
GD_API const char* gd_status_name(gd_status status);
GD_API void gd_string_free(char* text);

/* Graphs */
GD_API gd_status gd_graph_parse(const char* text, gd_graph** out);
GD_API gd_status gd_graph_builtin(const char* name, gd_graph** out);
GD_API void gd_graph_free(gd_graph* graph);
GD_API gd_status gd_graph_print(const gd_graph* graph, char** out_text);
GD_API size_t gd_graph_vertex_count(const gd_graph* graph);

/* Games. The equilibrium set is computed on first use and cached. */
GD_API gd_status gd_game_parse(const char* text, gd_game** out);
GD_API gd_status gd_game_builtin(const char* name, gd_game** out);
GD_API void gd_game_free(gd_game* game);
GD_API gd_status gd_game_print(const gd_game* game, char** out_text);
GD_API gd_status gd_game_graph(const gd_game* game, gd_graph** out);
/* Newline-separated warnings (may be empty). */
GD_API gd_status gd_game_validate(const gd_game* game, char** out_warnings, size_t* out_count);
/* One `p1=s1 p2=s2 ...` line per equilibrium, canonical order. */
GD_API gd_status gd_game_equilibria(gd_game* game, char** out_text, size_t* out_count);
GD_API gd_status gd_game_check(gd_game* game, const char* formula, int* out_holds);

/* Prover. `assumptions` holds `count` atoms such as "a |> d". */
GD_API gd_status gd_prove(const gd_graph* graph, const char* const* assumptions, size_t count, const char* goal,
                          int* out_derivable, char** out_derivation);
/* With count == 0 and assumptions == NULL, Hypothesis steps are accepted as
 * open assumptions and listed in *out_report. */
GD_API gd_status gd_derivation_check(const gd_graph* graph, const char* const* assumptions, size_t count,
                                     const char* derivation, int* out_valid, char** out_report);

/* Search */
GD_API void gd_search_bounds_init(gd_search_bounds* bounds);
GD_API gd_status gd_refute(const gd_graph* graph, const char* formula, const gd_search_bounds* bounds,
                           int* out_found, char** out_game_text, uint64_t* out_examined, int* out_exhausted);
GD_API gd_status gd_fuzz_soundness(const gd_graph* graph, const char* const* assumptions, size_t count,
                                   const gd_search_bounds* bounds, uint64_t* out_violations, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* GAMEDEP_GAMEDEP_H */
