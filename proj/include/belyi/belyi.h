/* C interface to the belyi library.
 *
 * Every handle is opaque. Functions returning belyi_status record a message
 * on the context when they fail; strings handed out through char** must be
 * released with belyi_string_free. */
#ifndef BELYI_BELYI_H
#define BELYI_BELYI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BELYI_BUILDING_LIBRARY)
#    define BELYI_API __declspec(dllexport)
#  else
#    define BELYI_API __declspec(dllimport)
#  endif
#else
#  define BELYI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum belyi_status {
  BELYI_OK = 0,
  BELYI_INVALID_ARGUMENT,
  BELYI_DEGREE_MISMATCH,
  BELYI_POINT_OUT_OF_RANGE,
  BELYI_SYNTAX,
  BELYI_BAD_TRIPLE,
  BELYI_MISPLACED_PRIM,
  BELYI_EMPTY,
  BELYI_BAD_WORD,
  BELYI_NOT_PRIME,
  BELYI_NON_CONVERGED,
  BELYI_CLUSTERED_ROOTS,
  BELYI_POINT_OFF_CURVE,
  BELYI_NEAR_BRANCH,
  BELYI_COLLISION,
  BELYI_STEP_UNDERFLOW,
  BELYI_MATCH_AMBIGUOUS,
  BELYI_NOT_BIJECTIVE,
  BELYI_NOT_BELYI,
  BELYI_NOT_CONNECTED,
  BELYI_CLEANNESS_REQUIRED,
  BELYI_EVIDENCE_INCOMPLETE,
  BELYI_INTERNAL
} belyi_status;

typedef struct belyi_context belyi_context;
typedef struct belyi_perm belyi_perm;
typedef struct belyi_map belyi_map;
typedef struct belyi_constellation belyi_constellation;

BELYI_API const char* belyi_version(void);
/* "SYNTAX", "BAD_TRIPLE", ...; "OK" for BELYI_OK. */
BELYI_API const char* belyi_status_name(belyi_status status);
BELYI_API void belyi_string_free(char* s);

/* ---- context: tracking configuration and the last error */
BELYI_API belyi_status belyi_context_create(belyi_context** out);
BELYI_API void belyi_context_destroy(belyi_context* ctx);
/* JSON object with any of newton_tol, max_newton_iters, initial_step,
 * min_step, match_tol, separation_factor, root_angle_offset. */
BELYI_API belyi_status belyi_context_set_config_json(belyi_context* ctx, const char* json);
BELYI_API belyi_status belyi_context_set_root_offset(belyi_context* ctx, double radians);
BELYI_API belyi_status belyi_context_config_json(belyi_context* ctx, char** out);
/* Borrowed; valid until the next call on ctx. Empty after success. */
BELYI_API const char* belyi_context_last_error(const belyi_context* ctx);
/* {"error":{"code":...,"message":...[,"position":n]}} or "" after success. */
BELYI_API const char* belyi_context_last_error_json(const belyi_context* ctx);

/* ---- permutations */
BELYI_API belyi_status belyi_perm_parse(belyi_context* ctx, const char* cycles, size_t degree,
                                        belyi_perm** out);
BELYI_API belyi_status belyi_perm_from_images(belyi_context* ctx, const uint32_t* images,
                                              size_t degree, belyi_perm** out);
BELYI_API void belyi_perm_destroy(belyi_perm* p);
BELYI_API size_t belyi_perm_degree(const belyi_perm* p);
BELYI_API belyi_status belyi_perm_apply(belyi_context* ctx, const belyi_perm* p, uint32_t point,
                                        uint32_t* out);
/* compose(p, q) applies p first, then q. */
BELYI_API belyi_status belyi_perm_compose(belyi_context* ctx, const belyi_perm* p,
                                          const belyi_perm* q, belyi_perm** out);
BELYI_API belyi_status belyi_perm_inverse(belyi_context* ctx, const belyi_perm* p,
                                          belyi_perm** out);
BELYI_API belyi_status belyi_perm_to_string(belyi_context* ctx, const belyi_perm* p,
                                            int include_fixed_points, char** out);
BELYI_API belyi_status belyi_perm_cycle_type(belyi_context* ctx, const belyi_perm* p, char** out);

/* ---- covering chains */
BELYI_API belyi_status belyi_map_parse(belyi_context* ctx, const char* text, belyi_map** out);
BELYI_API belyi_status belyi_map_full_chain(belyi_context* ctx, int i, int j, int k,
                                            belyi_map** out);
BELYI_API void belyi_map_destroy(belyi_map* m);
BELYI_API size_t belyi_map_degree(const belyi_map* m);
BELYI_API belyi_status belyi_map_to_string(belyi_context* ctx, const belyi_map* m, char** out);
BELYI_API belyi_status belyi_map_monodromy(belyi_context* ctx, const belyi_map* m,
                                           belyi_perm** g0, belyi_perm** g1);

/* ---- constellations */
BELYI_API belyi_status belyi_constellation_create(belyi_context* ctx, const belyi_perm* g0,
                                                  const belyi_perm* g1,
                                                  belyi_constellation** out);
BELYI_API void belyi_constellation_destroy(belyi_constellation* c);
BELYI_API belyi_status belyi_constellation_genus(belyi_context* ctx,
                                                 const belyi_constellation* c, int* out);
BELYI_API belyi_status belyi_constellation_isomorphic(belyi_context* ctx,
                                                      const belyi_constellation* a,
                                                      const belyi_constellation* b, int* out);
BELYI_API belyi_status belyi_constellation_json(belyi_context* ctx,
                                                const belyi_constellation* c, char** out);

/* ---- whole commands, each producing one JSON document */
BELYI_API belyi_status belyi_cmd_roots(belyi_context* ctx, char** json);
BELYI_API belyi_status belyi_cmd_monodromy(belyi_context* ctx, const char* map,
                                           int check_stability, char** json);
BELYI_API belyi_status belyi_cmd_dessin(belyi_context* ctx, int i, int j, int k, char** json);
BELYI_API belyi_status belyi_cmd_orbit(belyi_context* ctx, int i, int j, int k,
                                       const char* subgroup, char** json);
/* On an incomplete scan *json still receives the partial certificate and the
 * status is BELYI_EVIDENCE_INCOMPLETE. */
BELYI_API belyi_status belyi_cmd_evidence(belyi_context* ctx, uint64_t max_prime, char** json);
BELYI_API belyi_status belyi_cmd_a5(belyi_context* ctx, char** json);
/* samples_per_edge <= 0 selects the default. */
BELYI_API belyi_status belyi_cmd_render(belyi_context* ctx, const char* map,
                                        int samples_per_edge, char** svg, char** stats_json);

#ifdef __cplusplus
}
#endif

#endif
