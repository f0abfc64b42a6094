/* morsekit C API: opaque handles and error codes over the C++ core.
 *
 * Conventions:
 *  - every function returns an mk_status;
 *  - output strings are malloc'd by the library and must be released
 *    with mk_string_free;
 *  - on MK_INPUT_ERROR the *errmsg output (when present) carries a
 *    human-readable message, also to be freed with mk_string_free;
 *  - MK_OBSTRUCTION and MK_BUDGET still produce a JSON result: they
 *    signal "the mathematics said no" and "the search was truncated".
 */
#ifndef MORSEKIT_H
#define MORSEKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t mk_status;

#define MK_OK 0
#define MK_OBSTRUCTION 1  /* hypothesis failed / not collapsible / ...   */
#define MK_INPUT_ERROR 2  /* malformed input or precondition violation   */
#define MK_BUDGET 3       /* search budget exceeded; result is inexact   */
#define MK_INTERNAL 4     /* internal consistency failure                */

typedef struct mk_complex mk_complex;
typedef struct mk_field mk_field;

const char* mk_version(void);
void mk_string_free(char* s);

/* complexes */
mk_status mk_complex_from_text(const char* cplx_text, mk_complex** out,
                               char** errmsg);
mk_status mk_complex_from_catalog(const char* name, mk_complex** out,
                                  char** errmsg);
mk_status mk_complex_to_text(const mk_complex* k, char** out);
mk_status mk_complex_to_json(const mk_complex* k, char** out);
mk_status mk_complex_info_json(const mk_complex* k, char** out);
mk_status mk_complex_subdivide(const mk_complex* k, mk_complex** out,
                               char** errmsg);
void mk_complex_free(mk_complex* k);
mk_status mk_catalog_names(char** out); /* newline separated */

/* discrete vector fields (acyclic Hasse matchings) */
mk_status mk_field_from_text(const mk_complex* k, const char* field_text,
                             mk_field** out, char** errmsg);
mk_status mk_field_to_text(const mk_field* f, char** out);
void mk_field_free(mk_field* f);

/* analyses; all results are deterministic JSON on stdout-ready strings */
mk_status mk_homology_json(const mk_complex* k, char** json, char** errmsg);
mk_status mk_normalize_json(const mk_complex* k, const mk_field* f,
                            char** mf_text, char** json, char** errmsg);
mk_status mk_nkf_json(const mk_complex* k, const mk_field* f, char** json,
                      char** errmsg);
mk_status mk_collapse_json(const mk_complex* k, uint64_t budget, char** json,
                           char** errmsg);
mk_status mk_optimal_json(const mk_complex* k, uint64_t budget, char** json,
                          char** errmsg);
mk_status mk_nk_json(const mk_complex* k, uint64_t budget, int jobs,
                     char** json, char** errmsg);
mk_status mk_plprobe_json(const mk_complex* k, int depth, uint64_t budget,
                          int jobs, char** json, char** errmsg);
mk_status mk_morse_complex_json(const mk_complex* k, const mk_field* f,
                                char** json, char** errmsg);
mk_status mk_hall_json(const mk_complex* k, const mk_field* f, char** json,
                       char** errmsg);
mk_status mk_certify_json(const mk_complex* k, const mk_field* f, char** json,
                          char** errmsg);
mk_status mk_export_dot(const mk_complex* k, const mk_field* f, char** dot,
                        char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* MORSEKIT_H */
