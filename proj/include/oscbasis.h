#ifndef OSCBASIS_H
#define OSCBASIS_H

/* C interface to the oscillating-curve symplectic basis library.
 *
 * A manifold handle wraps a validated ideal triangulation together with the
 * train track, curve basis, and matrix data, computed lazily. All emitters
 * produce JSON or CSV text; returned strings are heap-allocated and must be
 * released with osc_string_free. Functions return OSC_OK on success; on
 * failure the handle's last-error message is set.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define OSC_OK 0
#define OSC_ERR_INPUT 1    /* invalid input data */
#define OSC_ERR_INTERNAL 2 /* internal invariant failure */

typedef struct osc_manifold osc_manifold;

/* Load a triangulation from a file. Files ending in .json use the JSON
 * mirror format; anything else is parsed as the line-oriented text format.
 * Returns NULL on failure and, if errbuf is non-NULL, copies a message. */
osc_manifold* osc_manifold_from_file(const char* path, char* errbuf, size_t errlen);

/* Load from an in-memory string; is_json selects the format. */
osc_manifold* osc_manifold_from_text(const char* text, int is_json, char* errbuf, size_t errlen);

void osc_manifold_free(osc_manifold* m);

/* Last error message recorded on this handle (empty string if none). */
const char* osc_last_error(const osc_manifold* m);

int osc_info_json(osc_manifold* m, char** out);
int osc_track_json(osc_manifold* m, char** out);
int osc_basis_json(osc_manifold* m, char** out);
int osc_nz_json(osc_manifold* m, char** out);
int osc_nz_csv(osc_manifold* m, char** out);
int osc_sy_json(osc_manifold* m, char** out);
int osc_sy_csv(osc_manifold* m, char** out);
int osc_solve_json(osc_manifold* m, char** out);

/* Runs the seeded property sweep; all_passed receives 1/0. */
int osc_check_json(osc_manifold* m, unsigned long seed, int samples, char** out, int* all_passed);

int osc_end_count(osc_manifold* m, int* out);
int osc_svg(osc_manifold* m, int end_id, char** out);

void osc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
