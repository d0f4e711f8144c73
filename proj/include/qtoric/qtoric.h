/* C interface to the quasitoric cohomology engine.
 *
 * Every function returning qt_status leaves a message for qt_last_error()
 * on failure. Strings handed out through char** parameters are owned by
 * the caller and must be released with qt_string_free. All functions are
 * safe to call from several threads as long as no handle is freed while
 * in use.
 */
#ifndef QTORIC_QTORIC_H
#define QTORIC_QTORIC_H

#include <stdint.h>

#if defined(_WIN32)
#define QT_API __declspec(dllexport)
#else
#define QT_API __attribute__((visibility("default")))
#endif

/* Seed used by the verification suites unless another is given. */
#define QT_DEFAULT_SEED 20230917ULL

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qt_status {
  QT_OK = 0,
  QT_ERR_INVALID_ARGUMENT = 1,
  QT_ERR_INVALID_POLYTOPE = 2,
  QT_ERR_INVALID_MATRIX = 3,
  QT_ERR_CAPABILITY = 4, /* bound above a resource cap, unsupported shape */
  QT_ERR_TORSION = 5,
  QT_ERR_OVERFLOW = 6,
  QT_ERR_PARSE = 7,
  QT_ERR_INTERNAL = 8
} qt_status;

/* Cohomology ring of a quasitoric manifold, integral and mod 2, together
 * with its characteristic classes. */
typedef struct qt_ring qt_ring;

QT_API const char* qt_version(void);
/* Message of the last failure on the calling thread; never NULL. */
QT_API const char* qt_last_error(void);
QT_API void qt_string_free(char* s);

/* Star form (x1, y1, x2, y2, x3, y3) on the cube. */
QT_API qt_status qt_ring_from_star(const int64_t entries[6], qt_ring** out);
/* "x1 y1 x2 y2 x3 y3" */
QT_API qt_status qt_ring_from_star_text(const char* text, qt_ring** out);
/* chi1..chi11, gamma1..gamma7, lambda:s,t, colambda:s,t */
QT_API qt_status qt_ring_from_name(const char* name, qt_ring** out);
/* {"polytope":"cube"|{...},"rows":[[...],...]}. Cube matrices are brought
 * to star form; other polytopes use the full face-ring presentation. */
QT_API qt_status qt_ring_from_matrix_json(const char* json, qt_ring** out);
QT_API void qt_ring_free(qt_ring* ring);

/* Ranks, basis, structure constants, w2, p1 and, for cube rings, the star
 * form and the nil-square set of degree 2. */
QT_API qt_status qt_ring_dump_json(const qt_ring* ring, char** out);
/* Total Stiefel-Whitney and Pontryagin classes by degree. */
QT_API qt_status qt_ring_classes_json(const qt_ring* ring, char** out);

/* All 3x3 maps with entries in [-bound, bound] inducing an isomorphism
 * src -> dst, with their Jupp flags. jobs = 0 uses every core. The key of
 * the map list is "isomorphisms", or "automorphisms" when src == dst. */
QT_API qt_status qt_find_isomorphisms(const qt_ring* src, const qt_ring* dst, int bound, unsigned jobs,
                                      char** out);
/* matrix holds L row-major; rows are images of the source generators. */
QT_API qt_status qt_is_isomorphism(const qt_ring* src, const qt_ring* dst, const int64_t matrix[9], int* is_iso,
                                   int* jupp);

/* Orbit classes of cube star forms with entries in [-bound, bound]. */
QT_API qt_status qt_classify_cube(int bound, char** out);

/* Runs a verification suite: classification, cases, families, partition
 * or all. *all_pass is 1 when every verdict passes. */
QT_API qt_status qt_verify(const char* suite, int class_bound, int iso_bound, int samples, uint64_t seed,
                           unsigned jobs, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* QTORIC_QTORIC_H */
