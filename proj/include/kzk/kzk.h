/*
 * C interface to the kzk library: N-homogeneous algebra presentations over
 * exact fields, their Koszul and Gorenstein checks, and semi-cross products.
 *
 * Handles are opaque. Every call returns a kzk_status; on failure the message
 * is available from kzk_last_error() on the calling thread. Strings handed
 * out by the library (rendered files, JSON reports) must be released with
 * kzk_string_free(). Report pointers may be NULL when the caller does not
 * want the JSON.
 */
#ifndef KZK_KZK_H
#define KZK_KZK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(KZK_BUILDING)
#define KZK_API __declspec(dllexport)
#else
#define KZK_API __declspec(dllimport)
#endif
#else
#define KZK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kzk_presentation kzk_presentation;

typedef enum kzk_status {
  KZK_OK = 0,
  KZK_ERR_SYNTAX = 1,
  KZK_ERR_INHOMOGENEOUS = 2,
  KZK_ERR_UNSUPPORTED_DEGREE = 3,
  KZK_ERR_INVALID_PRESENTATION = 4,
  KZK_ERR_UNKNOWN_GENERATOR = 5,
  KZK_ERR_NOT_INVERTIBLE = 6,
  KZK_ERR_RELATIONS_NOT_PRESERVED = 7,
  KZK_ERR_RESOURCE = 8,
  KZK_ERR_DIMENSION = 9,
  KZK_ERR_MEMBERSHIP = 10,
  KZK_ERR_INVALID_ARGUMENT = 11,
  KZK_ERR_INTERNAL = 12,
  KZK_ERR_IO = 13,
  KZK_ERR_NO_AUTOMORPHISM = 14
} kzk_status;

KZK_API const char* kzk_status_name(kzk_status status);
/* Message of the last failed call on this thread; "" after a success. */
KZK_API const char* kzk_last_error(void);
KZK_API void kzk_string_free(char* s);

/* field_override is "Q", "F 7", "F7" or NULL to keep the file's field line. */
KZK_API kzk_status kzk_parse(const char* text, const char* field_override, kzk_presentation** out);
KZK_API kzk_status kzk_parse_file(const char* path, const char* field_override, kzk_presentation** out);
KZK_API void kzk_free(kzk_presentation* p);

/* Largest ambient dimension dim(E)^n any computation may touch (default 2^20). */
KZK_API kzk_status kzk_set_cap(kzk_presentation* p, uint64_t cap);

/* Canonical presentation file text, including the aut line when present. */
KZK_API kzk_status kzk_render(const kzk_presentation* p, char** text);
/* JSON object: field, gens, dim_e, degree, dim_r, relations, automorphism, cap. */
KZK_API kzk_status kzk_summary(const kzk_presentation* p, char** json);
KZK_API kzk_status kzk_info(const kzk_presentation* p, size_t* dim_e, size_t* degree, size_t* dim_r,
                            int* has_automorphism);

/* dims must hold cutoff + 1 entries; it may be NULL. */
KZK_API kzk_status kzk_hilbert(const kzk_presentation* p, size_t cutoff, size_t* dims, char** json);

/* *finite = 0 when no vanishing A^{!*}_i appears before the cap, or when the
 * dimension is known to be infinite (the JSON verdict tells the two apart). */
KZK_API kzk_status kzk_global_dimension(const kzk_presentation* p, int* finite, size_t* dimension, char** json);

/* Semi-cross product by the presentation's automorphism. The result keeps the
 * same automorphism. */
KZK_API kzk_status kzk_semicross(const kzk_presentation* p, kzk_presentation** out, char** json);

/* The boolean outputs below are 1 for a pass / positive verdict, 0 otherwise. */
KZK_API kzk_status kzk_check_koszul(const kzk_presentation* p, size_t cutoff, int* koszul, char** json);
KZK_API kzk_status kzk_poincare(const kzk_presentation* p, size_t cutoff, int* passed, char** json);
KZK_API kzk_status kzk_twist_iso(const kzk_presentation* p, size_t cutoff, int* passed, char** json);
/* *consistent = 0 on a NOT-Gorenstein verdict. With transfer != 0 the tables
 * of the semi-cross product are compared too, and a mismatch also clears it. */
KZK_API kzk_status kzk_gorenstein(const kzk_presentation* p, size_t cutoff, int transfer, int* consistent,
                                  char** json);
/* Degree of a homogeneous element written in the generators. */
KZK_API kzk_status kzk_element_degree(const kzk_presentation* p, const char* element, size_t* degree);
/* element is written in the generators, e.g. "x" or "x - y"; left != 0 tests
 * left multiplication instead of right. */
KZK_API kzk_status kzk_regularity(const kzk_presentation* p, const char* element, int left, size_t cutoff,
                                  int* regular, char** json);

#ifdef __cplusplus
}
#endif

#endif
