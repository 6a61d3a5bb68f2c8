#ifndef BRAID3_H
#define BRAID3_H

/* C interface to the three-strand braid tools: parsing and normal forms,
 * geodesic tests, translation lengths, growth series, automaton export,
 * and ball construction in the Cayley graph.
 *
 * Conventions:
 *   - Every function that can fail returns a b3_status; results come back
 *     through out-parameters, which are written only on B3_OK.
 *   - char** outputs receive a NUL-terminated heap string owned by the
 *     caller; release it with b3_string_free.
 *   - b3_word values are opaque; release them with b3_word_free.
 *   - On failure, b3_last_error() describes the most recent error in the
 *     calling thread.
 *
 * Word syntax: letters a, b (generators) and A, B (inverses), with
 * optional grouping and powers, e.g. "aB", "a^3bA", "(aba)^-2".
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum b3_status {
  B3_OK = 0,
  B3_ERR_PARSE = 1,  /* malformed word text; position in b3_last_error */
  B3_ERR_DOMAIN = 2, /* valid input outside the supported range */
  B3_ERR_VERIFY = 3, /* an internal cross-check failed */
  B3_ERR_LIMIT = 4,  /* resource guard tripped (ball/table too large) */
  B3_ERR_ARG = 5     /* null pointer or unknown option string */
} b3_status;

typedef struct b3_word b3_word;

/* ---- words ---- */

b3_status b3_word_parse(const char* text, b3_word** out);
void b3_word_free(b3_word* w);

/* compressed != 0 requests run notation like "a^2B^3"; plain otherwise.
 * The empty word formats as the Greek letter epsilon (UTF-8). */
b3_status b3_word_format(const b3_word* w, int compressed, char** out);
b3_status b3_word_length(const b3_word* w, size_t* out);
b3_status b3_free_reduce(const b3_word* w, b3_word** out);

/* ---- geodesics and lengths ---- */

b3_status b3_is_geodesic(const b3_word* w, int* out);

/* *geodesic as in b3_is_geodesic; *out describes the verdict, naming the
 * obstruction and letter positions when the word is not geodesic. */
b3_status b3_geodesic_report(const b3_word* w, int* geodesic, char** out);

/* Canonical spelling: least representative of the same element under
 * length-then-lexicographic order with a < A < b < B. */
b3_status b3_shortlex(const b3_word* w, b3_word** out);

/* form is one of "cf", "rg", "sl", "tf"; the result is rendered in run
 * notation, pair forms as "prefix(aba)^k". */
b3_status b3_normal_form(const b3_word* w, const char* form, char** out);

b3_status b3_equal(const b3_word* u, const b3_word* w, int* out);

/* Length of the element (its geodesic spelling), and the stable length
 * per factor under high powers (minimal length over the conjugacy
 * class). */
b3_status b3_element_length(const b3_word* w, long* out);
b3_status b3_translation_length(const b3_word* w, long* out);

/* ---- growth series ---- */

/* kind: "geodesic" (words) or "spherical" (elements).
 * source: "formula", "dfa", or "bruteforce".
 * Writes coefficients for lengths 0..terms, one per line. */
b3_status b3_growth_series(const char* kind, const char* source, int terms,
                           char** out);

/* The closed form for the kind, e.g. "(...) / (...)". */
b3_status b3_growth_formula(const char* kind, char** out);

/* Expands all three sources to the given length and compares.  *agree is
 * 1 when everything matches; *report summarizes per kind. */
b3_status b3_growth_verify(int terms, int* agree, char** report);

/* ---- automata ---- */

/* language: "geodesic" or "shortlex"; format: "dot" or "json".  The JSON
 * object is {states, start, accepting, transitions, sink} with a total
 * transition table over an explicit sink state. */
b3_status b3_fsa_export(const char* language, const char* format, char** out);

/* ---- Cayley graph balls ---- */

/* Graphviz text of the radius-R ball: one node per element, labelled by
 * its coordinate pair, arrows along the two positive generators. */
b3_status b3_cayley_ball_dot(int radius, char** out);

/* CSV "n,count" rows: elements per distance 0..radius. */
b3_status b3_cayley_ball_counts(int radius, char** out);

/* ---- verification sweep ---- */

/* Runs every consistency check (exhaustive sweeps to max_len, distance
 * comparisons to radius).  *report gets one line per check; *all_passed
 * is 1 when the whole sweep is clean.  Returns B3_OK even when checks
 * fail; failures are data here, not call errors. */
b3_status b3_selftest(int max_len, int radius, char** report,
                      int* all_passed);

/* ---- memory and errors ---- */

void b3_string_free(char* s);

/* Message for the last failing call in this thread; empty if none. */
const char* b3_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* BRAID3_H */
