#ifndef OMEGAFRAG_H
#define OMEGAFRAG_H

/* C interface of the omega-frag library. Every call returns an of_status; on failure
 * of_last_error() describes the problem (per thread). Strings handed out must be
 * released with of_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define OF_API __declspec(dllexport)
#else
#define OF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum of_status {
  OF_OK = 0,
  OF_SYNTAX = 1,
  OF_NULLABLE_OMEGA = 2,
  OF_BUDGET = 3,
  OF_INVALID_INPUT = 4,
  OF_PRECONDITION = 5,
  OF_TAIL_KIND = 6,
  OF_NOT_MEMBER = 7,
  OF_DEPTH = 8,
  OF_IO = 9,
  OF_INTERNAL = 10,
  OF_NULL_ARGUMENT = 11
} of_status;

typedef enum of_answer { OF_YES = 0, OF_NO = 1, OF_UNKNOWN = 2 } of_answer;

/* max_elements = 0 keeps the default cap (or OMEGA_FRAG_BUDGET when set). */
typedef struct of_options {
  size_t max_elements;
  int force;
} of_options;

typedef struct of_language of_language;

/* options may be NULL. */
OF_API of_status of_language_from_regex(const char* regex, const of_options* options, of_language** out);
OF_API of_status of_language_from_automaton_json(const char* json, const of_options* options, of_language** out);
OF_API of_status of_language_from_monoid_json(const char* json, const of_options* options, of_language** out);
OF_API void of_language_free(of_language* lang);

/* Monoid JSON with accepted pairs, idempotents and linked pairs. syntactic != 0 selects
 * the syntactic quotient, otherwise the recognizer the language was built from. */
OF_API of_status of_language_monoid_json(of_language* lang, int syntactic, char** out);
OF_API of_status of_language_automaton_json(const of_language* lang, char** out);

/* question: "alph-bool", "cantor-bool" or "bsigma2".
 * oracle: NULL or "unknown", "assume-yes", "evidence:K".
 * YES verdicts of alph-bool and bsigma2 are re-checked on lassos within the bounds. */
OF_API of_status of_decide(of_language* lang, const char* question, const char* oracle, size_t max_prefix,
                           size_t max_loop, of_answer* answer, char** verdict_json);

/* Builds the representation and compares it with the language on all lassos within the
 * bounds. drop_block >= 0 removes that block first (mutation testing). */
OF_API of_status of_verify(of_language* lang, size_t max_prefix, size_t max_loop, long drop_block, int* ok,
                           char** report_json);

/* Sigma_2 sentence of an infinite-tail monomial such as "[ab]* a [b]^inf". */
OF_API of_status of_monomial_formula(const char* monomial, char** out);

/* upword: "u(v)^w", a finite word, or "1". */
OF_API of_status of_membership(const of_language* lang, const char* upword, int* member);

OF_API const char* of_last_error(void);
OF_API void of_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
