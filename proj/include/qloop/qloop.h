#ifndef QLOOP_H
#define QLOOP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QL_API __declspec(dllexport)
#else
#define QL_API __attribute__((visibility("default")))
#endif

typedef struct ql_table ql_table;
typedef struct ql_perm ql_perm;

typedef enum ql_status {
  QL_OK = 0,
  QL_ERR_PARSE = 1,
  QL_ERR_DOMAIN = 2,
  QL_ERR_STRUCTURE = 3,
  QL_ERR_CONTRACT = 4,
  QL_ERR_HYPOTHESIS = 5,
  QL_ERR_BUDGET = 6,
  QL_ERR_ARGUMENT = 7, /* null pointer or bad enum value */
  QL_ERR_IO = 8,
  QL_ERR_INTERNAL = 9
} ql_status;

typedef enum ql_verdict { QL_RELATED = 0, QL_UNRELATED = 1, QL_UNKNOWN = 2 } ql_verdict;

typedef enum ql_side { QL_LEFT = 0, QL_RIGHT = 1 } ql_side;

typedef enum ql_strategy { QL_TRIPLE_SEARCH = 0, QL_PRINCIPAL_ISOTOPES = 1 } ql_strategy;

/* Message for the last failing call on this thread; "" after success. */
QL_API const char* ql_last_error(void);
/* Strings returned through char** out-parameters are owned by the caller. */
QL_API void ql_string_free(char* s);

/* Tables */
QL_API ql_status ql_table_parse(const char* text, ql_table** out);
/* "catalog:<name>" or a file path. */
QL_API ql_status ql_table_load(const char* source, ql_table** out);
QL_API ql_status ql_table_catalog(const char* name, ql_table** out);
QL_API ql_status ql_catalog_names_json(char** out);
QL_API void ql_table_free(ql_table* t);
QL_API int ql_table_order(const ql_table* t);
QL_API ql_status ql_table_get(const ql_table* t, int x, int y, int* out);
QL_API ql_status ql_table_to_text(const ql_table* t, char** out);
QL_API ql_status ql_table_to_json(const ql_table* t, char** out);
/* Bordered Cayley table for terminals. */
QL_API ql_status ql_table_render(const ql_table* t, const char* symbol, char** out);
/* Latin flag, commutativity, one-sided identities, inverses, translation sets. */
QL_API ql_status ql_table_describe_json(const ql_table* t, char** out);

/* Identities. family is one of "lc", "rc", "c", "all". */
QL_API ql_status ql_identities_json(const ql_table* t, const char* family, char** out);
QL_API ql_status ql_identity_holds(const ql_table* t, const char* identity, int* holds);
QL_API ql_status ql_classify_json(const ql_table* t, char** out);

/* Permutations: cycle notation "(1 5 2)(3 4)" or images "5 4 6 2 1 3". */
QL_API ql_status ql_perm_parse(const char* text, int degree, ql_perm** out);
QL_API void ql_perm_free(ql_perm* p);
QL_API ql_status ql_perm_to_string(const ql_perm* p, char** out);

/* Transforms */
QL_API ql_status ql_isotope(const ql_table* t, const ql_perm* a, const ql_perm* b, const ql_perm* c, ql_table** out);
QL_API ql_status ql_principal_isotope(const ql_table* t, int f, int g, ql_table** out);
QL_API ql_status ql_derivative(const ql_table* t, ql_side side, int a, ql_table** out);
QL_API ql_status ql_parastrophe(const ql_table* t, ql_table** out);

/* Morphisms. budget 0 selects the default node budget. The JSON document
   carries the verdict, the witness if any, and the node count. */
QL_API ql_status ql_isomorphic(const ql_table* t1, const ql_table* t2, uint64_t budget, ql_verdict* verdict,
                               char** json);
QL_API ql_status ql_isotopic(const ql_table* t1, const ql_table* t2, uint64_t budget, ql_strategy strategy,
                             ql_verdict* verdict, char** json);

/* Structure */
QL_API ql_status ql_center_json(const ql_table* t, char** out);
QL_API ql_status ql_rank_json(const ql_table* t, char** out);

/* Full claim-check report as a JSON array. all_passed is 0 if any check was refuted. */
QL_API ql_status ql_verify_claims_json(uint64_t seed, int max_order, int* all_passed, char** out);
/* Re-runs a serialized witness; reproduces is 1 when it still stands. */
QL_API ql_status ql_replay_witness(const char* witness_json, int* reproduces);

#ifdef __cplusplus
}
#endif

#endif
