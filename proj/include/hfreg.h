/* hfreg: pattern counting, (H,F)-coefficients, semi-blowups and regularity
 * checkers for k-partite graphs, behind a C ABI.
 *
 * All functions return a status code:
 *   0  regular / success
 *   1  irregular / suite failure (a witness or counterexample exists)
 *   2  undefined, vacuous, or no-witness-found
 *   3+ errors (see HFREG_ERR_*); hfreg_last_error() describes the failure.
 *
 * Output strings (char**) are heap-allocated; release them with
 * hfreg_free_string.  Handles are opaque; release them with the matching
 * *_free function.  hfreg_last_error() is thread-local.
 */
#ifndef HFREG_H
#define HFREG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HFREG_OK 0
#define HFREG_IRREGULAR 1
#define HFREG_UNDEFINED 2
#define HFREG_ERR_PARSE 3
#define HFREG_ERR_INVALID 4
#define HFREG_ERR_BUDGET 5
#define HFREG_ERR_PRECONDITION 6
#define HFREG_ERR_IO 7
#define HFREG_ERR_INTERNAL 8

typedef struct hfreg_graph hfreg_graph;         /* k-partite graph */
typedef struct hfreg_pattern hfreg_pattern;     /* (H, F, e) pattern pair */
typedef struct hfreg_partition hfreg_partition; /* vertex partition */

const char* hfreg_last_error(void);
void hfreg_free_string(char* s);

/* --- graphs ---------------------------------------------------------- */
/* Graph file format: line 1 `k=<int>`, line 2 `classes s_1 ... s_k`,
 * line 3+ `edges (u,v) (u,v) ...` with dense 0-based vertex ids. */
int hfreg_graph_parse(const char* text, hfreg_graph** out);
int hfreg_graph_serialize(const hfreg_graph* g, char** out);
void hfreg_graph_free(hfreg_graph* g);

/* kind: complete | empty | matching | half_graph | random_bipartite |
 * random_kpartite.  `p` is a rational like "1/2" (may be NULL). */
int hfreg_generate(const char* kind, const int* sizes, int nsizes,
                   const char* p, uint64_t seed, hfreg_graph** out);

int hfreg_blowup(const hfreg_pattern* pp, const int* sizes, int nsizes,
                 hfreg_graph** out);
/* g0 must be bipartite; extra_sizes are the sizes of classes 3..k. */
int hfreg_semiblowup(const hfreg_pattern* pp, const hfreg_graph* g0,
                     const int* extra_sizes, int nsizes, hfreg_graph** out);
int hfreg_add_isolated(const hfreg_graph* g, const int* extra, int k,
                       hfreg_graph** out);

/* --- patterns and partitions ----------------------------------------- */
/* Pattern file: `k=<int>; H=<pairs>; F=<pairs>; e=(a,b)`, 1-based. */
int hfreg_pattern_parse(const char* text, hfreg_pattern** out);
int hfreg_pattern_serialize(const hfreg_pattern* pp, char** out);
void hfreg_pattern_free(hfreg_pattern* pp);

/* Partition file: one line per cluster, whitespace-separated vertex ids. */
int hfreg_partition_parse(const char* text, hfreg_partition** out);
int hfreg_partition_serialize(const hfreg_partition* p, char** out);
void hfreg_partition_free(hfreg_partition* p);

/* --- counting --------------------------------------------------------- */
/* which: 'H' or 'F'.  Decimal copy count (unlabeled convention). */
int hfreg_count(const hfreg_pattern* pp, char which, const hfreg_graph* g,
                int workers, char** out_count);
/* Exact rational n_H/n_F; HFREG_UNDEFINED when n_F = 0. */
int hfreg_coeff(const hfreg_pattern* pp, const hfreg_graph* g, char** out);
/* Exact edge density of a bipartite graph. */
int hfreg_density(const hfreg_graph* g, char** out);

/* --- regularity checks ------------------------------------------------- */
/* notion: bipartite | hf | bipartite-partition | hf-partition.
 * mode: exact | sampled.  eps is a rational "p/q".  `pp` is required for the
 * hf notions, `partition` for the partition notions; pass NULL otherwise.
 * Returns HFREG_OK (regular), HFREG_IRREGULAR (witness in the JSON report),
 * or HFREG_UNDEFINED.  The JSON report is written to out_json. */
int hfreg_check(const hfreg_graph* g, const hfreg_pattern* pp,
                const hfreg_partition* partition, const char* notion,
                const char* eps, const char* mode, uint64_t seed,
                uint64_t samples, int workers, char** out_json);

/* Common refinement of the partition with classes {V_1, V_2} of g. */
int hfreg_refine(const hfreg_partition* p, const hfreg_graph* g,
                 char** out_partition);

/* Theorem-2 pipeline: builds the balanced semi-blowup of g0, checks that the
 * partition is eps-(H,F)-regular (skipped when trusted != 0), and evaluates
 * the side refinement against the eps^(1/4)·k^(2k) partition notion. */
int hfreg_reduce(const hfreg_pattern* pp, const hfreg_graph* g0,
                 const hfreg_partition* p, const char* eps, int trusted,
                 char** out_json);

/* Exhaustive minimum-partition-order search (|V| <= max_n). */
int hfreg_search_min(const hfreg_graph* g, const hfreg_pattern* pp,
                     const char* notion, const char* eps, int max_n,
                     char** out_json);

/* suites: lemma3 obs2 claim4 claim5 claim6 fact7 theorem2 sparse_obs. */
int hfreg_verify(const char* suite, int trials, uint64_t seed, char** out_json);

/* config: JSON text; reports are also written next to `output` when the
 * config names an output prefix. */
int hfreg_experiment(const char* config_json, char** out_json, char** out_csv);

/* twr(0)=1, twr(n)=2^twr(n-1); n <= 5. */
int hfreg_tower(int n, char** out_decimal);

#ifdef __cplusplus
}
#endif

#endif /* HFREG_H */
