/* Copyright the wsnet authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * wsnet - web service composition network toolkit, C API.
 *
 * The library ingests service descriptions (WSDL 1.1 files or a JSON
 * corpus), scores parameter-name similarity with the Levenshtein, Jaro
 * and Jaro-Winkler metrics, builds directed interaction networks at a
 * match threshold, measures their topology, and sweeps the threshold to
 * trace how the topology evolves per metric.
 *
 * Conventions:
 *   - Every fallible function returns wsnet_status; WSNET_OK is 0.
 *   - On failure, wsnet_last_error() returns a message for the calling
 *     thread, valid until its next wsnet call.
 *   - Objects are opaque handles created into an out-parameter and
 *     released with the matching _free function (NULL-safe).
 *   - Strings are UTF-8. Returned const char* stay valid while the
 *     handle they came from is alive.
 */
#ifndef WSNET_H
#define WSNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WSNET_API __declspec(dllexport)
#else
#define WSNET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wsnet_status {
    WSNET_OK = 0,
    WSNET_ERR_USAGE = 1,       /* invalid argument, flag or configuration */
    WSNET_ERR_IO = 2,          /* file system failure */
    WSNET_ERR_PARSE = 3,       /* malformed input document */
    WSNET_ERR_SCHEMA = 4,      /* well-formed input violating structure */
    WSNET_ERR_EMPTY_INPUT = 5, /* nothing to work on */
    WSNET_ERR_MISMATCH = 6,    /* incompatible operands */
    WSNET_ERR_UNDEFINED = 7,   /* result undefined for this input */
    WSNET_ERR_INTERNAL = 8
} wsnet_status;

WSNET_API const char* wsnet_status_name(wsnet_status status);

/* Message describing the calling thread's most recent failure. */
WSNET_API const char* wsnet_last_error(void);

WSNET_API const char* wsnet_version(void);

/* ------------------------------------------------------------------ */
/* Similarity metrics                                                  */

typedef enum wsnet_metric_kind {
    WSNET_METRIC_LEVENSHTEIN = 0,
    WSNET_METRIC_JARO = 1,
    WSNET_METRIC_JARO_WINKLER = 2
} wsnet_metric_kind;

typedef struct wsnet_metric_params {
    wsnet_metric_kind kind;
    double jw_prefix_scale; /* Jaro-Winkler p, in [0, 0.25]           */
    int jw_max_prefix;      /* Jaro-Winkler prefix cap, >= 0;         */
                            /* p * cap must not exceed 1              */
} wsnet_metric_params;

/* {kind, 0.1, 4} - the defaults used throughout. */
WSNET_API wsnet_metric_params wsnet_metric_defaults(wsnet_metric_kind kind);

/* "levenshtein", "jaro" or "jaro-winkler". */
WSNET_API wsnet_status wsnet_metric_from_name(const char* name, wsnet_metric_kind* out);
WSNET_API const char* wsnet_metric_name(wsnet_metric_kind kind);

/* Unit-cost edit distance over Unicode scalar values. */
WSNET_API wsnet_status wsnet_levenshtein_distance(const char* s1, const char* s2, int64_t* out);

/* Normalized score in [0, 1]; 1 means exact match. */
WSNET_API wsnet_status wsnet_similarity(const wsnet_metric_params* params, const char* s1,
                                        const char* s2, double* out);

/* 1 iff similarity(s1, s2) >= threshold (inclusive). */
WSNET_API wsnet_status wsnet_match(const wsnet_metric_params* params, double threshold,
                                   const char* s1, const char* s2, int* out);

/* ------------------------------------------------------------------ */
/* Corpus                                                              */

typedef struct wsnet_corpus wsnet_corpus;

typedef enum wsnet_name_source {
    WSNET_NAME_SOURCE_ELEMENT = 0,  /* XSD element name when a part references
                                       one, else the part name (default) */
    WSNET_NAME_SOURCE_PART = 1,     /* always the part name */
    WSNET_NAME_SOURCE_QUALIFIED = 2 /* message name + "_" + element-rule name */
} wsnet_name_source;

typedef struct wsnet_load_options {
    wsnet_name_source name_source;
    int fold_case; /* lowercase ASCII letters during normalization */
    int strict;    /* reject unknown JSON corpus keys */
} wsnet_load_options;

WSNET_API wsnet_load_options wsnet_load_defaults(void);

/* Notified of non-fatal diagnostics (e.g. an operation without any
 * parameters). May be NULL. */
typedef void (*wsnet_warning_fn)(const char* message, void* user);

/* Per-file failure report for wsnet_corpus_load_wsdl_files. */
typedef void (*wsnet_file_error_fn)(const char* path, const char* message, void* user);

WSNET_API wsnet_status wsnet_corpus_load_json_file(const char* path,
                                                   const wsnet_load_options* options,
                                                   wsnet_warning_fn warn, void* user,
                                                   wsnet_corpus** out);

WSNET_API wsnet_status wsnet_corpus_load_json_text(const char* text,
                                                   const wsnet_load_options* options,
                                                   wsnet_warning_fn warn, void* user,
                                                   wsnet_corpus** out);

/* Loads WSDL documents; each file becomes one service whose id is the
 * file stem. With on_error set, files that fail to parse are reported
 * and skipped; otherwise the first failure aborts the load. */
WSNET_API wsnet_status wsnet_corpus_load_wsdl_files(const char* const* paths, size_t n_paths,
                                                    const wsnet_load_options* options,
                                                    wsnet_file_error_fn on_error,
                                                    wsnet_warning_fn warn, void* user,
                                                    wsnet_corpus** out);

/* Parses a single WSDL document held in memory. */
WSNET_API wsnet_status wsnet_corpus_load_wsdl_text(const char* text, const char* service_id,
                                                   const wsnet_load_options* options,
                                                   wsnet_warning_fn warn, void* user,
                                                   wsnet_corpus** out);

/* Writes the normalized JSON corpus format. */
WSNET_API wsnet_status wsnet_corpus_save_json(const wsnet_corpus* corpus, const char* path);

WSNET_API size_t wsnet_corpus_service_count(const wsnet_corpus* corpus);
WSNET_API size_t wsnet_corpus_operation_count(const wsnet_corpus* corpus);
WSNET_API size_t wsnet_corpus_vocabulary_size(const wsnet_corpus* corpus);
WSNET_API const char* wsnet_corpus_service_id(const wsnet_corpus* corpus, size_t index);
WSNET_API const char* wsnet_corpus_fingerprint(const wsnet_corpus* corpus);

WSNET_API void wsnet_corpus_free(wsnet_corpus* corpus);

/* ------------------------------------------------------------------ */
/* Interaction network                                                 */

typedef struct wsnet_network wsnet_network;

typedef struct wsnet_build_options {
    /* A service whose input set is empty would, by vacuous truth, accept
     * a link from every service; default 0 gives it no incoming links. */
    int vacuous_links;
    int jobs; /* worker threads; 0 picks the hardware concurrency */
} wsnet_build_options;

WSNET_API wsnet_build_options wsnet_build_defaults(void);

/* Link source -> target iff every input name of target matches some
 * output name of source at the threshold. No self-links. */
WSNET_API wsnet_status wsnet_network_build(const wsnet_corpus* corpus,
                                           const wsnet_metric_params* metric, double threshold,
                                           const wsnet_build_options* options,
                                           wsnet_network** out);

WSNET_API size_t wsnet_network_node_count(const wsnet_network* net);
WSNET_API size_t wsnet_network_link_count(const wsnet_network* net);
WSNET_API const char* wsnet_network_node_id(const wsnet_network* net, size_t index);

/* Fills source/target with the node ids of link `index`. */
WSNET_API wsnet_status wsnet_network_link(const wsnet_network* net, size_t index,
                                          const char** source, const char** target);

typedef enum wsnet_export_format {
    WSNET_EXPORT_DOT = 0,
    WSNET_EXPORT_GRAPHML = 1,
    WSNET_EXPORT_JSON = 2
} wsnet_export_format;

WSNET_API wsnet_status wsnet_network_export(const wsnet_network* net, wsnet_export_format format,
                                            const char* path);

WSNET_API void wsnet_network_free(wsnet_network* net);

/* ------------------------------------------------------------------ */
/* Topology                                                            */

/* One row of topology measures. Degree means total degree (in + out).
 * *_defined flags are 0 when the measure is undefined for the input
 * (too few nodes, zero variance, no reachable pair); the paired value
 * is then meaningless. */
typedef struct wsnet_property_record {
    wsnet_metric_kind metric;
    double threshold;
    int64_t n_nodes;
    int64_t n_links;
    int64_t min_degree;
    int64_t max_degree;
    double avg_degree; /* 2E/N */
    double density;    /* E/(N(N-1)) */
    int density_defined;
    double transitivity; /* undirected projection */
    int transitivity_defined;
    double degree_correlation; /* undirected projection, total degrees */
    int degree_correlation_defined;
    double avg_distance; /* directed, reachable ordered pairs only */
    int avg_distance_defined;
    int64_t n_isolated;
    int64_t n_similarities; /* filled by sweep records; else -1 */
} wsnet_property_record;

WSNET_API wsnet_status wsnet_network_properties(const wsnet_network* net, int jobs,
                                                wsnet_property_record* out);

/* ------------------------------------------------------------------ */
/* Similarity pair reports                                             */

typedef struct wsnet_match_report wsnet_match_report;
typedef struct wsnet_pair_list wsnet_pair_list;

/* All unordered pairs of distinct vocabulary names scoring at or above
 * the threshold where one side occurs as an output and the other as an
 * input. count_exact_co_occurrence additionally counts every name
 * occurring in both roles as a pair with itself (the only pairs that
 * can reach score 1). */
WSNET_API wsnet_status wsnet_match_report_compute(const wsnet_corpus* corpus,
                                                  const wsnet_metric_params* metric,
                                                  double threshold,
                                                  int count_exact_co_occurrence, int jobs,
                                                  wsnet_match_report** out);

WSNET_API size_t wsnet_match_report_count(const wsnet_match_report* report);
WSNET_API wsnet_status wsnet_match_report_get(const wsnet_match_report* report, size_t index,
                                              const char** name_a, const char** name_b,
                                              double* score);
/* Pairs already present at threshold 1 (the exact-match baseline). */
WSNET_API size_t wsnet_match_report_baseline_count(const wsnet_match_report* report);
/* Pairs beyond the baseline. */
WSNET_API size_t wsnet_match_report_additional_count(const wsnet_match_report* report);

/* The pairs the lower threshold adds: low minus high. Both reports must
 * share metric and counting mode, with low.threshold <= high.threshold. */
WSNET_API wsnet_status wsnet_match_report_diff(const wsnet_match_report* low,
                                               const wsnet_match_report* high,
                                               wsnet_pair_list** out);

WSNET_API size_t wsnet_pairs_count(const wsnet_pair_list* pairs);
WSNET_API wsnet_status wsnet_pairs_get(const wsnet_pair_list* pairs, size_t index,
                                       const char** name_a, const char** name_b, double* score);
WSNET_API void wsnet_pairs_free(wsnet_pair_list* pairs);

WSNET_API void wsnet_match_report_free(wsnet_match_report* report);

/* ------------------------------------------------------------------ */
/* Ground-truth labels and false-positive reporting                    */

typedef struct wsnet_labels wsnet_labels;

/* CSV with header name_a,name_b,label; label is "appropriate" or
 * "false_positive". Names are normalized on load. */
WSNET_API wsnet_status wsnet_labels_load_csv(const char* path, int fold_case, wsnet_labels** out);

WSNET_API size_t wsnet_labels_count(const wsnet_labels* labels);

/* 1 = false_positive, 0 = appropriate, -1 = not labeled. */
WSNET_API int wsnet_labels_lookup(const wsnet_labels* labels, const char* name_a,
                                  const char* name_b);

WSNET_API void wsnet_labels_free(wsnet_labels* labels);

typedef struct wsnet_fp_stats {
    int64_t n_retrieved;
    int64_t n_false_positive;
    double fp_percent; /* 100 * fp / labeled retrieved; with strict_labels
                          the unlabeled pairs count in the denominator */
    int fp_percent_defined;
    int64_t n_unlabeled;
} wsnet_fp_stats;

WSNET_API wsnet_status wsnet_fp_report(const wsnet_match_report* report,
                                       const wsnet_labels* labels, int strict_labels,
                                       wsnet_fp_stats* out);

/* ------------------------------------------------------------------ */
/* Threshold sweep                                                     */

typedef struct wsnet_sweep_result wsnet_sweep_result;

typedef void (*wsnet_progress_fn)(const char* stage, size_t done, size_t total, void* user);

typedef struct wsnet_sweep_config {
    const wsnet_metric_params* metrics; /* NULL: all three with defaults */
    size_t n_metrics;
    double t_start; /* grid start, default 0 */
    double t_end;   /* grid end, default 1 */
    double t_step;  /* grid step, default 0.01; (end-start)/step must be
                       an integer within 1e-9 */
    int count_exact_co_occurrence;
    int vacuous_links;
    int jobs;
    wsnet_progress_fn progress; /* may be NULL */
    void* user;
} wsnet_sweep_config;

WSNET_API wsnet_sweep_config wsnet_sweep_defaults(void);

/* One record per (metric, grid threshold): the network's topology plus
 * the retrieved-similarity count. Name-pair scores are computed once per
 * metric and shared across the grid. */
WSNET_API wsnet_status wsnet_sweep_run(const wsnet_corpus* corpus,
                                       const wsnet_sweep_config* config,
                                       wsnet_sweep_result** out);

WSNET_API size_t wsnet_sweep_record_count(const wsnet_sweep_result* result);
WSNET_API wsnet_status wsnet_sweep_record(const wsnet_sweep_result* result, size_t index,
                                          wsnet_property_record* out);

/* CSV with header metric,threshold,n_nodes,n_links,min_degree,max_degree,
 * avg_degree,density,transitivity,degree_correlation,avg_distance,
 * n_isolated,n_similarities; thresholds carry two decimals; undefined
 * values are empty cells. */
WSNET_API wsnet_status wsnet_sweep_write_csv(const wsnet_sweep_result* result, const char* path);

/* 100 * (avg_degree(t) - avg_degree(1)) / avg_degree(1). Returns
 * WSNET_ERR_UNDEFINED when avg_degree(1) is 0, WSNET_ERR_USAGE when the
 * sweep lacks the needed records. */
WSNET_API wsnet_status wsnet_sweep_proportional_variation(const wsnet_sweep_result* result,
                                                          wsnet_metric_kind metric,
                                                          double threshold, double* out);

/* Grid threshold maximizing |second difference| of avg_degree; sets
 * *no_inflection when the curve has no curvature at all. */
WSNET_API wsnet_status wsnet_sweep_find_inflection(const wsnet_sweep_result* result,
                                                   wsnet_metric_kind metric, double* threshold,
                                                   int* no_inflection);

WSNET_API void wsnet_sweep_free(wsnet_sweep_result* result);

/* ------------------------------------------------------------------ */
/* Charts                                                              */

/* Renders one property column of a sweep CSV as an SVG line chart;
 * unknown properties yield WSNET_ERR_USAGE with the valid names in the
 * error message. */
WSNET_API wsnet_status wsnet_chart_render(const char* csv_path, const char* property,
                                          const char* svg_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WSNET_H */
