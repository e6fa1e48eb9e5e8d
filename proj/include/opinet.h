/* opinet — C API for the opinion-dynamics network toolkit.
 *
 * All functions return OPINET_OK on success. On failure they return a status
 * code and leave a human-readable message in opinet_last_error() (per
 * thread). Graph handles are opaque; every handle returned through an
 * out-parameter must be released with opinet_graph_free().
 */
#ifndef OPINET_H
#define OPINET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct opinet_graph opinet_graph;

typedef enum opinet_status {
    OPINET_OK = 0,
    OPINET_ERR_INVALID_ARGUMENT = 1,
    OPINET_ERR_DEGENERATE_DEGREES = 2,
    OPINET_ERR_INFEASIBLE_SEQUENCE = 3,
    OPINET_ERR_STUB_MISMATCH = 4,
    OPINET_ERR_MATCHING_STUCK = 5,
    OPINET_ERR_TARGET_UNREACHABLE = 6,
    OPINET_ERR_INVALID_LEVELS = 7,
    OPINET_ERR_INVALID_PROBABILITY = 8,
    OPINET_ERR_NO_IN_NEIGHBORS = 9,
    OPINET_ERR_EMPTY_STATE = 10,
    OPINET_ERR_EMPTY_INPUT = 11,
    OPINET_ERR_DUPLICATE_ID = 12,
    OPINET_ERR_MALFORMED_RECORD = 13,
    OPINET_ERR_INSUFFICIENT_SUPPORT = 14,
    OPINET_ERR_TOO_FEW_RECORDS = 15,
    OPINET_ERR_IO = 16,
    OPINET_ERR_INTERNAL = 17
} opinet_status;

/* Message from the most recent failing call on this thread. */
const char* opinet_last_error(void);
const char* opinet_status_name(opinet_status status);

/* ---- graphs ------------------------------------------------------------ */

/* Edge-list CSV with header `source,target,weight`. */
opinet_status opinet_graph_read_csv(const char* path, opinet_graph** out_graph);
opinet_status opinet_graph_write_csv(const opinet_graph* graph, const char* path);
void opinet_graph_free(opinet_graph* graph);

uint32_t opinet_graph_node_count(const opinet_graph* graph);
uint64_t opinet_graph_total_weight(const opinet_graph* graph);

opinet_status opinet_graph_assortativity(const opinet_graph* graph, double* out_r);

/* direction: 0 = in, 1 = out. out_degrees must hold node_count entries. */
opinet_status opinet_graph_degree_sequence(const opinet_graph* graph, int direction,
                                           uint64_t* out_degrees, size_t capacity);

/* ---- generation --------------------------------------------------------- */

/* Configuration-model graph: power-law out-degrees with the given exponent,
 * constant in-degree k_in. */
opinet_status opinet_generate(uint32_t n, double gamma, uint32_t k_in, uint64_t seed,
                              opinet_graph** out_graph);

/* ---- rewiring ----------------------------------------------------------- */

typedef struct opinet_rewire_params {
    double r_target;
    double tolerance;
    uint64_t max_steps;
    uint64_t seed;
} opinet_rewire_params;

typedef struct opinet_rewire_report {
    double achieved_r;
    uint64_t steps_used;
    int converged;
} opinet_rewire_report;

/* Degree-preserving rewiring toward r_target. On
 * OPINET_ERR_TARGET_UNREACHABLE the best-effort graph and report are still
 * returned. */
opinet_status opinet_rewire(const opinet_graph* graph, const opinet_rewire_params* params,
                            opinet_graph** out_graph, opinet_rewire_report* out_report);

/* ---- opinion dynamics --------------------------------------------------- */

typedef struct opinet_sim_params {
    double p;          /* Bernoulli probability of initial opinion 1 */
    uint32_t n_th;     /* threshold level count, >= 2 */
    uint64_t seed;
    uint64_t max_sweeps;
} opinet_sim_params;

typedef struct opinet_fixation_record {
    uint64_t t_f_sweeps;
    uint64_t t_f_picks;
    double s_bar;
    int absorbed;
} opinet_fixation_record;

opinet_status opinet_simulate(const opinet_graph* graph, const opinet_sim_params* params,
                              opinet_fixation_record* out_record);

/* ---- experiment harness ------------------------------------------------- */

/* Runs the sweep described by a key=value config file and writes the result
 * rows as CSV. threads = 0 picks the hardware thread count; the output is
 * identical for any thread count. */
opinet_status opinet_sweep_run(const char* config_path, const char* out_csv_path,
                               unsigned threads);

/* group_by: comma-separated subset of r_target,n_th,p. */
opinet_status opinet_summarize(const char* results_csv_path, const char* group_by,
                               double consensus_band, const char* out_csv_path);

/* ---- cascade ingestion -------------------------------------------------- */

/* Builds the influence network from a JSON Lines conversation dump. Pass a
 * non-NULL authors_csv_path to also write the node-id -> author map. */
opinet_status opinet_ingest(const char* jsonl_path, const char* authors_csv_path,
                            opinet_graph** out_graph);

typedef struct opinet_powerlaw_fit {
    double gamma_hat;
    double r_squared;
} opinet_powerlaw_fit;

opinet_status opinet_fit_degrees(const opinet_graph* graph, int direction,
                                 opinet_powerlaw_fit* out_fit);

/* Per-bin mean polarity for the top_cascades largest cascades, written as
 * CSV (root_id,n_records,bin,mean_polarity). NULL out_csv_path = stdout.
 * Cascades with fewer polarity records than bins are skipped with a warning
 * on stderr. */
opinet_status opinet_bin_polarity(const char* jsonl_path, uint32_t n_bins,
                                  uint32_t top_cascades, const char* out_csv_path);

#ifdef __cplusplus
}
#endif

#endif /* OPINET_H */
