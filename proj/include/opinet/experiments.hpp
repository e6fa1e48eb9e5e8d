#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace opinet {

struct SweepConfig {
    std::uint32_t n = 1000;
    double gamma = 3.0;
    std::uint32_t k_in = 17;
    std::vector<double> p_values = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    std::vector<std::uint32_t> n_th_values = {2, 5, 10, 100};
    std::vector<double> r_targets = {-0.1, 0.0, 0.1};
    std::uint32_t replicates = 50;
    std::uint64_t master_seed = 1;
    std::uint64_t max_sweeps = 100'000;
    double rewire_tolerance = 0.005;
    std::uint64_t rewire_max_steps = 10'000'000;
};

// Flat key=value text, lists comma-separated, '#' comments. Unknown keys are
// rejected. Missing keys keep the defaults above.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

enum class CellStatus { ok, rewire_unconverged, generation_failed };

const char* to_string(CellStatus status);

struct ExperimentResult {
    std::uint64_t replicate_seed = 0;
    double r_target = 0.0;
    double r_achieved = 0.0;
    double p = 0.0;
    std::uint32_t n_th = 2;
    double s_bar = 0.0;
    std::uint64_t t_f_sweeps = 0;
    std::uint64_t t_f_picks = 0;
    bool absorbed = false;
    CellStatus status = CellStatus::ok;
};

// Runs every (r_target, n_th, p, replicate) cell. Each replicate derives its
// own seed from (master_seed, cell indices), so results are identical no
// matter how many worker threads execute them. threads = 0 picks the
// hardware count.
std::vector<ExperimentResult> run_sweep(const SweepConfig& config, unsigned threads = 1);

void write_results_csv(std::ostream& out, std::span<const ExperimentResult> results);
std::vector<ExperimentResult> read_results_csv(std::istream& in);
std::vector<ExperimentResult> read_results_csv_file(const std::string& path);

enum class GroupField { r_target, n_th, p };

// Parses a comma-separated list like "r_target,n_th,p".
std::vector<GroupField> parse_group_fields(const std::string& spec);

struct SummaryStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

struct SummaryRow {
    std::vector<double> key; // group field values, in group-by order
    std::uint64_t count = 0;
    SummaryStats s_bar;
    SummaryStats t_f_sweeps;
    double consensus_rate = 0.0; // fraction with s_bar <= band or >= 1 - band
};

// Quantile by linear interpolation between order statistics (h = (n-1)q).
double quantile(std::span<const double> sorted_values, double q);

// Groups rows by the requested fields, sorted by key. Rows flagged
// generation_failed carry no observables and are excluded.
std::vector<SummaryRow> summarize(std::span<const ExperimentResult> results,
                                  std::span<const GroupField> group_by,
                                  double consensus_band = 0.1);

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows,
                       std::span<const GroupField> group_by);

} // namespace opinet
