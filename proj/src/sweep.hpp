#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bands.hpp"
#include "metrics.hpp"
#include "model.hpp"

namespace qspin {

enum class OutputFormat { Csv, Jsonl };

// One grid x ensemble evaluation plan. Built by parse_config from key=value
// text (last assignment wins, so flag overrides are appended after file
// content).
struct SweepConfig {
    ModelParams base;              // not yet materialized; seeds replaced per point
    std::optional<Axis> axis;      // required by run_sweep
    std::vector<double> values;    // non-empty, strictly monotone
    int ensemble = 1;              // >1 requires bond or field randomness
    std::vector<std::string> observables;  // bands spacing npc states census theory
    Representation rep = Representation::MeanField;
    int bins = 40;
    double s_max = 4.0;
    double threshold = 1e-6;
    std::uint64_t master_seed = 1;
    std::string output = "-";
    OutputFormat format = OutputFormat::Csv;
    int workers = 0;  // 0 = hardware concurrency
    bool overwrite = false;
    bool timing = false;  // adds a wall_ms column; off keeps output byte-stable
    std::string custom_matrix_path;
};

// One observable datum with a full parameter echo, self-describing enough to
// re-run the point that produced it.
struct ResultRow {
    std::string axis;
    double axis_value = 0.0;
    long grid_index = 0;
    long ensemble_index = 0;  // -1 marks rows pooled across the ensemble
    int L = 0;
    double omega = 0.0, omega0 = 0.0, nu = 0.0;
    std::string profile;
    double a = 0.0, delta = 0.0, b = 0.0;
    std::string coupling;
    double J = 0.0;
    bool random = false;
    std::uint64_t bond_seed = 0, field_seed = 0;
    std::string observable;
    long index = 0;
    double value = 0.0, aux1 = 0.0, aux2 = 0.0;
    double wall_ms = 0.0;
    std::string error;

    bool operator==(const ResultRow&) const = default;
};

// Parses flat key=value configuration text ('#' starts a comment). Unknown
// keys and malformed values are rejected with the offending key named.
SweepConfig parse_config(const std::string& text);

// Canonical single-line echo of a config; parse_config(config_echo(c))
// reproduces c.
std::string config_echo(const SweepConfig& cfg);

// Grid x ensemble evaluation. Per-point seeds derive from
// (master_seed, grid_index, ensemble_index); failures become error rows and
// the sweep continues. Rows are ordered by (grid index, ensemble index) with
// pooled rows (ensemble_index -1) after each grid point's per-seed rows.
std::vector<ResultRow> run_sweep(const SweepConfig& cfg);

void emit(const std::vector<ResultRow>& rows, const SweepConfig& cfg, std::ostream& out);
std::vector<ResultRow> parse_rows_jsonl(std::istream& in);
std::vector<ResultRow> parse_rows_csv(std::istream& in);

// Resolves cfg.output (QSPIN_OUTPUT_DIR prefixes relative paths), then either
// writes to stdout ("-") or atomically replaces the file via a temporary.
// Existing files are refused unless cfg.overwrite.
void write_output(const std::vector<ResultRow>& rows, const SweepConfig& cfg);

// Shared by write_output and the CLI verbs.
std::string resolve_output_path(const std::string& path);

}  // namespace qspin
