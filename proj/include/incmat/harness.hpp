#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "incmat/report.hpp"

namespace incmat {

enum class RemovalKind { Exhaustive, Sampled, Explicit };

/// Which removed families a sweep visits for each grid point.
struct RemovalPolicy {
    RemovalKind kind = RemovalKind::Exhaustive;
    /// Exhaustive: every family of size 0..max_size. Sampled: sizes 1..max_size.
    int max_size = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Explicit: canonical row indices, one family per entry.
    std::vector<std::vector<std::uint64_t>> families;
};

struct ExperimentConfig {
    LatticeMode mode = LatticeMode::Set;
    std::vector<int> n;
    std::vector<int> r;
    std::vector<int> s;
    /// Subspace mode only.
    std::vector<std::uint64_t> q;
    /// Field strings: q0, gf<p>, gf<p>^<t>.
    std::vector<std::string> fields;
    RemovalPolicy removal;
    std::string json_path;
    std::string csv_path;
    /// 0: INCMAT_THREADS from the environment, else hardware concurrency.
    unsigned threads = 0;
    /// Grid points whose full inclusion matrix has more entries are skipped.
    std::uint64_t entry_budget = 50'000'000;
    /// Per-cell wall-clock times in reports (breaks byte-identical output).
    bool timings = false;
};

/// A grid point left out of a sweep.
struct SkippedCell {
    std::string params;
    std::string reason;
};

struct RunSummary {
    std::vector<ResilienceReport> cells;
    std::size_t equal_count = 0;
    std::size_t unequal_count = 0;
    /// Index into cells of the first cell inside the hypothesis region whose rank dropped.
    std::optional<std::size_t> first_counterexample;
    std::vector<SkippedCell> skipped;
    std::chrono::nanoseconds wall{0};

    [[nodiscard]] std::size_t total() const { return cells.size(); }
    [[nodiscard]] bool ok() const { return !first_counterexample; }
};

/// 64-bit mixer used to derive independent per-cell seeds.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x);

/// Thread count from cfg, INCMAT_THREADS, or the hardware, at least 1.
[[nodiscard]] unsigned resolve_threads(unsigned requested);

/// The removed families for a grid point with `total` rows, in visiting order.
[[nodiscard]] std::vector<std::vector<std::uint64_t>> removal_families(std::uint64_t total, const RemovalPolicy& policy);

[[nodiscard]] RunSummary run_sweep(const ExperimentConfig& cfg);

/// Report serialisations; identical input gives identical bytes.
[[nodiscard]] std::string report_json(const ExperimentConfig& cfg, const RunSummary& summary);
[[nodiscard]] std::string report_csv(const ExperimentConfig& cfg, const RunSummary& summary);

struct InvariantResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::chrono::nanoseconds elapsed{0};
};

/// Runs the module invariant suite at desk scale; `progress` sees each
/// result as it finishes.
[[nodiscard]] std::vector<InvariantResult> run_invariants(
    const std::function<void(const InvariantResult&)>& progress = nullptr);

/// Entry point of the command-line tool. Exit codes: 0 success,
/// 1 property violation, 2 usage error.
int cli_main(int argc, char** argv);

} // namespace incmat
