#pragma once

#include <cliquesub/oracles.hpp>
#include <cliquesub/pipeline.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cliquesub {

/// One (n, seed) cell of a ratio sweep over G(n, p).
struct ExperimentRecord {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::size_t chi_upper = 0;           // DSATUR
    std::size_t chi_lower = 0;           // ceil(n / alpha), alpha exact or its proven upper bound
    Certainty chi_lower_tag = Certainty::exact;
    std::size_t sigma_lower = 0;         // best of the pipeline certificate and the exact search
    std::optional<std::size_t> sigma_upper_t; // counting certificate, only with exact omega
    std::optional<double> ratio_lower;   // chi_lower / sigma_upper_t, when both are certified
    double ratio_point = 0.0;            // chi_upper / sigma_lower
    double reference = 0.0;              // sqrt(n) / log n
    std::size_t alpha = 0;
    Certainty alpha_tag = Certainty::exact;
    std::size_t omega = 0;
    Certainty omega_tag = Certainty::exact;
    std::string sigma_source;            // "pipeline", "clique", "exact" or "trivial"

    bool operator==(const ExperimentRecord &) const = default;
};

struct SweepOptions {
    std::vector<std::size_t> ns;
    double p = 0.0;
    std::size_t seeds_per_n = 1;
    std::uint64_t first_seed = 1;
    std::uint64_t alpha_budget = default_budget_nodes;
    std::uint64_t omega_budget = default_budget_nodes;
    std::uint64_t sigma_budget = 2'000'000;
    std::size_t exact_sigma_limit = 12; // run the exact subdivision search up to this n
    PipelineParams params = PipelineParams::practical();
    unsigned threads = 0;                // 0: hardware concurrency
};

ExperimentRecord run_cell(std::size_t n, double p, std::uint64_t seed, const SweepOptions & options);

/// One record per (n, seed) with seeds first_seed .. first_seed + seeds_per_n - 1, sorted by
/// (n, seed). Throws InputError if ns is empty.
std::vector<ExperimentRecord> run_ratio_sweep(const SweepOptions & options);

enum class ReportFormat { csv, json };

void emit_report(const std::vector<ExperimentRecord> & records, ReportFormat format, std::ostream & out);
nlohmann::ordered_json record_to_json(const ExperimentRecord & r);
/// Inverse of the JSON emission; throws ParseError on malformed input.
std::vector<ExperimentRecord> parse_report_json(const nlohmann::json & doc);

} // namespace cliquesub
