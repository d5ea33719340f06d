#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "largeprime/confidence.hpp"
#include "largeprime/density.hpp"
#include "largeprime/primality.hpp"
#include "largeprime/random.hpp"
#include "largeprime/sampling.hpp"

namespace largeprime {

enum class ReportFormat { table, csv, json };

ReportFormat parse_report_format(std::string_view text);
FilterPolicy parse_filter_policy(std::string_view text);
std::string_view to_string(FilterPolicy policy);

struct ExperimentConfig {
    unsigned digits = 75;
    std::uint64_t count = 100;
    unsigned rounds = 10;
    RngSeed seed{};
    FilterPolicy policy = FilterPolicy::both();
    DensityMode mode = DensityMode::corrected;
    ReportFormat format = ReportFormat::table;
    unsigned threads = 1;
};

// Throws DomainError on d < 2, N < 1, m < 1 or threads < 1.
void validate(const ExperimentConfig& config);

struct ExperimentRecord {
    Candidate candidate;
    TestVerdict verdict;
    unsigned rounds_used = 0;
    std::optional<double> confidence_lower_bound;  // probable primes only
    std::chrono::nanoseconds elapsed{0};
};

struct ExperimentSummary {
    unsigned digits = 0;
    std::uint64_t count = 0;
    unsigned rounds = 0;
    std::uint64_t seed = 0;
    FilterPolicy policy;
    DensityMode mode = DensityMode::corrected;
    std::uint64_t prime_count = 0;
    double prior = 0.0;
    double expected_prime_count = 0.0;
    ConfidenceReport confidence;
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    ExperimentSummary summary;
};

// Draws `count` filtered candidates and Miller-Rabin tests each one.
// Candidate i uses its own stream derive_stream(seed, i), so output does not
// depend on the thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct GenerateConfig {
    unsigned digits = 75;
    double target_confidence = 0.999999;
    std::optional<RngSeed> seed;  // absent: operating-system entropy
    DensityMode mode = DensityMode::corrected;
    FilterPolicy policy = FilterPolicy::both();
    std::uint64_t attempt_cap = 1'000'000;
};

struct GeneratedPrime {
    Candidate candidate;
    ConfidenceReport report;
    std::uint64_t attempts = 0;
};

// Samples until a candidate survives rounds_for_confidence(prior, target)
// Miller-Rabin rounds. Throws RefusalError if attempt_cap is reached.
GeneratedPrime generate_prime(const GenerateConfig& config);

// Table: one "<number>\t<PRIME|COMPOSITE>" line per record, then '#'-prefixed
// summary lines if a summary is given. CSV: header plus one row per record.
// JSON: {"records": [...], "summary": {...}}.
std::string render_report(std::span<const ExperimentRecord> records, ReportFormat format,
                          const ExperimentSummary* summary = nullptr);

// Fixed-point rendering used for every probability in reports.
std::string format_probability(double p);

}  // namespace largeprime
