#include "largeprime/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace largeprime {

namespace {

using Clock = std::chrono::steady_clock;

// Even candidates cannot enter a round. The last-digit filter never produces
// them; an unfiltered pool can.
std::optional<TestVerdict> screen_even(const Natural& n) {
    if (n.is_even()) return TestVerdict{Outcome::composite, Evidence{Evidence::Kind::factor, Natural(2u)}, 0};
    return std::nullopt;
}

ExperimentRecord test_candidate(const ExperimentConfig& config, std::uint64_t index, double prior) {
    const auto start = Clock::now();
    Rng rng(derive_stream(config.seed, index));
    ExperimentRecord rec;
    rec.candidate = random_candidate(config.digits, config.policy, rng);
    if (auto early = screen_even(rec.candidate.n)) {
        rec.verdict = std::move(*early);
        rec.rounds_used = 0;
    } else {
        rec.verdict = miller_rabin(rec.candidate.n, config.rounds, rng);
        rec.rounds_used = rec.verdict.is_composite() ? rec.verdict.rounds_survived + 1 : config.rounds;
    }
    if (rec.verdict.is_probable_prime()) rec.confidence_lower_bound = bayes_confidence(prior, config.rounds).lower_bound;
    rec.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return rec;
}

double round9(double x) { return std::round(x * 1e9) / 1e9; }

nlohmann::json record_json(const ExperimentRecord& r) {
    nlohmann::json j{
        {"number", r.candidate.n.to_string()},
        {"digits", r.candidate.digits},
        {"verdict", std::string(to_string(r.verdict.outcome))},
        {"rounds_used", r.rounds_used},
    };
    j["confidence_lower_bound"] = r.confidence_lower_bound ? nlohmann::json(round9(*r.confidence_lower_bound)) : nlohmann::json(nullptr);
    if (r.verdict.evidence) {
        j["evidence"] = {
            {"kind", r.verdict.evidence->kind == Evidence::Kind::witness ? "witness" : "factor"},
            {"value", r.verdict.evidence->value.to_string()},
        };
    }
    return j;
}

nlohmann::json summary_json(const ExperimentSummary& s) {
    return {
        {"digits", s.digits},
        {"count", s.count},
        {"rounds", s.rounds},
        {"seed", s.seed},
        {"policy", std::string(to_string(s.policy))},
        {"mode", std::string(to_string(s.mode))},
        {"prime_count", s.prime_count},
        {"prior", round9(s.prior)},
        {"expected_prime_count", round9(s.expected_prime_count)},
        {"confidence_lower_bound", round9(s.confidence.lower_bound)},
        {"exact_posterior", round9(s.confidence.exact_posterior)},
    };
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
    if (text == "table") return ReportFormat::table;
    if (text == "csv") return ReportFormat::csv;
    if (text == "json") return ReportFormat::json;
    throw DomainError("unknown report format '" + std::string(text) + "'");
}

FilterPolicy parse_filter_policy(std::string_view text) {
    if (text == "none") return FilterPolicy::none();
    if (text == "last-digit") return FilterPolicy::last_digit_only();
    if (text == "both") return FilterPolicy::both();
    throw DomainError("unknown filter policy '" + std::string(text) + "'");
}

std::string_view to_string(FilterPolicy policy) {
    if (policy.last_digit_filter && policy.digital_root_filter) return "both";
    if (policy.last_digit_filter) return "last-digit";
    if (policy.digital_root_filter) return "digital-root";
    return "none";
}

std::string format_probability(double p) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9f", p);
    return buf;
}

void validate(const ExperimentConfig& config) {
    if (config.digits < 2) throw DomainError("--digits must be >= 2");
    if (config.count < 1) throw DomainError("--count must be >= 1");
    if (config.rounds < 1) throw DomainError("--rounds must be >= 1");
    if (config.threads < 1) throw DomainError("--threads must be >= 1");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate(config);
    const double prior = filtered_prime_prob(config.digits, config.policy, config.mode);

    ExperimentResult result;
    result.records.resize(config.count);

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.threads, config.count));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < config.count; ++i) result.records[i] = test_candidate(config, i, prior);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t i = next++; i < config.count; i = next++)
                    result.records[i] = test_candidate(config, i, prior);
            });
        }
    }

    auto& s = result.summary;
    s.digits = config.digits;
    s.count = config.count;
    s.rounds = config.rounds;
    s.seed = config.seed.seed;
    s.policy = config.policy;
    s.mode = config.mode;
    s.prime_count = static_cast<std::uint64_t>(std::count_if(
        result.records.begin(), result.records.end(), [](const ExperimentRecord& r) { return r.verdict.is_probable_prime(); }));
    s.prior = prior;
    s.expected_prime_count = static_cast<double>(config.count) * prior;
    s.confidence = bayes_confidence(prior, config.rounds);
    return result;
}

GeneratedPrime generate_prime(const GenerateConfig& config) {
    if (config.digits < 2) throw DomainError("--digits must be >= 2");
    if (!(config.target_confidence > 0.0 && config.target_confidence < 1.0))
        throw DomainError("--target-confidence must lie in (0, 1)");

    const double prior = filtered_prime_prob(config.digits, config.policy, config.mode);
    const unsigned rounds = rounds_for_confidence(prior, config.target_confidence);
    Rng rng = config.seed ? Rng(*config.seed) : Rng::from_entropy();

    for (std::uint64_t attempt = 1; attempt <= config.attempt_cap; ++attempt) {
        Candidate c = random_candidate(config.digits, config.policy, rng);
        if (screen_even(c.n)) continue;
        if (miller_rabin(c.n, rounds, rng).is_probable_prime())
            return GeneratedPrime{std::move(c), bayes_confidence(prior, rounds), attempt};
    }
    throw RefusalError("generate_prime: no probable prime within " + std::to_string(config.attempt_cap) + " attempts");
}

std::string render_report(std::span<const ExperimentRecord> records, ReportFormat format, const ExperimentSummary* summary) {
    std::ostringstream os;
    switch (format) {
    case ReportFormat::table:
        for (const auto& r : records) os << r.candidate.n << '\t' << to_string(r.verdict.outcome) << '\n';
        if (summary) {
            const auto& s = *summary;
            os << "# digits: " << s.digits << '\n'
               << "# count: " << s.count << '\n'
               << "# rounds: " << s.rounds << '\n'
               << "# seed: " << s.seed << '\n'
               << "# policy: " << to_string(s.policy) << '\n'
               << "# mode: " << to_string(s.mode) << '\n'
               << "# prime_count: " << s.prime_count << '\n'
               << "# prior: " << format_probability(s.prior) << '\n'
               << "# expected_prime_count: " << format_probability(s.expected_prime_count) << '\n'
               << "# confidence_lower_bound: "
               << (s.confidence.lower_bound < 0.0 ? std::string("< 0 (uninformative)") : format_probability(s.confidence.lower_bound))
               << '\n';
        }
        break;
    case ReportFormat::csv:
        os << "number,verdict,rounds_used,confidence_lower_bound\n";
        for (const auto& r : records) {
            os << r.candidate.n << ',' << to_string(r.verdict.outcome) << ',' << r.rounds_used << ',';
            if (r.confidence_lower_bound) os << format_probability(*r.confidence_lower_bound);
            os << '\n';
        }
        break;
    case ReportFormat::json: {
        nlohmann::json j;
        j["records"] = nlohmann::json::array();
        for (const auto& r : records) j["records"].push_back(record_json(r));
        if (summary) j["summary"] = summary_json(*summary);
        os << j.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

}  // namespace largeprime
