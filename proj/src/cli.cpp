#include "largeprime/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "largeprime/confidence.hpp"
#include "largeprime/density.hpp"
#include "largeprime/harness.hpp"
#include "largeprime/primality.hpp"
#include "largeprime/pseudolab.hpp"

namespace largeprime {

namespace {

using nlohmann::json;

std::string fixed(double x, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, x);
    return buf;
}

std::string lower_bound_text(double lb) {
    return lb < 0.0 ? "< 0 (uninformative)" : format_probability(lb);
}

json sci_json(const SciReal& x) {
    return {{"mantissa", x.mantissa()}, {"exp10", x.exp10()}, {"text", x.to_string()}};
}

// Mantissa pinned to a chosen exponent, so related counts line up.
json sci_json(const SciReal& x, std::int64_t exp10) {
    return {{"mantissa", x.mantissa_at(exp10)}, {"exp10", exp10}, {"text", x.to_string_at(exp10)}};
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
    unsigned digits = 75;
    double target = 0.999999;
    std::optional<std::uint64_t> seed;
    std::string mode = "corrected";
    std::string policy = "both";
    std::uint64_t attempt_cap = 1'000'000;
};

void run_generate(const GenerateArgs& a, ReportFormat format, std::ostream& out) {
    GenerateConfig cfg;
    cfg.digits = a.digits;
    cfg.target_confidence = a.target;
    if (a.seed) cfg.seed = RngSeed{*a.seed};
    cfg.mode = parse_density_mode(a.mode);
    cfg.policy = parse_filter_policy(a.policy);
    cfg.attempt_cap = a.attempt_cap;
    const auto g = generate_prime(cfg);

    switch (format) {
    case ReportFormat::json:
        out << json{{"prime", g.candidate.n.to_string()},
                    {"digits", g.candidate.digits},
                    {"attempts", g.attempts},
                    {"rounds", g.report.rounds},
                    {"prior", g.report.prior_p},
                    {"confidence_lower_bound", g.report.lower_bound},
                    {"exact_posterior", g.report.exact_posterior}}
                   .dump(2)
            << '\n';
        break;
    case ReportFormat::csv:
        out << "prime,digits,attempts,rounds,prior,confidence_lower_bound,exact_posterior\n"
            << g.candidate.n << ',' << g.candidate.digits << ',' << g.attempts << ',' << g.report.rounds << ','
            << format_probability(g.report.prior_p) << ',' << format_probability(g.report.lower_bound) << ','
            << format_probability(g.report.exact_posterior) << '\n';
        break;
    case ReportFormat::table:
        out << "prime: " << g.candidate.n << '\n'
            << "digits: " << g.candidate.digits << '\n'
            << "attempts: " << g.attempts << '\n'
            << "rounds: " << g.report.rounds << '\n'
            << "prior: " << format_probability(g.report.prior_p) << '\n'
            << "confidence_lower_bound: " << lower_bound_text(g.report.lower_bound) << '\n'
            << "exact_posterior: " << format_probability(g.report.exact_posterior) << '\n';
        break;
    }
}

// ---- test <n> -------------------------------------------------------------

struct TestArgs {
    std::string number;
    unsigned rounds = 10;
    std::uint64_t seed = 0;
    std::optional<std::string> base;
    std::uint64_t oracle_bound = kDefaultOracleBound;
};

struct NamedVerdict {
    std::string name;
    TestVerdict verdict;
};

std::string evidence_text(const TestVerdict& v) {
    if (!v.evidence) return "";
    return (v.evidence->kind == Evidence::Kind::witness ? "witness " : "factor ") + v.evidence->value.to_string();
}

void run_test(const TestArgs& a, ReportFormat format, std::ostream& out) {
    const Natural n = Natural::parse(a.number);

    std::optional<TrialDivisionResult> oracle;
    if (n.fits_u64() && n.to_u64() <= a.oracle_bound && !n.is_zero()) oracle = trial_division(n, a.oracle_bound);

    const bool testable = n.is_odd() && n >= Natural(5u);
    std::vector<NamedVerdict> verdicts;
    std::optional<MRTranscript> transcript;
    if (testable) {
        if (a.base) {
            const Natural base = Natural::parse(*a.base);
            verdicts.push_back({"fermat", fermat_round(n, base)});
            verdicts.push_back({"euler", euler_round(n, base)});
            auto mr = miller_rabin_round(n, base);
            verdicts.push_back({"miller-rabin", mr.verdict});
            transcript = std::move(mr.transcript);
        } else {
            // Each test gets its own stream so adding a test never shifts another's bases.
            Rng f(derive_stream(RngSeed{a.seed}, 0)), e(derive_stream(RngSeed{a.seed}, 1)), m(derive_stream(RngSeed{a.seed}, 2));
            verdicts.push_back({"fermat", fermat_test(n, a.rounds, f)});
            verdicts.push_back({"euler", euler_test(n, a.rounds, e)});
            verdicts.push_back({"miller-rabin", miller_rabin(n, a.rounds, m)});
        }
    }
    const auto false_positive = [&](const TestVerdict& v) {
        return oracle && oracle->is_composite() && v.is_probable_prime();
    };

    if (format == ReportFormat::json) {
        json j{{"n", n.to_string()}};
        if (oracle) {
            j["oracle"] = {{"verdict", oracle->is_prime() ? "PRIME" : oracle->is_composite() ? "COMPOSITE" : "UNIT"}};
            if (oracle->is_composite()) j["oracle"]["smallest_factor"] = oracle->smallest_factor;
        } else {
            j["oracle"] = nullptr;
        }
        j["tests"] = json::array();
        for (const auto& nv : verdicts) {
            json t{{"name", nv.name},
                   {"verdict", std::string(to_string(nv.verdict.outcome))},
                   {"rounds_survived", nv.verdict.rounds_survived},
                   {"false_positive", false_positive(nv.verdict)}};
            if (nv.verdict.evidence) t["evidence"] = evidence_text(nv.verdict);
            j["tests"].push_back(std::move(t));
        }
        if (transcript) {
            json chain = json::array();
            for (const auto& b : transcript->chain) chain.push_back(b.to_string());
            j["transcript"] = {{"s", transcript->decomposition.s},
                               {"odd_part", transcript->decomposition.odd_part.to_string()},
                               {"chain", chain}};
        }
        out << j.dump(2) << '\n';
        return;
    }
    if (format == ReportFormat::csv) {
        out << "test,verdict,rounds_survived,evidence,false_positive\n";
        if (oracle)
            out << "oracle," << (oracle->is_prime() ? "PRIME" : oracle->is_composite() ? "COMPOSITE" : "UNIT") << ",,"
                << (oracle->is_composite() ? "factor " + std::to_string(oracle->smallest_factor) : "") << ",\n";
        for (const auto& nv : verdicts)
            out << nv.name << ',' << to_string(nv.verdict.outcome) << ',' << nv.verdict.rounds_survived << ','
                << evidence_text(nv.verdict) << ',' << (false_positive(nv.verdict) ? "true" : "false") << '\n';
        return;
    }

    out << "n: " << n << '\n';
    if (oracle) {
        out << "oracle: ";
        if (oracle->is_prime()) out << "PRIME\n";
        else if (oracle->is_composite()) out << "COMPOSITE (smallest factor " << oracle->smallest_factor << ")\n";
        else out << "UNIT\n";
    } else {
        out << "oracle: not run (above bound " << a.oracle_bound << ")\n";
    }
    if (!testable) out << "tests: not applicable (requires odd n >= 5)\n";
    for (const auto& nv : verdicts) {
        out << nv.name << ": ";
        if (nv.verdict.is_composite()) out << "COMPOSITE (" << evidence_text(nv.verdict) << ")";
        else out << "PROBABLE PRIME";
        if (!a.base) out << " after " << nv.verdict.rounds_survived << " round(s) passed";
        if (false_positive(nv.verdict)) out << "  ** FALSE POSITIVE: oracle says composite **";
        out << '\n';
    }
    if (transcript) {
        out << "n-1 = 2^" << transcript->decomposition.s << " * " << transcript->decomposition.odd_part << '\n';
        out << "chain:";
        for (const auto& b : transcript->chain) out << ' ' << b;
        out << '\n';
    }
}

// ---- experiment -----------------------------------------------------------

struct ExperimentArgs {
    unsigned digits = 75;
    std::uint64_t count = 100;
    unsigned rounds = 10;
    std::uint64_t seed = 0;
    std::string policy = "both";
    std::string mode = "corrected";
    unsigned threads = 1;
};

void run_experiment_cmd(const ExperimentArgs& a, ReportFormat format, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    cfg.digits = a.digits;
    cfg.count = a.count;
    cfg.rounds = a.rounds;
    cfg.seed = RngSeed{a.seed};
    cfg.policy = parse_filter_policy(a.policy);
    cfg.mode = parse_density_mode(a.mode);
    cfg.format = format;
    cfg.threads = a.threads;
    const auto result = run_experiment(cfg);
    out << render_report(result.records, format, format == ReportFormat::csv ? nullptr : &result.summary);
    if (format == ReportFormat::csv) {
        err << "prime_count=" << result.summary.prime_count << " expected_prime_count="
            << format_probability(result.summary.expected_prime_count)
            << " confidence_lower_bound=" << lower_bound_text(result.summary.confidence.lower_bound) << '\n';
    }
}

// ---- density --------------------------------------------------------------

struct DensityArgs {
    unsigned digits = 75;
    std::optional<unsigned> to;
    std::string policy = "both";
    std::string mode = "corrected";
};

void run_density(const DensityArgs& a, ReportFormat format, std::ostream& out) {
    const auto policy = parse_filter_policy(a.policy);
    const auto mode = parse_density_mode(a.mode);
    const unsigned last = a.to.value_or(a.digits);
    if (a.digits < 2) throw DomainError("--digits must be >= 2");
    if (last < a.digits) throw DomainError("--to must be >= --digits");

    struct Row {
        unsigned k;
        SciReal n_of_k;
        double base;
        std::optional<double> filtered;
        std::optional<Interval> bounds;
    };
    std::vector<Row> rows;
    for (unsigned k = a.digits; k <= last; ++k) {
        Row r{k, digit_prime_count(k), base_prime_prob(k), std::nullopt, std::nullopt};
        try {
            r.filtered = filtered_prime_prob(k, policy, mode);
        } catch (const DomainError&) {
        }
        if (k >= 6) r.bounds = digit_prime_count_bounds(k, mode);
        rows.push_back(std::move(r));
    }

    switch (format) {
    case ReportFormat::json: {
        json arr = json::array();
        for (const auto& r : rows) {
            json j{{"digits", r.k},
                   {"n_of_k", sci_json(r.n_of_k, r.k - 1)},
                   {"base_prob", r.base},
                   {"filter_factor", filter_factor(policy, mode)},
                   {"filtered_prob", r.filtered ? json(*r.filtered) : json(nullptr)},
                   {"pool_size", sci_json(pool_size(r.k, policy))},
                   {"policy", std::string(to_string(policy))},
                   {"mode", std::string(to_string(mode))}};
            j["count_bounds"] = r.bounds ? json{{"lower", sci_json(r.bounds->lower, r.k - 1)}, {"upper", sci_json(r.bounds->upper, r.k - 1)}} : json(nullptr);
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case ReportFormat::csv:
        out << "digits,n_of_k,base_prob,filtered_prob,count_lower,count_upper\n";
        for (const auto& r : rows) {
            out << r.k << ',' << r.n_of_k.to_string_at(r.k - 1) << ',' << format_probability(r.base) << ','
                << (r.filtered ? format_probability(*r.filtered) : "") << ','
                << (r.bounds ? r.bounds->lower.to_string_at(r.k - 1) : "") << ','
                << (r.bounds ? r.bounds->upper.to_string_at(r.k - 1) : "")
                << '\n';
        }
        break;
    case ReportFormat::table:
        out << "# policy: " << to_string(policy) << ", mode: " << to_string(mode) << ", filter factor "
            << fixed(filter_factor(policy, mode), 2) << '\n';
        out << "digits  N(k)                 base_prob    filtered_prob  count_lower          count_upper\n";
        for (const auto& r : rows) {
            char line[256];
            std::snprintf(line, sizeof line, "%-7u %-20s %-12s %-14s %-20s %s\n", r.k, r.n_of_k.to_string_at(r.k - 1).c_str(),
                          format_probability(r.base).c_str(), r.filtered ? format_probability(*r.filtered).c_str() : "n/a",
                          r.bounds ? r.bounds->lower.to_string_at(r.k - 1).c_str() : "n/a",
                          r.bounds ? r.bounds->upper.to_string_at(r.k - 1).c_str() : "n/a");
            out << line;
        }
        break;
    }
}

// ---- confidence -----------------------------------------------------------

struct ConfidenceArgs {
    std::optional<double> prior;
    std::optional<unsigned> digits;
    std::string policy = "both";
    std::string mode = "corrected";
    unsigned rounds = 10;
    std::optional<double> target;
};

void run_confidence(const ConfidenceArgs& a, ReportFormat format, std::ostream& out) {
    if (a.prior.has_value() == a.digits.has_value()) throw DomainError("give exactly one of --prior or --digits");
    const double prior =
        a.prior ? *a.prior : filtered_prime_prob(*a.digits, parse_filter_policy(a.policy), parse_density_mode(a.mode));
    const unsigned rounds = a.target ? rounds_for_confidence(prior, *a.target) : a.rounds;
    const auto r = bayes_confidence(prior, rounds);

    switch (format) {
    case ReportFormat::json: {
        json j{{"prior_p", r.prior_p}, {"prior_c", r.prior_c},   {"rounds", r.rounds},
               {"ratio", r.ratio},     {"slack", r.slack},       {"lower_bound", r.lower_bound},
               {"exact_posterior", r.exact_posterior}};
        if (a.target) j["target"] = *a.target;
        out << j.dump(2) << '\n';
        break;
    }
    case ReportFormat::csv:
        out << "prior_p,prior_c,rounds,ratio,slack,lower_bound,exact_posterior\n"
            << format_probability(r.prior_p) << ',' << format_probability(r.prior_c) << ',' << r.rounds << ','
            << fixed(r.ratio, 9) << ',' << fixed(r.slack, 12) << ',' << format_probability(r.lower_bound) << ','
            << format_probability(r.exact_posterior) << '\n';
        break;
    case ReportFormat::table:
        if (a.target) out << "target: " << format_probability(*a.target) << '\n';
        out << "prior_p: " << format_probability(r.prior_p) << '\n'
            << "prior_c: " << format_probability(r.prior_c) << '\n'
            << "rounds: " << r.rounds << '\n'
            << "ratio: " << fixed(r.ratio, 9) << '\n'
            << "slack: " << fixed(r.slack, 12) << '\n'
            << "lower_bound: " << lower_bound_text(r.lower_bound) << '\n'
            << "exact_posterior: " << format_probability(r.exact_posterior) << '\n';
        break;
    }
}

// ---- lab ------------------------------------------------------------------

void emit_list(const std::vector<std::uint64_t>& values, const char* column, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::json) {
        out << json(values).dump() << '\n';
        return;
    }
    if (format == ReportFormat::csv) out << column << '\n';
    for (auto v : values) out << v << '\n';
}

void emit_census(const std::vector<LiarCensus>& rows, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::json) {
        json arr = json::array();
        for (const auto& c : rows)
            arr.push_back({{"n", c.n},
                           {"total_bases", c.total_bases},
                           {"fermat_liars", c.fermat_liars},
                           {"euler_liars", c.euler_liars},
                           {"strong_liars", c.strong_liars}});
        out << arr.dump(2) << '\n';
        return;
    }
    const char sep = format == ReportFormat::csv ? ',' : '\t';
    out << "n" << sep << "total_bases" << sep << "fermat_liars" << sep << "euler_liars" << sep << "strong_liars\n";
    for (const auto& c : rows)
        out << c.n << sep << c.total_bases << sep << c.fermat_liars << sep << c.euler_liars << sep << c.strong_liars << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generate and test large probable primes"};
    app.name("largeprime");
    app.require_subcommand(1);

    std::string format_text = "table";
    std::string out_path;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--out", out_path, "write the report to this file instead of stdout");
    };

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "generate a probable prime to a target confidence");
    generate->add_option("--digits", gen.digits, "number of decimal digits (>= 2)");
    generate->add_option("--target-confidence", gen.target, "required lower bound on P(prime | passed)");
    generate->add_option("--seed", gen.seed, "seed for a reproducible run (default: OS entropy)");
    generate->add_option("--mode", gen.mode, "paper or corrected");
    generate->add_option("--policy", gen.policy, "none, last-digit or both");
    generate->add_option("--attempt-cap", gen.attempt_cap, "give up after this many candidates");
    add_common(generate);

    TestArgs tst;
    auto* test = app.add_subcommand("test", "run the Fermat, Euler and Miller-Rabin tests on n");
    test->add_option("n", tst.number, "decimal integer")->required();
    test->add_option("--rounds", tst.rounds, "rounds per test");
    test->add_option("--seed", tst.seed, "seed for the random bases");
    test->add_option("--base", tst.base, "run a single round of each test with this base");
    test->add_option("--oracle-bound", tst.oracle_bound, "largest n checked by trial division");
    add_common(test);

    ExperimentArgs exp;
    auto* experiment = app.add_subcommand("experiment", "test a batch of random filtered candidates");
    experiment->add_option("--digits", exp.digits, "number of decimal digits (>= 2)");
    experiment->add_option("--count", exp.count, "number of candidates");
    experiment->add_option("--rounds", exp.rounds, "Miller-Rabin rounds per candidate");
    experiment->add_option("--seed", exp.seed, "master seed");
    experiment->add_option("--policy", exp.policy, "none, last-digit or both");
    experiment->add_option("--mode", exp.mode, "paper or corrected");
    experiment->add_option("--threads", exp.threads, "worker threads (output is identical for any value)");
    add_common(experiment);

    DensityArgs den;
    auto* density = app.add_subcommand("density", "prime-density estimates for k-digit numbers");
    density->add_option("--digits", den.digits, "first digit count (>= 2)");
    density->add_option("--to", den.to, "last digit count of the table");
    density->add_option("--policy", den.policy, "none, last-digit or both");
    density->add_option("--mode", den.mode, "paper or corrected");
    add_common(density);

    ConfidenceArgs con;
    auto* confidence = app.add_subcommand("confidence", "Bayes confidence after m passed rounds");
    confidence->add_option("--prior", con.prior, "prior probability that the candidate is prime");
    confidence->add_option("--digits", con.digits, "derive the prior from the density estimate");
    confidence->add_option("--policy", con.policy, "none, last-digit or both");
    confidence->add_option("--mode", con.mode, "paper or corrected");
    confidence->add_option("--rounds", con.rounds, "passed Miller-Rabin rounds");
    confidence->add_option("--target-confidence", con.target, "solve for the rounds needed instead");
    add_common(confidence);

    auto* lab = app.add_subcommand("lab", "brute-force pseudoprime enumeration");
    lab->require_subcommand(1);
    std::uint64_t limit = 10'000, base = 2, from = 9, to = 5000, number = 0;
    std::string method = "exhaustive";
    auto* carmichael = lab->add_subcommand("carmichael", "Carmichael numbers up to --limit");
    carmichael->add_option("--limit", limit);
    carmichael->add_option("--method", method, "exhaustive or korselt")->check(CLI::IsMember({"exhaustive", "korselt"}));
    add_common(carmichael);
    auto* fermat = lab->add_subcommand("fermat", "Fermat pseudoprimes to --base up to --limit");
    fermat->add_option("--base", base);
    fermat->add_option("--limit", limit);
    add_common(fermat);
    auto* census = lab->add_subcommand("census", "liar counts for odd composites in [--from, --to] or for --n");
    census->add_option("--from", from);
    census->add_option("--to", to);
    auto* census_n = census->add_option("--n", number);
    add_common(census);
    auto* sqrt1 = lab->add_subcommand("sqrt1", "square roots of 1 modulo --n");
    sqrt1->add_option("--n", number)->required();
    add_common(sqrt1);
    auto* euler_abs = lab->add_subcommand("euler-abs", "is --n an absolute Euler pseudoprime");
    euler_abs->add_option("--n", number)->required();
    add_common(euler_abs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream report;
    try {
        const ReportFormat format = parse_report_format(format_text);
        if (*generate) run_generate(gen, format, report);
        else if (*test) run_test(tst, format, report);
        else if (*experiment) run_experiment_cmd(exp, format, report, err);
        else if (*density) run_density(den, format, report);
        else if (*confidence) run_confidence(con, format, report);
        else if (*carmichael)
            emit_list(method == "korselt" ? carmichael_numbers_korselt(limit) : carmichael_numbers(limit), "n", format, report);
        else if (*fermat) emit_list(fermat_pseudoprimes(base, limit), "n", format, report);
        else if (*census)
            emit_census(census_n->count() ? std::vector<LiarCensus>{liar_census(number)} : liar_census_range(from, to), format, report);
        else if (*sqrt1) emit_list(sqrt_of_unity(number), "x", format, report);
        else if (*euler_abs) {
            const bool yes = is_absolute_euler_pseudoprime(number);
            if (format == ReportFormat::json) report << json{{"n", number}, {"absolute_euler_pseudoprime", yes}}.dump() << '\n';
            else if (format == ReportFormat::csv) report << "n,absolute_euler_pseudoprime\n" << number << ',' << (yes ? "true" : "false") << '\n';
            else report << number << (yes ? " is" : " is not") << " an absolute Euler pseudoprime\n";
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitRefused;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }

    if (out_path.empty()) {
        out << report.str();
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << report.str())) {
            err << "error: cannot write " << out_path << '\n';
            return kExitFailure;
        }
    }
    return kExitOk;
}

}  // namespace largeprime
