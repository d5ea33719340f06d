#include "largeprime/confidence.hpp"

#include <cmath>

#include "largeprime/error.hpp"

namespace largeprime {

namespace {

bool open_unit(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

ConfidenceReport bayes_confidence(double prior_p, unsigned rounds) {
    if (!open_unit(prior_p)) throw DomainError("bayes_confidence: prior must lie in (0, 1)");
    if (rounds < 1) throw DomainError("bayes_confidence: rounds must be >= 1");

    ConfidenceReport r;
    r.prior_p = prior_p;
    r.prior_c = 1.0 - prior_p;
    r.rounds = rounds;
    r.ratio = r.prior_c / prior_p;
    const double false_pass = std::ldexp(1.0, -2 * static_cast<int>(rounds));  // 4^-m
    r.slack = r.ratio * false_pass;
    r.lower_bound = 1.0 - r.slack;
    r.exact_posterior = prior_p / (prior_p + r.prior_c * false_pass);
    return r;
}

unsigned rounds_for_confidence(double prior_p, double target) {
    if (!open_unit(prior_p)) throw DomainError("rounds_for_confidence: prior must lie in (0, 1)");
    if (!open_unit(target)) throw DomainError("rounds_for_confidence: target must lie in (0, 1)");
    // 4^-m underflows to zero well before m reaches this cap, so the loop always exits.
    for (unsigned m = 1; m < 4096; ++m) {
        if (bayes_confidence(prior_p, m).lower_bound >= target) return m;
    }
    throw DomainError("rounds_for_confidence: target unreachable");
}

}  // namespace largeprime
