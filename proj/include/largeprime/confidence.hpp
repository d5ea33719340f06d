#pragma once

namespace largeprime {

// Bayes reliability of a candidate that passed `rounds` Miller-Rabin rounds,
// taking P(pass m rounds | composite) <= 4^-m at its worst case.
struct ConfidenceReport {
    double prior_p = 0.0;  // P(prime) before testing
    double prior_c = 0.0;  // 1 - prior_p
    unsigned rounds = 0;
    double ratio = 0.0;           // prior_c / prior_p
    double slack = 0.0;           // ratio * 4^-rounds
    double lower_bound = 0.0;     // 1 - slack; may be negative (uninformative)
    double exact_posterior = 0.0; // prior_p / (prior_p + prior_c * 4^-rounds)
};

// Throws DomainError unless 0 < prior_p < 1 and rounds >= 1.
ConfidenceReport bayes_confidence(double prior_p, unsigned rounds);

// Smallest m >= 1 with bayes_confidence(prior_p, m).lower_bound >= target.
// Throws DomainError unless both arguments lie in (0, 1).
unsigned rounds_for_confidence(double prior_p, double target);

}  // namespace largeprime
