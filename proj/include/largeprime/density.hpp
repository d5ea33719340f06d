#pragma once

#include <string_view>
#include <utility>

#include "largeprime/natural.hpp"
#include "largeprime/sampling.hpp"
#include "largeprime/sci_real.hpp"

namespace largeprime {

// Two constant sets for the digital-root filter.
//
// paper:     dropping digital roots 3, 6, 9 multiplies the prime density by 3.
//            Reproduces the published constants (.043364243, ...).
// corrected: dropping one third of the pool multiplies density by 3/2.
//            Matches exact enumeration; the default for real generation.
enum class DensityMode { paper, corrected };

std::string_view to_string(DensityMode mode);
DensityMode parse_density_mode(std::string_view text);

struct Interval {
    SciReal lower;
    SciReal upper;
};

// x / ln x. Throws DomainError for x < 2.
SciReal pnt_estimate(const SciReal& x);
SciReal pnt_estimate(const Natural& x);

// Approximate number of k-digit primes:
// pnt(10^k) - pnt(10^(k-1)) = 10^(k-1) (9k - 10) / (ln 10 * k (k - 1)).
SciReal digit_prime_count(unsigned k);

// x/(ln x - 1) < pi(x) < x/(ln x - 1.1), valid for x >= 60184.
Interval dusart_bounds(const SciReal& x);

// Interval for the k-digit prime count built from the bounds at 10^k and
// 10^(k-1). Corrected mode pairs the bounds crosswise (lower - upper,
// upper - lower), which is a guaranteed interval. Paper mode subtracts
// like from like, which is what the published N(75) interval does.
// Requires 10^(k-1) >= 60184, i.e. k >= 6.
Interval digit_prime_count_bounds(unsigned k, DensityMode mode = DensityMode::corrected);

// Probability that a uniform k-digit integer is prime: (9k - 10) / (9k (k - 1) ln 10).
double base_prime_prob(unsigned k);

// Multiplier applied to base_prime_prob by a filter policy.
double filter_factor(FilterPolicy policy, DensityMode mode);

// base_prime_prob(k) * filter_factor. Throws DomainError if the estimate
// reaches 1 (paper mode at k <= 3), since it is then not a probability.
double filtered_prime_prob(unsigned k, FilterPolicy policy, DensityMode mode);

struct DensityEstimate {
    unsigned digits = 0;
    SciReal n_of_k;
    double base_prob = 0.0;
    double filtered_prob = 0.0;
    FilterPolicy policy;
    DensityMode mode = DensityMode::corrected;
};

DensityEstimate density_estimate(unsigned k, FilterPolicy policy, DensityMode mode);

}  // namespace largeprime
