#include "largeprime/density.hpp"

#include <numbers>
#include <string>

namespace largeprime {

namespace {

constexpr double kLn10 = std::numbers::ln10;
constexpr double kDusartMin = 60184.0;

void require_digits(unsigned k) {
    if (k < 2) throw DomainError("digit count must be >= 2");
}

SciReal over_log_minus(const SciReal& x, double offset) {
    return x / (x.ln() - offset);
}

}  // namespace

std::string_view to_string(DensityMode mode) {
    return mode == DensityMode::paper ? "paper" : "corrected";
}

DensityMode parse_density_mode(std::string_view text) {
    if (text == "paper") return DensityMode::paper;
    if (text == "corrected") return DensityMode::corrected;
    throw DomainError("unknown density mode '" + std::string(text) + "'");
}

SciReal pnt_estimate(const SciReal& x) {
    if (x < SciReal::from_double(2.0)) throw DomainError("pnt_estimate: x must be >= 2");
    return over_log_minus(x, 0.0);
}

SciReal pnt_estimate(const Natural& x) {
    return pnt_estimate(SciReal::from_natural(x));
}

SciReal digit_prime_count(unsigned k) {
    require_digits(k);
    const double kd = k;
    return SciReal::make((9.0 * kd - 10.0) / (kLn10 * kd * (kd - 1.0)), static_cast<std::int64_t>(k) - 1);
}

Interval dusart_bounds(const SciReal& x) {
    if (x < SciReal::from_double(kDusartMin)) throw DomainError("dusart_bounds: requires x >= 60184");
    return Interval{over_log_minus(x, 1.0), over_log_minus(x, 1.1)};
}

Interval digit_prime_count_bounds(unsigned k, DensityMode mode) {
    require_digits(k);
    const auto hi = dusart_bounds(SciReal::pow10(k));
    const auto lo = dusart_bounds(SciReal::pow10(static_cast<std::int64_t>(k) - 1));
    if (mode == DensityMode::paper) return Interval{hi.lower - lo.lower, hi.upper - lo.upper};
    return Interval{hi.lower - lo.upper, hi.upper - lo.lower};
}

double base_prime_prob(unsigned k) {
    require_digits(k);
    const double kd = k;
    return (9.0 * kd - 10.0) / (9.0 * kd * (kd - 1.0) * kLn10);
}

double filter_factor(FilterPolicy policy, DensityMode mode) {
    double factor = 1.0;
    if (policy.last_digit_filter) factor *= 2.5;
    if (policy.digital_root_filter) factor *= mode == DensityMode::paper ? 3.0 : 1.5;
    return factor;
}

double filtered_prime_prob(unsigned k, FilterPolicy policy, DensityMode mode) {
    const double p = base_prime_prob(k) * filter_factor(policy, mode);
    if (p >= 1.0)
        throw DomainError("filtered prime probability estimate for " + std::to_string(k) + " digits is " +
                          std::to_string(p) + " (>= 1) in " + std::string(to_string(mode)) + " mode");
    return p;
}

DensityEstimate density_estimate(unsigned k, FilterPolicy policy, DensityMode mode) {
    return DensityEstimate{k, digit_prime_count(k), base_prime_prob(k), filtered_prime_prob(k, policy, mode), policy, mode};
}

}  // namespace largeprime
