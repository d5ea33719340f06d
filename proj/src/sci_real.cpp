#include "largeprime/sci_real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace largeprime {

namespace {

// 10^e for |e| small enough to stay finite.
double scale10(std::int64_t e) {
    return std::pow(10.0, static_cast<double>(e));
}

}  // namespace

SciReal SciReal::make(double mantissa, std::int64_t exp10) {
    if (!std::isfinite(mantissa)) throw DomainError("SciReal: non-finite mantissa");
    if (mantissa == 0.0) return SciReal(0.0, 0);

    const double mag = std::fabs(mantissa);
    if (mag < 0.01 || mag >= 1.0) {
        // Shift to the top of the band in one step, then settle rounding.
        const auto shift = static_cast<std::int64_t>(std::floor(std::log10(mag))) + 1;
        mantissa /= scale10(shift);
        exp10 += shift;
    }
    while (std::fabs(mantissa) >= 1.0) {
        mantissa /= 10.0;
        ++exp10;
    }
    while (std::fabs(mantissa) < 0.01) {
        mantissa *= 10.0;
        --exp10;
    }
    return SciReal(mantissa, exp10);
}

SciReal SciReal::from_natural(const Natural& n) {
    if (n.is_zero()) return SciReal();
    const std::string digits = n.to_string();
    const std::size_t keep = std::min<std::size_t>(digits.size(), 17);
    const double lead = std::stod(digits.substr(0, keep));
    return make(lead, static_cast<std::int64_t>(digits.size() - keep));
}

double SciReal::mantissa_at(std::int64_t exp10) const {
    return mantissa_ * scale10(exp10_ - exp10);
}

double SciReal::to_double() const {
    return mantissa_ * scale10(exp10_);
}

double SciReal::ln() const {
    if (mantissa_ <= 0.0) throw DomainError("SciReal::ln of a non-positive value");
    return std::log(mantissa_) + static_cast<double>(exp10_) * std::log(10.0);
}

SciReal operator/(const SciReal& a, const SciReal& b) {
    if (b.is_zero()) throw DomainError("SciReal: division by zero");
    return SciReal::make(a.mantissa_ / b.mantissa_, a.exp10_ - b.exp10_);
}

SciReal operator+(const SciReal& a, const SciReal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const SciReal& big = a.exp10_ >= b.exp10_ ? a : b;
    const SciReal& small = a.exp10_ >= b.exp10_ ? b : a;
    const std::int64_t gap = big.exp10_ - small.exp10_;
    if (gap > 40) return big;
    return SciReal::make(big.mantissa_ + small.mantissa_ * scale10(-gap), big.exp10_);
}

std::partial_ordering operator<=>(const SciReal& a, const SciReal& b) {
    const SciReal diff = a - b;
    return diff.mantissa_ <=> 0.0;
}

std::string SciReal::to_string(int significant) const {
    if (is_zero()) return "0";
    // Leading zeros after the point are part of the band (0.0x), not precision.
    const int leading_zeros = std::fabs(mantissa_) < 0.1 ? 1 : 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*fe%lld", significant + leading_zeros, mantissa_,
                  static_cast<long long>(exp10_));
    return buf;
}

std::string SciReal::to_string_at(std::int64_t exp10, int decimals) const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*fe%lld", decimals, mantissa_at(exp10), static_cast<long long>(exp10));
    return buf;
}

double relative_difference(const SciReal& a, const SciReal& b) {
    const SciReal diff = a - b;
    if (b.is_zero()) return diff.is_zero() ? 0.0 : INFINITY;
    return std::fabs((diff / b).to_double());
}

}  // namespace largeprime
