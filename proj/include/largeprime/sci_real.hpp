#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "largeprime/natural.hpp"

namespace largeprime {

// mantissa * 10^exp10 for magnitudes far beyond double range (10^74 counts
// and beyond). Normalized so that 0.01 <= |mantissa| < 1, or mantissa == 0.
// Normalization only moves a mantissa that is outside that band, so a value
// built as (c, k) with c already in band keeps exponent k; this is how
// ".052037087 * 10^74" style figures are carried.
class SciReal {
public:
    SciReal() = default;

    static SciReal make(double mantissa, std::int64_t exp10);
    static SciReal from_double(double x) { return make(x, 0); }
    static SciReal from_natural(const Natural& n);
    static SciReal pow10(std::int64_t e) { return make(1.0, e); }

    double mantissa() const noexcept { return mantissa_; }
    std::int64_t exp10() const noexcept { return exp10_; }

    bool is_zero() const noexcept { return mantissa_ == 0.0; }
    bool is_negative() const noexcept { return mantissa_ < 0.0; }

    // Mantissa relative to a caller-chosen exponent: value / 10^exp10.
    double mantissa_at(std::int64_t exp10) const;

    // Overflows to +-inf beyond double range.
    double to_double() const;

    // Natural logarithm of the magnitude; requires a positive value.
    double ln() const;

    SciReal operator-() const { return SciReal(-mantissa_, exp10_); }
    friend SciReal operator*(const SciReal& a, const SciReal& b) { return make(a.mantissa_ * b.mantissa_, a.exp10_ + b.exp10_); }
    friend SciReal operator/(const SciReal& a, const SciReal& b);
    friend SciReal operator*(const SciReal& a, double k) { return make(a.mantissa_ * k, a.exp10_); }
    friend SciReal operator/(const SciReal& a, double k) { return make(a.mantissa_ / k, a.exp10_); }
    friend SciReal operator+(const SciReal& a, const SciReal& b);
    friend SciReal operator-(const SciReal& a, const SciReal& b) { return a + (-b); }

    friend std::partial_ordering operator<=>(const SciReal& a, const SciReal& b);
    friend bool operator==(const SciReal& a, const SciReal& b) { return (a <=> b) == 0; }

    // "0.052037087e74" with `significant` digits after the leading zeros.
    std::string to_string(int significant = 10) const;

    // Same value written against a fixed exponent: "<mantissa_at(e)>e<e>".
    std::string to_string_at(std::int64_t exp10, int decimals = 11) const;

private:
    SciReal(double m, std::int64_t e) : mantissa_(m), exp10_(e) {}

    double mantissa_ = 0.0;
    std::int64_t exp10_ = 0;
};

// |a - b| / |b|.
double relative_difference(const SciReal& a, const SciReal& b);

}  // namespace largeprime
