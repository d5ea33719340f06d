#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "largeprime/error.hpp"

namespace largeprime {

// Signed arbitrary-precision integer, used only where negative values are
// meaningful (Bezout coefficients).
using Integer = mpz_class;

// Non-negative integer of unbounded magnitude.
class Natural {
public:
    Natural() = default;

    template <std::unsigned_integral T>
    Natural(T v) { assign_u64(static_cast<std::uint64_t>(v)); }

    template <std::signed_integral T>
    Natural(T v) {
        if (v < 0) throw DomainError("Natural: negative value");
        assign_u64(static_cast<std::uint64_t>(v));
    }

    explicit Natural(mpz_class v);

    // Decimal digits only; throws DomainError otherwise.
    static Natural parse(std::string_view decimal);
    static Natural pow10(unsigned exponent);

    const mpz_class& mpz() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
    bool is_even() const noexcept { return !is_odd(); }

    bool fits_u64() const noexcept;
    // Throws RefusalError if the value does not fit.
    std::uint64_t to_u64() const;

    std::size_t bit_length() const noexcept;
    std::size_t digit_count() const;
    std::string to_string() const;

    // Subtraction is checked: a - b with b > a throws DomainError.
    friend Natural operator+(const Natural& a, const Natural& b) { return Natural(mpz_class(a.value_ + b.value_), Trusted{}); }
    friend Natural operator-(const Natural& a, const Natural& b);
    friend Natural operator*(const Natural& a, const Natural& b) { return Natural(mpz_class(a.value_ * b.value_), Trusted{}); }
    friend Natural operator/(const Natural& a, const Natural& b);
    friend Natural operator%(const Natural& a, const Natural& b);
    friend Natural operator>>(const Natural& a, unsigned shift) { return Natural(mpz_class(a.value_ >> shift), Trusted{}); }
    friend Natural operator<<(const Natural& a, unsigned shift) { return Natural(mpz_class(a.value_ << shift), Trusted{}); }

    std::uint64_t mod_u64(std::uint64_t m) const;

    friend bool operator==(const Natural& a, const Natural& b) noexcept { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    struct Trusted {};
    Natural(mpz_class v, Trusted) : value_(std::move(v)) {}
    void assign_u64(std::uint64_t v);

    mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

}  // namespace largeprime
