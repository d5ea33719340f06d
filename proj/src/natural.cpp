#include "largeprime/natural.hpp"

#include <algorithm>
#include <ostream>

namespace largeprime {

Natural::Natural(mpz_class v) : value_(std::move(v)) {
    if (sgn(value_) < 0) throw DomainError("Natural: negative value");
}

void Natural::assign_u64(std::uint64_t v) {
    mpz_import(value_.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
}

Natural Natural::parse(std::string_view decimal) {
    if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw DomainError("not a non-negative decimal integer: '" + std::string(decimal) + "'");
    return Natural(mpz_class(std::string(decimal), 10), Trusted{});
}

Natural Natural::pow10(unsigned exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return Natural(std::move(r), Trusted{});
}

bool Natural::fits_u64() const noexcept {
    return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw RefusalError("value does not fit in 64 bits: " + to_string());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, value_.get_mpz_t());
    return out;
}

std::size_t Natural::bit_length() const noexcept {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t Natural::digit_count() const {
    return to_string().size();
}

std::string Natural::to_string() const {
    return value_.get_str(10);
}

Natural operator-(const Natural& a, const Natural& b) {
    if (a < b) throw DomainError("Natural subtraction underflow");
    return Natural(mpz_class(a.value_ - b.value_), Natural::Trusted{});
}

Natural operator/(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Natural(std::move(q), Natural::Trusted{});
}

Natural operator%(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Natural(std::move(r), Natural::Trusted{});
}

std::uint64_t Natural::mod_u64(std::uint64_t m) const {
    if (m == 0) throw DomainError("division by zero");
    if (m <= 0xffffffffULL) return mpz_fdiv_ui(value_.get_mpz_t(), static_cast<unsigned long>(m));
    return (*this % Natural(m)).to_u64();
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.to_string();
}

}  // namespace largeprime
