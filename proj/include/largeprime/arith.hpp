#pragma once

#include <cstdint>

#include "largeprime/natural.hpp"

namespace largeprime {

// even = 2^s * odd_part, odd_part odd. For Miller-Rabin this is n - 1.
struct TwoAdicDecomposition {
    unsigned s = 0;
    Natural odd_part;
};

// g = s*a + t*b. Any valid pair is returned; they are not unique.
struct BezoutResult {
    Natural g;
    Integer s;
    Integer t;
};

// base^exponent mod modulus by right-to-left square-and-multiply.
// Throws DomainError when modulus < 2.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

// Same contract for word-sized operands; used by the enumeration sweeps.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) noexcept;

// Extended Euclid. Throws DomainError when a = b = 0.
BezoutResult gcd(const Natural& a, const Natural& b);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

// Throws DomainError for zero or odd input.
TwoAdicDecomposition decompose_pow2(const Natural& even);

// 0 for n = 0, 9 for nonzero multiples of 9, n mod 9 otherwise.
unsigned digital_root(const Natural& n);

}  // namespace largeprime
