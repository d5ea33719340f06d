#include "largeprime/arith.hpp"

#include <utility>

namespace largeprime {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
    if (modulus < Natural(2u)) throw DomainError("mod_pow: modulus must be >= 2");

    mpz_srcptr m = modulus.mpz().get_mpz_t();
    mpz_srcptr e = exponent.mpz().get_mpz_t();

    mpz_class result = 1;
    mpz_class square;
    mpz_class scratch;
    mpz_mod(square.get_mpz_t(), base.mpz().get_mpz_t(), m);

    const std::size_t bits = exponent.bit_length();
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e, i)) {
            mpz_mul(scratch.get_mpz_t(), result.get_mpz_t(), square.get_mpz_t());
            mpz_mod(result.get_mpz_t(), scratch.get_mpz_t(), m);
        }
        if (i + 1 < bits) {
            mpz_mul(scratch.get_mpz_t(), square.get_mpz_t(), square.get_mpz_t());
            mpz_mod(square.get_mpz_t(), scratch.get_mpz_t(), m);
        }
    }
    // exponent 0 with modulus >= 2: result stays 1, already reduced.
    return Natural(std::move(result));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % modulus);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus < 2) throw DomainError("mod_pow: modulus must be >= 2");
    std::uint64_t result = 1;
    std::uint64_t square = base % modulus;
    while (exponent != 0) {
        if (exponent & 1) result = mul_mod(result, square, modulus);
        exponent >>= 1;
        if (exponent != 0) square = mul_mod(square, square, modulus);
    }
    return result;
}

BezoutResult gcd(const Natural& a, const Natural& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");

    // Invariant: old_r = old_s*a + old_t*b and r = s*a + t*b.
    Integer old_r = a.mpz(), r = b.mpz();
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    Integer q, tmp;
    while (r != 0) {
        mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        tmp = old_r - q * r; old_r = std::move(r); r = std::move(tmp);
        tmp = old_s - q * s; old_s = std::move(s); s = std::move(tmp);
        tmp = old_t - q * t; old_t = std::move(t); t = std::move(tmp);
    }
    return BezoutResult{Natural(std::move(old_r)), std::move(old_s), std::move(old_t)};
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

TwoAdicDecomposition decompose_pow2(const Natural& even) {
    if (even.is_zero() || even.is_odd()) throw DomainError("decompose_pow2: input must be even and >= 2");
    const auto s = static_cast<unsigned>(mpz_scan1(even.mpz().get_mpz_t(), 0));
    return TwoAdicDecomposition{s, even >> s};
}

unsigned digital_root(const Natural& n) {
    if (n.is_zero()) return 0;
    const auto r = static_cast<unsigned>(n.mod_u64(9));
    return r == 0 ? 9 : r;
}

}  // namespace largeprime
