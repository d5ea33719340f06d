#include "largeprime/pseudolab.hpp"

#include <algorithm>
#include <string>

#include "largeprime/arith.hpp"
#include "largeprime/error.hpp"
#include "largeprime/primality.hpp"

namespace largeprime {

namespace {

void require_cap(std::uint64_t value, std::uint64_t cap, const char* what) {
    if (value > cap)
        throw RefusalError(std::string(what) + ": " + std::to_string(value) + " exceeds desk-scale cap " +
                           std::to_string(cap));
}

// composite[i] for 0 <= i <= limit; 0 and 1 are neither.
std::vector<bool> composite_table(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return composite;
}

void require_odd_composite(std::uint64_t n, const char* what) {
    if (n % 2 == 0 || n < 9) throw DomainError(std::string(what) + ": n must be an odd composite");
    if (trial_division(n).is_prime()) throw DomainError(std::string(what) + ": " + std::to_string(n) + " is prime");
}

bool fermat_for_all_coprime(std::uint64_t n) {
    for (std::uint64_t a = 2; a < n; ++a) {
        if (gcd_u64(a, n) != 1) continue;
        if (mod_pow(a, n - 1, n) != 1) return false;
    }
    return true;
}

// Strong-liar test on the squaring chain of a^(n-1).
bool is_strong_liar(std::uint64_t a, std::uint64_t n, unsigned s, std::uint64_t odd_part) {
    std::uint64_t b = mod_pow(a, odd_part, n);
    if (b == 1 || b == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        b = mul_mod(b, b, n);
        if (b == n - 1) return true;
    }
    return false;
}

std::vector<std::uint64_t> roots_by_scan(std::uint64_t n) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 1; x < n; ++x)
        if (mul_mod(x, x, n) == 1) roots.push_back(x);
    return roots;
}

// Roots of x^2 = 1 modulo p^e.
std::vector<std::uint64_t> roots_mod_prime_power(std::uint64_t p, unsigned e, std::uint64_t pe) {
    if (p != 2) return {1, pe - 1};
    if (e == 1) return {1};
    if (e == 2) return {1, 3};
    return {1, pe / 2 - 1, pe / 2 + 1, pe - 1};
}

// x mod m1 = r1, x mod m2 = r2 with gcd(m1, m2) = 1.
std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
    const auto bz = gcd(Natural(m1), Natural(m2));
    mpz_class inv = bz.s % mpz_class(static_cast<unsigned long>(m2));  // m1^-1 mod m2
    if (inv < 0) inv += static_cast<unsigned long>(m2);
    const std::uint64_t inv_u = Natural(inv).to_u64();
    const std::uint64_t diff = (r2 + m2 - r1 % m2) % m2;
    const std::uint64_t k = mul_mod(diff, inv_u, m2);
    return r1 + m1 * k;
}

std::vector<std::uint64_t> roots_by_crt(std::uint64_t n) {
    std::vector<std::uint64_t> roots{0};  // residues modulo `modulus`, starting from modulus 1
    std::uint64_t modulus = 1;
    const auto primes = factorize(n);
    for (std::size_t i = 0; i < primes.size();) {
        const std::uint64_t p = primes[i];
        unsigned e = 0;
        std::uint64_t pe = 1;
        for (; i < primes.size() && primes[i] == p; ++i, ++e) pe *= p;

        std::vector<std::uint64_t> next;
        for (std::uint64_t r : roots)
            for (std::uint64_t q : roots_mod_prime_power(p, e, pe)) next.push_back(crt_pair(r, modulus, q, pe));
        roots = std::move(next);
        modulus *= pe;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::vector<std::uint64_t> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize(0)");
    std::vector<std::uint64_t> out;
    while (n > 1) {
        const auto r = trial_division(n, UINT64_MAX);
        const std::uint64_t p = r.is_prime() ? n : r.smallest_factor;
        out.push_back(p);
        n /= p;
    }
    return out;
}

std::vector<std::uint64_t> fermat_pseudoprimes(std::uint64_t base, std::uint64_t limit) {
    if (base < 2) throw DomainError("fermat_pseudoprimes: base must be >= 2");
    require_cap(limit, kFermatScanCap, "fermat_pseudoprimes");
    std::vector<std::uint64_t> out;
    if (limit < 9) return out;
    const auto composite = composite_table(limit);
    for (std::uint64_t n = 9; n <= limit; n += 2) {
        if (!composite[n] || gcd_u64(base, n) != 1) continue;
        if (mod_pow(base, n - 1, n) == 1) out.push_back(n);
    }
    return out;
}

std::vector<std::uint64_t> carmichael_numbers(std::uint64_t limit) {
    require_cap(limit, kCarmichaelScanCap, "carmichael_numbers");
    std::vector<std::uint64_t> out;
    if (limit < 4) return out;
    const auto composite = composite_table(limit);
    for (std::uint64_t n = 4; n <= limit; ++n) {
        if (composite[n] && fermat_for_all_coprime(n)) out.push_back(n);
    }
    return out;
}

std::vector<std::uint64_t> carmichael_numbers_korselt(std::uint64_t limit) {
    require_cap(limit, kCarmichaelScanCap, "carmichael_numbers_korselt");
    std::vector<std::uint64_t> out;
    if (limit < 4) return out;
    const auto composite = composite_table(limit);
    for (std::uint64_t n = 4; n <= limit; ++n) {
        if (!composite[n]) continue;
        const auto primes = factorize(n);
        const bool squarefree = std::adjacent_find(primes.begin(), primes.end()) == primes.end();
        if (squarefree && std::all_of(primes.begin(), primes.end(), [n](std::uint64_t p) { return (n - 1) % (p - 1) == 0; }))
            out.push_back(n);
    }
    return out;
}

LiarCensus liar_census(std::uint64_t n) {
    require_cap(n, kCensusCap, "liar_census");
    require_odd_composite(n, "liar_census");

    const auto dec = decompose_pow2(Natural(n - 1));
    const std::uint64_t odd_part = dec.odd_part.to_u64();
    const std::uint64_t half = (n - 1) / 2;

    LiarCensus c{n, n - 1, 0, 0, 0};
    for (std::uint64_t a = 1; a < n; ++a) {
        if (gcd_u64(a, n) != 1) continue;
        if (mod_pow(a, n - 1, n) == 1) ++c.fermat_liars;
        const std::uint64_t e = mod_pow(a, half, n);
        if (e == 1 || e == n - 1) ++c.euler_liars;
        if (is_strong_liar(a, n, dec.s, odd_part)) ++c.strong_liars;
    }
    return c;
}

std::vector<LiarCensus> liar_census_range(std::uint64_t from, std::uint64_t to) {
    require_cap(to, kCensusCap, "liar_census_range");
    std::vector<LiarCensus> out;
    if (to < 9) return out;
    const auto composite = composite_table(to);
    for (std::uint64_t n = std::max<std::uint64_t>(from, 9) | 1; n <= to; n += 2) {
        if (composite[n]) out.push_back(liar_census(n));
    }
    return out;
}

std::vector<std::uint64_t> sqrt_of_unity(std::uint64_t n, RootMethod method) {
    if (n < 2) throw DomainError("sqrt_of_unity: n must be >= 2");
    require_cap(n, kSqrtOfUnityCap, "sqrt_of_unity");
    if (method == RootMethod::automatic) method = n <= kSqrtOfUnityScanLimit ? RootMethod::scan : RootMethod::crt;
    return method == RootMethod::scan ? roots_by_scan(n) : roots_by_crt(n);
}

bool is_absolute_euler_pseudoprime(std::uint64_t n) {
    require_cap(n, kCensusCap, "is_absolute_euler_pseudoprime");
    require_odd_composite(n, "is_absolute_euler_pseudoprime");
    const std::uint64_t half = (n - 1) / 2;
    for (std::uint64_t a = 2; a < n; ++a) {
        if (gcd_u64(a, n) != 1) continue;
        const std::uint64_t e = mod_pow(a, half, n);
        if (e != 1 && e != n - 1) return false;
    }
    return true;
}

}  // namespace largeprime
