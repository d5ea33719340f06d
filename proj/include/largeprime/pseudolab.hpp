#pragma once

#include <cstdint>
#include <vector>

namespace largeprime {

// Desk-scale brute-force enumeration of pseudoprimes and liars. All routines
// work on word-sized integers and refuse inputs above their caps.

inline constexpr std::uint64_t kFermatScanCap = 10'000'000;
inline constexpr std::uint64_t kCarmichaelScanCap = 1'000'000;
inline constexpr std::uint64_t kCensusCap = 1'000'000;
inline constexpr std::uint64_t kSqrtOfUnityCap = 1'000'000'000;
inline constexpr std::uint64_t kSqrtOfUnityScanLimit = 1'000'000;

// Per-base classification of every a in [1, n-1] for an odd composite n.
// Bases sharing a factor with n are never liars but stay in total_bases.
struct LiarCensus {
    std::uint64_t n = 0;
    std::uint64_t total_bases = 0;
    std::uint64_t fermat_liars = 0;
    std::uint64_t euler_liars = 0;
    std::uint64_t strong_liars = 0;

    double strong_fraction() const { return static_cast<double>(strong_liars) / static_cast<double>(total_bases); }
};

// Odd composites n <= limit, coprime to `base`, with base^(n-1) = 1 (mod n).
std::vector<std::uint64_t> fermat_pseudoprimes(std::uint64_t base, std::uint64_t limit);

// Composites n <= limit passing the Fermat condition for every coprime base,
// checked exhaustively.
std::vector<std::uint64_t> carmichael_numbers(std::uint64_t limit);

// Same set via Korselt's criterion: squarefree, and p - 1 | n - 1 for each prime p | n.
std::vector<std::uint64_t> carmichael_numbers_korselt(std::uint64_t limit);

// Throws DomainError for even or prime n, RefusalError above kCensusCap.
LiarCensus liar_census(std::uint64_t n);

// Census of every odd composite in [from, to].
std::vector<LiarCensus> liar_census_range(std::uint64_t from, std::uint64_t to);

// x in [1, n-1] with x^2 = 1 (mod n), ascending.
enum class RootMethod { automatic, scan, crt };
std::vector<std::uint64_t> sqrt_of_unity(std::uint64_t n, RootMethod method = RootMethod::automatic);

// a^((n-1)/2) = +-1 (mod n) for every a coprime to n. Odd composite n <= 10^6.
bool is_absolute_euler_pseudoprime(std::uint64_t n);

// Prime factorization by trial division, ascending, with multiplicity.
std::vector<std::uint64_t> factorize(std::uint64_t n);

}  // namespace largeprime
