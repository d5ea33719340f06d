#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "largeprime/arith.hpp"
#include "largeprime/natural.hpp"
#include "largeprime/random.hpp"

namespace largeprime {

enum class Outcome { composite, probable_prime };

std::string_view to_string(Outcome outcome);

// Why a round declared n composite.
struct Evidence {
    enum class Kind { witness, factor };
    Kind kind = Kind::witness;
    Natural value;  // the witness base, or a nontrivial factor of n

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

// Composite verdicts are always correct and always carry evidence.
struct TestVerdict {
    Outcome outcome = Outcome::probable_prime;
    std::optional<Evidence> evidence;
    unsigned rounds_survived = 0;

    bool is_composite() const noexcept { return outcome == Outcome::composite; }
    bool is_probable_prime() const noexcept { return outcome == Outcome::probable_prime; }
};

// chain[0] = a^odd_part mod n, chain[i] = chain[i-1]^2 mod n, chain[s] = a^(n-1) mod n.
struct MRTranscript {
    TwoAdicDecomposition decomposition;
    std::vector<Natural> chain;
};

struct MillerRabinRound {
    TestVerdict verdict;
    MRTranscript transcript;
};

// Single rounds. All require n odd, n >= 5 and 2 <= a <= n - 2, and throw
// DomainError otherwise. A base sharing a factor with n yields Composite
// with that factor as evidence.

// Probable prime iff a^(n-1) = 1 (mod n).
TestVerdict fermat_round(const Natural& n, const Natural& a);

// Probable prime iff a^((n-1)/2) = +-1 (mod n).
TestVerdict euler_round(const Natural& n, const Natural& a);

// Probable prime iff chain[0] in {1, n-1} or chain[i] = n-1 for some i < s.
MillerRabinRound miller_rabin_round(const Natural& n, const Natural& a);

// Multi-round drivers with independent uniform bases in [2, n-2]. They stop at
// the first composite round; rounds_survived counts the rounds passed before it.
TestVerdict fermat_test(const Natural& n, unsigned rounds, Rng& rng);
TestVerdict euler_test(const Natural& n, unsigned rounds, Rng& rng);
TestVerdict miller_rabin(const Natural& n, unsigned rounds, Rng& rng);

// Exact oracle by trial division.
inline constexpr std::uint64_t kDefaultOracleBound = 1'000'000'000'000ULL;

struct TrialDivisionResult {
    enum class Kind { unit, prime, composite };
    Kind kind = Kind::unit;
    std::uint64_t smallest_factor = 0;  // set for composite

    bool is_prime() const noexcept { return kind == Kind::prime; }
    bool is_composite() const noexcept { return kind == Kind::composite; }
};

// Divides by 2, 3, then 6k +- 1 up to sqrt(n). Throws RefusalError above
// `bound` and DomainError for n = 0.
TrialDivisionResult trial_division(const Natural& n, std::uint64_t bound = kDefaultOracleBound);
TrialDivisionResult trial_division(std::uint64_t n, std::uint64_t bound = kDefaultOracleBound);

}  // namespace largeprime
