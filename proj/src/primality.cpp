#include "largeprime/primality.hpp"

#include <string>

namespace largeprime {

namespace {

void require_round_args(const Natural& n, const Natural& a) {
    if (n.is_even() || n < Natural(5u))
        throw DomainError("primality round: n must be odd and >= 5, got " + n.to_string());
    if (a < Natural(2u) || a > n - Natural(2u))
        throw DomainError("primality round: base " + a.to_string() + " outside [2, n-2]");
}

// Nontrivial common factor of a and n, if any.
std::optional<Evidence> shared_factor(const Natural& n, const Natural& a) {
    Natural g = gcd(a, n).g;
    if (g == Natural(1u)) return std::nullopt;
    return Evidence{Evidence::Kind::factor, std::move(g)};
}

TestVerdict composite_by(const Natural& n, const Natural& a) {
    auto evidence = shared_factor(n, a);
    if (!evidence) evidence = Evidence{Evidence::Kind::witness, a};
    return TestVerdict{Outcome::composite, std::move(evidence), 0};
}

TestVerdict probable_prime() {
    return TestVerdict{Outcome::probable_prime, std::nullopt, 1};
}

template <typename Round>
TestVerdict run_rounds(const Natural& n, unsigned rounds, Rng& rng, Round round) {
    if (n.is_even() || n < Natural(5u))
        throw DomainError("primality test: n must be odd and >= 5, got " + n.to_string());
    if (rounds < 1) throw DomainError("primality test: rounds must be >= 1");

    const Natural lo(2u);
    const Natural hi = n - Natural(2u);
    for (unsigned i = 0; i < rounds; ++i) {
        TestVerdict v = round(n, rng.in_range(lo, hi));
        if (v.is_composite()) {
            v.rounds_survived = i;
            return v;
        }
    }
    return TestVerdict{Outcome::probable_prime, std::nullopt, rounds};
}

}  // namespace

std::string_view to_string(Outcome outcome) {
    return outcome == Outcome::composite ? "COMPOSITE" : "PRIME";
}

TestVerdict fermat_round(const Natural& n, const Natural& a) {
    require_round_args(n, a);
    if (auto factor = shared_factor(n, a)) return TestVerdict{Outcome::composite, std::move(factor), 0};
    if (mod_pow(a, n - Natural(1u), n) == Natural(1u)) return probable_prime();
    return composite_by(n, a);
}

TestVerdict euler_round(const Natural& n, const Natural& a) {
    require_round_args(n, a);
    const Natural r = mod_pow(a, (n - Natural(1u)) >> 1, n);
    if (r == Natural(1u) || r == n - Natural(1u)) return probable_prime();
    return composite_by(n, a);
}

MillerRabinRound miller_rabin_round(const Natural& n, const Natural& a) {
    require_round_args(n, a);
    const Natural minus_one = n - Natural(1u);

    MRTranscript t{decompose_pow2(minus_one), {}};
    t.chain.reserve(t.decomposition.s + 1);
    t.chain.push_back(mod_pow(a, t.decomposition.odd_part, n));
    for (unsigned i = 1; i <= t.decomposition.s; ++i) {
        const Natural& prev = t.chain.back();
        t.chain.push_back(prev * prev % n);
    }

    bool liar = t.chain[0] == Natural(1u);
    for (unsigned i = 0; i < t.decomposition.s && !liar; ++i) liar = t.chain[i] == minus_one;

    return MillerRabinRound{liar ? probable_prime() : composite_by(n, a), std::move(t)};
}

TestVerdict fermat_test(const Natural& n, unsigned rounds, Rng& rng) {
    return run_rounds(n, rounds, rng, fermat_round);
}

TestVerdict euler_test(const Natural& n, unsigned rounds, Rng& rng) {
    return run_rounds(n, rounds, rng, euler_round);
}

TestVerdict miller_rabin(const Natural& n, unsigned rounds, Rng& rng) {
    return run_rounds(n, rounds, rng,
                      [](const Natural& m, const Natural& a) { return miller_rabin_round(m, a).verdict; });
}

TrialDivisionResult trial_division(std::uint64_t n, std::uint64_t bound) {
    if (n > bound)
        throw RefusalError("trial division refused: " + std::to_string(n) + " exceeds oracle bound " +
                           std::to_string(bound));
    if (n == 0) throw DomainError("trial division of 0");
    using Kind = TrialDivisionResult::Kind;
    if (n == 1) return {Kind::unit, 0};
    for (std::uint64_t p : {2u, 3u}) {
        if (n % p == 0) return n == p ? TrialDivisionResult{Kind::prime, 0} : TrialDivisionResult{Kind::composite, p};
    }
    for (std::uint64_t f = 5; f <= n / f; f += 6) {
        if (n % f == 0) return {Kind::composite, f};
        if (n % (f + 2) == 0) return {Kind::composite, f + 2};
    }
    return {Kind::prime, 0};
}

TrialDivisionResult trial_division(const Natural& n, std::uint64_t bound) {
    if (!n.fits_u64() || n.to_u64() > bound)
        throw RefusalError("trial division refused: " + n.to_string() + " exceeds oracle bound " +
                           std::to_string(bound));
    return trial_division(n.to_u64(), bound);
}

}  // namespace largeprime
