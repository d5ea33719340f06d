#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "largeprime/error.hpp"
#include "largeprime/primality.hpp"
#include "largeprime/pseudolab.hpp"
#include "largeprime/random.hpp"
#include "oracles.hpp"

using namespace largeprime;

namespace {

using List = std::vector<std::uint64_t>;

const std::vector<bool>& small_primes() {
    static const auto table = oracle::sieve(20'000);
    return table;
}

bool odd_composite(std::uint64_t n) { return n > 1 && n % 2 == 1 && !small_primes()[n]; }

// Exhaustive census with the oracle's own powering, independent of the library.
LiarCensus brute_census(std::uint64_t n) {
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    LiarCensus c{n, n - 1, 0, 0, 0};
    for (std::uint64_t a = 1; a < n; ++a) {
        if (oracle::gcd(a, n) != 1) continue;
        c.fermat_liars += oracle::small_pow_mod(a, n - 1, n) == 1;
        const auto h = oracle::small_pow_mod(a, (n - 1) / 2, n);
        c.euler_liars += h == 1 || h == n - 1;
        auto x = oracle::small_pow_mod(a, d, n);
        bool strong = x == 1;
        for (unsigned i = 0; i < s; ++i, x = x * x % n) strong |= x == n - 1;
        c.strong_liars += strong;
    }
    return c;
}

}  // namespace

TEST_CASE("fermat_pseudoprimes to base 2") {
    CHECK(fermat_pseudoprimes(2, 600) == List{341, 561});
    CHECK(fermat_pseudoprimes(2, 2000) == List{341, 561, 645, 1105, 1387, 1729, 1905});
    CHECK(fermat_pseudoprimes(2, 10).empty());
    CHECK(fermat_pseudoprimes(2, 340).empty());
}

TEST_CASE("fermat_pseudoprimes agree with a direct scan") {
    for (std::uint64_t base : {2u, 3u, 5u, 6u, 10u}) {
        List expected;
        for (std::uint64_t n = 3; n <= 20'000; n += 2)
            if (odd_composite(n) && oracle::gcd(base, n) == 1 && oracle::small_pow_mod(base, n - 1, n) == 1)
                expected.push_back(n);
        CAPTURE(base);
        CHECK(fermat_pseudoprimes(base, 20'000) == expected);
    }
    CHECK_THROWS_AS(fermat_pseudoprimes(1, 100), DomainError);
    CHECK_THROWS_AS(fermat_pseudoprimes(2, kFermatScanCap + 1), RefusalError);
}

TEST_CASE("Carmichael numbers below 10^4") {
    const List seven{561, 1105, 1729, 2465, 2821, 6601, 8911};
    const auto found = carmichael_numbers(10'000);
    CHECK(found.size() == 7);
    CHECK(found == seven);
    CHECK(carmichael_numbers_korselt(10'000) == found);
    CHECK(carmichael_numbers(500).empty());
    CHECK(carmichael_numbers(2464).back() == 1729);
    CHECK(carmichael_numbers(2465).back() == 2465);
    CHECK_THROWS_AS(carmichael_numbers(kCarmichaelScanCap + 1), RefusalError);
    CHECK_THROWS_AS(carmichael_numbers_korselt(kCarmichaelScanCap + 1), RefusalError);
}

TEST_CASE("every Carmichael number passes every coprime base and still fails Miller-Rabin") {
    for (std::uint64_t n : carmichael_numbers(10'000)) {
        for (std::uint64_t a = 2; a < n; ++a)
            if (oracle::gcd(a, n) == 1) REQUIRE(oracle::small_pow_mod(a, n - 1, n) == 1);
        Rng rng(RngSeed{10});
        CHECK(miller_rabin(n, 10, rng).is_composite());
    }
}

TEST_CASE("Korselt agrees with the exhaustive definition up to 10^5") {
    CHECK(carmichael_numbers_korselt(100'000) == carmichael_numbers(100'000));
}

TEST_CASE("liar_census examples") {
    const auto c15 = liar_census(15);
    CHECK(c15.total_bases == 14);
    CHECK(c15.strong_liars == 2);
    CHECK(c15.euler_liars == 2);
    CHECK(c15.fermat_liars == 4);

    const auto c9 = liar_census(9);
    CHECK(c9.total_bases == 8);
    CHECK(c9.strong_liars == 2);
    CHECK(c9.strong_fraction() == .25);

    const auto c561 = liar_census(561);
    CHECK(c561.fermat_liars == oracle::euler_phi(561));
    CHECK(c561.fermat_liars == 320);
    CHECK(c561.euler_liars == 160);
    CHECK(c561.strong_liars == 10);

    const auto c1729 = liar_census(1729);
    CHECK(c1729.euler_liars == c1729.fermat_liars);
}

TEST_CASE("liar_census rejects primes, evens and oversized n") {
    CHECK_THROWS_AS(liar_census(13), DomainError);
    CHECK_THROWS_AS(liar_census(7919), DomainError);
    CHECK_THROWS_AS(liar_census(100), DomainError);
    CHECK_THROWS_AS(liar_census(1), DomainError);
    CHECK_THROWS_AS(liar_census(kCensusCap + 3), RefusalError);
}

TEST_CASE("census matches brute force and obeys the hierarchy and the quarter bound") {
    const auto all = liar_census_range(5, 5000);
    std::size_t expected_count = 0;
    for (std::uint64_t n = 5; n <= 5000; ++n) expected_count += odd_composite(n);
    REQUIRE(all.size() == expected_count);
    for (const auto& c : all) {
        CAPTURE(c.n);
        REQUIRE(c.total_bases == c.n - 1);
        REQUIRE(c.strong_liars >= 2);
        REQUIRE(c.strong_liars <= c.euler_liars);
        REQUIRE(c.euler_liars <= c.fermat_liars);
        if (c.n > 9) REQUIRE(c.strong_fraction() <= .25);
        if (c.n < 1500) {
            const auto b = brute_census(c.n);
            REQUIRE(c.fermat_liars == b.fermat_liars);
            REQUIRE(c.euler_liars == b.euler_liars);
            REQUIRE(c.strong_liars == b.strong_liars);
        }
    }
}

TEST_CASE("census agrees with the big-integer rounds") {
    for (std::uint64_t n : {21u, 91u, 341u, 561u, 1105u}) {
        const Natural nn(n);
        std::uint64_t fermat = 0, euler = 0, strong = 0;
        for (std::uint64_t a = 2; a <= n - 2; ++a) {
            fermat += fermat_round(nn, a).is_probable_prime();
            euler += euler_round(nn, a).is_probable_prime();
            strong += miller_rabin_round(nn, a).verdict.is_probable_prime();
        }
        // a = 1 and a = n - 1 are liars for all three tests
        const auto c = liar_census(n);
        CAPTURE(n);
        CHECK(c.fermat_liars == fermat + 2);
        CHECK(c.euler_liars == euler + 2);
        CHECK(c.strong_liars == strong + 2);
    }
}

TEST_CASE("sqrt_of_unity examples") {
    CHECK(sqrt_of_unity(15) == List{1, 4, 11, 14});
    CHECK(sqrt_of_unity(15, RootMethod::crt) == List{1, 4, 11, 14});
    CHECK(sqrt_of_unity(105).size() == 8);
    CHECK(sqrt_of_unity(2) == List{1});
    CHECK(sqrt_of_unity(8) == List{1, 3, 5, 7});
    for (std::uint64_t p : {3u, 5u, 7u, 101u, 7919u, 1'000'003u}) CHECK(sqrt_of_unity(p) == List{1, p - 1});
    CHECK_THROWS_AS(sqrt_of_unity(1), DomainError);
    CHECK_THROWS_AS(sqrt_of_unity(kSqrtOfUnityCap + 1), RefusalError);
}

TEST_CASE("sqrt_of_unity count is 2^omega for odd squarefree n") {
    for (std::uint64_t n = 3; n <= 10'000; n += 2) {
        const unsigned omega = oracle::omega_if_squarefree(n);
        if (omega == 0) continue;
        CAPTURE(n);
        REQUIRE(sqrt_of_unity(n).size() == (std::size_t{1} << omega));
    }
}

TEST_CASE("CRT and scan agree") {
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        CAPTURE(n);
        REQUIRE(sqrt_of_unity(n, RootMethod::crt) == sqrt_of_unity(n, RootMethod::scan));
    }
}

TEST_CASE("CRT handles n beyond the scan limit") {
    const std::uint64_t n = 3ull * 5 * 7 * 11 * 13 * 17 * 19 * 23;  // 111546435
    const auto roots = sqrt_of_unity(n);
    CHECK(roots.size() == 256);
    CHECK(std::is_sorted(roots.begin(), roots.end()));
    for (auto x : roots) REQUIRE(x * x % n == 1);
    CHECK(roots.front() == 1);
    CHECK(roots.back() == n - 1);

    const std::uint64_t q = 4ull * 9 * 25 * 49 * 11 * 13;  // 6306300, non-squarefree with a factor 4
    CHECK(sqrt_of_unity(q, RootMethod::crt).size() == 2ull * 2 * 2 * 2 * 2 * 2);
}

TEST_CASE("absolute Euler pseudoprimes") {
    CHECK(is_absolute_euler_pseudoprime(1729));
    CHECK(is_absolute_euler_pseudoprime(2465));
    CHECK_FALSE(is_absolute_euler_pseudoprime(561));
    CHECK_FALSE(is_absolute_euler_pseudoprime(341));
    CHECK_THROWS_AS(is_absolute_euler_pseudoprime(561 * 2), DomainError);
    CHECK_THROWS_AS(is_absolute_euler_pseudoprime(1009), DomainError);

    // every absolute Euler pseudoprime is a Carmichael number
    const auto carm = carmichael_numbers(20'000);
    for (std::uint64_t n = 9; n <= 20'000; n += 2) {
        if (!odd_composite(n)) continue;
        if (is_absolute_euler_pseudoprime(n)) REQUIRE(std::binary_search(carm.begin(), carm.end(), n));
    }
}

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(561) == List{3, 11, 17});
    CHECK(factorize(6306300) == List{2, 2, 3, 3, 5, 5, 7, 7, 11, 13});
    CHECK(factorize(999'999'937) == List{999'999'937});
    CHECK_THROWS_AS(factorize(0), DomainError);
    for (std::uint64_t n = 2; n <= 5000; ++n) {
        const auto f = factorize(n);
        REQUIRE(std::accumulate(f.begin(), f.end(), std::uint64_t{1}, std::multiplies<>()) == n);
        for (auto p : f) REQUIRE(small_primes()[p]);
    }
}
