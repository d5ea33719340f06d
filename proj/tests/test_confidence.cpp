#include <doctest.h>

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "largeprime/confidence.hpp"
#include "largeprime/error.hpp"

using namespace largeprime;

namespace {

// Exact rational evaluation of the same quantities; p given as a decimal string.
struct Exact {
    mpq_class ratio, lower, posterior;
};

Exact exact(const std::string& p_decimal, unsigned m) {
    const auto dot = p_decimal.find('.');
    const std::string digits = p_decimal.substr(dot + 1);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, digits.size());
    mpq_class p(mpz_class(digits, 10), den);
    p.canonicalize();
    mpz_class four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
    const mpq_class q = 1 - p;
    Exact e;
    e.ratio = q / p;
    e.lower = 1 - e.ratio / four_m;
    e.posterior = p / (p + q / four_m);
    return e;
}

}  // namespace

TEST_CASE("bayes_confidence matches exact rational arithmetic") {
    for (const char* p : {".043364243", ".005781899", ".0216821194", ".0144547463", ".5", ".9"}) {
        for (unsigned m = 1; m <= 30; ++m) {
            const auto r = bayes_confidence(std::stod(p), m);
            const auto e = exact(p, m);
            CAPTURE(p);
            CAPTURE(m);
            CHECK(r.ratio == doctest::Approx(e.ratio.get_d()).epsilon(1e-14));
            CHECK(r.lower_bound == doctest::Approx(e.lower.get_d()).epsilon(1e-12));
            CHECK(r.exact_posterior == doctest::Approx(e.posterior.get_d()).epsilon(1e-14));
            CHECK(r.prior_p + r.prior_c == 1.0);
            CHECK(r.rounds == m);
        }
    }
}

TEST_CASE("bayes_confidence examples") {
    const auto four = bayes_confidence(.043364243, 4);
    CHECK(four.ratio == doctest::Approx(22.0604740408).epsilon(1e-10));
    CHECK(four.lower_bound == doctest::Approx(.9138262733).epsilon(1e-9));
    CHECK(std::abs(bayes_confidence(.043364243, 10).lower_bound - .999978) <= 5e-6);

    const auto small = bayes_confidence(.005781899, 4);
    CHECK(small.ratio == doctest::Approx(171.9535573).epsilon(1e-9));
    CHECK(std::abs(small.lower_bound - .3283064) <= 1e-5);

    const auto half = bayes_confidence(.5, 1);
    CHECK(half.ratio == 1.0);
    CHECK(half.slack == .25);
    CHECK(half.lower_bound == .75);
    CHECK(half.exact_posterior == doctest::Approx(.8));
}

TEST_CASE("lower bound goes negative for tiny priors and few rounds") {
    const auto r = bayes_confidence(.005781899, 1);
    CHECK(r.lower_bound < 0.0);
    CHECK(r.exact_posterior > 0.0);
    CHECK(r.exact_posterior < 1.0);
}

TEST_CASE("bayes_confidence rejects bad input") {
    CHECK_THROWS_AS(bayes_confidence(0.0, 4), DomainError);
    CHECK_THROWS_AS(bayes_confidence(1.0, 4), DomainError);
    CHECK_THROWS_AS(bayes_confidence(-.1, 4), DomainError);
    CHECK_THROWS_AS(bayes_confidence(std::nan(""), 4), DomainError);
    CHECK_THROWS_AS(bayes_confidence(.5, 0), DomainError);
}

TEST_CASE("monotone in rounds and in prior") {
    const double priors[] = {1e-6, .001, .005781899, .0216821194, .043364243, .1, .3, .5, .7, .95};
    for (double p : priors) {
        for (unsigned m = 1; m <= 30; ++m) {
            const auto r = bayes_confidence(p, m);
            const auto next = bayes_confidence(p, m + 1);
            CHECK(next.slack < r.slack);
            // 1 - slack stops moving in double once slack drops below half an ulp of 1
            if (r.slack > 1e-15) CHECK(next.lower_bound > r.lower_bound);
            CHECK(r.lower_bound <= r.exact_posterior + 0x1p-52);
            if (r.slack > 1e-12) CHECK(r.exact_posterior < 1.0);
        }
    }
    for (unsigned m = 1; m <= 30; ++m) {
        for (std::size_t i = 0; i + 1 < std::size(priors); ++i) {
            const auto lo = bayes_confidence(priors[i], m);
            const auto hi = bayes_confidence(priors[i + 1], m);
            if (lo.slack > 1e-15) CHECK(hi.lower_bound > lo.lower_bound);
            CHECK(hi.exact_posterior >= lo.exact_posterior);
        }
    }
}

TEST_CASE("rounds_for_confidence examples") {
    CHECK(rounds_for_confidence(.043364243, .9) == 4);
    CHECK(rounds_for_confidence(.043364243, .999978) == 10);
    CHECK(rounds_for_confidence(.5, .75) == 1);
    CHECK(rounds_for_confidence(.9, .1) == 1);
}

TEST_CASE("rounds_for_confidence is the smallest sufficient m") {
    for (double p : {1e-6, .005781899, .0216821194, .043364243, .2, .5, .8}) {
        for (double t : {.1, .5, .75, .9, .99, .999, .999978, .999999, 1 - 1e-12}) {
            const unsigned m = rounds_for_confidence(p, t);
            CAPTURE(p);
            CAPTURE(t);
            CHECK(bayes_confidence(p, m).lower_bound >= t);
            if (m >= 2) CHECK(bayes_confidence(p, m - 1).lower_bound < t);
            // closed form ceil(log4(ratio / (1 - t))), away from exact ties
            const double closed = std::ceil(std::log((1 - p) / p / (1 - t)) / std::log(4.0));
            if (closed >= 1.0 && std::abs(closed - std::log((1 - p) / p / (1 - t)) / std::log(4.0)) > 1e-9)
                CHECK(m == static_cast<unsigned>(closed));
        }
    }
}

TEST_CASE("rounds_for_confidence rejects bad input") {
    CHECK_THROWS_AS(rounds_for_confidence(0.0, .9), DomainError);
    CHECK_THROWS_AS(rounds_for_confidence(.5, 1.0), DomainError);
    CHECK_THROWS_AS(rounds_for_confidence(.5, 0.0), DomainError);
}
