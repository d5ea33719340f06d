#pragma once

#include "largeprime/natural.hpp"
#include "largeprime/random.hpp"
#include "largeprime/sci_real.hpp"

namespace largeprime {

// Composite-excluding filters applied before any primality test.
// The two flags are independent.
struct FilterPolicy {
    bool last_digit_filter = true;    // keep endings 1, 3, 7, 9
    bool digital_root_filter = true;  // drop digital roots 3, 6, 9

    static constexpr FilterPolicy none() { return {false, false}; }
    static constexpr FilterPolicy last_digit_only() { return {true, false}; }
    static constexpr FilterPolicy both() { return {true, true}; }

    friend bool operator==(const FilterPolicy&, const FilterPolicy&) = default;
};

struct Candidate {
    Natural n;
    unsigned digits = 0;
    unsigned digital_root = 0;
    unsigned last_digit = 0;
};

bool passes_filter(const Natural& n, FilterPolicy policy);

// Uniform over the d-digit integers that pass `policy`. Throws DomainError for d < 2.
Candidate random_candidate(unsigned digits, FilterPolicy policy, Rng& rng);

// Number of d-digit integers passing `policy`. Throws DomainError for d < 2.
SciReal pool_size(unsigned digits, FilterPolicy policy);

}  // namespace largeprime
