#include "largeprime/sampling.hpp"

#include <array>
#include <string>

#include "largeprime/arith.hpp"

namespace largeprime {

namespace {

constexpr std::array<char, 4> kCoprimeEndings{'1', '3', '7', '9'};

bool is_multiple_of_three_root(unsigned dr) { return dr == 3 || dr == 6 || dr == 9; }

void require_digits(unsigned digits) {
    if (digits < 2) throw DomainError("digit count must be >= 2");
}

}  // namespace

bool passes_filter(const Natural& n, FilterPolicy policy) {
    if (policy.last_digit_filter) {
        const auto last = n.mod_u64(10);
        if (last != 1 && last != 3 && last != 7 && last != 9) return false;
    }
    if (policy.digital_root_filter && is_multiple_of_three_root(digital_root(n))) return false;
    return true;
}

Candidate random_candidate(unsigned digits, FilterPolicy policy, Rng& rng) {
    require_digits(digits);
    std::string text(digits, '0');
    for (;;) {
        text.front() = static_cast<char>('1' + rng.below(9));
        for (std::size_t i = 1; i + 1 < text.size(); ++i)
            text[i] = static_cast<char>('0' + rng.below(10));
        text.back() = policy.last_digit_filter ? kCoprimeEndings[rng.below(4)]
                                               : static_cast<char>('0' + rng.below(10));

        Natural n = Natural::parse(text);
        const unsigned dr = digital_root(n);
        if (policy.digital_root_filter && is_multiple_of_three_root(dr)) continue;
        return Candidate{std::move(n), digits, dr, static_cast<unsigned>(text.back() - '0')};
    }
}

SciReal pool_size(unsigned digits, FilterPolicy policy) {
    require_digits(digits);
    const auto e = static_cast<std::int64_t>(digits) - 2;
    double per_hundred = 90.0;  // 9 * 10^(d-1) = 90 * 10^(d-2)
    if (policy.last_digit_filter) per_hundred = 36.0;
    if (policy.digital_root_filter) per_hundred = per_hundred * 2.0 / 3.0;
    return SciReal::make(per_hundred, e);
}

}  // namespace largeprime
