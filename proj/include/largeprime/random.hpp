#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "largeprime/natural.hpp"

namespace largeprime {

struct RngSeed {
    std::uint64_t seed = 0;
};

// Random stream used for candidates and test bases.
//
// Seeded streams run std::mt19937_64, whose output sequence is fixed by the
// standard, and all range reduction is done here rather than through
// std::uniform_int_distribution, so a seed yields the same draws on every
// platform. The entropy stream reads std::random_device on every draw and is
// meant for real key-candidate generation, not for tests.
class Rng {
public:
    explicit Rng(RngSeed seed);
    static Rng from_entropy();

    Rng(Rng&&) noexcept;
    Rng& operator=(Rng&&) noexcept;
    ~Rng();

    bool is_deterministic() const noexcept { return !device_; }

    std::uint64_t next();

    // Uniform in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);
    Natural below(const Natural& bound);

    // Uniform in [lo, hi], lo <= hi.
    Natural in_range(const Natural& lo, const Natural& hi);

private:
    Rng() = default;

    std::mt19937_64 engine_;
    std::unique_ptr<std::random_device> device_;
};

// Stream for item `index` of a run seeded with `master`.
inline RngSeed derive_stream(RngSeed master, std::uint64_t index) noexcept {
    return RngSeed{master.seed ^ index};
}

}  // namespace largeprime
