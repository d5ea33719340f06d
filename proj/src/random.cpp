#include "largeprime/random.hpp"

#include <vector>

namespace largeprime {

Rng::Rng(RngSeed seed) : engine_(seed.seed) {}

Rng Rng::from_entropy() {
    Rng rng;
    rng.device_ = std::make_unique<std::random_device>();
    return rng;
}

Rng::Rng(Rng&&) noexcept = default;
Rng& Rng::operator=(Rng&&) noexcept = default;
Rng::~Rng() = default;

std::uint64_t Rng::next() {
    if (device_) {
        static_assert(sizeof(std::random_device::result_type) == 4);
        const std::uint64_t hi = (*device_)();
        return (hi << 32) | (*device_)();
    }
    return engine_();
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("Rng::below: empty range");
    // Reject the low partial block so the remainder is exactly uniform.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

Natural Rng::below(const Natural& bound) {
    if (bound.is_zero()) throw DomainError("Rng::below: empty range");
    if (bound.fits_u64()) return Natural(below(bound.to_u64()));

    const std::size_t bits = bound.bit_length();
    const std::size_t words = (bits + 63) / 64;
    const unsigned top_bits = static_cast<unsigned>(bits % 64);
    std::vector<std::uint64_t> limbs(words);
    mpz_class candidate;
    for (;;) {
        for (auto& limb : limbs) limb = next();
        if (top_bits != 0) limbs.back() &= (std::uint64_t{1} << top_bits) - 1;
        mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
        if (candidate < bound.mpz()) return Natural(candidate);
    }
}

Natural Rng::in_range(const Natural& lo, const Natural& hi) {
    if (hi < lo) throw DomainError("Rng::in_range: empty range");
    return lo + below(hi - lo + Natural(1u));
}

}  // namespace largeprime
