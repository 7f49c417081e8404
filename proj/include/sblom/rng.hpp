#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace sblom {

// Deterministic random source (Mersenne Twister via GMP). Every randomized
// operation in the toolkit draws from one of these; a fixed seed makes whole
// CLI runs reproducible bit for bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    Rng(); // seeded from the OS

    static Rng from_seed(std::optional<std::uint64_t> seed);

    // Uniform in [0, 2^n).
    mpz_class bits(unsigned n);

    // Uniform in [0, bound); bound must be positive.
    mpz_class below(const mpz_class& bound);

    // Uniform in [lo, hi], inclusive.
    mpz_class range(const mpz_class& lo, const mpz_class& hi);

    std::vector<unsigned char> bytes(std::size_t n);

    std::uint64_t u64();

private:
    gmp_randclass state_;
};

} // namespace sblom
