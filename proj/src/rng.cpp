#include "sblom/rng.hpp"

#include <random>

#include "sblom/encoding.hpp"
#include "sblom/errors.hpp"

namespace sblom {

namespace {

mpz_class seed_to_mpz(std::uint64_t seed) {
    mpz_class s;
    mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 1, 0, &seed);
    return s;
}

std::uint64_t os_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

} // namespace

Rng::Rng(std::uint64_t seed) : state_(gmp_randinit_mt) {
    state_.seed(seed_to_mpz(seed));
}

Rng::Rng() : Rng(os_seed()) {}

Rng Rng::from_seed(std::optional<std::uint64_t> seed) {
    return seed ? Rng(*seed) : Rng();
}

mpz_class Rng::bits(unsigned n) {
    return state_.get_z_bits(n);
}

mpz_class Rng::below(const mpz_class& bound) {
    if (sgn(bound) <= 0) fail("InvalidArgument", "rng bound must be positive");
    return state_.get_z_range(bound);
}

mpz_class Rng::range(const mpz_class& lo, const mpz_class& hi) {
    if (lo > hi) fail("InvalidArgument", "rng range is empty");
    return lo + below(hi - lo + 1);
}

std::vector<unsigned char> Rng::bytes(std::size_t n) {
    return to_bytes_be(bits(static_cast<unsigned>(8 * n)), n);
}

std::uint64_t Rng::u64() {
    mpz_class v = bits(64);
    std::uint64_t out = 0;
    for (auto byte : to_bytes_be(v, 8)) out = (out << 8) | byte;
    return out;
}

} // namespace sblom
