#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sblom {

// Canonical residue form: lowercase hex, no leading zeros, "0" for zero.
std::string to_hex(const mpz_class& v);
mpz_class from_hex(const std::string& s);

// Fixed-width big-endian byte string; throws if v does not fit.
std::vector<unsigned char> to_bytes_be(const mpz_class& v, std::size_t width);

std::string b64_encode(std::span<const unsigned char> data);
std::vector<unsigned char> b64_decode(const std::string& s);

// libsodium init guard; cheap to call repeatedly.
void ensure_sodium();

} // namespace sblom
