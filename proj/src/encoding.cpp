#include "sblom/encoding.hpp"

#include <sodium.h>

#include <cctype>
#include <cstring>

#include "sblom/errors.hpp"

namespace sblom {

std::string to_hex(const mpz_class& v) {
    if (sgn(v) < 0) fail("InvalidArgument", "negative residue");
    char* raw = mpz_get_str(nullptr, 16, v.get_mpz_t());
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

mpz_class from_hex(const std::string& s) {
    if (s.empty()) fail("InvalidArgument", "empty hex string");
    for (char c : s) {
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            fail("InvalidArgument", "malformed hex string: " + s);
    }
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 16) != 0)
        fail("InvalidArgument", "malformed hex string: " + s);
    return v;
}

std::vector<unsigned char> to_bytes_be(const mpz_class& v, std::size_t width) {
    if (sgn(v) < 0) fail("InvalidArgument", "negative value");
    std::vector<unsigned char> out(width, 0);
    size_t count = 0;
    if (sgn(v) != 0) {
        size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
        if (need > width) fail("InvalidArgument", "value wider than field");
        mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, v.get_mpz_t());
    }
    return out;
}

std::string b64_encode(std::span<const unsigned char> data) {
    ensure_sodium();
    std::string out(sodium_base64_ENCODED_LEN(data.size(), sodium_base64_VARIANT_ORIGINAL), '\0');
    sodium_bin2base64(out.data(), out.size(), data.data(), data.size(),
                      sodium_base64_VARIANT_ORIGINAL);
    out.resize(std::strlen(out.c_str()));
    return out;
}

std::vector<unsigned char> b64_decode(const std::string& s) {
    ensure_sodium();
    std::vector<unsigned char> out(s.size() == 0 ? 0 : s.size());
    size_t len = 0;
    if (s.empty()) return {};
    if (sodium_base642bin(out.data(), out.size(), s.data(), s.size(), nullptr, &len,
                          nullptr, sodium_base64_VARIANT_ORIGINAL) != 0)
        fail("InvalidArgument", "malformed base64");
    out.resize(len);
    return out;
}

void ensure_sodium() {
    static const int rc = sodium_init();
    if (rc < 0) fail("IoError", "libsodium initialization failed");
}

} // namespace sblom
