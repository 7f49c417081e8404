#pragma once

#include <cstddef>
#include <vector>

#include "sblom/modmath.hpp"

namespace sblom {

// Master secret of the classic Blom scheme: a symmetric bivariate polynomial
// f(x,y) = sum c_uv x^u y^v over Z_p, stored as the full (m+1)x(m+1)
// coefficient matrix with c_uv = c_vu.
struct SymBivarPoly {
    std::vector<std::vector<mpz_class>> c;

    std::size_t degree() const { return c.size() - 1; }

    // Validates squareness, symmetry and reduction mod p.
    static SymBivarPoly from_coeffs(std::vector<std::vector<mpz_class>> c,
                                    const FieldParams& fp);

    mpz_class eval(const mpz_class& x, const mpz_class& y, const FieldParams& fp) const;

    nlohmann::json to_json() const;
    static SymBivarPoly from_json(const nlohmann::json& j, const FieldParams& fp);

    bool operator==(const SymBivarPoly& o) const { return c == o.c; }
};

// Per-user share g_i(x) = f(x, r_i). The share polynomial is padded to m+1
// coefficients on serialization even when leading coefficients vanish, so
// the on-disk residue count always reflects the declared degree.
struct ClassicShare {
    mpz_class owner_point;
    Poly share_poly;
    std::size_t degree_m = 0;

    nlohmann::json to_json() const; // {"r": hex, "coeffs": [hex,...]} lowest first
    static ClassicShare from_json(const nlohmann::json& j, const FieldParams& fp);
};

// Uniformly random symmetric master: upper triangle sampled, mirrored down.
SymBivarPoly gen_master(std::size_t m, const FieldParams& fp, Rng& rng);

ClassicShare derive_share(const SymBivarPoly& f, const mpz_class& r_i,
                          const FieldParams& fp);

// k_ij = g_i(r_j). Symmetry of f makes classic_key(share_i, r_j) equal
// classic_key(share_j, r_i).
BaseElem classic_key(const ClassicShare& share, const mpz_class& r_peer,
                     const FieldParams& fp);

} // namespace sblom
