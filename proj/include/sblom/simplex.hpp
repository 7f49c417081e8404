#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sblom/modmath.hpp"

namespace sblom {

// Directed-pair key agreement. The KDC holds a master polynomial h over the
// exponent ring Z_{p-1}; user i with public point r_i receives
//
//   g_i = (h_i, b_m, ..., b_1, b_0),  h_i = h(r_i) mod p-1,  b_k = r_i^{a_k} mod p.
//
// The stream key for the ordered pair i -> j is K = r_j^{h(r_i)} mod p. The
// writer computes it as r_j^{h_i} from the scalar alone; the reader computes
// the same value from the b-vector as prod_k b_k^{r_i^k} without ever
// learning h(r_i).

struct MasterSecret {
    Poly h; // over Z_{p-1}, leading coefficient nonzero

    std::size_t degree() const { return h.degree(); }

    // Validation-only constructor used by the sampling path, state loading
    // and the worked fixtures. Degree 0 is accepted here (constant h) even
    // though setup() refuses to sample one.
    static MasterSecret from_poly(Poly h, const FieldParams& fp);
};

// Uniformly random h of degree exactly m (a_m != 0); m >= 1.
MasterSecret setup(std::size_t m, const FieldParams& fp, Rng& rng);

struct PublicPoint {
    std::string user_id;
    mpz_class r;
};

// r in [2, p-2]; additionally a quadratic residue when params enforce the
// safe-prime discipline, so every point generates the order-q subgroup and
// no channel key collapses into a short cycle.
void validate_point(const mpz_class& r, const FieldParams& fp);

// One r_i namespace per deployment, shared by both schemes. Append-only:
// points never change once assigned.
class PointRegistry {
public:
    // Samples a fresh point for the user. Under safe-prime params the point
    // is drawn as t^2 mod p for uniform t, which is uniform over the
    // residue subgroup.
    const PublicPoint& assign(const std::string& user_id, const FieldParams& fp,
                              Rng& rng);

    // Registers an externally chosen point (fixtures, state reload). Same
    // invariants as assign().
    const PublicPoint& add_fixed(const std::string& user_id, const mpz_class& r,
                                 const FieldParams& fp);

    const PublicPoint* find(const std::string& user_id) const;
    const PublicPoint& require(const std::string& user_id) const; // UnknownUser

    const std::vector<PublicPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    // Number of distinct points this field can ever hand out.
    static mpz_class capacity(const FieldParams& fp);

private:
    std::vector<PublicPoint> points_;
    std::map<std::string, std::size_t> by_id_;
};

// The secret vector g_i plus the owner's public point.
struct SimplexMaterial {
    std::string user_id;
    mpz_class r;
    ExpElem h_i;
    std::vector<BaseElem> b; // b[k] = r^{a_k}, lowest index first, size m+1

    std::size_t degree() const { return b.size() - 1; }

    // {"user": id, "r": hex, "h_i": hex, "b": [hex,...]} with b_0 first.
    nlohmann::json to_json() const;
    static SimplexMaterial from_json(const nlohmann::json& j, const FieldParams& fp);
};

// Issues g_i and cross-checks it before release: r^{h_i} must equal
// prod_k b_k^{(r^k mod p-1)}. A mismatch means an internal arithmetic fault
// and aborts issuance (ConsistencyCheckFailed).
SimplexMaterial issue_material(const MasterSecret& ms, const PublicPoint& pt,
                               const FieldParams& fp);

// The KDC-side consistency check, exposed for tests and for receivers that
// want to re-verify a provisioned payload.
bool verify_material(const SimplexMaterial& mat, const FieldParams& fp);

// Canonical directed key: k = r_receiver^{h(r_sender)} mod p, identical no
// matter which side computed it.
struct DirectedKey {
    std::string sender_id;
    std::string receiver_id;
    mpz_class sender_r;
    mpz_class receiver_r;
    BaseElem k;
};

// Writer's path (s = +1): k = r_recv^{h_i} using only the scalar h_i.
DirectedKey send_key(const SimplexMaterial& mat, const PublicPoint& receiver,
                     const FieldParams& fp);

// Reader's path (s = -1): k = prod_k b_k^{z_k} with z_k = r_send^k mod p-1.
// Equals mod_pow(r_own, h(r_send)) by Fermat reduction of the exponents.
DirectedKey recv_key(const SimplexMaterial& mat, const PublicPoint& sender,
                     const FieldParams& fp);

using SessionKey = std::array<unsigned char, 32>;

// SHA-256 over "SBLOMv1" || p || r_sender || r_receiver || k, every integer
// fixed-width big-endian at ceil(bit_length/8) bytes. Context binding: the
// two orientations of a pair hash to different keys even if the field
// elements collide.
SessionKey derive_session_key(const DirectedKey& dk, const FieldParams& fp);

} // namespace sblom
