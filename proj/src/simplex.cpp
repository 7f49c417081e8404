#include "sblom/simplex.hpp"

#include <sodium.h>

#include "sblom/encoding.hpp"

namespace sblom {

MasterSecret MasterSecret::from_poly(Poly h, const FieldParams& fp) {
    if (h.modulus() != fp.exp_modulus)
        fail("InvalidArgument", "master polynomial must live over Z_{p-1}");
    if (h.is_zero()) fail("InvalidArgument", "master polynomial is zero");
    if (sgn(h.coeffs().back()) == 0)
        fail("InvalidArgument", "leading coefficient is zero");
    return MasterSecret{std::move(h)};
}

MasterSecret setup(std::size_t m, const FieldParams& fp, Rng& rng) {
    if (m < 1) fail("InvalidArgument", "degree must be at least 1");
    std::vector<mpz_class> coeffs(m + 1);
    for (std::size_t k = 0; k < m; ++k) coeffs[k] = rng.below(fp.exp_modulus);
    do {
        coeffs[m] = rng.below(fp.exp_modulus);
    } while (sgn(coeffs[m]) == 0);
    return MasterSecret::from_poly(Poly(std::move(coeffs), fp.exp_modulus), fp);
}

void validate_point(const mpz_class& r, const FieldParams& fp) {
    // 0, 1 and p-1 are excluded outright: they pin every incoming key to
    // 0, 1 or an order-2 cycle.
    if (r < 2 || r > fp.p - 2) fail("InvalidArgument", "point outside [2, p-2]");
    if (fp.safe_prime && mpz_legendre(r.get_mpz_t(), fp.p.get_mpz_t()) != 1)
        fail("InvalidArgument", "point is not a quadratic residue");
}

const PublicPoint& PointRegistry::assign(const std::string& user_id,
                                         const FieldParams& fp, Rng& rng) {
    if (by_id_.count(user_id)) fail("DuplicateUser", user_id);
    if (mpz_class(size()) >= capacity(fp)) fail("RegistryFull");
    mpz_class r;
    while (true) {
        if (fp.safe_prime) {
            mpz_class t = rng.below(fp.p);
            r = t * t % fp.p;
        } else {
            r = rng.range(2, fp.p - 2);
        }
        if (r < 2 || r > fp.p - 2) continue;
        bool taken = false;
        for (const auto& pt : points_) {
            if (pt.r == r) { taken = true; break; }
        }
        if (!taken) break;
    }
    return add_fixed(user_id, r, fp);
}

const PublicPoint& PointRegistry::add_fixed(const std::string& user_id,
                                            const mpz_class& r,
                                            const FieldParams& fp) {
    if (user_id.empty()) fail("InvalidArgument", "empty user id");
    if (by_id_.count(user_id)) fail("DuplicateUser", user_id);
    validate_point(r, fp);
    for (const auto& pt : points_)
        if (pt.r == r) fail("InvalidArgument", "point already assigned");
    points_.push_back(PublicPoint{user_id, r});
    by_id_[user_id] = points_.size() - 1;
    return points_.back();
}

const PublicPoint* PointRegistry::find(const std::string& user_id) const {
    auto it = by_id_.find(user_id);
    return it == by_id_.end() ? nullptr : &points_[it->second];
}

const PublicPoint& PointRegistry::require(const std::string& user_id) const {
    const PublicPoint* pt = find(user_id);
    if (!pt) fail("UnknownUser", user_id);
    return *pt;
}

mpz_class PointRegistry::capacity(const FieldParams& fp) {
    // Residue discipline: the quadratic residues in [2, p-2] are the
    // subgroup of order (p-1)/2 minus the element 1.
    if (fp.safe_prime) return (fp.p - 1) / 2 - 1;
    return fp.p - 3;
}

nlohmann::json SimplexMaterial::to_json() const {
    nlohmann::json bs = nlohmann::json::array();
    for (const auto& bk : b) bs.push_back(to_hex(bk.value()));
    return {{"user", user_id},
            {"r", to_hex(r)},
            {"h_i", to_hex(h_i.value())},
            {"b", std::move(bs)}};
}

SimplexMaterial SimplexMaterial::from_json(const nlohmann::json& j,
                                           const FieldParams& fp) {
    SimplexMaterial mat;
    mat.user_id = j.at("user").get<std::string>();
    mat.r = from_hex(j.at("r").get<std::string>());
    mat.h_i = ExpElem::reduce(from_hex(j.at("h_i").get<std::string>()), fp);
    for (const auto& v : j.at("b"))
        mat.b.push_back(BaseElem::reduce(from_hex(v.get<std::string>()), fp));
    if (mat.b.empty()) fail("InvalidArgument", "material has empty b-vector");
    return mat;
}

SimplexMaterial issue_material(const MasterSecret& ms, const PublicPoint& pt,
                               const FieldParams& fp) {
    SimplexMaterial mat;
    mat.user_id = pt.user_id;
    mat.r = pt.r;
    // h takes the point as an exponent-ring argument; the b-vector uses it
    // as a base.
    mat.h_i = ExpElem::reduce(poly_eval(ms.h, point_as_exponent(pt.r, fp).value()), fp);
    BaseElem base = point_as_base(pt.r, fp);
    mat.b.reserve(ms.h.coeffs().size());
    for (const auto& a_k : ms.h.coeffs()) mat.b.push_back(mod_pow(base, a_k, fp));
    if (!verify_material(mat, fp))
        fail("ConsistencyCheckFailed", "issued material fails the cross check");
    return mat;
}

bool verify_material(const SimplexMaterial& mat, const FieldParams& fp) {
    // r^{h_i} must equal prod_k b_k^{(r^k mod p-1)}: both sides are
    // r^{h(r)} computed along the two derivation paths.
    BaseElem lhs = mod_pow(point_as_base(mat.r, fp), mat.h_i, fp);
    ExpElem re = point_as_exponent(mat.r, fp);
    BaseElem rhs = BaseElem::reduce(1, fp);
    mpz_class z = 1; // r^k mod p-1
    for (std::size_t k = 0; k < mat.b.size(); ++k) {
        if (k > 0) z = z * re.value() % fp.exp_modulus;
        rhs = base_mul(rhs, mod_pow(mat.b[k], z, fp), fp);
    }
    return lhs == rhs;
}

DirectedKey send_key(const SimplexMaterial& mat, const PublicPoint& receiver,
                     const FieldParams& fp) {
    if (receiver.r == mat.r) fail("SelfChannel");
    DirectedKey dk;
    dk.sender_id = mat.user_id;
    dk.receiver_id = receiver.user_id;
    dk.sender_r = mat.r;
    dk.receiver_r = receiver.r;
    dk.k = mod_pow(point_as_base(receiver.r, fp), mat.h_i, fp);
    return dk;
}

DirectedKey recv_key(const SimplexMaterial& mat, const PublicPoint& sender,
                     const FieldParams& fp) {
    if (sender.r == mat.r) fail("SelfChannel");
    ExpElem se = point_as_exponent(sender.r, fp);
    BaseElem acc = BaseElem::reduce(1, fp);
    mpz_class z = 1; // z_k = r_send^k mod p-1; z_0 = 1
    for (std::size_t k = 0; k < mat.b.size(); ++k) {
        if (k > 0) z = z * se.value() % fp.exp_modulus;
        acc = base_mul(acc, mod_pow(mat.b[k], z, fp), fp);
    }
    DirectedKey dk;
    dk.sender_id = sender.user_id;
    dk.receiver_id = mat.user_id;
    dk.sender_r = sender.r;
    dk.receiver_r = mat.r;
    dk.k = acc;
    return dk;
}

SessionKey derive_session_key(const DirectedKey& dk, const FieldParams& fp) {
    ensure_sodium();
    const std::size_t width = (fp.bit_length + 7) / 8;
    std::vector<unsigned char> buf;
    static const char label[] = "SBLOMv1";
    buf.insert(buf.end(), label, label + 7);
    for (const mpz_class* v : {&fp.p, &dk.sender_r, &dk.receiver_r, &dk.k.value()}) {
        auto bytes = to_bytes_be(*v, width);
        buf.insert(buf.end(), bytes.begin(), bytes.end());
    }
    SessionKey key{};
    crypto_hash_sha256(key.data(), buf.data(), buf.size());
    return key;
}

} // namespace sblom
