#include "sblom/kdc_state.hpp"

#include <sys/stat.h>

#include <cstdio>
#include <fstream>

#include "sblom/encoding.hpp"

namespace sblom {

nlohmann::json KdcState::to_json() const {
    nlohmann::json j;
    if (params) j["params"] = params->to_json();
    if (master) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& a : master->h.coeffs()) coeffs.push_back(to_hex(a));
        j["master_h"] = std::move(coeffs);
    }
    if (classic_master) j["classic_master"] = classic_master->to_json();
    nlohmann::json dir = nlohmann::json::object();
    for (const auto& pt : registry.points()) dir[pt.user_id] = to_hex(pt.r);
    j["directory"] = std::move(dir);
    nlohmann::json toks = nlohmann::json::object();
    for (const auto& [user, tok] : tokens) toks[user] = b64_encode(tok);
    j["tokens"] = std::move(toks);
    j["policy"] = policy.to_json();
    j["admin_token"] = b64_encode(admin_token);
    return j;
}

KdcState KdcState::from_json(const nlohmann::json& j) {
    KdcState st;
    if (j.contains("params")) st.params = FieldParams::from_json(j.at("params"));
    if (j.contains("master_h")) {
        if (!st.params) fail("InvalidArgument", "master without params");
        std::vector<mpz_class> coeffs;
        for (const auto& v : j.at("master_h"))
            coeffs.push_back(from_hex(v.get<std::string>()));
        st.master = MasterSecret::from_poly(Poly(std::move(coeffs), st.params->exp_modulus),
                                            *st.params);
    }
    if (j.contains("classic_master")) {
        if (!st.params) fail("InvalidArgument", "classic master without params");
        st.classic_master = SymBivarPoly::from_json(j.at("classic_master"), *st.params);
    }
    if (j.contains("directory")) {
        if (!st.params) fail("InvalidArgument", "directory without params");
        for (const auto& [user, rhex] : j.at("directory").items())
            st.registry.add_fixed(user, from_hex(rhex.get<std::string>()), *st.params);
    }
    if (j.contains("tokens")) {
        for (const auto& [user, tok] : j.at("tokens").items())
            st.tokens[user] = b64_decode(tok.get<std::string>());
    }
    if (j.contains("policy")) st.policy = PolicyMatrix::from_json(j.at("policy"));
    if (j.contains("admin_token"))
        st.admin_token = b64_decode(j.at("admin_token").get<std::string>());
    return st;
}

void KdcState::save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) fail("IoError", "cannot write " + tmp);
        out << to_json().dump(2) << '\n';
    }
    ::chmod(tmp.c_str(), 0600); // holds the master secrets
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        fail("IoError", "cannot move state into place at " + path);
}

KdcState KdcState::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot read state file " + path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) fail("IoError", "state file is not valid JSON: " + path);
    return from_json(j);
}

KdcState init_state(unsigned bits, std::size_t degree, Rng& rng) {
    KdcState st;
    st.params = gen_prime(bits, /*safe=*/true, rng);
    st.master = setup(degree, *st.params, rng);
    st.classic_master = gen_master(degree, *st.params, rng);
    st.admin_token = rng.bytes(32);
    return st;
}

} // namespace sblom
