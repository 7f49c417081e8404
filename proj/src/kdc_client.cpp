#include "sblom/kdc_client.hpp"

#include "sblom/encoding.hpp"
#include "sblom/errors.hpp"

namespace sblom {

PublicPoint Directory::point_of(const std::string& user) const {
    auto it = users.find(user);
    if (it == users.end()) fail("UnknownUser", user);
    return PublicPoint{user, it->second};
}

KdcClient::KdcClient(const std::string& host, std::uint16_t port)
    : sock_(net::Socket::connect(host, port)) {}

nlohmann::json KdcClient::rpc(const nlohmann::json& req) {
    sock_.send_json(req);
    auto resp = sock_.recv_json();
    if (!resp) fail("IoError", "server closed the connection");
    if (!resp->value("ok", false))
        throw Error(resp->value("error", std::string("IoError")));
    return *resp;
}

Registration KdcClient::register_user(const std::string& user) {
    auto resp = rpc({{"type", "register"}, {"user", user}});
    return Registration{from_hex(resp.at("r").get<std::string>()),
                        b64_decode(resp.at("token").get<std::string>())};
}

Directory KdcClient::directory() {
    auto resp = rpc({{"type", "directory"}});
    Directory dir;
    dir.params = FieldParams::from_prime(from_hex(resp.at("p").get<std::string>()),
                                         resp.at("safe_prime").get<bool>());
    for (const auto& [user, rhex] : resp.at("users").items())
        dir.users[user] = from_hex(rhex.get<std::string>());
    return dir;
}

SimplexMaterial KdcClient::fetch_material(const std::string& user,
                                          const std::vector<unsigned char>& token,
                                          const FieldParams& fp) {
    auto resp = rpc({{"type", "material"}, {"user", user}, {"token", b64_encode(token)}});
    return SimplexMaterial::from_json(resp.at("material"), fp);
}

void KdcClient::policy_set(
    const std::vector<std::tuple<std::string, std::string, Verdict>>& pairs,
    const std::vector<unsigned char>& admin_token) {
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& [s, r, v] : pairs) jp.push_back({s, r, to_string(v)});
    rpc({{"type", "policy_set"}, {"pairs", std::move(jp)},
         {"admin_token", b64_encode(admin_token)}});
}

Verdict KdcClient::policy_check(const std::string& sender, const std::string& receiver) {
    auto resp = rpc({{"type", "policy_check"}, {"sender", sender}, {"receiver", receiver}});
    return verdict_from_string(resp.at("verdict").get<std::string>());
}

} // namespace sblom
