#pragma once

#include <map>
#include <string>
#include <vector>

#include "sblom/net.hpp"
#include "sblom/policy.hpp"
#include "sblom/simplex.hpp"

namespace sblom {

struct Registration {
    mpz_class r;
    std::vector<unsigned char> token;
};

struct Directory {
    FieldParams params;
    std::map<std::string, mpz_class> users;

    PublicPoint point_of(const std::string& user) const; // UnknownUser
};

// One TCP connection to the KDC; requests are serial on the connection.
// Server-side errors come back as thrown Error with the wire name.
class KdcClient {
public:
    KdcClient(const std::string& host, std::uint16_t port);

    nlohmann::json rpc(const nlohmann::json& req);

    Registration register_user(const std::string& user);
    Directory directory();
    SimplexMaterial fetch_material(const std::string& user,
                                   const std::vector<unsigned char>& token,
                                   const FieldParams& fp);
    void policy_set(const std::vector<std::tuple<std::string, std::string, Verdict>>& pairs,
                    const std::vector<unsigned char>& admin_token);
    Verdict policy_check(const std::string& sender, const std::string& receiver);

    // The two request phrasings of the same ordered pair.
    Verdict check_write(const std::string& self, const std::string& peer) {
        auto [s, r] = writer_pair(self, peer);
        return policy_check(s, r);
    }
    Verdict check_read(const std::string& self, const std::string& peer) {
        auto [s, r] = reader_pair(self, peer);
        return policy_check(s, r);
    }

private:
    net::Socket sock_;
};

} // namespace sblom
