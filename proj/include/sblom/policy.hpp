#pragma once

#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace sblom {

enum class Verdict { Allow, Deny };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// Directed allow/deny relation over ordered user pairs. A read request
// "i reads from j" and a write request "j writes to i" are the same ordered
// pair (sender=j, receiver=i) and always get the same answer; callers map
// both phrasings through writer_pair()/reader_pair().
//
// A denied channel's pair key is presented as the zero residue by the
// reporting layer; the scheme itself never produces a zero key, so the
// prohibition lives entirely here.
class PolicyMatrix {
public:
    explicit PolicyMatrix(Verdict default_rule = Verdict::Allow)
        : default_rule_(default_rule) {}

    // Exceptions override the default; self-pairs are rejected.
    void set_exception(const std::string& sender, const std::string& receiver,
                       Verdict v);

    Verdict check(const std::string& sender, const std::string& receiver) const;

    Verdict default_rule() const { return default_rule_; }

    nlohmann::json to_json() const;
    static PolicyMatrix from_json(const nlohmann::json& j);

private:
    Verdict default_rule_;
    std::map<std::pair<std::string, std::string>, Verdict> exceptions_;
};

// The ordered (sender, receiver) pair behind each request phrasing.
inline std::pair<std::string, std::string> writer_pair(const std::string& self,
                                                       const std::string& peer) {
    return {self, peer}; // self writes to peer
}
inline std::pair<std::string, std::string> reader_pair(const std::string& self,
                                                       const std::string& peer) {
    return {peer, self}; // peer writes to self
}

} // namespace sblom
