#include "sblom/policy.hpp"

#include "sblom/errors.hpp"

namespace sblom {

std::string to_string(Verdict v) {
    return v == Verdict::Allow ? "allow" : "deny";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "allow") return Verdict::Allow;
    if (s == "deny") return Verdict::Deny;
    fail("InvalidArgument", "unknown verdict: " + s);
}

void PolicyMatrix::set_exception(const std::string& sender,
                                 const std::string& receiver, Verdict v) {
    if (sender == receiver) fail("InvalidArgument", "self-pair in policy");
    if (sender.empty() || receiver.empty()) fail("InvalidArgument", "empty user id");
    exceptions_[{sender, receiver}] = v;
}

Verdict PolicyMatrix::check(const std::string& sender,
                            const std::string& receiver) const {
    auto it = exceptions_.find({sender, receiver});
    return it == exceptions_.end() ? default_rule_ : it->second;
}

nlohmann::json PolicyMatrix::to_json() const {
    nlohmann::json ex = nlohmann::json::array();
    for (const auto& [pair, v] : exceptions_)
        ex.push_back({pair.first, pair.second, to_string(v)});
    return {{"default", to_string(default_rule_)}, {"exceptions", std::move(ex)}};
}

PolicyMatrix PolicyMatrix::from_json(const nlohmann::json& j) {
    PolicyMatrix m(verdict_from_string(j.at("default").get<std::string>()));
    for (const auto& e : j.at("exceptions"))
        m.set_exception(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                        verdict_from_string(e.at(2).get<std::string>()));
    return m;
}

} // namespace sblom
