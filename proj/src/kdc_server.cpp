#include "sblom/kdc_server.hpp"

#include <sodium.h>
#include <sys/socket.h>

#include "sblom/encoding.hpp"

namespace sblom {

namespace {

bool token_matches(const std::vector<unsigned char>& expected,
                   const std::vector<unsigned char>& presented) {
    if (expected.size() != presented.size() || expected.empty()) return false;
    return sodium_memcmp(expected.data(), presented.data(), expected.size()) == 0;
}

} // namespace

KdcServer::KdcServer(KdcState state, std::string persist_path, Rng rng)
    : state_(std::move(state)), persist_path_(std::move(persist_path)),
      rng_(std::move(rng)) {
    ensure_sodium();
}

KdcServer::~KdcServer() { stop(); }

void KdcServer::start(const std::string& host, std::uint16_t port) {
    listener_ = net::Listener::bind(host, port);
    accept_thread_ = std::thread([this] { accept_loop(); });
}

void KdcServer::run(const std::string& host, std::uint16_t port) {
    listener_ = net::Listener::bind(host, port);
    accept_loop();
}

void KdcServer::stop() {
    if (stopping_.exchange(true)) {
        if (accept_thread_.joinable()) accept_thread_.join();
        return;
    }
    listener_.close();
    if (accept_thread_.joinable()) accept_thread_.join();
    std::vector<std::thread> conns;
    {
        std::lock_guard lock(threads_mu_);
        // Unblock connection threads parked in recv. Threads deregister
        // before closing, so no fd here can have been reused.
        for (int fd : active_fds_) ::shutdown(fd, SHUT_RDWR);
        conns.swap(conn_threads_);
    }
    for (auto& t : conns)
        if (t.joinable()) t.join();
}

void KdcServer::accept_loop() {
    while (!stopping_) {
        auto sock = listener_.accept();
        if (!sock) break;
        std::lock_guard lock(threads_mu_);
        conn_threads_.emplace_back(
            [this, s = std::move(*sock)]() mutable { serve_connection(std::move(s)); });
    }
}

void KdcServer::serve_connection(net::Socket sock) {
    {
        std::lock_guard lock(threads_mu_);
        active_fds_.insert(sock.fd());
    }
    while (!stopping_) {
        std::optional<std::string> line;
        try {
            line = sock.recv_line();
        } catch (const Error&) {
            break; // peer reset
        }
        if (!line) break;
        nlohmann::json resp;
        auto req = nlohmann::json::parse(*line, nullptr, false);
        if (req.is_discarded() || !req.is_object()) {
            resp = {{"ok", false}, {"error", "BadRequest"}};
        } else {
            resp = handle(req);
        }
        try {
            sock.send_line(resp.dump());
        } catch (const Error&) {
            break;
        }
    }
    std::lock_guard lock(threads_mu_);
    active_fds_.erase(sock.fd());
}

nlohmann::json KdcServer::handle(const nlohmann::json& req) {
    try {
        const std::string type = req.value("type", "");
        if (type == "register") return do_register(req);
        if (type == "directory") return do_directory();
        if (type == "material") return do_material(req);
        if (type == "policy_set") return do_policy_set(req);
        if (type == "policy_check") return do_policy_check(req);
        fail("BadRequest", "unknown request type: " + type);
    } catch (const Error& e) {
        return {{"ok", false}, {"error", e.name()}};
    } catch (const nlohmann::json::exception&) {
        return {{"ok", false}, {"error", "BadRequest"}};
    }
}

void KdcServer::persist_locked() {
    if (!persist_path_.empty()) state_.save(persist_path_);
}

nlohmann::json KdcServer::do_register(const nlohmann::json& req) {
    std::lock_guard lock(mu_);
    if (!state_.initialized()) fail("ServerNotInitialized");
    const std::string user = req.at("user").get<std::string>();
    if (user.empty()) fail("BadRequest", "empty user");
    const PublicPoint& pt = state_.registry.assign(user, *state_.params, rng_);
    auto token = rng_.bytes(32);
    state_.tokens[user] = token;
    persist_locked();
    return {{"ok", true}, {"r", to_hex(pt.r)}, {"token", b64_encode(token)}};
}

nlohmann::json KdcServer::do_directory() {
    std::lock_guard lock(mu_);
    if (!state_.initialized()) fail("ServerNotInitialized");
    nlohmann::json users = nlohmann::json::object();
    for (const auto& pt : state_.registry.points()) users[pt.user_id] = to_hex(pt.r);
    return {{"ok", true},
            {"p", to_hex(state_.params->p)},
            {"safe_prime", state_.params->safe_prime},
            {"users", std::move(users)}};
}

nlohmann::json KdcServer::do_material(const nlohmann::json& req) {
    std::lock_guard lock(mu_);
    if (!state_.initialized()) fail("ServerNotInitialized");
    const std::string user = req.at("user").get<std::string>();
    const PublicPoint* pt = state_.registry.find(user);
    if (!pt) fail("UnknownUser", user);
    auto presented = b64_decode(req.at("token").get<std::string>());
    auto it = state_.tokens.find(user);
    if (it == state_.tokens.end() || !token_matches(it->second, presented))
        fail("AuthFailed");
    SimplexMaterial mat = issue_material(*state_.master, *pt, *state_.params);
    return {{"ok", true}, {"material", mat.to_json()}};
}

nlohmann::json KdcServer::do_policy_set(const nlohmann::json& req) {
    std::lock_guard lock(mu_);
    auto presented = b64_decode(req.at("admin_token").get<std::string>());
    if (!token_matches(state_.admin_token, presented)) fail("AuthFailed");
    // Validate all pairs before mutating anything.
    PolicyMatrix next = state_.policy;
    for (const auto& entry : req.at("pairs")) {
        const std::string sender = entry.at(0).get<std::string>();
        const std::string receiver = entry.at(1).get<std::string>();
        state_.registry.require(sender);
        state_.registry.require(receiver);
        next.set_exception(sender, receiver,
                           verdict_from_string(entry.at(2).get<std::string>()));
    }
    state_.policy = std::move(next);
    persist_locked();
    return {{"ok", true}};
}

nlohmann::json KdcServer::do_policy_check(const nlohmann::json& req) {
    std::lock_guard lock(mu_);
    const std::string sender = req.at("sender").get<std::string>();
    const std::string receiver = req.at("receiver").get<std::string>();
    state_.registry.require(sender);
    state_.registry.require(receiver);
    return {{"ok", true},
            {"verdict", to_string(state_.policy.check(sender, receiver))}};
}

} // namespace sblom
