#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sblom/kdc_state.hpp"
#include "sblom/net.hpp"
#include "sblom/rng.hpp"

namespace sblom {

// KDC over TCP, one JSON object per line. Request types: register,
// directory, material, policy_set, policy_check. Responses mirror the
// request with "ok":true, or {"ok":false,"error":NAME}.
//
// Registry and policy mutations are serialized behind one lock; directory
// reads share it (uncontended at this scale). Each connection gets its own
// thread.
class KdcServer {
public:
    KdcServer(KdcState state, std::string persist_path, Rng rng);

    // Binds and starts the accept loop in a background thread.
    void start(const std::string& host, std::uint16_t port);
    std::uint16_t port() const { return listener_.port(); }

    // Serve on the calling thread until stop() is called elsewhere.
    void run(const std::string& host, std::uint16_t port);

    void stop();
    ~KdcServer();

    nlohmann::json handle(const nlohmann::json& req); // exposed for unit tests

private:
    void accept_loop();
    void serve_connection(net::Socket sock);
    void persist_locked();

    nlohmann::json do_register(const nlohmann::json& req);
    nlohmann::json do_directory();
    nlohmann::json do_material(const nlohmann::json& req);
    nlohmann::json do_policy_set(const nlohmann::json& req);
    nlohmann::json do_policy_check(const nlohmann::json& req);

    std::mutex mu_;
    KdcState state_;
    std::string persist_path_;
    Rng rng_;

    net::Listener listener_;
    std::thread accept_thread_;
    std::vector<std::thread> conn_threads_;
    std::set<int> active_fds_;
    std::mutex threads_mu_;
    std::atomic<bool> stopping_{false};
};

} // namespace sblom
