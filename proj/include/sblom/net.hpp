#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

namespace sblom::net {

// Minimal RAII TCP socket with newline-delimited framing. Every protocol
// message in the toolkit is one JSON object per line.
class Socket {
public:
    Socket() = default;
    explicit Socket(int fd) : fd_(fd) {}
    ~Socket();

    Socket(Socket&& o) noexcept : fd_(o.fd_), buf_(std::move(o.buf_)) { o.fd_ = -1; }
    Socket& operator=(Socket&& o) noexcept;
    Socket(const Socket&) = delete;
    Socket& operator=(const Socket&) = delete;

    static Socket connect(const std::string& host, std::uint16_t port);

    void send_line(const std::string& line); // appends '\n'
    std::optional<std::string> recv_line();  // nullopt on clean EOF

    void send_json(const nlohmann::json& j) { send_line(j.dump()); }
    std::optional<nlohmann::json> recv_json();

    bool valid() const { return fd_ >= 0; }
    int fd() const { return fd_; }
    void close();

private:
    int fd_ = -1;
    std::string buf_;
};

class Listener {
public:
    Listener() = default;
    ~Listener() { close(); }
    Listener(Listener&& o) noexcept : fd_(o.fd_), port_(o.port_) { o.fd_ = -1; }
    Listener(const Listener&) = delete;

    // port 0 binds an ephemeral port; port() reports the real one.
    static Listener bind(const std::string& host, std::uint16_t port);

    std::optional<Socket> accept(); // nullopt once the listener is closed
    std::uint16_t port() const { return port_; }
    void close();

private:
    int fd_ = -1;
    std::uint16_t port_ = 0;
};

// "host:port" -> (host, port)
std::pair<std::string, std::uint16_t> parse_addr(const std::string& addr);

} // namespace sblom::net
