#include "sblom/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "sblom/errors.hpp"

namespace sblom::net {

namespace {

[[noreturn]] void io_fail(const std::string& what) {
    fail("IoError", what + ": " + std::strerror(errno));
}

struct AddrInfo {
    addrinfo* res = nullptr;
    ~AddrInfo() { if (res) freeaddrinfo(res); }
};

} // namespace

Socket::~Socket() { close(); }

Socket& Socket::operator=(Socket&& o) noexcept {
    if (this != &o) {
        close();
        fd_ = o.fd_;
        buf_ = std::move(o.buf_);
        o.fd_ = -1;
    }
    return *this;
}

void Socket::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

Socket Socket::connect(const std::string& host, std::uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    AddrInfo ai;
    if (getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &ai.res) != 0)
        fail("IoError", "cannot resolve " + host);
    for (addrinfo* a = ai.res; a; a = a->ai_next) {
        int fd = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
        if (fd < 0) continue;
        if (::connect(fd, a->ai_addr, a->ai_addrlen) == 0) {
            int one = 1;
            setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
            return Socket(fd);
        }
        ::close(fd);
    }
    io_fail("connect to " + host + ":" + std::to_string(port));
}

void Socket::send_line(const std::string& line) {
    std::string out = line;
    out.push_back('\n');
    std::size_t sent = 0;
    while (sent < out.size()) {
        ssize_t n = ::send(fd_, out.data() + sent, out.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            io_fail("send");
        }
        sent += static_cast<std::size_t>(n);
    }
}

std::optional<std::string> Socket::recv_line() {
    while (true) {
        auto nl = buf_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buf_.substr(0, nl);
            buf_.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        }
        char chunk[4096];
        ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
        if (n < 0) {
            if (errno == EINTR) continue;
            io_fail("recv");
        }
        if (n == 0) {
            if (buf_.empty()) return std::nullopt;
            std::string line = std::move(buf_);
            buf_.clear();
            return line;
        }
        buf_.append(chunk, static_cast<std::size_t>(n));
    }
}

std::optional<nlohmann::json> Socket::recv_json() {
    auto line = recv_line();
    if (!line) return std::nullopt;
    auto j = nlohmann::json::parse(*line, nullptr, false);
    if (j.is_discarded()) fail("BadRequest", "malformed JSON line");
    return j;
}

Listener Listener::bind(const std::string& host, std::uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    hints.ai_flags = AI_PASSIVE;
    AddrInfo ai;
    if (getaddrinfo(host.empty() ? nullptr : host.c_str(),
                    std::to_string(port).c_str(), &hints, &ai.res) != 0)
        fail("IoError", "cannot resolve " + host);

    int fd = -1;
    for (addrinfo* a = ai.res; a; a = a->ai_next) {
        fd = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
        if (fd < 0) continue;
        int one = 1;
        setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
        if (::bind(fd, a->ai_addr, a->ai_addrlen) == 0 && ::listen(fd, 16) == 0) break;
        ::close(fd);
        fd = -1;
    }
    if (fd < 0) io_fail("bind " + host + ":" + std::to_string(port));

    sockaddr_storage ss{};
    socklen_t len = sizeof(ss);
    if (getsockname(fd, reinterpret_cast<sockaddr*>(&ss), &len) != 0) io_fail("getsockname");
    Listener l;
    l.fd_ = fd;
    l.port_ = ss.ss_family == AF_INET6
                  ? ntohs(reinterpret_cast<sockaddr_in6&>(ss).sin6_port)
                  : ntohs(reinterpret_cast<sockaddr_in&>(ss).sin_port);
    return l;
}

std::optional<Socket> Listener::accept() {
    while (true) {
        int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) return Socket(fd);
        if (errno == EINTR) continue;
        return std::nullopt; // listener closed or fatal; caller stops
    }
}

void Listener::close() {
    if (fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
        ::close(fd_);
        fd_ = -1;
    }
}

std::pair<std::string, std::uint16_t> parse_addr(const std::string& addr) {
    auto colon = addr.rfind(':');
    if (colon == std::string::npos)
        fail("InvalidArgument", "address must be HOST:PORT: " + addr);
    std::string host = addr.substr(0, colon);
    unsigned long port = 0;
    try {
        port = std::stoul(addr.substr(colon + 1));
    } catch (const std::exception&) {
        fail("InvalidArgument", "bad port in " + addr);
    }
    if (port > 65535) fail("InvalidArgument", "bad port in " + addr);
    return {host, static_cast<std::uint16_t>(port)};
}

} // namespace sblom::net
