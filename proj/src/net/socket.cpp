#include "swarmgrid/net/socket.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace swarmgrid::net {

namespace {

constexpr std::size_t kMaxFrameBytes = 256ull * 1024 * 1024;

std::string errno_message(const char* what) {
    return std::string(what) + ": " + std::strerror(errno);
}

} // namespace

TcpStream::~TcpStream() { close(); }

TcpStream::TcpStream(TcpStream&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }

TcpStream& TcpStream::operator=(TcpStream&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        other.fd_ = -1;
    }
    return *this;
}

TcpStream TcpStream::connect(const std::string& host, std::uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* result = nullptr;
    const std::string port_str = std::to_string(port);
    if (::getaddrinfo(host.c_str(), port_str.c_str(), &hints, &result) != 0 || !result)
        throw ConnectError("cannot resolve " + host);

    int fd = -1;
    for (addrinfo* ai = result; ai; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) continue;
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(result);
    if (fd < 0) throw ConnectError("cannot connect to " + host + ":" + port_str);

    const int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return TcpStream(fd);
}

void TcpStream::send_frame(const Json& message) {
    const std::string payload = message.dump();
    if (payload.size() > kMaxFrameBytes) throw ProtocolError("frame too large to send");
    unsigned char header[4];
    const auto len = static_cast<std::uint32_t>(payload.size());
    header[0] = static_cast<unsigned char>(len >> 24);
    header[1] = static_cast<unsigned char>(len >> 16);
    header[2] = static_cast<unsigned char>(len >> 8);
    header[3] = static_cast<unsigned char>(len);
    write_all(header, 4);
    write_all(payload.data(), payload.size());
}

Json TcpStream::recv_frame() {
    unsigned char header[4];
    read_exact(header, 4);
    const std::uint32_t len = (static_cast<std::uint32_t>(header[0]) << 24) |
                              (static_cast<std::uint32_t>(header[1]) << 16) |
                              (static_cast<std::uint32_t>(header[2]) << 8) |
                              static_cast<std::uint32_t>(header[3]);
    if (len > kMaxFrameBytes) throw ProtocolError("incoming frame exceeds size limit");
    std::string payload(len, '\0');
    if (len > 0) read_exact(payload.data(), len);
    Json j = Json::parse(payload, nullptr, false);
    if (j.is_discarded()) throw ProtocolError("frame is not valid JSON");
    return j;
}

void TcpStream::shutdown_both() noexcept {
    if (fd_ >= 0) ::shutdown(fd_, SHUT_RDWR);
}

void TcpStream::close() noexcept {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

void TcpStream::write_all(const void* data, std::size_t len) {
    if (fd_ < 0) throw ConnectionLost("write on closed stream");
    const char* p = static_cast<const char*>(data);
    while (len > 0) {
        const ssize_t n = ::send(fd_, p, len, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw ConnectionLost(errno_message("send"));
        }
        if (n == 0) throw ConnectionLost("peer closed the connection");
        p += n;
        len -= static_cast<std::size_t>(n);
    }
}

void TcpStream::read_exact(void* data, std::size_t len) {
    if (fd_ < 0) throw ConnectionLost("read on closed stream");
    char* p = static_cast<char*>(data);
    while (len > 0) {
        const ssize_t n = ::recv(fd_, p, len, 0);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw ConnectionLost(errno_message("recv"));
        }
        if (n == 0) throw ConnectionLost("peer closed the connection");
        p += n;
        len -= static_cast<std::size_t>(n);
    }
}

TcpListener::TcpListener(std::uint16_t port) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) throw BindError(errno_message("socket"));

    const int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        const std::string msg = errno_message("bind");
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw BindError(msg + " (port " + std::to_string(port) + ")");
    }
    if (::listen(listen_fd_, 64) != 0) {
        const std::string msg = errno_message("listen");
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw BindError(msg);
    }

    socklen_t addr_len = sizeof(addr);
    if (::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &addr_len) == 0)
        port_ = ntohs(addr.sin_port);

    int pipe_fds[2];
    if (::pipe(pipe_fds) != 0) {
        ::close(listen_fd_);
        listen_fd_ = -1;
        throw BindError(errno_message("pipe"));
    }
    wake_rd_ = pipe_fds[0];
    wake_wr_ = pipe_fds[1];
}

TcpListener::~TcpListener() {
    close();
    if (listen_fd_ >= 0) ::close(listen_fd_);
    if (wake_rd_ >= 0) ::close(wake_rd_);
    if (wake_wr_ >= 0) ::close(wake_wr_);
}

TcpStream TcpListener::accept() {
    for (;;) {
        if (closed_.load(std::memory_order_acquire)) throw ConnectionLost("listener closed");
        pollfd fds[2];
        fds[0] = {listen_fd_, POLLIN, 0};
        fds[1] = {wake_rd_, POLLIN, 0};
        const int rc = ::poll(fds, 2, -1);
        if (rc < 0) {
            if (errno == EINTR) continue;
            throw ConnectionLost(errno_message("poll"));
        }
        if ((fds[1].revents & POLLIN) || closed_.load(std::memory_order_acquire))
            throw ConnectionLost("listener closed");
        if (fds[0].revents & POLLIN) {
            const int fd = ::accept(listen_fd_, nullptr, nullptr);
            if (fd < 0) {
                if (errno == EINTR || errno == ECONNABORTED) continue;
                throw ConnectionLost(errno_message("accept"));
            }
            const int one = 1;
            ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
            return TcpStream(fd);
        }
    }
}

void TcpListener::close() noexcept {
    if (closed_.exchange(true, std::memory_order_acq_rel)) return;
    if (wake_wr_ >= 0) {
        const char byte = 1;
        [[maybe_unused]] ssize_t n = ::write(wake_wr_, &byte, 1);
    }
}

} // namespace swarmgrid::net
