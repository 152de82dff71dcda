#ifndef SWARMGRID_NET_SOCKET_HPP
#define SWARMGRID_NET_SOCKET_HPP

#include <atomic>
#include <cstdint>
#include <string>

#include "swarmgrid/net/wire.hpp"

namespace swarmgrid::net {

/// Connected TCP stream carrying length-prefixed JSON frames (4-byte
/// big-endian payload length, then the UTF-8 JSON text). Frame reads and
/// writes are not internally synchronized; callers serialize access.
/// shutdown_both() may be called from any thread to wake a blocked reader.
class TcpStream {
public:
    TcpStream() = default;
    explicit TcpStream(int fd) : fd_(fd) {}
    ~TcpStream();

    TcpStream(TcpStream&& other) noexcept;
    TcpStream& operator=(TcpStream&& other) noexcept;
    TcpStream(const TcpStream&) = delete;
    TcpStream& operator=(const TcpStream&) = delete;

    static TcpStream connect(const std::string& host, std::uint16_t port);

    void send_frame(const Json& message);
    Json recv_frame();

    bool valid() const { return fd_ >= 0; }

    /// Half-closes both directions; any thread blocked in recv_frame on this
    /// stream wakes up with ConnectionLost.
    void shutdown_both() noexcept;

    void close() noexcept;

private:
    void write_all(const void* data, std::size_t len);
    void read_exact(void* data, std::size_t len);

    int fd_ = -1;
};

/// Listening socket. close() (from any thread) unblocks a pending accept()
/// via an internal wake pipe; the file descriptors are released by the
/// destructor, which must run after accepting threads have been joined.
class TcpListener {
public:
    /// Binds port on all interfaces; port 0 picks an ephemeral port.
    explicit TcpListener(std::uint16_t port);
    ~TcpListener();

    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    std::uint16_t port() const { return port_; }

    /// Blocks for the next connection; raises ConnectionLost once closed.
    TcpStream accept();

    void close() noexcept;

private:
    int listen_fd_ = -1;
    int wake_rd_ = -1;
    int wake_wr_ = -1;
    std::uint16_t port_ = 0;
    std::atomic<bool> closed_{false};
};

} // namespace swarmgrid::net

#endif
