#pragma once

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <condition_variable>
#include <cstdint>
#include <cstring>
#include <deque>
#include <memory>
#include <mutex>
#include <span>
#include <string>

#include "dedupix/error.hpp"

namespace dedupix {

/// Reliable ordered byte stream, the transport the transfer protocol runs on.
class ByteStream {
  public:
    virtual ~ByteStream() = default;
    virtual void write_all(std::span<const uint8_t> data) = 0;
    virtual void read_exact(std::span<uint8_t> out) = 0;
};

/// Wrapper that counts traffic in each direction.
class CountingStream : public ByteStream {
  public:
    explicit CountingStream(ByteStream& inner) : inner_(inner) {}

    void write_all(std::span<const uint8_t> data) override {
        inner_.write_all(data);
        bytes_written_ += data.size();
    }
    void read_exact(std::span<uint8_t> out) override {
        inner_.read_exact(out);
        bytes_read_ += out.size();
    }

    uint64_t bytes_written() const { return bytes_written_; }
    uint64_t bytes_read() const { return bytes_read_; }

  private:
    ByteStream& inner_;
    uint64_t bytes_written_ = 0;
    uint64_t bytes_read_ = 0;
};

/// TCP stream over a connected socket; owns the descriptor.
class TcpStream : public ByteStream {
  public:
    explicit TcpStream(int fd) : fd_(fd) {
        int one = 1;
        ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    }
    ~TcpStream() override {
        if (fd_ >= 0) ::close(fd_);
    }
    TcpStream(const TcpStream&) = delete;
    TcpStream& operator=(const TcpStream&) = delete;

    static TcpStream connect(const std::string& host, uint16_t port) {
        int fd = ::socket(AF_INET, SOCK_STREAM, 0);
        if (fd < 0) throw IoFailure("socket: " + std::string(std::strerror(errno)));
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_port = htons(port);
        if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
            ::close(fd);
            throw IoFailure("bad address: " + host);
        }
        if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
            int err = errno;
            ::close(fd);
            throw ConnectionLost("connect " + host + ":" + std::to_string(port) + ": " +
                                 std::strerror(err));
        }
        return TcpStream(fd);
    }

    void write_all(std::span<const uint8_t> data) override {
        size_t off = 0;
        while (off < data.size()) {
            ssize_t n = ::send(fd_, data.data() + off, data.size() - off, MSG_NOSIGNAL);
            if (n <= 0) {
                if (n < 0 && errno == EINTR) continue;
                throw ConnectionLost("send: " + std::string(std::strerror(errno)));
            }
            off += static_cast<size_t>(n);
        }
    }

    void read_exact(std::span<uint8_t> out) override {
        size_t off = 0;
        while (off < out.size()) {
            ssize_t n = ::recv(fd_, out.data() + off, out.size() - off, 0);
            if (n == 0) throw ConnectionLost("peer closed the connection");
            if (n < 0) {
                if (errno == EINTR) continue;
                throw ConnectionLost("recv: " + std::string(std::strerror(errno)));
            }
            off += static_cast<size_t>(n);
        }
    }

  private:
    int fd_;
};

class TcpListener {
  public:
    TcpListener(const std::string& host, uint16_t port) {
        fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
        if (fd_ < 0) throw IoFailure("socket: " + std::string(std::strerror(errno)));
        int one = 1;
        ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_port = htons(port);
        if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
            ::close(fd_);
            throw IoFailure("bad address: " + host);
        }
        if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
            ::listen(fd_, 16) != 0) {
            int err = errno;
            ::close(fd_);
            throw IoFailure("bind/listen " + host + ":" + std::to_string(port) + ": " +
                            std::strerror(err));
        }
    }
    ~TcpListener() {
        if (fd_ >= 0) ::close(fd_);
    }
    TcpListener(const TcpListener&) = delete;
    TcpListener& operator=(const TcpListener&) = delete;

    uint16_t port() const {
        sockaddr_in addr{};
        socklen_t len = sizeof(addr);
        ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
        return ntohs(addr.sin_port);
    }

    TcpStream accept() {
        while (true) {
            int fd = ::accept(fd_, nullptr, nullptr);
            if (fd >= 0) return TcpStream(fd);
            if (errno == EINTR) continue;
            throw IoFailure("accept: " + std::string(std::strerror(errno)));
        }
    }

    void close() {
        if (fd_ >= 0) {
            ::shutdown(fd_, SHUT_RDWR);
            ::close(fd_);
            fd_ = -1;
        }
    }

  private:
    int fd_ = -1;
};

namespace detail {

/// One direction of an in-process duplex pipe.
class PipeBuffer {
  public:
    void write(std::span<const uint8_t> data) {
        std::lock_guard lock(mu_);
        if (closed_) throw ConnectionLost("pipe closed");
        buf_.insert(buf_.end(), data.begin(), data.end());
        cv_.notify_all();
    }
    void read(std::span<uint8_t> out) {
        std::unique_lock lock(mu_);
        size_t off = 0;
        while (off < out.size()) {
            cv_.wait(lock, [&] { return !buf_.empty() || closed_; });
            if (buf_.empty() && closed_) throw ConnectionLost("pipe closed");
            size_t take = std::min(out.size() - off, buf_.size());
            std::copy(buf_.begin(), buf_.begin() + take, out.begin() + off);
            buf_.erase(buf_.begin(), buf_.begin() + take);
            off += take;
        }
    }
    void close() {
        std::lock_guard lock(mu_);
        closed_ = true;
        cv_.notify_all();
    }

  private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<uint8_t> buf_;
    bool closed_ = false;
};

}  // namespace detail

/// In-process duplex connection; endpoints are usable from two threads.
class MemoryDuplex {
  public:
    class Endpoint : public ByteStream {
      public:
        Endpoint(std::shared_ptr<detail::PipeBuffer> out, std::shared_ptr<detail::PipeBuffer> in)
            : out_(std::move(out)), in_(std::move(in)) {}
        ~Endpoint() override { close(); }

        void write_all(std::span<const uint8_t> data) override { out_->write(data); }
        void read_exact(std::span<uint8_t> out) override { in_->read(out); }
        void close() {
            out_->close();
            in_->close();
        }

      private:
        std::shared_ptr<detail::PipeBuffer> out_;
        std::shared_ptr<detail::PipeBuffer> in_;
    };

    MemoryDuplex()
        : a_to_b_(std::make_shared<detail::PipeBuffer>()),
          b_to_a_(std::make_shared<detail::PipeBuffer>()),
          a_(a_to_b_, b_to_a_),
          b_(b_to_a_, a_to_b_) {}

    Endpoint& a() { return a_; }
    Endpoint& b() { return b_; }

  private:
    std::shared_ptr<detail::PipeBuffer> a_to_b_;
    std::shared_ptr<detail::PipeBuffer> b_to_a_;
    Endpoint a_;
    Endpoint b_;
};

}  // namespace dedupix
