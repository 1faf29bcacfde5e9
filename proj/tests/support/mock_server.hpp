// Loopback mock of the RaspberryJuice endpoint: accepts one connection and
// records every byte it receives. Optionally closes the connection after a
// given number of complete lines.
#pragma once

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdint>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace testsupport {

class MockMcServer {
public:
    explicit MockMcServer(std::size_t closeAfterLines = static_cast<std::size_t>(-1))
        : closeAfterLines_(closeAfterLines) {
        listenFd_ = ::socket(AF_INET, SOCK_STREAM, 0);
        if (listenFd_ < 0) throw std::runtime_error("mock server: socket failed");
        int one = 1;
        ::setsockopt(listenFd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
        addr.sin_port = 0;
        if (::bind(listenFd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 ||
            ::listen(listenFd_, 1) != 0) {
            ::close(listenFd_);
            throw std::runtime_error("mock server: bind/listen failed");
        }
        socklen_t len = sizeof addr;
        ::getsockname(listenFd_, reinterpret_cast<sockaddr*>(&addr), &len);
        port_ = ntohs(addr.sin_port);
        thread_ = std::thread([this] { serve(); });
    }

    ~MockMcServer() {
        if (listenFd_ >= 0) {
            ::shutdown(listenFd_, SHUT_RDWR);
            ::close(listenFd_);
        }
        if (thread_.joinable()) thread_.join();
    }

    std::uint16_t port() const { return port_; }

    // Blocks until the client disconnects (or the server closed early).
    void waitForSession() {
        if (thread_.joinable()) thread_.join();
    }

    std::string bytes() {
        std::lock_guard<std::mutex> lock(mutex_);
        return received_;
    }

    std::vector<std::string> lines() {
        std::lock_guard<std::mutex> lock(mutex_);
        std::vector<std::string> out;
        std::size_t pos = 0;
        while (pos < received_.size()) {
            std::size_t eol = received_.find('\n', pos);
            if (eol == std::string::npos) break;  // ignore a trailing partial line
            out.push_back(received_.substr(pos, eol - pos));
            pos = eol + 1;
        }
        return out;
    }

private:
    void serve() {
        pollfd pfd{listenFd_, POLLIN, 0};
        if (::poll(&pfd, 1, 15000) <= 0) return;
        int client = ::accept(listenFd_, nullptr, nullptr);
        if (client < 0) return;
        char buf[4096];
        std::size_t completeLines = 0;
        while (true) {
            ssize_t n = ::read(client, buf, sizeof buf);
            if (n <= 0) break;
            {
                std::lock_guard<std::mutex> lock(mutex_);
                received_.append(buf, static_cast<std::size_t>(n));
            }
            for (ssize_t i = 0; i < n; ++i) {
                if (buf[i] == '\n') ++completeLines;
            }
            if (completeLines >= closeAfterLines_) break;
        }
        ::close(client);
    }

    int listenFd_ = -1;
    std::uint16_t port_ = 0;
    std::size_t closeAfterLines_;
    std::thread thread_;
    std::mutex mutex_;
    std::string received_;
};

}  // namespace testsupport
