#include "brickforge/net/mc_client.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <utility>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

std::string endpointLabel(const std::string& host, std::uint16_t port) {
    return host + ":" + std::to_string(port);
}

void setBlocking(int fd, bool blocking) {
    int flags = ::fcntl(fd, F_GETFL, 0);
    if (flags < 0) return;
    if (blocking) {
        ::fcntl(fd, F_SETFL, flags & ~O_NONBLOCK);
    } else {
        ::fcntl(fd, F_SETFL, flags | O_NONBLOCK);
    }
}

}  // namespace

McConnection::McConnection() = default;

McConnection::McConnection(int fd) : fd_(fd) {}

McConnection::~McConnection() { close(); }

McConnection::McConnection(McConnection&& other) noexcept
    : fd_(std::exchange(other.fd_, -1)), batchSize_(other.batchSize_) {}

McConnection& McConnection::operator=(McConnection&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = std::exchange(other.fd_, -1);
        batchSize_ = other.batchSize_;
    }
    return *this;
}

void McConnection::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

void McConnection::setBatchSize(std::size_t lines) {
    batchSize_ = lines > 0 ? lines : 1;
}

McConnection McConnection::connect(const std::string& host, std::uint16_t port,
                                   std::chrono::milliseconds timeout) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* results = nullptr;
    std::string portStr = std::to_string(port);
    int rc = ::getaddrinfo(host.c_str(), portStr.c_str(), &hints, &results);
    if (rc != 0) {
        throw Error(ErrorKind::Connection, "cannot resolve " + endpointLabel(host, port) + ": " +
                                               ::gai_strerror(rc));
    }

    std::string lastError = "no addresses";
    for (addrinfo* ai = results; ai != nullptr; ai = ai->ai_next) {
        int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) {
            lastError = std::strerror(errno);
            continue;
        }
        setBlocking(fd, false);
        rc = ::connect(fd, ai->ai_addr, ai->ai_addrlen);
        if (rc != 0 && errno == EINPROGRESS) {
            pollfd pfd{fd, POLLOUT, 0};
            int ready = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
            if (ready == 0) {
                ::close(fd);
                ::freeaddrinfo(results);
                throw Error(ErrorKind::Connection,
                            "connection to " + endpointLabel(host, port) + " timed out after " +
                                std::to_string(timeout.count()) + " ms");
            }
            int soError = 0;
            socklen_t len = sizeof soError;
            if (ready < 0 || ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &soError, &len) != 0 ||
                soError != 0) {
                lastError = soError != 0 ? std::strerror(soError) : std::strerror(errno);
                ::close(fd);
                continue;
            }
            rc = 0;
        }
        if (rc != 0) {
            lastError = std::strerror(errno);
            ::close(fd);
            continue;
        }
        setBlocking(fd, true);
        timeval tv{};
        tv.tv_sec = static_cast<time_t>(timeout.count() / 1000);
        tv.tv_usec = static_cast<suseconds_t>((timeout.count() % 1000) * 1000);
        ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
        ::freeaddrinfo(results);
        return McConnection(fd);
    }
    ::freeaddrinfo(results);
    throw Error(ErrorKind::Connection,
                "cannot connect to " + endpointLabel(host, port) + ": " + lastError);
}

void McConnection::writeAll(std::string_view data) {
    if (fd_ < 0) {
        throw Error(ErrorKind::Connection, "connection is not open");
    }
    const char* p = data.data();
    std::size_t remaining = data.size();
    while (remaining > 0) {
        ssize_t n = ::send(fd_, p, remaining, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw Error(ErrorKind::Connection, std::string("write failed: ") +
                                                   std::strerror(errno));
        }
        if (n == 0) {
            throw Error(ErrorKind::Connection, "write made no progress");
        }
        p += n;
        remaining -= static_cast<std::size_t>(n);
    }
}

std::size_t McConnection::sendCommands(const CommandList& commands) {
    std::size_t sent = 0;  // lines fully handed to the transport
    std::string buffer;
    std::size_t buffered = 0;
    auto flush = [&]() {
        if (buffered == 0) return;
        try {
            writeAll(buffer);
        } catch (const Error& e) {
            throw Error(ErrorKind::PartialSend,
                        "sent " + std::to_string(sent) + " of " +
                            std::to_string(commands.lines.size()) + " lines: " + e.message(),
                        sent);
        }
        sent += buffered;
        buffer.clear();
        buffered = 0;
    };
    for (const std::string& line : commands.lines) {
        buffer += line;
        buffer += '\n';
        if (++buffered >= batchSize_) flush();
    }
    flush();
    return sent;
}

std::size_t buildArtifact(McConnection& conn, const Space3D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement) {
    CommandList commands = buildCommands(space, palette, override, placement);
    return conn.sendCommands(commands);
}

std::size_t buildArtifact(McConnection& conn, const Space2D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement) {
    CommandList commands = buildCommands(space, palette, override, placement);
    return conn.sendCommands(commands);
}

std::size_t eraseArtifact(McConnection& conn, std::pair<Coord3, Coord3> bbox,
                          const McPlacement& placement) {
    CommandList commands = eraseCommands(bbox, placement);
    return conn.sendCommands(commands);
}

}  // namespace brickforge
