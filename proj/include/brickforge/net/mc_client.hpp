#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "brickforge/export/minecraft.hpp"

namespace brickforge {

// TCP client speaking the RaspberryJuice / Minecraft Pi textual API. The
// subset used here (setPos, setBlock, setBlocks) elicits no responses, so the
// client never reads. Connections are single-owner and used sequentially.
class McConnection {
public:
    static constexpr std::uint16_t kDefaultPort = 4711;
    static constexpr std::chrono::milliseconds kDefaultTimeout{10000};

    static McConnection connect(const std::string& host, std::uint16_t port = kDefaultPort,
                                std::chrono::milliseconds timeout = kDefaultTimeout);

    McConnection();                     // unconnected (test doubles override writeAll)
    explicit McConnection(int fd);      // adopts an open socket
    virtual ~McConnection();
    McConnection(McConnection&& other) noexcept;
    McConnection& operator=(McConnection&& other) noexcept;
    McConnection(const McConnection&) = delete;
    McConnection& operator=(const McConnection&) = delete;

    // Writes every line in order, LF-terminated, flushing in batches of at
    // most batchSize() lines. Returns the number of lines written. A failure
    // mid-stream raises a partial-send error carrying the count already sent.
    std::size_t sendCommands(const CommandList& commands);

    std::size_t batchSize() const { return batchSize_; }
    void setBatchSize(std::size_t lines);

    void close();
    bool isOpen() const { return fd_ >= 0; }

protected:
    // Blocking write of the whole chunk; throws a connection error on failure.
    virtual void writeAll(std::string_view data);

private:
    int fd_ = -1;
    std::size_t batchSize_ = 1000;
};

std::size_t buildArtifact(McConnection& conn, const Space3D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement);
std::size_t buildArtifact(McConnection& conn, const Space2D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement);
std::size_t eraseArtifact(McConnection& conn, std::pair<Coord3, Coord3> bbox,
                          const McPlacement& placement);

}  // namespace brickforge
