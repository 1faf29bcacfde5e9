#include "brickforge/export/binvox.hpp"

#include <algorithm>
#include <string>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

constexpr int kMaxSide = 1024;

void appendRun(std::vector<std::uint8_t>& out, std::uint8_t value, std::size_t count) {
    while (count > 0) {
        std::size_t chunk = std::min<std::size_t>(count, 255);
        out.push_back(value);
        out.push_back(static_cast<std::uint8_t>(chunk));
        count -= chunk;
    }
}

}  // namespace

std::vector<std::uint8_t> toBinvox(const Space3D& space) {
    int d = std::max({space.dims().width, space.dims().depth, space.dims().height});
    if (d > kMaxSide) {
        throw Error(ErrorKind::Capacity, "binvox grid side " + std::to_string(d) +
                                             " exceeds the limit of " + std::to_string(kMaxSide));
    }
    std::string header = "#binvox 1\n"
                         "dim " + std::to_string(d) + " " + std::to_string(d) + " " +
                         std::to_string(d) + "\n"
                         "translate 0 0 0\n"
                         "scale 1\n"
                         "data\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());

    std::uint8_t runValue = 0;
    std::size_t runLength = 0;
    for (int x = 0; x < d; ++x) {
        for (int z = 0; z < d; ++z) {
            for (int y = 0; y < d; ++y) {
                std::uint8_t v = space.at({x, y, z}) ? 1 : 0;
                if (runLength > 0 && v == runValue) {
                    ++runLength;
                } else {
                    appendRun(out, runValue, runLength);
                    runValue = v;
                    runLength = 1;
                }
            }
        }
    }
    appendRun(out, runValue, runLength);
    return out;
}

std::vector<std::uint8_t> toBinvox(const Space2D& space) { return toBinvox(embedSlab(space)); }

BinvoxGrid fromBinvox(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    auto readLine = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        if (pos >= bytes.size()) {
            throw Error(ErrorKind::Format, "binvox header is truncated");
        }
        std::string line(bytes.begin() + start, bytes.begin() + pos);
        ++pos;  // consume '\n'
        return line;
    };

    if (readLine() != "#binvox 1") {
        throw Error(ErrorKind::Format, "not a binvox version 1 stream");
    }
    int dx = 0, dy = 0, dz = 0;
    bool sawDim = false;
    while (true) {
        std::string line = readLine();
        if (line == "data") break;
        if (line.rfind("dim ", 0) == 0) {
            if (std::sscanf(line.c_str(), "dim %d %d %d", &dx, &dy, &dz) != 3) {
                throw Error(ErrorKind::Format, "malformed binvox dim line");
            }
            sawDim = true;
        }
        // translate and scale lines are accepted and ignored
    }
    if (!sawDim || dx < 1 || dx != dy || dy != dz) {
        throw Error(ErrorKind::Format, "binvox grid must be cubic with side >= 1");
    }
    if (dx > kMaxSide) {
        throw Error(ErrorKind::Format, "binvox grid side exceeds the limit");
    }

    BinvoxGrid grid;
    grid.dim = dx;
    std::size_t total = static_cast<std::size_t>(dx) * dx * dx;
    grid.voxels.reserve(total);
    while (grid.voxels.size() < total) {
        if (pos + 1 >= bytes.size()) {
            throw Error(ErrorKind::Format, "binvox data section ended early (RLE underflow)");
        }
        std::uint8_t value = bytes[pos];
        std::uint8_t count = bytes[pos + 1];
        pos += 2;
        if (value > 1) {
            throw Error(ErrorKind::Format, "binvox run value must be 0 or 1");
        }
        if (count == 0) {
            throw Error(ErrorKind::Format, "binvox run count must be 1..255");
        }
        if (grid.voxels.size() + count > total) {
            throw Error(ErrorKind::Format, "binvox data section overflows the grid");
        }
        grid.voxels.insert(grid.voxels.end(), count, value);
    }
    return grid;
}

}  // namespace brickforge
