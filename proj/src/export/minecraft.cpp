#include "brickforge/export/minecraft.hpp"

#include <cstdio>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {
constexpr std::size_t kMcCapacity = 450000;
}

std::string CommandList::text() const {
    std::string out;
    std::size_t total = 0;
    for (const std::string& line : lines) total += line.size() + 1;
    out.reserve(total);
    for (const std::string& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

CommandList buildCommands(const Space3D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement) {
    if (space.occupiedCount() > kMcCapacity) {
        throw Error(ErrorKind::Capacity,
                    "artifact has " + std::to_string(space.occupiedCount()) +
                        " cells; Minecraft export is limited to " + std::to_string(kMcCapacity));
    }
    CommandList commands;
    commands.lines.reserve(space.occupiedCount() + 1);
    char line[96];
    std::snprintf(line, sizeof line, "player.setPos(%d,%d,%d)", placement.playerPos.x,
                  placement.playerPos.y, placement.playerPos.z);
    commands.lines.emplace_back(line);
    for (const auto& [c, brick] : space.occupiedCells()) {
        auto [id, data] = resolveMc(brick, palette, override);
        int wx = placement.worldOrigin.x + c.x;
        int wy = placement.worldOrigin.y + c.y;
        int wz = placement.worldOrigin.z + (placement.mirrorZ ? -c.z : c.z);
        std::snprintf(line, sizeof line, "world.setBlock(%d,%d,%d,%d,%d)", wx, wy, wz, id, data);
        commands.lines.emplace_back(line);
    }
    return commands;
}

CommandList buildCommands(const Space2D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement) {
    return buildCommands(embedSlab(space), palette, override, placement);
}

CommandList eraseCommands(std::pair<Coord3, Coord3> bbox, const McPlacement& placement) {
    const auto& [mn, mx] = bbox;
    if (mn.x > mx.x || mn.y > mx.y || mn.z > mx.z) {
        throw Error(ErrorKind::Range, "erase box corners are inverted");
    }
    auto translate = [&](Coord3 c) {
        return Coord3{placement.worldOrigin.x + c.x, placement.worldOrigin.y + c.y,
                      placement.worldOrigin.z + (placement.mirrorZ ? -c.z : c.z)};
    };
    Coord3 a = translate(mn);
    Coord3 b = translate(mx);
    CommandList commands;
    char line[128];
    std::snprintf(line, sizeof line, "world.setBlocks(%d,%d,%d,%d,%d,%d,0,0)", a.x, a.y, a.z, b.x,
                  b.y, b.z);
    commands.lines.emplace_back(line);
    return commands;
}

CommandList parseCommandFile(const std::string& text) {
    CommandList commands;
    std::size_t pos = 0;
    int lineNo = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line =
            eol == std::string::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        ++lineNo;
        if (!line.empty()) {
            bool ok = (line.rfind("player.setPos(", 0) == 0 ||
                       line.rfind("world.setBlock(", 0) == 0 ||
                       line.rfind("world.setBlocks(", 0) == 0) &&
                      line.back() == ')';
            if (!ok) {
                throw Error(ErrorKind::Format,
                            "line " + std::to_string(lineNo) + ": not a protocol command");
            }
            commands.lines.push_back(std::move(line));
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    return commands;
}

}  // namespace brickforge
