#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brickforge/palette.hpp"
#include "brickforge/space.hpp"

namespace brickforge {

// Where an artifact lands in a Minecraft world. Cell (x, y, z) maps to
// worldOrigin + (x, y, mirrorZ ? -z : z); y stays the vertical axis.
struct McPlacement {
    Coord3 worldOrigin{};
    Coord3 playerPos{};
    bool mirrorZ = false;
};

// Ordered protocol lines, ready for file emission or TCP replay. Lines carry
// no terminator; emission appends one LF per line.
struct CommandList {
    std::vector<std::string> lines;

    std::string text() const;
};

// One player.setPos line, then one world.setBlock line per occupied cell in
// sorted order. Artifacts above 450000 cells are rejected.
CommandList buildCommands(const Space3D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement);
CommandList buildCommands(const Space2D& space, const Palette& palette,
                          const MappingOverride* override, const McPlacement& placement);

// Single world.setBlocks line filling the translated box with air.
CommandList eraseCommands(std::pair<Coord3, Coord3> bbox, const McPlacement& placement);

// Reads a .mcmd file back into a CommandList, validating line shapes.
CommandList parseCommandFile(const std::string& text);

}  // namespace brickforge
