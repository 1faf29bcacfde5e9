#include "brickforge/export/ldraw.hpp"

#include <cstdio>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {
constexpr std::size_t kLDrawComfortLimit = 250000;
}

std::string toLDraw(const Space3D& space, const Palette& palette,
                    std::vector<std::string>* warnings) {
    auto cells = space.occupiedCells();
    if (cells.size() > kLDrawComfortLimit && warnings) {
        warnings->push_back("artifact has " + std::to_string(cells.size()) +
                            " bricks; LDraw viewers may struggle above " +
                            std::to_string(kLDrawComfortLimit));
    }
    std::string out = "0 brickforge export\n";
    out.reserve(out.size() + cells.size() * 48);
    char line[160];
    for (const auto& [c, brick] : cells) {
        const BrickDef& def = palette.at(brick);
        std::snprintf(line, sizeof line, "1 %d %d %d %d 1 0 0 0 1 0 0 0 1 %s\n",
                      def.ldrawColour, 20 * c.x, -24 * c.y, 20 * c.z, def.ldrawPart.c_str());
        out += line;
    }
    return out;
}

std::string toLDraw(const Space2D& space, const Palette& palette,
                    std::vector<std::string>* warnings) {
    return toLDraw(embedSlab(space), palette, warnings);
}

}  // namespace brickforge
