#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brickforge {

// A named 1x1 brick with its LDraw rendering data and Minecraft block mapping.
struct BrickDef {
    std::string name;       // uppercase identifier, unique within a palette
    int ldrawColour = 0;    // published LDraw colour code
    std::string ldrawPart;  // part filename, e.g. "3005.dat"
    int mcBlockId = 0;      // 0..255
    int mcBlockData = 0;    // 0..15
};

class Palette {
public:
    // Validates uniqueness, value ranges, and that the palette is non-empty.
    explicit Palette(std::vector<BrickDef> bricks);

    const std::vector<BrickDef>& bricks() const { return bricks_; }
    std::size_t size() const { return bricks_.size(); }
    bool contains(const std::string& name) const;
    const BrickDef* find(const std::string& name) const;  // nullptr when absent
    const BrickDef& at(const std::string& name) const;    // throws a palette error

private:
    std::vector<BrickDef> bricks_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Per-artifact remapping of brick names to Minecraft (blockId, blockData).
using MappingOverride = std::unordered_map<std::string, std::pair<int, int>>;

// Built-in 16-colour palette. Every entry renders as LDraw part 3005.dat and
// maps to a wool block (id 35) with the matching colour data value.
const Palette& defaultPalette();
std::shared_ptr<const Palette> defaultPaletteShared();

// Palette file format: one entry per LF-terminated line,
// NAME,ldraw_colour,ldraw_part,mc_id,mc_data with no internal whitespace.
// Lines starting with '#' are comments.
Palette loadPalette(const std::string& text);
std::string renderPalette(const Palette& palette);

// Override file format: NAME,mc_id,mc_data. Every name must be in `palette`.
MappingOverride loadOverride(const std::string& text, const Palette& palette);

// Override entry wins when present, otherwise the palette default.
std::pair<int, int> resolveMc(const std::string& brick, const Palette& palette,
                              const MappingOverride* override = nullptr);

}  // namespace brickforge
