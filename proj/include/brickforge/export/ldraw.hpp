#pragma once

#include <string>
#include <vector>

#include "brickforge/palette.hpp"
#include "brickforge/space.hpp"

namespace brickforge {

// One type-1 line per occupied cell, sorted by coordinate. A 1x1 brick spans
// 20 LDU horizontally and 24 LDU vertically (LDraw -y is up). Artifacts above
// 250000 bricks produce a warning, not an error.
std::string toLDraw(const Space3D& space, const Palette& palette,
                    std::vector<std::string>* warnings = nullptr);
std::string toLDraw(const Space2D& space, const Palette& palette,
                    std::vector<std::string>* warnings = nullptr);

}  // namespace brickforge
