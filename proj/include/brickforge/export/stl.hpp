#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "brickforge/space.hpp"

namespace brickforge {

enum class StlMode { Ascii, Binary };

struct StlTriangle {
    std::array<float, 3> normal;
    std::array<std::array<float, 3>, 3> vertices;
};

// Surface mesh of the artifact: each occupied cell is a unit cube, faces
// shared by two occupied cells are culled, each exposed face becomes two
// triangles with outward normals.
std::vector<StlTriangle> surfaceMesh(const Space3D& space);

// Binary mode: 80-byte header, little-endian uint32 triangle count, then
// 50 bytes per triangle. Throws on an empty space.
std::vector<std::uint8_t> toStl(const Space3D& space, StlMode mode);
std::vector<std::uint8_t> toStl(const Space2D& space, StlMode mode);

}  // namespace brickforge
