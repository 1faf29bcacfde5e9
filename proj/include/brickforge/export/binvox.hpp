#pragma once

#include <cstdint>
#include <vector>

#include "brickforge/space.hpp"

namespace brickforge {

// Occupancy grid decoded from a binvox stream.
struct BinvoxGrid {
    int dim = 0;  // cubic side
    std::vector<std::uint8_t> voxels;  // y fastest, then z, then x

    bool get(int x, int y, int z) const {
        return voxels[static_cast<std::size_t>(x) * dim * dim +
                      static_cast<std::size_t>(z) * dim + y] != 0;
    }
};

// binvox version-1 stream: header, then run-length pairs (value byte, count
// byte 1..255) in y-fastest/z/x order. The grid is the cube of the space's
// largest dimension, padded with empties; sides above 1024 are rejected.
std::vector<std::uint8_t> toBinvox(const Space3D& space);
std::vector<std::uint8_t> toBinvox(const Space2D& space);

BinvoxGrid fromBinvox(const std::vector<std::uint8_t>& bytes);

}  // namespace brickforge
