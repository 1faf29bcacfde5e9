#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brickforge/geometry.hpp"
#include "brickforge/space.hpp"

namespace brickforge {

// Stamping directions for lace growth.
enum class Anchor { N, S, E, W, NE, NW, SE, SW };

std::optional<Anchor> anchorFromName(const std::string& name);
const char* anchorName(Anchor anchor);

// Geometric (lace) pattern: a seed shape stamped outward in scaled copies.
// The seed must be non-empty, 8-connected, and occupy all four corners of its
// bounding box; growth >= 2 separates geometric from arithmetic patterns.
struct LaceSpec {
    std::vector<Coord2> seed;
    std::vector<Anchor> anchors;
    int growth = 2;
    int depth = 0;
};

struct MoebiusSpec {
    int majorRadius = 12;           // R, in cells; must exceed halfWidth
    int halfWidth = 4;              // w >= 1
    int thickness = 1;              // t >= 1
    std::optional<Dim3> dims;       // bounding space; fitted to the artifact when absent
};

// Classic Menger recursion: side 3^level, 20^level cells. level in 0..5.
Space3D mengerSponge(int level, const std::string& brick = "RED",
                     std::shared_ptr<const Palette> palette = nullptr);

// Complement of the sponge within its cube: 27^level - 20^level cells.
Space3D mengerDual(int level, const std::string& brick = "BLUE",
                   std::shared_ptr<const Palette> palette = nullptr);

// Four corner copies (gap of one cell) plus one centered copy on top:
// footprint 2^(level+1)-1, height 2^level, 5^level cells. level in 0..6.
Space3D sierpinskiPyramid(int level, const std::string& brick = "GREEN",
                          std::shared_ptr<const Palette> palette = nullptr);

struct WunderlichResult {
    std::vector<Coord3> path;  // Hamiltonian, face-adjacent steps
    Space3D space;
};

// Serpentine Peano traversal of the 3^level cube. level in 1..4.
WunderlichResult wunderlichCurve(int level, const std::string& brick = "RED",
                                 std::shared_ptr<const Palette> palette = nullptr);

// Voxelized Moebius strip, translated to non-negative coordinates.
Space3D moebius(const MoebiusSpec& spec, const std::string& brick = "WHITE",
                std::shared_ptr<const Palette> palette = nullptr);

// Stamps scaled seed copies so each new bounding box touches the previous
// cumulative box in the anchor direction; the result is one 8-connected
// component.
Space2D lace(const LaceSpec& spec, const std::string& brick = "RED",
             std::shared_ptr<const Palette> palette = nullptr);

// count translated copies of the seed at offsets k*stride, k = 0..count-1.
Space2D stampArithmetic(const std::vector<Coord2>& seed, Coord2 stride, int count,
                        const std::string& brick = "RED",
                        std::shared_ptr<const Palette> palette = nullptr);

// Canonical 5-cell shape for F I L N P T U V W X Y Z, min corner at origin.
std::vector<Coord2> pentomino(const std::string& name);

Space2D checkerboard(Dim2 dims, const std::string& evenBrick = "BLACK",
                     const std::string& oddBrick = "WHITE",
                     std::shared_ptr<const Palette> palette = nullptr);

}  // namespace brickforge
