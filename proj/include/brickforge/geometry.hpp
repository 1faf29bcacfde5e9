#pragma once

#include <compare>

namespace brickforge {

// Integer cell coordinates. 3D uses y as the vertical axis.
struct Coord2 {
    int x = 0;
    int y = 0;
    auto operator<=>(const Coord2&) const = default;
};

struct Coord3 {
    int x = 0;
    int y = 0;
    int z = 0;
    auto operator<=>(const Coord3&) const = default;
};

inline Coord2 operator+(Coord2 a, Coord2 b) { return {a.x + b.x, a.y + b.y}; }
inline Coord3 operator+(Coord3 a, Coord3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

// Cell counts per axis; every component must be >= 1 to be usable.
struct Dim2 {
    int width = 0;
    int depth = 0;
    auto operator<=>(const Dim2&) const = default;
};

struct Dim3 {
    int width = 0;
    int depth = 0;
    int height = 0;
    auto operator<=>(const Dim3&) const = default;
};

struct Region2 {
    Coord2 origin;
    Dim2 dims;
};

struct Region3 {
    Coord3 origin;
    Dim3 dims;
};

}  // namespace brickforge
