#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brickforge/geometry.hpp"
#include "brickforge/palette.hpp"

namespace brickforge {

// Bounded 2D cell grid. Cells hold brick names from the space's palette;
// storage is sparse. Placement clips silently against the bounds, or against
// the active region when one is set (setMySpace). While a region is active,
// placement coordinates are interpreted relative to the region origin.
// Collisions overwrite: the last writer wins.
class Space2D {
public:
    explicit Space2D(Dim2 dims, std::shared_ptr<const Palette> palette = nullptr);

    const Dim2& dims() const { return dims_; }
    const std::optional<Region2>& region() const { return region_; }
    const Palette& palette() const { return *palette_; }
    std::shared_ptr<const Palette> paletteShared() const { return palette_; }

    std::size_t capacity() const;
    std::size_t occupiedCount() const { return cells_.size(); }
    std::size_t clippedCells() const { return clipped_; }

    // Absolute-coordinate lookup; nullptr when the cell is empty.
    const std::string* at(Coord2 c) const;

    // Sorted lexicographically by (x, y); absolute coordinates.
    std::vector<std::pair<Coord2, std::string>> occupiedCells() const;

    // Fills the rectangle [origin, origin + size).
    void put(Dim2 size, const std::string& brick, Coord2 origin);

    // 8-connected midpoint segment with exactly max(|dx|,|dy|)+1 cells before
    // clipping; the cell set does not depend on endpoint order.
    void line(const std::string& brick, Coord2 p0, Coord2 p1);

    // Cells whose Euclidean distance from center rounds (half-up) to <= radius.
    void circle(int radius, const std::string& brick, Coord2 center);
    // Cells whose distance rounds to exactly radius.
    void ring(int radius, const std::string& brick, Coord2 center);

    void setMySpace(Region2 region);
    void clearMySpace();

    // Applies brickFn to every coordinate of the closed box [lo, hi] in
    // row-major order; a returned brick is placed, nullopt leaves the cell
    // untouched. Coordinates outside the writable area are skipped.
    void traverseWithin(Coord2 lo, Coord2 hi,
                        const std::function<std::optional<std::string>(Coord2)>& brickFn);

private:
    struct Box {
        int x0, y0, x1, y1;  // half-open
    };
    Box writableBox() const;
    Coord2 translate(Coord2 c) const;

    Dim2 dims_;
    std::map<Coord2, std::string> cells_;
    std::optional<Region2> region_;
    std::shared_ptr<const Palette> palette_;
    std::size_t clipped_ = 0;
};

// 3D counterpart; y is the vertical axis.
class Space3D {
public:
    explicit Space3D(Dim3 dims, std::shared_ptr<const Palette> palette = nullptr);

    const Dim3& dims() const { return dims_; }
    const std::optional<Region3>& region() const { return region_; }
    const Palette& palette() const { return *palette_; }
    std::shared_ptr<const Palette> paletteShared() const { return palette_; }

    std::size_t capacity() const;
    std::size_t occupiedCount() const { return cells_.size(); }
    std::size_t clippedCells() const { return clipped_; }

    const std::string* at(Coord3 c) const;
    std::vector<std::pair<Coord3, std::string>> occupiedCells() const;

    void put(Dim3 size, const std::string& brick, Coord3 origin);
    void setMySpace(Region3 region);
    void clearMySpace();
    void traverseWithin(Coord3 lo, Coord3 hi,
                        const std::function<std::optional<std::string>(Coord3)>& brickFn);

private:
    struct Box {
        int x0, y0, z0, x1, y1, z1;
    };
    Box writableBox() const;
    Coord3 translate(Coord3 c) const;

    Dim3 dims_;
    std::map<Coord3, std::string> cells_;
    std::optional<Region3> region_;
    std::shared_ptr<const Palette> palette_;
    std::size_t clipped_ = 0;
};

Space2D build2D(Dim2 dims, std::shared_ptr<const Palette> palette = nullptr);
Space3D build3D(Dim3 dims, std::shared_ptr<const Palette> palette = nullptr);

// Embeds a 2D space into 3D as a one-cell-thick slab: (x, y) -> (x, 0, y).
Space3D embedSlab(const Space2D& space);

}  // namespace brickforge
