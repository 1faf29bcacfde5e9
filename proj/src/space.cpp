#include "brickforge/space.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

// floor((2a + b) / (2b)) for b > 0, i.e. a/b rounded with halves toward +inf.
int roundHalfUpDiv(std::int64_t a, std::int64_t b) {
    std::int64_t num = 2 * a + b;
    std::int64_t den = 2 * b;
    std::int64_t q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;
    return static_cast<int>(q);
}

void requireBrick(const Palette& palette, const std::string& brick) {
    if (!palette.contains(brick)) {
        throw Error(ErrorKind::Palette, "unknown brick '" + brick + "'");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Space2D

Space2D::Space2D(Dim2 dims, std::shared_ptr<const Palette> palette)
    : dims_(dims), palette_(palette ? std::move(palette) : defaultPaletteShared()) {
    if (dims.width < 1 || dims.depth < 1) {
        throw Error(ErrorKind::Dimension, "space dimensions must be at least 1x1, got " +
                                              std::to_string(dims.width) + "x" +
                                              std::to_string(dims.depth));
    }
}

std::size_t Space2D::capacity() const {
    return static_cast<std::size_t>(dims_.width) * static_cast<std::size_t>(dims_.depth);
}

const std::string* Space2D::at(Coord2 c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? nullptr : &it->second;
}

std::vector<std::pair<Coord2, std::string>> Space2D::occupiedCells() const {
    return {cells_.begin(), cells_.end()};
}

Space2D::Box Space2D::writableBox() const {
    if (region_) {
        return {region_->origin.x, region_->origin.y, region_->origin.x + region_->dims.width,
                region_->origin.y + region_->dims.depth};
    }
    return {0, 0, dims_.width, dims_.depth};
}

Coord2 Space2D::translate(Coord2 c) const {
    return region_ ? Coord2{region_->origin.x + c.x, region_->origin.y + c.y} : c;
}

void Space2D::put(Dim2 size, const std::string& brick, Coord2 origin) {
    requireBrick(*palette_, brick);
    if (size.width < 1 || size.depth < 1) {
        throw Error(ErrorKind::Dimension, "put size must be at least 1x1, got " +
                                              std::to_string(size.width) + "x" +
                                              std::to_string(size.depth));
    }
    Coord2 abs = translate(origin);
    Box box = writableBox();
    std::int64_t rx1 = static_cast<std::int64_t>(abs.x) + size.width;
    std::int64_t ry1 = static_cast<std::int64_t>(abs.y) + size.depth;
    int x0 = std::max(abs.x, box.x0);
    int y0 = std::max(abs.y, box.y0);
    int x1 = static_cast<int>(std::min<std::int64_t>(rx1, box.x1));
    int y1 = static_cast<int>(std::min<std::int64_t>(ry1, box.y1));
    std::int64_t requested = static_cast<std::int64_t>(size.width) * size.depth;
    std::int64_t placed =
        (x1 > x0 && y1 > y0) ? static_cast<std::int64_t>(x1 - x0) * (y1 - y0) : 0;
    clipped_ += static_cast<std::size_t>(requested - placed);
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            cells_[{x, y}] = brick;
        }
    }
}

void Space2D::line(const std::string& brick, Coord2 p0, Coord2 p1) {
    requireBrick(*palette_, brick);
    if (p1 < p0) std::swap(p0, p1);  // endpoint order must not matter
    int dx = p1.x - p0.x;
    int dy = p1.y - p0.y;
    int steps = std::max(std::abs(dx), std::abs(dy));
    Box box = writableBox();
    for (int i = 0; i <= steps; ++i) {
        Coord2 rel{p0.x + (steps == 0 ? 0 : roundHalfUpDiv(static_cast<std::int64_t>(i) * dx, steps)),
                   p0.y + (steps == 0 ? 0 : roundHalfUpDiv(static_cast<std::int64_t>(i) * dy, steps))};
        Coord2 abs = translate(rel);
        if (abs.x >= box.x0 && abs.x < box.x1 && abs.y >= box.y0 && abs.y < box.y1) {
            cells_[abs] = brick;
        } else {
            ++clipped_;
        }
    }
}

void Space2D::circle(int radius, const std::string& brick, Coord2 center) {
    requireBrick(*palette_, brick);
    if (radius < 0) {
        throw Error(ErrorKind::Range, "circle radius must be >= 0, got " + std::to_string(radius));
    }
    // round-half-up(sqrt(s)) <= r  <=>  s <= r*(r+1), exact in integers.
    std::int64_t limit = static_cast<std::int64_t>(radius) * (radius + 1);
    Coord2 abs = translate(center);
    Box box = writableBox();
    int x0 = std::max<std::int64_t>(abs.x - static_cast<std::int64_t>(radius), box.x0);
    int x1 = std::min<std::int64_t>(abs.x + static_cast<std::int64_t>(radius) + 1, box.x1);
    int y0 = std::max<std::int64_t>(abs.y - static_cast<std::int64_t>(radius), box.y0);
    int y1 = std::min<std::int64_t>(abs.y + static_cast<std::int64_t>(radius) + 1, box.y1);
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            std::int64_t ddx = x - abs.x;
            std::int64_t ddy = y - abs.y;
            if (ddx * ddx + ddy * ddy <= limit) cells_[{x, y}] = brick;
        }
    }
}

void Space2D::ring(int radius, const std::string& brick, Coord2 center) {
    requireBrick(*palette_, brick);
    if (radius < 0) {
        throw Error(ErrorKind::Range, "ring radius must be >= 0, got " + std::to_string(radius));
    }
    // round-half-up(sqrt(s)) == r  <=>  r*(r-1) < s <= r*(r+1)  (s == 0 for r == 0).
    std::int64_t hi = static_cast<std::int64_t>(radius) * (radius + 1);
    std::int64_t lo = static_cast<std::int64_t>(radius) * (radius - 1);
    Coord2 abs = translate(center);
    Box box = writableBox();
    int x0 = std::max<std::int64_t>(abs.x - static_cast<std::int64_t>(radius), box.x0);
    int x1 = std::min<std::int64_t>(abs.x + static_cast<std::int64_t>(radius) + 1, box.x1);
    int y0 = std::max<std::int64_t>(abs.y - static_cast<std::int64_t>(radius), box.y0);
    int y1 = std::min<std::int64_t>(abs.y + static_cast<std::int64_t>(radius) + 1, box.y1);
    for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
            std::int64_t ddx = x - abs.x;
            std::int64_t ddy = y - abs.y;
            std::int64_t s = ddx * ddx + ddy * ddy;
            bool on = radius == 0 ? s == 0 : (s > lo && s <= hi);
            if (on) cells_[{x, y}] = brick;
        }
    }
}

void Space2D::setMySpace(Region2 region) {
    if (region.dims.width < 1 || region.dims.depth < 1) {
        throw Error(ErrorKind::Region, "region dimensions must be at least 1x1");
    }
    if (region.origin.x < 0 || region.origin.y < 0 ||
        region.origin.x + region.dims.width > dims_.width ||
        region.origin.y + region.dims.depth > dims_.depth) {
        throw Error(ErrorKind::Region, "region exceeds the space bounds");
    }
    region_ = region;
}

void Space2D::clearMySpace() { region_.reset(); }

void Space2D::traverseWithin(Coord2 lo, Coord2 hi,
                             const std::function<std::optional<std::string>(Coord2)>& brickFn) {
    if (lo.x > hi.x || lo.y > hi.y) {
        throw Error(ErrorKind::Range, "traverseWithin bounds are inverted");
    }
    Box box = writableBox();
    int w = box.x1 - box.x0;
    int d = box.y1 - box.y0;
    int x0 = std::max(lo.x, 0), x1 = std::min(hi.x, w - 1);
    int y0 = std::max(lo.y, 0), y1 = std::min(hi.y, d - 1);
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            Coord2 c{x, y};
            auto brick = brickFn(c);
            if (brick) {
                requireBrick(*palette_, *brick);
                cells_[translate(c)] = *brick;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Space3D

Space3D::Space3D(Dim3 dims, std::shared_ptr<const Palette> palette)
    : dims_(dims), palette_(palette ? std::move(palette) : defaultPaletteShared()) {
    if (dims.width < 1 || dims.depth < 1 || dims.height < 1) {
        throw Error(ErrorKind::Dimension,
                    "space dimensions must be at least 1x1x1, got " + std::to_string(dims.width) +
                        "x" + std::to_string(dims.depth) + "x" + std::to_string(dims.height));
    }
}

std::size_t Space3D::capacity() const {
    return static_cast<std::size_t>(dims_.width) * static_cast<std::size_t>(dims_.depth) *
           static_cast<std::size_t>(dims_.height);
}

const std::string* Space3D::at(Coord3 c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? nullptr : &it->second;
}

std::vector<std::pair<Coord3, std::string>> Space3D::occupiedCells() const {
    return {cells_.begin(), cells_.end()};
}

Space3D::Box Space3D::writableBox() const {
    if (region_) {
        return {region_->origin.x,
                region_->origin.y,
                region_->origin.z,
                region_->origin.x + region_->dims.width,
                region_->origin.y + region_->dims.height,
                region_->origin.z + region_->dims.depth};
    }
    return {0, 0, 0, dims_.width, dims_.height, dims_.depth};
}

Coord3 Space3D::translate(Coord3 c) const { return region_ ? region_->origin + c : c; }

void Space3D::put(Dim3 size, const std::string& brick, Coord3 origin) {
    requireBrick(*palette_, brick);
    if (size.width < 1 || size.depth < 1 || size.height < 1) {
        throw Error(ErrorKind::Dimension,
                    "put size must be at least 1x1x1, got " + std::to_string(size.width) + "x" +
                        std::to_string(size.depth) + "x" + std::to_string(size.height));
    }
    Coord3 abs = translate(origin);
    Box box = writableBox();
    int x0 = std::max(abs.x, box.x0);
    int y0 = std::max(abs.y, box.y0);
    int z0 = std::max(abs.z, box.z0);
    int x1 = static_cast<int>(std::min<std::int64_t>(static_cast<std::int64_t>(abs.x) + size.width, box.x1));
    int y1 = static_cast<int>(std::min<std::int64_t>(static_cast<std::int64_t>(abs.y) + size.height, box.y1));
    int z1 = static_cast<int>(std::min<std::int64_t>(static_cast<std::int64_t>(abs.z) + size.depth, box.z1));
    std::int64_t requested =
        static_cast<std::int64_t>(size.width) * size.depth * size.height;
    std::int64_t placed = 0;
    if (x1 > x0 && y1 > y0 && z1 > z0) {
        placed = static_cast<std::int64_t>(x1 - x0) * (y1 - y0) * (z1 - z0);
    }
    clipped_ += static_cast<std::size_t>(requested - placed);
    for (int x = x0; x < x1; ++x) {
        for (int y = y0; y < y1; ++y) {
            for (int z = z0; z < z1; ++z) {
                cells_[{x, y, z}] = brick;
            }
        }
    }
}

void Space3D::setMySpace(Region3 region) {
    if (region.dims.width < 1 || region.dims.depth < 1 || region.dims.height < 1) {
        throw Error(ErrorKind::Region, "region dimensions must be at least 1x1x1");
    }
    if (region.origin.x < 0 || region.origin.y < 0 || region.origin.z < 0 ||
        region.origin.x + region.dims.width > dims_.width ||
        region.origin.y + region.dims.height > dims_.height ||
        region.origin.z + region.dims.depth > dims_.depth) {
        throw Error(ErrorKind::Region, "region exceeds the space bounds");
    }
    region_ = region;
}

void Space3D::clearMySpace() { region_.reset(); }

void Space3D::traverseWithin(Coord3 lo, Coord3 hi,
                             const std::function<std::optional<std::string>(Coord3)>& brickFn) {
    if (lo.x > hi.x || lo.y > hi.y || lo.z > hi.z) {
        throw Error(ErrorKind::Range, "traverseWithin bounds are inverted");
    }
    Box box = writableBox();
    int w = box.x1 - box.x0;
    int h = box.y1 - box.y0;
    int d = box.z1 - box.z0;
    int x0 = std::max(lo.x, 0), x1 = std::min(hi.x, w - 1);
    int y0 = std::max(lo.y, 0), y1 = std::min(hi.y, h - 1);
    int z0 = std::max(lo.z, 0), z1 = std::min(hi.z, d - 1);
    for (int x = x0; x <= x1; ++x) {
        for (int y = y0; y <= y1; ++y) {
            for (int z = z0; z <= z1; ++z) {
                Coord3 c{x, y, z};
                auto brick = brickFn(c);
                if (brick) {
                    requireBrick(*palette_, *brick);
                    cells_[translate(c)] = *brick;
                }
            }
        }
    }
}

Space2D build2D(Dim2 dims, std::shared_ptr<const Palette> palette) {
    return Space2D(dims, std::move(palette));
}

Space3D build3D(Dim3 dims, std::shared_ptr<const Palette> palette) {
    return Space3D(dims, std::move(palette));
}

Space3D embedSlab(const Space2D& space) {
    Space3D slab({space.dims().width, space.dims().depth, 1}, space.paletteShared());
    for (const auto& [c, brick] : space.occupiedCells()) {
        slab.put({1, 1, 1}, brick, {c.x, 0, c.y});
    }
    return slab;
}

}  // namespace brickforge
