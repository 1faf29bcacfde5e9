#include "brickforge/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

constexpr double kPi = 3.14159265358979323846;

int pow3(int n) {
    int v = 1;
    while (n-- > 0) v *= 3;
    return v;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    while (exp-- > 0) v *= base;
    return v;
}

struct Bounds2 {
    int minX, minY, maxX, maxY;
};

Bounds2 boundsOf(const std::set<Coord2>& cells) {
    Bounds2 b{cells.begin()->x, cells.begin()->y, cells.begin()->x, cells.begin()->y};
    for (const Coord2& c : cells) {
        b.minX = std::min(b.minX, c.x);
        b.minY = std::min(b.minY, c.y);
        b.maxX = std::max(b.maxX, c.x);
        b.maxY = std::max(b.maxY, c.y);
    }
    return b;
}

bool connected8(const std::set<Coord2>& cells) {
    if (cells.empty()) return false;
    std::set<Coord2> seen;
    std::deque<Coord2> queue{*cells.begin()};
    seen.insert(*cells.begin());
    while (!queue.empty()) {
        Coord2 c = queue.front();
        queue.pop_front();
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                Coord2 n{c.x + dx, c.y + dy};
                if (cells.count(n) && !seen.count(n)) {
                    seen.insert(n);
                    queue.push_back(n);
                }
            }
        }
    }
    return seen.size() == cells.size();
}

bool touches(const std::set<Coord2>& cells, const std::set<Coord2>& stamp) {
    for (const Coord2& c : stamp) {
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (cells.count({c.x + dx, c.y + dy})) return true;
            }
        }
    }
    return false;
}

Space2D spaceFromCells(const std::set<Coord2>& cells, const std::string& brick,
                       std::shared_ptr<const Palette> palette) {
    Bounds2 b = boundsOf(cells);
    Space2D space({b.maxX - b.minX + 1, b.maxY - b.minY + 1}, std::move(palette));
    for (const Coord2& c : cells) {
        space.put({1, 1}, brick, {c.x - b.minX, c.y - b.minY});
    }
    return space;
}

void mengerRec(int level, Coord3 origin, std::vector<Coord3>& out) {
    if (level == 0) {
        out.push_back(origin);
        return;
    }
    int sub = pow3(level - 1);
    for (int dx = 0; dx < 3; ++dx) {
        for (int dy = 0; dy < 3; ++dy) {
            for (int dz = 0; dz < 3; ++dz) {
                int middles = (dx == 1) + (dy == 1) + (dz == 1);
                if (middles >= 2) continue;
                mengerRec(level - 1, {origin.x + dx * sub, origin.y + dy * sub, origin.z + dz * sub},
                          out);
            }
        }
    }
}

void requireLevel(int level, int lo, int hi, const char* what) {
    if (level < lo || level > hi) {
        throw Error(ErrorKind::Range, std::string(what) + " level must be in " +
                                          std::to_string(lo) + ".." + std::to_string(hi) +
                                          ", got " + std::to_string(level));
    }
}

}  // namespace

std::optional<Anchor> anchorFromName(const std::string& name) {
    static const std::map<std::string, Anchor> table = {
        {"N", Anchor::N},   {"S", Anchor::S},   {"E", Anchor::E},   {"W", Anchor::W},
        {"NE", Anchor::NE}, {"NW", Anchor::NW}, {"SE", Anchor::SE}, {"SW", Anchor::SW}};
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

const char* anchorName(Anchor anchor) {
    switch (anchor) {
        case Anchor::N: return "N";
        case Anchor::S: return "S";
        case Anchor::E: return "E";
        case Anchor::W: return "W";
        case Anchor::NE: return "NE";
        case Anchor::NW: return "NW";
        case Anchor::SE: return "SE";
        case Anchor::SW: return "SW";
    }
    return "?";
}

Space3D mengerSponge(int level, const std::string& brick,
                     std::shared_ptr<const Palette> palette) {
    requireLevel(level, 0, 5, "menger");
    int side = pow3(level);
    std::vector<Coord3> cells;
    cells.reserve(static_cast<std::size_t>(ipow(20, level)));
    mengerRec(level, {0, 0, 0}, cells);
    Space3D space({side, side, side}, std::move(palette));
    for (const Coord3& c : cells) space.put({1, 1, 1}, brick, c);
    return space;
}

Space3D mengerDual(int level, const std::string& brick, std::shared_ptr<const Palette> palette) {
    requireLevel(level, 0, 5, "menger");
    int side = pow3(level);
    std::vector<Coord3> sponge;
    mengerRec(level, {0, 0, 0}, sponge);
    std::set<Coord3> occupied(sponge.begin(), sponge.end());
    Space3D space({side, side, side}, std::move(palette));
    for (int x = 0; x < side; ++x) {
        for (int y = 0; y < side; ++y) {
            for (int z = 0; z < side; ++z) {
                if (!occupied.count({x, y, z})) space.put({1, 1, 1}, brick, {x, y, z});
            }
        }
    }
    return space;
}

namespace {

void sierpinskiRec(int level, Coord3 origin, std::vector<Coord3>& out) {
    if (level == 0) {
        out.push_back(origin);
        return;
    }
    int b = (1 << level) - 1;       // footprint side of the sub-pyramid
    int lift = 1 << (level - 1);    // height of the sub-pyramid, also the centering offset
    sierpinskiRec(level - 1, origin, out);
    sierpinskiRec(level - 1, {origin.x + b + 1, origin.y, origin.z}, out);
    sierpinskiRec(level - 1, {origin.x, origin.y, origin.z + b + 1}, out);
    sierpinskiRec(level - 1, {origin.x + b + 1, origin.y, origin.z + b + 1}, out);
    sierpinskiRec(level - 1, {origin.x + lift, origin.y + lift, origin.z + lift}, out);
}

}  // namespace

Space3D sierpinskiPyramid(int level, const std::string& brick,
                          std::shared_ptr<const Palette> palette) {
    requireLevel(level, 0, 6, "sierpinski");
    int footprint = (1 << (level + 1)) - 1;
    int height = 1 << level;
    std::vector<Coord3> cells;
    cells.reserve(static_cast<std::size_t>(ipow(5, level)));
    sierpinskiRec(level, {0, 0, 0}, cells);
    Space3D space({footprint, footprint, height}, std::move(palette));
    for (const Coord3& c : cells) space.put({1, 1, 1}, brick, c);
    return space;
}

namespace {

// Serpentine (boustrophedon) Peano path over the 3^level cube. Each macro
// cell's sub-path is reflected per axis by the parity of the other two macro
// coordinates, which lines consecutive sub-paths up face-to-face.
std::vector<Coord3> peanoPath(int level) {
    if (level == 0) return {{0, 0, 0}};
    std::vector<Coord3> sub = peanoPath(level - 1);
    int s = pow3(level - 1);
    std::vector<Coord3> out;
    out.reserve(sub.size() * 27);
    for (int iz = 0; iz < 3; ++iz) {
        int mz = iz;
        for (int iy = 0; iy < 3; ++iy) {
            int my = (mz % 2 == 1) ? 2 - iy : iy;
            for (int ix = 0; ix < 3; ++ix) {
                int mx = ((my + mz) % 2 == 1) ? 2 - ix : ix;
                bool fx = ((my + mz) % 2) == 1;
                bool fy = ((mx + mz) % 2) == 1;
                bool fz = ((mx + my) % 2) == 1;
                for (const Coord3& c : sub) {
                    out.push_back({mx * s + (fx ? s - 1 - c.x : c.x),
                                   my * s + (fy ? s - 1 - c.y : c.y),
                                   mz * s + (fz ? s - 1 - c.z : c.z)});
                }
            }
        }
    }
    return out;
}

}  // namespace

WunderlichResult wunderlichCurve(int level, const std::string& brick,
                                 std::shared_ptr<const Palette> palette) {
    requireLevel(level, 1, 4, "wunderlich");
    std::vector<Coord3> path = peanoPath(level);
    int side = pow3(level);
    Space3D space({side, side, side}, std::move(palette));
    for (const Coord3& c : path) space.put({1, 1, 1}, brick, c);
    return {std::move(path), std::move(space)};
}

Space3D moebius(const MoebiusSpec& spec, const std::string& brick,
                std::shared_ptr<const Palette> palette) {
    if (spec.halfWidth < 1 || spec.thickness < 1 || spec.majorRadius <= spec.halfWidth) {
        throw Error(ErrorKind::Spec, "moebius requires R > w >= 1 and t >= 1");
    }
    const double R = spec.majorRadius;
    const double w = spec.halfWidth;
    const int t = spec.thickness;
    // Step sizes keep consecutive samples under half a cell apart.
    const int uSteps = static_cast<int>(std::ceil(20.0 * (R + w)));
    const double du = 2.0 * kPi / uSteps;
    const int vSteps = spec.halfWidth * 8;  // dv = 0.25

    std::set<Coord3> cells;
    const double halfT = t / 2.0;
    const int reach = (t + 1) / 2;
    for (int ui = 0; ui < uSteps; ++ui) {
        double u = ui * du;
        for (int vi = 0; vi <= vSteps; ++vi) {
            double v = -w + vi * 0.25;
            double r = R + v * std::cos(u / 2.0);
            double px = r * std::cos(u);
            double py = v * std::sin(u / 2.0);
            double pz = r * std::sin(u);
            int cx = static_cast<int>(std::floor(px));
            int cy = static_cast<int>(std::floor(py));
            int cz = static_cast<int>(std::floor(pz));
            cells.insert({cx, cy, cz});
            if (t < 2) continue;
            for (int dx = -reach; dx <= reach; ++dx) {
                for (int dy = -reach; dy <= reach; ++dy) {
                    for (int dz = -reach; dz <= reach; ++dz) {
                        double ex = cx + dx + 0.5 - px;
                        double ey = cy + dy + 0.5 - py;
                        double ez = cz + dz + 0.5 - pz;
                        if (ex * ex + ey * ey + ez * ez <= halfT * halfT) {
                            cells.insert({cx + dx, cy + dy, cz + dz});
                        }
                    }
                }
            }
        }
    }

    Coord3 mn = *cells.begin(), mx = *cells.begin();
    for (const Coord3& c : cells) {
        mn = {std::min(mn.x, c.x), std::min(mn.y, c.y), std::min(mn.z, c.z)};
        mx = {std::max(mx.x, c.x), std::max(mx.y, c.y), std::max(mx.z, c.z)};
    }
    Dim3 needed{mx.x - mn.x + 1, mx.z - mn.z + 1, mx.y - mn.y + 1};
    Dim3 dims = spec.dims.value_or(needed);
    if (needed.width > dims.width || needed.depth > dims.depth || needed.height > dims.height) {
        throw Error(ErrorKind::Spec, "moebius artifact does not fit the requested dimensions");
    }
    Space3D space(dims, std::move(palette));
    for (const Coord3& c : cells) {
        space.put({1, 1, 1}, brick, {c.x - mn.x, c.y - mn.y, c.z - mn.z});
    }
    return space;
}

namespace {

struct StampPlan {
    std::set<Coord2> cells;
    Bounds2 bounds;
};

StampPlan scaleSeed(const std::set<Coord2>& seed, int factor) {
    StampPlan plan;
    for (const Coord2& c : seed) {
        for (int dy = 0; dy < factor; ++dy) {
            for (int dx = 0; dx < factor; ++dx) {
                plan.cells.insert({c.x * factor + dx, c.y * factor + dy});
            }
        }
    }
    plan.bounds = boundsOf(plan.cells);
    return plan;
}

std::set<Coord2> shiftCells(const std::set<Coord2>& cells, int dx, int dy) {
    std::set<Coord2> out;
    for (const Coord2& c : cells) out.insert({c.x + dx, c.y + dy});
    return out;
}

// Leftmost occupied x in the row y (which must contain a cell).
int leftmostInRow(const std::set<Coord2>& cells, int y) {
    int best = 0;
    bool found = false;
    for (const Coord2& c : cells) {
        if (c.y == y && (!found || c.x < best)) {
            best = c.x;
            found = true;
        }
    }
    return best;
}

int bottommostInColumn(const std::set<Coord2>& cells, int x) {
    int best = 0;
    bool found = false;
    for (const Coord2& c : cells) {
        if (c.x == x && (!found || c.y < best)) {
            best = c.y;
            found = true;
        }
    }
    return best;
}

}  // namespace

Space2D lace(const LaceSpec& spec, const std::string& brick,
             std::shared_ptr<const Palette> palette) {
    if (spec.seed.empty()) throw Error(ErrorKind::Spec, "lace seed must be non-empty");
    if (spec.anchors.empty()) throw Error(ErrorKind::Spec, "lace needs at least one anchor");
    if (spec.growth < 2) throw Error(ErrorKind::Spec, "lace growth must be >= 2");
    if (spec.depth < 0) throw Error(ErrorKind::Spec, "lace depth must be >= 0");
    std::set<Coord2> seed(spec.seed.begin(), spec.seed.end());
    for (const Coord2& c : seed) {
        if (c.x < 0 || c.y < 0) throw Error(ErrorKind::Spec, "lace seed cells must be non-negative");
    }
    if (!connected8(seed)) throw Error(ErrorKind::Spec, "lace seed must be 8-connected");
    Bounds2 sb = boundsOf(seed);
    for (Coord2 corner : {Coord2{sb.minX, sb.minY}, Coord2{sb.maxX, sb.minY},
                          Coord2{sb.minX, sb.maxY}, Coord2{sb.maxX, sb.maxY}}) {
        if (!seed.count(corner)) {
            throw Error(ErrorKind::Spec,
                        "lace seed must occupy all four corners of its bounding box");
        }
    }

    // Deterministic anchor order regardless of spec order.
    std::vector<Anchor> anchors;
    for (Anchor a : {Anchor::N, Anchor::S, Anchor::E, Anchor::W, Anchor::NE, Anchor::NW,
                     Anchor::SE, Anchor::SW}) {
        if (std::find(spec.anchors.begin(), spec.anchors.end(), a) != spec.anchors.end()) {
            anchors.push_back(a);
        }
    }

    std::set<Coord2> acc = seed;
    for (int k = 1; k <= spec.depth; ++k) {
        std::int64_t factor64 = ipow(spec.growth, k);
        std::int64_t widest = factor64 * (sb.maxX - sb.minX + 1);
        std::int64_t tallest = factor64 * (sb.maxY - sb.minY + 1);
        if (widest > 100000 || tallest > 100000) {
            throw Error(ErrorKind::Spec, "lace stamp exceeds 100000 cells per side");
        }
        int factor = static_cast<int>(factor64);
        StampPlan stamp = scaleSeed(seed, factor);
        int sw = stamp.bounds.maxX - stamp.bounds.minX + 1;
        int sh = stamp.bounds.maxY - stamp.bounds.minY + 1;
        Bounds2 cur = boundsOf(acc);  // cumulative bbox of the previous step
        for (Anchor a : anchors) {
            int tx = 0, ty = 0;  // target min corner of the stamp's bounding box
            switch (a) {
                case Anchor::NE: tx = cur.maxX + 1; ty = cur.maxY + 1; break;
                case Anchor::NW: tx = cur.minX - sw; ty = cur.maxY + 1; break;
                case Anchor::SE: tx = cur.maxX + 1; ty = cur.minY - sh; break;
                case Anchor::SW: tx = cur.minX - sw; ty = cur.minY - sh; break;
                case Anchor::N: {
                    ty = cur.maxY + 1;
                    int contact = leftmostInRow(acc, cur.maxY);
                    tx = contact - (leftmostInRow(stamp.cells, stamp.bounds.minY) -
                                    stamp.bounds.minX);
                    break;
                }
                case Anchor::S: {
                    ty = cur.minY - sh;
                    int contact = leftmostInRow(acc, cur.minY);
                    tx = contact - (leftmostInRow(stamp.cells, stamp.bounds.maxY) -
                                    stamp.bounds.minX);
                    break;
                }
                case Anchor::E: {
                    tx = cur.maxX + 1;
                    int contact = bottommostInColumn(acc, cur.maxX);
                    ty = contact - (bottommostInColumn(stamp.cells, stamp.bounds.minX) -
                                    stamp.bounds.minY);
                    break;
                }
                case Anchor::W: {
                    tx = cur.minX - sw;
                    int contact = bottommostInColumn(acc, cur.minX);
                    ty = contact - (bottommostInColumn(stamp.cells, stamp.bounds.maxX) -
                                    stamp.bounds.minY);
                    break;
                }
            }
            std::set<Coord2> placed =
                shiftCells(stamp.cells, tx - stamp.bounds.minX, ty - stamp.bounds.minY);
            // Diagonal stamps touch the cumulative bbox corner, which is not
            // always an occupied cell; slide inward until contact.
            int guard = sw + sh + (cur.maxX - cur.minX) + (cur.maxY - cur.minY) + 4;
            while (!touches(acc, placed) && guard-- > 0) {
                int dx = 0, dy = 0;
                switch (a) {
                    case Anchor::NE: dx = -1; dy = -1; break;
                    case Anchor::NW: dx = 1; dy = -1; break;
                    case Anchor::SE: dx = -1; dy = 1; break;
                    case Anchor::SW: dx = 1; dy = 1; break;
                    case Anchor::N: dy = -1; break;
                    case Anchor::S: dy = 1; break;
                    case Anchor::E: dx = -1; break;
                    case Anchor::W: dx = 1; break;
                }
                placed = shiftCells(placed, dx, dy);
            }
            if (guard <= 0) {
                throw Error(ErrorKind::Spec, "lace stamp cannot reach the pattern (anchor " +
                                                 std::string(anchorName(a)) + ", step " +
                                                 std::to_string(k) + ")");
            }
            acc.insert(placed.begin(), placed.end());
        }
    }

    if (!connected8(acc)) {
        throw Error(ErrorKind::Spec, "lace result is not 8-connected");
    }
    return spaceFromCells(acc, brick, std::move(palette));
}

Space2D stampArithmetic(const std::vector<Coord2>& seed, Coord2 stride, int count,
                        const std::string& brick, std::shared_ptr<const Palette> palette) {
    if (seed.empty()) throw Error(ErrorKind::Spec, "seed must be non-empty");
    if (stride.x == 0 && stride.y == 0) throw Error(ErrorKind::Spec, "stride must be non-zero");
    if (count < 1) throw Error(ErrorKind::Spec, "count must be >= 1");
    std::set<Coord2> cells;
    for (int k = 0; k < count; ++k) {
        for (const Coord2& c : seed) {
            cells.insert({c.x + k * stride.x, c.y + k * stride.y});
        }
    }
    return spaceFromCells(cells, brick, std::move(palette));
}

std::vector<Coord2> pentomino(const std::string& name) {
    static const std::map<std::string, std::vector<Coord2>> atlas = {
        {"F", {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}},
        {"I", {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}},
        {"L", {{0, 0}, {1, 0}, {0, 1}, {0, 2}, {0, 3}}},
        {"N", {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}}},
        {"P", {{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}},
        {"T", {{1, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 2}}},
        {"U", {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}}},
        {"V", {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}}},
        {"W", {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}},
        {"X", {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}},
        {"Y", {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}}},
        {"Z", {{1, 0}, {2, 0}, {1, 1}, {0, 2}, {1, 2}}},
    };
    auto it = atlas.find(name);
    if (it == atlas.end()) {
        throw Error(ErrorKind::Range, "unknown pentomino '" + name + "'");
    }
    return it->second;
}

Space2D checkerboard(Dim2 dims, const std::string& evenBrick, const std::string& oddBrick,
                     std::shared_ptr<const Palette> palette) {
    Space2D space(dims, std::move(palette));
    space.traverseWithin({0, 0}, {dims.width - 1, dims.depth - 1},
                         [&](Coord2 c) -> std::optional<std::string> {
                             return (c.x + c.y) % 2 == 0 ? evenBrick : oddBrick;
                         });
    return space;
}

}  // namespace brickforge
