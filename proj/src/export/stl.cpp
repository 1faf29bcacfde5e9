#include "brickforge/export/stl.hpp"

#include <cstdio>
#include <cstring>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

struct FaceSpec {
    int nx, ny, nz;          // outward normal, also the neighbour offset
    int corners[4][3];       // quad corners, CCW seen from outside
};

// Corner offsets are relative to the cell's min corner; the cube spans
// [x, x+1] x [y, y+1] x [z, z+1].
constexpr FaceSpec kFaces[6] = {
    {+1, 0, 0, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}},
    {-1, 0, 0, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0}}},
    {0, +1, 0, {{0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}}},
    {0, -1, 0, {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}},
    {0, 0, +1, {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}},
    {0, 0, -1, {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}}},
};

void appendLE32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
}

void appendFloat(std::vector<std::uint8_t>& out, float f) {
    std::uint32_t bits;
    std::memcpy(&bits, &f, sizeof bits);
    appendLE32(out, bits);
}

void formatFloat(char* buf, std::size_t n, float f) { std::snprintf(buf, n, "%g", f); }

}  // namespace

std::vector<StlTriangle> surfaceMesh(const Space3D& space) {
    std::vector<StlTriangle> mesh;
    for (const auto& [c, brick] : space.occupiedCells()) {
        (void)brick;
        for (const FaceSpec& face : kFaces) {
            if (space.at({c.x + face.nx, c.y + face.ny, c.z + face.nz})) continue;
            std::array<std::array<float, 3>, 4> quad;
            for (int i = 0; i < 4; ++i) {
                quad[i] = {static_cast<float>(c.x + face.corners[i][0]),
                           static_cast<float>(c.y + face.corners[i][1]),
                           static_cast<float>(c.z + face.corners[i][2])};
            }
            std::array<float, 3> normal = {static_cast<float>(face.nx),
                                           static_cast<float>(face.ny),
                                           static_cast<float>(face.nz)};
            mesh.push_back({normal, {quad[0], quad[1], quad[2]}});
            mesh.push_back({normal, {quad[0], quad[2], quad[3]}});
        }
    }
    return mesh;
}

std::vector<std::uint8_t> toStl(const Space3D& space, StlMode mode) {
    if (space.occupiedCount() == 0) {
        throw Error(ErrorKind::Export, "cannot export an empty model to STL");
    }
    std::vector<StlTriangle> mesh = surfaceMesh(space);
    std::vector<std::uint8_t> out;
    if (mode == StlMode::Binary) {
        out.reserve(84 + mesh.size() * 50);
        char header[80] = "brickforge binary stl";
        out.insert(out.end(), header, header + 80);
        appendLE32(out, static_cast<std::uint32_t>(mesh.size()));
        for (const StlTriangle& tri : mesh) {
            for (float f : tri.normal) appendFloat(out, f);
            for (const auto& v : tri.vertices) {
                for (float f : v) appendFloat(out, f);
            }
            out.push_back(0);  // attribute byte count
            out.push_back(0);
        }
        return out;
    }
    std::string text = "solid brickforge\n";
    char num[3][32];
    for (const StlTriangle& tri : mesh) {
        for (int i = 0; i < 3; ++i) formatFloat(num[i], sizeof num[i], tri.normal[i]);
        text += std::string("  facet normal ") + num[0] + " " + num[1] + " " + num[2] + "\n";
        text += "    outer loop\n";
        for (const auto& v : tri.vertices) {
            for (int i = 0; i < 3; ++i) formatFloat(num[i], sizeof num[i], v[i]);
            text += std::string("      vertex ") + num[0] + " " + num[1] + " " + num[2] + "\n";
        }
        text += "    endloop\n";
        text += "  endfacet\n";
    }
    text += "endsolid brickforge\n";
    out.assign(text.begin(), text.end());
    return out;
}

std::vector<std::uint8_t> toStl(const Space2D& space, StlMode mode) {
    return toStl(embedSlab(space), mode);
}

}  // namespace brickforge
