#include "brickforge/palette.hpp"

#include <charconv>
#include <cctype>

#include "brickforge/error.hpp"

namespace brickforge {

namespace {

bool validName(const std::string& name) {
    if (name.empty() || !(std::isupper(static_cast<unsigned char>(name[0])))) return false;
    for (char c : name) {
        if (!(std::isupper(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

void validateDef(const BrickDef& def, const std::string& where) {
    if (!validName(def.name)) {
        throw Error(ErrorKind::Format, where + ": brick name '" + def.name +
                                           "' must be an uppercase identifier");
    }
    if (def.ldrawColour < 0) {
        throw Error(ErrorKind::Format, where + ": LDraw colour must be >= 0");
    }
    if (def.ldrawPart.empty()) {
        throw Error(ErrorKind::Format, where + ": LDraw part must be non-empty");
    }
    if (def.mcBlockId < 0 || def.mcBlockId > 255) {
        throw Error(ErrorKind::Format, where + ": Minecraft block id " +
                                           std::to_string(def.mcBlockId) + " outside 0..255");
    }
    if (def.mcBlockData < 0 || def.mcBlockData > 15) {
        throw Error(ErrorKind::Format, where + ": Minecraft block data " +
                                           std::to_string(def.mcBlockData) + " outside 0..15");
    }
}

int parseInt(const std::string& field, const std::string& where) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(ErrorKind::Format, where + ": '" + field + "' is not an integer");
    }
    return value;
}

std::vector<std::string> splitFields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

// Iterates LF-separated lines, skipping comments and blank lines.
template <typename Fn>
void forEachEntryLine(const std::string& text, Fn&& fn) {
    std::size_t pos = 0;
    int lineNo = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line =
            eol == std::string::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        ++lineNo;
        if (!line.empty() && line[0] != '#') {
            for (char c : line) {
                if (std::isspace(static_cast<unsigned char>(c))) {
                    throw Error(ErrorKind::Format, "line " + std::to_string(lineNo) +
                                                       ": whitespace is not allowed inside entries");
                }
            }
            fn(line, lineNo);
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
}

}  // namespace

Palette::Palette(std::vector<BrickDef> bricks) : bricks_(std::move(bricks)) {
    if (bricks_.empty()) {
        throw Error(ErrorKind::Format, "palette must contain at least one brick");
    }
    for (std::size_t i = 0; i < bricks_.size(); ++i) {
        validateDef(bricks_[i], "brick " + std::to_string(i + 1));
        if (!index_.emplace(bricks_[i].name, i).second) {
            throw Error(ErrorKind::Format, "duplicate brick name '" + bricks_[i].name + "'");
        }
    }
}

bool Palette::contains(const std::string& name) const { return index_.count(name) != 0; }

const BrickDef* Palette::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &bricks_[it->second];
}

const BrickDef& Palette::at(const std::string& name) const {
    const BrickDef* def = find(name);
    if (!def) throw Error(ErrorKind::Palette, "unknown brick '" + name + "'");
    return *def;
}

const Palette& defaultPalette() {
    // Wool data values follow the classic Minecraft colour table.
    static const Palette palette{{
        {"BLACK", 0, "3005.dat", 35, 15},
        {"BLUE", 1, "3005.dat", 35, 11},
        {"GREEN", 2, "3005.dat", 35, 13},
        {"RED", 4, "3005.dat", 35, 14},
        {"MAGENTA", 5, "3005.dat", 35, 2},
        {"BROWN", 6, "3005.dat", 35, 12},
        {"LIGHT_GRAY", 7, "3005.dat", 35, 8},
        {"DARK_GRAY", 8, "3005.dat", 35, 7},
        {"LIGHT_BLUE", 9, "3005.dat", 35, 3},
        {"LIME", 10, "3005.dat", 35, 5},
        {"CYAN", 11, "3005.dat", 35, 9},
        {"PINK", 13, "3005.dat", 35, 6},
        {"YELLOW", 14, "3005.dat", 35, 4},
        {"WHITE", 15, "3005.dat", 35, 0},
        {"PURPLE", 22, "3005.dat", 35, 10},
        {"ORANGE", 25, "3005.dat", 35, 1},
    }};
    return palette;
}

std::shared_ptr<const Palette> defaultPaletteShared() {
    static const auto shared = std::make_shared<const Palette>(defaultPalette());
    return shared;
}

Palette loadPalette(const std::string& text) {
    std::vector<BrickDef> bricks;
    std::unordered_map<std::string, int> seen;  // name -> first line
    forEachEntryLine(text, [&](const std::string& line, int lineNo) {
        const std::string where = "line " + std::to_string(lineNo);
        auto fields = splitFields(line);
        if (fields.size() != 5) {
            throw Error(ErrorKind::Format,
                        where + ": expected NAME,ldraw_colour,ldraw_part,mc_id,mc_data");
        }
        BrickDef def{fields[0], parseInt(fields[1], where), fields[2],
                     parseInt(fields[3], where), parseInt(fields[4], where)};
        validateDef(def, where);
        if (!seen.emplace(def.name, lineNo).second) {
            throw Error(ErrorKind::Format, where + ": duplicate brick name '" + def.name + "'");
        }
        bricks.push_back(std::move(def));
    });
    if (bricks.empty()) {
        throw Error(ErrorKind::Format, "palette file contains no entries");
    }
    return Palette(std::move(bricks));
}

std::string renderPalette(const Palette& palette) {
    std::string out;
    for (const BrickDef& def : palette.bricks()) {
        out += def.name + "," + std::to_string(def.ldrawColour) + "," + def.ldrawPart + "," +
               std::to_string(def.mcBlockId) + "," + std::to_string(def.mcBlockData) + "\n";
    }
    return out;
}

MappingOverride loadOverride(const std::string& text, const Palette& palette) {
    MappingOverride override;
    forEachEntryLine(text, [&](const std::string& line, int lineNo) {
        const std::string where = "line " + std::to_string(lineNo);
        auto fields = splitFields(line);
        if (fields.size() != 3) {
            throw Error(ErrorKind::Format, where + ": expected NAME,mc_id,mc_data");
        }
        const std::string& name = fields[0];
        if (!palette.contains(name)) {
            throw Error(ErrorKind::Format,
                        where + ": override names unknown brick '" + name + "'");
        }
        int id = parseInt(fields[1], where);
        int data = parseInt(fields[2], where);
        if (id < 0 || id > 255) {
            throw Error(ErrorKind::Format, where + ": Minecraft block id outside 0..255");
        }
        if (data < 0 || data > 15) {
            throw Error(ErrorKind::Format, where + ": Minecraft block data outside 0..15");
        }
        if (!override.emplace(name, std::make_pair(id, data)).second) {
            throw Error(ErrorKind::Format, where + ": duplicate override for '" + name + "'");
        }
    });
    return override;
}

std::pair<int, int> resolveMc(const std::string& brick, const Palette& palette,
                              const MappingOverride* override) {
    const BrickDef& def = palette.at(brick);
    if (override) {
        auto it = override->find(brick);
        if (it != override->end()) return it->second;
    }
    return {def.mcBlockId, def.mcBlockData};
}

}  // namespace brickforge
