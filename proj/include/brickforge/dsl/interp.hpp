#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "brickforge/dsl/ast.hpp"
#include "brickforge/palette.hpp"
#include "brickforge/space.hpp"

namespace brickforge::dsl {

enum class ShowTarget { Show2D, Show3D, Mc, Stl, Ldraw, Binvox };

struct ShowDirective {
    ShowTarget target;
    std::string name;  // artifact name; becomes the output filename stem
    SourcePos pos;
};

struct EvalResult {
    std::variant<std::monostate, Space2D, Space3D> space;
    std::vector<ShowDirective> directives;

    bool has2D() const { return std::holds_alternative<Space2D>(space); }
    bool has3D() const { return std::holds_alternative<Space3D>(space); }
    const Space2D& space2D() const { return std::get<Space2D>(space); }
    const Space3D& space3D() const { return std::get<Space3D>(space); }
};

struct EvalOptions {
    std::size_t recursionLimit = 10000;
    // Placement work is pre-checked against this budget so hostile or
    // corrupted programs cannot stall the evaluator.
    std::size_t cellBudget = 2000000;
    int maxDimension = 1000000;
};

// Runs a parsed program. Builtins are bound by `open Level_k` (levels 1..3
// cover 2D, 4..5 add 3D, traverseWithin and brick functions); palette colour
// names become brick constants. All errors carry source positions.
EvalResult evaluate(const Program& program, std::shared_ptr<const Palette> palette = nullptr,
                    const EvalOptions& options = {});

}  // namespace brickforge::dsl
