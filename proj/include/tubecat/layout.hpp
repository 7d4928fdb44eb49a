#pragma once

#include <cstddef>
#include <vector>

#include "tubecat/nc_partition.hpp"
#include "tubecat/tube.hpp"

namespace tubecat {

/// One vertex of the domain or codomain tree placed on its boundary row.
struct LayoutPoint {
    Side side = Side::Upper;
    int level = 0;        // nesting level, 0 for outermost
    double x = 0, y = 0;  // centre
    double rx = 0, ry = 0;
    bool opening = false;  // drawn as an ellipse rather than a dot
    std::ptrdiff_t parent = -1;  // enclosing opening, -1 at level 0
};

/// One block at some nesting level, joining points of that level.
struct LayoutBlock {
    int level = 0;
    std::vector<std::size_t> points;  // indices into Layout::points
    std::ptrdiff_t parent = -1;       // block whose tube contains this one
    double hub_x = 0, hub_y = 0;
};

struct Layout {
    double width = 0, height = 0;
    std::vector<LayoutPoint> points;
    std::vector<LayoutBlock> blocks;  // parents before children
};

/// Geometry for drawing ρ: upper row at the top, lower row at the bottom,
/// nested openings as concentric ellipses. Deterministic; `max_depth` bounds
/// the nesting depth of both objects (Error(DepthExceeded) beyond it).
Layout layout(const TubeMorphism& rho, int max_depth = 4);

}  // namespace tubecat
