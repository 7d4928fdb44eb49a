#pragma once

#include <string>

#include "tubecat/tube.hpp"

namespace tubecat {

/// Standalone SVG of ρ: points as dots, openings as ellipses, blocks as tubes
/// joining their points at a hub. Byte-identical output for equal input.
/// Throws Error(DepthExceeded) beyond nesting depth 4.
std::string render_svg(const TubeMorphism& rho);

}  // namespace tubecat
