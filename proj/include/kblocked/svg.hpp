#pragma once

#include "kblocked/blocked.hpp"

#include <string>

namespace kblocked {

struct SvgOptions
{
    double width = 480.0;
    double height = 480.0;
    double point_radius = 6.0;
};

// SVG 1.1 drawing of a planar coloured set: a filled circle per point (fixed palette by
// colour id) and a thin segment across every blocked pair, passing under its blockers.
// Throws PreconditionError for non-planar input.
std::string render_svg(const ColouredPointSet& set, const SvgOptions& options = {});

} // namespace kblocked
