#pragma once

#include <string>

#include "ternary/lattice.hpp"

namespace ternary {

struct SvgStyle {
    double spacing = 40.0;        ///< pixels per lattice step
    double point_radius = 5.0;    ///< markers for points of the hexagon
    double lattice_radius = 2.0;  ///< markers for the surrounding lattice
    int margin = 1;               ///< lattice steps of context around the region
    std::string point_fill = "#d62728";
    std::string lattice_fill = "#9a9a9a";
    std::string region_fill = "#dff5df";
    std::string grid_stroke = "#c8c8c8";
};

struct SvgDocument {
    std::string text;
    double width = 0;
    double height = 0;
};

/// Largest side count render_svg accepts.
inline constexpr Natural kMaxRenderSide = 100;

/// Standalone SVG 1.1 figure: lattice grid lines, the shaded region, and one
/// `class="point"` circle per lattice point of `h`. Surrounding lattice
/// points get `class="lattice"`. Throws LimitError for sides above
/// kMaxRenderSide and DomainError for a negative margin.
SvgDocument render_svg(const Hexagon& h, const SvgStyle& style = {});

} // namespace ternary
