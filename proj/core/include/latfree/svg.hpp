#pragma once

#include <string>

#include "latfree/polyhedron.hpp"

namespace latfree {

/// Rational viewing window [x0, x1] x [y0, y1] and pixel scale for plots.
struct PlotWindow {
  Rational x0, x1, y0, y1;
  int scale = 40;  // pixels per lattice unit
};

/// Renders a two-dimensional rational polyhedron as a standalone SVG image:
/// the region clipped to the window (shaded polygon), every lattice point of
/// the window (small dots), lattice points in the interior (marked class
/// "interior") and in facet relative interiors (marked class "witness").  The
/// output is deterministic for a given input.  Throws std::invalid_argument
/// unless the polyhedron is two-dimensional and the window is nonempty.
std::string plot2d(const Polyhedron<Rational>& p, const PlotWindow& w);

}  // namespace latfree
