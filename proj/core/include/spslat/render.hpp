#pragma once

#include <string>

#include "spslat/diagram.hpp"
#include "spslat/lattice.hpp"

namespace spslat {

enum class RenderFormat { Svg, Tikz };
enum class Highlight { None, Trajectories, S7 };

struct RenderOptions {
  RenderFormat format = RenderFormat::Svg;
  Highlight highlight = Highlight::None;
  bool labels = true;
};

/// Normal edges thin, steep edges thick, edges flatter than 45 degrees dashed.
/// Highlighted edges carry the class "highlight" (SVG) or a colour (TikZ).
/// Highlighting needs a valid planar diagram and throws NoDiagram otherwise;
/// plain rendering only needs a point per element. Output is a pure function
/// of the input: coordinates are printed with three decimals.
std::string render(const Lattice& lattice, const Diagram& diagram,
                   const RenderOptions& options = {});

}  // namespace spslat
