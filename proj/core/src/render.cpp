#include "spslat/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "spslat/error.hpp"

namespace spslat {

namespace {

constexpr double kScale = 40.0;
constexpr double kMargin = 20.0;
constexpr std::array<const char*, 8> kPalette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

struct EdgeStyle {
  std::optional<SlopeClass> slope;
  // Index into the palette, or nullopt when not highlighted.
  std::optional<std::size_t> colour;
};

std::vector<EdgeStyle> edge_styles(const Lattice& lattice,
                                   const Diagram& diagram,
                                   Highlight highlight) {
  const auto& edges = lattice.edges();
  std::vector<EdgeStyle> out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    out[i].slope = try_classify_slope(diagram[edges[i].bottom],
                                      diagram[edges[i].top]);
  if (highlight == Highlight::None) return out;

  const Drawing drawing(lattice, diagram);
  if (highlight == Highlight::Trajectories) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      out[i].colour = drawing.trajectory_index(edges[i]) % kPalette.size();
  } else {
    const auto s7s = find_covering_s7s(drawing);
    for (std::size_t k = 0; k < s7s.size(); ++k)
      for (const Edge& e : s7s[k].edges())
        if (!out[lattice.edge_index(e)].colour)
          out[lattice.edge_index(e)].colour = k % kPalette.size();
  }
  return out;
}

std::string svg(const Lattice& lattice, const Diagram& diagram,
                const std::vector<EdgeStyle>& styles, bool labels) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t a = 0; a < diagram.size(); ++a) {
    const double x = to_double(diagram[a].x), y = to_double(diagram[a].y);
    if (a == 0 || x < min_x) min_x = x;
    if (a == 0 || x > max_x) max_x = x;
    if (a == 0 || y < min_y) min_y = y;
    if (a == 0 || y > max_y) max_y = y;
  }
  auto px = [&](const Point& p) { return (to_double(p.x) - min_x) * kScale + kMargin; };
  auto py = [&](const Point& p) { return (max_y - to_double(p.y)) * kScale + kMargin; };
  const double width = (max_x - min_x) * kScale + 2 * kMargin;
  const double height = (max_y - min_y) * kScale + 2 * kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
      << " " << fmt(height) << "\">\n";
  out << "<g stroke=\"black\" stroke-linecap=\"round\">\n";
  const auto& edges = lattice.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeStyle& s = styles[i];
    const char* kind = !s.slope ? "flat"
                       : *s.slope == SlopeClass::Steep ? "steep"
                                                      : "normal";
    out << "<line class=\"edge " << kind << (s.colour ? " highlight" : "")
        << "\" data-edge=\"" << to_string(edges[i]) << "\" x1=\""
        << fmt(px(diagram[edges[i].bottom])) << "\" y1=\""
        << fmt(py(diagram[edges[i].bottom])) << "\" x2=\""
        << fmt(px(diagram[edges[i].top])) << "\" y2=\""
        << fmt(py(diagram[edges[i].top])) << "\" stroke-width=\""
        << (s.slope == SlopeClass::Steep ? 3 : 1) << "\"";
    if (s.colour) out << " stroke=\"" << kPalette[*s.colour] << "\"";
    if (!s.slope) out << " stroke-dasharray=\"4 3\"";
    out << "/>\n";
  }
  out << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
  for (std::size_t a = 0; a < diagram.size(); ++a) {
    out << "<circle class=\"vertex\" data-id=\"" << a << "\" cx=\""
        << fmt(px(diagram[a])) << "\" cy=\"" << fmt(py(diagram[a]))
        << "\" r=\"4\"/>\n";
  }
  out << "</g>\n";
  if (labels) {
    out << "<g font-family=\"sans-serif\" font-size=\"10\">\n";
    for (std::size_t a = 0; a < diagram.size(); ++a) {
      out << "<text x=\"" << fmt(px(diagram[a]) + 6) << "\" y=\""
          << fmt(py(diagram[a]) + 3) << "\">" << a << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string tikz(const Lattice& lattice, const Diagram& diagram,
                 const std::vector<EdgeStyle>& styles, bool labels) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.5]\n";
  for (std::size_t k = 0; k < kPalette.size(); ++k)
    out << "\\definecolor{hl" << k << "}{HTML}{" << (kPalette[k] + 1) << "}\n";
  for (std::size_t a = 0; a < diagram.size(); ++a) {
    out << "\\coordinate (v" << a << ") at (" << fmt(to_double(diagram[a].x))
        << "," << fmt(to_double(diagram[a].y)) << ");\n";
  }
  const auto& edges = lattice.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeStyle& s = styles[i];
    std::string opts = s.slope == SlopeClass::Steep ? "very thick" : "thin";
    if (!s.slope) opts += ",dashed";
    if (s.colour) opts += ",hl" + std::to_string(*s.colour);
    out << "\\draw[" << opts << "] (v" << edges[i].bottom << ") -- (v"
        << edges[i].top << ");\n";
  }
  for (std::size_t a = 0; a < diagram.size(); ++a) {
    out << "\\fill[white,draw=black] (v" << a << ") circle (3pt);";
    if (labels) out << " \\node[right=2pt,font=\\scriptsize] at (v" << a << ") {" << a << "};";
    out << "\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::string render(const Lattice& lattice, const Diagram& diagram,
                   const RenderOptions& options) {
  if (diagram.size() != lattice.size()) {
    throw NoDiagram("diagram has " + std::to_string(diagram.size()) +
                    " points for " + std::to_string(lattice.size()) +
                    " elements");
  }
  const auto styles = edge_styles(lattice, diagram, options.highlight);
  return options.format == RenderFormat::Svg
             ? svg(lattice, diagram, styles, options.labels)
             : tikz(lattice, diagram, styles, options.labels);
}

}  // namespace spslat
