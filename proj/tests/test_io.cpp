#include <doctest.h>

#include <regex>

#include "support.hpp"

using namespace spslat;
using namespace spslat::testing;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos;
       pos = s.find(needle, pos + 1))
    ++k;
  return k;
}

}  // namespace

TEST_CASE("lattice JSON round trip") {
  const Lattice l = s7_lattice();
  const Json j = lattice_to_json(l);
  CHECK(j["n"] == 7);
  CHECK(j["covers"].size() == 9);
  CHECK(j["covers"][0] == Json::array({0, 1}));
  CHECK(lattice_from_json(j).cover_pairs() == l.cover_pairs());
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"n":2})")), ParseError);
}

TEST_CASE("diagram JSON keeps exact coordinates") {
  const Diagram d({{Rational(1, 2), Rational(3)}, {Rational(-7, 3), Rational(4)}});
  const Json j = diagram_to_json(d);
  CHECK(j["coords"]["0"] == Json::array({1, 2, 3, 1}));
  CHECK(diagram_from_json(j, 2) == d);
  CHECK_THROWS_AS(diagram_from_json(j, 3), ParseError);
}

TEST_CASE("records") {
  const Instance s = build({2, 2}, {{0, 2}});
  const std::string line = record_to_json(s).dump();
  const Record r = parse_record(line);
  CHECK(r.id == s.name());
  CHECK(r.lattice.cover_pairs() == s.lattice.cover_pairs());
  REQUIRE(r.diagram);
  CHECK(*r.diagram == s.diagram);
  CHECK(record_to_json(r).dump() == Json::parse(line).dump());
  CHECK(line == record_to_json(s).dump());

  CHECK_THROWS_AS(parse_record("{"), ParseError);
  CHECK_THROWS_AS(parse_record("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_record(R"({"id":"x","lattice":{"n":"two"}})"), ParseError);
}

TEST_CASE("poset JSON") {
  const FinitePoset r = crown_poset_r();
  CHECK(poset_from_json(poset_to_json(r)) == r);
  const FinitePoset p = poset_from_json(Json::parse(R"({"k":3,"covers":[[2,0],[2,1]]})"));
  CHECK(p.less(2, 0));
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"k":2,"covers":[[0,1],[1,0]]})")),
                  ParseError);

  const Lattice l = s7_lattice();
  const Json ji = ji_poset_to_json(l, ji_poset_oracle(l));
  CHECK(ji["elements"] == 3);
  CHECK(ji["edge_colors"].size() == 9);
}

TEST_CASE("render SVG") {
  const Instance sq = grid(2, 2);
  const std::string plain = render(sq.lattice, sq.diagram);
  CHECK(count(plain, "<circle") == 4);
  CHECK(count(plain, "class=\"edge normal\"") == 4);
  CHECK(plain == render(sq.lattice, sq.diagram));

  const std::string s7 = render(s7_lattice(), s7_czedli());
  CHECK(count(s7, "class=\"edge steep\"") == 1);
  CHECK(count(s7, "stroke-width=\"3\"") == 1);

  const Instance g = grid(3, 3);
  const std::string none =
      render(g.lattice, g.diagram, {RenderFormat::Svg, Highlight::S7, true});
  CHECK(count(none, "highlight") == 0);

  const std::string hl =
      render(s7_lattice(), s7_czedli(), {RenderFormat::Svg, Highlight::S7, true});
  CHECK(count(hl, "highlight") == 9);
  const std::string tr = render(s7_lattice(), s7_czedli(),
                                {RenderFormat::Svg, Highlight::Trajectories, false});
  CHECK(count(tr, "highlight") == 9);
  CHECK(count(tr, "<text") == 0);

  const Diagram flat({{Rational(0), Rational(0)}, {Rational(3), Rational(1)}});
  CHECK(count(render(chain(2), flat), "stroke-dasharray") == 1);
  // coincident points draw, but cannot be highlighted
  const Diagram stacked = points({{0, 0}, {1, 1}, {1, 1}, {0, 2}});
  CHECK(count(render(boolean_square(), stacked), "<circle") == 4);
  CHECK_THROWS_AS(
      render(boolean_square(), stacked, {RenderFormat::Svg, Highlight::S7, true}),
      NoDiagram);
  CHECK_THROWS_AS(render(boolean_square(), flat), NoDiagram);
}

TEST_CASE("render TikZ") {
  const std::string t = render(s7_lattice(), s7_czedli(), {RenderFormat::Tikz});
  CHECK(t.rfind("\\begin{tikzpicture}", 0) == 0);
  CHECK(count(t, "\\draw[very thick]") == 1);
  CHECK(count(t, "\\draw[thin]") == 8);
  CHECK(std::regex_search(t, std::regex(R"(\\coordinate \(v6\) at \(0\.000,4\.000\))")));
}
