#include "spslat/json_io.hpp"

#include "spslat/error.hpp"

namespace spslat {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
      return j.get<std::size_t>();
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::pair<std::size_t, std::size_t>> pairs(const Json& j,
                                                       const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError(std::string(what) + " entries must be pairs");
    out.emplace_back(as_size(p[0], what), as_size(p[1], what));
  }
  return out;
}

Rational rational(const Json& num, const Json& den) {
  const std::int64_t d = as_int(den, "coordinate denominator");
  if (d == 0) throw ParseError("zero coordinate denominator");
  return Rational(as_int(num, "coordinate numerator"), d);
}

Json ids(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

Json lattice_to_json(const Lattice& lattice) {
  Json covers = Json::array();
  for (auto [a, b] : lattice.cover_pairs()) covers.push_back({a, b});
  return {{"n", lattice.size()}, {"covers", std::move(covers)}};
}

Lattice lattice_from_json(const Json& j) {
  const std::size_t n = as_size(field(j, "n"), "n");
  CoverList covers;
  for (auto [a, b] : pairs(field(j, "covers"), "covers")) {
    if (a >= n || b >= n) throw ParseError("cover id out of range");
    covers.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
  }
  return Lattice::build(n, std::move(covers));
}

Json diagram_to_json(const Diagram& diagram) {
  Json coords = Json::object();
  for (ElementId a = 0; a < diagram.size(); ++a) {
    const Point& p = diagram[a];
    coords[std::to_string(a)] = {p.x.numerator(), p.x.denominator(),
                                 p.y.numerator(), p.y.denominator()};
  }
  return {{"coords", std::move(coords)}};
}

Diagram diagram_from_json(const Json& j, std::size_t n) {
  const Json& coords = field(j, "coords");
  if (!coords.is_object()) throw ParseError("coords must be an object");
  std::vector<std::optional<Point>> pts(n);
  for (const auto& [key, v] : coords.items()) {
    std::size_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("coordinate key \"" + key + "\" is not an element id");
    }
    if (id >= n) throw ParseError("coordinate for unknown element " + key);
    if (!v.is_array() || v.size() != 4)
      throw ParseError("coordinates must be [xnum, xden, ynum, yden]");
    pts[id] = Point{rational(v[0], v[1]), rational(v[2], v[3])};
  }
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!pts[a]) throw ParseError("no coordinates for element " + std::to_string(a));
    out.push_back(*pts[a]);
  }
  return Diagram(std::move(out));
}

Json record_to_json(const Instance& inst) {
  Json forks = Json::array();
  for (const CellSelector& s : inst.forks) forks.push_back({s.bottom, s.left});
  return record_to_json(Record{
      inst.name(), inst.lattice, inst.diagram,
      Json{{"grid", {inst.grid.m, inst.grid.n}}, {"forks", std::move(forks)}}});
}

Json record_to_json(const Record& rec) {
  Json j{{"id", rec.id}, {"lattice", lattice_to_json(rec.lattice)}};
  if (rec.diagram) j["diagram"] = diagram_to_json(*rec.diagram);
  if (rec.build) j["build"] = *rec.build;
  return j;
}

Record record_from_json(const Json& j) {
  Record rec;
  if (const auto it = j.find("id"); it != j.end()) {
    if (it->is_string())
      rec.id = it->get<std::string>();
    else
      rec.id = it->dump();
  }
  rec.lattice = lattice_from_json(field(j, "lattice"));
  if (const auto it = j.find("diagram"); it != j.end() && !it->is_null())
    rec.diagram = diagram_from_json(*it, rec.lattice.size());
  if (const auto it = j.find("build"); it != j.end()) rec.build = *it;
  return rec;
}

Record parse_record(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("record must be a JSON object");
  return record_from_json(j);
}

Json poset_to_json(const FinitePoset& p) {
  Json leq = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b)) leq.push_back({a, b});
  return {{"elements", p.size()}, {"leq", std::move(leq)}};
}

FinitePoset poset_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("poset must be a JSON object");
  try {
    if (j.contains("leq")) {
      const std::size_t k = as_size(field(j, "elements"), "elements");
      PosetPairs rel;
      for (auto [a, b] : pairs(j["leq"], "leq"))
        if (a != b) rel.emplace_back(a, b);
      return FinitePoset::from_relation(k, rel);
    }
    const std::size_t k = as_size(field(j, "k"), "k");
    return FinitePoset::from_covers(k, pairs(field(j, "covers"), "covers"));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

Json ji_poset_to_json(const Lattice& lattice, const JiPoset& ji) {
  Json j = poset_to_json(ji.order);
  Json colours = Json::object();
  const auto& edges = lattice.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    colours[to_string(edges[i])] = ji.color_of[i];
  j["edge_colors"] = std::move(colours);
  return j;
}

Json property_report_to_json(const PropertyReport& r) {
  Json out;
  Json part{{"holds", r.partition.holds}};
  if (r.partition.holds) {
    part["left"] = ids(r.partition.left);
    part["right"] = ids(r.partition.right);
  } else {
    part["conflict"] = ids(r.partition.conflict);
  }
  out["partition"] = std::move(part);

  Json mc{{"holds", r.maximal_cover.holds}};
  if (r.maximal_cover.counterexample) {
    mc["x"] = r.maximal_cover.counterexample->first;
    mc["y"] = r.maximal_cover.counterexample->second;
  }
  out["maximal_cover"] = std::move(mc);

  Json crown{{"holds", r.crown.holds}};
  if (r.crown.embedding) crown["embedding"] = ids(*r.crown.embedding);
  out["four_crown_two_pendant"] = std::move(crown);

  Json nc{{"holds", r.no_child.holds}};
  if (const auto& c = r.no_child.counterexample)
    nc["config"] = {{"x", c->x}, {"y", c->y}, {"z", c->z}, {"u", c->u}};
  out["no_child"] = std::move(nc);

  out["all"] = r.all();
  return out;
}

}  // namespace spslat
