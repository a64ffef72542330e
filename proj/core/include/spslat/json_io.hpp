#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "spslat/congruence.hpp"
#include "spslat/diagram.hpp"
#include "spslat/generators.hpp"
#include "spslat/lattice.hpp"
#include "spslat/poset.hpp"

namespace spslat {

using Json = nlohmann::json;

/// {"n": N, "covers": [[a, b], ...]} with covers sorted.
Json lattice_to_json(const Lattice& lattice);
Lattice lattice_from_json(const Json& j);

/// {"coords": {"<id>": [xnum, xden, ynum, yden], ...}}
Json diagram_to_json(const Diagram& diagram);
Diagram diagram_from_json(const Json& j, std::size_t n);

/// One line of a gen/verify/render stream.
struct Record {
  std::string id;
  Lattice lattice;
  std::optional<Diagram> diagram;
  /// Build provenance when the record came from a generator.
  std::optional<Json> build;
};

Json record_to_json(const Instance& inst);
Json record_to_json(const Record& rec);
/// Throws ParseError on malformed JSON or structure; lattice errors
/// (NotALattice and friends) propagate unchanged.
Record parse_record(const std::string& line);
Record record_from_json(const Json& j);

/// {"elements": k, "leq": [[i, j], ...]} with the strict pairs i < j.
Json poset_to_json(const FinitePoset& p);
/// Accepts that form (reflexive pairs ignored) or {"k": k, "covers": [...]}.
FinitePoset poset_from_json(const Json& j);

/// The poset form plus "edge_colors": {"a-b": i}.
Json ji_poset_to_json(const Lattice& lattice, const JiPoset& ji);

/// Verdicts and witnesses of the four properties.
Json property_report_to_json(const PropertyReport& r);

}  // namespace spslat
