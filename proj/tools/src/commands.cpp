#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spslat/spslat.hpp"

namespace spslat::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

Json check_json(const CheckResult& r) {
  Json j{{"ok", r.ok}};
  if (!r.ok) j["counterexample"] = r.counterexample;
  return j;
}

// Everything verify reports for one parsed record. "pass" is the verdict.
Json verify_record(const Record& rec, const VerifyOptions& opts) {
  const Lattice& l = rec.lattice;
  Json rep{{"id", rec.id}, {"elements", l.size()}, {"edges", l.edge_count()}};
  Json timings = Json::object();
  bool pass = true;

  auto t0 = Clock::now();
  const bool slim = is_slim(l), semimodular = is_semimodular(l);
  bool czedli = false, rectangular = false;
  Json pred{{"slim", slim}, {"semimodular", semimodular}};
  std::optional<Drawing> drawing;
  if (!rec.diagram) {
    pred["diagram"] = "missing";
  } else {
    try {
      drawing.emplace(l, *rec.diagram);
      pred["diagram"] = "planar";
    } catch (const NoDiagram& e) {
      pred["diagram"] = e.what();
    }
    const CzedliReport cz = validate_czedli(l, *rec.diagram);
    czedli = cz.pass;
    pred["czedli"] = cz.pass;
    if (!cz.pass) {
      Json off = Json::array();
      for (const auto& o : cz.offenses)
        off.push_back({{"edge", to_string(o.edge)}, {"reason", o.reason}});
      pred["czedli_offenses"] = std::move(off);
    }
  }
  if (drawing) {
    rectangular = is_rectangular(*drawing);
    pred["rectangular"] = rectangular;
  }
  timings["predicates"] = ms_since(t0);

  rep["predicates"] = pred;
  if (!(slim && semimodular && drawing && czedli && rectangular)) {
    rep["congruence"] = "skipped: not a slim rectangular lattice with a Czedli diagram";
    rep["pass"] = false;
    if (opts.timings) rep["timings_ms"] = timings;
    return rep;
  }

  t0 = Clock::now();
  const SwingEngine engine(*drawing);
  const JiPoset ji = engine.ji_poset();
  timings["swing"] = ms_since(t0);
  rep["P"] = ji_poset_to_json(l, ji);

  t0 = Clock::now();
  std::size_t witnesses = 0;
  std::string bad_witness;
  for (const Edge& u : l.edges()) {
    for (const Edge& v : l.edges()) {
      const SwingLeqResult r = engine.swing_leq(u, v);
      if (!r.holds) continue;
      ++witnesses;
      std::string why;
      if (bad_witness.empty() && !witness_is_valid(*drawing, u, v, r.witness, &why))
        bad_witness = to_string(u) + " >= " + to_string(v) + ": " + why;
    }
  }
  rep["witnesses"] = {{"checked", witnesses}, {"valid", bad_witness.empty()}};
  if (!bad_witness.empty()) rep["witnesses"]["counterexample"] = bad_witness;
  pass = pass && bad_witness.empty();
  timings["witnesses"] = ms_since(t0);

  if (l.size() <= opts.oracle_max) {
    t0 = Clock::now();
    const JiPoset oracle = ji_poset_oracle(l);
    timings["oracle"] = ms_since(t0);
    const bool same = ji.same_coloured_poset(oracle);
    rep["oracle"] = same ? "match" : "mismatch";
    if (!same) rep["oracle_P"] = ji_poset_to_json(l, oracle);
    pass = pass && same;
  } else {
    rep["oracle"] = "skipped";
  }

  t0 = Clock::now();
  const PropertyReport props = check_all(ji.order);
  rep["properties"] = property_report_to_json(props);
  pass = pass && props.all();

  const CheckResult traj = check_trajectory_laws(*drawing);
  const CheckResult upper_left = check_upper_left_lemma(*drawing, ji);
  rep["lemmas"] = {{"trajectories", check_json(traj)},
                   {"upper_left_boundary", check_json(upper_left)}};
  pass = pass && traj.ok && upper_left.ok;

  const CheckResult eq = check_corollary_color_equal(engine, ji);
  const CheckResult mx = check_corollary_max_boundary(*drawing, ji);
  const CheckResult cw = check_corollary_cover_witness(*drawing, ji);
  rep["corollaries"] = {{"color_equal", check_json(eq)},
                        {"max_boundary", check_json(mx)},
                        {"cover_witness", check_json(cw)}};
  // Informational: the stricter single-perspectivity reading.
  rep["corollaries"]["color_equal_single_step"] =
      check_json(check_corollary_color_equal(engine, ji, true));
  pass = pass && eq.ok && mx.ok && cw.ok;
  timings["checks"] = ms_since(t0);

  rep["pass"] = pass;
  if (opts.timings) rep["timings_ms"] = timings;
  return rep;
}

}  // namespace

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.seed) {
      for (std::size_t k = 0; k < opts.count; ++k) {
        const std::uint64_t seed = *opts.seed + k;
        Json rec = record_to_json(random_instance(seed, opts.size));
        rec["id"] = "seed" + std::to_string(seed) + "/" + rec["id"].get<std::string>();
        rec["build"]["seed"] = seed;
        out << rec.dump() << '\n';
      }
    } else {
      for (const Instance& inst :
           enumerate(opts.max_m, opts.max_n, opts.forks, opts.up_to))
        out << record_to_json(inst).dump() << '\n';
    }
  } catch (const Error& e) {
    err << "gen: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err) {
  int status = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (blank(line)) continue;
    Json rep;
    try {
      rep = verify_record(parse_record(line), opts);
    } catch (const ParseError& e) {
      err << "verify: line " << lineno << ": " << e.what() << '\n';
      continue;
    } catch (const std::exception& e) {
      // The record parsed but does not describe a lattice.
      rep = {{"line", lineno}, {"error", e.what()}, {"pass", false}};
      if (const Json j = Json::parse(line, nullptr, false);
          j.is_object() && j.contains("id"))
        rep["id"] = j["id"];
    }
    if (rep["pass"] != true) status = 1;
    out << rep.dump() << '\n';
  }
  return status;
}

int cmd_check_poset(std::istream& in, const std::optional<std::string>& crown,
                    std::ostream& out, std::ostream& err) {
  FinitePoset r = crown_poset_r();
  if (crown) {
    std::ifstream f(*crown);
    if (!f) {
      err << "check-poset: cannot open " << *crown << '\n';
      return 2;
    }
    try {
      r = poset_from_json(Json::parse(f));
    } catch (const std::exception& e) {
      err << "check-poset: crown: " << e.what() << '\n';
      return 2;
    }
  }
  int status = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (blank(line)) continue;
    try {
      Json j = Json::parse(line);
      // A verify report carries its poset under "P".
      if (j.is_object() && j.contains("P")) j = j["P"];
      const FinitePoset p = poset_from_json(j);
      const PropertyReport rep = check_all(p, r);
      Json o = property_report_to_json(rep);
      o["elements"] = p.size();
      out << o.dump() << '\n';
      if (!rep.all()) status = 1;
    } catch (const std::exception& e) {
      err << "check-poset: line " << lineno << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_render(const RenderCmdOptions& opts, std::istream& in,
               std::ostream& out, std::ostream& err) {
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (blank(line)) continue;
    try {
      const Record rec = parse_record(line);
      if (!opts.id.empty() && rec.id != opts.id) continue;
      if (!rec.diagram) throw NoDiagram("record " + rec.id + " has no diagram");
      out << render(rec.lattice, *rec.diagram, opts.render);
      return 0;
    } catch (const std::exception& e) {
      err << "render: line " << lineno << ": " << e.what() << '\n';
      return 2;
    }
  }
  err << "render: no matching record\n";
  return 2;
}

}  // namespace spslat::cli
