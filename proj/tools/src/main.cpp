#include <fstream>
#include <iostream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

// Reads from `path`, or standard input when it is empty or "-".
int with_input(const std::string& path, const std::function<int(std::istream&)>& f) {
  if (path.empty() || path == "-") return f(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return 2;
  }
  return f(in);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace spslat::cli;
  CLI::App app{"Slim rectangular lattices, their congruence posets and property checks"};
  app.require_subcommand(1);

  GenOptions gen;
  std::vector<std::size_t> grid{2, 2};
  std::optional<std::size_t> max_forks;
  auto* g = app.add_subcommand("gen", "Generate lattice+diagram records");
  g->add_option("--grid,--max-grid", grid, "Largest grid sides M N")
      ->expected(2)
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  g->add_option("--forks", gen.forks, "Exact number of forks");
  g->add_option("--max-forks", max_forks, "Every fork count up to this");
  auto* seed = g->add_option("--seed", gen.seed, "Random mode: first seed");
  g->add_option("--size", gen.size, "Random mode: target size")
      ->check(CLI::Range(std::size_t{4}, std::size_t{100000}));
  g->add_option("--count", gen.count, "Random mode: number of instances");
  seed->excludes("--forks")->excludes("--max-forks");
  g->get_option("--forks")->excludes("--max-forks");

  VerifyOptions verify;
  std::string verify_in;
  auto* v = app.add_subcommand("verify", "Verify records from a file or stdin");
  v->add_option("input", verify_in, "Input file (default stdin)");
  v->add_option("--oracle-max", verify.oracle_max,
                "Run the brute-force oracle up to this many elements");
  bool no_timings = false;
  v->add_flag("--no-timings", no_timings, "Omit timings for byte-stable output");

  std::string poset_in;
  std::optional<std::string> crown;
  auto* c = app.add_subcommand("check-poset", "Check the four properties on posets");
  c->add_option("input", poset_in, "Input file (default stdin)");
  c->add_option("--crown", crown, "Crown poset JSON replacing the default");

  RenderCmdOptions render;
  std::string render_in, format = "svg", highlight = "none";
  auto* r = app.add_subcommand("render", "Draw a record as SVG or TikZ");
  r->add_option("input", render_in, "Input file (default stdin)");
  r->add_option("--format", format)->check(CLI::IsMember({"svg", "tikz"}));
  r->add_option("--highlight", highlight)
      ->check(CLI::IsMember({"none", "trajectories", "s7"}));
  r->add_option("--id", render.id, "Render the record with this id");
  bool no_labels = false;
  r->add_flag("--no-labels", no_labels, "Omit element ids");

  CLI11_PARSE(app, argc, argv);

  if (*g) {
    gen.max_m = grid[0];
    gen.max_n = grid[1];
    if (max_forks) {
      gen.forks = *max_forks;
      gen.up_to = true;
    }
    return cmd_gen(gen, std::cout, std::cerr);
  }
  if (*v) {
    verify.timings = !no_timings;
    return with_input(verify_in, [&](std::istream& in) {
      return cmd_verify(verify, in, std::cout, std::cerr);
    });
  }
  if (*c) {
    return with_input(poset_in, [&](std::istream& in) {
      return cmd_check_poset(in, crown, std::cout, std::cerr);
    });
  }
  render.render.format =
      format == "svg" ? spslat::RenderFormat::Svg : spslat::RenderFormat::Tikz;
  render.render.highlight = highlight == "s7"             ? spslat::Highlight::S7
                            : highlight == "trajectories" ? spslat::Highlight::Trajectories
                                                          : spslat::Highlight::None;
  render.render.labels = !no_labels;
  return with_input(render_in, [&](std::istream& in) {
    return cmd_render(render, in, std::cout, std::cerr);
  });
}
