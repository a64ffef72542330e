#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "spslat/render.hpp"

namespace spslat::cli {

struct GenOptions {
  std::size_t max_m = 2;
  std::size_t max_n = 2;
  std::size_t forks = 0;
  /// Every fork count from 0 to `forks` instead of exactly `forks`.
  bool up_to = false;
  /// Random mode when set: `count` instances with seeds seed, seed+1, ...
  std::optional<std::uint64_t> seed;
  std::size_t size = 20;
  std::size_t count = 1;
};

struct VerifyOptions {
  std::size_t oracle_max = 200;
  bool timings = true;
};

struct RenderCmdOptions {
  RenderOptions render;
  /// Record to render; the first one when empty.
  std::string id;
};

/// Each command reads line-delimited JSON from `in`, writes results to `out`
/// and diagnostics to `err`, and returns the process exit status.
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
/// Nonzero iff some record's verdict fails. Malformed lines are reported on
/// `err` and skipped.
int cmd_verify(const VerifyOptions& opts, std::istream& in, std::ostream& out,
               std::ostream& err);
/// One report per poset line. `crown` overrides the default crown poset.
/// Nonzero iff some poset fails a property or cannot be parsed.
int cmd_check_poset(std::istream& in, const std::optional<std::string>& crown,
                    std::ostream& out, std::ostream& err);
int cmd_render(const RenderCmdOptions& opts, std::istream& in,
               std::ostream& out, std::ostream& err);

}  // namespace spslat::cli
