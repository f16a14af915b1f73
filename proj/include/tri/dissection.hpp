#pragma once

// Dissection scripts: a target triangle rewritten by nested applications of the
// seven-term construction, with cancellation tags pairing coincident pieces of
// opposite sign.
//
//   target <size> [at <i>,<j>]
//   expand <ref> = <n> <k> <l> <t> [tags <slot>=<tag>(,<slot>=<tag>)*]
//
// <ref> is `root` or a dot path such as `root.nl.kl`; slots are nk nl kl n k l t.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tri/identity.hpp"
#include "tri/lattice.hpp"

namespace tri {

struct PieceRef {
  std::vector<Slot> path;

  PieceRef child(Slot s) const;
  std::string str() const;
  static std::optional<PieceRef> parse(std::string_view text);
  friend bool operator==(const PieceRef&, const PieceRef&) = default;
};

struct TagAssignment {
  Slot slot = Slot::T;
  std::string tag;
};

struct ExpansionStep {
  PieceRef target;
  SumLabel params;
  std::vector<TagAssignment> tags;
  int line = 0;
};

struct DissectionScript {
  Int target_size = 0;
  LatticeCoord anchor;
  std::vector<ExpansionStep> steps;
};

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct ParseResult {
  std::optional<DissectionScript> script;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return script.has_value(); }
};

ParseResult parse_script(std::string_view text);

struct Piece {
  PieceRef ref;
  Int sign = 1;
  PlacedTriangle tri;
};

struct Cancellation {
  std::string tag;
  Piece positive;
  Piece negative;
};

struct DissectionStats {
  std::size_t piece_count = 0;
  std::vector<Int> signed_sizes;
  Int sum_of_squares = 0;
};

struct DissectionResult {
  PlacedTriangle root;
  std::vector<Piece> pieces;
  std::vector<Cancellation> cancellations;
  DissectionStats stats;
};

DissectionStats compute_stats(const std::vector<Piece>& pieces);

class InterpretError : public std::runtime_error {
 public:
  InterpretError(int line, const std::string& what) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct TaggedPiece {
  Piece piece;
  std::string tag;  // empty when untagged
};

/// Applies every expansion (self-checking each step) and returns the signed
/// leaves before cancellation, in creation order.
std::vector<TaggedPiece> expand_script(const DissectionScript& script, const LatticeCoord& root_anchor);

/// Replays the script from the script's own root anchor.
DissectionResult interpret(const DissectionScript& script);
/// Replays the script with the root placed at `root_anchor`.
DissectionResult interpret(const DissectionScript& script, const LatticeCoord& root_anchor);

struct PerfectReport {
  bool exact_tiling = false;
  bool distinct_sizes = false;
  bool squares_match = false;
  Int sum_of_squares = 0;
  Int target_square = 0;
  std::vector<std::string> failures;

  bool pass() const { return exact_tiling && distinct_sizes && squares_match; }
};

/// Checks that the pieces tile `target` with unit multiplicity, that their signed
/// sizes are pairwise distinct (m and -m count as different) and that the squares add up.
PerfectReport verify_perfect(const DissectionResult& r, const PlacedTriangle& target);

enum class Builtin { A, B };

std::optional<Builtin> parse_builtin(std::string_view name);
/// Script text of one of the two 15-piece dissections of the side-39 triangle.
std::string_view builtin_dissection(Builtin which);
DissectionScript builtin_script(Builtin which);

}  // namespace tri
