#pragma once

// Cellwise verifiers for the self-similar structure of emanation tables:
// skybox embedding, four corners, French windows, the number hub, and
// recipe/brute-force equivalence. Each builds the tables it needs by brute
// force and reports every disagreement it finds.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdsky/emanation.hpp"

namespace zdsky {

struct CheckReport {
  explicit CheckReport(std::string name = {}) : name(std::move(name)) {}

  std::string name;
  bool passed = true;
  std::uint64_t cells_checked = 0;
  std::uint64_t mismatch_count = 0;
  /// The first few mismatches, human readable.
  std::vector<std::string> mismatches;

  void check(bool ok, const std::string& what);
  static constexpr std::size_t kMaxListed = 20;
};

/// ET(N, S) sits, cell for cell and mark for mark, in the centre of
/// ET(N+1, S), framed by the rows and columns labeled g' = 2^(N-1) and g'+S
/// whose values are the smaller table's labels. `exponent` is the smaller N.
CheckReport skybox_embed_check(Index strut, int exponent);

/// The four corner quadrants of ET(N, S) reappear unchanged in the corners of
/// ET(N+1, S).
CheckReport four_corners_check(Index strut, int exponent);

/// In ET(N+1, S), each shutter cell left or right of the central window (and,
/// by symmetry, above or below it) holds g' plus the mirrored window cell.
/// Blank window cells on a long diagonal map to g' (marked) or g'+S
/// (unmarked); marks carry over except on the framing label lines, where they
/// reverse.
CheckReport french_windows_check(Index strut, int exponent);

/// ET(N, 2^(N-2)): the upper-left quadrant is the unsigned product table of
/// the 2^(N-2)-ions with blanks on its diagonal.
CheckReport number_hub_check(int exponent);

/// Fill patterns of et_recipe and et_bruteforce agree everywhere.
CheckReport recipe_vs_bruteforce(const StrutContext& strut);

/// Cellwise comparison of two tables with the same labels: fill state, P,
/// and optionally marks.
CheckReport compare_tables(const std::string& name, const EmanationTable& expected, const EmanationTable& actual,
                           bool compare_marks);

}  // namespace zdsky
