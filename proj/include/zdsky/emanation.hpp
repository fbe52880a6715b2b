#pragma once

// Emanation tables: square grids over the L-index labels of a strut constant,
// with cell (R, C) holding P = R ^ C exactly when assessors R and C form a
// DMZ.

#include <cstdint>
#include <string>
#include <vector>

#include "zdsky/zero_divisors.hpp"

namespace zdsky {

/// Edge-sign mark of a filled cell. Positive edges are the "marked" cells.
enum class Mark : std::uint8_t { kUnknown, kNegative, kPositive };

struct Cell {
  bool filled = false;
  Index value = 0;
  Mark mark = Mark::kUnknown;

  static constexpr Cell blank() noexcept { return Cell{}; }
  static constexpr Cell fill(Index value, Mark mark) noexcept { return Cell{true, value, mark}; }

  bool operator==(const Cell&) const = default;
};

enum class TableMethod { kBruteForce, kRecipe };

std::string to_string(TableMethod m);

class EmanationTable {
 public:
  /// All cells start blank.
  EmanationTable(StrutContext strut, std::vector<Index> labels, TableMethod method);

  [[nodiscard]] const StrutContext& strut() const noexcept { return strut_; }
  [[nodiscard]] TableMethod method() const noexcept { return method_; }
  [[nodiscard]] std::size_t edge() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<Index>& labels() const noexcept { return labels_; }
  [[nodiscard]] Index label(std::size_t i) const { return labels_.at(i); }

  [[nodiscard]] const Cell& at(std::size_t row, std::size_t col) const { return cells_[index(row, col)]; }
  void set(std::size_t row, std::size_t col, Cell cell) { cells_[index(row, col)] = cell; }

  [[nodiscard]] bool on_long_diagonal(std::size_t row, std::size_t col) const noexcept {
    return row == col || row + col + 1 == edge();
  }

  [[nodiscard]] std::size_t filled_count() const noexcept;
  [[nodiscard]] std::size_t marked_count() const noexcept;

  /// Empty when the table satisfies every structural invariant: labels are
  /// {1..G-1} \ {S} with mirrored strut opposites, both long diagonals are
  /// blank, filled cells hold R ^ C drawn from the labels, and the grid is
  /// symmetric in fill, value and mark.
  [[nodiscard]] std::vector<std::string> invariant_violations() const;

  /// Fill pattern only, row-major.
  [[nodiscard]] std::vector<bool> fill_pattern() const;

  bool operator==(const EmanationTable&) const = default;

 private:
  [[nodiscard]] std::size_t index(std::size_t row, std::size_t col) const;

  StrutContext strut_;
  std::vector<Index> labels_;
  TableMethod method_;
  std::vector<Cell> cells_;
};

/// Ascending placement from the left, each label's strut opposite entered at
/// the mirrored slot.
std::vector<Index> label_order(const StrutContext& strut);

/// Cell-by-cell DMZ testing. Rows are distributed over `threads` workers
/// (0 picks the hardware concurrency); the result does not depend on it.
EmanationTable et_bruteforce(const StrutContext& strut, unsigned threads = 0);

/// Raised when the bitstring recipe is asked for a strut constant outside its
/// domain (S <= 8 or S a power of two).
class RecipeDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

[[nodiscard]] bool recipe_applies(Index strut) noexcept;

/// One painting pass: cells whose R, C or P is a positive multiple of
/// 2^power, or such a multiple (m >= 0) plus the residue, are painted
/// filled or blank unless an earlier pass already painted them.
struct RecipePass {
  int power = 0;
  Index residue = 0;
  bool fills = false;

  /// Candidate values below `limit`.
  [[nodiscard]] std::vector<Index> values(Index limit) const;

  bool operator==(const RecipePass&) const = default;
};

/// High-bit decomposition of a strut constant. Bits at and above position 3
/// (position 4 when S is a multiple of 8) are the high bits; `powers` lists
/// their positions left to right and `residues` holds S mod 2^power.
struct RecipeSpec {
  Index strut = 0;
  int shift = 3;
  std::vector<int> powers;
  std::vector<Index> residues;

  [[nodiscard]] int high_bit_count() const noexcept { return static_cast<int>(powers.size()); }

  /// Painting passes in order. A high bit with residue 0 is the lowest set
  /// bit of a multiple of 16 and plays the role the 8-bit plays for other
  /// multiples of 8, so it contributes no pass.
  [[nodiscard]] std::vector<RecipePass> passes() const;

  /// Values each pass newly claims below `limit`: the pass's candidates minus
  /// S and anything an earlier pass already claimed.
  [[nodiscard]] std::vector<std::vector<Index>> pass_values(Index limit) const;

  /// Whether cells untouched by every pass end up filled (even pass count).
  [[nodiscard]] bool remainder_fills() const;
};

RecipeSpec prepare_recipe(Index strut);

/// Inner skybox exponent: the N with 2^(N-2) < S < 2^(N-1).
int inner_skybox_exponent(Index strut);

/// Fill pattern from the bitstring recipe. Marks are Unknown.
EmanationTable et_recipe(const RecipeSpec& spec, const StrutContext& strut);
EmanationTable et_recipe(const StrutContext& strut);

enum class Band {
  kFull,              // S <= 8 or a power of two
  kSandMandala,       // 8 < S < 16
  kMaximalSingleton,  // one high bit, equal to g
  kComposite,         // anything else; counted from the table
};

std::string to_string(Band b);

struct BoxKiteCount {
  std::uint64_t count = 0;
  Band band = Band::kFull;
};

Band band_of(const StrutContext& strut);

/// Viable box-kites in the table for (N, S). Closed forms cover the full,
/// 8 < S < 16 and maximal-singleton bands; composite strut constants are
/// counted as brute-force filled cells / 24, cross-checked against the
/// recipe's fill count (std::logic_error on disagreement).
BoxKiteCount boxkite_count(const StrutContext& strut);

/// Closed form for 8 < S < 16: (2^(N-4))(2^(N-4)-1) + (2^(N-3)-1)(2^(N-3)-2)/6.
std::uint64_t sand_mandala_count(int exponent);

/// Muntin bookkeeping for 8 < S < 16 skyboxes.
struct SkyboxLevel {
  int nesting = 0;            // B: 0 for the inner skybox
  std::uint64_t quadrants = 1;  // Q = 2^B
  std::uint64_t muntins = 0;    // mu = 2^(N-4) - 1
  std::uint64_t omega = 0;      // 24 mu (mu + 1): cells on overlap-free muntin segments
  std::uint64_t delta = 0;      // 24 (2^(N-3)-1)(2^(N-3)-2)/6: all other filled cells
};

SkyboxLevel skybox_level(const StrutContext& strut);

/// Labels heading near-solid lines for 8 < S < 16: multiples of 8 and
/// multiples of 8 plus S mod 8.
std::vector<Index> muntin_labels(const StrutContext& strut);

struct MuntinSplit {
  std::uint64_t on_muntin_segments = 0;  // exactly one of row/column is a muntin
  std::uint64_t elsewhere = 0;
};

MuntinSplit muntin_split(const EmanationTable& et);

}  // namespace zdsky
