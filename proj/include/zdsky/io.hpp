#pragma once

// Serialization and rendering of emanation tables.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdsky/emanation.hpp"

namespace zdsky {

/// Labels across the first row and down the first column; filled cells hold
/// P in decimal, with a leading "-" for marked (positive-edge) cells; blanks
/// are empty. Lines end in "\n".
std::string export_csv(const EmanationTable& et);

/// Inverse of export_csv. N and S are recovered from the labels. When
/// `marks_known` is false (recipe output) unprefixed cells get Mark::kUnknown.
EmanationTable import_csv(const std::string& text, bool marks_known = true);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kJsonSchemaVersion = 1;

/// Metadata and labels as a JSON document (pretty-printed, stable key order).
std::string export_json(const EmanationTable& et, const BoxKiteCount& count);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

struct Palette {
  Rgb blank{255, 255, 255};
  Rgb filled{0, 0, 0};
  Rgb marked{255, 140, 0};
  Rgb label_line{135, 206, 235};
  Rgb diagonal{211, 211, 211};
  int cell_pixels = 4;

  /// Human-readable complaints: roles sharing a color, silly pixel sizes.
  [[nodiscard]] std::vector<std::string> warnings() const;
};

enum class ImageFormat { kPpm, kSvg };

class UnsupportedFormat : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ImageFormat parse_image_format(const std::string& name);
std::string extension(ImageFormat f);

struct RenderOptions {
  /// Outline each nested skybox (frame lines included) in the label-line color.
  bool skybox_overlay = false;
  /// Canvas edge in cells; the table is centered. 0 means the table's edge.
  std::size_t canvas_cells = 0;
};

/// Centered squares, as (offset, edge) in cells, occupied by the smaller
/// skyboxes nested inside ET(N, S), outermost first. Empty when S has no
/// skybox nesting.
std::vector<std::pair<std::size_t, std::size_t>> nested_skybox_frames(const StrutContext& strut);

/// PPM (binary P6) or SVG. One block per cell; filled cells in the filled or
/// marked color, long-diagonal cells in the diagonal color.
std::string render_image(const EmanationTable& et, const Palette& palette, ImageFormat format,
                         const RenderOptions& options = {});

enum class SweepAxis { kStrut, kExponent };

struct Frame {
  std::uint32_t parameter = 0;
  std::filesystem::path path;
};

struct FrameSequence {
  SweepAxis axis = SweepAxis::kStrut;
  std::vector<Frame> frames;
  /// One line per skipped (N, S) pair.
  std::vector<std::string> notices;
};

struct SweepOptions {
  Palette palette;
  ImageFormat format = ImageFormat::kPpm;
  TableMethod method = TableMethod::kBruteForce;
  bool skybox_overlay = false;
  unsigned threads = 0;
};

/// Fixed N, S from `first` to `last`: one frame per valid S.
FrameSequence flipbook(int exponent, Index first, Index last, const std::filesystem::path& dir,
                       const SweepOptions& options = {});

/// Fixed S, N from `first` to `last`: one frame per valid N, all on the
/// largest table's canvas with smaller tables centered.
FrameSequence balloon_ride(Index strut, int first, int last, const std::filesystem::path& dir,
                           const SweepOptions& options = {});

/// Table by the requested method.
EmanationTable build_table(const StrutContext& strut, TableMethod method, unsigned threads = 0);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace zdsky
