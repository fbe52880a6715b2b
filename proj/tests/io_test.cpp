#include "zdsky/io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace zdsky;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("zdsky_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Number of cell blocks whose center pixel carries `color`.
std::size_t count_blocks(const std::string& ppm, std::size_t cells, int px, Rgb color) {
  std::istringstream in(ppm);
  std::string magic;
  std::size_t w = 0, h = 0, max = 0;
  in >> magic >> w >> h >> max;
  in.get();
  const std::size_t start = static_cast<std::size_t>(in.tellg());
  std::size_t n = 0;
  for (std::size_t r = 0; r < cells; ++r) {
    for (std::size_t c = 0; c < cells; ++c) {
      const std::size_t x = c * px + px / 2, y = r * px + px / 2;
      const std::size_t at = start + 3 * (y * w + x);
      n += static_cast<std::uint8_t>(ppm[at]) == color.r && static_cast<std::uint8_t>(ppm[at + 1]) == color.g &&
           static_cast<std::uint8_t>(ppm[at + 2]) == color.b;
    }
  }
  return n;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Csv, SedenionTable) {
  const auto et = et_bruteforce(StrutContext(4, 1));
  const std::string csv = export_csv(et);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, ",2,4,6,7,5,3");

  std::size_t nonempty = 0, dashed = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');  // label
    while (std::getline(row, field, ',')) {
      nonempty += !field.empty();
      dashed += !field.empty() && field[0] == '-';
    }
  }
  EXPECT_EQ(nonempty, 24u);
  EXPECT_EQ(dashed, 12u);
}

TEST(Csv, RoundTrip) {
  for (const auto& [n, s] : {std::pair{4, 1u}, {5, 9u}, {6, 25u}, {6, 3u}}) {
    const auto et = et_bruteforce(StrutContext(n, s));
    EXPECT_EQ(import_csv(export_csv(et)), et) << n << " " << s;
  }
  const auto recipe = et_recipe(StrutContext(6, 25));
  const std::string csv = export_csv(recipe);
  EXPECT_EQ(csv.find('-'), std::string::npos);
  EXPECT_EQ(import_csv(csv, false), recipe);
}

TEST(Csv, RejectsMalformed) {
  EXPECT_THROW(import_csv(""), FormatError);
  EXPECT_THROW(import_csv("1,2\n"), FormatError);
  EXPECT_THROW(import_csv(",2,4,6\n"), FormatError);
  EXPECT_THROW(import_csv(",2,4,6,7,3,5\n"), FormatError);  // not in table order
  std::string csv = export_csv(et_bruteforce(StrutContext(4, 1)));
  EXPECT_THROW(import_csv(csv.substr(0, csv.size() / 2)), FormatError);
  EXPECT_THROW(import_csv(csv + "junk\n"), FormatError);
  csv[csv.find("\n") + 3] = 'x';
  EXPECT_THROW(import_csv(csv), FormatError);
}

TEST(Csv, Deterministic) {
  const StrutContext sc(6, 27);
  EXPECT_EQ(export_csv(et_bruteforce(sc, 1)), export_csv(et_bruteforce(sc, 4)));
}

TEST(Json, Metadata) {
  const StrutContext sc(6, 25);
  const auto et = et_bruteforce(sc);
  const auto j = nlohmann::json::parse(export_json(et, boxkite_count(sc)));
  EXPECT_EQ(j["schema_version"], kJsonSchemaVersion);
  EXPECT_EQ(j["boxkite_count"], 23);
  EXPECT_EQ(j["N"], 6);
  EXPECT_EQ(j["S"], 25);
  EXPECT_EQ(j["g"], 16);
  EXPECT_EQ(j["X"], 57);
  EXPECT_EQ(j["band"], "composite");
  EXPECT_EQ(j["B"], 2);
  EXPECT_EQ(j["P_arr"], nlohmann::json::array({4, 3}));
  EXPECT_EQ(j["filled_count"], 23 * 24);

  const StrutContext pathion(5, 9);
  EXPECT_EQ(nlohmann::json::parse(export_json(et_bruteforce(pathion), boxkite_count(pathion)))["filled_count"], 72);

  const StrutContext sed(4, 1);
  const auto js = nlohmann::json::parse(export_json(et_bruteforce(sed), boxkite_count(sed)));
  EXPECT_EQ(js["labels"], nlohmann::json::array({2, 4, 6, 7, 5, 3}));
  EXPECT_TRUE(js["B"].is_null());
  EXPECT_TRUE(js["P_arr"].is_null());
  EXPECT_EQ(js["band"], "full");
}

TEST(Palette, Defaults) {
  EXPECT_TRUE(Palette{}.warnings().empty());
  Palette p;
  p.marked = p.filled;
  const auto w = p.warnings();
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("filled"), std::string::npos);
}

TEST(Render, PpmBlocks) {
  const auto et = et_bruteforce(StrutContext(4, 7));
  const Palette p;
  const std::string ppm = render_image(et, p, ImageFormat::kPpm);
  const std::size_t side = et.edge() * p.cell_pixels;
  EXPECT_EQ(ppm.rfind("P6\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n", 0), 0u);
  EXPECT_EQ(count_blocks(ppm, et.edge(), p.cell_pixels, p.filled) +
                count_blocks(ppm, et.edge(), p.cell_pixels, p.marked),
            24u);
}

TEST(Render, FilledBlocksMatchCellsWithOverlay) {
  const auto et = et_bruteforce(StrutContext(6, 15));
  const Palette p;
  const std::string ppm = render_image(et, p, ImageFormat::kPpm, {true, 0});
  EXPECT_EQ(count_blocks(ppm, et.edge(), p.cell_pixels, p.filled), et.filled_count() - et.marked_count());
  EXPECT_EQ(count_blocks(ppm, et.edge(), p.cell_pixels, p.marked), et.marked_count());
  EXPECT_NE(ppm, render_image(et, p, ImageFormat::kPpm));
}

TEST(Render, CrossHairs) {
  // N = 5, S = 15: the two middle rows and columns are solid apart from the diagonals.
  const auto et = et_bruteforce(StrutContext(5, 15));
  const std::size_t mid = et.edge() / 2;
  for (std::size_t line : {mid - 1, mid}) {
    for (std::size_t i = 0; i < et.edge(); ++i) {
      EXPECT_EQ(et.at(line, i).filled, !et.on_long_diagonal(line, i)) << line << "," << i;
      EXPECT_EQ(et.at(i, line).filled, !et.on_long_diagonal(i, line)) << i << "," << line;
    }
  }
}

TEST(Render, SvgOneRectPerFilledCell) {
  const auto et = et_bruteforce(StrutContext(6, 25));
  const std::string svg = render_image(et, Palette{}, ImageFormat::kSvg, {true, 0});
  EXPECT_EQ(occurrences(svg, "class=\"cell"), et.filled_count());
  EXPECT_EQ(occurrences(svg, "class=\"cell marked\""), et.marked_count());
  EXPECT_EQ(occurrences(svg, "class=\"skybox\""), nested_skybox_frames(et.strut()).size());
}

TEST(Render, Formats) {
  EXPECT_EQ(parse_image_format("ppm"), ImageFormat::kPpm);
  EXPECT_EQ(parse_image_format("svg"), ImageFormat::kSvg);
  EXPECT_THROW(parse_image_format("gif"), UnsupportedFormat);
  Palette bad;
  bad.cell_pixels = 0;
  EXPECT_THROW(render_image(et_bruteforce(StrutContext(4, 1)), bad, ImageFormat::kPpm), std::invalid_argument);
}

TEST(Render, NestedFrames) {
  // ET(7, 15) holds ET(6, 15) and ET(5, 15), each with its frame lines.
  const auto frames = nested_skybox_frames(StrutContext(7, 15));
  ASSERT_EQ(frames.size(), 2u);
  EXPECT_EQ(frames[0], (std::pair<std::size_t, std::size_t>{15, 32}));
  EXPECT_EQ(frames[1], (std::pair<std::size_t, std::size_t>{23, 16}));
  EXPECT_TRUE(nested_skybox_frames(StrutContext(7, 5)).empty());
  EXPECT_TRUE(nested_skybox_frames(StrutContext(5, 9)).empty());
}

TEST(Sweeps, Flipbook) {
  const auto dir = scratch("flipbook");
  const auto seq = flipbook(5, 9, 15, dir);
  EXPECT_EQ(seq.axis, SweepAxis::kStrut);
  ASSERT_EQ(seq.frames.size(), 7u);
  for (std::size_t i = 1; i < seq.frames.size(); ++i) EXPECT_LT(seq.frames[i - 1].parameter, seq.frames[i].parameter);
  for (const auto& f : seq.frames) EXPECT_TRUE(fs::exists(f.path));
  EXPECT_TRUE(seq.notices.empty());

  const auto one = flipbook(5, 9, 9, dir);
  EXPECT_EQ(one.frames.size(), 1u);

  SweepOptions recipe;
  recipe.method = TableMethod::kRecipe;
  const auto skipping = flipbook(5, 7, 10, dir, recipe);
  EXPECT_EQ(skipping.frames.size(), 2u);
  EXPECT_EQ(skipping.notices.size(), 2u);
  EXPECT_THROW(flipbook(5, 10, 9, dir), DomainError);
}

TEST(Sweeps, BalloonRideSharesScale) {
  const auto dir = scratch("balloon");
  const auto seq = balloon_ride(15, 5, 7, dir);
  EXPECT_EQ(seq.axis, SweepAxis::kExponent);
  ASSERT_EQ(seq.frames.size(), 3u);
  const std::string first = slurp(seq.frames[0].path);
  const std::string last = slurp(seq.frames[2].path);
  EXPECT_EQ(first.size(), last.size());
  EXPECT_EQ(first.rfind("P6\n248 248\n", 0), 0u);

  const auto skipping = balloon_ride(15, 4, 5, dir);
  EXPECT_EQ(skipping.frames.size(), 1u);
  EXPECT_EQ(skipping.notices.size(), 1u);
}

TEST(WriteFileAtomic, ReplacesContents) {
  const auto dir = scratch("atomic");
  const auto path = dir / "out.txt";
  write_file_atomic(path, "one");
  write_file_atomic(path, "two");
  EXPECT_EQ(slurp(path), "two");
  EXPECT_FALSE(fs::exists(dir / "out.txt.tmp"));
  EXPECT_THROW(write_file_atomic(dir / "missing" / "x", "y"), std::runtime_error);
}
