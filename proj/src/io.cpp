#include "zdsky/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zdsky {

namespace {

std::string cell_text(const Cell& c) {
  if (!c.filled) return {};
  return (c.mark == Mark::kPositive ? "-" : "") + std::to_string(c.value);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Index parse_index(const std::string& s, const std::string& where) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw FormatError("bad number '" + s + "' in " + where);
  }
  try {
    return static_cast<Index>(std::stoul(s));
  } catch (const std::exception&) {
    throw FormatError("number out of range '" + s + "' in " + where);
  }
}

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

Rgb color_of(const EmanationTable& et, std::size_t r, std::size_t c, const Palette& p) {
  const Cell& cell = et.at(r, c);
  if (cell.filled) return cell.mark == Mark::kPositive ? p.marked : p.filled;
  if (et.on_long_diagonal(r, c)) return p.diagonal;
  return p.blank;
}

std::string render_ppm(const EmanationTable& et, const Palette& p, std::size_t canvas, std::size_t origin,
                       const std::vector<std::pair<std::size_t, std::size_t>>& frames) {
  const std::size_t px = static_cast<std::size_t>(p.cell_pixels);
  const std::size_t side = canvas * px;
  std::vector<Rgb> image(side * side, p.blank);
  const auto fill_rect = [&](std::size_t x0, std::size_t y0, std::size_t w, std::size_t h, Rgb color) {
    for (std::size_t y = y0; y < y0 + h; ++y) std::fill_n(image.begin() + y * side + x0, w, color);
  };
  for (std::size_t r = 0; r < et.edge(); ++r) {
    for (std::size_t c = 0; c < et.edge(); ++c) {
      fill_rect((origin + c) * px, (origin + r) * px, px, px, color_of(et, r, c, p));
    }
  }
  for (const auto& [offset, edge] : frames) {
    const std::size_t x0 = (origin + offset) * px, len = edge * px;
    fill_rect(x0, x0, len, 1, p.label_line);
    fill_rect(x0, x0 + len - 1, len, 1, p.label_line);
    fill_rect(x0, x0, 1, len, p.label_line);
    fill_rect(x0 + len - 1, x0, 1, len, p.label_line);
  }

  std::string out = "P6\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
  out.reserve(out.size() + image.size() * 3);
  for (const Rgb& c : image) {
    out.push_back(static_cast<char>(c.r));
    out.push_back(static_cast<char>(c.g));
    out.push_back(static_cast<char>(c.b));
  }
  return out;
}

std::string render_svg(const EmanationTable& et, const Palette& p, std::size_t canvas, std::size_t origin,
                       const std::vector<std::pair<std::size_t, std::size_t>>& frames) {
  const std::size_t px = static_cast<std::size_t>(p.cell_pixels);
  const std::size_t side = canvas * px;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << " " << side << "\" shape-rendering=\"crispEdges\">\n";
  os << "<rect class=\"background\" width=\"" << side << "\" height=\"" << side << "\" fill=\"" << hex(p.blank)
     << "\"/>\n";
  const auto rect = [&](const char* cls, std::size_t r, std::size_t c, Rgb color) {
    os << "<rect class=\"" << cls << "\" x=\"" << (origin + c) * px << "\" y=\"" << (origin + r) * px
       << "\" width=\"" << px << "\" height=\"" << px << "\" fill=\"" << hex(color) << "\"/>\n";
  };
  for (std::size_t r = 0; r < et.edge(); ++r) {
    for (std::size_t c = 0; c < et.edge(); ++c) {
      const Cell& cell = et.at(r, c);
      if (cell.filled) {
        rect(cell.mark == Mark::kPositive ? "cell marked" : "cell", r, c, color_of(et, r, c, p));
      } else if (et.on_long_diagonal(r, c)) {
        rect("diagonal", r, c, p.diagonal);
      }
    }
  }
  for (const auto& [offset, edge] : frames) {
    os << "<rect class=\"skybox\" x=\"" << (origin + offset) * px << "\" y=\"" << (origin + offset) * px
       << "\" width=\"" << edge * px << "\" height=\"" << edge * px << "\" fill=\"none\" stroke=\""
       << hex(p.label_line) << "\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::filesystem::path frame_path(const std::filesystem::path& dir, int exponent, Index strut, ImageFormat f) {
  char name[64];
  std::snprintf(name, sizeof name, "n%02d_s%05u.%s", exponent, static_cast<unsigned>(strut), extension(f).c_str());
  return dir / name;
}

}  // namespace

std::string export_csv(const EmanationTable& et) {
  std::string out;
  for (Index l : et.labels()) out += "," + std::to_string(l);
  out += "\n";
  for (std::size_t r = 0; r < et.edge(); ++r) {
    out += std::to_string(et.label(r));
    for (std::size_t c = 0; c < et.edge(); ++c) out += "," + cell_text(et.at(r, c));
    out += "\n";
  }
  return out;
}

EmanationTable import_csv(const std::string& text, bool marks_known) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty CSV");
  const auto header = split_row(line);
  if (header.size() < 2 || !header[0].empty()) throw FormatError("header must start with an empty corner cell");

  std::vector<Index> labels;
  for (std::size_t i = 1; i < header.size(); ++i) labels.push_back(parse_index(header[i], "header"));
  const std::size_t edge = labels.size();
  if (!std::has_single_bit(edge + 2)) throw FormatError("table edge " + std::to_string(edge) + " is not G - 2");
  const int exponent = std::bit_width(edge + 2);
  const Index strut = labels.front() ^ labels.back();

  std::optional<StrutContext> sc;
  try {
    sc.emplace(exponent, strut);
  } catch (const DomainError& e) {
    throw FormatError(std::string("labels do not describe a table: ") + e.what());
  }
  if (labels != label_order(*sc)) throw FormatError("labels are not in emanation-table order");

  EmanationTable et(*sc, labels, marks_known ? TableMethod::kBruteForce : TableMethod::kRecipe);
  for (std::size_t r = 0; r < edge; ++r) {
    if (!std::getline(in, line)) throw FormatError("missing row " + std::to_string(r));
    const auto fields = split_row(line);
    const std::string where = "row " + std::to_string(r);
    if (fields.size() != edge + 1) throw FormatError(where + " has " + std::to_string(fields.size()) + " fields");
    if (parse_index(fields[0], where) != labels[r]) throw FormatError(where + " label mismatch");
    for (std::size_t c = 0; c < edge; ++c) {
      const std::string& f = fields[c + 1];
      if (f.empty()) continue;
      const bool marked = f.front() == '-';
      const Index value = parse_index(marked ? f.substr(1) : f, where);
      const Mark mark = marked ? Mark::kPositive : (marks_known ? Mark::kNegative : Mark::kUnknown);
      et.set(r, c, Cell::fill(value, mark));
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw FormatError("trailing data after the last row");
  }
  return et;
}

std::string export_json(const EmanationTable& et, const BoxKiteCount& count) {
  const StrutContext& sc = et.strut();
  nlohmann::ordered_json j;
  j["schema_version"] = kJsonSchemaVersion;
  j["N"] = sc.exponent();
  j["S"] = sc.strut();
  j["g"] = sc.half_generator();
  j["X"] = sc.x();
  j["band"] = to_string(count.band);
  if (recipe_applies(sc.strut())) {
    const RecipeSpec spec = prepare_recipe(sc.strut());
    j["B"] = spec.high_bit_count();
    j["P_arr"] = spec.powers;
  } else {
    j["B"] = nullptr;
    j["P_arr"] = nullptr;
  }
  j["method"] = to_string(et.method());
  j["filled_count"] = et.filled_count();
  j["marked_count"] = et.method() == TableMethod::kRecipe ? nlohmann::ordered_json(nullptr)
                                                          : nlohmann::ordered_json(et.marked_count());
  j["boxkite_count"] = count.count;
  j["labels"] = et.labels();
  return j.dump(2) + "\n";
}

std::vector<std::string> Palette::warnings() const {
  std::vector<std::string> out;
  const std::array<std::pair<const char*, Rgb>, 5> roles{
      {{"blank", blank}, {"filled", filled}, {"marked", marked}, {"label-line", label_line}, {"diagonal", diagonal}}};
  for (std::size_t i = 0; i < roles.size(); ++i) {
    for (std::size_t j = i + 1; j < roles.size(); ++j) {
      if (roles[i].second == roles[j].second) {
        out.push_back(std::string("palette roles ") + roles[i].first + " and " + roles[j].first + " share color " +
                      hex(roles[i].second));
      }
    }
  }
  if (cell_pixels < 1) out.push_back("cell size must be at least 1 pixel");
  if (cell_pixels < 3) out.push_back("cells under 3 pixels are hard to tell apart from skybox outlines");
  return out;
}

ImageFormat parse_image_format(const std::string& name) {
  if (name == "ppm") return ImageFormat::kPpm;
  if (name == "svg") return ImageFormat::kSvg;
  throw UnsupportedFormat("unsupported image format '" + name + "' (expected ppm or svg)");
}

std::string extension(ImageFormat f) { return f == ImageFormat::kSvg ? "svg" : "ppm"; }

std::vector<std::pair<std::size_t, std::size_t>> nested_skybox_frames(const StrutContext& strut) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!recipe_applies(strut.strut())) return out;
  const std::size_t edge = strut.generator() - 2;
  for (int n = strut.exponent() - 1; n >= inner_skybox_exponent(strut.strut()); --n) {
    const std::size_t block = std::size_t{1} << (n - 1);  // ET(n) plus its two frame lines
    out.emplace_back((edge - block) / 2, block);
  }
  return out;
}

std::string render_image(const EmanationTable& et, const Palette& palette, ImageFormat format,
                         const RenderOptions& options) {
  if (palette.cell_pixels < 1 || palette.cell_pixels > 256) {
    throw std::invalid_argument("cell size must be between 1 and 256 pixels");
  }
  const std::size_t canvas = options.canvas_cells == 0 ? et.edge() : options.canvas_cells;
  if (canvas < et.edge() || (canvas - et.edge()) % 2 != 0) {
    throw std::invalid_argument("canvas of " + std::to_string(canvas) + " cells cannot center a table of edge " +
                                std::to_string(et.edge()));
  }
  const std::size_t origin = (canvas - et.edge()) / 2;
  const auto frames = options.skybox_overlay ? nested_skybox_frames(et.strut())
                                             : std::vector<std::pair<std::size_t, std::size_t>>{};
  switch (format) {
    case ImageFormat::kPpm:
      return render_ppm(et, palette, canvas, origin, frames);
    case ImageFormat::kSvg:
      return render_svg(et, palette, canvas, origin, frames);
  }
  throw UnsupportedFormat("unknown image format");
}

EmanationTable build_table(const StrutContext& strut, TableMethod method, unsigned threads) {
  return method == TableMethod::kRecipe ? et_recipe(strut) : et_bruteforce(strut, threads);
}

FrameSequence flipbook(int exponent, Index first, Index last, const std::filesystem::path& dir,
                       const SweepOptions& options) {
  if (first > last) throw DomainError("S range must be ascending");
  const AlgebraContext ctx(exponent);
  FrameSequence seq{SweepAxis::kStrut, {}, {}};
  std::filesystem::create_directories(dir);
  for (Index s = first; s <= last; ++s) {
    try {
      const EmanationTable et = build_table(StrutContext(ctx, s), options.method, options.threads);
      const auto path = frame_path(dir, exponent, s, options.format);
      write_file_atomic(path, render_image(et, options.palette, options.format, {options.skybox_overlay, 0}));
      seq.frames.push_back({s, path});
    } catch (const DomainError& e) {
      seq.notices.push_back("skipped N=" + std::to_string(exponent) + " S=" + std::to_string(s) + ": " + e.what());
    }
  }
  return seq;
}

FrameSequence balloon_ride(Index strut, int first, int last, const std::filesystem::path& dir,
                           const SweepOptions& options) {
  if (first > last) throw DomainError("N range must be ascending");
  if (last > kMaxExponent) throw DomainError("N range exceeds the supported exponent");
  FrameSequence seq{SweepAxis::kExponent, {}, {}};
  std::filesystem::create_directories(dir);
  const std::size_t canvas = (std::size_t{1} << (last - 1)) - 2;
  for (int n = first; n <= last; ++n) {
    try {
      const EmanationTable et = build_table(StrutContext(n, strut), options.method, options.threads);
      const auto path = frame_path(dir, n, strut, options.format);
      write_file_atomic(path, render_image(et, options.palette, options.format, {options.skybox_overlay, canvas}));
      seq.frames.push_back({static_cast<std::uint32_t>(n), path});
    } catch (const DomainError& e) {
      seq.notices.push_back("skipped N=" + std::to_string(n) + " S=" + std::to_string(strut) + ": " + e.what());
    }
  }
  return seq;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace zdsky
