#include "zdsky/emanation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace zdsky {

std::string to_string(TableMethod m) { return m == TableMethod::kRecipe ? "recipe" : "brute"; }

EmanationTable::EmanationTable(StrutContext strut, std::vector<Index> labels, TableMethod method)
    : strut_(strut), labels_(std::move(labels)), method_(method), cells_(labels_.size() * labels_.size()) {}

std::size_t EmanationTable::index(std::size_t row, std::size_t col) const {
  if (row >= edge() || col >= edge()) throw std::out_of_range("cell outside emanation table");
  return row * edge() + col;
}

std::size_t EmanationTable::filled_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.filled; }));
}

std::size_t EmanationTable::marked_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      cells_.begin(), cells_.end(), [](const Cell& c) { return c.filled && c.mark == Mark::kPositive; }));
}

std::vector<bool> EmanationTable::fill_pattern() const {
  std::vector<bool> out(cells_.size());
  std::transform(cells_.begin(), cells_.end(), out.begin(), [](const Cell& c) { return c.filled; });
  return out;
}

std::vector<std::string> EmanationTable::invariant_violations() const {
  std::vector<std::string> out;
  const auto where = [](std::size_t r, std::size_t c) {
    return "(" + std::to_string(r) + ", " + std::to_string(c) + ")";
  };
  const Index big = strut_.generator();
  const Index s = strut_.strut();
  if (edge() != big - 2) out.push_back("edge " + std::to_string(edge()) + " != G - 2");

  std::vector<bool> seen(big, false);
  for (std::size_t i = 0; i < edge(); ++i) {
    const Index l = labels_[i];
    if (!strut_.is_low_index(l) || seen[l]) {
      out.push_back("bad or repeated label " + std::to_string(l));
      continue;
    }
    seen[l] = true;
    if (labels_[edge() - 1 - i] != (l ^ s)) out.push_back("label mirror broken at " + std::to_string(i));
  }
  if (!out.empty()) return out;

  for (std::size_t r = 0; r < edge(); ++r) {
    for (std::size_t c = 0; c < edge(); ++c) {
      const Cell& cell = at(r, c);
      if (on_long_diagonal(r, c) && cell.filled) out.push_back("long diagonal filled at " + where(r, c));
      if (cell.filled) {
        const Index p = labels_[r] ^ labels_[c];
        if (cell.value != p) out.push_back("P != R ^ C at " + where(r, c));
        if (!strut_.is_low_index(p)) out.push_back("P not a label at " + where(r, c));
      }
      if (cell != at(c, r)) out.push_back("asymmetric at " + where(r, c));
    }
  }
  return out;
}

std::vector<Index> label_order(const StrutContext& strut) {
  const Index big = strut.generator();
  const Index s = strut.strut();
  const std::size_t edge = big - 2;
  std::vector<Index> labels(edge);
  std::vector<bool> placed(big, false);
  std::size_t next = 0;
  for (Index u = 1; u < big; ++u) {
    if (u == s || placed[u]) continue;
    labels[next] = u;
    labels[edge - 1 - next] = u ^ s;
    placed[u] = placed[u ^ s] = true;
    ++next;
  }
  return labels;
}

EmanationTable et_bruteforce(const StrutContext& strut, unsigned threads) {
  EmanationTable et(strut, label_order(strut), TableMethod::kBruteForce);
  const std::size_t edge = et.edge();
  std::vector<Assessor> vertices;
  vertices.reserve(edge);
  for (Index l : et.labels()) vertices.push_back(assessor_of(strut, l));

  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < edge; r += stride) {
      for (std::size_t c = 0; c < edge; ++c) {
        if (et.on_long_diagonal(r, c)) continue;
        if (const auto w = dmz_test(strut, vertices[r], vertices[c])) {
          const Mark mark = w->edge_sign == EdgeSign::kPositive ? Mark::kPositive : Mark::kNegative;
          et.set(r, c, Cell::fill(et.label(r) ^ et.label(c), mark));
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(edge, 1)));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  return et;
}

bool recipe_applies(Index strut) noexcept { return strut > 8 && !std::has_single_bit(strut); }

std::vector<Index> RecipePass::values(Index limit) const {
  const Index step = Index{1} << power;
  std::vector<Index> out;
  for (Index m = step; m < limit; m += step) out.push_back(m);
  for (Index m = residue; m < limit; m += step) {
    if (m != 0) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RecipePass> RecipeSpec::passes() const {
  std::vector<RecipePass> out;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (residues[i] == 0) continue;
    out.push_back(RecipePass{powers[i], residues[i], out.size() % 2 == 0});
  }
  return out;
}

std::vector<std::vector<Index>> RecipeSpec::pass_values(Index limit) const {
  std::vector<bool> claimed(limit, false);
  if (strut < limit) claimed[strut] = true;
  std::vector<std::vector<Index>> out;
  for (const RecipePass& pass : passes()) {
    auto& fresh = out.emplace_back();
    for (Index v : pass.values(limit)) {
      if (!claimed[v]) fresh.push_back(v);
    }
    for (Index v : fresh) claimed[v] = true;
  }
  return out;
}

bool RecipeSpec::remainder_fills() const { return passes().size() % 2 == 0; }

RecipeSpec prepare_recipe(Index strut) {
  if (!recipe_applies(strut)) {
    throw RecipeDomainError("recipe needs S > 8 and not a power of two, got " + std::to_string(strut) +
                            "; use the brute-force table");
  }
  RecipeSpec spec;
  spec.strut = strut;
  spec.shift = strut % 8 == 0 ? 4 : 3;
  for (int bit = std::bit_width(strut) - 1; bit >= spec.shift; --bit) {
    if ((strut >> bit) & 1u) {
      spec.powers.push_back(bit);
      spec.residues.push_back(strut % (Index{1} << bit));
    }
  }
  return spec;
}

int inner_skybox_exponent(Index strut) {
  if (strut < 3 || std::has_single_bit(strut)) {
    throw DomainError("no inner skybox for S = " + std::to_string(strut));
  }
  return std::bit_width(strut) + 1;
}

EmanationTable et_recipe(const RecipeSpec& spec, const StrutContext& strut) {
  if (!recipe_applies(strut.strut())) {
    throw RecipeDomainError("recipe needs S > 8 and not a power of two, got " +
                            std::to_string(strut.strut()) + "; use the brute-force table");
  }
  if (spec.strut != strut.strut()) throw DomainError("recipe prepared for a different strut constant");

  EmanationTable et(strut, label_order(strut), TableMethod::kRecipe);
  const std::size_t edge = et.edge();
  const Index big = strut.generator();
  std::vector<bool> painted(edge * edge, false);
  for (std::size_t r = 0; r < edge; ++r) {
    for (std::size_t c = 0; c < edge; ++c) painted[r * edge + c] = et.on_long_diagonal(r, c);
  }

  const auto paint = [&](std::size_t r, std::size_t c, bool fill) {
    painted[r * edge + c] = true;
    if (fill) et.set(r, c, Cell::fill(et.label(r) ^ et.label(c), Mark::kUnknown));
  };

  for (const RecipePass& pass : spec.passes()) {
    std::vector<bool> hit(big, false);
    for (Index v : pass.values(big)) hit[v] = true;
    for (std::size_t r = 0; r < edge; ++r) {
      for (std::size_t c = 0; c < edge; ++c) {
        if (painted[r * edge + c]) continue;
        const Index row = et.label(r), col = et.label(c);
        if (hit[row] || hit[col] || hit[row ^ col]) paint(r, c, pass.fills);
      }
    }
  }
  const bool rest = spec.remainder_fills();
  for (std::size_t r = 0; r < edge; ++r) {
    for (std::size_t c = 0; c < edge; ++c) {
      if (!painted[r * edge + c]) paint(r, c, rest);
    }
  }
  return et;
}

EmanationTable et_recipe(const StrutContext& strut) {
  if (!recipe_applies(strut.strut())) {
    throw RecipeDomainError("recipe needs S > 8 and not a power of two, got " +
                            std::to_string(strut.strut()) + "; use the brute-force table");
  }
  return et_recipe(prepare_recipe(strut.strut()), strut);
}

std::string to_string(Band b) {
  switch (b) {
    case Band::kFull:
      return "full";
    case Band::kSandMandala:
      return "sand-mandala";
    case Band::kMaximalSingleton:
      return "maximal-singleton";
    case Band::kComposite:
      return "composite";
  }
  return "?";
}

Band band_of(const StrutContext& strut) {
  const Index s = strut.strut();
  if (!recipe_applies(s)) return Band::kFull;
  if (s < 16) return Band::kSandMandala;
  const auto passes = prepare_recipe(s).passes();
  if (passes.size() == 1 && passes[0].power == strut.exponent() - 2) return Band::kMaximalSingleton;
  return Band::kComposite;
}

std::uint64_t sand_mandala_count(int exponent) {
  if (exponent < 4) throw DomainError("sand-mandala band needs N >= 4");
  const std::uint64_t q = std::uint64_t{1} << (exponent - 4);
  const std::uint64_t h = std::uint64_t{1} << (exponent - 3);
  return q * (q - 1) + (h - 1) * (h - 2) / 6;
}

BoxKiteCount boxkite_count(const StrutContext& strut) {
  const Band band = band_of(strut);
  const int n = strut.exponent();
  switch (band) {
    case Band::kFull:
      return {trip_count(n - 2), band};
    case Band::kSandMandala:
      return {sand_mandala_count(n), band};
    case Band::kMaximalSingleton:
      return {(std::uint64_t{1} << (n - 3)) - 1, band};
    case Band::kComposite:
      break;
  }
  const std::size_t brute = et_bruteforce(strut).filled_count();
  const std::size_t recipe = et_recipe(strut).filled_count();
  if (brute % 24 != 0 || brute != recipe) {
    throw std::logic_error("box-kite count inconsistent for N=" + std::to_string(n) + " S=" +
                           std::to_string(strut.strut()) + ": brute " + std::to_string(brute) +
                           " cells, recipe " + std::to_string(recipe) + " cells");
  }
  return {brute / 24, band};
}

SkyboxLevel skybox_level(const StrutContext& strut) {
  const Index s = strut.strut();
  if (s <= 8 || s >= 16) throw DomainError("muntin geometry is defined for 8 < S < 16");
  const int n = strut.exponent();
  SkyboxLevel level;
  level.nesting = n - inner_skybox_exponent(s);
  level.quadrants = std::uint64_t{1} << level.nesting;
  level.muntins = (std::uint64_t{1} << (n - 4)) - 1;
  level.omega = 24 * level.muntins * (level.muntins + 1);
  const std::uint64_t h = std::uint64_t{1} << (n - 3);
  level.delta = 24 * (h - 1) * (h - 2) / 6;
  return level;
}

std::vector<Index> muntin_labels(const StrutContext& strut) {
  const Index s = strut.strut();
  if (s <= 8 || s >= 16) throw DomainError("muntin geometry is defined for 8 < S < 16");
  std::vector<Index> out;
  for (Index l : label_order(strut)) {
    if (l % 8 == 0 || l % 8 == s % 8) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MuntinSplit muntin_split(const EmanationTable& et) {
  const auto labels = muntin_labels(et.strut());
  std::vector<bool> is_muntin(et.strut().generator(), false);
  for (Index l : labels) is_muntin[l] = true;
  MuntinSplit split;
  for (std::size_t r = 0; r < et.edge(); ++r) {
    for (std::size_t c = 0; c < et.edge(); ++c) {
      if (!et.at(r, c).filled) continue;
      if (is_muntin[et.label(r)] != is_muntin[et.label(c)]) {
        ++split.on_muntin_segments;
      } else {
        ++split.elsewhere;
      }
    }
  }
  return split;
}

}  // namespace zdsky
