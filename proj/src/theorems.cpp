#include "zdsky/theorems.hpp"

#include <bit>
#include <sstream>

namespace zdsky {

void CheckReport::check(bool ok, const std::string& what) {
  ++cells_checked;
  if (ok) return;
  passed = false;
  ++mismatch_count;
  if (mismatches.size() < kMaxListed) mismatches.push_back(what);
}

namespace {

std::string describe(const Cell& c) {
  if (!c.filled) return "blank";
  std::string s = std::to_string(c.value);
  if (c.mark == Mark::kPositive) return "-" + s;
  if (c.mark == Mark::kUnknown) return s + "?";
  return s;
}

std::string at(const char* table, std::size_t r, std::size_t c) {
  std::ostringstream os;
  os << table << "(" << r << ", " << c << ")";
  return os.str();
}

void require_nested(Index strut, int exponent) {
  if (!recipe_applies(strut)) {
    throw DomainError("skybox nesting needs S > 8, not a power of two; got " + std::to_string(strut));
  }
  if (exponent < inner_skybox_exponent(strut)) {
    throw DomainError("S = " + std::to_string(strut) + " has no skybox at N = " + std::to_string(exponent));
  }
  if (exponent + 1 > kMaxExponent) throw DomainError("N + 1 exceeds the supported exponent");
}

struct Pair {
  EmanationTable small;
  EmanationTable big;
};

Pair build_pair(Index strut, int exponent) {
  return {et_bruteforce(StrutContext(exponent, strut)), et_bruteforce(StrutContext(exponent + 1, strut))};
}

}  // namespace

CheckReport compare_tables(const std::string& name, const EmanationTable& expected, const EmanationTable& actual,
                           bool compare_marks) {
  CheckReport report{name};
  if (expected.labels() != actual.labels()) {
    report.check(false, "label rows differ");
    return report;
  }
  for (std::size_t r = 0; r < expected.edge(); ++r) {
    for (std::size_t c = 0; c < expected.edge(); ++c) {
      const Cell& e = expected.at(r, c);
      const Cell& a = actual.at(r, c);
      const bool ok = e.filled == a.filled && (!e.filled || e.value == a.value) &&
                      (!compare_marks || !e.filled || e.mark == a.mark);
      report.check(ok, at("cell", r, c) + ": expected " + describe(e) + ", got " + describe(a));
    }
  }
  return report;
}

CheckReport skybox_embed_check(Index strut, int exponent) {
  require_nested(strut, exponent);
  const auto [small, big] = build_pair(strut, exponent);
  CheckReport report{"skybox embedding S=" + std::to_string(strut) + " N=" + std::to_string(exponent) + "->" +
                     std::to_string(exponent + 1)};

  const std::size_t es = small.edge();
  const std::size_t off = (std::size_t{1} << (exponent - 2)) - 1;
  const Index gp = Index{1} << (exponent - 1);

  // The offset argument relies on each label half ascending.
  for (std::size_t i = 1; i < es / 2; ++i) {
    report.check(small.label(i - 1) < small.label(i), "smaller table's left label half is not ascending");
  }
  report.check(big.label(off) == gp, "frame row " + std::to_string(off) + " is not labeled g'");
  report.check(big.label(off + es + 1) == (gp ^ strut), "frame row " + std::to_string(off + es + 1) +
                                                            " is not labeled g'+S");

  for (std::size_t i = 0; i < es; ++i) {
    report.check(big.label(off + 1 + i) == (small.label(i) ^ gp),
                 "window label " + std::to_string(off + 1 + i) + " is not the smaller label plus g'");
    for (std::size_t j = 0; j < es; ++j) {
      const Cell& s = small.at(i, j);
      const Cell& b = big.at(off + 1 + i, off + 1 + j);
      report.check(s == b, at("small", i, j) + " = " + describe(s) + " but " + at("big", off + 1 + i, off + 1 + j) +
                               " = " + describe(b));
    }
    // Frame lines: filled, carrying the smaller table's labels (mirrored on the g'+S line).
    const std::size_t col = off + 1 + i;
    for (const auto& [row, want] : {std::pair{off, small.label(i)}, std::pair{off + es + 1, small.label(es - 1 - i)}}) {
      for (const Cell& b : {big.at(row, col), big.at(col, row)}) {
        report.check(b.filled && b.value == want,
                     at("big", row, col) + " = " + describe(b) + ", expected label " + std::to_string(want));
      }
    }
  }
  return report;
}

CheckReport four_corners_check(Index strut, int exponent) {
  require_nested(strut, exponent);
  const auto [small, big] = build_pair(strut, exponent);
  CheckReport report{"four corners S=" + std::to_string(strut) + " N=" + std::to_string(exponent) + "->" +
                     std::to_string(exponent + 1)};
  const std::size_t h = small.edge() / 2;
  const std::size_t shift = big.edge() - h;
  for (std::size_t qi = 0; qi < 2; ++qi) {
    for (std::size_t qj = 0; qj < 2; ++qj) {
      for (std::size_t i = 0; i < h; ++i) {
        const std::size_t si = i + qi * h, bi = i + qi * shift;
        if (qj == 0) {
          report.check(small.label(si) == big.label(bi), "corner label " + std::to_string(si) + " moved");
        }
        for (std::size_t j = 0; j < h; ++j) {
          const std::size_t sj = j + qj * h, bj = j + qj * shift;
          const Cell& s = small.at(si, sj);
          const Cell& b = big.at(bi, bj);
          report.check(s == b, at("small", si, sj) + " = " + describe(s) + " but " + at("big", bi, bj) + " = " +
                                   describe(b));
        }
      }
    }
  }
  return report;
}

CheckReport french_windows_check(Index strut, int exponent) {
  require_nested(strut, exponent);
  const EmanationTable big = et_bruteforce(StrutContext(exponent + 1, strut));
  CheckReport report{"french windows S=" + std::to_string(strut) + " N=" + std::to_string(exponent) + "->" +
                     std::to_string(exponent + 1)};

  const std::size_t eb = big.edge();
  const std::size_t es = (std::size_t{1} << (exponent - 1)) - 2;
  const std::size_t off = (std::size_t{1} << (exponent - 2)) - 1;
  const Index gp = Index{1} << (exponent - 1);

  for (std::size_t r = off; r <= off + es + 1; ++r) {
    const bool label_line = r == off || r == off + es + 1;
    const Index row = big.label(r);
    for (std::size_t c = 0; c < off; ++c) {
      const std::size_t cw = c + off + 1;
      for (const auto& [sc, wc] : {std::pair{c, cw}, std::pair{eb - 1 - c, eb - 1 - cw}}) {
        const Cell& window = big.at(r, wc);
        Cell expected;
        if (window.filled) {
          Mark mark = window.mark;
          if (label_line) mark = mark == Mark::kPositive ? Mark::kNegative : Mark::kPositive;
          expected = Cell::fill(window.value + gp, mark);
        } else if (row == big.label(wc)) {
          expected = Cell::fill(gp, Mark::kPositive);
        } else if ((row ^ big.label(wc)) == strut) {
          expected = Cell::fill(gp + strut, Mark::kNegative);
        }
        // Shutters to the sides, and their transposes above and below.
        for (const auto& [rr, cc] : {std::pair{r, sc}, std::pair{sc, r}}) {
          const Cell& shutter = big.at(rr, cc);
          report.check(shutter == expected, at("shutter", rr, cc) + " = " + describe(shutter) + ", expected " +
                                                describe(expected) + " from " + at("window", r, wc));
        }
      }
    }
  }
  return report;
}

CheckReport number_hub_check(int exponent) {
  if (exponent < 4) throw DomainError("number hub needs N >= 4");
  const Index strut = Index{1} << (exponent - 2);
  const StrutContext sc(exponent, strut);
  const EmanationTable et = et_bruteforce(sc);
  const AlgebraContext inner(exponent - 2);
  CheckReport report{"number hub N=" + std::to_string(exponent) + " S=" + std::to_string(strut)};

  const std::size_t q = strut - 1;
  for (std::size_t r = 0; r < q; ++r) {
    report.check(et.label(r) == r + 1, "hub label " + std::to_string(r) + " is not " + std::to_string(r + 1));
    for (std::size_t c = 0; c < q; ++c) {
      const Cell& cell = et.at(r, c);
      const Index product = basis_product(inner, et.label(r), et.label(c)).index;
      const bool ok = product == 0 ? !cell.filled : cell.filled && cell.value == product;
      report.check(ok, at("hub", r, c) + " = " + describe(cell) + ", expected unsigned product " +
                           std::to_string(product));
    }
  }
  return report;
}

CheckReport recipe_vs_bruteforce(const StrutContext& strut) {
  CheckReport report = compare_tables("", et_bruteforce(strut), et_recipe(strut), false);
  report.name = "recipe vs brute force N=" + std::to_string(strut.exponent()) + " S=" + std::to_string(strut.strut());
  return report;
}

}  // namespace zdsky
