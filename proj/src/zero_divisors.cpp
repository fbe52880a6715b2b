#include "zdsky/zero_divisors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace zdsky {

StrutContext::StrutContext(AlgebraContext algebra, Index strut) : algebra_(algebra), strut_(strut) {
  if (strut == 0 || strut >= algebra_.generator()) {
    throw DomainError("strut constant must satisfy 0 < S < " +
                      std::to_string(algebra_.generator()) + ", got " + std::to_string(strut));
  }
}

bool StrutContext::is_low_index(Index u) const noexcept {
  return u > 0 && u < generator() && u != strut_;
}

Assessor assessor_of(const StrutContext& strut, Index u) {
  if (!strut.is_low_index(u)) {
    throw DomainError("invalid L-index " + std::to_string(u) + " for N=" +
                      std::to_string(strut.exponent()) + ", S=" + std::to_string(strut.strut()));
  }
  return Assessor{u, u ^ strut.x()};
}

Multivector diagonal(const Assessor& a, int slope) {
  return Multivector::unit(a.low) + Multivector::unit(a.high, slope);
}

std::string to_string(EdgeSign e) { return e == EdgeSign::kPositive ? "positive" : "negative"; }

std::optional<DmzWitness> dmz_test(const StrutContext& strut, const Assessor& p, const Assessor& q) {
  const AlgebraContext& ctx = strut.algebra();
  const auto vanishes = [&](int sp, int sq) {
    return multiply(ctx, diagonal(p, sp), diagonal(q, sq)).is_zero();
  };
  const bool opposite = vanishes(+1, -1) && vanishes(-1, +1);
  const bool same = vanishes(+1, +1) && vanishes(-1, -1);
  if (opposite && same) {
    throw std::logic_error("both slope patterns annihilate; product oracle is inconsistent");
  }
  if (opposite) return DmzWitness{EdgeSign::kNegative, {{{+1, -1}, {-1, +1}}}};
  if (same) return DmzWitness{EdgeSign::kPositive, {{{+1, +1}, {-1, -1}}}};
  return std::nullopt;
}

std::optional<DmzWitness> dmz_test(const StrutContext& strut, Index u, Index v) {
  return dmz_test(strut, assessor_of(strut, u), assessor_of(strut, v));
}

std::string to_string(BoxKiteKind k) {
  switch (k) {
    case BoxKiteKind::kTypeI:
      return "TypeI";
    case BoxKiteKind::kTypeII:
      return "TypeII";
    case BoxKiteKind::kHidden:
      return "Hidden";
  }
  return "?";
}

Assessor BoxKite::vertex(int letter) const { return assessor_of(strut, low.at(letter)); }

std::vector<std::array<int, 2>> BoxKite::edges() {
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (i + j != 5) out.push_back({i, j});  // strut opposites sum to 5
    }
  }
  return out;
}

namespace {

using Triple = std::array<Index, 3>;

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::array<Triple, 4> orbit_of(const Triple& t, Index s) {
  const auto [a, b, c] = t;
  return {sorted({a, b, c}), sorted({a, b ^ s, c ^ s}), sorted({a ^ s, b, c ^ s}),
          sorted({a ^ s, b ^ s, c})};
}

bool all_negative(const StrutContext& strut, const Triple& t) {
  for (const auto& [i, j] : {std::array{0, 1}, std::array{1, 2}, std::array{0, 2}}) {
    const auto w = dmz_test(strut, t[i], t[j]);
    if (!w || w->edge_sign != EdgeSign::kNegative) return false;
  }
  return true;
}

BoxKite build(const StrutContext& strut, const Triple& zig, bool functional) {
  const Trip cpo = trip_orientation(strut.algebra(), zig[0], zig[1], zig[2]);
  const Index s = strut.strut();
  BoxKite bk{strut, {cpo.a, cpo.b, cpo.c, cpo.c ^ s, cpo.b ^ s, cpo.a ^ s}, functional};
  return bk;
}

}  // namespace

std::vector<BoxKite> enumerate_candidate_boxkites(const StrutContext& strut) {
  const Index big = strut.generator();
  const Index s = strut.strut();
  std::set<Triple> seen;
  std::vector<BoxKite> out;
  for (Index a = 1; a < big; ++a) {
    for (Index b = a + 1; b < big; ++b) {
      const Index c = a ^ b;
      if (c <= b || a == s || b == s || c == s) continue;
      const Triple t{a, b, c};
      if (seen.contains(t)) continue;
      const auto orbit = orbit_of(t, s);
      seen.insert(orbit.begin(), orbit.end());

      const auto zig = std::find_if(orbit.begin(), orbit.end(),
                                    [&](const Triple& m) { return all_negative(strut, m); });
      if (zig != orbit.end()) {
        out.push_back(build(strut, *zig, true));
      } else {
        // Nominal zigzag: the member living lowest in the index space.
        const auto nominal = std::min_element(orbit.begin(), orbit.end(), [](const auto& x, const auto& y) {
          return std::pair(x[2], x) < std::pair(y[2], y);
        });
        out.push_back(build(strut, *nominal, false));
      }
    }
  }
  return out;
}

bool Classification::consistent() const noexcept {
  return kind == BoxKiteKind::kHidden ? dmz_edges == 0 : dmz_edges == 12;
}

Classification classify_boxkite(const BoxKite& bk) {
  Classification out;
  const Index s = bk.strut.strut();
  for (const auto& [z, v] : BoxKite::kStruts) {
    const Index zl = bk.low[z], vl = bk.low[v];
    if ((zl ^ vl) != s) throw std::logic_error("box-kite strut does not XOR to S");
    if (product_sign(vl, zl) != 1) ++out.reversals;
  }
  for (const auto& [i, j] : BoxKite::edges()) {
    if (dmz_test(bk.strut, bk.low[i], bk.low[j])) ++out.dmz_edges;
  }
  switch (out.reversals) {
    case 0:
      out.kind = BoxKiteKind::kTypeI;
      break;
    case 2:
      out.kind = BoxKiteKind::kTypeII;
      break;
    default:
      out.kind = BoxKiteKind::kHidden;
  }
  return out;
}

bool VizierReport::vz1_unsigned() const noexcept {
  return std::all_of(struts.begin(), struts.end(), [](const auto& s) { return s.vz1_indices; });
}

bool VizierReport::vz2() const noexcept {
  return std::all_of(struts.begin(), struts.end(), [](const auto& s) { return s.vz2_signed; });
}

bool VizierReport::vz3_unsigned() const noexcept {
  return std::all_of(struts.begin(), struts.end(), [](const auto& s) { return s.vz3_indices; });
}

bool VizierReport::all_signed_positive() const noexcept {
  return std::all_of(struts.begin(), struts.end(), [](const auto& s) {
    return s.vz1_low_sign == 1 && s.vz1_high_sign == 1 && s.vz3_vent_sign == 1 &&
           s.vz3_zigzag_sign == 1;
  });
}

VizierReport viziers_check(const BoxKite& bk) {
  const AlgebraContext& ctx = bk.strut.algebra();
  const Index s = bk.strut.strut(), g = bk.strut.generator(), x = bk.strut.x();
  VizierReport report;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [zi, vi] = BoxKite::kStruts[k];
    const Assessor zig = bk.vertex(zi), vent = bk.vertex(vi);
    StrutVizierReport& r = report.struts[k];
    r.zigzag_low = zig.low;
    r.vent_low = vent.low;

    const SignedBasis vz = basis_product(ctx, vent.low, zig.low);
    const SignedBasis VZ = basis_product(ctx, vent.high, zig.high);
    r.vz1_low_sign = vz.sign;
    r.vz1_high_sign = VZ.sign;
    r.vz1_indices = vz.index == s && VZ.index == s;

    r.vz2_signed = basis_product(ctx, zig.high, vent.low) == SignedBasis{g, +1} &&
                   basis_product(ctx, vent.high, zig.low) == SignedBasis{g, +1};

    const SignedBasis Vv = basis_product(ctx, vent.high, vent.low);
    const SignedBasis zZ = basis_product(ctx, zig.low, zig.high);
    r.vz3_vent_sign = Vv.sign;
    r.vz3_zigzag_sign = zZ.sign;
    r.vz3_indices = Vv.index == x && zZ.index == x;
  }
  return report;
}

SailSet sails(const BoxKite& bk) {
  const AlgebraContext& ctx = bk.strut.algebra();
  const auto make = [&](std::array<int, 3> letters) {
    Sail sail;
    for (int k = 0; k < 3; ++k) {
      sail.letters[k] = BoxKite::letter_name(letters[k]);
      sail.low[k] = bk.low[letters[k]];
    }
    sail.cyclically_positive = orientation_sign(ctx, sail.low[0], sail.low[1], sail.low[2]) == 1;
    return sail;
  };
  // a=0 b=1 c=2 d=3 e=4 f=5
  return SailSet{make({0, 1, 2}), {make({0, 3, 4}), make({5, 2, 4}), make({5, 3, 1})}, bk.functional};
}

std::vector<bool> hidefill_probe(const StrutContext& strut, Index u, Index v,
                                 const std::vector<Index>& added_bits) {
  if (!dmz_test(strut, u, v)) {
    throw DomainError("(" + std::to_string(u) + ", " + std::to_string(v) +
                      ") is not a DMZ pair at the base strut constant");
  }
  std::vector<bool> status{true};
  Index s = strut.strut();
  for (const Index bit : added_bits) {
    if (!std::has_single_bit(bit)) throw DomainError("added bit " + std::to_string(bit) + " is not a power of two");
    if ((s & bit) != 0) throw DomainError("added bit " + std::to_string(bit) + " collides with S");
    if (bit <= s) throw DomainError("added bit " + std::to_string(bit) + " is not above the high bit of S");
    if (u >= bit || v >= bit) {
      throw DomainError("pair indices must lie below the added bit " + std::to_string(bit));
    }
    s |= bit;
    const StrutContext augmented(strut.algebra(), s);  // throws once S reaches G
    status.push_back(dmz_test(augmented, u, v).has_value());
  }
  return status;
}

}  // namespace zdsky
