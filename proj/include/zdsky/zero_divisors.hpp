#pragma once

// Primitive zero-divisors of the 2^N-ions: assessors, DMZ testing with edge
// signs, and box-kite ensembles.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zdsky/algebra.hpp"
#include "zdsky/multivector.hpp"

namespace zdsky {

/// Fixes the algebra and a strut constant S with 0 < S < G.
class StrutContext {
 public:
  StrutContext(AlgebraContext algebra, Index strut);
  StrutContext(int exponent, Index strut) : StrutContext(AlgebraContext(exponent), strut) {}

  [[nodiscard]] const AlgebraContext& algebra() const noexcept { return algebra_; }
  [[nodiscard]] int exponent() const noexcept { return algebra_.exponent(); }
  [[nodiscard]] Index generator() const noexcept { return algebra_.generator(); }
  [[nodiscard]] Index half_generator() const noexcept { return algebra_.half_generator(); }
  [[nodiscard]] Index strut() const noexcept { return strut_; }
  /// s = S mod g
  [[nodiscard]] Index residue() const noexcept { return strut_ % half_generator(); }
  /// X = G + S = G ^ S
  [[nodiscard]] Index x() const noexcept { return generator() ^ strut_; }

  /// True for 0 < u < G with u != S.
  [[nodiscard]] bool is_low_index(Index u) const noexcept;

  bool operator==(const StrutContext&) const = default;

 private:
  AlgebraContext algebra_;
  Index strut_;
};

/// Plane spanned by i_low and i_high, high = low ^ G ^ S.
struct Assessor {
  Index low = 0;
  Index high = 0;

  bool operator==(const Assessor&) const = default;
};

Assessor assessor_of(const StrutContext& strut, Index u);

/// Diagonal of an assessor plane: i_low + slope * i_high (slope +1 is "/").
Multivector diagonal(const Assessor& a, int slope);

enum class EdgeSign { kNegative, kPositive };

std::string to_string(EdgeSign e);

/// Which diagonals of two assessors annihilate. A negative edge pairs
/// opposite slopes, a positive edge pairs equal slopes; each lists the two
/// (slope of first, slope of second) pairings whose product is exactly zero.
struct DmzWitness {
  EdgeSign edge_sign = EdgeSign::kNegative;
  std::array<std::array<int, 2>, 2> slopes{};

  bool operator==(const DmzWitness&) const = default;
};

/// Forms the four dyad products with the exact product and reports the edge
/// sign if some pairing vanishes. Never reports both patterns.
std::optional<DmzWitness> dmz_test(const StrutContext& strut, const Assessor& p, const Assessor& q);

/// dmz_test on the assessors of two L-indices.
std::optional<DmzWitness> dmz_test(const StrutContext& strut, Index u, Index v);

enum class BoxKiteKind { kTypeI, kTypeII, kHidden };

std::string to_string(BoxKiteKind k);

/// Six assessors on the vertices of an octahedron. Vertices A, B, C carry the
/// zigzag L-trip (a smallest, in CPO); F, E, D are their strut opposites.
struct BoxKite {
  StrutContext strut;
  /// L-indices in letter order a, b, c, d, e, f.
  std::array<Index, 6> low{};
  /// True when the zigzag was identified from edge signs (an all-negative
  /// sail). Hidden candidates carry a nominal zigzag and no DMZ claims.
  bool functional = false;

  [[nodiscard]] Trip zigzag() const noexcept { return Trip{low[0], low[1], low[2]}; }
  [[nodiscard]] Assessor vertex(int letter) const;  // 0 = A ... 5 = F
  [[nodiscard]] static char letter_name(int letter) noexcept { return static_cast<char>('A' + letter); }
  /// Letter indices of the three struts: (A,F), (B,E), (C,D).
  static constexpr std::array<std::array<int, 2>, 3> kStruts{{{0, 5}, {1, 4}, {2, 3}}};
  /// The twelve non-strut vertex pairs.
  static std::vector<std::array<int, 2>> edges();
};

/// One candidate per orbit of L-space trips avoiding S under (pairwise ^S).
/// Count is Trip_{N-2}.
std::vector<BoxKite> enumerate_candidate_boxkites(const StrutContext& strut);

struct Classification {
  BoxKiteKind kind = BoxKiteKind::kTypeI;
  /// Struts whose signed first-Vizier product v*z is -S.
  int reversals = 0;
  /// Non-strut vertex pairs that form DMZs (0 or 12 when consistent).
  int dmz_edges = 0;

  /// Viable iff all 12 edges are DMZs, hidden iff none.
  [[nodiscard]] bool consistent() const noexcept;
};

Classification classify_boxkite(const BoxKite& bk);

struct StrutVizierReport {
  Index zigzag_low = 0;  // z
  Index vent_low = 0;    // v
  int vz1_low_sign = 0;  // sign of v*z (index S)
  int vz1_high_sign = 0; // sign of V*Z (index S)
  bool vz1_indices = false;
  bool vz2_signed = false;  // Z*v = V*z = +G
  int vz3_vent_sign = 0;    // sign of V*v (index X)
  int vz3_zigzag_sign = 0;  // sign of z*Z (index X)
  bool vz3_indices = false;
};

struct VizierReport {
  std::array<StrutVizierReport, 3> struts{};

  [[nodiscard]] bool vz1_unsigned() const noexcept;
  [[nodiscard]] bool vz2() const noexcept;
  [[nodiscard]] bool vz3_unsigned() const noexcept;
  /// VZ1 and VZ3 with every product signed +.
  [[nodiscard]] bool all_signed_positive() const noexcept;
};

VizierReport viziers_check(const BoxKite& bk);

struct Sail {
  std::array<char, 3> letters{};
  std::array<Index, 3> low{};
  /// Whether the letter order is itself cyclically positive.
  bool cyclically_positive = false;
};

struct SailSet {
  Sail zigzag;
  /// (a,d,e), (f,c,e), (f,d,b) in that order.
  std::array<Sail, 3> trefoils;
  bool functional = false;
};

/// Zigzag and trefoil L-trips of a candidate, written in letter order.
SailSet sails(const BoxKite& bk);

/// DMZ status of L-indices u, v as the strut constant is augmented by each
/// prefix of `added_bits`. Element 0 is the base status (must be true).
/// Added bits are ascending powers of two above every bit of S, below G, and
/// above both u and v (so the pair comes from the zero-padded prior
/// generation).
std::vector<bool> hidefill_probe(const StrutContext& strut, Index u, Index v,
                                 const std::vector<Index>& added_bits);

}  // namespace zdsky
