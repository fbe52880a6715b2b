#pragma once

// Cayley-Dickson index algebra on the 2^N-ions.
//
// Basis units are addressed by integer index; the index of a product is the
// XOR of the factor indices and its sign follows from the recursive trip
// construction (the quaternion trip (1,2,3), i_u * i_G = +i_(u+G), and the
// "add G to two members, swap their places" rule).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdsky {

using Index = std::uint32_t;

/// Hard ceiling on the dimension exponent; indices stay well inside 32 bits.
inline constexpr int kMaxExponent = 16;

/// Raised when an index or parameter is outside the algebra it refers to.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dimension bookkeeping for the 2^N-ions: the generator G = 2^(N-1) and the
/// half-generator g = 2^(N-2).
class AlgebraContext {
 public:
  explicit AlgebraContext(int exponent);

  [[nodiscard]] int exponent() const noexcept { return exponent_; }
  [[nodiscard]] Index dimension() const noexcept { return Index{1} << exponent_; }
  [[nodiscard]] Index generator() const noexcept { return Index{1} << (exponent_ - 1); }
  [[nodiscard]] Index half_generator() const noexcept { return Index{1} << (exponent_ - 2); }

  [[nodiscard]] bool contains(Index i) const noexcept { return i < dimension(); }
  void require_index(Index i) const;

  bool operator==(const AlgebraContext&) const = default;

 private:
  int exponent_;
};

struct SignedBasis {
  Index index = 0;
  int sign = 1;  // +1 or -1

  bool operator==(const SignedBasis&) const = default;
};

std::string to_string(const SignedBasis& b);

/// Associative triplet stored in cyclically positive order with the smallest
/// index first: a*b = +c, b*c = +a, c*a = +b.
struct Trip {
  Index a = 0;
  Index b = 0;
  Index c = 0;

  [[nodiscard]] std::array<Index, 3> as_array() const noexcept { return {a, b, c}; }
  [[nodiscard]] bool contains(Index i) const noexcept { return a == i || b == i || c == i; }
  /// Rotation of this trip that starts at `first`, which must be a member.
  [[nodiscard]] Trip rotated_to(Index first) const;

  bool operator==(const Trip&) const = default;
  auto operator<=>(const Trip&) const = default;
};

std::string to_string(const Trip& t);

/// Cyclically positive ordering of the unordered triple {x, y, z}, rotated so
/// the smallest index leads. Throws DomainError unless x ^ y ^ z == 0 with
/// three distinct nonzero members.
Trip trip_orientation(const AlgebraContext& ctx, Index x, Index y, Index z);

/// +1 if (x, y, z) as written is a rotation of the trip's CPO, -1 if it is a
/// reflection.
int orientation_sign(const AlgebraContext& ctx, Index x, Index y, Index z);

/// Signed product of basis units i_a * i_b.
SignedBasis basis_product(const AlgebraContext& ctx, Index a, Index b);

/// Sign-only fast path of basis_product; callers guarantee a, b are in range.
int product_sign(Index a, Index b) noexcept;

/// (2^N - 1)(2^N - 2) / 6
std::uint64_t trip_count(int exponent) noexcept;

/// All trips of the algebra, each once, in CPO with the smallest index
/// first, sorted lexicographically.
std::vector<Trip> enumerate_trips(const AlgebraContext& ctx);

}  // namespace zdsky
