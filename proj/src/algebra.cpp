#include "zdsky/algebra.hpp"

#include <algorithm>
#include <bit>

namespace zdsky {

namespace {

Index high_bit(Index v) noexcept { return std::bit_floor(v); }

// Core recursion. Inputs are distinct, nonzero and XOR to zero. Returns some
// rotation of the cyclically positive order.
std::array<Index, 3> cpo(Index x, Index y, Index z) noexcept {
  const Index top = high_bit(std::max({x, y, z}));
  // Exactly two members carry the top bit; the odd one out leads.
  Index low = 0, p = 0, q = 0;
  if ((x & top) == 0) {
    low = x, p = y, q = z;
  } else if ((y & top) == 0) {
    low = y, p = x, q = z;
  } else {
    low = z, p = x, q = y;
  }
  if (top == 2) return {1, 2, 3};
  if (p == top || q == top) return {low, top, top | low};

  // {low, p', q'} is a trip one level down; adding top to two members swaps
  // their positions in the cycle.
  const std::array<Index, 3> lower = cpo(low, p ^ top, q ^ top);
  const auto at = std::find(lower.begin(), lower.end(), low) - lower.begin();
  const Index next = lower[(at + 1) % 3];
  const Index last = lower[(at + 2) % 3];
  return {low, top | last, top | next};
}

// Rotates a CPO triple so that its smallest member comes first.
Trip canonical(const std::array<Index, 3>& t) noexcept {
  const auto at = std::min_element(t.begin(), t.end()) - t.begin();
  return Trip{t[at], t[(at + 1) % 3], t[(at + 2) % 3]};
}

void require_trip(const AlgebraContext& ctx, Index x, Index y, Index z) {
  ctx.require_index(x);
  ctx.require_index(y);
  ctx.require_index(z);
  if (x == 0 || y == 0 || z == 0 || x == y || y == z || x == z || (x ^ y ^ z) != 0) {
    throw DomainError("not a trip: {" + std::to_string(x) + ", " + std::to_string(y) + ", " +
                      std::to_string(z) + "}");
  }
}

}  // namespace

AlgebraContext::AlgebraContext(int exponent) : exponent_(exponent) {
  if (exponent < 2 || exponent > kMaxExponent) {
    throw DomainError("dimension exponent must lie in [2, " + std::to_string(kMaxExponent) +
                      "], got " + std::to_string(exponent));
  }
}

void AlgebraContext::require_index(Index i) const {
  if (!contains(i)) {
    throw DomainError("index " + std::to_string(i) + " outside the 2^" +
                      std::to_string(exponent_) + "-ions");
  }
}

std::string to_string(const SignedBasis& b) {
  return (b.sign < 0 ? "-" : "+") + std::to_string(b.index);
}

Trip Trip::rotated_to(Index first) const {
  if (a == first) return *this;
  if (b == first) return Trip{b, c, a};
  if (c == first) return Trip{c, a, b};
  throw DomainError(std::to_string(first) + " is not a member of trip " + to_string(*this));
}

std::string to_string(const Trip& t) {
  return "(" + std::to_string(t.a) + ", " + std::to_string(t.b) + ", " + std::to_string(t.c) + ")";
}

Trip trip_orientation(const AlgebraContext& ctx, Index x, Index y, Index z) {
  require_trip(ctx, x, y, z);
  return canonical(cpo(x, y, z));
}

int orientation_sign(const AlgebraContext& ctx, Index x, Index y, Index z) {
  const Trip t = trip_orientation(ctx, x, y, z);
  return t.rotated_to(x).b == y ? 1 : -1;
}

int product_sign(Index a, Index b) noexcept {
  if (a == 0 || b == 0) return 1;
  if (a == b) return -1;
  const std::array<Index, 3> t = cpo(a, b, a ^ b);
  // a*b = +c iff b follows a in the cycle.
  for (int k = 0; k < 3; ++k) {
    if (t[k] == a) return t[(k + 1) % 3] == b ? 1 : -1;
  }
  return 1;  // unreachable
}

SignedBasis basis_product(const AlgebraContext& ctx, Index a, Index b) {
  ctx.require_index(a);
  ctx.require_index(b);
  return SignedBasis{a ^ b, product_sign(a, b)};
}

std::uint64_t trip_count(int exponent) noexcept {
  const std::uint64_t n = std::uint64_t{1} << exponent;
  return (n - 1) * (n - 2) / 6;
}

std::vector<Trip> enumerate_trips(const AlgebraContext& ctx) {
  std::vector<Trip> trips;
  trips.reserve(trip_count(ctx.exponent()));
  const Index n = ctx.dimension();
  for (Index a = 1; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const Index c = a ^ b;
      if (c > b) trips.push_back(canonical(cpo(a, b, c)));
    }
  }
  std::sort(trips.begin(), trips.end());
  return trips;
}

}  // namespace zdsky
