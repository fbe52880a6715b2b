#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zdsky/algebra.hpp"

namespace zdsky {

/// Sparse element of the 2^N-ions with exact integer coefficients. Zero
/// coefficients are never stored.
class Multivector {
 public:
  using Coefficient = std::int64_t;

  Multivector() = default;
  static Multivector unit(Index index, Coefficient coefficient = 1);

  [[nodiscard]] Coefficient operator[](Index index) const;
  void add(Index index, Coefficient coefficient);

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] const std::map<Index, Coefficient>& terms() const noexcept { return terms_; }
  [[nodiscard]] Index max_index() const noexcept;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }

  bool operator==(const Multivector&) const = default;

 private:
  std::map<Index, Coefficient> terms_;
};

std::string to_string(const Multivector& x);

inline bool multivector_is_zero(const Multivector& x) noexcept { return x.is_zero(); }

/// Bilinear extension of basis_product. This is the fast exact product used
/// for zero-divisor testing.
Multivector multiply(const AlgebraContext& ctx, const Multivector& x, const Multivector& y);

/// Recursive pair formulas for the Cayley-Dickson doubling, writing x = (a, b)
/// and y = (c, d) over the half-size algebra.
enum class DoublingVariant {
  kConjugateLeftD,   // (ac - d*b, da + bc*)
  kConjugateRightB,  // (ac - db*, a*d + cb)
  kConjugateLeftDAdRight,  // (ac - d*b, ad + bc*)
  kConjugateRightD,  // (ac - bd*, a*d + bc)
};

inline constexpr DoublingVariant kAllDoublingVariants[] = {
    DoublingVariant::kConjugateLeftD, DoublingVariant::kConjugateRightB,
    DoublingVariant::kConjugateLeftDAdRight, DoublingVariant::kConjugateRightD};

/// The variant that reproduces the trip rules; selected by the cdp-core tests.
inline constexpr DoublingVariant kDefaultDoubling = DoublingVariant::kConjugateLeftD;

std::string to_string(DoublingVariant v);

/// Product computed by recursive dimension doubling on dense coefficient
/// arrays, independent of the trip-orientation rules.
Multivector doubling_product(const AlgebraContext& ctx, const Multivector& x, const Multivector& y,
                             DoublingVariant variant = kDefaultDoubling);

}  // namespace zdsky
