#include "zdsky/multivector.hpp"

#include <algorithm>
#include <span>

namespace zdsky {

Multivector Multivector::unit(Index index, Coefficient coefficient) {
  Multivector m;
  m.add(index, coefficient);
  return m;
}

Multivector::Coefficient Multivector::operator[](Index index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void Multivector::add(Index index, Coefficient coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Index Multivector::max_index() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  for (const auto& [i, c] : rhs.terms_) add(i, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  for (const auto& [i, c] : rhs.terms_) add(i, -c);
  return *this;
}

std::string to_string(const Multivector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : x.terms()) {
    if (!out.empty() || c < 0) out += c < 0 ? " - " : " + ";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "i" + std::to_string(i);
  }
  return out;
}

Multivector multiply(const AlgebraContext& ctx, const Multivector& x, const Multivector& y) {
  ctx.require_index(x.max_index());
  ctx.require_index(y.max_index());
  Multivector out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      out.add(a ^ b, product_sign(a, b) * ca * cb);
    }
  }
  return out;
}

std::string to_string(DoublingVariant v) {
  switch (v) {
    case DoublingVariant::kConjugateLeftD:
      return "(ac - d*b, da + bc*)";
    case DoublingVariant::kConjugateRightB:
      return "(ac - db*, a*d + cb)";
    case DoublingVariant::kConjugateLeftDAdRight:
      return "(ac - d*b, ad + bc*)";
    case DoublingVariant::kConjugateRightD:
      return "(ac - bd*, a*d + bc)";
  }
  return "?";
}

namespace {

using Dense = std::vector<Multivector::Coefficient>;

Dense conj(std::span<const Multivector::Coefficient> x) {
  Dense out(x.begin(), x.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

Dense dense_mul(std::span<const Multivector::Coefficient> x,
                std::span<const Multivector::Coefficient> y, DoublingVariant v) {
  const std::size_t n = x.size();
  if (n == 1) return Dense{x[0] * y[0]};
  const auto zero = [](std::span<const Multivector::Coefficient> s) {
    return std::all_of(s.begin(), s.end(), [](auto c) { return c == 0; });
  };
  if (zero(x) || zero(y)) return Dense(n);
  const std::size_t h = n / 2;
  const auto a = x.first(h), b = x.subspan(h);
  const auto c = y.first(h), d = y.subspan(h);
  const auto mul = [v](std::span<const Multivector::Coefficient> p,
                       std::span<const Multivector::Coefficient> q) { return dense_mul(p, q, v); };

  Dense first, second_l, second_r, first_r;
  first = mul(a, c);
  switch (v) {
    case DoublingVariant::kConjugateLeftD:
      first_r = mul(conj(d), b);
      second_l = mul(d, a);
      second_r = mul(b, conj(c));
      break;
    case DoublingVariant::kConjugateRightB:
      first_r = mul(d, conj(b));
      second_l = mul(conj(a), d);
      second_r = mul(c, b);
      break;
    case DoublingVariant::kConjugateLeftDAdRight:
      first_r = mul(conj(d), b);
      second_l = mul(a, d);
      second_r = mul(b, conj(c));
      break;
    case DoublingVariant::kConjugateRightD:
      first_r = mul(b, conj(d));
      second_l = mul(conj(a), d);
      second_r = mul(b, c);
      break;
  }
  Dense out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = first[i] - first_r[i];
    out[h + i] = second_l[i] + second_r[i];
  }
  return out;
}

}  // namespace

Multivector doubling_product(const AlgebraContext& ctx, const Multivector& x, const Multivector& y,
                             DoublingVariant variant) {
  ctx.require_index(x.max_index());
  ctx.require_index(y.max_index());
  Dense dx(ctx.dimension()), dy(ctx.dimension());
  for (const auto& [i, c] : x.terms()) dx[i] = c;
  for (const auto& [i, c] : y.terms()) dy[i] = c;
  const Dense prod = dense_mul(dx, dy, variant);
  Multivector out;
  for (std::size_t i = 0; i < prod.size(); ++i) out.add(static_cast<Index>(i), prod[i]);
  return out;
}

}  // namespace zdsky
