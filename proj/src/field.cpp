#include "lrc/field.hpp"

#include "lrc/error.hpp"

#include <string>

namespace lrc {

namespace {

struct OrderInfo {
  int q;
  int p;
  int e;
  // Low coefficients of the monic modulus, constant term first (degree e term omitted).
  std::array<int, 3> modulus_low;
};

constexpr std::array<OrderInfo, 7> kOrders{{
    {2, 2, 1, {0, 0, 0}},
    {3, 3, 1, {0, 0, 0}},
    {4, 2, 2, {1, 1, 0}},  // x^2 + x + 1
    {5, 5, 1, {0, 0, 0}},
    {7, 7, 1, {0, 0, 0}},
    {8, 2, 3, {1, 1, 0}},  // x^3 + x + 1
    {9, 3, 2, {1, 0, 0}},  // x^2 + 1
}};

const OrderInfo* find_order(int q) {
  for (const auto& info : kOrders)
    if (info.q == q) return &info;
  return nullptr;
}

std::vector<int> to_digits(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

int poly_mul(int a, int b, const OrderInfo& info) {
  const int p = info.p;
  const int e = info.e;
  auto da = to_digits(a, p, e);
  auto db = to_digits(b, p, e);
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // x^e = -(modulus_low), reduce from the top down.
  for (int deg = 2 * e - 2; deg >= e; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < e; ++i) {
      const int t = prod[deg - e + i] - c * info.modulus_low[i];
      prod[deg - e + i] = ((t % p) + p) % p;
    }
  }
  prod.resize(e);
  return from_digits(prod, p);
}

}  // namespace

bool is_supported_order(int q) noexcept { return find_order(q) != nullptr; }

FieldContext make_field(int q) {
  const OrderInfo* info = find_order(q);
  if (info == nullptr)
    throw Error(ErrorKind::UnsupportedOrder, "GF(" + std::to_string(q) + ") is not supported");

  FieldContext f;
  f.q_ = q;
  f.p_ = info->p;
  f.e_ = info->e;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const auto da = to_digits(a, info->p, info->e);
    for (int b = 0; b < q; ++b) {
      const auto db = to_digits(b, info->p, info->e);
      std::vector<int> s(info->e);
      for (int i = 0; i < info->e; ++i) s[i] = (da[i] + db[i]) % info->p;
      f.add_[a * q + b] = static_cast<Element>(from_digits(s, info->p));
      f.mul_[a * q + b] = static_cast<Element>(poly_mul(a, b, *info));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = static_cast<Element>(b);
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<Element>(b);
    }
  }
  return f;
}

Element FieldContext::pow(Element a, unsigned e) const noexcept {
  Element result = 1;
  Element base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

}  // namespace lrc
