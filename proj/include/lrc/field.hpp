#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lrc {

using Element = std::uint8_t;

// Table-driven GF(q) for q in {2,3,4,5,7,8,9}.
//
// Elements are the integers 0..q-1. For extension fields the base-p digits of
// an element are the coefficients of its polynomial representative, least
// significant digit = constant term. Extension fields are reduced modulo
//   GF(4): x^2 + x + 1,   GF(8): x^3 + x + 1,   GF(9): x^2 + 1.
class FieldContext {
 public:
  static constexpr int kMaxOrder = 9;

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }

  Element add(Element a, Element b) const noexcept { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * q_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  // inv(0) is not defined; the table stores 0 there.
  Element inv(Element a) const noexcept { return inv_[a]; }
  Element div(Element a, Element b) const noexcept { return mul(a, inv(b)); }
  Element pow(Element a, unsigned e) const noexcept;

  const std::vector<Element>& add_table() const noexcept { return add_; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }
  const std::vector<Element>& inv_table() const noexcept { return inv_; }

  friend bool operator==(const FieldContext& a, const FieldContext& b) noexcept { return a.q_ == b.q_; }

 private:
  friend FieldContext make_field(int q);
  FieldContext() = default;

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

// Throws Error(UnsupportedOrder) unless q is one of the supported orders.
FieldContext make_field(int q);

bool is_supported_order(int q) noexcept;

}  // namespace lrc
