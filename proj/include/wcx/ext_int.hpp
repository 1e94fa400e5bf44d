#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace wcx {

/// An element of Z ∪ {-inf, +inf}. Truncation bounds and weight profiles
/// are extended integers; adding a finite shift leaves infinities fixed.
class ExtInt {
 public:
  enum class Kind : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };

  constexpr ExtInt() = default;
  constexpr ExtInt(long long v) : value_(v) {}  // NOLINT: implicit by design of the lattice

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  /// Throws InputError on an infinite value.
  long long value() const;

  friend constexpr ExtInt operator+(ExtInt a, long long b) {
    return a.is_finite() ? ExtInt(a.value_ + b) : a;
  }
  friend constexpr ExtInt operator+(long long b, ExtInt a) { return a + b; }
  friend constexpr ExtInt operator-(ExtInt a, long long b) { return a + (-b); }
  friend constexpr ExtInt operator-(ExtInt a) {
    switch (a.kind_) {
      case Kind::PosInf: return neg_inf();
      case Kind::NegInf: return pos_inf();
      default: return ExtInt(-a.value_);
    }
  }

  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(ExtInt a, ExtInt b) { return (a <=> b) == 0; }

  /// "inf", "-inf" or a decimal integer.
  std::string to_string() const;
  /// Accepts "inf", "+inf", "-inf", "infinity" variants and decimal integers.
  static ExtInt parse(std::string_view text);

 private:
  explicit constexpr ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  long long value_ = 0;
};

}  // namespace wcx
