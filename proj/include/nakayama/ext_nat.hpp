#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace nakayama {

//! A natural number or infinity. The value type of every homological
//! dimension; infinity is the maximum and absorbs addition.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr explicit ExtNat(std::uint32_t value) : value_(value) {}

  static constexpr ExtNat finite(std::uint32_t value) { return ExtNat(value); }
  static constexpr ExtNat infinity() {
    ExtNat x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  // Precondition: is_finite().
  constexpr std::uint32_t value() const { return value_; }

  constexpr auto operator<=>(const ExtNat&) const = default;
  constexpr bool operator==(const ExtNat&) const = default;

  constexpr ExtNat operator+(const ExtNat& other) const {
    if (infinite_ || other.infinite_) return infinity();
    return ExtNat(value_ + other.value_);
  }

  constexpr bool operator==(std::uint32_t k) const { return !infinite_ && value_ == k; }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const ExtNat& x) { return os << x.to_string(); }

 private:
  // Member order matters for the defaulted comparison: all finite values
  // compare below infinity.
  bool infinite_ = false;
  std::uint32_t value_ = 0;
};

constexpr ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }
constexpr ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }

}  // namespace nakayama
