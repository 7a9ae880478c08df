#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hypercop {

/// Exact nonnegative multiple of 1/2, stored doubled.
///
/// Hyperbolicity constants of finite graphs are always integers or
/// half-integers, so all metric code works in this type and never in
/// floating point.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(std::int64_t value) { return HalfInt(2 * value); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Smallest integer not below this value.
  constexpr std::int64_t ceil() const { return (twice_ + 1) / 2; }
  /// Largest integer not above this value.
  constexpr std::int64_t floor() const { return twice_ / 2; }

  constexpr HalfInt operator+(HalfInt other) const { return HalfInt(twice_ + other.twice_); }
  constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(twice_ * k); }
  constexpr HalfInt& operator+=(HalfInt other) {
    twice_ += other.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "k" or "k.5".
  std::string to_string() const;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}

  std::int64_t twice_ = 0;
};

constexpr HalfInt kHalf = HalfInt::from_twice(1);

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

/// Parses "k" or "k.5"; throws hypercop::Error on anything else.
HalfInt parse_half_int(const std::string& text);

}  // namespace hypercop
