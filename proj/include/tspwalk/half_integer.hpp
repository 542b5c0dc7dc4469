#pragma once

#include <compare>
#include <string>

namespace tspwalk {

// Exact half-integral value, stored doubled.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }
  // value / 4 for a quarter count that must be even.
  static HalfInteger from_quarters(long long quarters);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInteger&) const = default;

  // "-3/2", "1", "0".
  std::string to_string() const;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

}  // namespace tspwalk
