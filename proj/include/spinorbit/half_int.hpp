#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace spinorbit {

/// Exact half-integer quantum number, stored doubled (2s, 2l, 2j, 2m).
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// 2j + 1 for a magnitude j.
  constexpr std::int64_t multiplicity() const { return twice_ + 1; }

  /// 4·j(j+1) = (2j)(2j+2), exact.
  constexpr std::int64_t four_casimir() const { return twice_ * (twice_ + 2); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "4".
  std::string str() const;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

constexpr HalfInt half(std::int64_t twice) { return HalfInt::from_twice(twice); }

inline std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace spinorbit
