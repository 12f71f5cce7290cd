#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "frob/errors.hpp"

namespace frob {

__extension__ typedef __int128 int128_t;
__extension__ typedef unsigned __int128 uint128_t;

/*
 * Exact signed integer backed by a 128-bit word.
 *
 * Every arithmetic operator is overflow-checked and throws OverflowError
 * instead of wrapping. There is deliberately no operator/ or operator%:
 * division goes through floor_div / ceil_div / mod, and mod always returns a
 * canonical residue in {0, ..., n-1}.
 */
class Int {
 public:
  constexpr Int() = default;

  template <std::integral T>
  constexpr Int(T v) : v_(static_cast<int128_t>(v)) {}  // NOLINT: implicit on purpose

  static constexpr Int from_raw(int128_t v) {
    Int r;
    r.v_ = v;
    return r;
  }

  constexpr int128_t raw() const { return v_; }

  // Narrowing accessors; throw OverflowError when the value does not fit.
  std::int64_t to_i64() const;
  std::size_t to_size() const;
  std::optional<std::int64_t> try_i64() const;

  std::string to_string() const;

  Int operator-() const;
  Int& operator+=(Int o);
  Int& operator-=(Int o);
  Int& operator*=(Int o);

  friend Int operator+(Int l, Int r) { return l += r; }
  friend Int operator-(Int l, Int r) { return l -= r; }
  friend Int operator*(Int l, Int r) { return l *= r; }

  friend constexpr bool operator==(Int l, Int r) { return l.v_ == r.v_; }
  friend constexpr std::strong_ordering operator<=>(Int l, Int r) {
    return l.v_ <=> r.v_;
  }

 private:
  int128_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Int v);

// Parses an optionally signed decimal literal; throws InvalidInput.
Int parse_int(const std::string& text);

// Floor division; d != 0.
Int floor_div(Int n, Int d);
// Ceiling division; d != 0.
Int ceil_div(Int n, Int d);
// Canonical residue of z modulo n, in {0, ..., n-1}; n > 0.
Int mod(Int z, Int n);

inline Int min(Int x, Int y) { return x < y ? x : y; }
inline Int max(Int x, Int y) { return x < y ? y : x; }
inline Int abs(Int x) { return x < 0 ? -x : x; }

// gcd(x, 0) = x. Throws InvalidInput when both arguments are zero.
Int gcd(Int x, Int y);

// z in {1, ..., n-1} with x*z = 1 (mod n). n >= 2.
// Throws NotInvertibleError when gcd(x mod n, n) != 1.
Int mod_inverse(Int x, Int n);

}  // namespace frob

template <>
struct std::hash<frob::Int> {
  std::size_t operator()(frob::Int v) const noexcept {
    auto u = static_cast<frob::uint128_t>(v.raw());
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(u) ^
                                      static_cast<std::uint64_t>(u >> 64) * 0x9e3779b97f4a7c15ULL);
  }
};
