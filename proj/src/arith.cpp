#include "frob/arith.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace frob {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw OverflowError(std::string("frob::Int: overflow in ") + op);
}

}  // namespace

Int Int::operator-() const {
  if (v_ == std::numeric_limits<int128_t>::min()) overflow("negation");
  return from_raw(-v_);
}

Int& Int::operator+=(Int o) {
  if (__builtin_add_overflow(v_, o.v_, &v_)) overflow("addition");
  return *this;
}

Int& Int::operator-=(Int o) {
  if (__builtin_sub_overflow(v_, o.v_, &v_)) overflow("subtraction");
  return *this;
}

Int& Int::operator*=(Int o) {
  if (__builtin_mul_overflow(v_, o.v_, &v_)) overflow("multiplication");
  return *this;
}

std::optional<std::int64_t> Int::try_i64() const {
  if (v_ < std::numeric_limits<std::int64_t>::min() ||
      v_ > std::numeric_limits<std::int64_t>::max())
    return std::nullopt;
  return static_cast<std::int64_t>(v_);
}

std::int64_t Int::to_i64() const {
  auto r = try_i64();
  if (!r) overflow("narrowing to int64");
  return *r;
}

std::size_t Int::to_size() const {
  if (v_ < 0 || static_cast<uint128_t>(v_) > std::numeric_limits<std::size_t>::max())
    overflow("narrowing to size_t");
  return static_cast<std::size_t>(v_);
}

std::string Int::to_string() const {
  if (v_ == 0) return "0";
  std::string out;
  uint128_t mag = v_ < 0 ? uint128_t(0) - static_cast<uint128_t>(v_)
                         : static_cast<uint128_t>(v_);
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (v_ < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, Int v) { return os << v.to_string(); }

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InvalidInput("not an integer: '" + text + "'");
  Int v = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') throw InvalidInput("not an integer: '" + text + "'");
    try {
      v = v * 10 + (ch - '0');
    } catch (const OverflowError&) {
      throw InvalidInput("integer out of range: '" + text + "'");
    }
  }
  return neg ? -v : v;
}

Int floor_div(Int n, Int d) {
  if (d == 0) throw InvalidInput("floor_div: division by zero");
  if (n.raw() == std::numeric_limits<int128_t>::min() && d == -1) overflow("division");
  int128_t q = n.raw() / d.raw();
  int128_t r = n.raw() % d.raw();
  if (r != 0 && ((r < 0) != (d.raw() < 0))) --q;
  return Int::from_raw(q);
}

Int ceil_div(Int n, Int d) {
  if (d == 0) throw InvalidInput("ceil_div: division by zero");
  if (n.raw() == std::numeric_limits<int128_t>::min() && d == -1) overflow("division");
  int128_t q = n.raw() / d.raw();
  int128_t r = n.raw() % d.raw();
  if (r != 0 && ((r < 0) == (d.raw() < 0))) ++q;
  return Int::from_raw(q);
}

Int mod(Int z, Int n) {
  if (n <= 0) throw InvalidInput("mod: modulus must be positive");
  int128_t r = z.raw() % n.raw();
  if (r < 0) r += n.raw();
  return Int::from_raw(r);
}

Int gcd(Int x, Int y) {
  if (x < 0 || y < 0) throw InvalidInput("gcd: arguments must be non-negative");
  if (x == 0 && y == 0) throw InvalidInput("gcd: both arguments are zero");
  int128_t p = x.raw(), q = y.raw();
  while (q != 0) {
    int128_t t = p % q;
    p = q;
    q = t;
  }
  return Int::from_raw(p);
}

Int mod_inverse(Int x, Int n) {
  if (n < 2) throw InvalidInput("mod_inverse: modulus must be at least 2");
  // Extended Euclid on (x mod n, n); coefficients stay bounded by n.
  int128_t r0 = n.raw(), r1 = mod(x, n).raw();
  int128_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    int128_t qt = r0 / r1;
    int128_t t = r0 - qt * r1;
    r0 = r1;
    r1 = t;
    t = s0 - qt * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1)
    throw NotInvertibleError("mod_inverse: " + x.to_string() + " is not invertible modulo " +
                             n.to_string());
  return mod(Int::from_raw(s0), n);
}

}  // namespace frob
