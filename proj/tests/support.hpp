#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "frob/params.hpp"

namespace frob::testing {

using i64 = std::int64_t;

inline i64 imod(i64 z, i64 n) {
  const i64 r = z % n;
  return r < 0 ? r + n : r;
}

// Calls fn(p) for every pairwise-coprime 2 <= a < b < c <= max with ell > k,
// in (c, b, a) order.
template <class Fn>
void for_each_walkable(i64 max, Fn&& fn) {
  for (i64 c = 4; c <= max; ++c)
    for (i64 b = 3; b < c; ++b) {
      if (std::gcd(b, c) != 1) continue;
      for (i64 a = 2; a < b; ++a) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1) continue;
        const Triple t = make_triple(a, b, c);
        const BaseParams base = compute_base(t);
        if (base.ell <= base.k) continue;
        fn(compute_case_params(t));
      }
    }
}

// Plain 64-bit copy of the walk geometry, kept apart from the library so the
// brute-force checks do not share code with what they check.
struct RawWalk {
  i64 a, b, c, ell;

  explicit RawWalk(const CaseParams& p)
      : a(p.a.to_i64()), b(p.b.to_i64()), c(p.c.to_i64()), ell(p.ell.to_i64()) {}

  i64 v(i64 x, i64 y) const { return b * x + c * y; }

  bool is_min(i64 x, i64 y) const {
    const i64 here = v(x, y);
    const bool up_ok = y == a - 1 || here <= v(imod(x - ell, a), y + 1);
    const bool down_ok = y == 0 || here <= v(imod(x + ell, a), y - 1);
    return up_ok && down_ok;
  }

  // First local minimum strictly after (x, y) on the walk, or nothing if the
  // walk runs out at y = a - 1.
  std::optional<std::pair<i64, i64>> next_min(i64 x, i64 y) const {
    for (;;) {
      if (y == a - 1) return std::nullopt;
      x = imod(x + a - ell, a);
      ++y;
      if (is_min(x, y)) return std::pair{x, y};
    }
  }
};

// Minimum of b*n1 + c*n2 in each residue class mod a, by enumeration below b*a.
inline std::vector<i64> naive_class_minima(i64 a, i64 b, i64 c) {
  std::vector<i64> best(static_cast<std::size_t>(a), -1);
  const i64 limit = b * a;
  for (i64 n2 = 0; c * n2 < limit; ++n2)
    for (i64 n1 = 0; b * n1 + c * n2 < limit; ++n1) {
      const i64 z = b * n1 + c * n2;
      i64& slot = best[static_cast<std::size_t>(z % a)];
      if (slot < 0 || z < slot) slot = z;
    }
  return best;
}

}  // namespace frob::testing
