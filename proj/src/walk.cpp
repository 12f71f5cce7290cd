#include "frob/walk.hpp"

#include <string>

namespace frob {

WalkFrame WalkFrame::of(const Triple& t, Int ell) {
  if (!t.is_proper()) throw InvalidInput("walk: requires a triple 2 <= a < b < c");
  if (ell < 1 || ell >= t.a()) throw InvalidInput("walk: ell must lie in {1..a-1}");
  return {t.a(), t.b(), t.c(), ell};
}

Int WalkFrame::v(Int x, Int y) const { return v_value(b, c, x, y); }

VState WalkFrame::advance(const VState& s) const {
  return state(mod(s.x + a - ell, a), s.y + 1);
}

Int v_value(Int b, Int c, Int x, Int y) { return b * x + c * y; }

bool is_local_min(const WalkFrame& f, Int x, Int y) {
  if (x < 0 || x >= f.a || y < 0 || y > f.a - 1)
    throw InvalidInput("is_local_min: state outside 0 <= x < a, 0 <= y <= a-1");
  const Int here = f.v(x, y);
  const bool has_next = y < f.a - 1;
  const bool has_prev = y > 0;
  if (has_next && here > f.v(mod(x - f.ell, f.a), y + 1)) return false;
  if (has_prev && here > f.v(mod(x + f.ell, f.a), y - 1)) return false;
  return true;
}

bool is_local_min(const Triple& t, Int ell, const VState& s) {
  return is_local_min(WalkFrame::of(t, ell), s.x, s.y);
}

std::pair<NextMinDelta, VState> next_local_min(const WalkFrame& f, Int x, Int y) {
  const Int span = f.a - f.ell;
  if (x < 0 || x >= min(span, f.ell))
    throw InvalidInput("next_local_min: x must satisfy 0 <= x < min(a-ell, ell)");
  if (!is_local_min(f, x, y)) throw InvalidInput("next_local_min: start is not a local minimum");

  NextMinDelta d;
  d.rho = mod(x - f.ell, span);
  d.dx = mod(d.rho, f.ell) - x;
  d.dy = ceil_div(f.ell - x, span) + floor_div(f.ell + d.rho, f.ell);
  if (y + d.dy > f.a - 1) throw InvalidInput("next_local_min: next minimum lies beyond y = a-1");

  const VState next = f.state(x + d.dx, y + d.dy);
  if (!is_local_min(f, next.x, next.y))
    throw InternalError("next_local_min: computed state is not a local minimum");
  return {d, next};
}

Lemma7Step lemma7_step(Int x, const CaseParams& p) {
  if (x < 1 || x > p.a - 1) throw InvalidInput("lemma7_step: x must lie in {1..a-1}");
  const Int span = p.a - p.ell;
  const Int res = mod(x, span);
  const Int lap = floor_div(x, span);
  if (res <= p.r - 1) return {res - p.r + span, p.q - lap + 1};
  return {res - p.r, p.q - lap};
}

Int m_of(Int x, const CaseParams& p) {
  if (x < 0 || x > p.a - 1) throw InvalidInput("m_of: x must lie in {0..a-1}");
  if (x == 0) return 0;
  Int best = p.b * x;
  Int offset = 0;
  Int cur = x;
  // gcd(r, a - ell) = 1, so the chain reaches 0 within a steps.
  for (Int guard = 0; guard < p.a; guard += 1) {
    const Lemma7Step st = lemma7_step(cur, p);
    offset += p.c * st.y;
    if (st.x == 0) return min(best, offset);
    best = min(best, p.b * st.x + offset);
    cur = st.x;
  }
  throw InternalError("m_of: descent chain did not reach class 0 within a steps");
}

std::vector<Int> class_minima(const CaseParams& p) {
  const std::size_t n = p.a.to_size();
  std::vector<Int> memo(n, Int(-1));
  memo[0] = 0;
  std::vector<std::pair<std::size_t, Int>> chain;  // (x, c*y' to the successor)
  for (std::size_t start = 1; start < n; ++start) {
    if (memo[start] >= 0) continue;
    chain.clear();
    std::size_t cur = start;
    while (memo[cur] < 0) {
      if (chain.size() > n) throw InternalError("class_minima: descent chain does not terminate");
      const Lemma7Step st = lemma7_step(Int(cur), p);
      chain.emplace_back(cur, p.c * st.y);
      cur = st.x.to_size();
    }
    // m(bx) = min(bx, m(bx') + c*y'), unwound from the end of the chain.
    Int tail = memo[cur];
    for (std::size_t i = chain.size(); i-- > 0;) {
      const auto [x, cy] = chain[i];
      tail = min(p.b * Int(x), tail + cy);
      memo[x] = tail;
    }
  }
  return memo;
}

Int brauer_shockley_g(const CaseParams& p) {
  if (p.ell <= p.k) throw InvalidInput("brauer_shockley_g: requires ell > k");
  Int best = 0;
  for (Int m : class_minima(p)) best = max(best, m);
  return best - p.a;
}

Int lemma3_g(const WalkFrame& f) {
  Int best = 0;
  for (Int x = 1; x < f.a; x += 1) {
    VState s = f.state(x, 0);
    Int lo = s.v;
    for (Int t = 1; t < f.a; t += 1) {
      s = f.advance(s);
      lo = min(lo, s.v);
    }
    best = max(best, lo);
  }
  return best - f.a;
}

std::vector<WalkRow> walk_trace(const WalkFrame& f, Int x0) {
  if (x0 < 0 || x0 >= f.a) throw InvalidInput("walk_trace: start class must lie in {0..a-1}");
  const Int span = f.a - f.ell;
  const Int q = floor_div(f.a, span);
  const Int r = f.a - q * span;

  std::vector<WalkRow> rows;
  VState s = f.state(x0, 0);
  for (Int t = 0; t < f.a; t += 1) {
    if (t > 0) s = f.advance(s);
    rows.push_back({t, s, is_local_min(f, s.x, s.y), false});
  }
  for (const WalkRow& row : rows) {
    if (!row.is_min || row.state.x >= span) continue;
    const Int x = row.state.x;
    const Int dy = x < r ? q + 1 : q;
    const Int at = row.t + dy;
    if (at > f.a - 1) continue;
    WalkRow& predicted = rows[at.to_size()];
    if (!predicted.is_min) predicted.fake = true;
  }
  return rows;
}

}  // namespace frob
