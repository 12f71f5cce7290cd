#pragma once

#include <utility>
#include <vector>

#include "frob/arith.hpp"
#include "frob/params.hpp"

namespace frob {

// A lattice point on the residue walk with its value v = b*x + c*y.
struct VState {
  Int x;
  Int y;
  Int v;

  friend bool operator==(const VState&, const VState&) = default;
};

// Offset from one local minimum to the next one along the walk.
struct NextMinDelta {
  Int rho;  // (x - ell) mod (a - ell)
  Int dx;
  Int dy;
};

struct WalkRow {
  Int t;
  VState state;
  bool is_min = false;
  // The state an uncorrected consecutive-minimum rule would predict after the
  // previous local minimum, when that state is not actually a local minimum.
  bool fake = false;
};

// The walk geometry shared by every walk operation: a proper triple and ell.
struct WalkFrame {
  Int a, b, c, ell;

  static WalkFrame of(const Triple& t, Int ell);
  static WalkFrame of(const CaseParams& p) { return {p.a, p.b, p.c, p.ell}; }

  Int v(Int x, Int y) const;
  VState state(Int x, Int y) const { return {x, y, v(x, y)}; }
  // One walk step: x -> (x + a - ell) mod a, y -> y + 1.
  VState advance(const VState& s) const;
};

Int v_value(Int b, Int c, Int x, Int y);

// Local-minimum test for 0 <= x < a, 0 <= y <= a-1. Interior rows compare
// against both walk neighbours, y = 0 only the successor, y = a-1 only the
// predecessor.
bool is_local_min(const WalkFrame& f, Int x, Int y);
bool is_local_min(const Triple& t, Int ell, const VState& s);

// Jumps from the local minimum (x, y) straight to the next one. Throws
// InvalidInput unless (x, y) is a local minimum with x < min(a - ell, ell)
// and y + dy <= a - 1.
std::pair<NextMinDelta, VState> next_local_min(const WalkFrame& f, Int x, Int y);

struct Lemma7Step {
  Int x;
  Int y;
};

// First descent point reached from (x, 0): the pair (x', y') with
// m(bx) = min(bx, m(bx') + c*y'). Requires 1 <= x <= a-1.
Lemma7Step lemma7_step(Int x, const CaseParams& p);

// Minimum representable value b*n1 + c*n2 in the residue class of b*x mod a.
Int m_of(Int x, const CaseParams& p);

// m_of for every x in {0, ..., a-1}, sharing work between chains.
std::vector<Int> class_minima(const CaseParams& p);

// max over x of m(bx), minus a.
Int brauer_shockley_g(const CaseParams& p);

// Direct double loop over start classes and walk positions; O(a^2).
Int lemma3_g(const WalkFrame& f);

// Walk from (x0, 0) for t = 0..a-1 with local minima and fake minima marked.
std::vector<WalkRow> walk_trace(const WalkFrame& f, Int x0);

}  // namespace frob
