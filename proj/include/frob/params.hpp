#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "frob/arith.hpp"

namespace frob {

/*
 * A validated generating set, sorted ascending with duplicates removed.
 *
 * Usually three values a < b < c. Ingestion collapses duplicates, and Johnson
 * reduction can produce a 1 or merge two values, so the set may also hold two
 * (or, with a unit, one) generators; a(), b(), c() require size() == 3.
 */
class Triple {
 public:
  // Internal constructor: any non-empty set of positive values with overall
  // gcd 1. Values equal to 1 are allowed here.
  static Triple from_generators(std::span<const Int> values);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Int>& generators() const { return gens_; }
  Int operator[](std::size_t i) const { return gens_.at(i); }

  Int a() const;
  Int b() const;
  Int c() const;

  bool has_unit() const { return gens_.front() == 1; }
  bool pairwise_coprime() const { return pairwise_coprime_; }
  bool is_proper() const { return size() == 3 && !has_unit(); }

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  std::vector<Int> gens_;
  bool pairwise_coprime_ = false;
};

// Top-level ingestion: sorts, deduplicates, and validates. Rejects values
// below 1, any value equal to 1, and an overall gcd other than 1.
Triple make_triple(Int a, Int b, Int c);

struct BaseParams {
  Int k;    // floor(c / b)
  Int ell;  // c * b^-1 mod a, in {1, ..., a-1}
};

BaseParams compute_base(const Triple& t);

/*
 * Quantities of the br > cq branch. s = a - ell - r. A is the drop of a
 * down-step (x, y) -> (x - r, y + q); B is the rise of an up-step
 * (x, y) -> (x + s, y + q + 1).
 */
struct StepParams {
  Int s;
  Int u;  // (a - ell) mod r, in {1, ..., r-1}
  Int A;
  Int B;
  Int Lambda;   // floor(r / s)
  Int Delta;    // floor(A / B)
  Int LambdaP;  // floor(s / r)
  Int DeltaP;   // floor(B / A)
  Int mu;
};

struct CaseParams {
  Int a, b, c;
  Int k, ell;
  Int q, r;
  std::optional<Int> lambda;      // br < cq only
  std::optional<StepParams> step;  // br > cq only

  bool br_below_cq() const { return lambda.has_value(); }
  Int floor_r_over_u() const;  // requires step
  // floor((a - ell - 1) / r); requires r > 0
  Int tail_factor() const;
};

// Requires a pairwise-coprime proper triple with ell > k. Throws InvalidInput
// when a precondition fails and InternalError when a derived invariant does.
CaseParams compute_case_params(const Triple& t);

// Smallest i >= 0 with floor((i+1)B/A) != floor((i+1)s/r), scanning at most
// A*r candidates. Returns nullopt if no disagreement is found within the cap.
std::optional<Int> find_mu(Int A, Int B, Int r, Int s);

// Same as find_mu, but requires B/A > s/r (which makes the search finite)
// and throws InternalError if the cap is hit anyway.
Int compute_mu(Int A, Int B, Int r, Int s);

struct XSetData {
  std::vector<Int> xs;
  std::vector<Int> ys;
  Int xhat;                        // min X
  std::size_t m_index = 0;         // xs[m_index] == xhat
  std::optional<std::size_t> w_index;  // max i with xs[i] + xhat in X
  Int x_mu;
  Int gap1;  // xhat
  Int gap2;  // xhat + u - x_mu
};

// Generates x_i, y_i for i = 0..mu together with the derived indices.
// Requires the br > cq branch. When mu > floor(r/u) throws
// StructureViolation if m_index == 0 or no w exists.
XSetData build_xset(const CaseParams& p);

enum class Case { Sylvester, Thm3, Thm5A, Thm5B, MuBoundary };

std::string_view to_string(Case c);

struct CaseLabel {
  Case principal = Case::Sylvester;
  bool lambda_gt_delta = false;     // Lambda > Delta, THM5A only
  bool deltap_gt_lambdap = false;   // Delta' > Lambda', THM5A only

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

CaseLabel classify(const CaseParams& p);
// Requires a pairwise-coprime proper triple.
CaseLabel classify(const Triple& t);

/*
 * Mirror-image quantities built from qbar = floor(a / ell) and
 * rbar = a - qbar * ell, with the X-set generated along the dual walk.
 */
struct DualParams {
  Int qbar, rbar, ubar, Abar, Bbar, mubar;
  Int span;  // ell - rbar
  std::vector<Int> xs;
  std::vector<Int> ys;
  std::size_t m_index = 0;
  std::optional<std::size_t> w_index;
};

// Returns nullopt when any dual quantity is undefined or non-positive
// (rbar = 0, ubar = 0, Abar <= 0, or mubar cannot be found).
std::optional<DualParams> compute_dual(const CaseParams& p);

}  // namespace frob
