#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "frob/arith.hpp"
#include "frob/params.hpp"

namespace frob {

// ab - a - b for coprime a, b >= 1 (so -1 whenever a = 1).
Int sylvester_g(Int a, Int b);

// One Johnson step: the pair sharing divisor d is divided by d, and
// g(parent) = d * g(child) + third * (d - 1).
struct ReductionStep {
  std::array<Int, 2> pair;  // the two parent values that shared d
  Int d;
  Int third;
  Triple parent;
  Triple child;

  Int multiplier() const { return d; }
  Int offset() const { return third * (d - 1); }
  Int unwind(Int g_child) const { return d * g_child + offset(); }
};

struct Reduction {
  Triple reduced;  // pairwise coprime, or contains a 1, or has two values
  std::vector<ReductionStep> steps;
};

// Repeatedly divides out the pair with the largest shared divisor. The input
// must have overall gcd 1.
Reduction johnson_reduce(const Triple& t);

// Each of these takes the reduced triple's parameters and returns g (not g+a).
// They throw InvalidInput when their case precondition does not hold.
Int thm3_g(const CaseParams& p);
Int thm5a_g(const CaseParams& p);
Int thm5a_shortcut_lambda_gt_delta(const CaseParams& p);
Int thm5a_shortcut_deltap_gt_lambdap(const CaseParams& p);
Int thm5b_g(const CaseParams& p, const XSetData& xd);

// Closed form along the mirror-image walk. Empty when its guard fails:
// dual quantities undefined, mubar <= floor(span/ubar), m = 0, or no w.
std::optional<Int> thm6b_g(const CaseParams& p);
std::optional<Int> thm6b_g(const Triple& t);

// What the caller asks for.
enum class Strategy { Auto, Formula, Brauer, Lemma3, Sieve };
// What actually produced the answer.
enum class Method { Formula, Brauer, Sieve, Lemma3 };

std::string_view to_string(Strategy s);
std::string_view to_string(Method m);
std::optional<Strategy> parse_strategy(std::string_view text);

struct FrobeniusResult {
  Int g;
  Int g_reduced;  // g of the reduced set, before unwinding the reduction
  CaseLabel label;
  Triple input;
  Triple reduced;
  std::optional<CaseParams> params;
  std::optional<XSetData> xset;
  std::vector<ReductionStep> reduction;
  Method method = Method::Formula;
  // The X-set structure needed by the mu > floor(r/u) formula was missing and
  // the answer came from the class-minimum fallback instead.
  bool structure_violation = false;
};

// Full dispatch: Johnson reduction, case selection, closed form (or the
// requested evaluator), and unwinding. Strategy::Formula throws
// InvalidInput instead of falling back on cases no closed form covers.
FrobeniusResult frobenius(const Triple& t, Strategy strategy = Strategy::Auto);

}  // namespace frob
