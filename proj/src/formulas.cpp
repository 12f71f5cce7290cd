#include "frob/formulas.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "frob/oracle.hpp"
#include "frob/walk.hpp"

namespace frob {

namespace {

const StepParams& require_step(const CaseParams& p, const char* who) {
  if (!p.step) throw InvalidInput(std::string(who) + ": requires br > cq");
  return *p.step;
}

}  // namespace

Int sylvester_g(Int a, Int b) {
  if (a < 1 || b < 1) throw InvalidInput("sylvester_g: arguments must be positive");
  if (gcd(a, b) != 1) throw InvalidInput("sylvester_g: arguments must be coprime");
  return a * b - a - b;
}

Reduction johnson_reduce(const Triple& t) {
  Reduction out{t, {}};
  while (out.reduced.size() == 3 && !out.reduced.has_unit() && !out.reduced.pairwise_coprime()) {
    const auto& g = out.reduced.generators();
    std::size_t bi = 0, bj = 1;
    Int best = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Int d = gcd(g[i], g[j]);
        if (d > best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    const std::size_t third_idx = 3 - bi - bj;

    ReductionStep step{{g[bi], g[bj]}, best, g[third_idx], out.reduced, out.reduced};
    const Int divided[] = {floor_div(g[bi], best), floor_div(g[bj], best), g[third_idx]};
    step.child = Triple::from_generators(divided);
    out.reduced = step.child;
    out.steps.push_back(std::move(step));
  }
  return out;
}

Int thm3_g(const CaseParams& p) {
  if (!p.lambda) throw InvalidInput("thm3_g: requires ell > k and br < cq");
  const Int a = p.a, b = p.b, c = p.c, ell = p.ell, q = p.q, r = p.r, lam = *p.lambda;
  const Int lhs = lam * (b * (a - ell) + c);
  const Int threshold = c * (q - 1) - b * r;
  const Int g_plus_a = lhs >= threshold ? b * ((lam + 1) * (a - ell) + r - 1)
                                        : b * (a - ell - 1) + c * (q - lam - 1);
  return g_plus_a - a;
}

Int thm5a_g(const CaseParams& p) {
  const StepParams& st = require_step(p, "thm5a_g");
  if (!(st.mu < p.floor_r_over_u())) throw InvalidInput("thm5a_g: requires mu < floor(r/u)");
  const Int b = p.b, c = p.c, q = p.q, r = p.r, u = st.u, mu = st.mu;
  const Int descent = b * (r - mu * u - 1);
  const Int tail_class =
      b * (u - 1) + c * (mu * (q + 1) + (floor_div(st.s * mu, r) + 1) * q);
  return max(descent, tail_class) + c * q * p.tail_factor() - p.a;
}

Int thm5a_shortcut_lambda_gt_delta(const CaseParams& p) {
  const StepParams& st = require_step(p, "thm5a_shortcut_lambda_gt_delta");
  if (!(st.Lambda > st.Delta)) throw InvalidInput("shortcut requires Lambda > Delta");
  const Int b = p.b, c = p.c, q = p.q, r = p.r;
  const Int g_plus_a =
      max(b * (r - st.Delta * st.s - 1), b * (st.s - 1) + c * (st.Delta * (q + 1) + q)) + c * q;
  return g_plus_a - p.a;
}

Int thm5a_shortcut_deltap_gt_lambdap(const CaseParams& p) {
  const StepParams& st = require_step(p, "thm5a_shortcut_deltap_gt_lambdap");
  if (!(st.DeltaP > st.LambdaP)) throw InvalidInput("shortcut requires Delta' > Lambda'");
  const Int b = p.b, c = p.c, q = p.q, r = p.r;
  const Int g_plus_a = max(b * (r - 1), b * mod(p.a - p.ell - 1, r) + c * q) +
                       c * q * p.tail_factor();
  return g_plus_a - p.a;
}

Int thm5b_g(const CaseParams& p, const XSetData& xd) {
  const StepParams& st = require_step(p, "thm5b_g");
  if (!(st.mu > p.floor_r_over_u())) throw InvalidInput("thm5b_g: requires mu > floor(r/u)");
  if (xd.m_index == 0 || !xd.w_index)
    throw StructureViolation("thm5b_g: X-set lacks the m >= 1 / w structure");
  const Int b = p.b, c = p.c;
  const Int at_min = b * (xd.xhat - 1) + c * xd.ys[*xd.w_index];
  const Int at_wide_gap = b * (xd.xs[xd.m_index - 1] - xd.x_mu - 1) + c * xd.ys.back();
  return max(at_min, at_wide_gap) + c * p.q * p.tail_factor() - p.a;
}

std::optional<Int> thm6b_g(const CaseParams& p) {
  const auto dual = compute_dual(p);
  if (!dual) return std::nullopt;
  if (!(dual->mubar > floor_div(dual->span, dual->ubar))) return std::nullopt;
  if (dual->m_index == 0 || !dual->w_index) return std::nullopt;

  const Int b = p.b, c = p.c;
  const auto& xs = dual->xs;
  const auto& ys = dual->ys;
  const Int xm = xs[dual->m_index];
  const Int at_min = b * (xm - 1) + c * ys[*dual->w_index];
  const Int at_wide_gap = b * (xs[dual->m_index - 1] - xs.back() - 1) + c * ys.back();
  const Int tail = c * ((dual->qbar + 1) * floor_div(p.ell - 1, dual->span) - 2);
  return max(at_min, at_wide_gap) + tail - p.a;
}

std::optional<Int> thm6b_g(const Triple& t) {
  const BaseParams base = compute_base(t);
  if (base.ell <= base.k) return std::nullopt;
  return thm6b_g(compute_case_params(t));
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Formula: return "formula";
    case Strategy::Brauer: return "brauer";
    case Strategy::Lemma3: return "lemma3";
    case Strategy::Sieve: return "sieve";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::Brauer: return "brauer";
    case Method::Sieve: return "sieve";
    case Method::Lemma3: return "lemma3";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  for (Strategy s : {Strategy::Auto, Strategy::Formula, Strategy::Brauer, Strategy::Lemma3,
                     Strategy::Sieve})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

namespace {

// Evaluates g on a pairwise-coprime proper triple and fills the explanation.
void evaluate_proper(const Triple& t, Strategy strategy, FrobeniusResult& res) {
  const BaseParams base = compute_base(t);
  if (base.ell <= base.k) {
    res.label = CaseLabel{};
    res.g = sylvester_g(t.a(), t.b());
    res.method = Method::Formula;
    return;
  }

  const CaseParams p = compute_case_params(t);
  res.params = p;
  res.label = classify(p);
  if (p.step) {
    try {
      res.xset = build_xset(p);
    } catch (const StructureViolation&) {
      res.structure_violation = true;
    }
  }

  if (strategy == Strategy::Brauer) {
    res.g = brauer_shockley_g(p);
    res.method = Method::Brauer;
    return;
  }
  if (strategy == Strategy::Lemma3) {
    res.g = lemma3_g(WalkFrame::of(p));
    res.method = Method::Lemma3;
    return;
  }

  const bool uncovered = res.label.principal == Case::MuBoundary || res.structure_violation;
  if (uncovered) {
    if (strategy == Strategy::Formula)
      throw InvalidInput("no closed form covers this triple (" +
                         std::string(res.structure_violation ? "X-set structure violation"
                                                             : "mu = floor(r/u)") +
                         ")");
    res.g = brauer_shockley_g(p);
    res.method = Method::Brauer;
    return;
  }

  res.method = Method::Formula;
  switch (res.label.principal) {
    case Case::Thm3: res.g = thm3_g(p); break;
    case Case::Thm5A: res.g = thm5a_g(p); break;
    case Case::Thm5B: res.g = thm5b_g(p, *res.xset); break;
    default: throw InternalError("frobenius: unexpected case label");
  }
}

}  // namespace

FrobeniusResult frobenius(const Triple& t, Strategy strategy) {
  FrobeniusResult res{0, 0, CaseLabel{}, t, t, std::nullopt, std::nullopt, {}, Method::Formula,
                      false};

  if (strategy == Strategy::Sieve) {
    res.g = frobenius_sieve(t);
    res.g_reduced = res.g;
    res.method = Method::Sieve;
    return res;
  }

  Reduction red = johnson_reduce(t);
  res.reduced = red.reduced;
  res.reduction = std::move(red.steps);

  const Triple& base = res.reduced;
  Int g;
  if (base.has_unit()) {
    g = -1;
  } else if (base.size() == 2) {
    g = sylvester_g(base[0], base[1]);
  } else {
    evaluate_proper(base, strategy, res);
    g = res.g;
  }
  res.g_reduced = g;

  for (std::size_t i = res.reduction.size(); i-- > 0;) g = res.reduction[i].unwind(g);
  res.g = g;
  return res;
}

}  // namespace frob
