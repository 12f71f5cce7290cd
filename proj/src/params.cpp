#include "frob/params.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace frob {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw InternalError(std::string("invariant violated: ") + what);
}

Int gcd_all(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = gcd(g, v);
  return g;
}

void require_proper_coprime(const Triple& t, const char* who) {
  if (!t.is_proper() || !t.pairwise_coprime())
    throw InvalidInput(std::string(who) + ": requires a pairwise-coprime triple 2 <= a < b < c");
}

}  // namespace

Triple Triple::from_generators(std::span<const Int> values) {
  if (values.empty()) throw InvalidInput("empty generating set");
  for (Int v : values)
    if (v < 1) throw InvalidInput("generators must be positive, got " + v.to_string());

  Triple t;
  t.gens_.assign(values.begin(), values.end());
  std::sort(t.gens_.begin(), t.gens_.end());
  t.gens_.erase(std::unique(t.gens_.begin(), t.gens_.end()), t.gens_.end());

  if (gcd_all(t.gens_) != 1)
    throw InvalidInput("generators have common divisor " + gcd_all(t.gens_).to_string());

  t.pairwise_coprime_ = true;
  for (std::size_t i = 0; i < t.gens_.size(); ++i)
    for (std::size_t j = i + 1; j < t.gens_.size(); ++j)
      if (gcd(t.gens_[i], t.gens_[j]) != 1) t.pairwise_coprime_ = false;
  return t;
}

Int Triple::a() const {
  if (size() != 3) throw InvalidInput("triple accessor on a set of size " + std::to_string(size()));
  return gens_[0];
}
Int Triple::b() const {
  if (size() != 3) throw InvalidInput("triple accessor on a set of size " + std::to_string(size()));
  return gens_[1];
}
Int Triple::c() const {
  if (size() != 3) throw InvalidInput("triple accessor on a set of size " + std::to_string(size()));
  return gens_[2];
}

Triple make_triple(Int a, Int b, Int c) {
  const Int in[] = {a, b, c};
  for (Int v : in) {
    if (v < 1) throw InvalidInput("inputs must be positive, got " + v.to_string());
    if (v == 1) throw InvalidInput("inputs must be at least 2 (a generator of 1 makes every integer representable)");
  }
  return Triple::from_generators(in);
}

BaseParams compute_base(const Triple& t) {
  require_proper_coprime(t, "compute_base");
  const Int a = t.a(), b = t.b(), c = t.c();
  BaseParams out;
  out.k = floor_div(c, b);
  out.ell = mod(mod(c, a) * mod_inverse(b, a), a);
  require(out.ell >= 1 && out.ell <= a - 1, "1 <= ell <= a-1");
  return out;
}

Int CaseParams::floor_r_over_u() const {
  if (!step) throw InvalidInput("floor(r/u) is defined only when br > cq");
  return floor_div(r, step->u);
}

Int CaseParams::tail_factor() const {
  if (r <= 0) throw InvalidInput("floor((a-ell-1)/r) needs r > 0");
  return floor_div(a - ell - 1, r);
}

std::optional<Int> find_mu(Int A, Int B, Int r, Int s) {
  if (A <= 0 || B <= 0 || r <= 0 || s <= 0)
    throw InvalidInput("mu: A, B, r, s must all be positive");
  const Int cap = A * r;
  for (Int i = 0; i <= cap; i += 1) {
    if (floor_div((i + 1) * B, A) != floor_div((i + 1) * s, r)) return i;
  }
  return std::nullopt;
}

Int compute_mu(Int A, Int B, Int r, Int s) {
  auto mu = find_mu(A, B, r, s);
  if (!mu) throw InternalError("mu: no index found within A*r iterations");
  return *mu;
}

CaseParams compute_case_params(const Triple& t) {
  const BaseParams base = compute_base(t);
  if (base.ell <= base.k) throw InvalidInput("compute_case_params: requires ell > k");

  CaseParams p;
  p.a = t.a();
  p.b = t.b();
  p.c = t.c();
  p.k = base.k;
  p.ell = base.ell;
  const Int a = p.a, b = p.b, c = p.c, ell = p.ell;

  require(c - b * ell < 0, "c - b*ell < 0 when ell > k");
  require(gcd(a, ell) == 1, "gcd(a, ell) = 1");

  p.q = floor_div(a, a - ell);
  p.r = a - p.q * (a - ell);
  require(p.r >= 0 && p.r < a - ell, "0 <= r < a - ell");
  require(mod(p.r - ell, a - ell) == 0 && p.r <= ell, "r = ell (mod a-ell) and r <= ell");

  const Int br = b * p.r, cq = c * p.q;
  require(br != cq, "br != cq");

  if (br < cq) {
    require(p.r < ell && a - ell <= ell, "br < cq forces r < ell and a - ell <= ell");
    p.lambda = floor_div(cq - br, b * (a - ell) + c);
    return p;
  }

  StepParams st;
  st.s = a - ell - p.r;
  require(p.r >= 1, "r >= 1 when br > cq");
  require(st.s >= 1, "a - ell - r >= 1");
  st.u = mod(a - ell, p.r);
  require(st.u >= 1 && st.u < p.r, "1 <= u < r");
  st.A = br - cq;
  st.B = b * st.s + c * (p.q + 1);
  require(st.A > 0 && st.B > 0, "A > 0 and B > 0");
  require(st.A != st.B, "A != B");
  // Every r is divisible by s = 1; the non-divisibility only holds for s >= 2.
  require(st.s == 1 || mod(p.r, st.s) != 0, "r is not divisible by a - ell - r >= 2");
  require(st.B * p.r > st.A * st.s, "B/A > s/r");
  st.Lambda = floor_div(p.r, st.s);
  st.Delta = floor_div(st.A, st.B);
  st.LambdaP = floor_div(st.s, p.r);
  st.DeltaP = floor_div(st.B, st.A);
  st.mu = compute_mu(st.A, st.B, p.r, st.s);
  p.step = st;

  if (st.Lambda > st.Delta || st.DeltaP > st.LambdaP) {
    require(st.mu == st.Delta, "mu = Delta under a shortcut condition");
    require(st.mu < p.floor_r_over_u(), "mu < floor(r/u) under a shortcut condition");
  }
  return p;
}

namespace {

// x_i = span*(floor(step*i/span) + 1) - step*i,
// y_i = up*(floor(step*i/span) + 1) + down*i, for i = 0..count-1.
void generate_sequence(Int span, Int step, Int up, Int down, Int last,
                       std::vector<Int>& xs, std::vector<Int>& ys) {
  xs.clear();
  ys.clear();
  for (Int i = 0; i <= last; i += 1) {
    const Int wraps = floor_div(step * i, span) + 1;
    xs.push_back(span * wraps - step * i);
    ys.push_back(up * wraps + down * i);
  }
}

struct Indices {
  std::size_t m = 0;
  std::optional<std::size_t> w;
};

Indices locate_indices(const std::vector<Int>& xs) {
  Indices out;
  out.m = static_cast<std::size_t>(std::min_element(xs.begin(), xs.end()) - xs.begin());
  const std::set<Int> members(xs.begin(), xs.end());
  const Int xhat = xs[out.m];
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (members.count(xs[i] + xhat)) {
      out.w = i;
      break;
    }
  }
  return out;
}

}  // namespace

XSetData build_xset(const CaseParams& p) {
  if (!p.step) throw InvalidInput("build_xset: requires br > cq");
  const StepParams& st = *p.step;

  XSetData xd;
  generate_sequence(p.r, st.s, p.q, p.q + 1, st.mu, xd.xs, xd.ys);

  require(xd.xs.front() == p.r, "x_0 = r");
  std::set<Int> seen;
  for (Int x : xd.xs) {
    require(x >= 1 && x <= p.r, "x_i in {1..r}");
    require(seen.insert(x).second, "x_i pairwise distinct");
  }

  const Indices idx = locate_indices(xd.xs);
  xd.m_index = idx.m;
  xd.w_index = idx.w;
  xd.xhat = xd.xs[idx.m];
  xd.x_mu = xd.xs.back();
  xd.gap1 = xd.xhat;
  xd.gap2 = xd.xhat + st.u - xd.x_mu;

  if (st.mu > p.floor_r_over_u()) {
    if (xd.m_index == 0)
      throw StructureViolation("X-set minimum sits at index 0 while mu > floor(r/u)");
    if (!xd.w_index)
      throw StructureViolation("no index w with x_w + min X in X while mu > floor(r/u)");
  }
  return xd;
}

std::string_view to_string(Case c) {
  switch (c) {
    case Case::Sylvester: return "SYLVESTER";
    case Case::Thm3: return "THM3";
    case Case::Thm5A: return "THM5A";
    case Case::Thm5B: return "THM5B";
    case Case::MuBoundary: return "MU_BOUNDARY";
  }
  return "?";
}

CaseLabel classify(const CaseParams& p) {
  CaseLabel label;
  if (p.ell <= p.k) return label;
  if (p.br_below_cq()) {
    label.principal = Case::Thm3;
    return label;
  }
  const StepParams& st = *p.step;
  const Int fl = p.floor_r_over_u();
  if (st.mu < fl) {
    label.principal = Case::Thm5A;
    label.lambda_gt_delta = st.Lambda > st.Delta;
    label.deltap_gt_lambdap = st.DeltaP > st.LambdaP;
  } else if (st.mu > fl) {
    label.principal = Case::Thm5B;
  } else {
    label.principal = Case::MuBoundary;
  }
  return label;
}

CaseLabel classify(const Triple& t) {
  const BaseParams base = compute_base(t);
  if (base.ell <= base.k) return CaseLabel{};
  return classify(compute_case_params(t));
}

std::optional<DualParams> compute_dual(const CaseParams& p) {
  DualParams d;
  d.qbar = floor_div(p.a, p.ell);
  d.rbar = p.a - d.qbar * p.ell;
  d.span = p.ell - d.rbar;
  if (d.rbar <= 0 || d.span <= 0) return std::nullopt;
  d.ubar = mod(d.rbar, d.span);
  d.Abar = p.b * d.span - p.c * (d.qbar + 1);
  d.Bbar = p.b * d.rbar + p.c * d.qbar;
  if (d.ubar <= 0 || d.Abar <= 0) return std::nullopt;
  auto mu = find_mu(d.Abar, d.Bbar, d.span, d.rbar);
  if (!mu) return std::nullopt;
  d.mubar = *mu;

  generate_sequence(d.span, d.rbar, d.qbar + 1, d.qbar, d.mubar, d.xs, d.ys);
  const Indices idx = locate_indices(d.xs);
  d.m_index = idx.m;
  d.w_index = idx.w;
  return d;
}

}  // namespace frob
