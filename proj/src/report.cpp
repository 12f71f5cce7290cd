#include "frob/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "frob/oracle.hpp"

namespace frob {

using nlohmann::json;

json to_json(Int v) {
  if (auto small = v.try_i64()) return *small;
  return v.to_string();
}

namespace {

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? to_json(*v) : json(nullptr);
}

json generators_json(const Triple& t) {
  json arr = json::array();
  for (Int g : t.generators()) arr.push_back(to_json(g));
  return arr;
}

json params_json(const CaseParams& p) {
  json out;
  out["k"] = to_json(p.k);
  out["ell"] = to_json(p.ell);
  out["q"] = to_json(p.q);
  out["r"] = to_json(p.r);
  out["lambda"] = opt_json(p.lambda);
  const auto field = [&](auto member) {
    return p.step ? to_json((*p.step).*member) : json(nullptr);
  };
  out["u"] = field(&StepParams::u);
  out["A"] = field(&StepParams::A);
  out["B"] = field(&StepParams::B);
  out["Lambda"] = field(&StepParams::Lambda);
  out["Delta"] = field(&StepParams::Delta);
  out["LambdaP"] = field(&StepParams::LambdaP);
  out["DeltaP"] = field(&StepParams::DeltaP);
  out["mu"] = field(&StepParams::mu);
  return out;
}

json base_params_json(const Triple& t) {
  const BaseParams base = compute_base(t);
  json out;
  out["k"] = to_json(base.k);
  out["ell"] = to_json(base.ell);
  for (const char* key : {"q", "r", "u", "lambda", "A", "B", "Lambda", "Delta", "LambdaP",
                          "DeltaP", "mu"})
    out[key] = nullptr;
  return out;
}

json xset_json(const XSetData& xd) {
  json out;
  out["xs"] = json::array();
  out["ys"] = json::array();
  for (Int x : xd.xs) out["xs"].push_back(to_json(x));
  for (Int y : xd.ys) out["ys"].push_back(to_json(y));
  out["xhat"] = to_json(xd.xhat);
  out["m"] = xd.m_index;
  out["w"] = xd.w_index ? json(*xd.w_index) : json(nullptr);
  return out;
}

std::string join(const std::vector<Int>& values, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

}  // namespace

std::vector<std::string> shortcut_names(const CaseLabel& label) {
  std::vector<std::string> out;
  if (label.lambda_gt_delta) out.emplace_back("LambdaGtDelta");
  if (label.deltap_gt_lambdap) out.emplace_back("DeltaPGtLambdaP");
  return out;
}

json to_json(const FrobeniusResult& r) {
  json out;
  const auto& in = r.input.generators();
  out["a"] = to_json(in[0]);
  out["b"] = in.size() > 1 ? to_json(in[1]) : json(nullptr);
  out["c"] = in.size() > 2 ? to_json(in[2]) : json(nullptr);
  out["g"] = to_json(r.g);
  out["case"] = std::string(to_string(r.label.principal));
  out["shortcuts"] = shortcut_names(r.label);
  if (r.params)
    out["params"] = params_json(*r.params);
  else if (r.reduced.is_proper() && r.reduced.pairwise_coprime() && r.method != Method::Sieve)
    out["params"] = base_params_json(r.reduced);
  else
    out["params"] = nullptr;
  out["xset"] = r.xset ? xset_json(*r.xset) : json(nullptr);
  out["reduction"] = json::array();
  for (const ReductionStep& s : r.reduction)
    out["reduction"].push_back({{"d", to_json(s.d)}, {"third", to_json(s.third)}});
  out["method"] = std::string(to_string(r.method));
  out["reduced"] = generators_json(r.reduced);
  out["structure_violation"] = r.structure_violation;
  return out;
}

std::string render_explain(const FrobeniusResult& r) {
  std::ostringstream os;
  os << "input:    (" << join(r.input.generators()) << ")\n";
  os << "g:        " << r.g << "\n";
  os << "case:     " << to_string(r.label.principal);
  for (const auto& s : shortcut_names(r.label)) os << " +" << s;
  os << "\nmethod:   " << to_string(r.method) << (r.structure_violation ? " (fallback)" : "")
     << "\n";

  if (!r.reduction.empty()) {
    os << "reduction:\n";
    for (const ReductionStep& s : r.reduction)
      os << "  (" << join(s.parent.generators()) << ") -> (" << join(s.child.generators())
         << ")  d=" << s.d << " third=" << s.third << "  g = " << s.d << "*g' + " << s.offset()
         << "\n";
    os << "reduced:  (" << join(r.reduced.generators()) << "), g' = " << r.g_reduced << "\n";
  }

  if (r.params) {
    const CaseParams& p = *r.params;
    os << "params:   k=" << p.k << " ell=" << p.ell << " q=" << p.q << " r=" << p.r;
    if (p.lambda) os << " lambda=" << *p.lambda;
    os << "\n";
    os << "          br=" << p.b * p.r << (p.br_below_cq() ? " < " : " > ") << "cq=" << p.c * p.q
       << "\n";
    if (p.step) {
      const StepParams& st = *p.step;
      os << "          u=" << st.u << " A=" << st.A << " B=" << st.B << " Lambda=" << st.Lambda
         << " Delta=" << st.Delta << " Lambda'=" << st.LambdaP << " Delta'=" << st.DeltaP
         << " mu=" << st.mu << " floor(r/u)=" << p.floor_r_over_u() << "\n";
    }
  } else if (r.reduced.is_proper() && r.reduced.pairwise_coprime() && r.method != Method::Sieve) {
    const BaseParams base = compute_base(r.reduced);
    os << "params:   k=" << base.k << " ell=" << base.ell << " (ell <= k)\n";
  }

  if (r.xset) {
    const XSetData& xd = *r.xset;
    os << "xset:     xs=(" << join(xd.xs) << ")\n";
    os << "          ys=(" << join(xd.ys) << ")\n";
    os << "          xhat=" << xd.xhat << " m=" << xd.m_index << " w=";
    if (xd.w_index)
      os << *xd.w_index;
    else
      os << "-";
    os << " x_mu=" << xd.x_mu << "\n";
  }
  return os.str();
}

std::string render_trace(const std::vector<WalkRow>& rows) {
  std::ostringstream os;
  os << std::setw(5) << "t" << std::setw(8) << "x" << std::setw(8) << "y" << std::setw(14) << "v"
     << "  flag\n";
  for (const WalkRow& row : rows) {
    os << std::setw(5) << row.t << std::setw(8) << row.state.x << std::setw(8) << row.state.y
       << std::setw(14) << row.state.v << "  " << (row.is_min ? "min" : (row.fake ? "fake" : ""))
       << "\n";
  }
  return os.str();
}

std::string render_xset(const CaseParams& p, const XSetData& xd, const std::set<Int>& oracle) {
  std::ostringstream os;
  os << std::setw(4) << "i" << std::setw(10) << "x_i" << std::setw(10) << "y_i" << "\n";
  for (std::size_t i = 0; i < xd.xs.size(); ++i)
    os << std::setw(4) << i << std::setw(10) << xd.xs[i] << std::setw(10) << xd.ys[i] << "\n";

  std::vector<Int> sorted = xd.xs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Int> gaps;
  for (std::size_t i = 1; i < sorted.size(); ++i) gaps.push_back(sorted[i] - sorted[i - 1]);
  std::set<Int> distinct(gaps.begin(), gaps.end());

  os << "u=" << p.step->u << " mu=" << p.step->mu << " floor(r/u)=" << p.floor_r_over_u() << "\n";
  os << "xhat=" << xd.xhat << " m=" << xd.m_index << " w=";
  if (xd.w_index)
    os << *xd.w_index;
  else
    os << "-";
  os << " x_mu=" << xd.x_mu << "\n";
  os << "sorted X:   {" << join(sorted) << "}\n";
  os << "oracle X:   {" << join(std::vector<Int>(oracle.begin(), oracle.end())) << "}"
     << (std::set<Int>(sorted.begin(), sorted.end()) == oracle ? "  (match)" : "  (MISMATCH)")
     << "\n";
  os << "gaps:       {" << join(std::vector<Int>(distinct.begin(), distinct.end()))
     << "}  expected within {" << xd.gap1 << ", " << xd.gap2 << "}\n";
  return os.str();
}

std::vector<std::array<std::int64_t, 3>> sweep_triples(const SweepOptions& opt) {
  if (opt.max < 2) throw InvalidInput("sweep: --max must be at least 2");
  if (opt.max > 100000) throw InvalidInput("sweep: --max is limited to 100000");
  const auto keep = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    const Int ab = gcd(a, b);
    if (opt.pairwise_only) return ab == 1 && gcd(Int(a), Int(c)) == 1 && gcd(Int(b), Int(c)) == 1;
    return gcd(ab, Int(c)) == 1;
  };

  std::vector<std::array<std::int64_t, 3>> out;
  if (!opt.seed) {
    for (std::int64_t c = 4; c <= opt.max; ++c)
      for (std::int64_t b = 3; b < c; ++b)
        for (std::int64_t a = 2; a < b; ++a)
          if (keep(a, b, c)) out.push_back({a, b, c});
    return out;
  }

  if (opt.max < 4) return out;
  std::mt19937_64 rng(*opt.seed);
  std::uniform_int_distribution<std::int64_t> pick(2, opt.max);
  std::set<std::array<std::int64_t, 3>> drawn;
  std::size_t attempts = 0;
  while (drawn.size() < opt.samples && attempts < opt.samples * 64) {
    ++attempts;
    std::array<std::int64_t, 3> t{pick(rng), pick(rng), pick(rng)};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || !keep(t[0], t[1], t[2])) continue;
    drawn.insert(t);
  }
  out.assign(drawn.begin(), drawn.end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return std::tie(l[2], l[1], l[0]) < std::tie(r[2], r[1], r[0]);
  });
  return out;
}

SweepRow evaluate_row(std::int64_t a, std::int64_t b, std::int64_t c) {
  SweepRow row;
  row.a = a;
  row.b = b;
  row.c = c;
  const Triple t = make_triple(a, b, c);
  row.g_oracle = frobenius_sieve(t);
  try {
    const FrobeniusResult res = frobenius(t);
    row.g_formula = res.g;
    row.label = res.label;
    row.structure_violation = res.structure_violation;
    if (res.params && res.params->step) {
      row.mu = res.params->step->mu;
      row.floor_r_u = res.params->floor_r_over_u();
    }
    if (res.params) {
      if (auto g6 = thm6b_g(*res.params)) row.thm6b_agree = *g6 == res.g_reduced;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.agree = row.g_formula && *row.g_formula == row.g_oracle;
  return row;
}

SweepReport run_sweep(const SweepOptions& opt) {
  const auto triples = sweep_triples(opt);
  SweepReport report;
  report.rows.resize(triples.size());

  const unsigned jobs = std::max(1u, opt.jobs);
  const auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < triples.size(); i += jobs) {
      const auto& t = triples[i];
      report.rows[i] = evaluate_row(t[0], t[1], t[2]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  SweepSummary& s = report.summary;
  s.rows = report.rows.size();
  for (const SweepRow& row : report.rows) {
    if (!row.agree) ++s.mismatches;
    if (!row.error.empty()) ++s.errors;
    ++s.per_case[std::string(to_string(row.label.principal))];
    if (row.label.lambda_gt_delta) ++s.lambda_gt_delta;
    if (row.label.deltap_gt_lambdap) ++s.deltap_gt_lambdap;
    if (row.label.principal == Case::MuBoundary) ++s.mu_boundary;
    if (row.structure_violation) ++s.structure_violations;
    if (row.thm6b_agree) {
      ++s.thm6b_checked;
      if (!*row.thm6b_agree) ++s.thm6b_mismatches;
    }
  }
  return report;
}

void write_csv(std::ostream& os, const SweepReport& report) {
  os << "a,b,c,g_formula,g_oracle,case,shortcuts,mu,floor_r_u,agree\n";
  for (const SweepRow& r : report.rows) {
    os << r.a << ',' << r.b << ',' << r.c << ',';
    if (r.g_formula) os << *r.g_formula;
    os << ',' << r.g_oracle << ',' << to_string(r.label.principal) << ',';
    const auto names = shortcut_names(r.label);
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "|" : "") << names[i];
    os << ',';
    if (r.mu) os << *r.mu;
    os << ',';
    if (r.floor_r_u) os << *r.floor_r_u;
    os << ',' << (r.agree ? "true" : "false") << '\n';
  }
}

std::string render_summary(const SweepSummary& s) {
  std::ostringstream os;
  os << "rows: " << s.rows << "\n";
  for (const char* name : {"SYLVESTER", "THM3", "THM5A", "THM5B", "MU_BOUNDARY"}) {
    auto it = s.per_case.find(name);
    os << "  " << std::left << std::setw(12) << name << std::right
       << (it == s.per_case.end() ? 0 : it->second) << "\n";
  }
  os << "shortcuts: LambdaGtDelta=" << s.lambda_gt_delta
     << " DeltaPGtLambdaP=" << s.deltap_gt_lambdap << "\n";
  os << "mu boundary rows: " << s.mu_boundary << "\n";
  os << "structure violations: " << s.structure_violations << "\n";
  os << "mirror formula checked: " << s.thm6b_checked << " (mismatches " << s.thm6b_mismatches
     << ")\n";
  os << "errors: " << s.errors << "\n";
  os << "mismatches: " << s.mismatches << "\n";
  return os.str();
}

}  // namespace frob
