// frob: Frobenius numbers of three generators, with explanations, walk
// traces, X-set listings, and an exhaustive verification sweep.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "frob/formulas.hpp"
#include "frob/oracle.hpp"
#include "frob/params.hpp"
#include "frob/report.hpp"
#include "frob/walk.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

const frob::Int kInputCap = (std::int64_t{1} << 31) - 1;

frob::Triple parse_triple(const std::vector<std::string>& args) {
  if (args.size() != 3) throw frob::InvalidInput("expected exactly three integers");
  frob::Int v[3];
  for (std::size_t i = 0; i < 3; ++i) {
    v[i] = frob::parse_int(args[i]);
    if (v[i] < 1 || v[i] > kInputCap)
      throw frob::InvalidInput("inputs must lie in [1, 2^31-1], got " + args[i]);
  }
  return frob::make_triple(v[0], v[1], v[2]);
}

// Triple that the walk and X-set views can run on directly.
frob::CaseParams require_walkable(const frob::Triple& t) {
  if (!t.is_proper() || !t.pairwise_coprime())
    throw frob::InvalidInput("this view needs a pairwise-coprime triple a < b < c");
  const frob::BaseParams base = frob::compute_base(t);
  if (base.ell <= base.k)
    throw frob::InvalidInput("ell = " + base.ell.to_string() + " <= k = " + base.k.to_string() +
                             ": g reduces to the two-generator formula, no walk to show");
  return frob::compute_case_params(t);
}

int cmd_compute(const std::vector<std::string>& args, const std::string& method, bool as_json,
                bool explain) {
  const auto strategy = frob::parse_strategy(method);
  if (!strategy) throw frob::InvalidInput("unknown --method '" + method + "'");
  const frob::FrobeniusResult res = frob::frobenius(parse_triple(args), *strategy);
  if (as_json) {
    std::cout << frob::to_json(res).dump() << "\n";
  } else if (explain) {
    std::cout << frob::render_explain(res);
  } else {
    std::cout << res.g << "\n";
  }
  return kOk;
}

int cmd_verify(const frob::SweepOptions& opt, const std::string& out_path) {
  const frob::SweepReport report = frob::run_sweep(opt);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw frob::InvalidInput("cannot open '" + out_path + "' for writing");
    frob::write_csv(out, report);
  }
  std::cout << frob::render_summary(report.summary);
  for (const frob::SweepRow& row : report.rows) {
    if (row.agree) continue;
    std::cout << "MISMATCH (" << row.a << "," << row.b << "," << row.c << "): formula=";
    if (row.g_formula)
      std::cout << *row.g_formula;
    else
      std::cout << "error[" << row.error << "]";
    std::cout << " oracle=" << row.g_oracle << "\n";
  }
  return report.summary.mismatches == 0 ? kOk : kMismatch;
}

int cmd_trace(const std::vector<std::string>& args, std::int64_t x0) {
  const frob::CaseParams p = require_walkable(parse_triple(args));
  const frob::WalkFrame frame = frob::WalkFrame::of(p);
  std::cout << "a=" << p.a << " b=" << p.b << " c=" << p.c << " ell=" << p.ell << " q=" << p.q
            << " r=" << p.r << "\n";
  std::cout << frob::render_trace(frob::walk_trace(frame, x0));
  return kOk;
}

int cmd_xset(const std::vector<std::string>& args) {
  const frob::CaseParams p = require_walkable(parse_triple(args));
  if (!p.step) throw frob::InvalidInput("br < cq: the X-set is defined only when br > cq");
  frob::XSetData xd;
  bool violation = false;
  try {
    xd = frob::build_xset(p);
  } catch (const frob::StructureViolation& e) {
    std::cerr << "warning: " << e.what() << "\n";
    violation = true;
  }
  if (violation) return kMismatch;
  std::cout << frob::render_xset(p, xd, frob::xset_oracle(p));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius numbers of three generators"};
  app.require_subcommand(1);

  std::vector<std::string> triple_args;
  std::string method = "auto";
  bool as_json = false;
  bool explain = false;
  auto* compute = app.add_subcommand("compute", "Compute g(a, b, c)");
  compute->add_option("values", triple_args, "a b c")->required()->expected(3);
  compute->add_option("--method", method, "auto|formula|brauer|lemma3|sieve");
  compute->add_flag("--json", as_json, "Emit the result as JSON");
  compute->add_flag("--explain", explain, "Show case, parameters, X-set, and reduction");

  frob::SweepOptions sweep;
  std::string out_path;
  std::uint64_t seed = 0;
  sweep.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "Compare the closed forms against the sieve");
  verify->add_option("--max", sweep.max, "Largest generator c")->check(CLI::Range(2, 100000));
  verify->add_flag("--pairwise-only", sweep.pairwise_only, "Only pairwise-coprime triples");
  verify->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--out", out_path, "Write the per-triple CSV report here");
  auto* seed_opt = verify->add_option("--seed", seed, "Sample random triples with this seed");
  verify->add_option("--samples", sweep.samples, "Triples to draw in sampled mode");

  std::int64_t x0 = 1;
  auto* trace = app.add_subcommand("trace", "Print the residue walk from (x, 0)");
  trace->add_option("values", triple_args, "a b c")->required()->expected(3);
  trace->add_option("--x", x0, "Start class")->required();

  auto* xset = app.add_subcommand("xset", "List the X-set with its gaps and the brute-force set");
  xset->add_option("values", triple_args, "a b c")->required()->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(triple_args, method, as_json, explain);
    if (*verify) {
      if (*seed_opt) sweep.seed = seed;
      return cmd_verify(sweep, out_path);
    }
    if (*trace) return cmd_trace(triple_args, x0);
    if (*xset) return cmd_xset(triple_args);
  } catch (const frob::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const frob::MemoryCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const frob::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
