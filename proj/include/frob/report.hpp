#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "frob/formulas.hpp"
#include "frob/walk.hpp"

namespace frob {

// Numbers that fit in int64 serialize as JSON numbers, wider ones as strings.
nlohmann::json to_json(Int v);

// Stable schema:
//   {"a","b","c","g","case","shortcuts":[...],
//    "params":{"k","ell","q","r","u","lambda","A","B","Lambda","Delta",
//              "LambdaP","DeltaP","mu"},
//    "xset":{"xs":[],"ys":[],"xhat","m","w"},
//    "reduction":[{"d","third"}],"method"}
// plus "reduced" (the pairwise-coprime set the case analysis ran on) and
// "structure_violation". Absent branches serialize as null.
nlohmann::json to_json(const FrobeniusResult& r);

std::vector<std::string> shortcut_names(const CaseLabel& label);

// Multi-line human-readable explanation of a result.
std::string render_explain(const FrobeniusResult& r);

// One row per walk step: t, x, y, v, and a min / fake marker.
std::string render_trace(const std::vector<WalkRow>& rows);

// Generated X-set, indices, sorted gaps, and the brute-force set side by side.
std::string render_xset(const CaseParams& p, const XSetData& xd, const std::set<Int>& oracle);

struct SweepRow {
  Int a, b, c;
  std::optional<Int> g_formula;  // empty when the dispatcher threw
  Int g_oracle;
  CaseLabel label;
  std::optional<Int> mu;
  std::optional<Int> floor_r_u;
  bool agree = false;
  bool structure_violation = false;
  std::optional<bool> thm6b_agree;  // present when the mirror formula's guard held
  std::string error;
};

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
  std::map<std::string, std::size_t> per_case;
  std::size_t lambda_gt_delta = 0;
  std::size_t deltap_gt_lambdap = 0;
  std::size_t mu_boundary = 0;
  std::size_t structure_violations = 0;
  std::size_t thm6b_checked = 0;
  std::size_t thm6b_mismatches = 0;
};

struct SweepOptions {
  std::int64_t max = 120;
  bool pairwise_only = false;
  unsigned jobs = 1;
  // Sampled mode: draw `samples` triples with this seed instead of
  // enumerating everything.
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1000;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  SweepSummary summary;
};

// Triples 2 <= a < b < c <= max with gcd(a,b,c) = 1, in lexicographic order
// of (c, b, a). Sampled mode returns a sorted, deduplicated random subset.
std::vector<std::array<std::int64_t, 3>> sweep_triples(const SweepOptions& opt);

SweepRow evaluate_row(std::int64_t a, std::int64_t b, std::int64_t c);

// Rows come back in sweep_triples order regardless of the job count.
SweepReport run_sweep(const SweepOptions& opt);

// Header a,b,c,g_formula,g_oracle,case,shortcuts,mu,floor_r_u,agree then one
// line per row; shortcuts are '|'-separated, absent values are empty.
void write_csv(std::ostream& os, const SweepReport& report);
std::string render_summary(const SweepSummary& s);

}  // namespace frob
