#include "frob/oracle.hpp"

#include <cstdlib>
#include <string>

namespace frob {

std::size_t memory_cap() {
  const char* env = std::getenv("FROB_MEM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultMemCap;
  try {
    const Int v = parse_int(env);
    if (v > 0) return v.to_size();
  } catch (const std::exception&) {
  }
  return kDefaultMemCap;
}

bool RepresentabilityTable::representable(Int n) const {
  if (n < 0 || n > bound_) throw InvalidInput("representable: " + n.to_string() + " outside table");
  return bits_[n.to_size()] != 0;
}

RepresentabilityTable sieve(const Triple& t, Int bound, std::size_t cap) {
  if (bound < 0) throw InvalidInput("sieve: bound must be non-negative");
  if (bound + 1 > Int(cap))
    throw MemoryCapExceeded("sieve: table of " + (bound + 1).to_string() +
                            " entries exceeds the cap of " + std::to_string(cap));
  const std::size_t n = bound.to_size() + 1;
  std::vector<std::size_t> gens;
  for (Int g : t.generators())
    if (g <= bound) gens.push_back(g.to_size());

  std::vector<std::uint8_t> bits(n, 0);
  bits[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    std::uint8_t hit = 0;
    for (std::size_t g : gens)
      if (g <= i) hit |= bits[i - g];
    bits[i] = hit;
  }
  return {bound, std::move(bits)};
}

Int frobenius_sieve(const Triple& t) {
  if (t.has_unit()) return -1;
  const Int lo = t[0];
  const Int hi = t[t.size() - 1];
  Int bound = (lo - 1) * (hi - 1) + lo;
  for (;;) {
    const RepresentabilityTable table = sieve(t, bound);
    const std::size_t n = bound.to_size();
    const std::size_t need = lo.to_size();
    std::size_t top = n;
    while (table[top]) {
      if (top == 0) return -1;
      --top;
    }
    // A run of `lo` representable values means everything above is representable.
    if (n - top >= need) return Int(top);
    bound = bound * 2;
  }
}

std::vector<Int> residue_minima_scan(Int a, Int b, Int c, Int limit) {
  const std::size_t n = a.to_size();
  std::vector<Int> best(n, Int(-1));
  for (Int n2 = 0; c * n2 < limit; n2 += 1) {
    for (Int n1 = 0; b * n1 + c * n2 < limit; n1 += 1) {
      const Int v = b * n1 + c * n2;
      Int& slot = best[mod(v, a).to_size()];
      if (slot < 0 || v < slot) slot = v;
    }
  }
  return best;
}

std::set<Int> xset_oracle(const CaseParams& p) {
  if (!p.step) throw InvalidInput("xset_oracle: requires br > cq");
  const std::vector<Int> minima = residue_minima_scan(p.a, p.b, p.c, p.b * p.r + p.c * p.a);
  std::set<Int> out;
  for (Int x = 1; x <= p.r; x += 1) {
    const Int m = minima[mod(p.b * x, p.a).to_size()];
    if (m < 0) throw InternalError("xset_oracle: residue class not reached by the scan");
    if (mod(m, p.c) == 0) out.insert(x);
  }
  return out;
}

}  // namespace frob
