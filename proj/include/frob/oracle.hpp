#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "frob/arith.hpp"
#include "frob/params.hpp"

namespace frob {

// Default cap on brute-force table entries; FROB_MEM_CAP overrides it.
inline constexpr std::size_t kDefaultMemCap = std::size_t{1} << 28;

// Current cap: FROB_MEM_CAP when set to a positive integer, else the default.
std::size_t memory_cap();

class RepresentabilityTable {
 public:
  RepresentabilityTable() = default;
  RepresentabilityTable(Int bound, std::vector<std::uint8_t> bits)
      : bound_(bound), bits_(std::move(bits)) {}

  Int bound() const { return bound_; }
  // True iff n is a non-negative combination of the generators. 0 <= n <= bound.
  bool representable(Int n) const;
  bool operator[](std::size_t n) const { return bits_.at(n) != 0; }

 private:
  Int bound_ = -1;
  std::vector<std::uint8_t> bits_;
};

// bits[0] = 1; bits[n] = OR over generators g <= n of bits[n - g].
RepresentabilityTable sieve(const Triple& t, Int bound, std::size_t cap = memory_cap());

// Largest non-representable integer, -1 if there is none. The table bound
// starts at the Schur bound (a-1)(c-1) plus a and the answer is certified by
// a run of `a` consecutive representable values above it; the bound doubles
// if the run is missing.
Int frobenius_sieve(const Triple& t);

// Per-class minima of b*n1 + c*n2 modulo a, found by enumerating every
// combination below `limit`. Entry i is the minimum congruent to i (mod a),
// or -1 if none was seen.
std::vector<Int> residue_minima_scan(Int a, Int b, Int c, Int limit);

// {x in 1..r : m(bx) = 0 (mod c)} computed from a direct residue scan below
// b*r + c*a. Requires the br > cq branch.
std::set<Int> xset_oracle(const CaseParams& p);

}  // namespace frob
