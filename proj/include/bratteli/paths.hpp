#pragma once

// Quadrant-restricted lattice path counting. Ballot paths move by +1/-1 per
// step, Motzkin paths by +1/0/-1, and the height never goes below zero. The
// closed forms come from the reflection principle; an exhaustive enumeration
// oracle with a span cap backs them in tests and feeds the golden files.

#include <string>
#include <vector>

#include <bratteli/numeric.hpp>

namespace bratteli {

struct LatticePoint {
  long x = 0;  // step index
  long y = 0;  // height
};

enum class StepSet { Ballot, Motzkin };

// Ballot paths from `from` to `to`:
//   binom(n, (n+d-b)/2) - binom(n, (n+d+b+2)/2),  n = to.x - from.x,
// with b = from.y, d = to.y, and binomials vanishing on fractional or
// out-of-range bottom indices. Throws std::invalid_argument if to.x < from.x.
CountInt count_ballot(LatticePoint from, LatticePoint to);

// Motzkin paths from `from` to `to`: sum over the number of level steps k of
// binom(n,k) times the ballot count over the remaining n-k slots.
CountInt count_motzkin(LatticePoint from, LatticePoint to);

// m_n = sum_l n! / ((n-2l)! (l+1)! l!), the closed form for
// count_motzkin((0,0),(n,0)).
CountInt motzkin_number(long n);

CountInt catalan(long n);

// Enumeration oracle. Returns every admissible step sequence as a string over
// {U,D} (ballot) or {U,L,D} (Motzkin), lexicographically ordered. Spans above
// `cap` are rejected to guard against exponential blowup.
std::vector<std::string> enumerate_paths(LatticePoint from, LatticePoint to,
                                         StepSet steps, long cap = 16);

// Count-only oracle without materializing sequences; same cap rule.
CountInt enumerate_count(LatticePoint from, LatticePoint to, StepSet steps,
                         long cap = 16);

}  // namespace bratteli
