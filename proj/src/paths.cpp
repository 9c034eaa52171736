#include <bratteli/paths.hpp>

#include <cstdio>
#include <stdexcept>

namespace bratteli {

namespace {

// Bottom index arrives doubled so that parity failures (which the convention
// maps to zero) never round silently.
CountInt binom_twice(long n, long twice_k) {
  if (twice_k % 2 != 0) return 0;
  return binom(n, twice_k / 2);
}

void check_interval(LatticePoint from, LatticePoint to) {
  if (to.x < from.x)
    throw std::invalid_argument("path interval is reversed (to.x < from.x)");
  if (from.y < 0 || to.y < 0)
    throw std::invalid_argument("lattice points must stay in the quadrant");
}

// Ballot count over a span of r steps between heights b and d.
CountInt ballot_span(long r, long b, long d) {
  return binom_twice(r, r + d - b) - binom_twice(r, r + d + b + 2);
}

struct Enumerator {
  StepSet steps;
  long target_y = 0;
  bool collect = false;
  std::string cur;
  std::vector<std::string> out;
  unsigned long long count = 0;

  bool reachable(long remaining, long y) const {
    long gap = y > target_y ? y - target_y : target_y - y;
    if (gap > remaining) return false;
    if (steps == StepSet::Ballot && (remaining - gap) % 2 != 0) return false;
    return true;
  }

  void dfs(long remaining, long y) {
    if (remaining == 0) {
      if (y == target_y) {
        ++count;
        if (collect) out.push_back(cur);
      }
      return;
    }
    if (!reachable(remaining, y)) return;
    // branch in lexicographic step order: D < L < U
    if (y > 0) {
      cur.push_back('D');
      dfs(remaining - 1, y - 1);
      cur.pop_back();
    }
    if (steps == StepSet::Motzkin) {
      cur.push_back('L');
      dfs(remaining - 1, y);
      cur.pop_back();
    }
    cur.push_back('U');
    dfs(remaining - 1, y + 1);
    cur.pop_back();
  }
};

Enumerator run_enumeration(LatticePoint from, LatticePoint to, StepSet steps,
                           long cap, bool collect) {
  check_interval(from, to);
  long span = to.x - from.x;
  if (span > cap)
    throw std::invalid_argument("enumeration span exceeds the cap");
  Enumerator e;
  e.steps = steps;
  e.target_y = to.y;
  e.collect = collect;
  e.dfs(span, from.y);
  return e;
}

}  // namespace

CountInt count_ballot(LatticePoint from, LatticePoint to) {
  check_interval(from, to);
  return ballot_span(to.x - from.x, from.y, to.y);
}

CountInt count_motzkin(LatticePoint from, LatticePoint to) {
  check_interval(from, to);
  const long n = to.x - from.x;
  CountInt total = 0;
  for (long k = 0; k <= n; ++k)
    total += binom(n, k) * ballot_span(n - k, from.y, to.y);
  return total;
}

CountInt motzkin_number(long n) {
  if (n < 0) throw std::invalid_argument("motzkin_number of negative index");
  CountInt total = 0;
  const CountInt nf = factorial(n);
  for (long l = 0; 2 * l <= n; ++l)
    total += nf / (factorial(n - 2 * l) * factorial(l + 1) * factorial(l));
  return total;
}

CountInt catalan(long n) {
  if (n < 0) throw std::invalid_argument("catalan of negative index");
  return binom(2 * n, n) / (n + 1);
}

std::vector<std::string> enumerate_paths(LatticePoint from, LatticePoint to,
                                         StepSet steps, long cap) {
  return run_enumeration(from, to, steps, cap, true).out;
}

CountInt enumerate_count(LatticePoint from, LatticePoint to, StepSet steps,
                         long cap) {
  return CountInt(
      static_cast<unsigned long>(run_enumeration(from, to, steps, cap, false).count));
}

std::string Prob::str() const {
  if (exact_) return rat_str(r_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d_);
  return buf;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Prob parse_real(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  auto slash = s.find('/');
  bool has_dot = s.find('.') != std::string::npos ||
                 s.find('e') != std::string::npos ||
                 s.find('E') != std::string::npos;
  if (slash != std::string::npos || !has_dot) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("not a number: " + s);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
      throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return Prob(r);
  }
  size_t pos = 0;
  double d;
  try {
    d = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return Prob(d);
}

}  // namespace bratteli
