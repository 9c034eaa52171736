#include <bratteli/fusscat.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <bratteli/graphs.hpp>

namespace bratteli {

namespace {

void check_order(int s) {
  if (s < 2) throw std::invalid_argument("tree order must be at least 2");
}

// l/((s+1)n+l) * binom((s+1)n+l, n), always an integer
CountInt raney(int s, long l, long n) {
  CountInt big = binom((s + 1) * n + l, n) * l;
  CountInt den = (s + 1) * n + l;
  if (big % den != 0)
    throw std::logic_error("Raney value failed to be integral");
  return big / den;
}

// first n+1 coefficients of G_s, cached per order; the cache is extended
// under a lock and each caller gets its own copy of the prefix
std::vector<CountInt> base_coeffs(int s, long n) {
  static std::map<int, std::vector<CountInt>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& c = cache[s];
  while (static_cast<long>(c.size()) <= n)
    c.push_back(fuss_catalan(s, static_cast<long>(c.size())));
  return std::vector<CountInt>(c.begin(), c.begin() + n + 1);
}

CountInt convolution_coeff(int s, long l, long n) {
  auto c = base_coeffs(s, n);
  std::vector<CountInt> acc(n + 1, 0);
  acc[0] = 1;
  for (long rep = 0; rep < l; ++rep) {
    std::vector<CountInt> nxt(n + 1, 0);
    for (long i = 0; i <= n; ++i) {
      if (acc[i] == 0) continue;
      for (long j = 0; i + j <= n; ++j) nxt[i + j] += acc[i] * c[j];
    }
    acc = std::move(nxt);
  }
  return acc[n];
}

}  // namespace

CountInt fuss_catalan(int s, long n) {
  check_order(s);
  if (n < 0) throw std::invalid_argument("fuss_catalan: n must be >= 0");
  return raney(s, 1, n);
}

CountInt power_coeff(int s, long l, long n) {
  check_order(s);
  if (l < 1) throw std::invalid_argument("power_coeff: l must be >= 1");
  if (n < 0) throw std::invalid_argument("power_coeff: n must be >= 0");
  CountInt by_formula = raney(s, l, n);
  CountInt by_series = convolution_coeff(s, l, n);
  if (by_formula != by_series)
    throw std::logic_error("power_coeff: Raney formula and convolution disagree");
  return by_formula;
}

double critical_point(int s) {
  check_order(s);
  return std::pow(static_cast<double>(s), s) /
         std::pow(static_cast<double>(s) + 1.0, s + 1);
}

GenFnEval g_eval(int s, double z) {
  check_order(s);
  double crit = critical_point(s);
  if (!(z >= -1e-15) || !(z <= crit + 1e-12))
    throw std::invalid_argument("g_eval: z outside [0, critical]");
  double zc = std::min(std::max(z, 0.0), crit);

  const double tol = 1e-13;
  // At the critical point the fixed point is (s+1)/s exactly and the root is
  // double, which defeats residual-driven iteration; within a few ulps of
  // critical, return the closed form and withhold the (infinite) derivative.
  if (zc >= crit - 1e-15) {
    GenFnEval out;
    out.s = s;
    out.z = z;
    out.value = (s + 1.0) / s;
    out.residual = std::fabs(zc * std::pow(out.value, s + 1) + 1.0 - out.value);
    if (out.residual > tol)
      throw std::runtime_error("g_eval: residual did not converge");
    return out;
  }
  double lo = 1.0;
  double hi = (s + 1.0) / s;
  double g = 1.0;
  auto res = [&](double x) { return zc * std::pow(x, s + 1) + 1.0 - x; };
  double h = res(g);
  for (int iter = 0; iter < 200 && std::fabs(h) > tol; ++iter) {
    if (h > 0)
      lo = g;
    else
      hi = g;
    double hp = (s + 1) * zc * std::pow(g, s) - 1.0;
    double newton = hp < -1e-18 ? g - h / hp : lo;
    if (newton <= lo || newton >= hi)
      g = 0.5 * (lo + hi);
    else
      g = newton;
    h = res(g);
  }
  if (std::fabs(h) > tol)
    throw std::runtime_error("g_eval: residual did not converge");

  GenFnEval out;
  out.s = s;
  out.z = z;
  out.value = g;
  out.residual = std::fabs(h);
  double denom = 1.0 - (s + 1) * zc * std::pow(g, s);
  if (denom > 1e-7) out.derivative = std::pow(g, s + 1) / denom;
  return out;
}

double lln_limit(double eta) { return lln_limit_experimental(2, eta); }

double lln_limit_experimental(int s, double eta) {
  check_order(s);
  if (!(eta >= 0.0) || eta >= critical_point(s))
    throw std::invalid_argument("lln constant requires eta in [0, critical)");
  auto e = g_eval(s, eta);
  if (!e.derivative)
    throw std::invalid_argument("lln constant: eta too close to critical");
  return 2.0 * eta * (*e.derivative) / e.value;
}

namespace {

CountInt bracket_formula(int s, long n, long h, long r) {
  if (n < h) throw std::invalid_argument("bracket: n below ceil(|w|/2)");
  long k = n - h;
  CountInt big = binom((s + 1) * k + r, k) * r;
  CountInt den = (s + 1) * k + r;
  if (big % den != 0)
    throw std::logic_error("bracket value failed to be integral");
  return big / den;
}

}  // namespace

CountInt bracket_dim(int s, long n, const std::string& w) {
  check_order(s);
  if (!word_admissible(w, s, true))
    throw std::invalid_argument("bracket_dim: word not admissible (rooted)");
  long len = static_cast<long>(w.size());
  return bracket_formula(s, n, (len + 1) / 2, label_sum(w));
}

CountInt bracket_dim_derooted(int s, long n, const std::string& w) {
  check_order(s);
  if (!word_admissible(w, s, false))
    throw std::invalid_argument(
        "bracket_dim_derooted: word not admissible (stripped)");
  long len = static_cast<long>(w.size());
  return bracket_formula(s, n, (len + 1) / 2, s - 1 + label_sum(w));
}

}  // namespace bratteli
