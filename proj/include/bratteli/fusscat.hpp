#pragma once

// Fuss-Catalan numbers, coefficients of powers of the generating function
// G_s (the power-series solution of G = z G^{s+1} + 1), its numeric
// evaluation on [0, s^s/(s+1)^(s+1)], bracket dimension formulas for the
// s-Fuss-Catalan trees, and the exit-time LLN constant.

#include <optional>
#include <string>

#include <bratteli/numeric.hpp>

namespace bratteli {

struct GenFnEval {
  int s = 2;
  double z = 0.0;
  double value = 1.0;
  // absent when z is so close to the critical point that the closed form
  // G^(s+1)/(1 - (s+1) z G^s) loses all precision; callers handle the
  // critical case explicitly
  std::optional<double> derivative;
  double residual = 0.0;
};

// C^s_n = (1/((s+1)n+1)) binom((s+1)n+1, n), exactly.
CountInt fuss_catalan(int s, long n);

// [z^n] G_s^l, computed by the Raney formula l/((s+1)n+l) binom((s+1)n+l, n)
// and cross-checked against the l-fold convolution of the C^s sequence on
// every call; a mismatch throws std::logic_error.
CountInt power_coeff(int s, long l, long n);

// Radius of convergence s^s/(s+1)^(s+1) of G_s.
double critical_point(int s);

// Power-series branch of G = zG^{s+1} + 1: the smallest real fixed point in
// [1, (s+1)/s], by safeguarded Newton with bisection fallback. Accepts
// 0 <= z <= critical_point(s) + 1e-12, targets residual 1e-13 within 200
// iterations.
GenFnEval g_eval(int s, double z);

// Limit of (N_k - k)/r(t_k) for the transient walk on the Fibonacci tree:
// f(eta) = 2 eta G'(eta)/G(eta), finite exactly on [0, 4/27). The increment
// mean E[Y^(j)] is j times this, so the label-sum normalizer makes the limit
// end-independent.
double lln_limit(double eta);

// Same formula on the order-s tree. Only the s = 2 value is backed by the
// exact increment law above; for larger s it is a conjectured extension,
// exposed separately so simulations can probe it.
double lln_limit_experimental(int s, double eta);

// Bracket dimension of the rooted tree word w (admissible, starts with the
// label s): with h = ceil(|w|/2), r = label_sum(w), k = n - h, it equals
// (r/((s+1)k+r)) binom((s+1)k+r, k), and counts rooted walks of length
// 2n - (|w| mod 2) ending at w. Requires n >= h.
CountInt bracket_dim(int s, long n, const std::string& w);

// Derooted variant: w is a derooted-tree word (stripped of the leading s).
// Substituting r -> r-1 and |w| -> |w|-1 of the rooted word s.w gives
// R = s - 1 + label_sum(w) and h = ceil(|w|/2).
CountInt bracket_dim_derooted(int s, long n, const std::string& w);

}  // namespace bratteli
