#pragma once

#include "qm/exact_arith.hpp"

namespace qm::closed_form {

/// 2((n+1)H_n - n), the exact mean comparison count for n keys.
Rat mean_closed(unsigned n);

/// 7n^2 - 4(n+1)^2 H_n^(2) - 2(n+1)H_n + 13n, the exact variance.
Rat variance_closed(unsigned n);

/// First factorial moment in closed form; identical to mean_closed.
Rat factorial_moment1_closed(unsigned n);

/// Second factorial moment E[C(C-1)] in closed form, assembled from
/// harmonic numbers of both kinds.
Rat factorial_moment2_closed(unsigned n);

/// Coefficient of u^n in (1-u)^{-(m+1)} log(1/(1-u)):
/// (H_{n+m} - H_m) C(n+m, n).
Rat log_pow_coeff(unsigned m, unsigned n);

/// Coefficient of u^n in (1-u)^{-(m+1)} log^2(1/(1-u)):
/// ((H_{n+m} - H_m)^2 - (H_{n+m}^(2) - H_m^(2))) C(n+m, n).
Rat log2_pow_coeff(unsigned m, unsigned n);

/// Coefficient of u^n in the generating function of first factorial
/// moments, 2 (1-u)^{-2} log(1/(1-u)). Equals factorial_moment1_closed(n).
Rat moment_gf1_coeff(unsigned n);

/// Coefficient of u^n in the generating function of second factorial
/// moments, evaluated term by term from its six-piece closed form.
/// Equals factorial_moment2_closed(n).
Rat moment_gf2_coeff(unsigned n);

/// Factorial-moment generating function of order s in {0, 1, 2} as a
/// truncated series: s = 0 is 1/(1-u), higher orders come from the
/// coefficient formulas above.
TruncatedSeries moment_gf_series(unsigned s, unsigned order);

/// Residual of a moment differential identity at truncation order N.
struct OdeResidualReport {
    unsigned s = 0;
    unsigned order = 0;
    TruncatedSeries residual{0};
    bool is_zero = false;
};

/// Residual of f' - 2f/(1-u) = 2u/(1-u)^3 + 2/(1-u)^2 for the first-moment
/// generating function, as a series of order N-1. N >= 2. Identically zero
/// when the supplied series is the true one.
OdeResidualReport ode_residual_first_moment(unsigned N);
OdeResidualReport ode_residual_first_moment(unsigned N, const TruncatedSeries& gf1);

/// Residual of the general moment identity
///   f_s' = s! sum_{i+j+k+l+m=s} a_i D^k(f_j) D^m(f_l) u^{k+m} / (j! k! l! m!)
/// with weights a = (1, 2, 1, 0, ...), for s in {1, 2}, at order N >= s+2.
/// The overload substitutes the given series for f_s on both sides.
OdeResidualReport ode_residual_moment(unsigned s, unsigned N);
OdeResidualReport ode_residual_moment(unsigned s, unsigned N, const TruncatedSeries& gfs);

} // namespace qm::closed_form
