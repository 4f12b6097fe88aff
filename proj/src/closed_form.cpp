#include "qm/closed_form.hpp"

#include <stdexcept>

namespace qm::closed_form {

Rat mean_closed(unsigned n) {
    return Rat(2) * (Rat(n + 1) * harmonic(n) - Rat(n));
}

Rat variance_closed(unsigned n) {
    const Rat nn(n);
    const Rat np1(n + 1);
    return Rat(7) * nn * nn - Rat(4) * np1 * np1 * harmonic2(n) - Rat(2) * np1 * harmonic(n) +
           Rat(13) * nn;
}

Rat factorial_moment1_closed(unsigned n) { return mean_closed(n); }

Rat factorial_moment2_closed(unsigned n) {
    const Rat nn(n);
    const Rat np1(n + 1);
    const Rat h = harmonic(n);
    const Rat h2 = harmonic2(n);
    return Rat(4) * np1 * np1 * (h * h - h2) + Rat(4) * np1 * np1 * h - Rat(8) * np1 * h +
           Rat(8) * nn * h - Rat(4) * nn * h * (Rat(5) + Rat(3) * nn) + Rat(11) * nn * nn +
           Rat(15) * nn;
}

Rat log_pow_coeff(unsigned m, unsigned n) {
    return (harmonic(n + m) - harmonic(m)) * Rat(binomial(n + m, n));
}

Rat log2_pow_coeff(unsigned m, unsigned n) {
    const Rat dh = harmonic(n + m) - harmonic(m);
    const Rat dh2 = harmonic2(n + m) - harmonic2(m);
    return (dh * dh - dh2) * Rat(binomial(n + m, n));
}

// The six-piece closed form is stated in powers of log(1-u); with
// L = log(1/(1-u)) = -log(1-u) the signs fold into the term weights:
//   8 L^2/(1-u)^3 + 8 L/(1-u)^3 - 4 L^2/(1-u)^2 - 12 L/(1-u)^2
//   + 6/(1-u)^3 - 6/(1-u)^2.
Rat moment_gf2_coeff(unsigned n) {
    return Rat(8) * log2_pow_coeff(2, n) + Rat(8) * log_pow_coeff(2, n) -
           Rat(4) * log2_pow_coeff(1, n) - Rat(12) * log_pow_coeff(1, n) +
           Rat(6) * Rat(binomial(n + 2, n)) - Rat(6) * Rat(binomial(n + 1, n));
}

Rat moment_gf1_coeff(unsigned n) { return Rat(2) * log_pow_coeff(1, n); }

TruncatedSeries moment_gf_series(unsigned s, unsigned order) {
    switch (s) {
    case 0:
        return geometric_pow_series(1, order);
    case 1: {
        TruncatedSeries out(order);
        for (unsigned n = 0; n <= order; ++n) out[n] = moment_gf1_coeff(n);
        return out;
    }
    case 2: {
        TruncatedSeries out(order);
        for (unsigned n = 0; n <= order; ++n) out[n] = moment_gf2_coeff(n);
        return out;
    }
    default:
        throw std::invalid_argument("moment_gf_series: only orders 0..2 have closed forms");
    }
}

OdeResidualReport ode_residual_first_moment(unsigned N) {
    return ode_residual_first_moment(N, moment_gf_series(1, N));
}

OdeResidualReport ode_residual_first_moment(unsigned N, const TruncatedSeries& gf1) {
    if (N < 2) throw std::invalid_argument("ode_residual_first_moment: N must be at least 2");
    if (gf1.order() != N)
        throw std::invalid_argument("ode_residual_first_moment: series order must equal N");
    const unsigned W = N - 1;

    const auto lhs = series_derivative(gf1) -
                     series_mul(gf1.truncated(W), geometric_pow_series(1, W)).scaled(Rat(2));
    const auto rhs = geometric_pow_series(3, W).shifted_up(1, W).scaled(Rat(2)) +
                     geometric_pow_series(2, W).scaled(Rat(2));

    OdeResidualReport report;
    report.s = 1;
    report.order = N;
    report.residual = lhs - rhs;
    report.is_zero = report.residual.is_zero();
    return report;
}

OdeResidualReport ode_residual_moment(unsigned s, unsigned N) {
    if (s != 1 && s != 2)
        throw std::invalid_argument("ode_residual_moment: s must be 1 or 2");
    return ode_residual_moment(s, N, moment_gf_series(s, N));
}

OdeResidualReport ode_residual_moment(unsigned s, unsigned N, const TruncatedSeries& gfs) {
    if (s != 1 && s != 2)
        throw std::invalid_argument("ode_residual_moment: s must be 1 or 2");
    if (N < s + 2)
        throw std::invalid_argument("ode_residual_moment: N must be at least s+2");
    if (gfs.order() != N)
        throw std::invalid_argument("ode_residual_moment: series order must equal N");
    const unsigned W = N - 1;

    // Generating functions f_0..f_s at order N; the series under test
    // replaces the closed-form one at index s.
    std::vector<TruncatedSeries> gf;
    for (unsigned j = 0; j < s; ++j) gf.push_back(moment_gf_series(j, N));
    gf.push_back(gfs);

    // Derivative weights of z^2 about z = 1.
    const unsigned z2_weight[3] = {1, 2, 1};

    TruncatedSeries rhs(W);
    for (unsigned i = 0; i <= 2 && i <= s; ++i) {
        for (unsigned j = 0; i + j <= s; ++j) {
            for (unsigned k = 0; i + j + k <= s; ++k) {
                for (unsigned l = 0; i + j + k + l <= s; ++l) {
                    const unsigned m = s - i - j - k - l;
                    // Both derivative orders also shift by u^{k+m}, so
                    // truncating the factors to W-(k+m) loses nothing.
                    const unsigned t = W - k - m;
                    auto a = gf[j];
                    for (unsigned d = 0; d < k; ++d) a = series_derivative(a);
                    auto b = gf[l];
                    for (unsigned d = 0; d < m; ++d) b = series_derivative(b);
                    auto term = series_mul(a.truncated(t), b.truncated(t)).shifted_up(k + m, W);
                    Rat weight = Rat(z2_weight[i] * factorial(s)) /
                                 Rat(factorial(j) * factorial(k) * factorial(l) * factorial(m));
                    rhs = rhs + term.scaled(weight);
                }
            }
        }
    }

    OdeResidualReport report;
    report.s = s;
    report.order = N;
    report.residual = series_derivative(gf[s]) - rhs;
    report.is_zero = report.residual.is_zero();
    return report;
}

} // namespace qm::closed_form
