#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qm {

// All counting and closed-form work runs on GMP integers/rationals.
// mpq_class results of arithmetic are always canonical: lowest terms,
// positive denominator. Values constructed from raw numerator/denominator
// pairs must go through make_rat, which canonicalizes eagerly.
using BigInt = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms with positive denominator. den must be nonzero.
Rat make_rat(const BigInt& num, const BigInt& den);

/// C(n, k); zero when k > n. Backed by a monotone Pascal-row table.
BigInt binomial(unsigned n, unsigned k);

/// n!, memoized prefix table.
BigInt factorial(unsigned n);

/// Sum of 1/k for k in [1, n]. harmonic(0) == 0.
Rat harmonic(unsigned n);

/// Sum of 1/k^2 for k in [1, n]. harmonic2(0) == 0.
Rat harmonic2(unsigned n);

/// "p/q" for non-integers, "p" otherwise.
std::string rat_string(const Rat& x);

/// Decimal rendering with exactly `digits` significant digits
/// (round half to even). Approximate by construction; exact values
/// travel as rat_string.
std::string decimal_string(const Rat& x, unsigned digits = 20);

/// Power series in one variable truncated at a fixed order: coefficients
/// of u^0 .. u^order. Binary operations demand equal orders; silent
/// truncation mismatches are rejected as contract violations.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(unsigned order) : coeffs_(order + 1) {}

    /// coeffs.size() must be order + 1.
    TruncatedSeries(unsigned order, std::vector<Rat> coeffs);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const Rat& operator[](unsigned i) const { return coeffs_.at(i); }
    Rat& operator[](unsigned i) { return coeffs_.at(i); }

    bool is_zero() const;

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

    /// Drop coefficients above new_order (new_order <= order).
    TruncatedSeries truncated(unsigned new_order) const;

    /// Multiply by u^k, then truncate or zero-pad to target_order.
    TruncatedSeries shifted_up(unsigned k, unsigned target_order) const;

    TruncatedSeries scaled(const Rat& c) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;

private:
    std::vector<Rat> coeffs_;
};

/// Cauchy product truncated to the common order of a and b.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// d/du, one order lower. Requires order >= 1.
TruncatedSeries series_derivative(const TruncatedSeries& a);

/// 1/(1-u)^m up to u^order; coefficient of u^n is C(n+m-1, n). m >= 1.
TruncatedSeries geometric_pow_series(unsigned m, unsigned order);

/// log(1/(1-u)) up to u^order; coefficient of u^n is 1/n (0 at n = 0).
TruncatedSeries log_inv_series(unsigned order);

} // namespace qm
