#include "qm/exact_arith.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace qm {

namespace {

// Memo tables grow monotonically and entries are immutable once published.
// The mutex is held for the whole lookup, so a concurrent caller can never
// observe a partially built row.
std::mutex table_mutex;
std::vector<std::vector<BigInt>> pascal_rows; // pascal_rows[n][k] = C(n, k)
std::vector<BigInt> factorials;               // factorials[n] = n!
std::vector<Rat> harmonic1_prefix;            // harmonic1_prefix[n] = H_n
std::vector<Rat> harmonic2_prefix;            // harmonic2_prefix[n] = sum 1/k^2

void extend_pascal(unsigned n) {
    if (pascal_rows.empty()) pascal_rows.push_back({BigInt(1)});
    while (pascal_rows.size() <= n) {
        const auto& prev = pascal_rows.back();
        std::vector<BigInt> row(pascal_rows.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (size_t k = 1; k + 1 < row.size(); ++k) row[k] = prev[k - 1] + prev[k];
        pascal_rows.push_back(std::move(row));
    }
}

} // namespace

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(table_mutex);
    extend_pascal(n);
    return pascal_rows[n][k];
}

BigInt factorial(unsigned n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (factorials.empty()) factorials.push_back(BigInt(1));
    while (factorials.size() <= n)
        factorials.push_back(factorials.back() * BigInt(static_cast<unsigned long>(factorials.size())));
    return factorials[n];
}

Rat harmonic(unsigned n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (harmonic1_prefix.empty()) harmonic1_prefix.push_back(Rat(0));
    while (harmonic1_prefix.size() <= n) {
        auto k = static_cast<unsigned long>(harmonic1_prefix.size());
        harmonic1_prefix.push_back(harmonic1_prefix.back() + Rat(1, k));
    }
    return harmonic1_prefix[n];
}

Rat harmonic2(unsigned n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (harmonic2_prefix.empty()) harmonic2_prefix.push_back(Rat(0));
    while (harmonic2_prefix.size() <= n) {
        auto k = static_cast<unsigned long>(harmonic2_prefix.size());
        harmonic2_prefix.push_back(harmonic2_prefix.back() + Rat(1, k * k));
    }
    return harmonic2_prefix[n];
}

std::string rat_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string decimal_string(const Rat& x, unsigned digits) {
    if (digits == 0) throw std::invalid_argument("decimal_string: digits must be positive");
    if (x == 0) return "0";

    const bool negative = x < 0;
    const BigInt p = abs(x.get_num());
    const BigInt& q = x.get_den();

    // Decimal exponent e with 10^e <= p/q < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
    auto pow10 = [](unsigned long k) {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, k);
        return t;
    };
    auto less_pow = [&](long exp) { // p/q < 10^exp ?
        return exp >= 0 ? p < q * pow10(static_cast<unsigned long>(exp))
                        : p * pow10(static_cast<unsigned long>(-exp)) < q;
    };
    while (less_pow(e)) --e;
    while (!less_pow(e + 1)) ++e;

    // Round p/q * 10^(digits-1-e) to the nearest integer, ties to even.
    const long shift = static_cast<long>(digits) - 1 - e;
    BigInt num = p, den = q;
    if (shift >= 0)
        num *= pow10(static_cast<unsigned long>(shift));
    else
        den *= pow10(static_cast<unsigned long>(-shift));
    BigInt mantissa, rem;
    mpz_fdiv_qr(mantissa.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const int half = cmp(rem * 2, den);
    if (half > 0 || (half == 0 && mpz_odd_p(mantissa.get_mpz_t())))
        mantissa += 1;
    if (mantissa == pow10(digits)) { // rounding carried into a new leading digit
        mantissa /= 10;
        ++e;
    }

    std::string mdigits = mantissa.get_str();
    std::string out;
    if (e >= 0 && e < static_cast<long>(digits)) {
        out = mdigits.substr(0, static_cast<size_t>(e) + 1);
        if (e + 1 < static_cast<long>(digits))
            out += "." + mdigits.substr(static_cast<size_t>(e) + 1);
    } else if (e < 0 && e >= -4) {
        out = "0." + std::string(static_cast<size_t>(-e) - 1, '0') + mdigits;
    } else {
        out = mdigits.substr(0, 1) + "." + mdigits.substr(1) + "e" +
              (e >= 0 ? "+" : "-") + std::to_string(e >= 0 ? e : -e);
    }
    return negative ? "-" + out : out;
}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(order) + 1)
        throw std::invalid_argument("TruncatedSeries: coefficient count does not match order");
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
    if (new_order > order())
        throw std::invalid_argument("TruncatedSeries::truncated: cannot extend order");
    TruncatedSeries out(new_order);
    for (unsigned i = 0; i <= new_order; ++i) out.coeffs_[i] = coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::shifted_up(unsigned k, unsigned target_order) const {
    TruncatedSeries out(target_order);
    for (unsigned i = k; i <= target_order; ++i) {
        if (i - k > order()) break;
        out.coeffs_[i] = coeffs_[i - k];
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& c) const {
    TruncatedSeries out(order());
    for (unsigned i = 0; i <= order(); ++i) out.coeffs_[i] = coeffs_[i] * c;
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("TruncatedSeries: order mismatch in +");
    TruncatedSeries out(order());
    for (unsigned i = 0; i <= order(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("TruncatedSeries: order mismatch in -");
    TruncatedSeries out(order());
    for (unsigned i = 0; i <= order(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    const unsigned n = a.order();
    TruncatedSeries out(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    if (a.order() == 0) throw std::invalid_argument("series_derivative: order 0 input");
    TruncatedSeries out(a.order() - 1);
    for (unsigned i = 1; i <= a.order(); ++i) out[i - 1] = a[i] * Rat(i);
    return out;
}

TruncatedSeries geometric_pow_series(unsigned m, unsigned order) {
    if (m == 0) throw std::invalid_argument("geometric_pow_series: m must be positive");
    TruncatedSeries out(order);
    for (unsigned n = 0; n <= order; ++n) out[n] = Rat(binomial(n + m - 1, n));
    return out;
}

TruncatedSeries log_inv_series(unsigned order) {
    TruncatedSeries out(order);
    for (unsigned n = 1; n <= order; ++n) out[n] = Rat(1, n);
    return out;
}

} // namespace qm
