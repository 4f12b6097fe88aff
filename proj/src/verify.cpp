#include "qm/verify.hpp"

#include <algorithm>
#include <numeric>

#include "qm/closed_form.hpp"
#include "qm/errors.hpp"

namespace qm::verify {

namespace {

std::string range_note(const std::string& what) { return "checked " + what; }

CheckResult brute_quicksort_check(unsigned max_n_brute, unsigned brute_cap, unsigned exact_cap) {
    CheckResult r{"quicksort distribution: recurrence vs enumeration", true,
                  range_note("n <= " + std::to_string(max_n_brute))};
    for (unsigned n = 0; n <= max_n_brute; ++n) {
        if (!(pgf::comparison_counts(n, exact_cap) == brute::histogram_quicksort(n, brute_cap))) {
            r.pass = false;
            r.detail = "first mismatch at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult brute_bst_check(unsigned max_n_brute, unsigned brute_cap, unsigned exact_cap) {
    CheckResult r{"path-length distribution: recurrence vs enumeration", true,
                  range_note("n <= " + std::to_string(max_n_brute))};
    for (unsigned n = 0; n <= max_n_brute; ++n) {
        if (!(pgf::bst_path_counts(n, exact_cap) == brute::histogram_bst(n, brute_cap))) {
            r.pass = false;
            r.detail = "first mismatch at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult per_permutation_check(unsigned max_n_brute) {
    CheckResult r{"per-permutation cost vs reversed-insertion path length", true,
                  range_note("n <= " + std::to_string(max_n_brute))};
    for (unsigned n = 0; n <= max_n_brute && r.pass; ++n) {
        brute::Permutation perm(n);
        std::iota(perm.begin(), perm.end(), 1u);
        do {
            brute::Permutation reversed(perm.rbegin(), perm.rend());
            if (brute::quicksort_count(perm) != brute::bst_path_length(reversed) + 2ull * n) {
                r.pass = false;
                r.detail = "first mismatch at n = " + std::to_string(n);
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return r;
}

CheckResult total_and_range_check(unsigned max_n_exact, unsigned exact_cap) {
    CheckResult r{"distribution total is n! and cost range is tight", true,
                  range_note("n <= " + std::to_string(max_n_exact))};
    for (unsigned n = 0; n <= max_n_exact; ++n) {
        const auto dist = pgf::comparison_counts(n, exact_cap);
        const bool total_ok = dist.total() == factorial(n);
        const bool range_ok =
            n == 0 || (dist.max_cost() == static_cast<std::uint64_t>(n) * (n + 3) / 2 &&
                       dist.min_cost >= n);
        if (!total_ok || !range_ok) {
            r.pass = false;
            r.detail = "first mismatch at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult closed_form_check(unsigned max_n_exact, unsigned exact_cap) {
    CheckResult r{"closed-form mean/variance vs exact distribution", true,
                  range_note("n <= " + std::to_string(max_n_exact))};
    for (unsigned n = 0; n <= max_n_exact; ++n) {
        const auto report = pgf::moments_report(n, 2, exact_cap);
        if (report.mean != closed_form::mean_closed(n) ||
            report.variance != closed_form::variance_closed(n)) {
            r.pass = false;
            r.detail = "first mismatch at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult factorial_moment_check(unsigned max_n_exact, unsigned exact_cap) {
    CheckResult r{"factorial moments: distribution vs both closed routes", true,
                  range_note("n <= " + std::to_string(max_n_exact))};
    for (unsigned n = 0; n <= max_n_exact; ++n) {
        const auto dist = pgf::comparison_counts(n, exact_cap);
        const Rat b1 = pgf::factorial_moment(dist, 1);
        const Rat b2 = pgf::factorial_moment(dist, 2);
        if (b1 != closed_form::factorial_moment1_closed(n) ||
            b1 != closed_form::moment_gf1_coeff(n) ||
            b2 != closed_form::factorial_moment2_closed(n) ||
            b2 != closed_form::moment_gf2_coeff(n)) {
            r.pass = false;
            r.detail = "first mismatch at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult variance_assembly_check(unsigned max_n_exact) {
    CheckResult r{"variance assembly from closed factorial moments", true,
                  range_note("n <= " + std::to_string(max_n_exact))};
    for (unsigned n = 0; n <= max_n_exact; ++n) {
        const Rat b1 = closed_form::factorial_moment1_closed(n);
        const Rat b2 = closed_form::factorial_moment2_closed(n);
        if (b2 - b1 * b1 + b1 != closed_form::variance_closed(n)) {
            r.pass = false;
            r.detail = "first mismatch at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult shift_identity_suite(unsigned max_n_exact, unsigned exact_cap) {
    CheckResult r{"comparison counts equal path lengths shifted by 2n", true,
                  range_note("n <= " + std::to_string(max_n_exact))};
    for (unsigned n = 0; n <= max_n_exact; ++n) {
        if (!pgf::shift_identity_check(n, exact_cap)) {
            r.pass = false;
            r.detail = "first mismatch at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult log_pow_dual_route(unsigned series_order) {
    CheckResult r{"log-power coefficients vs series algebra", true,
                  range_note("m <= 4, n <= " + std::to_string(series_order))};
    const auto log_series = log_inv_series(series_order);
    const auto log2_series = series_mul(log_series, log_series);
    for (unsigned m = 0; m <= 4 && r.pass; ++m) {
        const auto pow_series = geometric_pow_series(m + 1, series_order);
        const auto direct1 = series_mul(pow_series, log_series);
        const auto direct2 = series_mul(pow_series, log2_series);
        for (unsigned n = 0; n <= series_order; ++n) {
            if (closed_form::log_pow_coeff(m, n) != direct1[n] ||
                closed_form::log2_pow_coeff(m, n) != direct2[n]) {
                r.pass = false;
                r.detail = "first mismatch at m = " + std::to_string(m) +
                           ", n = " + std::to_string(n);
                break;
            }
        }
    }
    return r;
}

CheckResult ode_residual_check(unsigned series_order) {
    CheckResult r{"moment ODE residuals vanish", true,
                  range_note("order " + std::to_string(series_order))};
    if (!closed_form::ode_residual_first_moment(series_order).is_zero) {
        r.pass = false;
        r.detail = "first-moment residual is nonzero";
        return r;
    }
    for (unsigned s = 1; s <= 2; ++s) {
        if (!closed_form::ode_residual_moment(s, series_order).is_zero) {
            r.pass = false;
            r.detail = "residual nonzero at s = " + std::to_string(s);
            return r;
        }
    }
    return r;
}

} // namespace

Report run(unsigned max_n_brute, unsigned max_n_exact, unsigned series_order, unsigned brute_cap,
           unsigned exact_cap) {
    if (max_n_brute > brute_cap)
        throw resource_limit_error("verify: max_n_brute " + std::to_string(max_n_brute) +
                                   " exceeds brute-force cap " + std::to_string(brute_cap));
    if (series_order < 4)
        throw std::invalid_argument("verify: series_order must be at least 4");
    Report report;
    report.checks.push_back(brute_quicksort_check(max_n_brute, brute_cap, exact_cap));
    report.checks.push_back(brute_bst_check(max_n_brute, brute_cap, exact_cap));
    report.checks.push_back(per_permutation_check(max_n_brute));
    report.checks.push_back(total_and_range_check(max_n_exact, exact_cap));
    report.checks.push_back(closed_form_check(max_n_exact, exact_cap));
    report.checks.push_back(factorial_moment_check(max_n_exact, exact_cap));
    report.checks.push_back(variance_assembly_check(max_n_exact));
    report.checks.push_back(shift_identity_suite(max_n_exact, exact_cap));
    report.checks.push_back(log_pow_dual_route(series_order));
    report.checks.push_back(ode_residual_check(series_order));
    return report;
}

} // namespace qm::verify
