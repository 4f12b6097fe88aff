#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qm/brute_oracle.hpp"
#include "qm/closed_form.hpp"
#include "qm/errors.hpp"
#include "qm/montecarlo.hpp"
#include "qm/output.hpp"
#include "qm/pgf_engine.hpp"
#include "qm/verify.hpp"

namespace {

// Exit codes are a stable CI contract:
//   0 success, 1 verification failure, 2 usage error,
//   3 resource limit exceeded, 4 unsupported combination.
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitUnsupported = 4;

struct DistOptions {
    unsigned n = 0;
    std::string statistic = "comparisons";
    std::string format = "json";
    unsigned max_n = qm::pgf::kDefaultMaxN;
};

struct MomentsOptions {
    unsigned n = 0;
    unsigned order = 2;
    std::string source = "exact";
    std::string format = "json";
    unsigned max_n = qm::pgf::kDefaultMaxN;
};

struct VerifyOptions {
    unsigned max_n_brute = 7;
    unsigned max_n_exact = 30;
    unsigned series_order = 60;
    unsigned brute_cap = qm::brute::kDefaultCap;
    unsigned max_n = qm::pgf::kDefaultMaxN;
    std::string format = "json";
};

struct SimulateOptions {
    unsigned n = 0;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    std::string format = "json";
};

int run_dist(const DistOptions& opt) {
    const auto dist = opt.statistic == "comparisons"
                          ? qm::pgf::comparison_counts(opt.n, opt.max_n)
                          : qm::pgf::bst_path_counts(opt.n, opt.max_n);
    if (opt.format == "csv")
        std::cout << qm::output::dist_csv(dist, opt.statistic);
    else
        std::cout << qm::output::to_json_text(qm::output::dist_envelope(dist, opt.statistic, opt.max_n));
    return 0;
}

int run_moments(const MomentsOptions& opt) {
    qm::pgf::MomentReport report;
    if (opt.source == "exact") {
        if (opt.order < 2) {
            std::cerr << "error: source=exact requires --order >= 2\n";
            return kExitUsage;
        }
        report = qm::pgf::moments_report(opt.n, opt.order, opt.max_n);
    } else {
        if (opt.order < 1) {
            std::cerr << "error: --order must be at least 1\n";
            return kExitUsage;
        }
        if (opt.order > 2) {
            std::cerr << "error: no closed form beyond the second factorial moment; "
                         "use --source exact\n";
            return kExitUnsupported;
        }
        report.n = opt.n;
        report.source = qm::pgf::MomentSource::ClosedForm;
        report.betas.push_back(qm::closed_form::factorial_moment1_closed(opt.n));
        if (opt.order == 2)
            report.betas.push_back(qm::closed_form::factorial_moment2_closed(opt.n));
        report.mean = qm::closed_form::mean_closed(opt.n);
        report.variance = qm::closed_form::variance_closed(opt.n);
    }
    if (opt.format == "csv")
        std::cout << qm::output::moments_csv(report, opt.source);
    else
        std::cout << qm::output::to_json_text(qm::output::moments_envelope(report, opt.source));
    return 0;
}

int run_verify(const VerifyOptions& opt) {
    const auto report = qm::verify::run(opt.max_n_brute, opt.max_n_exact, opt.series_order,
                                        opt.brute_cap, opt.max_n);
    if (opt.format == "csv")
        std::cout << qm::output::verify_csv(report);
    else
        std::cout << qm::output::to_json_text(qm::output::verify_envelope(
            report, opt.max_n_brute, opt.max_n_exact, opt.series_order));
    return report.all_pass() ? 0 : kExitVerifyFailed;
}

int run_simulate(const SimulateOptions& opt) {
    if (opt.n < 1) {
        std::cerr << "error: --n must be at least 1\n";
        return kExitUsage;
    }
    if (opt.trials < 2) {
        std::cerr << "error: --trials must be at least 2\n";
        return kExitUsage;
    }
    const auto stats = qm::mc::sample_costs(opt.n, opt.trials, opt.seed);
    if (opt.format == "csv")
        std::cout << qm::output::simulate_csv(stats);
    else
        std::cout << qm::output::to_json_text(qm::output::simulate_envelope(stats));
    return 0;
}

void add_format_option(CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("QM_FORMAT")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distribution, moments, and closed-form verification of "
                 "quicksort comparison counts and BST path length"};
    app.set_version_flag("--version", std::string(qm::output::kToolName) + " " +
                                          qm::output::kToolVersion);
    app.require_subcommand(1);

    DistOptions dist_opt;
    auto* dist = app.add_subcommand("dist", "Exact cost distribution over all permutations");
    dist->add_option("--n", dist_opt.n, "Number of keys")->required();
    dist->add_option("--statistic", dist_opt.statistic, "Cost statistic")
        ->check(CLI::IsMember({"comparisons", "bst-path"}))
        ->capture_default_str();
    dist->add_option("--max-n", dist_opt.max_n, "Distribution size cap")
        ->envname("QM_MAX_N")
        ->capture_default_str();
    add_format_option(dist, dist_opt.format);

    MomentsOptions moments_opt;
    auto* moments = app.add_subcommand("moments", "Mean, variance, and factorial moments");
    moments->add_option("--n", moments_opt.n, "Number of keys")->required();
    moments->add_option("--order", moments_opt.order, "Highest factorial moment")
        ->capture_default_str();
    moments->add_option("--source", moments_opt.source, "exact distribution or closed forms")
        ->check(CLI::IsMember({"exact", "closed"}))
        ->capture_default_str();
    moments->add_option("--max-n", moments_opt.max_n, "Distribution size cap")
        ->envname("QM_MAX_N")
        ->capture_default_str();
    add_format_option(moments, moments_opt.format);

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Run the full identity suite");
    verify->add_option("--max-n-brute", verify_opt.max_n_brute, "Enumeration range")
        ->envname("QM_MAX_N_BRUTE")
        ->capture_default_str();
    verify->add_option("--max-n-exact", verify_opt.max_n_exact, "Exact-distribution range")
        ->envname("QM_MAX_N_EXACT")
        ->capture_default_str();
    verify->add_option("--series-order", verify_opt.series_order, "Series truncation order")
        ->envname("QM_SERIES_ORDER")
        ->capture_default_str();
    verify->add_option("--brute-cap", verify_opt.brute_cap, "Enumeration cap")
        ->envname("QM_BRUTE_CAP")
        ->capture_default_str();
    verify->add_option("--max-n", verify_opt.max_n, "Distribution size cap")
        ->envname("QM_MAX_N")
        ->capture_default_str();
    add_format_option(verify, verify_opt.format);

    SimulateOptions simulate_opt;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo sampling of comparison costs");
    simulate->add_option("--n", simulate_opt.n, "Number of keys")->required();
    simulate->add_option("--trials", simulate_opt.trials, "Number of trials")
        ->envname("QM_TRIALS")
        ->capture_default_str();
    simulate->add_option("--seed", simulate_opt.seed, "64-bit seed")
        ->envname("QM_SEED")
        ->capture_default_str();
    add_format_option(simulate, simulate_opt.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dist->parsed()) return run_dist(dist_opt);
        if (moments->parsed()) return run_moments(moments_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (simulate->parsed()) return run_simulate(simulate_opt);
    } catch (const qm::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
