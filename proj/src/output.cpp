#include "qm/output.hpp"

#include <sstream>

#include "qm/closed_form.hpp"

namespace qm::output {

namespace {

Json metadata(bool with_prng = false) {
    Json meta;
    meta["tool"] = kToolName;
    meta["version"] = kToolVersion;
    if (with_prng) {
        meta["prng"] = {{"algorithm", mc::kPrngAlgorithm},
                        {"stream_derivation", mc::kPrngStreamDerivation}};
    }
    return meta;
}

Json exact_value(const Rat& x) {
    Json v;
    v["exact"] = rat_string(x);
    v["decimal"] = decimal_string(x);
    return v;
}

// Reuse the JSON serializer for doubles so CSV and JSON carry the same text.
std::string double_text(double x) { return Json(x).dump(); }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

Json dist_envelope(const CountPolynomial& dist, const std::string& statistic, unsigned max_n) {
    Json env;
    env["command"] = "dist";
    env["parameters"] = {{"n", dist.n}, {"statistic", statistic}, {"max_n", max_n}};
    Json results;
    results["n"] = dist.n;
    results["total"] = dist.total().get_str();
    results["min_cost"] = dist.min_cost;
    results["max_cost"] = dist.max_cost();
    Json counts = Json::array();
    for (const auto& c : dist.counts) counts.push_back(c.get_str());
    results["counts"] = std::move(counts);
    env["results"] = std::move(results);
    env["metadata"] = metadata();
    return env;
}

Json moments_envelope(const pgf::MomentReport& report, const std::string& source) {
    Json env;
    env["command"] = "moments";
    env["parameters"] = {{"n", report.n},
                         {"order", report.betas.size()},
                         {"source", source}};
    Json results;
    results["n"] = report.n;
    results["source"] = source;
    results["mean"] = exact_value(report.mean);
    results["variance"] = exact_value(report.variance);
    Json moments = Json::array();
    for (size_t s = 0; s < report.betas.size(); ++s) {
        Json entry;
        entry["order"] = s + 1;
        entry["exact"] = rat_string(report.betas[s]);
        entry["decimal"] = decimal_string(report.betas[s]);
        moments.push_back(std::move(entry));
    }
    results["factorial_moments"] = std::move(moments);
    env["results"] = std::move(results);
    env["metadata"] = metadata();
    return env;
}

Json simulate_envelope(const mc::SampleStats& stats) {
    Json env;
    env["command"] = "simulate";
    env["parameters"] = {{"n", stats.n}, {"trials", stats.trials}, {"seed", stats.seed}};
    Json results;
    results["n"] = stats.n;
    results["trials"] = stats.trials;
    results["seed"] = stats.seed;
    results["sample_mean"] = stats.sample_mean;
    results["sample_variance"] = stats.sample_variance;
    results["mean_z_score"] = stats.mean_z_score;
    results["closed_mean"] = exact_value(closed_form::mean_closed(stats.n));
    results["closed_variance"] = exact_value(closed_form::variance_closed(stats.n));
    env["results"] = std::move(results);
    env["metadata"] = metadata(true);
    return env;
}

Json verify_envelope(const verify::Report& report, unsigned max_n_brute, unsigned max_n_exact,
                     unsigned series_order) {
    Json env;
    env["command"] = "verify";
    env["parameters"] = {{"max_n_brute", max_n_brute},
                         {"max_n_exact", max_n_exact},
                         {"series_order", series_order}};
    Json results;
    results["all_pass"] = report.all_pass();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    results["checks"] = std::move(checks);
    env["results"] = std::move(results);
    env["metadata"] = metadata();
    return env;
}

std::string to_json_text(const Json& envelope) { return envelope.dump(2) + "\n"; }

std::string dist_csv(const CountPolynomial& dist, const std::string& statistic) {
    std::ostringstream out;
    out << "n,statistic,cost,count\n";
    for (size_t i = 0; i < dist.counts.size(); ++i)
        out << dist.n << ',' << statistic << ',' << dist.min_cost + i << ','
            << dist.counts[i].get_str() << '\n';
    return out.str();
}

std::string moments_csv(const pgf::MomentReport& report, const std::string& source) {
    std::ostringstream out;
    out << "n,source,quantity,exact,decimal\n";
    auto row = [&](const std::string& quantity, const Rat& value) {
        out << report.n << ',' << source << ',' << quantity << ',' << rat_string(value) << ','
            << decimal_string(value) << '\n';
    };
    row("mean", report.mean);
    row("variance", report.variance);
    for (size_t s = 0; s < report.betas.size(); ++s)
        row("factorial_moment_" + std::to_string(s + 1), report.betas[s]);
    return out.str();
}

std::string simulate_csv(const mc::SampleStats& stats) {
    const Rat closed_mean = closed_form::mean_closed(stats.n);
    const Rat closed_var = closed_form::variance_closed(stats.n);
    std::ostringstream out;
    out << "n,trials,seed,sample_mean,sample_variance,mean_z_score,"
           "closed_mean,closed_mean_decimal,closed_variance,closed_variance_decimal\n";
    out << stats.n << ',' << stats.trials << ',' << stats.seed << ','
        << double_text(stats.sample_mean) << ',' << double_text(stats.sample_variance) << ','
        << double_text(stats.mean_z_score) << ',' << csv_quote(rat_string(closed_mean)) << ','
        << decimal_string(closed_mean) << ',' << csv_quote(rat_string(closed_var)) << ','
        << decimal_string(closed_var) << '\n';
    return out.str();
}

std::string verify_csv(const verify::Report& report) {
    std::ostringstream out;
    out << "check,pass,detail\n";
    for (const auto& c : report.checks)
        out << csv_quote(c.name) << ',' << (c.pass ? "true" : "false") << ','
            << csv_quote(c.detail) << '\n';
    return out.str();
}

} // namespace qm::output
