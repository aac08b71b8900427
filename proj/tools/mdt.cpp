#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mdt/asymptotic.hpp"
#include "mdt/oracles.hpp"
#include "mdt/parallel.hpp"
#include "mdt/planepart.hpp"
#include "mdt/qseries.hpp"
#include "mdt/quiver.hpp"
#include "mdt/serialize.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
}

std::string dump(const mdt::json& j) { return j.dump(1) + "\n"; }

struct SuiteResult {
    bool ok = true;
    std::string detail;
};

SuiteResult verify_suite(const std::string& suite, int r, long bound, int jobs) {
    using namespace mdt;
    SuiteResult res;
    auto series_mismatch = [&](const QSeries& a, const QSeries& b) -> long {
        long t = std::min(a.trunc(), b.trunc());
        for (long n = 0; n <= t; ++n)
            if (a.coeff(n) != b.coeff(n)) return n;
        return -1;
    };
    if (suite == "factorization") {
        long n = series_mismatch(expand_dt(r, bound), expand_dt_factored(r, bound));
        if (n >= 0) return {false, "factored product disagrees first at q^" + std::to_string(n)};
    } else if (suite == "wallcross") {
        long n = series_mismatch(expand_dt(r, bound), wall_cross_dt(r, bound));
        if (n >= 0) return {false, "quotient route disagrees first at q^" + std::to_string(n)};
        WallCrossReport rep = wall_crossing_check(r, bound);
        if (!rep.ok) {
            std::string dims;
            for (long d : rep.mismatch) dims += (dims.empty() ? "" : ",") + std::to_string(d);
            return {false, "torus identity fails at dimension (" + dims + "): " + rep.detail};
        }
    } else if (suite == "plethystic") {
        long n = series_mismatch(expand_dt(r, bound), dt_via_plethystic(r, bound));
        if (n >= 0) return {false, "plethystic route disagrees first at q^" + std::to_string(n)};
    } else if (suite == "euler") {
        auto lhs = specialize_euler(expand_dt(r, bound));
        auto rhs = macmahon_pow_int(r, r % 2 != 0 ? -1 : 1, bound);
        for (long n = 0; n <= bound; ++n)
            if (lhs[static_cast<size_t>(n)] != rhs[static_cast<size_t>(n)])
                return {false, "Euler specialization disagrees first at q^" + std::to_string(n) + ": " +
                                   lhs[static_cast<size_t>(n)].get_str() + " vs " +
                                   rhs[static_cast<size_t>(n)].get_str()};
    } else if (suite == "enumeration") {
        QSeries dt = expand_dt(r, bound);
        for (long n = 0; n <= bound; ++n) {
            if (m_poly_enum(r, n, jobs) != dt.coeff(n).polynomial())
                return {false, "enumeration disagrees with the series at n=" + std::to_string(n)};
        }
    } else if (suite == "qpoly") {
        for (long n = 0; n <= bound; ++n) {
            TriPoly series = q_poly_series(r, n);
            if (series != q_poly_enum(r, n, jobs))
                return {false, "trivariate series and enumeration disagree at n=" + std::to_string(n)};
            m_from_q(r, n, series); // throws on specialization mismatch
        }
    } else if (suite == "feitfine") {
        const std::pair<int, int> points[] = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
        for (auto [n, q] : points) {
            if (bound > 0 && n > bound) continue;
            if (!feit_fine_point_check(n, q))
                return {false, "finite-field point check fails at n=" + std::to_string(n) +
                                   ", q=" + std::to_string(q)};
        }
    } else if (suite == "telescoping") {
        for (long m = 1; m <= bound; ++m)
            if (!telescope_check(r, m))
                return {false, "exponent multisets fail to telescope at m=" + std::to_string(m)};
    } else {
        throw CLI::ValidationError("unknown verify suite: " + suite);
    }
    return res;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-r partition-function calculator: exact series, identities, asymptotics"};
    app.require_subcommand(1);

    int r = 1;
    long trunc = 6;
    std::string format = "json";
    std::string out_path;
    int jobs = 1;
    double tol = 1e-12;

    auto* dt_cmd = app.add_subcommand("dt", "expand the rank-r series to a q-order");
    dt_cmd->add_option("--r", r, "rank")->check(CLI::PositiveNumber);
    dt_cmd->add_option("--trunc", trunc, "q-truncation order")->check(CLI::NonNegativeNumber);
    dt_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    dt_cmd->add_option("--out", out_path, "output path (default stdout)");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run one of the identity suites");
    verify_cmd
        ->add_option("suite", suite,
                     "factorization|wallcross|plethystic|euler|enumeration|qpoly|feitfine|telescoping")
        ->required()
        ->check(CLI::IsMember({"factorization", "wallcross", "plethystic", "euler", "enumeration",
                               "qpoly", "feitfine", "telescoping"}));
    verify_cmd->add_option("--r", r, "rank")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--trunc,--n", trunc, "bound for the suite")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    long dist_n = 0;
    std::string source = "mpoly";
    auto* dist_cmd = app.add_subcommand("dist", "weight-statistic histogram at size n");
    dist_cmd->add_option("--r", r, "rank")->check(CLI::PositiveNumber);
    dist_cmd->add_option("--n", dist_n, "total size")->required()->check(CLI::NonNegativeNumber);
    dist_cmd->add_option("--source", source, "mpoly (series) or enum (tuples)")
        ->check(CLI::IsMember({"mpoly", "enum"}));
    dist_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    dist_cmd->add_option("--out", out_path, "output path (default stdout)");
    dist_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    std::vector<long> saddle_n;
    mdt::SaddleWeights weights;
    long ks_limit = 128;
    long exact_limit = 5000;
    auto* saddle_cmd = app.add_subcommand("saddle", "saddle-point sweep over sizes");
    saddle_cmd->add_option("--r", r, "rank")->check(CLI::PositiveNumber);
    saddle_cmd->add_option("--n", saddle_n, "sizes to sweep")->required()->check(CLI::PositiveNumber);
    saddle_cmd->add_option("--a", weights.a, "per-k exponent weight");
    saddle_cmd->add_option("--b", weights.b, "per-(m l) exponent weight");
    saddle_cmd->add_option("--c", weights.c, "constant exponent weight");
    saddle_cmd->add_option("--tol", tol, "relative tolerance of the solver");
    saddle_cmd->add_option("--ks-limit", ks_limit, "largest n for the exact Kolmogorov column");
    saddle_cmd->add_option("--exact-limit", exact_limit, "largest n for the exact count column");
    saddle_cmd->add_option("--out", out_path, "output path (default stdout)");
    saddle_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (dt_cmd->parsed()) {
            mdt::QSeries s = mdt::expand_dt(r, trunc);
            emit(format == "csv" ? mdt::qseries_to_csv(s) : dump(mdt::qseries_to_json(s, r)), out_path);
            return 0;
        }
        if (verify_cmd->parsed()) {
            SuiteResult res = verify_suite(suite, r, trunc, jobs);
            mdt::json j{{"suite", suite}, {"r", r}, {"bound", trunc}, {"ok", res.ok}};
            if (!res.ok) j["detail"] = res.detail;
            std::cout << dump(j);
            if (!res.ok) {
                std::cerr << "FAIL " << suite << ": " << res.detail << "\n";
                return 1;
            }
            return 0;
        }
        if (dist_cmd->parsed()) {
            mdt::Distribution d = mdt::distribution(
                r, dist_n, source == "enum" ? mdt::DistSource::Enumeration : mdt::DistSource::WeightPolynomial,
                jobs);
            emit(format == "csv" ? mdt::distribution_to_csv(d, r, dist_n)
                                 : dump(mdt::distribution_to_json(d, r, dist_n)),
                 out_path);
            return 0;
        }
        if (saddle_cmd->parsed()) {
            std::ostringstream os;
            os << "n,r,rho,mu_n,sigma2_n,ks_distance,log_qn_exact,log_qn_approx\n";
            os.precision(15);
            for (long n : saddle_n) {
                mdt::SaddleResult s = mdt::solve_saddle(static_cast<double>(n), r, weights, tol);
                mdt::MomentEstimate m = mdt::mu_sigma(static_cast<double>(n), r, -2, -2, 4, tol);
                os << n << "," << r << "," << s.rho << "," << m.mu << "," << m.sigma2 << ",";
                if (n <= ks_limit) os << mdt::gaussian_distance(r, n, jobs);
                os << ",";
                if (n <= exact_limit) os << mdt::log_mpz(mdt::count_colored(r, n));
                os << "," << mdt::qn_saddle_approx(static_cast<double>(n), r, tol) << "\n";
            }
            emit(os.str(), out_path);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
