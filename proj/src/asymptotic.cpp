#include "mdt/asymptotic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mdt/error.hpp"
#include "mdt/planepart.hpp"

namespace mdt {

namespace {

void check_rank(int r) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
}

void check_rho(double rho) {
    if (!(rho > 0)) throw std::invalid_argument("rho must be positive");
}

double weight_eps(int r, const SaddleWeights& w) {
    return std::abs(w.c) + std::abs(w.a) + r * std::abs(w.b);
}

// sum_{j >= 0} j^p x^j for p <= 4
double poly_geom(int p, double x) {
    double d = 1 - x;
    switch (p) {
        case 0: return 1 / d;
        case 1: return x / (d * d);
        case 2: return x * (1 + x) / (d * d * d);
        case 3: return x * (1 + 4 * x + x * x) / (d * d * d * d);
        case 4: return x * (1 + 11 * x + 11 * x * x + x * x * x) / (d * d * d * d * d);
        default: throw std::invalid_argument("geometric power sums implemented for p <= 4");
    }
}

// exact sum_{m > M} m^p x^m via the binomial expansion of (M+1+j)^p
double poly_geom_tail(int p, long M, double x) {
    static const double binom[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    double b = static_cast<double>(M) + 1;
    double xm = std::pow(x, b);
    double s = 0;
    for (int i = 0; i <= p; ++i) s += binom[p][i] * std::pow(b, p - i) * poly_geom(i, x);
    return xm * s;
}

// Adaptive sum of term(m) for m >= 1 with envelope |term(m)| <= env_c m^p env_x^m.
template <class Term>
double tail_bounded_sum(Term&& term, int p, double env_c, double env_x, double rel_tol) {
    if (!(env_x < 1)) throw std::invalid_argument("tail envelope needs env_x < 1");
    double sum = 0;
    for (long m = 1;; ++m) {
        sum += term(m);
        if (m >= 4) {
            double tail = env_c * poly_geom_tail(p, m, env_x);
            if (tail <= rel_tol * std::abs(sum) || tail < 1e-300) return sum;
        }
        if (m > 100000000)
            throw verification_error("series summation failed to converge under its tail bound");
    }
}

double phi(double t) { return -std::log1p(-std::exp(-t)); }
// Phi'(t) = -1/(e^t - 1)
double phi1(double t) { return -1 / std::expm1(t); }
// Phi''(t) = e^t / (e^t - 1)^2
double phi2(double t) {
    double u = std::expm1(t);
    return (u + 1) / (u * u);
}

} // namespace

double f_x(double rho, int r, const SaddleWeights& w, double rel_tol) {
    check_rank(r);
    check_rho(rho);
    double eps = weight_eps(r, w);
    if (!(eps < 1)) throw std::invalid_argument("weights too large: |c| + |a| + r|b| must stay below 1");
    double x_env = std::exp(-rho * (1 - eps));
    double env_c = static_cast<double>(r) / (1 - x_env);
    bool weightless = w.a == 0 && w.b == 0 && w.c == 0;
    auto term = [&](long m) {
        double md = static_cast<double>(m);
        if (weightless) {
            double e = std::exp(-rho * md);
            return r * md * md * e / (1 - e);
        }
        double s = 0;
        double ea = std::exp(-rho * w.a);
        for (int l = 1; l <= r; ++l) {
            double base = std::exp(-rho * (md + w.c + w.b * md * l));
            double cur = base;
            for (long k = 1; k <= m; ++k) {
                cur *= ea;
                s += cur / (1 - cur);
            }
        }
        return md * s;
    };
    return -tail_bounded_sum(term, 2, env_c, x_env, rel_tol);
}

double rho0_asymptotic(double n, int r) {
    check_rank(r);
    if (!(n > 0)) throw std::invalid_argument("n must be positive");
    return std::cbrt(2 * r * kZeta3 / n);
}

SaddleResult solve_saddle(double n, int r, const SaddleWeights& w, double rel_tol) {
    check_rank(r);
    if (!(n > 0)) throw std::invalid_argument("n must be positive");
    double eps = weight_eps(r, w);
    if (!(eps < 1)) throw std::invalid_argument("weights too large: |c| + |a| + r|b| must stay below 1");
    double seed = rho0_asymptotic(n, r);
    double lo = seed / 4, hi = seed * 4;
    // -f_x decreases in rho; widen until the bracket straddles n
    for (int i = 0; i < 200 && -f_x(lo, r, w, rel_tol) < n; ++i) lo /= 2;
    for (int i = 0; i < 200 && -f_x(hi, r, w, rel_tol) > n; ++i) hi *= 2;
    if (!(-f_x(lo, r, w, rel_tol) >= n && -f_x(hi, r, w, rel_tol) <= n))
        throw verification_error("saddle bracket could not be established");
    SaddleResult res;
    int it = 0;
    while ((hi - lo) > rel_tol * lo && it < 500) {
        double mid = 0.5 * (lo + hi);
        if (-f_x(mid, r, w, rel_tol) >= n)
            lo = mid;
        else
            hi = mid;
        ++it;
    }
    res.rho = 0.5 * (lo + hi);
    res.iterations = it;
    res.residual = std::abs(n + f_x(res.rho, r, w, rel_tol)) / n;
    // exact sandwich against the weightless sum
    double slack = 1e-9 * n;
    double upper = -f_x(res.rho * (1 - eps), r, SaddleWeights{}, rel_tol);
    double lower = -f_x(res.rho * (1 + eps), r, SaddleWeights{}, rel_tol);
    if (lower > n + slack || upper < n - slack)
        throw verification_error("saddle sandwich violated: " + std::to_string(lower) + " <= " +
                                 std::to_string(n) + " <= " + std::to_string(upper) + " fails");
    return res;
}

GPartials g_partials(double rho, int r, double alpha, double beta, double gamma, double rel_tol) {
    check_rank(r);
    check_rho(rho);
    double x_env = std::exp(-rho);
    double rd = r;
    double cy2 = (alpha + (rd + 1) * beta) / 2; // m^2 coefficient over r
    double cy1 = (alpha + 2 * gamma) / 2;       // m coefficient over r
    GPartials g;
    // envelopes: |Phi'(rho m)|, Phi''(rho m) <= x^m/(1-x), x^m/(1-x)^2
    double inv1 = 1 / (1 - x_env);
    double inv2 = inv1 * inv1;
    g.y = tail_bounded_sum(
        [&](long m) {
            double md = static_cast<double>(m);
            return -rd * (cy2 * md * md + cy1 * md) * phi1(rho * md);
        },
        2, rd * (std::abs(cy2) + std::abs(cy1)) * inv1, x_env, rel_tol);
    g.xx = tail_bounded_sum(
        [&](long m) {
            double md = static_cast<double>(m);
            return rd * md * md * md * phi2(rho * md);
        },
        3, rd * inv2, x_env, rel_tol);
    g.xy = tail_bounded_sum(
        [&](long m) {
            double md = static_cast<double>(m);
            return -rd * (cy2 * md * md * md + cy1 * md * md) * phi2(rho * md);
        },
        3, rd * (std::abs(cy2) + std::abs(cy1)) * inv2, x_env, rel_tol);
    // sum over (k, l) of (alpha k + beta m l + gamma)^2
    auto yy_inner = [&](double md) {
        double s = alpha * alpha * md * (md + 1) * (2 * md + 1) / 6 + gamma * gamma * md +
                   alpha * gamma * md * (md + 1);
        s += (rd + 1) * (beta * beta * (2 * rd + 1) * md * md * md / 6 +
                         alpha * beta * md * md * (md + 1) / 2 + beta * gamma * md * md);
        return rd * s;
    };
    double yy_env = rd * (alpha * alpha + gamma * gamma + std::abs(alpha * gamma)) +
                    rd * (rd + 1) *
                        (beta * beta * (2 * rd + 1) + std::abs(alpha * beta) + std::abs(beta * gamma));
    g.yy = tail_bounded_sum([&](long m) { return yy_inner(static_cast<double>(m)) * phi2(rho * m); }, 3,
                            2 * yy_env * inv2, x_env, rel_tol);
    return g;
}

double g_zero(double rho, int r, double rel_tol) {
    check_rank(r);
    check_rho(rho);
    double x_env = std::exp(-rho);
    return tail_bounded_sum(
        [&](long m) { return r * static_cast<double>(m) * phi(rho * m); }, 1,
        static_cast<double>(r) / (1 - x_env), x_env, rel_tol);
}

double qn_saddle_approx(double n, int r, double rel_tol) {
    SaddleResult s = solve_saddle(n, r, SaddleWeights{}, rel_tol);
    GPartials g = g_partials(s.rho, r, 0, 0, 0, rel_tol);
    return g_zero(s.rho, r, rel_tol) + n * s.rho - 0.5 * std::log(2 * kPi * g.xx);
}

MomentEstimate mu_sigma(double n, int r, double alpha, double beta, double gamma, double rel_tol) {
    SaddleResult s = solve_saddle(n, r, SaddleWeights{}, rel_tol);
    GPartials g = g_partials(s.rho, r, alpha, beta, gamma, rel_tol);
    MomentEstimate est;
    est.rho0 = s.rho;
    est.mu = g.y;
    est.sigma2 = (g.yy * g.xx - g.xy * g.xy) / g.xx;
    return est;
}

double mu_asymptotic(double n, int r, double alpha, double beta, double gamma) {
    check_rank(r);
    double rd = r;
    double linear = (alpha + (rd + 1) * beta) / 2 * n;
    double sub = std::cbrt(rd) * kZeta2 * (alpha + 2 * gamma) /
                 (std::pow(2.0, 5.0 / 3.0) * std::pow(kZeta3, 2.0 / 3.0)) * std::pow(n, 2.0 / 3.0);
    return linear + sub;
}

double sigma2_asymptotic(double n, int r, double alpha, double beta, double gamma) {
    check_rank(r);
    double rd = r;
    if (alpha != 0 || beta != 0) {
        return (alpha * alpha + (rd * rd - 1) * beta * beta) /
               (std::pow(2.0, 7.0 / 3.0) * std::cbrt(rd * kZeta3)) * std::pow(n, 4.0 / 3.0);
    }
    // pure gamma case picks up a logarithm through the harmonic inner sum
    double rho0 = rho0_asymptotic(n, r);
    return rd * gamma * gamma / (rho0 * rho0) * std::log(1 / rho0);
}

TheoremConstants theorem_constants(int r) {
    check_rank(r);
    TheoremConstants c;
    double rd = r;
    c.mu = std::cbrt(rd) * kPi * kPi / (std::pow(2.0, 5.0 / 3.0) * std::pow(kZeta3, 2.0 / 3.0));
    c.sigma2 = std::pow(rd, 5.0 / 3.0) / std::cbrt(2 * kZeta3);
    return c;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double log_mpz(const mpz_class& v) {
    if (v <= 0) throw std::domain_error("log of a nonpositive integer");
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

double gaussian_distance(int r, long n, int jobs) {
    check_rank(r);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Distribution d = distribution(r, n, DistSource::WeightPolynomial, jobs);
    TheoremConstants c = theorem_constants(r);
    double mean = c.mu * std::pow(static_cast<double>(n), 2.0 / 3.0);
    double sd = std::sqrt(c.sigma2) * std::pow(static_cast<double>(n), 2.0 / 3.0);
    mpz_class cum = 0;
    double dist = 0;
    for (const auto& [s, cnt] : d.histogram) {
        cum += cnt;
        mpq_class ratio(cum, d.total);
        ratio.canonicalize();
        double fd = ratio.get_d();
        double fn = normal_cdf((static_cast<double>(s) - mean) / sd);
        dist = std::max(dist, std::abs(fd - fn));
    }
    return dist;
}

} // namespace mdt
