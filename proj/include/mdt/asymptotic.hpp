#pragma once
#include <gmpxx.h>

namespace mdt {

inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta2 = 1.6449340668482264365;
inline constexpr double kPi = 3.14159265358979323846;

// Deformation weights of the grand-canonical factor exponents: the factor
// indexed by (l = 1..r, m >= 1, k = 1..m) decays like
// exp(-rho (m + c + a k + b m l)). The weightless case is a = b = c = 0.
struct SaddleWeights {
    double a = 0;
    double b = 0;
    double c = 0;
};

// d/dx of the grand-canonical log at (rho, rho-weighted); the expected size
// constraint reads n = -f_x(rho). Tail truncation uses an explicit geometric
// bound kept below rel_tol times the partial sum.
double f_x(double rho, int r, const SaddleWeights& w = {}, double rel_tol = 1e-12);

struct SaddleResult {
    double rho = 0;
    double residual = 0; // |n + f_x(rho)| / n after the bisection
    int iterations = 0;
};

// Solves n = -f_x(rho) by bracketed bisection, then verifies the exact
// sandwich -f0((1+eps) rho) <= n <= -f0((1-eps) rho) with eps = |c|+|a|+r|b|
// against the weightless sum f0. Throws verification_error if it fails.
SaddleResult solve_saddle(double n, int r, const SaddleWeights& w = {}, double rel_tol = 1e-12);

// leading-order root (2 r zeta(3) / n)^{1/3}
double rho0_asymptotic(double n, int r);

// Partial derivatives at y = 0 of the tilted log-weight function
//   g(x, y) = sum_{l,m,k} Phi(x m - y (alpha k + beta m l + gamma)),
// Phi(t) = -log(1 - e^{-t}); closed-form inner sums over (k, l).
struct GPartials {
    double y = 0;
    double xx = 0;
    double xy = 0;
    double yy = 0;
};

GPartials g_partials(double rho, int r, double alpha, double beta, double gamma,
                     double rel_tol = 1e-12);

// weightless log-weight g(rho, 0) and its use in the one-term saddle
// approximation of the tuple count: log Q_n ~ g + n rho - log(2 pi g_xx)/2
double g_zero(double rho, int r, double rel_tol = 1e-12);
double qn_saddle_approx(double n, int r, double rel_tol = 1e-12);

struct MomentEstimate {
    double rho0 = 0;
    double mu = 0;
    double sigma2 = 0;
};

// saddle-point mean and variance of the statistic alpha X + beta Y + gamma Z
// on random r-tuples of total size n:
//   mu_n = g_y(rho0, 0),  sigma_n^2 = (g_yy g_xx - g_xy^2) / g_xx
MomentEstimate mu_sigma(double n, int r, double alpha, double beta, double gamma,
                        double rel_tol = 1e-12);

// closed-form leading asymptotics of the same moments
double mu_asymptotic(double n, int r, double alpha, double beta, double gamma);
double sigma2_asymptotic(double n, int r, double alpha, double beta, double gamma);

// normalizing constants of the Gaussian limit of the centered weight
// statistic s: mean ~ mu n^{2/3}, variance ~ sigma2 n^{4/3}
struct TheoremConstants {
    double mu = 0;
    double sigma2 = 0;
};

TheoremConstants theorem_constants(int r);

// Kolmogorov distance between the exact distribution of s at size n
// (right-continuous CDF sampled at its atoms) and the limit Gaussian
double gaussian_distance(int r, long n, int jobs = 1);

double normal_cdf(double x);

// logarithm of a positive big integer, exact enough for double comparisons
double log_mpz(const mpz_class& v);

} // namespace mdt
