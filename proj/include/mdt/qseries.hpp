#pragma once
#include <vector>

#include "mdt/ring.hpp"

namespace mdt {

// Truncated power series in q with TRat coefficients, carrying coefficients
// of q^0 .. q^trunc. Binary operations truncate to the smaller order.
class QSeries {
public:
    explicit QSeries(long trunc);
    QSeries(long trunc, std::vector<TRat> coeffs);
    static QSeries one(long trunc);

    long trunc() const { return trunc_; }
    const TRat& coeff(long n) const;
    void set_coeff(long n, TRat c);
    const std::vector<TRat>& coeffs() const { return coeffs_; }

    QSeries truncated(long new_trunc) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    // multiplicative inverse; needs a nonzero constant term
    QSeries inv() const;
    QSeries div(const QSeries& b) const;

    // q^n coefficient gains a factor T^{a n}  (substitution q -> T^a q)
    QSeries q_scale(long a) const;
    // substitution q -> -q
    QSeries q_negate() const;

    bool operator==(const QSeries& o) const { return trunc_ == o.trunc_ && coeffs_ == o.coeffs_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

private:
    long trunc_;
    std::vector<TRat> coeffs_;
};

// Rank-r partition function of zero-dimensional framed sheaf counts on
// 3-space, expanded directly from the double product
//   prod_{m>=1} prod_{k=0}^{rm-1} (1 - T^{4+2k-rm} q^m)^{-1}.
// Every q-coefficient is a polynomial in T with nonnegative integers.
QSeries expand_dt(int r, long trunc);

// The same series computed as a product of r scaled copies of the rank-one
// series, one per factor T^{-r-1+2i} q, i = 1..r.
QSeries expand_dt_factored(int r, long trunc);

// MacMahon's plane partition series prod (1-q^m)^{-m}, integer coefficients.
QSeries macmahon(long trunc);
// M(sign * q)^r
QSeries macmahon_pow(int r, int sign, long trunc);
std::vector<mpz_class> macmahon_pow_int(int r, int sign, long trunc);

// evaluation of every coefficient at T = -1 (Euler characteristic limit);
// throws domain_error naming the q-degree if a coefficient has a pole there
std::vector<mpz_class> specialize_euler(const QSeries& f);

// Generating series of pairs of commuting matrices weighted by 1/|GL_n|:
//   prod_{m>=1} prod_{k>=1} (1 - L^{2-k} y^m)^{-1},  L = T^2.
// Expanded per power of y via the q-binomial form of Euler's identity, so
// coefficients are rational in T.
QSeries feit_fine(long trunc);

// Quotient A(T^r q) / A(T^-r q) of the commuting-matrix series; cancels to
// a polynomial-coefficient series equal to expand_dt(r). Throws
// verification_error if a coefficient fails to cancel.
QSeries wall_cross_dt(int r, long trunc);

// Adams operation: q -> q^k and T -> T^k on every coefficient.
QSeries psi_substitute(const QSeries& f, long k);

// Plethystic exponential Exp(f) = exp(sum_k psi_k(f)/k); f needs zero
// constant term.
QSeries plethystic_exp(const QSeries& f, long trunc);

// The single-orbit input whose plethystic exponential generates the rank-r
// series (up to q -> (-1)^r q):
//   (-1)^r T^3 [r]_T q / ((1 - (-1/T)^r q)(1 - (-T)^r q)),
// [r]_T = T^{r-1} + T^{r-3} + ... + T^{1-r}.
QSeries dt_plethystic_argument(int r, long trunc);
// Exp of the above with the sign substitution folded back in.
QSeries dt_via_plethystic(int r, long trunc);

// Multiset cancellation behind the quotient route, in T-exponent units:
// window copies of {2 - 2j + rm} minus window copies of {2 - 2j - rm} must
// leave exactly {2 - 2j + rm : 0 <= j < rm}. window defaults to 2rm; throws
// invalid_argument below that.
bool telescope_check(int r, long m, long window = -1);

} // namespace mdt
