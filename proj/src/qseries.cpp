#include "mdt/qseries.hpp"

#include <map>
#include <string>

namespace mdt {

// -------------------------------------------------------------- QSeries ----

QSeries::QSeries(long trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("series truncation order must be >= 0");
    coeffs_.resize(static_cast<size_t>(trunc) + 1);
}

QSeries::QSeries(long trunc, std::vector<TRat> coeffs) : trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (trunc < 0) throw std::invalid_argument("series truncation order must be >= 0");
    if (coeffs_.size() != static_cast<size_t>(trunc) + 1)
        throw std::invalid_argument("coefficient count does not match truncation order");
}

QSeries QSeries::one(long trunc) {
    QSeries s(trunc);
    s.coeffs_[0] = TRat(1);
    return s;
}

const TRat& QSeries::coeff(long n) const {
    if (n < 0 || n > trunc_) throw std::out_of_range("series coefficient index out of range");
    return coeffs_[static_cast<size_t>(n)];
}

void QSeries::set_coeff(long n, TRat c) {
    if (n < 0 || n > trunc_) throw std::out_of_range("series coefficient index out of range");
    coeffs_[static_cast<size_t>(n)] = std::move(c);
}

QSeries QSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc_) throw std::invalid_argument("cannot extend a truncated series");
    QSeries s(new_trunc);
    for (long n = 0; n <= new_trunc; ++n) s.coeffs_[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)];
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s(trunc_);
    for (long n = 0; n <= trunc_; ++n) s.coeffs_[static_cast<size_t>(n)] = -coeffs_[static_cast<size_t>(n)];
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long t = std::min(a.trunc_, b.trunc_);
    QSeries s(t);
    for (long n = 0; n <= t; ++n) s.coeffs_[static_cast<size_t>(n)] = a.coeff(n) + b.coeff(n);
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    long t = std::min(a.trunc_, b.trunc_);
    QSeries s(t);
    for (long n = 0; n <= t; ++n) s.coeffs_[static_cast<size_t>(n)] = a.coeff(n) - b.coeff(n);
    return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    long t = std::min(a.trunc_, b.trunc_);
    QSeries s(t);
    for (long i = 0; i <= t; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (long j = 0; i + j <= t; ++j) {
            if (b.coeff(j).is_zero()) continue;
            s.coeffs_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return s;
}

QSeries QSeries::inv() const {
    if (coeffs_[0].is_zero()) throw std::domain_error("series inverse needs a nonzero constant term");
    QSeries s(trunc_);
    TRat u = coeffs_[0].inverse();
    s.coeffs_[0] = u;
    for (long n = 1; n <= trunc_; ++n) {
        TRat acc;
        for (long k = 1; k <= n; ++k) {
            if (coeffs_[static_cast<size_t>(k)].is_zero()) continue;
            acc += coeffs_[static_cast<size_t>(k)] * s.coeffs_[static_cast<size_t>(n - k)];
        }
        s.coeffs_[static_cast<size_t>(n)] = -(u * acc);
    }
    return s;
}

QSeries QSeries::div(const QSeries& b) const {
    if (b.coeffs_[0].is_zero()) throw std::domain_error("series division needs a unit denominator");
    long t = std::min(trunc_, b.trunc_);
    QSeries s(t);
    TRat u = b.coeffs_[0].inverse();
    for (long n = 0; n <= t; ++n) {
        TRat acc = coeff(n);
        for (long k = 1; k <= n; ++k) {
            if (b.coeff(k).is_zero()) continue;
            acc -= b.coeff(k) * s.coeffs_[static_cast<size_t>(n - k)];
        }
        s.coeffs_[static_cast<size_t>(n)] = u * acc;
    }
    return s;
}

QSeries QSeries::q_scale(long a) const {
    QSeries s(trunc_);
    for (long n = 0; n <= trunc_; ++n) {
        const TRat& c = coeffs_[static_cast<size_t>(n)];
        if (c.is_zero()) continue;
        s.coeffs_[static_cast<size_t>(n)] = TRat(TPoly::monomial(a * n)) * c;
    }
    return s;
}

QSeries QSeries::q_negate() const {
    QSeries s(trunc_);
    for (long n = 0; n <= trunc_; ++n) {
        const TRat& c = coeffs_[static_cast<size_t>(n)];
        s.coeffs_[static_cast<size_t>(n)] = (n % 2 != 0) ? -c : c;
    }
    return s;
}

// --------------------------------------------------- product expansions ----

namespace {

// dense Laurent coefficient row used inside the geometric-factor recurrences
struct DenseRow {
    long off = 0; // exponent of slot 0
    std::vector<mpz_class> c;

    bool empty() const { return c.empty(); }
    void ensure(long lo, long hi) {
        if (c.empty()) {
            off = lo;
            c.resize(static_cast<size_t>(hi - lo) + 1);
            return;
        }
        long cur_hi = off + static_cast<long>(c.size()) - 1;
        if (lo < off) {
            std::vector<mpz_class> nc(static_cast<size_t>(std::max(hi, cur_hi) - lo) + 1);
            for (size_t i = 0; i < c.size(); ++i) nc[static_cast<size_t>(off - lo) + i] = std::move(c[i]);
            c = std::move(nc);
            off = lo;
        } else if (hi > cur_hi) {
            c.resize(static_cast<size_t>(hi - off) + 1);
        }
    }
    // this += src * T^shift
    void add_shifted(const DenseRow& src, long shift) {
        if (src.empty()) return;
        long lo = src.off + shift;
        long hi = src.off + static_cast<long>(src.c.size()) - 1 + shift;
        ensure(lo, hi);
        for (size_t i = 0; i < src.c.size(); ++i) {
            if (src.c[i] != 0) c[static_cast<size_t>(lo - off) + i] += src.c[i];
        }
    }
    TPoly to_poly() const {
        TPoly p;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) p.add_term(off + static_cast<long>(i), c[i]);
        return p;
    }
};

// multiply rows (as q-series coefficients) by (1 - T^a q^m)^{-1} in place
void apply_geometric_factor(std::vector<DenseRow>& rows, long a, long m) {
    long t = static_cast<long>(rows.size()) - 1;
    for (long n = m; n <= t; ++n)
        rows[static_cast<size_t>(n)].add_shifted(rows[static_cast<size_t>(n - m)], a);
}

QSeries rows_to_series(const std::vector<DenseRow>& rows) {
    QSeries s(static_cast<long>(rows.size()) - 1);
    for (size_t n = 0; n < rows.size(); ++n) s.set_coeff(static_cast<long>(n), TRat(rows[n].to_poly()));
    return s;
}

void check_rank(int r) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
}

} // namespace

QSeries expand_dt(int r, long trunc) {
    check_rank(r);
    std::vector<DenseRow> rows(static_cast<size_t>(trunc) + 1);
    rows[0].ensure(0, 0);
    rows[0].c[0] = 1;
    for (long m = 1; m <= trunc; ++m)
        for (long k = 0; k < static_cast<long>(r) * m; ++k)
            apply_geometric_factor(rows, 4 + 2 * k - static_cast<long>(r) * m, m);
    return rows_to_series(rows);
}

QSeries expand_dt_factored(int r, long trunc) {
    check_rank(r);
    QSeries base = expand_dt(1, trunc);
    QSeries prod = QSeries::one(trunc);
    for (int i = 1; i <= r; ++i) prod *= base.q_scale(-static_cast<long>(r) - 1 + 2 * i);
    return prod;
}

std::vector<mpz_class> macmahon_pow_int(int r, int sign, long trunc) {
    check_rank(r);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    std::vector<mpz_class> c(static_cast<size_t>(trunc) + 1);
    c[0] = 1;
    for (long m = 1; m <= trunc; ++m) {
        // (1 - (sign q)^m)^{-rm}
        bool neg = sign == -1 && m % 2 != 0;
        for (long rep = 0; rep < static_cast<long>(r) * m; ++rep) {
            for (long n = m; n <= trunc; ++n) {
                if (neg)
                    c[static_cast<size_t>(n)] -= c[static_cast<size_t>(n - m)];
                else
                    c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - m)];
            }
        }
    }
    return c;
}

QSeries macmahon(long trunc) { return macmahon_pow(1, 1, trunc); }

QSeries macmahon_pow(int r, int sign, long trunc) {
    auto c = macmahon_pow_int(r, sign, trunc);
    QSeries s(trunc);
    for (long n = 0; n <= trunc; ++n) s.set_coeff(n, TRat(TPoly(c[static_cast<size_t>(n)])));
    return s;
}

std::vector<mpz_class> specialize_euler(const QSeries& f) {
    std::vector<mpz_class> out;
    out.reserve(static_cast<size_t>(f.trunc()) + 1);
    for (long n = 0; n <= f.trunc(); ++n) {
        mpq_class v;
        try {
            v = f.coeff(n).eval_t(mpq_class(-1));
        } catch (const std::domain_error& e) {
            throw std::domain_error("coefficient of q^" + std::to_string(n) + ": " + e.what());
        }
        if (v.get_den() != 1)
            throw verification_error("coefficient of q^" + std::to_string(n) +
                                     " is not integral at T = -1: " + v.get_str());
        out.push_back(v.get_num());
    }
    return out;
}

QSeries feit_fine(long trunc) {
    // Per power m the inner product over k telescopes into the q-exponential
    //   sum_j T^{j^2+3j} / prod_{i<=j} (T^{2i} - 1) * y^{jm}.
    std::vector<TRat> jterm(static_cast<size_t>(trunc) + 1);
    TPoly den(1);
    for (long j = 0; j <= trunc; ++j) {
        if (j > 0) {
            TPoly f = TPoly::monomial(2 * j);
            f.add_term(0, -1);
            den *= f;
        }
        jterm[static_cast<size_t>(j)] = TRat(TPoly::monomial(j * j + 3 * j), den);
    }
    QSeries prod = QSeries::one(trunc);
    for (long m = 1; m <= trunc; ++m) {
        QSeries fm(trunc);
        for (long j = 0; j * m <= trunc; ++j) fm.set_coeff(j * m, jterm[static_cast<size_t>(j)]);
        prod *= fm;
    }
    return prod;
}

QSeries wall_cross_dt(int r, long trunc) {
    check_rank(r);
    QSeries a = feit_fine(trunc);
    QSeries quot = a.q_scale(r).div(a.q_scale(-static_cast<long>(r)));
    for (long n = 0; n <= trunc; ++n) {
        if (!quot.coeff(n).is_polynomial())
            throw verification_error("quotient coefficient of q^" + std::to_string(n) +
                                     " did not cancel to a polynomial: " + quot.coeff(n).str());
    }
    return quot;
}

QSeries psi_substitute(const QSeries& f, long k) {
    if (k < 1) throw std::invalid_argument("psi_substitute needs k >= 1");
    QSeries s(f.trunc());
    for (long n = 0; n * k <= f.trunc(); ++n) {
        const TRat& c = f.coeff(n);
        if (!c.is_zero()) s.set_coeff(n * k, c.substituted_power(k));
    }
    return s;
}

QSeries plethystic_exp(const QSeries& f, long trunc) {
    long t = std::min(trunc, f.trunc());
    if (!f.coeff(0).is_zero())
        throw std::domain_error("plethystic exponential needs a series with zero constant term");
    QSeries arg(t);
    for (long k = 1; k <= t; ++k) {
        QSeries p = psi_substitute(f.truncated(t), k);
        for (long n = 0; n <= t; ++n) {
            if (!p.coeff(n).is_zero()) arg.set_coeff(n, arg.coeff(n) + p.coeff(n) * TRat(TPoly(1), TPoly(k)));
        }
    }
    QSeries result = QSeries::one(t);
    QSeries term = QSeries::one(t);
    for (long i = 1; i <= t; ++i) {
        term = term * arg;
        QSeries scaled(t);
        for (long n = 0; n <= t; ++n)
            if (!term.coeff(n).is_zero()) scaled.set_coeff(n, term.coeff(n) * TRat(TPoly(1), TPoly(i)));
        term = scaled;
        result += term;
    }
    return result;
}

QSeries dt_plethystic_argument(int r, long trunc) {
    check_rank(r);
    // numerator (-1)^r T^3 [r]_T q
    TPoly num;
    for (int i = 0; i < r; ++i) num.add_term(3 + r - 1 - 2 * i, (r % 2 == 0) ? 1 : -1);
    // geometric factors for the two poles (-1/T)^r and (-T)^r
    auto geometric = [&](long texp) {
        QSeries g(trunc);
        for (long n = 0; n <= trunc; ++n) {
            long sign = (r % 2 != 0 && n % 2 != 0) ? -1 : 1;
            g.set_coeff(n, TRat(TPoly::monomial(texp * n, sign)));
        }
        return g;
    };
    QSeries s(trunc);
    QSeries both = geometric(-static_cast<long>(r)) * geometric(static_cast<long>(r));
    for (long n = 1; n <= trunc; ++n) s.set_coeff(n, TRat(num) * both.coeff(n - 1));
    return s;
}

QSeries dt_via_plethystic(int r, long trunc) {
    // the q -> -q substitution for odd ranks must happen before the plethystic
    // exponential: psi_k sees -q^k from the substituted argument, which differs
    // from (-q)^k for even k
    QSeries arg = dt_plethystic_argument(r, trunc);
    if (r % 2 != 0) arg = arg.q_negate();
    return plethystic_exp(arg, trunc);
}

bool telescope_check(int r, long m, long window) {
    check_rank(r);
    if (m < 1) throw std::invalid_argument("telescope_check needs m >= 1");
    long rm = static_cast<long>(r) * m;
    if (window < 0) window = 2 * rm;
    if (window < 2 * rm)
        throw std::invalid_argument("telescope window " + std::to_string(window) + " is below 2rm = " +
                                    std::to_string(2 * rm));
    std::map<long, long> bag;
    for (long j = 0; j < window; ++j) {
        bag[2 - 2 * j + rm] += 1;
        bag[2 - 2 * j - rm] -= 1;
    }
    std::map<long, long> cleaned;
    for (const auto& [e, c] : bag)
        if (c != 0) cleaned[e] = c;
    // surplus must be the top rm numerator exponents, deficit the bottom rm
    // denominator exponents; everything between cancels pairwise
    std::map<long, long> expected;
    for (long j = 0; j < rm; ++j) {
        expected[2 - 2 * j + rm] += 1;
        expected[2 - 2 * (window - rm + j) - rm] -= 1;
    }
    return cleaned == expected;
}

} // namespace mdt
