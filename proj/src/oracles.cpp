#include "mdt/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mdt/parallel.hpp"
#include "mdt/qseries.hpp"

namespace mdt {

FFMatrix operator*(const FFMatrix& a, const FFMatrix& b) {
    FFMatrix c(a.n, a.q);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            int v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < a.n; ++j) c.e[static_cast<size_t>(i) * a.n + j] += v * b.at(k, j);
        }
    for (auto& v : c.e) v %= c.q;
    return c;
}

FFMatrix ff_matrix_from_index(int n, int q, unsigned long idx) {
    FFMatrix m(n, q);
    for (auto& v : m.e) {
        v = static_cast<int>(idx % static_cast<unsigned long>(q));
        idx /= static_cast<unsigned long>(q);
    }
    return m;
}

namespace {

unsigned long pow_ul(unsigned long b, int e) {
    unsigned long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void check_budget(int n, int q) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    if (q != 2 && q != 3) throw std::invalid_argument("q must be 2 or 3");
    // 2 n^2 base-q digits of work for the pair enumeration
    double work = std::pow(static_cast<double>(q), 2.0 * n * n);
    if (work > static_cast<double>(1UL << 28))
        throw std::domain_error("enumeration budget exceeded for n=" + std::to_string(n) +
                                ", q=" + std::to_string(q));
}

int rank_mod_q(FFMatrix m) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.n && row < m.n; ++col) {
        int piv = -1;
        for (int i = row; i < m.n; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.n; ++j) {
            int t = m.at(row, j);
            m.set(row, j, m.at(piv, j));
            m.set(piv, j, t);
        }
        // scale pivot row to 1 (q prime, brute-force inverse)
        int pv = m.at(row, col);
        int inv = 1;
        while ((pv * inv) % m.q != 1) ++inv;
        for (int j = 0; j < m.n; ++j) m.set(row, j, (m.at(row, j) * inv) % m.q);
        for (int i = 0; i < m.n; ++i) {
            if (i == row) continue;
            int f = m.at(i, col);
            if (f == 0) continue;
            for (int j = 0; j < m.n; ++j) {
                int v = m.at(i, j) - f * m.at(row, j);
                v %= m.q;
                if (v < 0) v += m.q;
                m.set(i, j, v);
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

mpz_class commuting_pairs_count(int n, int q, int jobs) {
    check_budget(n, q);
    unsigned long count = pow_ul(static_cast<unsigned long>(q), n * n);
    mpz_class total = 0;
    indexed_map_fold(
        count, jobs, total,
        [&](size_t ia) {
            FFMatrix a = ff_matrix_from_index(n, q, ia);
            unsigned long local = 0;
            for (unsigned long ib = 0; ib < count; ++ib) {
                FFMatrix b = ff_matrix_from_index(n, q, ib);
                if (a * b == b * a) ++local;
            }
            return mpz_class(local);
        },
        [](mpz_class& acc, mpz_class&& part) { acc += part; });
    return total;
}

mpz_class gl_count(int n, int q) {
    check_budget(n, q);
    unsigned long count = pow_ul(static_cast<unsigned long>(q), n * n);
    mpz_class total = 0;
    for (unsigned long i = 0; i < count; ++i) {
        if (rank_mod_q(ff_matrix_from_index(n, q, i)) == n) ++total;
    }
    return total;
}

bool feit_fine_point_check(int n, int q) {
    check_budget(n, q);
    QSeries ff = feit_fine(n);
    mpq_class lhs = ff.coeff(n).eval_l(mpq_class(q));
    mpq_class rhs(commuting_pairs_count(n, q), gl_count(n, q));
    rhs.canonicalize();
    return lhs == rhs;
}

} // namespace mdt
