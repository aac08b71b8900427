#pragma once
#include <gmpxx.h>

#include <vector>

namespace mdt {

// Dense n x n matrix over F_q, entries stored row-major mod q.
struct FFMatrix {
    int n = 0;
    int q = 2;
    std::vector<int> e;

    FFMatrix(int n_, int q_) : n(n_), q(q_), e(static_cast<size_t>(n_) * n_, 0) {}
    int at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
    void set(int i, int j, int v) { e[static_cast<size_t>(i) * n + j] = v; }

    friend FFMatrix operator*(const FFMatrix& a, const FFMatrix& b);
    bool operator==(const FFMatrix& o) const = default;
};

// decode index in [0, q^{n^2}) into a matrix, row-major little-endian digits
FFMatrix ff_matrix_from_index(int n, int q, unsigned long idx);

// number of ordered commuting pairs in M_n(F_q)^2 by exhaustive enumeration;
// refuses inputs beyond a fixed work budget so the oracle stays honest and
// cheap (q in {2, 3}, and q^{2 n^2} at most 2^28)
mpz_class commuting_pairs_count(int n, int q, int jobs = 1);

// |GL_n(F_q)| by exhaustive rank computation, same budget regime
mpz_class gl_count(int n, int q);

// checks the y^n coefficient of the commuting-matrix series at L = q
// against the two exhaustive counts above, as exact rationals
bool feit_fine_point_check(int n, int q);

} // namespace mdt
