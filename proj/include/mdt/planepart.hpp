#pragma once
#include <array>
#include <functional>
#include <map>
#include <vector>

#include "mdt/ring.hpp"

namespace mdt {

// A plane partition: rows of weakly decreasing positive entries, row lengths
// weakly decreasing, and entries weakly decreasing down each column.
class PlanePartition {
public:
    PlanePartition() = default; // the empty partition
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    long size() const; // sum of all entries
    PlanePartition transpose() const; // reflect rows and columns

    bool operator==(const PlanePartition& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// diagonal trace statistics: entry sums on, above and below the main diagonal
struct PPStats {
    long size = 0;
    long diag = 0;
    long upper = 0;
    long lower = 0;
};

PPStats stats(const PlanePartition& pp);

// all plane partitions of the given size, in a fixed deterministic order
// (first rows in descending lexicographic order, then recursively); memoized
const std::vector<PlanePartition>& enumerate_pp(long n);
const std::vector<PPStats>& enumerate_pp_stats(long n);

// an r-tuple of plane partitions, indexed l = 1..r
struct ColoredPP {
    std::vector<PlanePartition> parts;
};

// weight data of a colored tuple of total size n:
//   x = sum_l (diag_l + upper_l), y = sum_l l * |pi_l|, z = sum_l diag_l,
//   s = 4z - 2x - 2y + (r + 2) n
struct ColoredStats {
    long x = 0;
    long y = 0;
    long z = 0;
    long s = 0;
};

ColoredStats colored_stats(int r, const ColoredPP& cpp);

// visit every r-tuple with total size n in a fixed deterministic order
// (compositions of n in lexicographic order, partitions per slot in
// enumeration order); fn receives the tuple
void iterate_colored(int r, long n, const std::function<void(const ColoredPP&)>& fn);

// number of r-tuples of plane partitions with total size n, via the
// divisor-power recurrence for prod (1-q^m)^{-rm}
mpz_class count_colored(int r, long n);

// polynomial in three formal exponents (u, v, w) with integer coefficients
class TriPoly {
public:
    using Key = std::array<long, 3>;
    using Terms = std::map<Key, mpz_class>;

    TriPoly() = default;
    static TriPoly one();

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Key& k, const mpz_class& c);

    TriPoly& operator+=(const TriPoly& o);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    TriPoly shifted(const Key& k) const; // multiply by u^k0 v^k1 w^k2
    mpz_class eval_ones() const;         // u = v = w = 1

    bool operator==(const TriPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TriPoly& o) const { return !(*this == o); }

private:
    Terms terms_;
};

// size-n weight polynomial sum over r-tuples of T^s, by direct enumeration
TPoly m_poly_enum(int r, long n, int jobs = 1);

// trivariate refinement Q_n(u, v, w): direct enumeration assigns each tuple
// u^x v^y w^z; the series route extracts [z^n] of
//   prod_{l=1}^{r} prod_{m>=1} prod_{k=1}^{m} (1 - w u^k v^{m l} z^m)^{-1}
TriPoly q_poly_enum(int r, long n, int jobs = 1);
TriPoly q_poly_series(int r, long n);

// specialization u = v = T^{-2}, w = T^4 times the prefactor T^{(r+2)n};
// cross-checked against m_poly_enum, throws verification_error on mismatch
TPoly m_from_q(int r, long n, const TriPoly& q);

// histogram of the weight statistic s over all r-tuples of size n
enum class DistSource { Enumeration, WeightPolynomial };

struct Distribution {
    std::map<long, mpz_class> histogram;
    mpz_class total = 0;
    mpq_class mean;
    mpq_class variance;
};

Distribution distribution(int r, long n, DistSource source, int jobs = 1);

} // namespace mdt
