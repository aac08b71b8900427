#include "mdt/planepart.hpp"

#include <deque>
#include <mutex>

#include "mdt/parallel.hpp"
#include "mdt/qseries.hpp"

namespace mdt {

// ------------------------------------------------------- PlanePartition ----

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty()) throw std::invalid_argument("plane partition rows must be nonempty");
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) throw std::invalid_argument("plane partition entries must be positive");
            if (j + 1 < row.size() && row[j + 1] > row[j])
                throw std::invalid_argument("plane partition rows must weakly decrease");
        }
        if (i + 1 < rows_.size()) {
            const auto& below = rows_[i + 1];
            if (below.size() > row.size())
                throw std::invalid_argument("plane partition row lengths must weakly decrease");
            for (size_t j = 0; j < below.size(); ++j)
                if (below[j] > row[j])
                    throw std::invalid_argument("plane partition columns must weakly decrease");
        }
    }
}

long PlanePartition::size() const {
    long s = 0;
    for (const auto& row : rows_)
        for (int e : row) s += e;
    return s;
}

PlanePartition PlanePartition::transpose() const {
    if (rows_.empty()) return PlanePartition();
    std::vector<std::vector<int>> t(rows_[0].size());
    for (const auto& row : rows_)
        for (size_t j = 0; j < row.size(); ++j) t[j].push_back(row[j]);
    return PlanePartition(std::move(t));
}

PPStats stats(const PlanePartition& pp) {
    PPStats st;
    const auto& rows = pp.rows();
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            st.size += rows[i][j];
            if (j == i)
                st.diag += rows[i][j];
            else if (j > i)
                st.upper += rows[i][j];
            else
                st.lower += rows[i][j];
        }
    }
    return st;
}

// ---------------------------------------------------------- enumeration ----

namespace {

void gen_next_rows(std::vector<std::vector<int>>& acc, const std::vector<int>& bound, long remaining,
                   std::vector<PlanePartition>& out) {
    if (remaining == 0) {
        out.push_back(PlanePartition(acc));
        return;
    }
    // next row: partition bounded by the row above, descending lexicographic,
    // longer rows before their proper prefixes
    std::vector<int> row;
    auto rec = [&](auto&& self, size_t j, int prev, long left) -> void {
        if (j < bound.size()) {
            int maxp = static_cast<int>(std::min<long>(std::min(prev, bound[j]), left));
            for (int p = maxp; p >= 1; --p) {
                row.push_back(p);
                self(self, j + 1, p, left - p);
                row.pop_back();
            }
        }
        if (!row.empty()) {
            acc.push_back(row);
            gen_next_rows(acc, row, left, out);
            acc.pop_back();
        }
    };
    rec(rec, 0, static_cast<int>(remaining), remaining);
}

std::mutex pp_cache_mutex;
// deques so references handed out earlier survive later growth
std::deque<std::vector<PlanePartition>> pp_cache;
std::deque<std::vector<PPStats>> pp_stats_cache;

void fill_cache(long n) {
    if (n < 0) throw std::invalid_argument("plane partition size must be >= 0");
    std::lock_guard<std::mutex> lock(pp_cache_mutex);
    while (static_cast<long>(pp_cache.size()) <= n) {
        long k = static_cast<long>(pp_cache.size());
        std::vector<PlanePartition> list;
        if (k == 0) {
            list.push_back(PlanePartition());
        } else {
            std::vector<std::vector<int>> acc;
            std::vector<int> top(static_cast<size_t>(k), static_cast<int>(k));
            gen_next_rows(acc, top, k, list);
        }
        std::vector<PPStats> sts;
        sts.reserve(list.size());
        for (const auto& pp : list) sts.push_back(stats(pp));
        pp_cache.push_back(std::move(list));
        pp_stats_cache.push_back(std::move(sts));
    }
}

} // namespace

const std::vector<PlanePartition>& enumerate_pp(long n) {
    fill_cache(n);
    return pp_cache[static_cast<size_t>(n)];
}

const std::vector<PPStats>& enumerate_pp_stats(long n) {
    fill_cache(n);
    return pp_stats_cache[static_cast<size_t>(n)];
}

// -------------------------------------------------------- colored tuples ----

ColoredStats colored_stats(int r, const ColoredPP& cpp) {
    if (static_cast<int>(cpp.parts.size()) != r)
        throw std::invalid_argument("colored tuple must have exactly r components");
    ColoredStats cs;
    long n = 0;
    for (int l = 1; l <= r; ++l) {
        PPStats st = stats(cpp.parts[static_cast<size_t>(l - 1)]);
        cs.x += st.diag + st.upper;
        cs.y += static_cast<long>(l) * st.size;
        cs.z += st.diag;
        n += st.size;
    }
    cs.s = 4 * cs.z - 2 * cs.x - 2 * cs.y + (static_cast<long>(r) + 2) * n;
    return cs;
}

namespace {

std::vector<std::vector<long>> compositions(int r, long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(static_cast<size_t>(r));
    auto rec = [&](auto&& self, int slot, long left) -> void {
        if (slot == r - 1) {
            cur[static_cast<size_t>(slot)] = left;
            out.push_back(cur);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            cur[static_cast<size_t>(slot)] = k;
            self(self, slot + 1, left - k);
        }
    };
    if (r >= 1) rec(rec, 0, n);
    return out;
}

// visit the stats tuples of one composition; fn(x, y, z, n)
template <class Fn>
void visit_composition_stats(int r, const std::vector<long>& comp, Fn&& fn) {
    std::vector<const std::vector<PPStats>*> lists;
    lists.reserve(static_cast<size_t>(r));
    for (int l = 0; l < r; ++l) lists.push_back(&enumerate_pp_stats(comp[static_cast<size_t>(l)]));
    long n = 0;
    for (long k : comp) n += k;
    auto rec = [&](auto&& self, int l, long x, long y, long z) -> void {
        if (l == r) {
            fn(x, y, z, n);
            return;
        }
        for (const PPStats& st : *lists[static_cast<size_t>(l)])
            self(self, l + 1, x + st.diag + st.upper, y + static_cast<long>(l + 1) * st.size, z + st.diag);
    };
    rec(rec, 0, 0, 0, 0);
}

void check_colored_args(int r, long n) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (n < 0) throw std::invalid_argument("size must be >= 0");
}

} // namespace

void iterate_colored(int r, long n, const std::function<void(const ColoredPP&)>& fn) {
    check_colored_args(r, n);
    for (const auto& comp : compositions(r, n)) {
        std::vector<const std::vector<PlanePartition>*> lists;
        for (int l = 0; l < r; ++l) lists.push_back(&enumerate_pp(comp[static_cast<size_t>(l)]));
        ColoredPP cpp;
        cpp.parts.resize(static_cast<size_t>(r));
        auto rec = [&](auto&& self, int l) -> void {
            if (l == r) {
                fn(cpp);
                return;
            }
            for (const PlanePartition& pp : *lists[static_cast<size_t>(l)]) {
                cpp.parts[static_cast<size_t>(l)] = pp;
                self(self, l + 1);
            }
        };
        rec(rec, 0);
    }
}

mpz_class count_colored(int r, long n) {
    check_colored_args(r, n);
    // q d/dq log prod (1-q^m)^{-rm} gives n c_n = r sum_k sigma_2(k) c_{n-k}
    std::vector<mpz_class> sigma2(static_cast<size_t>(n) + 1);
    for (long d = 1; d <= n; ++d)
        for (long k = d; k <= n; k += d) sigma2[static_cast<size_t>(k)] += mpz_class(d) * d;
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    for (long m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (long k = 1; k <= m; ++k) acc += sigma2[static_cast<size_t>(k)] * c[static_cast<size_t>(m - k)];
        acc *= r;
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
        c[static_cast<size_t>(m)] = q;
    }
    return c[static_cast<size_t>(n)];
}

// -------------------------------------------------------------- TriPoly ----

TriPoly TriPoly::one() {
    TriPoly p;
    p.add_term({0, 0, 0}, 1);
    return p;
}

void TriPoly::add_term(const Key& k, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TriPoly TriPoly::shifted(const Key& k) const {
    TriPoly r;
    for (const auto& [key, c] : terms_) r.terms_.emplace(Key{key[0] + k[0], key[1] + k[1], key[2] + k[2]}, c);
    return r;
}

mpz_class TriPoly::eval_ones() const {
    mpz_class s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

// ------------------------------------------------------ weight polynomials ----

TPoly m_poly_enum(int r, long n, int jobs) {
    check_colored_args(r, n);
    enumerate_pp_stats(n); // warm the cache before any worker threads start
    auto comps = compositions(r, n);
    TPoly acc;
    indexed_map_fold(
        comps.size(), jobs, acc,
        [&](size_t i) {
            TPoly part;
            visit_composition_stats(r, comps[i], [&](long x, long y, long z, long total) {
                part.add_term(4 * z - 2 * x - 2 * y + (static_cast<long>(r) + 2) * total, 1);
            });
            return part;
        },
        [](TPoly& a, TPoly&& b) { a += b; });
    return acc;
}

TriPoly q_poly_enum(int r, long n, int jobs) {
    check_colored_args(r, n);
    enumerate_pp_stats(n);
    auto comps = compositions(r, n);
    TriPoly acc;
    indexed_map_fold(
        comps.size(), jobs, acc,
        [&](size_t i) {
            TriPoly part;
            visit_composition_stats(r, comps[i],
                                    [&](long x, long y, long z, long) { part.add_term({x, y, z}, 1); });
            return part;
        },
        [](TriPoly& a, TriPoly&& b) { a += b; });
    return acc;
}

TriPoly q_poly_series(int r, long n) {
    check_colored_args(r, n);
    // geometric recurrence per factor (1 - w u^k v^{ml} z^m)^{-1} on the
    // z-coefficient rows
    std::vector<TriPoly> c(static_cast<size_t>(n) + 1);
    c[0] = TriPoly::one();
    for (int l = 1; l <= r; ++l)
        for (long m = 1; m <= n; ++m)
            for (long k = 1; k <= m; ++k)
                for (long j = m; j <= n; ++j)
                    c[static_cast<size_t>(j)] +=
                        c[static_cast<size_t>(j - m)].shifted({k, m * static_cast<long>(l), 1});
    return c[static_cast<size_t>(n)];
}

TPoly m_from_q(int r, long n, const TriPoly& q) {
    check_colored_args(r, n);
    TPoly out;
    for (const auto& [key, c] : q.terms())
        out.add_term((static_cast<long>(r) + 2) * n - 2 * key[0] - 2 * key[1] + 4 * key[2], c);
    TPoly direct = m_poly_enum(r, n);
    if (out != direct)
        throw verification_error("trivariate specialization disagrees with direct enumeration at r=" +
                                 std::to_string(r) + ", n=" + std::to_string(n));
    return out;
}

// --------------------------------------------------------- distribution ----

Distribution distribution(int r, long n, DistSource source, int jobs) {
    check_colored_args(r, n);
    Distribution d;
    if (source == DistSource::WeightPolynomial) {
        QSeries s = expand_dt(r, n);
        TPoly p = s.coeff(n).polynomial();
        for (const auto& [e, c] : p.terms()) {
            if (c < 0)
                throw verification_error("weight polynomial has a negative coefficient at T^" +
                                         std::to_string(e));
            d.histogram[e] = c;
        }
    } else {
        TPoly p = m_poly_enum(r, n, jobs);
        for (const auto& [e, c] : p.terms()) d.histogram[e] = c;
    }
    mpq_class sum1 = 0, sum2 = 0;
    for (const auto& [s, c] : d.histogram) {
        d.total += c;
        sum1 += mpq_class(s) * c;
        sum2 += mpq_class(s) * s * c;
    }
    if (d.total != count_colored(r, n))
        throw verification_error("histogram mass disagrees with the tuple count at r=" + std::to_string(r) +
                                 ", n=" + std::to_string(n));
    d.mean = sum1 / d.total;
    d.variance = sum2 / d.total - d.mean * d.mean;
    d.mean.canonicalize();
    d.variance.canonicalize();
    return d;
}

} // namespace mdt
