#include "mdt/quiver.hpp"

#include <cmath>
#include <deque>
#include <sstream>

namespace mdt {

// --------------------------------------------------------------- quiver ----

void Quiver::validate() const {
    if (vertices < 0) throw std::invalid_argument("quiver needs a nonnegative vertex count");
    for (const auto& [t, h] : edges)
        if (t < 0 || t >= vertices || h < 0 || h >= vertices)
            throw std::invalid_argument("quiver edge endpoint out of range");
}

Quiver three_loop_quiver() {
    Quiver q;
    q.vertices = 1;
    q.edges = {{0, 0}, {0, 0}, {0, 0}};
    return q;
}

Quiver framed(const Quiver& q, int target, int arrows) {
    q.validate();
    if (target < 0 || target >= q.vertices) throw std::invalid_argument("framing target out of range");
    if (arrows < 0) throw std::invalid_argument("framing arrow count must be >= 0");
    Quiver f;
    f.vertices = q.vertices + 1;
    for (const auto& [t, h] : q.edges) f.edges.emplace_back(t + 1, h + 1);
    for (int i = 0; i < arrows; ++i) f.edges.emplace_back(0, target + 1);
    return f;
}

namespace {

void check_dim(const Quiver& q, const DimVector& d) {
    if (static_cast<int>(d.size()) != q.vertices)
        throw std::invalid_argument("dimension vector length does not match the quiver");
}

long total_dim(const DimVector& d) {
    long s = 0;
    for (long v : d) s += v;
    return s;
}

} // namespace

long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    check_dim(q, a);
    check_dim(q, b);
    long s = 0;
    for (int i = 0; i < q.vertices; ++i) s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    for (const auto& [t, h] : q.edges) s -= a[static_cast<size_t>(t)] * b[static_cast<size_t>(h)];
    return s;
}

long skew_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    return euler_form(q, a, b) - euler_form(q, b, a);
}

double phase(const std::vector<double>& zeta, const DimVector& d) {
    if (zeta.size() != d.size()) throw std::invalid_argument("stability vector length mismatch");
    double dot = 0;
    long tot = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        dot += zeta[i] * static_cast<double>(d[i]);
        tot += d[i];
    }
    if (tot == 0) throw std::invalid_argument("phase of the zero dimension vector");
    return std::atan2(static_cast<double>(tot), -dot) / std::acos(-1.0);
}

// --------------------------------------------------------- quantum torus ----

TorusElement::TorusElement(Quiver q, long trunc) : quiver_(std::move(q)), trunc_(trunc) {
    quiver_.validate();
    if (trunc < 0) throw std::invalid_argument("torus truncation must be >= 0");
}

TorusElement TorusElement::unit(Quiver q, long trunc) {
    TorusElement e(std::move(q), trunc);
    e.add_term(DimVector(static_cast<size_t>(e.quiver_.vertices), 0), TRat(1));
    return e;
}

TorusElement TorusElement::monomial(Quiver q, long trunc, const DimVector& d, TRat c) {
    TorusElement e(std::move(q), trunc);
    check_dim(e.quiver_, d);
    e.add_term(d, c);
    return e;
}

void TorusElement::add_term(const DimVector& d, const TRat& c) {
    check_dim(quiver_, d);
    for (long v : d)
        if (v < 0) throw std::invalid_argument("dimension vectors must be nonnegative");
    if (total_dim(d) > trunc_ || c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
    if (a.quiver_ != b.quiver_) throw std::invalid_argument("torus elements live over different quivers");
    TorusElement s(a.quiver_, std::min(a.trunc_, b.trunc_));
    for (const auto& [d, c] : a.terms_)
        if (total_dim(d) <= s.trunc_) s.add_term(d, c);
    for (const auto& [d, c] : b.terms_)
        if (total_dim(d) <= s.trunc_) s.add_term(d, c);
    return s;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    if (a.quiver_ != b.quiver_) throw std::invalid_argument("torus elements live over different quivers");
    TorusElement s(a.quiver_, std::min(a.trunc_, b.trunc_));
    DimVector sum(static_cast<size_t>(s.quiver_.vertices));
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            long tot = total_dim(da) + total_dim(db);
            if (tot > s.trunc_) continue;
            for (size_t i = 0; i < sum.size(); ++i) sum[i] = da[i] + db[i];
            long tw = skew_form(s.quiver_, da, db);
            s.add_term(sum, TRat(TPoly::monomial(tw)) * ca * cb);
        }
    }
    return s;
}

bool TorusElement::operator==(const TorusElement& o) const {
    return quiver_ == o.quiver_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

// --------------------------------------------------- wall-crossing check ----

TorusElement universal_cm_series(int r, long trunc) {
    Quiver fq = framed(three_loop_quiver(), 0, r);
    QSeries ff = feit_fine(trunc);
    TorusElement e(fq, trunc);
    for (long n = 0; n <= trunc; ++n) e.add_term({0, n}, ff.coeff(n));
    return e;
}

TorusElement framed_vacuum(int r, long trunc) {
    Quiver fq = framed(three_loop_quiver(), 0, r);
    return TorusElement::monomial(fq, trunc, {1, 0}, TRat(1));
}

TorusElement framed_dt_side(int r, long trunc) {
    Quiver fq = framed(three_loop_quiver(), 0, r);
    QSeries dt = expand_dt(r, trunc);
    TorusElement sum(fq, trunc);
    for (long n = 0; n <= trunc; ++n)
        sum.add_term({0, n}, TRat(TPoly::monomial(-static_cast<long>(r) * n)) * dt.coeff(n));
    return sum * framed_vacuum(r, trunc);
}

WallCrossReport wall_crossing_identity(const TorusElement& zp, const TorusElement& au,
                                       const TorusElement& zm) {
    TorusElement lhs = zp * au;
    TorusElement rhs = au * zm;
    WallCrossReport rep;
    auto li = lhs.terms().begin();
    auto ri = rhs.terms().begin();
    while (li != lhs.terms().end() || ri != rhs.terms().end()) {
        if (li != lhs.terms().end() && ri != rhs.terms().end() && li->first == ri->first) {
            if (li->second != ri->second) {
                rep.ok = false;
                rep.mismatch = li->first;
                rep.detail = "coefficient mismatch: " + li->second.str() + " vs " + ri->second.str();
                return rep;
            }
            ++li;
            ++ri;
            continue;
        }
        bool take_left = ri == rhs.terms().end() ||
                         (li != lhs.terms().end() && li->first < ri->first);
        const auto& it = take_left ? li : ri;
        rep.ok = false;
        rep.mismatch = it->first;
        rep.detail = take_left ? "term missing on the right: " + it->second.str()
                               : "term missing on the left: " + it->second.str();
        return rep;
    }
    return rep;
}

WallCrossReport wall_crossing_check(int r, long trunc) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    TorusElement au = universal_cm_series(r, trunc);
    return wall_crossing_identity(framed_dt_side(r, trunc), au, framed_vacuum(r, trunc));
}

// -------------------------------------------------- framed representations ----

void FramedRep::validate() const {
    if (n < 0) throw std::invalid_argument("representation dimension must be >= 0");
    size_t un = static_cast<size_t>(n);
    for (const QMat& m : a) {
        if (m.size() != un) throw std::invalid_argument("matrix size does not match n");
        for (const auto& row : m)
            if (row.size() != un) throw std::invalid_argument("matrix row length does not match n");
    }
    if (u.empty()) throw std::invalid_argument("at least one framing vector is required");
    for (const QVec& v : u)
        if (v.size() != un) throw std::invalid_argument("framing vector length does not match n");
}

namespace {

QVec mat_apply(const QMat& m, const QVec& v) {
    QVec out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        mpq_class s = 0;
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) s += m[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size();
    QMat out(n, QVec(n, mpq_class(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

} // namespace

long framed_span(const FramedRep& rep) {
    rep.validate();
    if (rep.n == 0) return 0;
    // echelon basis keyed by pivot position, every stored vector has a unit
    // pivot; reduction sweeps pivots in increasing order
    std::map<size_t, QVec> basis;
    auto reduce_insert = [&](QVec v) -> const QVec* {
        for (const auto& [p, row] : basis) {
            if (v[p] == 0) continue;
            mpq_class f = v[p];
            for (size_t j = 0; j < v.size(); ++j)
                if (row[j] != 0) v[j] -= f * row[j];
        }
        size_t pivot = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { pivot = j; break; }
        if (pivot == v.size()) return nullptr;
        mpq_class inv = 1 / v[pivot];
        for (size_t j = pivot; j < v.size(); ++j)
            if (v[j] != 0) v[j] *= inv;
        return &basis.emplace(pivot, std::move(v)).first->second;
    };
    std::deque<QVec> queue(rep.u.begin(), rep.u.end());
    while (!queue.empty() && static_cast<long>(basis.size()) < rep.n) {
        QVec v = std::move(queue.front());
        queue.pop_front();
        const QVec* added = reduce_insert(std::move(v));
        if (!added) continue;
        for (const QMat& m : rep.a) queue.push_back(mat_apply(m, *added));
    }
    return static_cast<long>(basis.size());
}

bool is_stable_neg(const FramedRep& rep) { return framed_span(rep) == rep.n; }

mpq_class trace_potential(const QMat& a1, const QMat& a2, const QMat& a3) {
    QMat comm = mat_mul(a2, a3);
    QMat ba = mat_mul(a3, a2);
    for (size_t i = 0; i < comm.size(); ++i)
        for (size_t j = 0; j < comm.size(); ++j) comm[i][j] -= ba[i][j];
    QMat prod = mat_mul(a1, comm);
    mpq_class tr = 0;
    for (size_t i = 0; i < prod.size(); ++i) tr += prod[i][i];
    return tr;
}

bool is_critical(const QMat& a1, const QMat& a2, const QMat& a3) {
    auto commutes = [](const QMat& x, const QMat& y) {
        QMat xy = mat_mul(x, y);
        QMat yx = mat_mul(y, x);
        return xy == yx;
    };
    return commutes(a1, a2) && commutes(a2, a3) && commutes(a3, a1);
}

} // namespace mdt
