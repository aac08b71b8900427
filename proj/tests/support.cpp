#include "support.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "mdt/asymptotic.hpp"
#include "mdt/error.hpp"
#include "mdt/oracles.hpp"
#include "mdt/planepart.hpp"

namespace testsup {

using namespace mdt;

long rand_long(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

TPoly random_tpoly(Rng& rng, int max_terms, long exp_lo, long exp_hi, long coeff_bound,
                   bool nonzero) {
    TPoly p;
    long terms = rand_long(rng, nonzero ? 1 : 0, max_terms);
    for (long i = 0; i < terms; ++i)
        p.add_term(rand_long(rng, exp_lo, exp_hi), mpz_class(rand_long(rng, -coeff_bound, coeff_bound)));
    if (nonzero && p.is_zero()) p.add_term(rand_long(rng, exp_lo, exp_hi), mpz_class(1));
    return p;
}

TRat random_trat(Rng& rng) {
    return TRat(random_tpoly(rng, 3, -3, 3, 4, false), random_tpoly(rng, 2, 0, 2, 3, true));
}

TRat random_trat_nonzero(Rng& rng) {
    return TRat(random_tpoly(rng, 3, -3, 3, 4, true), random_tpoly(rng, 2, 0, 2, 3, true));
}

QSeries random_qseries(Rng& rng, long trunc) {
    QSeries f(trunc);
    for (long n = 0; n <= trunc; ++n)
        f.set_coeff(n, TRat(random_tpoly(rng, 2, -2, 2, 3, false), random_tpoly(rng, 1, 0, 1, 2, true)));
    return f;
}

QSeries random_unit_qseries(Rng& rng, long trunc) {
    QSeries f = random_qseries(rng, trunc);
    long num = rand_long(rng, 1, 3) * (rand_long(rng, 0, 1) != 0 ? 1 : -1);
    f.set_coeff(0, TRat(TPoly(num), TPoly(rand_long(rng, 1, 3))));
    return f;
}

QMat random_qmat(Rng& rng, long n, long bound) {
    QMat m(static_cast<size_t>(n), QVec(static_cast<size_t>(n)));
    for (auto& row : m)
        for (auto& x : row) x = rand_long(rng, -bound, bound);
    return m;
}

QVec random_qvec(Rng& rng, long n, long bound) {
    QVec v(static_cast<size_t>(n));
    for (auto& x : v) x = rand_long(rng, -bound, bound);
    return v;
}

FramedRep random_framed_rep(Rng& rng, long n, int framings, long bound) {
    FramedRep rep;
    rep.n = n;
    for (auto& m : rep.a) m = random_qmat(rng, n, bound);
    for (int l = 0; l < framings; ++l) rep.u.push_back(random_qvec(rng, n, bound));
    rep.validate();
    return rep;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size();
    QMat out(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

QVec qmat_apply(const QMat& a, const QVec& v) {
    size_t n = a.size();
    QVec out(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i] += a[i][j] * v[j];
    return out;
}

QMat qmat_inverse(const QMat& a) {
    size_t n = a.size();
    QMat m = a;
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            mpq_class f = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

QMat random_invertible(Rng& rng, long n, long bound) {
    QMat lo(static_cast<size_t>(n), QVec(static_cast<size_t>(n)));
    QMat up = lo;
    for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
        lo[i][i] = 1;
        up[i][i] = 1;
        for (size_t j = 0; j < i; ++j) lo[i][j] = rand_long(rng, -bound, bound);
        for (size_t j = i + 1; j < static_cast<size_t>(n); ++j) up[i][j] = rand_long(rng, -bound, bound);
    }
    return qmat_mul(lo, up);
}

namespace {

struct Collector {
    std::vector<std::string> bad;
    static constexpr size_t kMaxReports = 8;
    bool full() const { return bad.size() >= kMaxReports; }
    void check(bool ok, const std::string& msg) {
        if (!ok && !full()) bad.push_back(msg);
    }
};

std::string case_tag(int i) { return " (case " + std::to_string(i) + ")"; }

} // namespace

std::vector<std::string> ring_properties(int cases, std::uint64_t seed) {
    Collector c;
    Rng rng(seed);
    for (int i = 0; i < cases && !c.full(); ++i) {
        const std::string tag = case_tag(i);
        TRat a = random_trat(rng), b = random_trat(rng), d = random_trat(rng);
        c.check((a + b) + d == a + (b + d), "addition is not associative" + tag);
        c.check((a * b) * d == a * (b * d), "multiplication is not associative" + tag);
        c.check(a + b == b + a, "addition is not commutative" + tag);
        c.check(a * b == b * a, "multiplication is not commutative" + tag);
        c.check(a * (b + d) == a * b + a * d, "multiplication does not distribute" + tag);
        c.check(a - a == TRat(0), "a - a is not zero" + tag);
        c.check(a + TRat(0) == a, "zero is not neutral" + tag);
        c.check(a * TRat(1) == a, "one is not neutral" + tag);

        TRat v = a * b + d;
        if (v.num().is_zero()) {
            c.check(v.den().is_one(), "canonical zero is not 0/1" + tag);
        } else {
            c.check(v.den().min_exp() == 0 && v.den().coeff(0) != 0,
                    "denominator misses its constant-term normalization" + tag);
            c.check(v.den().leading_coeff() > 0, "denominator sign convention violated" + tag);
            c.check(gcd(v.num(), v.den()).is_one(), "num and den are not coprime" + tag);
            mpz_class cn = v.num().content(), cd = v.den().content(), g;
            mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
            c.check(g == 1, "num and den share integer content" + tag);
        }
        c.check(TRat(v.num(), v.den()) == v, "canonicalization is not idempotent" + tag);
        TPoly m = random_tpoly(rng, 2, -2, 2, 3, true);
        c.check(TRat(v.num() * m, v.den() * m) == v, "common polynomial factors change the value" + tag);

        TRat nz = random_trat_nonzero(rng);
        c.check(nz * (TRat(1) / nz) == TRat(1), "a * div(1, a) is not 1" + tag);
        c.check(nz.inverse().inverse() == nz, "double inverse is not the identity" + tag);

        const mpq_class t(3, 2);
        try {
            c.check((a * b).eval_t(t) == a.eval_t(t) * b.eval_t(t),
                    "evaluation does not respect products" + tag);
            c.check((a + b).eval_t(t) == a.eval_t(t) + b.eval_t(t),
                    "evaluation does not respect sums" + tag);
        } catch (const std::domain_error&) {
            // pole at the sample point; nothing to compare
        }
        try {
            long k = rand_long(rng, 1, 3);
            mpq_class tk = 1;
            for (long j = 0; j < k; ++j) tk *= t;
            c.check(a.substituted_power(k).eval_t(t) == a.eval_t(tk),
                    "power substitution disagrees with evaluation" + tag);
        } catch (const std::domain_error&) {
        }
    }
    for (long n = 1; n <= 2; ++n)
        for (int q : {2, 3})
            c.check(gl_class(n).eval_l(q) == mpq_class(gl_count(static_cast<int>(n), q)),
                    "gl_class(" + std::to_string(n) + ") at L=" + std::to_string(q) +
                        " misses the brute-force general linear count");
    return c.bad;
}

std::vector<std::string> qseries_properties(int cases, std::uint64_t seed) {
    Collector c;
    for (int r = 1; r <= 3 && !c.full(); ++r) {
        const std::string rtag = " at r=" + std::to_string(r);
        QSeries f = expand_dt(r, 10);
        for (long n = 0; n <= f.trunc(); ++n) {
            const TRat& x = f.coeff(n);
            if (!x.is_polynomial()) {
                c.check(false, "series coefficient grew a denominator" + rtag);
                continue;
            }
            bool nonneg = true;
            for (const auto& [e, z] : x.num().terms())
                if (z < 0) nonneg = false;
            c.check(nonneg, "series coefficient has a negative term" + rtag);
            c.check(x.num().is_zero() ? count_colored(r, n) == 0
                                      : x.num().eval_one() == count_colored(r, n),
                    "coefficient sum at T=1 misses the colored tuple count" + rtag);
        }
        c.check(specialize_euler(f) == macmahon_pow_int(r, r % 2 == 0 ? 1 : -1, 10),
                "Euler specialization misses the signed MacMahon power" + rtag);
    }
    for (int r = 1; r <= 4; ++r)
        c.check(expand_dt(r, 10) == expand_dt_factored(r, 10),
                "factored product disagrees with the direct expansion at r=" + std::to_string(r));
    for (int r = 1; r <= 2; ++r)
        c.check(wall_cross_dt(r, 8) == expand_dt(r, 8),
                "quotient route disagrees with the direct expansion at r=" + std::to_string(r));

    Rng rng(seed);
    for (int i = 0; i < cases && !c.full(); ++i) {
        const std::string tag = case_tag(i);
        long trunc = rand_long(rng, 3, 5);
        QSeries f = random_qseries(rng, trunc);
        QSeries g = random_qseries(rng, trunc);
        QSeries h = random_qseries(rng, trunc);
        c.check((f * g) * h == f * (g * h), "series multiplication is not associative" + tag);
        c.check(f * g == g * f, "series multiplication is not commutative" + tag);
        c.check((f + g) * h == f * h + g * h, "series multiplication does not distribute" + tag);
        QSeries u = random_unit_qseries(rng, trunc);
        c.check(u * u.inv() == QSeries::one(trunc), "inverse round-trip fails" + tag);
        c.check((f * u).div(u) == f, "division does not undo multiplication" + tag);
    }
    return c.bad;
}

std::vector<std::string> quiver_properties(int cases, std::uint64_t seed) {
    Collector c;
    for (int r = 1; r <= 2; ++r) {
        bool torus = wall_crossing_check(r, 5).ok;
        bool series = wall_cross_dt(r, 5) == expand_dt(r, 5);
        c.check(torus && series,
                "torus and series wall-crossing routes disagree at r=" + std::to_string(r));
    }

    Rng rng(seed);
    for (int i = 0; i < cases && !c.full(); ++i) {
        const std::string tag = case_tag(i);
        Quiver q;
        q.vertices = static_cast<int>(rand_long(rng, 1, 3));
        long edges = rand_long(rng, 0, 5);
        for (long e = 0; e < edges; ++e)
            q.edges.emplace_back(static_cast<int>(rand_long(rng, 0, q.vertices - 1)),
                                 static_cast<int>(rand_long(rng, 0, q.vertices - 1)));
        auto rdim = [&] {
            DimVector d(static_cast<size_t>(q.vertices));
            for (auto& x : d) x = rand_long(rng, -3, 3);
            return d;
        };
        DimVector a = rdim(), a2 = rdim(), b = rdim();
        DimVector asum(a.size());
        for (size_t j = 0; j < a.size(); ++j) asum[j] = a[j] + a2[j];
        c.check(skew_form(q, a, b) == -skew_form(q, b, a), "skew form is not antisymmetric" + tag);
        c.check(skew_form(q, a, a) == 0, "skew form does not vanish on the diagonal" + tag);
        c.check(skew_form(q, asum, b) == skew_form(q, a, b) + skew_form(q, a2, b),
                "skew form is not additive" + tag);
        c.check(euler_form(q, asum, b) == euler_form(q, a, b) + euler_form(q, a2, b),
                "Euler form is not additive" + tag);

        int r = static_cast<int>(rand_long(rng, 1, 3));
        Quiver fq = framed(three_loop_quiver(), 0, r);
        const long trunc = 6;
        auto rgrade = [&] { return DimVector{rand_long(rng, 0, 1), rand_long(rng, 0, 2)}; };
        DimVector da = rgrade(), db = rgrade(), dc = rgrade();
        TRat ca = random_trat_nonzero(rng), cb = random_trat_nonzero(rng),
             cc = random_trat_nonzero(rng);
        TorusElement xa = TorusElement::monomial(fq, trunc, da, ca);
        TorusElement xb = TorusElement::monomial(fq, trunc, db, cb);
        TorusElement xc = TorusElement::monomial(fq, trunc, dc, cc);
        c.check((xa * xb) * xc == xa * (xb * xc), "torus multiplication is not associative" + tag);
        TorusElement expect(fq, trunc);
        DimVector dsum{da[0] + db[0], da[1] + db[1]};
        if (dsum[0] + dsum[1] <= trunc)
            expect.add_term(dsum, TRat(TPoly::monomial(skew_form(fq, da, db))) * ca * cb);
        c.check(xa * xb == expect, "twisted product misses the skew-form law" + tag);
        c.check((xa + xb) * xc == xa * xc + xb * xc, "torus product is not bilinear" + tag);

        long n = rand_long(rng, 1, 3);
        FramedRep rep = random_framed_rep(rng, n, static_cast<int>(rand_long(rng, 1, 2)), 2);
        long dim = framed_span(rep);
        c.check(dim >= 0 && dim <= n, "span dimension out of range" + tag);
        FramedRep closed = rep;
        for (const QMat& m : rep.a)
            for (const QVec& v : rep.u) closed.u.push_back(qmat_apply(m, v));
        c.check(framed_span(closed) == dim, "span is not closed under the coordinate matrices" + tag);
        FramedRep grown = rep;
        grown.u.push_back(random_qvec(rng, n, 2));
        c.check(framed_span(grown) >= dim, "span shrank under an extra framing vector" + tag);

        QMat p = random_invertible(rng, n, 2);
        QMat pinv = qmat_inverse(p);
        FramedRep conj;
        conj.n = n;
        for (size_t j = 0; j < 3; ++j) conj.a[j] = qmat_mul(qmat_mul(p, rep.a[j]), pinv);
        for (const QVec& v : rep.u) conj.u.push_back(qmat_apply(p, v));
        c.check(framed_span(conj) == dim, "span is not invariant under basis change" + tag);
        c.check(is_stable_neg(conj) == is_stable_neg(rep),
                "stability is not invariant under basis change" + tag);
    }
    return c.bad;
}

std::vector<std::string> planepart_properties() {
    Collector c;
    std::vector<mpz_class> mm = macmahon_pow_int(1, 1, 8);
    for (long n = 0; n <= 8 && !c.full(); ++n) {
        const auto& pps = enumerate_pp(n);
        c.check(mpz_class(static_cast<long>(pps.size())) == mm[static_cast<size_t>(n)],
                "enumeration count misses the generating series at n=" + std::to_string(n));
        for (const auto& pp : pps) {
            PPStats st = stats(pp);
            c.check(st.size == n, "enumerated partition has the wrong size");
            c.check(st.size == st.diag + st.upper + st.lower,
                    "diagonal statistics do not add up to the size");
            PlanePartition tp = pp.transpose();
            PPStats ts = stats(tp);
            c.check(ts.diag == st.diag && ts.upper == st.lower && ts.lower == st.upper,
                    "transposition does not swap the off-diagonal sums");
            c.check(tp.transpose() == pp, "transposition is not an involution");
            if (c.full()) break;
        }
    }

    for (int r = 1; r <= 2; ++r)
        for (long n = 0; n <= 5 && !c.full(); ++n) {
            long tuples = 0;
            iterate_colored(r, n, [&](const ColoredPP& t) {
                ++tuples;
                ColoredStats cs = colored_stats(r, t);
                long x = 0, mixed = 0, y = 0, z = 0;
                for (int l = 0; l < r; ++l) {
                    PPStats st = stats(t.parts[static_cast<size_t>(l)]);
                    x += st.diag + st.upper;
                    mixed += st.diag + st.upper - st.lower;
                    y += (l + 1) * st.size;
                    z += st.diag;
                }
                c.check(cs.x == x && cs.y == y && cs.z == z,
                        "colored statistics disagree with their per-part recomputation");
                c.check(2 * cs.x == n + mixed, "the two expressions for X disagree");
                c.check(cs.s == 4 * cs.z - 2 * cs.x - 2 * cs.y + (r + 2) * n,
                        "S is not the stated combination of X, Y, Z");
            });
            c.check(mpz_class(tuples) == count_colored(r, n),
                    "tuple count misses the series coefficient");
        }

    for (int r = 1; r <= 2 && !c.full(); ++r) {
        QSeries f = expand_dt(r, 5);
        for (long n = 0; n <= 5; ++n) {
            const std::string where = " at r=" + std::to_string(r) + ", n=" + std::to_string(n);
            TPoly m = m_poly_enum(r, n);
            c.check(TRat(m) == f.coeff(n), "weight polynomial misses the series coefficient" + where);
            bool nonneg = true;
            for (const auto& [e, z] : m.terms())
                if (z < 0) nonneg = false;
            c.check(nonneg, "weight polynomial has a negative coefficient" + where);
            if (n <= 4) {
                TriPoly qe = q_poly_enum(r, n);
                c.check(qe == q_poly_series(r, n),
                        "trivariate enumeration and series disagree" + where);
                bool tri_nonneg = true;
                for (const auto& [k, z] : qe.terms())
                    if (z < 0) tri_nonneg = false;
                c.check(tri_nonneg, "trivariate polynomial has a negative coefficient" + where);
                try {
                    c.check(m_from_q(r, n, qe) == m,
                            "trivariate specialization misses the weight polynomial" + where);
                } catch (const verification_error& e) {
                    c.check(false, std::string(e.what()) + where);
                }
            }
        }
    }
    return c.bad;
}

namespace {

struct DirectPartials {
    double y = 0, xx = 0, xy = 0, yy = 0;
};

// literal triple sum over (l, m, k) with Phi' = -1/(e^t - 1), Phi'' > 0
DirectPartials direct_partials(double rho, int r, double al, double be, double ga, long mmax) {
    DirectPartials d;
    for (int l = 1; l <= r; ++l)
        for (long m = 1; m <= mmax; ++m) {
            double md = static_cast<double>(m);
            double e = std::expm1(rho * md);
            double p1 = 1.0 / e;
            double p2 = (e + 1) / (e * e);
            for (long k = 1; k <= m; ++k) {
                double a = al * static_cast<double>(k) + be * md * l + ga;
                d.y += a * p1;
                d.xx += md * md * p2;
                d.xy -= md * a * p2;
                d.yy += a * a * p2;
            }
        }
    return d;
}

} // namespace

std::vector<std::string> asymptotic_properties() {
    Collector c;
    auto rel = [](double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); };

    // frozen high-precision summation oracles
    c.check(std::abs(-f_x(1.0, 1) - 2.32148057343544303) < 1e-11,
            "weightless slope at rho=1, r=1 drifted");
    c.check(rel(-f_x(0.25, 3), 460.59037190537223) < 1e-12,
            "weightless slope at rho=0.25, r=3 drifted");
    const SaddleWeights w{0.1, 0.05, 0.2};
    c.check(rel(-f_x(0.5, 2, w), 23.0638684205494715) < 1e-12,
            "weighted slope at rho=0.5, r=2 drifted");

    double prev = -f_x(0.25, 2);
    for (double rho : {0.5, 1.0, 2.0, 4.0}) {
        double cur = -f_x(rho, 2);
        c.check(cur > 0 && cur < prev, "expected size is not decreasing in rho");
        prev = cur;
    }

    try {
        SaddleResult s1 = solve_saddle(1000, 1);
        c.check(rel(s1.rho, 0.133935276191064716) < 1e-9, "saddle root at n=1000, r=1 drifted");
        c.check(s1.residual < 1e-8, "saddle residual above tolerance");
        SaddleResult s2 = solve_saddle(500, 2, w);
        c.check(rel(s2.rho, 0.185592652048248291) < 1e-8, "weighted saddle root drifted");
        c.check(s2.residual < 1e-8, "weighted saddle residual above tolerance");
        c.check(solve_saddle(100, 1).rho > s1.rho && s1.rho > solve_saddle(10000, 1).rho,
                "saddle root is not decreasing in n");
        c.check(rel(solve_saddle(2000, 3).rho, rho0_asymptotic(2000, 3)) < 0.05,
                "saddle root strays from its leading-order seed");
    } catch (const verification_error& e) {
        c.check(false, std::string("saddle solver threw: ") + e.what());
    }
    c.check(std::abs(rho0_asymptotic(900, 3) - rho0_asymptotic(300, 1)) < 1e-13,
            "leading-order root misses its rank scaling");

    const std::array<std::array<double, 3>, 5> weight_sets{
        {{-2, -2, 4}, {1, 0.5, 0.25}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
    for (double rho : {3.0, 4.0, 6.0})
        for (int r = 1; r <= 4; ++r)
            for (const auto& ws : weight_sets) {
                GPartials g = g_partials(rho, r, ws[0], ws[1], ws[2]);
                DirectPartials d = direct_partials(rho, r, ws[0], ws[1], ws[2], 20);
                bool ok = rel(g.y, d.y) < 1e-10 && rel(g.xx, d.xx) < 1e-10 &&
                          rel(g.xy, d.xy) < 1e-10 && rel(g.yy, d.yy) < 1e-10;
                c.check(ok, "closed-form partials disagree with the direct double sum at rho=" +
                                std::to_string(rho) + ", r=" + std::to_string(r));
            }

    const std::array<std::array<double, 4>, 3> trend_sets{
        {{1, -2, -2, 4}, {2, -2, -2, 4}, {3, 1, 0.5, 0.25}}};
    for (const auto& ts : trend_sets) {
        int r = static_cast<int>(ts[0]);
        double prev_mu = 1e300, prev_s2 = 1e300;
        for (double n : {1e3, 1e4, 1e5, 1e6}) {
            MomentEstimate est = mu_sigma(n, r, ts[1], ts[2], ts[3]);
            double gm = std::abs(est.mu / mu_asymptotic(n, r, ts[1], ts[2], ts[3]) - 1);
            double gs = std::abs(est.sigma2 / sigma2_asymptotic(n, r, ts[1], ts[2], ts[3]) - 1);
            c.check(gm < prev_mu, "mean gap is not shrinking at r=" + std::to_string(r) +
                                      ", n=" + std::to_string(n));
            c.check(gs < prev_s2, "variance gap is not shrinking at r=" + std::to_string(r) +
                                      ", n=" + std::to_string(n));
            prev_mu = gm;
            prev_s2 = gs;
        }
    }
    {
        double prev_s2 = 1e300;
        for (double n : {1e3, 1e4, 1e5, 1e6}) {
            MomentEstimate est = mu_sigma(n, 1, 0, 0, 1);
            double gs = std::abs(est.sigma2 / sigma2_asymptotic(n, 1, 0, 0, 1) - 1);
            c.check(gs < prev_s2,
                    "pure-gamma variance gap is not shrinking at n=" + std::to_string(n));
            prev_s2 = gs;
        }
    }

    c.check(rel(g_zero(0.1, 1), 119.848383608816109) < 1e-11, "weightless log-weight drifted");
    MomentEstimate m1000 = mu_sigma(1000, 1, -2, -2, 4);
    c.check(std::abs(m1000.mu + 2735.98127777904254) < 1e-6, "frozen mean at n=1000 drifted");
    c.check(std::abs(m1000.sigma2 - 8480.02233592202099) < 1e-5, "frozen variance at n=1000 drifted");

    TheoremConstants t1 = theorem_constants(1);
    c.check(std::abs(t1.mu - 2.74979130719080219) < 1e-12, "limit mean constant drifted");
    c.check(std::abs(t1.sigma2 - 0.746474527380517258) < 1e-12, "limit variance constant drifted");
    TheoremConstants t8 = theorem_constants(8);
    c.check(std::abs(t8.mu - 2 * t1.mu) < 1e-12 && std::abs(t8.sigma2 - 32 * t1.sigma2) < 1e-11,
            "limit constants miss their rank scaling");
    for (int r = 1; r <= 4; ++r) {
        TheoremConstants tc = theorem_constants(r);
        const double n = 7;
        double mu_shift = (mu_asymptotic(n, r, -2, -2, 4) + (r + 2) * n) / std::pow(n, 2.0 / 3.0);
        double s2 = sigma2_asymptotic(n, r, -2, -2, 4) / std::pow(n, 4.0 / 3.0);
        c.check(std::abs(mu_shift - tc.mu) < 1e-8 && std::abs(s2 - tc.sigma2) < 1e-8,
                "moment asymptotics and limit constants disagree at r=" + std::to_string(r));
    }

    c.check(std::abs(normal_cdf(0) - 0.5) < 1e-15, "normal CDF is off at 0");
    c.check(std::abs(normal_cdf(1.3) + normal_cdf(-1.3) - 1) < 1e-14, "normal CDF is not symmetric");
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    c.check(std::abs(log_mpz(big) - 30 * std::log(10.0)) < 1e-9, "big-integer logarithm drifted");
    double gd = gaussian_distance(1, 6);
    c.check(gd >= 0 && gd <= 1, "Kolmogorov distance out of range");
    return c.bad;
}

std::vector<std::string> oracle_properties() {
    Collector c;
    struct Point {
        int n, q;
        long gl, pairs;
    };
    const Point points[] = {{1, 2, 1, 4}, {1, 3, 2, 9}, {2, 2, 6, 88}};
    for (const Point& p : points) {
        const std::string where = " at n=" + std::to_string(p.n) + ", q=" + std::to_string(p.q);
        mpz_class gl = gl_count(p.n, p.q);
        mpz_class pairs = commuting_pairs_count(p.n, p.q);
        c.check(gl == p.gl, "general linear count drifted" + where);
        c.check(pairs == p.pairs, "commuting pair count drifted" + where);
        c.check(gl_class(p.n).eval_l(p.q) == mpq_class(gl),
                "gl_class misses the brute-force count" + where);
        mpq_class ratio(pairs, gl);
        ratio.canonicalize();
        c.check(gl % ratio.get_den() == 0,
                "pair/GL ratio denominator does not divide the group order" + where);
        c.check(feit_fine_point_check(p.n, p.q), "series point check failed" + where);
    }
    c.check(commuting_pairs_count(2, 2, 3) == 88, "parallel pair count differs from sequential");
    c.check(gl_count(3, 2) == 168, "general linear count drifted at n=3, q=2");

    bool threw = false;
    try {
        commuting_pairs_count(3, 3);
    } catch (const std::domain_error&) {
        threw = true;
    }
    c.check(threw, "work budget did not reject n=3, q=3");
    threw = false;
    try {
        commuting_pairs_count(2, 5);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    c.check(threw, "field order guard did not reject q=5");
    return c.bad;
}

} // namespace testsup
