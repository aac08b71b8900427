#pragma once
#include <array>
#include <map>
#include <string>
#include <vector>

#include "mdt/qseries.hpp"
#include "mdt/ring.hpp"

namespace mdt {

// Finite quiver on vertices 0..vertices-1; loops and parallel edges allowed.
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges; // (tail, head)

    void validate() const;
    bool operator==(const Quiver& o) const = default;
};

// one vertex carrying three loops
Quiver three_loop_quiver();

// Attach a framing vertex with `arrows` parallel arrows into `target`. The
// framing vertex becomes index 0 and every original vertex shifts up by one,
// so dimension vectors read (framing, original...).
Quiver framed(const Quiver& q, int target, int arrows);

using DimVector = std::vector<long>;

// chi(a, b) = sum_i a_i b_i - sum_{t->h} a_t b_h
long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
// <a, b> = chi(a, b) - chi(b, a)
long skew_form(const Quiver& q, const DimVector& a, const DimVector& b);

// slope ordering from a stability vector: the argument of -zeta.d + i|d|,
// normalized to (0, 1]; throws on the zero vector
double phase(const std::vector<double>& zeta, const DimVector& d);

// Element of the quantum torus of a quiver: finite sum of terms c_d y^d
// with TRat coefficients, truncated past total dimension `trunc`.
// Multiplication twists by the skew form: y^a y^b = T^{<a,b>} y^{a+b}.
class TorusElement {
public:
    TorusElement(Quiver q, long trunc);
    static TorusElement unit(Quiver q, long trunc);
    static TorusElement monomial(Quiver q, long trunc, const DimVector& d, TRat c);

    const Quiver& quiver() const { return quiver_; }
    long trunc() const { return trunc_; }
    const std::map<DimVector, TRat>& terms() const { return terms_; }
    void add_term(const DimVector& d, const TRat& c);

    friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);

    bool operator==(const TorusElement& o) const;
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

private:
    Quiver quiver_;
    long trunc_;
    std::map<DimVector, TRat> terms_;
};

// The three pieces of the framed wall-crossing identity, living in the
// quantum torus of the framed three-loop quiver with r framing arrows.
// Dimension vectors are (framing, gauge).
TorusElement universal_cm_series(int r, long trunc); // commuting-matrix series on (0, n)
TorusElement framed_vacuum(int r, long trunc);       // the bare framing generator y_(1,0)
TorusElement framed_dt_side(int r, long trunc);      // sum_n dt_n T^{-rn} y_(0,n) times y_(1,0)

struct WallCrossReport {
    bool ok = true;
    DimVector mismatch;     // first differing dimension vector when !ok
    std::string detail;
};

// checks zp * au == au * zm in the quantum torus
WallCrossReport wall_crossing_identity(const TorusElement& zp, const TorusElement& au,
                                       const TorusElement& zm);
// assembles the three standard pieces for rank r and runs the check;
// framed components are compared for gauge dimension n <= trunc - 1
WallCrossReport wall_crossing_check(int r, long trunc);

// ---------------------------------------------------------------------------
// linear-algebra side: framed representations of the three-loop quiver

using QVec = std::vector<mpq_class>;
using QMat = std::vector<std::vector<mpq_class>>;

struct FramedRep {
    long n = 0;
    std::array<QMat, 3> a; // the three n x n coordinate matrices
    std::vector<QVec> u;   // framing vectors

    void validate() const;
};

// dimension of the smallest subspace containing every u_i and closed under
// all three matrices (breadth-first closure with exact pivoting)
long framed_span(const FramedRep& rep);
// cyclicity: the framing vectors generate everything
bool is_stable_neg(const FramedRep& rep);

// tr(a1 (a2 a3 - a3 a2)), the cubic commutator potential
mpq_class trace_potential(const QMat& a1, const QMat& a2, const QMat& a3);
// critical points of the potential are the commuting triples
bool is_critical(const QMat& a1, const QMat& a2, const QMat& a3);

} // namespace mdt
