#include "mdt/ring.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace mdt {

// ---------------------------------------------------------------- TPoly ----

TPoly TPoly::monomial(long exp, const mpz_class& coeff) {
    TPoly p;
    p.add_term(exp, coeff);
    return p;
}

bool TPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool TPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long TPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

long TPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

mpz_class TPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void TPoly::add_term(long exp, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class TPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

const mpz_class& TPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

TPoly TPoly::operator-() const {
    TPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

TPoly TPoly::shifted(long k) const {
    if (k == 0) return *this;
    TPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

TPoly TPoly::scaled(const mpz_class& c) const {
    TPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

TPoly TPoly::divided_content(const mpz_class& c) const {
    if (c == 0) throw std::domain_error("division of coefficients by zero");
    TPoly r;
    for (const auto& [e, v] : terms_) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        r.terms_.emplace(e, q);
    }
    return r;
}

TPoly TPoly::substituted_power(long k) const {
    if (k < 1) throw std::invalid_argument("substituted_power needs k >= 1");
    if (k == 1) return *this;
    TPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
    return r;
}

namespace {

mpq_class rat_pow(const mpq_class& t, long e) {
    if (e == 0) return mpq_class(1);
    mpq_class base = t;
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    if (neg) {
        if (r == 0) throw std::domain_error("evaluation needs a nonzero point");
        r = 1 / r;
    }
    return r;
}

} // namespace

mpq_class TPoly::eval_t(const mpq_class& t) const {
    if (terms_.empty()) return mpq_class(0);
    if (min_exp() < 0 && t == 0)
        throw std::domain_error("evaluation at T=0 of a Laurent polynomial with negative exponents");
    // Horner over descending exponents, powering across the gaps.
    mpq_class acc = 0;
    long prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (first) {
            acc = it->second;
            first = false;
        } else {
            acc *= rat_pow(t, prev - it->first);
            acc += it->second;
        }
        prev = it->first;
    }
    acc *= rat_pow(t, prev);
    return acc;
}

double TPoly::eval_t(double t) const {
    double acc = 0;
    for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(t, static_cast<double>(e));
    return acc;
}

mpq_class TPoly::eval_l(const mpq_class& l) const {
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0)
            throw std::domain_error("evaluation at L needs even T-exponents, found T^" + std::to_string(e));
        acc += mpq_class(c) * rat_pow(l, e / 2);
    }
    return acc;
}

mpz_class TPoly::eval_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "T";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

// ------------------------------------------------------- gcd / divexact ----

namespace {

// dense coefficient vector c[0..deg], c[deg] != 0; input must have min_exp 0
std::vector<mpz_class> to_dense(const TPoly& p) {
    std::vector<mpz_class> c(static_cast<size_t>(p.max_exp()) + 1);
    for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e)] = v;
    return c;
}

TPoly from_dense(const std::vector<mpz_class>& c) {
    TPoly p;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p.add_term(static_cast<long>(i), c[i]);
    return p;
}

long dense_deg(const std::vector<mpz_class>& c) {
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return static_cast<long>(i);
    return -1;
}

void make_primitive(std::vector<mpz_class>& c) {
    mpz_class g = 0;
    for (const auto& v : c)
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0) return;
    long d = dense_deg(c);
    if (c[static_cast<size_t>(d)] < 0) g = -g;
    if (g == 1) return;
    for (auto& v : c)
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// pseudo-remainder of a by b (deg a >= deg b >= 0); modifies a in place
void pseudo_rem(std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    long db = dense_deg(b);
    const mpz_class& lb = b[static_cast<size_t>(db)];
    long da = dense_deg(a);
    while (da >= db) {
        mpz_class top = a[static_cast<size_t>(da)];
        for (long i = 0; i <= da; ++i)
            if (a[static_cast<size_t>(i)] != 0) a[static_cast<size_t>(i)] *= lb;
        for (long i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] -= top * b[static_cast<size_t>(i)];
        long nda = -1;
        for (long i = da - 1; i >= 0; --i)
            if (a[static_cast<size_t>(i)] != 0) { nda = i; break; }
        da = nda;
        if (da < 0) break;
    }
    if (da < 0)
        a.assign(1, mpz_class(0));
    else
        a.resize(static_cast<size_t>(da) + 1);
}

} // namespace

TPoly gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero() && b.is_zero()) return TPoly();
    if (a.is_zero() || b.is_zero()) {
        const TPoly& p = a.is_zero() ? b : a;
        auto c = to_dense(p.shifted(-p.min_exp()));
        make_primitive(c);
        return from_dense(c);
    }
    auto A = to_dense(a.shifted(-a.min_exp()));
    auto B = to_dense(b.shifted(-b.min_exp()));
    make_primitive(A);
    make_primitive(B);
    if (dense_deg(A) < dense_deg(B)) std::swap(A, B);
    // primitive polynomial remainder sequence
    while (true) {
        long db = dense_deg(B);
        if (db < 0) break;
        if (db == 0) return TPoly(1);
        pseudo_rem(A, B);
        make_primitive(A);
        std::swap(A, B);
    }
    return from_dense(A);
}

TPoly divexact(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return TPoly();
    long sa = a.min_exp(), sb = b.min_exp();
    auto A = to_dense(a.shifted(-sa));
    auto B = to_dense(b.shifted(-sb));
    long da = dense_deg(A), db = dense_deg(B);
    if (da < db) throw verification_error("inexact polynomial division: " + b.str() + " does not divide " + a.str());
    const mpz_class& lb = B[static_cast<size_t>(db)];
    std::vector<mpz_class> q(static_cast<size_t>(da - db) + 1);
    for (long i = da - db; i >= 0; --i) {
        const mpz_class& top = A[static_cast<size_t>(i + db)];
        if (top == 0) continue;
        mpz_class qi;
        mpz_class rem;
        mpz_tdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        if (rem != 0)
            throw verification_error("inexact polynomial division: " + b.str() + " does not divide " + a.str());
        q[static_cast<size_t>(i)] = qi;
        for (long j = 0; j <= db; ++j) A[static_cast<size_t>(i + j)] -= qi * B[static_cast<size_t>(j)];
    }
    for (const auto& v : A)
        if (v != 0)
            throw verification_error("inexact polynomial division: " + b.str() + " does not divide " + a.str());
    return from_dense(q).shifted(sa - sb);
}

TPoly gl_class(long n) {
    if (n < 0) throw std::invalid_argument("gl_class needs n >= 0");
    TPoly r(1);
    for (long i = 0; i < n; ++i) {
        TPoly f = TPoly::monomial(2 * n);
        f.add_term(2 * i, -1);
        r *= f;
    }
    return r;
}

// ----------------------------------------------------------------- TRat ----

TRat::TRat(const TPoly& num, const TPoly& den) : num_(num), den_(den) { canonicalize(); }

TPoly TRat::polynomial() const {
    if (!den_.is_one()) throw verification_error("rational function is not polynomial: " + str());
    return num_;
}

void TRat::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = TPoly(1);
        return;
    }
    long shift = num_.min_exp() - den_.min_exp();
    num_ = num_.shifted(-num_.min_exp());
    den_ = den_.shifted(-den_.min_exp());
    TPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (den_.leading_coeff() < 0) ic = -ic;
    if (ic != 1) {
        num_ = num_.divided_content(ic);
        den_ = den_.divided_content(ic);
    }
    num_ = num_.shifted(shift);
}

TRat TRat::from_coprime(TPoly num, TPoly den) {
    TRat r;
    if (num.is_zero()) return r;
    long sd = den.min_exp();
    if (sd != 0) {
        den = den.shifted(-sd);
        num = num.shifted(-sd);
    }
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
    if (den.leading_coeff() < 0) ic = -ic;
    if (ic != 1) {
        num = num.divided_content(ic);
        den = den.divided_content(ic);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

TRat TRat::operator-() const {
    TRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

TRat& TRat::operator+=(const TRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    TPoly n = num_ * o.den_ + o.num_ * den_;
    TPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    canonicalize();
    return *this;
}

TRat& TRat::operator-=(const TRat& o) { return *this += -o; }

TRat operator*(const TRat& a, const TRat& b) {
    if (a.is_zero() || b.is_zero()) return TRat();
    if (a.den_.is_one() && b.den_.is_one()) {
        TRat r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    // cross-cancel so the products below are already coprime
    TPoly g1 = gcd(a.num_, b.den_);
    TPoly g2 = gcd(b.num_, a.den_);
    TPoly n1 = g1.is_one() ? a.num_ : divexact(a.num_, g1);
    TPoly d2 = g1.is_one() ? b.den_ : divexact(b.den_, g1);
    TPoly n2 = g2.is_one() ? b.num_ : divexact(b.num_, g2);
    TPoly d1 = g2.is_one() ? a.den_ : divexact(a.den_, g2);
    return TRat::from_coprime(n1 * n2, d1 * d2);
}

TRat TRat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return from_coprime(den_, num_);
}

TRat operator/(const TRat& a, const TRat& b) { return a * b.inverse(); }

TRat TRat::substituted_power(long k) const {
    TRat r;
    r.num_ = num_.substituted_power(k);
    r.den_ = den_.substituted_power(k);
    return r;
}

mpq_class TRat::eval_t(const mpq_class& t) const {
    mpq_class d = den_.eval_t(t);
    if (d == 0)
        throw std::domain_error("pole at T = " + t.get_str() + ": denominator " + den_.str() + " vanishes");
    return num_.eval_t(t) / d;
}

mpq_class TRat::eval_l(const mpq_class& l) const {
    mpq_class d = den_.eval_l(l);
    if (d == 0)
        throw std::domain_error("pole at L = " + l.get_str() + ": denominator " + den_.str() + " vanishes");
    return num_.eval_l(l) / d;
}

double TRat::eval_t(double t) const {
    double d = den_.eval_t(t);
    if (d == 0) throw std::domain_error("pole: denominator " + den_.str() + " vanishes");
    return num_.eval_t(t) / d;
}

std::string TRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const TRat& r) { return os << r.str(); }

} // namespace mdt
