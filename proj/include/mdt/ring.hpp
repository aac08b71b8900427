#pragma once
#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>

#include "mdt/error.hpp"

namespace mdt {

// Laurent polynomial in T with arbitrary-precision integer coefficients.
// The motivic weight L is T^2 throughout, so every half-integer power of L
// that the series routines need is an honest integer power of T.
//
// Terms are kept in a sorted map exponent -> coefficient with no explicit
// zero coefficients, so structural equality is semantic equality.
class TPoly {
public:
    using Terms = std::map<long, mpz_class>;

    TPoly() = default;
    explicit TPoly(long c) { add_term(0, mpz_class(c)); }
    explicit TPoly(const mpz_class& c) { add_term(0, c); }
    static TPoly monomial(long exp, const mpz_class& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    // lowest/highest exponent with a nonzero coefficient; throws on zero
    long min_exp() const;
    long max_exp() const;
    long term_count() const { return static_cast<long>(terms_.size()); }

    mpz_class coeff(long exp) const;
    const Terms& terms() const { return terms_; }
    void add_term(long exp, const mpz_class& c);

    // gcd of coefficient magnitudes; 0 for the zero polynomial
    mpz_class content() const;
    const mpz_class& leading_coeff() const; // coefficient at max_exp

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly shifted(long k) const;            // multiply by T^k
    TPoly scaled(const mpz_class& c) const; // multiply by an integer
    TPoly divided_content(const mpz_class& c) const; // divide every coefficient exactly
    TPoly substituted_power(long k) const;  // T -> T^k, k >= 1

    // evaluation at T = t; negative exponents require t != 0
    mpq_class eval_t(const mpq_class& t) const;
    double eval_t(double t) const;
    // evaluation at L = T^2 = l; requires every exponent even
    mpq_class eval_l(const mpq_class& l) const;
    // sum of coefficients (T = 1)
    mpz_class eval_one() const;

    bool operator==(const TPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

// gcd up to units of the Laurent ring: T-power shifts are stripped, the
// result is primitive with positive leading coefficient (1 for coprime input)
TPoly gcd(const TPoly& a, const TPoly& b);
// exact division; throws verification_error if b does not divide a
TPoly divexact(const TPoly& a, const TPoly& b);

// |GL_n| as a polynomial in T with L = T^2: prod_{i<n} (T^{2n} - T^{2i})
TPoly gl_class(long n);

// Rational function num/den in T, always kept canonical:
//  * den != 0, has only nonnegative exponents and a nonzero constant term
//    (any T-power unit is carried by num),
//  * num and den are coprime and share no integer content,
//  * den has positive leading coefficient.
// Structural equality is therefore semantic equality.
class TRat {
public:
    TRat() : num_(), den_(1) {}
    TRat(long c) : num_(c), den_(1) {}
    TRat(const mpz_class& c) : num_(c), den_(1) {}
    TRat(const TPoly& p) : num_(p), den_(1) {}
    TRat(const TPoly& num, const TPoly& den);

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    // the underlying polynomial; throws verification_error when den != 1
    TPoly polynomial() const;

    TRat operator-() const;
    TRat& operator+=(const TRat& o);
    TRat& operator-=(const TRat& o);
    friend TRat operator+(TRat a, const TRat& b) { return a += b; }
    friend TRat operator-(TRat a, const TRat& b) { return a -= b; }
    friend TRat operator*(const TRat& a, const TRat& b);
    friend TRat operator/(const TRat& a, const TRat& b);
    TRat& operator*=(const TRat& o) { return *this = *this * o; }
    TRat& operator/=(const TRat& o) { return *this = *this / o; }
    TRat inverse() const; // throws domain_error on zero

    TRat substituted_power(long k) const; // T -> T^k on num and den

    // evaluation at T = t / L = l; throws domain_error on a pole, with the
    // vanishing denominator in the message
    mpq_class eval_t(const mpq_class& t) const;
    mpq_class eval_l(const mpq_class& l) const;
    double eval_t(double t) const;

    bool operator==(const TRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const TRat& o) const { return !(*this == o); }

    std::string str() const;

private:
    TPoly num_, den_;
    void canonicalize();
    // fast path for operands already coprime: only shift/content/sign fixes
    static TRat from_coprime(TPoly num, TPoly den);
};

std::ostream& operator<<(std::ostream& os, const TRat& r);

} // namespace mdt
