#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cmtors/algebra/quadratic.hpp"

namespace cmtors {

// Dense univariate polynomial over Q, coefficients lowest degree first. The
// zero polynomial has no coefficients and degree -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<mpq_class> coeffs);
    PolyQ(std::initializer_list<mpq_class> coeffs);

    static PolyQ constant(const mpq_class& c);
    static PolyQ x();
    static PolyQ monomial(const mpq_class& c, unsigned degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(unsigned i) const;
    const mpq_class& lead() const;

    mpq_class operator()(const mpq_class& v) const;
    QuadElem operator()(const QuadElem& v) const;

    PolyQ derivative() const;
    PolyQ monic() const;
    // p(c * x)
    PolyQ scale_argument(const mpq_class& c) const;

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    PolyQ& operator*=(const mpq_class& s);

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(PolyQ a, const mpq_class& s) { return a *= s; }
    friend PolyQ operator*(const mpq_class& s, PolyQ a) { return a *= s; }

    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const PolyQ& p);

PolyQ pow(const PolyQ& p, unsigned e);

// Quotient and remainder of long division over Q.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& num, const PolyQ& den);

// Throws InexactDivision when den does not divide num.
PolyQ poly_exact_div(const PolyQ& num, const PolyQ& den);

// Monic greatest common divisor (zero if both inputs are zero).
PolyQ gcd(PolyQ a, PolyQ b);

// p divided by gcd(p, p'), normalized monic.
PolyQ squarefree_kernel(const PolyQ& p);

// Integer coefficients of the primitive scaling c * p with c in Q and positive
// leading coefficient.
std::vector<mpz_class> primitive_integer_coeffs(const PolyQ& p);

PolyQ from_integer_coeffs(const std::vector<mpz_class>& c);

} // namespace cmtors
