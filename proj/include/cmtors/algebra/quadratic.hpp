#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace cmtors {

// The ambient field Q(sqrt d), d squarefree and not in {0, 1}. Validated once on
// construction; elements carry the radicand by value.
class QuadField {
public:
    explicit QuadField(const mpz_class& d);
    explicit QuadField(long d) : QuadField(mpz_class(d)) {}

    const mpz_class& d() const { return d_; }
    bool operator==(const QuadField&) const = default;

private:
    friend class QuadElem;
    struct Unchecked {};
    QuadField(const mpz_class& d, Unchecked) : d_(d) {}

    mpz_class d_;
};

// a + b sqrt(d)
class QuadElem {
public:
    QuadElem(const mpq_class& a, const mpq_class& b, const QuadField& field);
    QuadElem(const mpq_class& a, const QuadField& field) : QuadElem(a, 0, field) {}

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }
    QuadField field() const;

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElem conj() const;
    mpq_class norm() const;
    mpq_class trace() const;
    QuadElem inverse() const;

    QuadElem operator-() const;
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);
    QuadElem& operator+=(const mpq_class& q);
    QuadElem& operator-=(const mpq_class& q);
    QuadElem& operator*=(const mpq_class& q);
    QuadElem& operator/=(const mpq_class& q);

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
    friend QuadElem operator+(QuadElem x, const mpq_class& q) { return x += q; }
    friend QuadElem operator-(QuadElem x, const mpq_class& q) { return x -= q; }
    friend QuadElem operator*(QuadElem x, const mpq_class& q) { return x *= q; }
    friend QuadElem operator/(QuadElem x, const mpq_class& q) { return x /= q; }
    friend QuadElem operator+(const mpq_class& q, QuadElem x) { return x += q; }
    friend QuadElem operator*(const mpq_class& q, QuadElem x) { return x *= q; }
    friend QuadElem operator-(const mpq_class& q, const QuadElem& x) { return -x + q; }

    bool operator==(const QuadElem& o) const;

    std::string to_string() const;

private:
    void check_same_field(const QuadElem& o) const;

    mpq_class a_, b_;
    mpz_class d_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& z);

// gamma with gamma^2 = z in Q(sqrt d). The sign is normalized so that b > 0, or
// b == 0 and a > 0.
std::optional<QuadElem> quad_square_root(const QuadElem& z);
std::optional<QuadElem> quad_square_root(const mpq_class& z, const QuadField& field);

struct SquareClass {
    mpz_class d;      // squarefree rational integer
    QuadElem gamma;   // z = d * gamma^2
};

// Rational square class of an element of Q(sqrt d): z = d' gamma^2 with d'
// squarefree in Z and gamma in Q(sqrt d). A rational z gets d' = squarefree
// part of z with rational gamma; otherwise the valid d' with the smallest |d'|
// (positive first) is returned.
std::optional<SquareClass> rational_square_class(const QuadElem& z);

struct RationalSquareClass {
    mpz_class d;
    mpq_class gamma;
};

// For z in Q*: z = d gamma^2 with d squarefree. Always exists.
RationalSquareClass rational_square_class(const mpq_class& z);

} // namespace cmtors
