#pragma once

#include <optional>
#include <utility>

#include <gmpxx.h>

#include "cmtors/algebra/quadratic.hpp"
#include "cmtors/curve/curve.hpp"

namespace cmtors {

// A point of E over Q (F = mpq_class) or over Q(sqrt d) (F = QuadElem).
// An empty coordinate pair is the point at infinity.
template <class F>
class Point {
public:
    Point() = default;
    Point(F x, F y) : xy_(std::make_pair(std::move(x), std::move(y))) {}
    static Point infinity() { return Point(); }

    bool is_infinity() const { return !xy_; }
    const F& x() const { return xy_->first; }
    const F& y() const { return xy_->second; }

    bool operator==(const Point& o) const { return xy_ == o.xy_; }

private:
    std::optional<std::pair<F, F>> xy_;
};

using PointQ = Point<mpq_class>;
using PointK = Point<QuadElem>;

namespace detail {
inline bool is_zero(const mpq_class& v) { return v == 0; }
inline bool is_zero(const QuadElem& v) { return v.is_zero(); }
} // namespace detail

template <class F>
bool on_curve(const CurveQ& e, const Point<F>& p)
{
    if (p.is_infinity())
        return true;
    const F& x = p.x();
    return detail::is_zero(p.y() * p.y() - ((x * x + e.A()) * x + e.B()));
}

template <class F>
Point<F> negate(const Point<F>& p)
{
    if (p.is_infinity())
        return p;
    return Point<F>(p.x(), -p.y());
}

template <class F>
Point<F> add(const CurveQ& e, const Point<F>& p, const Point<F>& q)
{
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    if (p.x() == q.x()) {
        if (detail::is_zero(p.y() + q.y()))
            return Point<F>::infinity();
        // doubling
        F lambda = (p.x() * p.x() * mpq_class(3) + e.A()) / (p.y() * mpq_class(2));
        F x3 = lambda * lambda - p.x() * mpq_class(2);
        F y3 = lambda * (p.x() - x3) - p.y();
        return Point<F>(std::move(x3), std::move(y3));
    }
    F lambda = (q.y() - p.y()) / (q.x() - p.x());
    F x3 = lambda * lambda - p.x() - q.x();
    F y3 = lambda * (p.x() - x3) - p.y();
    return Point<F>(std::move(x3), std::move(y3));
}

template <class F>
Point<F> dbl(const CurveQ& e, const Point<F>& p)
{
    return add(e, p, p);
}

// n P by double-and-add; n >= 0.
template <class F>
Point<F> multiply(const CurveQ& e, Point<F> p, unsigned long n)
{
    Point<F> acc;
    while (n > 0) {
        if (n & 1)
            acc = add(e, acc, p);
        n >>= 1;
        if (n > 0)
            p = dbl(e, p);
    }
    return acc;
}

// Exact order of P when at most `bound` (<= 32), otherwise nullopt.
template <class F>
std::optional<unsigned> point_order(const CurveQ& e, const Point<F>& p, unsigned bound = 32)
{
    Point<F> acc = p;
    for (unsigned n = 1; n <= bound; ++n) {
        if (acc.is_infinity())
            return n;
        acc = add(e, acc, p);
    }
    return std::nullopt;
}

} // namespace cmtors
