#pragma once

#include <string>

#include "weylgr/error.hpp"
#include "weylgr/poly.hpp"
#include "weylgr/scalar.hpp"

namespace weylgr {

// 2x2 matrix over an exact scalar kind (BigInt, Rational, or Poly).  The
// whole theory lives in rank two, so a fixed-size type with spelled-out
// entries beats a generic matrix class here.
template <typename T>
struct Mat2 {
    T a11, a12, a21, a22;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }

    Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }

    bool operator==(const Mat2& o) const {
        return a11 == o.a11 && a12 == o.a12 && a21 == o.a21 && a22 == o.a22;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    T det() const { return a11 * a22 - a12 * a21; }

    Mat2 transpose() const { return {a11, a21, a12, a22}; }

    // Inverse within the same scalar kind: the determinant must be a unit
    // (+-1 over BigInt/Poly, nonzero over Rational).
    Mat2 inverse() const {
        T d = det();
        if (!scalar_is_unit(d))
            throw error(errc::non_invertible,
                        "determinant " + weylgr::to_string(d) + " is not a unit");
        T di = scalar_unit_inverse(d);
        return {a22 * di, -a12 * di, -a21 * di, a11 * di};
    }

    std::string to_string() const {
        using weylgr::to_string;
        return "((" + to_string(a11) + ", " + to_string(a12) + "), (" +
               to_string(a21) + ", " + to_string(a22) + "))";
    }
};

// Identity / tau of the same scalar kind as an exemplar entry.  Poly scalars
// need the exemplar for its variable universe; BigInt/Rational ignore it.
template <typename T>
Mat2<T> identity_like(const Mat2<T>& m) {
    T zero = scalar_zero(m.a11), one = scalar_one(m.a11);
    return {one, zero, zero, one};
}

template <typename T>
Mat2<T> identity() {
    return {T(1), T(0), T(0), T(1)};
}

// eta(x) = ((x, -1), (1, 0)), the local reflection datum attached to one
// sequence entry.
template <typename T>
Mat2<T> eta(const T& x) {
    T zero = scalar_zero(x), one = scalar_one(x);
    return {x, -one, one, zero};
}

// mu(a, b, c) = ((a, -b), (c, 0)); mu(x, 1, 1) = eta(x), det = b*c.
template <typename T>
Mat2<T> mu(const T& a, const T& b, const T& c) {
    return {a, -b, c, scalar_zero(a)};
}

// tau = ((0, 1), (1, 0)).
template <typename T>
Mat2<T> tau() {
    return {T(0), T(1), T(1), T(0)};
}

template <typename T>
Mat2<T> tau_like(const Mat2<T>& m) {
    T zero = scalar_zero(m.a11), one = scalar_one(m.a11);
    return {zero, one, one, zero};
}

} // namespace weylgr
