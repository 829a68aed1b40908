#pragma once

#include "qct/curve.hpp"

// Division polynomials in univariate form: for odd n the polynomial psi_n
// itself, for even n the cofactor psi_n / psi_2, both with psi_2^2 = 4x^3 +
// b2 x^2 + 2 b4 x + b6 substituted.  Roots of psi_n are x-coordinates of the
// nonzero points of order dividing n.

namespace qct {

struct DivisionPoly {
    int n;
    KPoly poly;          // univariate form (odd: psi_n, even: psi_n / psi_2)
    KPoly monic() const { return poly.monic(); }
};

// 1 <= n <= 32
DivisionPoly division_polynomial(const Curve& e, int n);

// x-coordinates of points of exact order n live on psi_n / psi_(n/p) factors;
// this returns the quotient of univariate forms with all lower-order roots
// removed: for prime powers n = p^k it is psi_n / psi_(n/p), in general the
// n-th "primitive" division factor obtained by exact division.
KPoly exact_order_poly(const Curve& e, int n);

// Kubert normal form of a curve with a point of order 7:
// y^2 + (1-c) xy - b y = x^3 - b x^2, b = t^3 - t^2, c = t^2 - t
Curve kubert_order7_curve(FieldId f, const FieldElem& t);

}  // namespace qct
