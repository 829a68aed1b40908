#pragma once

#include "qct/qfield.hpp"

#include <vector>

// Dense univariate polynomials with FieldElem coefficients, plus exact root
// finding in K and in quadratic extensions K(sqrt(e)).  Root finding is
// modular: monicize, bound the roots archimedeanly, reduce at one large
// split prime, reconstruct by symmetric lifting and verify exactly.  This
// stays exact for the psi_n-scale polynomials whose constant terms are far
// too large for divisor enumeration.

namespace qct {

class KPoly {
public:
    KPoly() : f_(FieldId::Gauss) {}
    explicit KPoly(FieldId f) : f_(f) {}
    KPoly(FieldId f, std::vector<FieldElem> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static KPoly zero(FieldId f) { return KPoly(f); }
    static KPoly constant(const FieldElem& a) { return KPoly(a.field(), {a}); }
    static KPoly from_longs(FieldId f, std::initializer_list<long> cs);
    // x - r
    static KPoly linear_root(const FieldElem& r) {
        return KPoly(r.field(), {-r, make_elem(r.field(), 1)});
    }

    FieldId field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const FieldElem& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    const FieldElem& lead() const { return c_.back(); }

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator-() const;
    KPoly scaled(const FieldElem& s) const;
    KPoly shifted_arg(const FieldElem& t) const;  // p(x + t)

    FieldElem eval(const FieldElem& x) const;
    KPoly derivative() const;
    KPoly monic() const;

    static void divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);
    static KPoly gcd(const KPoly& a, const KPoly& b);  // monic gcd
    KPoly squarefree() const;                          // this / gcd(this, this')
    // exact division, throws if not divisible
    static KPoly divexact(const KPoly& a, const KPoly& b);

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    FieldId f_;
    std::vector<FieldElem> c_;
};

// All roots of g in K, deduplicated, canonically ordered.
std::vector<FieldElem> roots_in_K(const KPoly& g);

// Roots of g in K(sqrt(e)) \ K as pairs u + v*sqrt(e) with v != 0.
// e must be a non-square; conjugate roots are both reported.
struct QuadExtRoot {
    FieldElem u, v;
};
std::vector<QuadExtRoot> roots_in_quadext(const KPoly& g, const FieldElem& e);

// Resultant via the Euclidean remainder sequence (small degrees only).
FieldElem resultant(const KPoly& a, const KPoly& b);

}  // namespace qct
