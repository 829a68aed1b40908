#pragma once

#include "qct/poly.hpp"
#include "qct/tower.hpp"

#include <array>
#include <optional>

// Elliptic curves over K in long Weierstrass form, with a generic
// chord-tangent group law usable over K, over radical towers, and over
// finite fields.  Arithmetic happens on the completed-square model
// Y^2 = x^3 + (b2/4) x^2 + (b4/2) x + (b6/4), Y = y + (a1 x + a3)/2;
// x-coordinates agree with the original model, y is shifted back on output.

namespace qct {

// y^2 = x^3 + c2 x^2 + c1 x + c0 over any field type E
template <class E>
struct CubicModel {
    E c2, c1, c0;
};

template <class E>
struct Pt {
    bool inf = true;
    E x{}, y{};
    static Pt infinity() { return Pt{}; }
    static Pt affine(E px, E py) { return Pt{false, std::move(px), std::move(py)}; }
    bool operator==(const Pt& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && y == o.y;
    }
};

template <class E>
bool cm_is_on(const CubicModel<E>& m, const Pt<E>& p) {
    if (p.inf) return true;
    E rhs = ((p.x + m.c2) * p.x + m.c1) * p.x + m.c0;
    return (p.y * p.y - rhs).is_zero();
}

template <class E>
Pt<E> cm_neg(const Pt<E>& p) {
    if (p.inf) return p;
    return Pt<E>::affine(p.x, -p.y);
}

template <class E>
Pt<E> cm_add(const CubicModel<E>& m, const Pt<E>& p, const Pt<E>& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    E lam;
    if (p.x == q.x) {
        if ((p.y + q.y).is_zero()) return Pt<E>::infinity();
        // tangent
        E x2 = p.x * p.x;
        E num = x2 + x2 + x2 + (m.c2 * p.x + m.c2 * p.x) + m.c1;
        lam = num / (p.y + p.y);
    } else {
        lam = (q.y - p.y) / (q.x - p.x);
    }
    E x3 = lam * lam - m.c2 - p.x - q.x;
    E y3 = lam * (p.x - x3) - p.y;
    return Pt<E>::affine(x3, y3);
}

template <class E>
Pt<E> cm_mul(const CubicModel<E>& m, const Int& n0, Pt<E> p) {
    Int n = n0;
    if (n < 0) {
        n = -n;
        p = cm_neg(p);
    }
    Pt<E> acc = Pt<E>::infinity();
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = cm_add(m, acc, p);
        n /= 2;
        if (n > 0) p = cm_add(m, p, p);
    }
    return acc;
}

class Curve {
public:
    Curve(FieldId f, FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4, FieldElem a6);
    static Curve from_short(FieldId f, const FieldElem& A, const FieldElem& B);
    // text grammar "[a1,a2,a3,a4,a6]" with qfield entries
    static Curve parse(FieldId f, const std::string& text);

    FieldId field() const { return f_; }
    const FieldElem& a1() const { return a_[0]; }
    const FieldElem& a2() const { return a_[1]; }
    const FieldElem& a3() const { return a_[2]; }
    const FieldElem& a4() const { return a_[3]; }
    const FieldElem& a6() const { return a_[4]; }
    const FieldElem& b2() const { return b2_; }
    const FieldElem& b4() const { return b4_; }
    const FieldElem& b6() const { return b6_; }
    const FieldElem& b8() const { return b8_; }
    const FieldElem& c4() const { return c4_; }
    const FieldElem& c6() const { return c6_; }
    const FieldElem& disc() const { return disc_; }
    const FieldElem& j() const { return j_; }

    bool is_short() const;  // a1 = a2 = a3 = 0
    // short Weierstrass coefficients (A, B) of the 6-scaled model
    // y^2 = x^3 - 27 c4 x - 54 c6, isomorphic over K
    std::pair<FieldElem, FieldElem> short_AB() const;
    Curve to_short() const;

    // completed-square cubic: Y^2 = x^3 + (b2/4)x^2 + (b4/2)x + (b6/4)
    KPoly rhs_cubic() const;
    CubicModel<FieldElem> model_K() const;
    CubicModel<TowerElem> model_in(const Tower& t) const;

    // original-model y from the completed-square Y at x
    FieldElem orig_y(const FieldElem& x, const FieldElem& Y) const;
    // completed-square Y from an original-model point
    FieldElem square_Y(const FieldElem& x, const FieldElem& y) const;

    // group law on original-model K-points
    Pt<FieldElem> add(const Pt<FieldElem>& p, const Pt<FieldElem>& q) const;
    Pt<FieldElem> mul(const Int& n, const Pt<FieldElem>& p) const;
    Pt<FieldElem> neg(const Pt<FieldElem>& p) const;
    bool is_on(const Pt<FieldElem>& p) const;

    // quadratic twist by d of the short normal form
    Curve quadratic_twist(const FieldElem& d) const;

    std::string str() const;
    bool operator==(const Curve& o) const { return f_ == o.f_ && a_ == o.a_; }

private:
    void compute_invariants();
    FieldId f_;
    std::array<FieldElem, 5> a_;
    FieldElem b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
};

// y^2 = x(x+a)(x+b), the full-2-torsion normal form E(a,b)
struct TwistForm {
    FieldElem a, b;
    Curve curve() const;  // [0, a+b, 0, ab, 0]
    TwistForm twisted(const FieldElem& t) const { return TwistForm{t * a, t * b}; }
    // the two shifted models with the same point group: E(-a, b-a), E(-b, a-b)
    TwistForm shift_a() const { return TwistForm{-a, b - a}; }
    TwistForm shift_b() const { return TwistForm{-b, a - b}; }
};

// scale to integral entries and strip the square part of gcd(a, b); the
// result is K-isomorphic to a quadratic twist by a square, hence the same
// curve class
TwistForm normalize_twistform(const TwistForm& t);

enum class SplitKind { Irreducible, OneRoot, Full };
struct TwoTorsionSplit {
    SplitKind kind;
    std::vector<FieldElem> roots;  // 0, 1 or 3 roots of the completed-square cubic
};
TwoTorsionSplit two_torsion_split(const Curve& e);

// group-law entry points named as the library operations
inline Pt<FieldElem> group_add(const Curve& e, const Pt<FieldElem>& p, const Pt<FieldElem>& q) {
    return e.add(p, q);
}
inline Pt<FieldElem> scalar_mul(const Curve& e, const Int& n, const Pt<FieldElem>& p) {
    return e.mul(n, p);
}

}  // namespace qct
