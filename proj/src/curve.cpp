#include "qct/curve.hpp"

namespace qct {

Curve::Curve(FieldId f, FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4, FieldElem a6)
    : f_(f), a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    compute_invariants();
}

void Curve::compute_invariants() {
    const FieldElem &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
    b2_ = a1 * a1 + 4 * a2;
    b4_ = 2 * a4 + a1 * a3;
    b6_ = a3 * a3 + 4 * a6;
    b8_ = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4_ = b2_ * b2_ - 24 * b4_;
    c6_ = -(b2_ * b2_ * b2_) + 36 * b2_ * b4_ - 216 * b6_;
    disc_ = -(b2_ * b2_) * b8_ - 8 * (b4_ * b4_ * b4_) - 27 * (b6_ * b6_) + 9 * b2_ * b4_ * b6_;
    if (disc_.is_zero()) throw qct_error("singular Weierstrass model");
    j_ = c4_ * c4_ * c4_ / disc_;
}

Curve Curve::from_short(FieldId f, const FieldElem& A, const FieldElem& B) {
    FieldElem z = make_elem(f, 0);
    return Curve(f, z, z, z, A, B);
}

Curve Curve::parse(FieldId f, const std::string& text) {
    if (text.empty() || text.front() != '[' || text.back() != ']')
        throw parse_error("curve must be [a1,a2,a3,a4,a6]", 0);
    std::string body = text.substr(1, text.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ',') {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 5) throw parse_error("curve needs 5 coefficients", 1);
    std::vector<FieldElem> cs;
    std::size_t off = 1;
    for (const auto& p : parts) {
        try {
            cs.push_back(parse_elem(f, p));
        } catch (const parse_error& pe) {
            throw parse_error(std::string("coefficient: ") + pe.what(), off + pe.position);
        }
        off += p.size() + 1;
    }
    return Curve(f, cs[0], cs[1], cs[2], cs[3], cs[4]);
}

bool Curve::is_short() const { return a_[0].is_zero() && a_[1].is_zero() && a_[2].is_zero(); }

std::pair<FieldElem, FieldElem> Curve::short_AB() const {
    if (is_short()) return {a_[3], a_[4]};
    return {-27 * c4_, -54 * c6_};
}

Curve Curve::to_short() const {
    auto [A, B] = short_AB();
    return from_short(f_, A, B);
}

KPoly Curve::rhs_cubic() const {
    FieldElem q = elem_from_rat(f_, Rat(1, 4));
    return KPoly(f_, {b6_ * q, b4_ * elem_from_rat(f_, Rat(1, 2)), b2_ * q, make_elem(f_, 1)});
}

CubicModel<FieldElem> Curve::model_K() const {
    FieldElem q = elem_from_rat(f_, Rat(1, 4));
    return {b2_ * q, b4_ * elem_from_rat(f_, Rat(1, 2)), b6_ * q};
}

CubicModel<TowerElem> Curve::model_in(const Tower& t) const {
    auto m = model_K();
    return {TowerElem::from_K(t, m.c2), TowerElem::from_K(t, m.c1), TowerElem::from_K(t, m.c0)};
}

FieldElem Curve::orig_y(const FieldElem& x, const FieldElem& Y) const {
    return Y - (a_[0] * x + a_[2]) * elem_from_rat(f_, Rat(1, 2));
}

FieldElem Curve::square_Y(const FieldElem& x, const FieldElem& y) const {
    return y + (a_[0] * x + a_[2]) * elem_from_rat(f_, Rat(1, 2));
}

Pt<FieldElem> Curve::neg(const Pt<FieldElem>& p) const {
    if (p.inf) return p;
    return Pt<FieldElem>::affine(p.x, -p.y - a_[0] * p.x - a_[2]);
}

bool Curve::is_on(const Pt<FieldElem>& p) const {
    if (p.inf) return true;
    FieldElem Y = square_Y(p.x, p.y);
    return cm_is_on(model_K(), Pt<FieldElem>::affine(p.x, Y));
}

Pt<FieldElem> Curve::add(const Pt<FieldElem>& p, const Pt<FieldElem>& q) const {
    auto m = model_K();
    Pt<FieldElem> P = p.inf ? p : Pt<FieldElem>::affine(p.x, square_Y(p.x, p.y));
    Pt<FieldElem> Q = q.inf ? q : Pt<FieldElem>::affine(q.x, square_Y(q.x, q.y));
    Pt<FieldElem> R = cm_add(m, P, Q);
    if (R.inf) return R;
    return Pt<FieldElem>::affine(R.x, orig_y(R.x, R.y));
}

Pt<FieldElem> Curve::mul(const Int& n, const Pt<FieldElem>& p) const {
    auto m = model_K();
    if (p.inf) return p;
    Pt<FieldElem> P = Pt<FieldElem>::affine(p.x, square_Y(p.x, p.y));
    Pt<FieldElem> R = cm_mul(m, n, P);
    if (R.inf) return R;
    return Pt<FieldElem>::affine(R.x, orig_y(R.x, R.y));
}

Curve Curve::quadratic_twist(const FieldElem& d) const {
    if (d.is_zero()) throw qct_error("twist by zero");
    auto [A, B] = short_AB();
    return from_short(f_, A * d * d, B * d * d * d);
}

std::string Curve::str() const {
    std::string s = "[";
    for (int i = 0; i < 5; ++i) {
        if (i) s += ",";
        s += a_[i].str();
    }
    return s + "]";
}

Curve TwistForm::curve() const {
    FieldId f = a.field();
    return Curve(f, make_elem(f, 0), a + b, make_elem(f, 0), a * b, make_elem(f, 0));
}

TwistForm normalize_twistform(const TwistForm& t0) {
    TwistForm t = t0;
    FieldId f = t.a.field();
    if (t.a.is_zero() || t.b.is_zero() || t.a == t.b)
        throw qct_error("degenerate twist form (a, b, a-b must be nonzero)");
    // integral rescale: E(a,b) ~ E(u^2 a, u^2 b) over K
    Int den(1);
    for (const FieldElem* x : {&t.a, &t.b}) {
        den = lcm(den, x->a().get_den());
        den = lcm(den, x->b().get_den());
    }
    FieldElem u2 = elem_from_rat(f, Rat(den * den));
    t.a *= u2;
    t.b *= u2;
    // strip the square part of gcd(a, b)
    FieldElem g = gcd_OK(t.a, t.b);
    auto fac = factor_OK(g);
    FieldElem d = make_elem(f, 1);
    for (const auto& [p, e] : fac.factors)
        for (int k = 0; k < e / 2; ++k) d *= p;
    FieldElem d2inv = (d * d).inv();
    return TwistForm{t.a * d2inv, t.b * d2inv};
}

TwoTorsionSplit two_torsion_split(const Curve& e) {
    FieldId f = e.field();
    KPoly cubic = e.rhs_cubic();
    // divisor enumeration on an integral rescale; the residual quadratic is
    // settled by its discriminant
    // z = 4x turns the cubic into z^3 + b2 z^2 + 8 b4 z + 16 b6
    KPoly zpoly(f, {16 * e.b6(), 8 * e.b4(), e.b2(), make_elem(f, 1)});
    std::vector<FieldElem> roots;
    FieldElem quarter = elem_from_rat(f, Rat(1, 4));
    FieldElem c0 = zpoly[0];
    Int den = lcm(lcm(c0.a().get_den(), c0.b().get_den()),
                  lcm(zpoly[1].a().get_den(), zpoly[1].b().get_den()));
    bool enumerated = false;
    if (den == 1 && !c0.is_zero() && c0.is_integral() && c0.norm() <= 1000000000000L) {
        enumerated = true;
        auto fac = factor_OK(c0);
        std::vector<FieldElem> divisors = {make_elem(f, 1)};
        for (const auto& [p, k] : fac.factors) {
            std::vector<FieldElem> next;
            FieldElem pw = make_elem(f, 1);
            for (int j = 0; j <= k; ++j) {
                for (const auto& d : divisors) next.push_back(d * pw);
                pw *= p;
            }
            divisors = std::move(next);
        }
        for (const auto& d : divisors)
            for (const auto& u : units_of(f)) {
                FieldElem cand = d * u;
                if (zpoly.eval(cand).is_zero()) roots.push_back(cand * quarter);
            }
        std::sort(roots.begin(), roots.end(),
                  [](const FieldElem& l, const FieldElem& r) { return FieldElem::cmp(l, r) < 0; });
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }
    if (!enumerated) {
        // zero constant term, non-integral or outsized inputs: use the
        // general exact finder
        roots = roots_in_K(cubic);
        TwoTorsionSplit s;
        s.roots = roots;
        s.kind = roots.empty() ? SplitKind::Irreducible
                               : (roots.size() == 3 ? SplitKind::Full : SplitKind::OneRoot);
        return s;
    }
    TwoTorsionSplit s;
    if (roots.empty()) {
        s.kind = SplitKind::Irreducible;
        return s;
    }
    if (roots.size() == 3) {
        s.kind = SplitKind::Full;
        s.roots = roots;
        return s;
    }
    if (roots.size() == 2) throw qct_error("cubic with exactly two roots is impossible");
    // one K-root: examine the residual quadratic x^2 + px + q
    FieldElem r = roots[0];
    KPoly lin = KPoly::linear_root(r);
    KPoly quad = KPoly::divexact(cubic, lin);
    FieldElem p = quad[1], q = quad[0];
    FieldElem disc = p * p - 4 * q;
    if (auto sd = sqrt_in_K(disc)) {
        FieldElem half = elem_from_rat(f, Rat(1, 2));
        s.kind = SplitKind::Full;
        s.roots = {r, (-p + *sd) * half, (-p - *sd) * half};
        std::sort(s.roots.begin(), s.roots.end(),
                  [](const FieldElem& l, const FieldElem& rr) { return FieldElem::cmp(l, rr) < 0; });
    } else {
        s.kind = SplitKind::OneRoot;
        s.roots = {r};
    }
    return s;
}

}  // namespace qct
