#include "qct/poly.hpp"

#include <algorithm>
#include <map>

namespace qct {

KPoly KPoly::from_longs(FieldId f, std::initializer_list<long> cs) {
    std::vector<FieldElem> v;
    for (long c : cs) v.push_back(make_elem(f, c));
    return KPoly(f, std::move(v));
}

KPoly KPoly::operator+(const KPoly& o) const {
    std::vector<FieldElem> v(std::max(c_.size(), o.c_.size()), make_elem(f_, 0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return KPoly(f_, std::move(v));
}

KPoly KPoly::operator-() const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(-x);
    return KPoly(f_, std::move(v));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
    if (is_zero() || o.is_zero()) return KPoly(f_);
    std::vector<FieldElem> v(c_.size() + o.c_.size() - 1, make_elem(f_, 0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return KPoly(f_, std::move(v));
}

KPoly KPoly::scaled(const FieldElem& s) const {
    std::vector<FieldElem> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * s);
    return KPoly(f_, std::move(v));
}

KPoly KPoly::shifted_arg(const FieldElem& t) const {
    // Horner on p(x+t)
    KPoly res(f_);
    KPoly xt = KPoly(f_, {t, make_elem(f_, 1)});
    for (int i = degree(); i >= 0; --i) res = res * xt + KPoly::constant(c_[i]);
    return res;
}

FieldElem KPoly::eval(const FieldElem& x) const {
    FieldElem acc = make_elem(f_, 0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

KPoly KPoly::derivative() const {
    if (degree() < 1) return KPoly(f_);
    std::vector<FieldElem> v;
    for (int i = 1; i <= degree(); ++i) v.push_back(static_cast<long>(i) * c_[i]);
    return KPoly(f_, std::move(v));
}

KPoly KPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inv());
}

void KPoly::divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
    if (b.is_zero()) throw qct_error("poly division by zero");
    FieldId f = a.f_;
    std::vector<FieldElem> rem = a.c_;
    int db = b.degree();
    FieldElem binv = b.lead().inv();
    std::vector<FieldElem> quot;
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, make_elem(f, 0));
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        FieldElem coef = rem[i] * binv;
        quot[i - db] = coef;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= coef * b.c_[j];
    }
    q = KPoly(f, std::move(quot));
    r = KPoly(f, std::move(rem));
}

KPoly KPoly::gcd(const KPoly& a, const KPoly& b) {
    KPoly x = a, y = b;
    while (!y.is_zero()) {
        KPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x.monic();
}

KPoly KPoly::squarefree() const {
    if (degree() < 1) return *this;
    KPoly g = gcd(*this, derivative());
    return divexact(*this, g);
}

KPoly KPoly::divexact(const KPoly& a, const KPoly& b) {
    KPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw qct_error("divexact: remainder nonzero");
    return q;
}

std::string KPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
}

FieldElem resultant(const KPoly& a, const KPoly& b) {
    FieldId f = a.field();
    if (a.is_zero() || b.is_zero()) return make_elem(f, 0);
    KPoly x = a, y = b;
    FieldElem res = make_elem(f, 1);
    bool swapped = false;
    int sign = 1;
    (void)swapped;
    while (y.degree() > 0) {
        KPoly q, r;
        KPoly::divmod(x, y, q, r);
        if (r.is_zero()) return make_elem(f, 0);
        // res(x, y) = (-1)^(dx*dy) lc(y)^(dx - dr) res(y, r)
        int dx = x.degree(), dy = y.degree(), dr = r.degree();
        if ((dx * dy) % 2) sign = -sign;
        FieldElem lc = y.lead();
        FieldElem pw = make_elem(f, 1);
        for (int i = 0; i < dx - dr; ++i) pw *= lc;
        res *= pw;
        x = y;
        y = r;
    }
    // y is a nonzero constant
    FieldElem pw = make_elem(f, 1);
    for (int i = 0; i < x.degree(); ++i) pw *= y[0];
    res *= pw;
    if (sign < 0) res = -res;
    return res;
}

// ---- modular root finding ---------------------------------------------------

namespace {

using ZP = std::vector<Int>;  // dense F_P poly, coefficients reduced mod P

void zp_trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZP zp_mul(const ZP& a, const ZP& b, const Int& P) {
    if (a.empty() || b.empty()) return {};
    ZP c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& x : c) x %= P;
    zp_trim(c);
    return c;
}

Int zp_inv(const Int& a, const Int& P) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), P.get_mpz_t()))
        throw qct_error("non-invertible element mod P");
    return r;
}

ZP zp_mod(const ZP& a, const ZP& m, const Int& P) {
    ZP r = a;
    zp_trim(r);
    if (m.empty()) throw qct_error("zp_mod by zero");
    Int mlead_inv = zp_inv(m.back(), P);
    while (r.size() >= m.size()) {
        Int coef = r.back() * mlead_inv % P;
        std::size_t off = r.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j) {
            r[off + j] -= coef * m[j];
            r[off + j] %= P;
        }
        zp_trim(r);
        if (!r.empty() && r.size() > m.size() && r.back() == 0) zp_trim(r);
        if (r.size() >= m.size() && r.back() == 0) zp_trim(r);
        if (!r.empty() && r.back() == 0) zp_trim(r);
        if (r.size() < m.size()) break;
        if (r.empty()) break;
    }
    for (auto& x : r) x = ((x % P) + P) % P;
    zp_trim(r);
    return r;
}

ZP zp_gcd(ZP a, ZP b, const Int& P) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZP r = zp_mod(a, b, P);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        Int inv = zp_inv(a.back(), P);
        for (auto& x : a) x = x * inv % P;
    }
    return a;
}

// x^e mod m
ZP zp_xpow(const Int& e, const ZP& m, const Int& P) {
    ZP result{Int(1)};
    ZP base{Int(0), Int(1)};
    base = zp_mod(base, m, P);
    Int k = e;
    // left-to-right would need bit access; use right-to-left
    ZP acc = base;
    Int n = e;
    result = ZP{Int(1)};
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = zp_mod(zp_mul(result, acc, P), m, P);
        n /= 2;
        if (n > 0) acc = zp_mod(zp_mul(acc, acc, P), m, P);
    }
    return result;
}

ZP zp_sub(const ZP& a, const ZP& b, const Int& P) {
    ZP c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % P + P) % P;
    zp_trim(c);
    return c;
}

// all roots in F_P of a (not necessarily squarefree) poly
std::vector<Int> zp_roots(const ZP& h0, const Int& P) {
    ZP h = h0;
    zp_trim(h);
    std::vector<Int> roots;
    if (h.empty()) throw qct_error("zp_roots of zero polynomial");
    // strip zero roots
    std::size_t k = 0;
    while (k < h.size() && h[k] == 0) ++k;
    if (k > 0) {
        roots.push_back(Int(0));
        h.erase(h.begin(), h.begin() + k);
    }
    if (h.size() <= 1) return roots;
    // product of distinct linear factors
    ZP xp = zp_xpow(P, h, P);
    ZP lin = zp_gcd(zp_sub(xp, ZP{Int(0), Int(1)}, P), h, P);
    // split by translation: gcd(lin(x), (x+d)^((P-1)/2) - 1)
    std::vector<ZP> stack{lin};
    Int half = (P - 1) / 2;
    long delta = 0;
    while (!stack.empty()) {
        ZP g = stack.back();
        stack.pop_back();
        if (g.size() <= 1) continue;
        if (g.size() == 2) {
            Int r = ((-g[0] * zp_inv(g[1], P)) % P + P) % P;
            roots.push_back(r);
            continue;
        }
        // (x + delta)^half mod g
        ZP xd{Int(delta), Int(1)};
        xd = zp_mod(xd, g, P);
        ZP acc{Int(1)};
        Int n = half;
        ZP base = xd;
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t())) acc = zp_mod(zp_mul(acc, base, P), g, P);
            n /= 2;
            if (n > 0) base = zp_mod(zp_mul(base, base, P), g, P);
        }
        ZP g1 = zp_gcd(zp_sub(acc, ZP{Int(1)}, P), g, P);
        ++delta;
        if (g1.size() <= 1 || g1.size() == g.size()) {
            stack.push_back(g);  // retry with next delta
            continue;
        }
        ZP g2 = zp_gcd(g, g1, P);  // ensure monic division
        // quotient g / g1
        // do explicit division
        {
            ZP q;
            ZP r = g;
            zp_trim(r);
            Int linv = zp_inv(g1.back(), P);
            q.assign(r.size() - g1.size() + 1, Int(0));
            for (long i = static_cast<long>(r.size()) - 1;
                 i >= static_cast<long>(g1.size()) - 1; --i) {
                Int coef = r[i] * linv % P;
                q[i - (g1.size() - 1)] = coef;
                for (std::size_t j = 0; j < g1.size(); ++j) {
                    r[i - (g1.size() - 1) + j] =
                        ((r[i - (g1.size() - 1) + j] - coef * g1[j]) % P + P) % P;
                }
            }
            zp_trim(r);
            if (!r.empty()) throw qct_error("zp split division failed");
            zp_trim(q);
            stack.push_back(g1);
            stack.push_back(q);
        }
        (void)g2;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Int sym_lift(const Int& x, const Int& P) {
    Int r = ((x % P) + P) % P;
    if (2 * r > P) r -= P;
    return r;
}

struct MonicizedPoly {
    // h monic with Z[sqrt(D)] coefficients (integer coordinates); a root w of h
    // corresponds to the root w / scale of the original polynomial.
    std::vector<std::pair<Int, Int>> coords;  // (u, v): coefficient u + v*sqrt(D)
    FieldElem scale;                          // in K
    Int coord_bound;                          // |coords of any root| <= coord_bound
};

// scale the squarefree g so its roots become algebraic integers with integer
// coordinates: w = 2 * lead * x
MonicizedPoly monicize(const KPoly& g) {
    FieldId f = g.field();
    int n = g.degree();
    // clear denominators first
    Int den(1);
    for (const auto& c : g.coeffs()) {
        den = lcm(den, c.a().get_den());
        den = lcm(den, c.b().get_den());
    }
    std::vector<FieldElem> gi;
    for (const auto& c : g.coeffs()) gi.push_back(c * elem_from_rat(f, Rat(den)));
    FieldElem c_lead = gi.back();
    // h(y) = c^(n-1) g(y/c), then h2(w) = 2^n h(w/2): monic, integer coords
    FieldElem scale = elem_from_rat(f, Rat(2)) * c_lead;
    MonicizedPoly out;
    out.scale = scale;
    out.coords.resize(n + 1);
    Rat maxnorm(0);
    for (int i = 0; i <= n; ++i) {
        // coefficient of w^i: g_i * c^(n-1-i) * 2^(n-i)
        FieldElem coef = gi[i];
        for (int k = 0; k < n - 1 - i; ++k) coef *= c_lead;
        Rat two_pow(1);
        for (int k = 0; k < n - i; ++k) two_pow *= 2;
        coef *= elem_from_rat(f, two_pow);
        if (i == n) coef = coef * c_lead.inv();  // top term: divide back to 1
        if (coef.a().get_den() != 1 || coef.b().get_den() != 1)
            throw qct_error("monicize: non-integral coordinate");
        out.coords[i] = {coef.a().get_num(), coef.b().get_num()};
        if (i < n && coef.norm() > maxnorm) maxnorm = coef.norm();
    }
    // Cauchy bound on |w|: 1 + max |h_i|; coordinates bounded by the same
    Int m = maxnorm.get_num() / maxnorm.get_den();
    Int s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    out.coord_bound = s + 2;
    return out;
}

Int next_split_prime(FieldId f, const Int& lower_bound,
                     const std::vector<Int>& avoid_divisors = {}) {
    int m = f == FieldId::Gauss ? 4 : 3;
    Int p = lower_bound;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p % m != 1) continue;
        bool ok = true;
        for (const auto& d : avoid_divisors)
            if (d != 0 && d % p == 0) ok = false;
        if (ok) return p;
    }
}

Int sqrt_mod_P(const Int& a, const Int& P);  // fwd

Int powm(const Int& b, const Int& e, const Int& P) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
    return r;
}

Int sqrt_mod_P(const Int& a0, const Int& P) {
    Int a = ((a0 % P) + P) % P;
    if (a == 0) return Int(0);
    if (P % 4 == 3) return powm(a, (P + 1) / 4, P);
    Int q = P - 1;
    long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z(2);
    while (mpz_legendre(z.get_mpz_t(), P.get_mpz_t()) != -1) z += 1;
    Int m(s);
    Int c = powm(z, q, P), t = powm(a, q, P), r = powm(a, (q + 1) / 2, P);
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = tt * tt % P;
            ++i;
        }
        Int b = c;
        for (long j = 0; j < m.get_si() - i - 1; ++j) b = b * b % P;
        m = i;
        c = b * b % P;
        t = t * c % P;
        r = r * b % P;
    }
    return r;
}

}  // namespace

std::vector<FieldElem> roots_in_K(const KPoly& g0) {
    FieldId f = g0.field();
    std::vector<FieldElem> roots;
    if (g0.degree() < 1) return roots;
    KPoly g = g0.squarefree();
    // x = 0
    std::size_t k = 0;
    while (k < g.coeffs().size() && g[k].is_zero()) ++k;
    if (k > 0) {
        roots.push_back(make_elem(f, 0));
        std::vector<FieldElem> rest(g.coeffs().begin() + k, g.coeffs().end());
        g = KPoly(f, std::move(rest));
    }
    if (g.degree() >= 1) {
        if (g.degree() == 1) {
            roots.push_back(-g[0] / g[1]);
        } else {
            MonicizedPoly mp = monicize(g);
            Int D(field_D(f));
            Int P = next_split_prime(f, 4 * mp.coord_bound + 64);
            Int r = sqrt_mod_P(D, P);
            if ((r * r - D) % P != 0) throw qct_error("internal: bad sqrt mod P");
            ZP h1(mp.coords.size()), h2(mp.coords.size());
            for (std::size_t i = 0; i < mp.coords.size(); ++i) {
                h1[i] = ((mp.coords[i].first + mp.coords[i].second * r) % P + P) % P;
                h2[i] = ((mp.coords[i].first - mp.coords[i].second * r) % P + P) % P;
            }
            auto R1 = zp_roots(h1, P);
            auto R2 = zp_roots(h2, P);
            Int inv2 = zp_inv(Int(2), P), inv2r = zp_inv(2 * r % P, P);
            for (const auto& t1 : R1)
                for (const auto& t2 : R2) {
                    Int u = sym_lift((t1 + t2) * inv2, P);
                    Int v = sym_lift((t1 - t2) * inv2r, P);
                    if (abs(u) > mp.coord_bound || abs(v) > mp.coord_bound) continue;
                    FieldElem w(f, Rat(u), Rat(v));
                    FieldElem x = w / mp.scale;
                    if (g.eval(x).is_zero()) roots.push_back(x);
                }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const FieldElem& a, const FieldElem& b) { return FieldElem::cmp(a, b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<QuadExtRoot> roots_in_quadext(const KPoly& g0, const FieldElem& e) {
    FieldId f = g0.field();
    if (is_square_in_K(e)) throw qct_error("roots_in_quadext: radicand is a square");
    std::vector<QuadExtRoot> out;
    if (g0.degree() < 2) return out;
    KPoly g = g0.squarefree();
    if (g.degree() < 2) return out;

    MonicizedPoly mp = monicize(g);
    // roots w = (A + B sqrt(e))/2 with A, B in O_K; coordinates of 2A, 2B in
    // Z[sqrt(D)] are bounded via |w| <= bound and |e| >= 1
    Int C = 16 * (mp.coord_bound + 1);
    // scale again by 4: z = 4w has integer-coordinate components
    std::vector<std::pair<Int, Int>> zc(mp.coords.size());
    Int four(4);
    Int pw(1);
    int n = g.degree();
    for (int i = 0; i <= n; ++i) {
        // coefficient of z^i in 4^n h(z/4): h_i * 4^(n-i)
        Int scale_i;
        mpz_ui_pow_ui(scale_i.get_mpz_t(), 4, n - i);
        zc[i] = {mp.coords[i].first * scale_i, mp.coords[i].second * scale_i};
    }
    (void)four;
    (void)pw;
    Int zC = 4 * C;

    Int D(field_D(f));
    // avoid primes dividing norm(e) so that e stays a unit mod P
    Rat ne = e.norm();
    Int P = next_split_prime(f, 4 * zC + 64);
    Int r(0), s1(0), s2(0);
    // search a split prime where both embeddings of e are nonzero QRs
    while (true) {
        r = sqrt_mod_P(D, P);
        // embeddings of e
        Int den = lcm(e.a().get_den(), e.b().get_den());
        Int ea = e.a().get_num() * (den / e.a().get_den());
        Int eb = e.b().get_num() * (den / e.b().get_den());
        Int dmod = den % P;
        Int dinv = zp_inv(dmod == 0 ? Int(dmod + P) : dmod, P);
        Int e1 = ((ea + eb * r) % P + P) % P * dinv % P;
        Int e2 = ((ea - eb * r) % P + P) % P * dinv % P;
        if (e1 != 0 && e2 != 0 && mpz_legendre(e1.get_mpz_t(), P.get_mpz_t()) == 1 &&
            mpz_legendre(e2.get_mpz_t(), P.get_mpz_t()) == 1) {
            s1 = sqrt_mod_P(e1, P);
            s2 = sqrt_mod_P(e2, P);
            break;
        }
        P = next_split_prime(f, P);
    }
    (void)ne;

    // reduce the z-polynomial under both K-embeddings
    ZP h1(zc.size()), h2(zc.size());
    for (std::size_t i = 0; i < zc.size(); ++i) {
        h1[i] = ((zc[i].first + zc[i].second * r) % P + P) % P;
        h2[i] = ((zc[i].first - zc[i].second * r) % P + P) % P;
    }
    auto R1 = zp_roots(h1, P);
    auto R2 = zp_roots(h2, P);
    Int inv2 = zp_inv(Int(2), P);
    Int inv2s1 = zp_inv(2 * s1 % P, P), inv2s2 = zp_inv(2 * s2 % P, P);
    Int inv2r = zp_inv(2 * r % P, P);

    struct Half {
        Int alpha, beta;  // embedding values of the sqrt(e)-even / odd parts
    };
    std::vector<Half> side1, side2;
    for (const auto& t : R1)
        for (const auto& t2 : R1) {
            if (t == t2) continue;  // v = 0 means a K(sqrt D)-rational root; skip
            side1.push_back({(t + t2) * inv2 % P, ((t - t2) % P + P) % P * inv2s1 % P});
        }
    for (const auto& t : R2)
        for (const auto& t2 : R2) {
            if (t == t2) continue;
            side2.push_back({(t + t2) * inv2 % P, ((t - t2) % P + P) % P * inv2s2 % P});
        }
    FieldElem inv_scale = (mp.scale * elem_from_rat(f, Rat(4))).inv();
    for (const auto& a1 : side1)
        for (const auto& a2 : side2) {
            Int u1 = sym_lift((a1.alpha + a2.alpha) * inv2, P);
            if (abs(u1) > zC) continue;
            Int u2 = sym_lift(((a1.alpha - a2.alpha) % P + P) * inv2r, P);
            if (abs(u2) > zC) continue;
            Int u3 = sym_lift((a1.beta + a2.beta) * inv2, P);
            if (abs(u3) > zC) continue;
            Int u4 = sym_lift(((a1.beta - a2.beta) % P + P) * inv2r, P);
            if (abs(u4) > zC) continue;
            FieldElem A(f, Rat(u1), Rat(u2)), B(f, Rat(u3), Rat(u4));
            if (B.is_zero()) continue;
            // candidate root x = (A + B sqrt(e)) * inv_scale of g
            FieldElem u = A * inv_scale, v = B * inv_scale;
            // evaluate g(u + v sqrt(e)) in the pair representation
            FieldElem pu = make_elem(f, 0), pv = make_elem(f, 0);
            for (int i = g.degree(); i >= 0; --i) {
                // (pu, pv) = (pu, pv) * (u, v) + g_i
                FieldElem npu = pu * u + pv * v * e;
                FieldElem npv = pu * v + pv * u;
                pu = npu + g[i];
                pv = npv;
            }
            if (pu.is_zero() && pv.is_zero()) out.push_back({u, v});
        }
    std::sort(out.begin(), out.end(), [](const QuadExtRoot& a, const QuadExtRoot& b) {
        int c = FieldElem::cmp(a.u, b.u);
        if (c != 0) return c < 0;
        return FieldElem::cmp(a.v, b.v) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const QuadExtRoot& a, const QuadExtRoot& b) {
                              return a.u == b.u && a.v == b.v;
                          }),
              out.end());
    return out;
}

}  // namespace qct

// cube test lives here to reuse the root finder
namespace qct {
bool is_cube_in_K(const FieldElem& x) {
    if (x.is_zero()) return true;
    FieldId f = x.field();
    KPoly t3(f, {-x, make_elem(f, 0), make_elem(f, 0), make_elem(f, 1)});
    return !roots_in_K(t3).empty();
}
}  // namespace qct
