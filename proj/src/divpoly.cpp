#include "qct/divpoly.hpp"

namespace qct {

namespace {

// psi-tilde table up to n, with F = psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
std::vector<KPoly> psi_table(const Curve& e, int n) {
    FieldId f = e.field();
    std::vector<KPoly> t(static_cast<std::size_t>(std::max(n, 4)) + 1, KPoly(f));
    KPoly F(f, {e.b6(), 2 * e.b4(), e.b2(), make_elem(f, 4)});
    t[0] = KPoly(f);
    t[1] = KPoly::constant(make_elem(f, 1));
    t[2] = KPoly::constant(make_elem(f, 1));
    t[3] = KPoly(f, {e.b8(), 3 * e.b6(), 3 * e.b4(), e.b2(), make_elem(f, 3)});
    t[4] = KPoly(f, {e.b4() * e.b8() - e.b6() * e.b6(), e.b2() * e.b8() - e.b4() * e.b6(),
                     10 * e.b8(), 10 * e.b6(), 5 * e.b4(), e.b2(), make_elem(f, 2)});
    KPoly F2 = F * F;
    for (int k = 5; k <= n; ++k) {
        if (k % 2) {
            int m = (k - 1) / 2;
            KPoly lhs = t[m + 2] * t[m] * t[m] * t[m];
            KPoly rhs = t[m - 1] * t[m + 1] * t[m + 1] * t[m + 1];
            t[k] = (m % 2 == 0) ? F2 * lhs - rhs : lhs - F2 * rhs;
        } else {
            int m = k / 2;
            t[k] = t[m] * (t[m + 2] * t[m - 1] * t[m - 1] - t[m - 2] * t[m + 1] * t[m + 1]);
        }
    }
    return t;
}

}  // namespace

DivisionPoly division_polynomial(const Curve& e, int n) {
    if (n < 1 || n > 32) throw qct_error("division polynomial index out of range [1, 32]");
    auto t = psi_table(e, n);
    return DivisionPoly{n, t[n]};
}

KPoly exact_order_poly(const Curve& e, int n) {
    if (n < 2) throw qct_error("exact_order_poly needs n >= 2");
    auto t = psi_table(e, n);
    if (n == 2) {
        // roots of psi_2^2 / 4
        return e.rhs_cubic();
    }
    KPoly num = t[n];
    // divide out every maximal proper divisor's polynomial
    std::vector<int> proper;
    for (int p = 2; p <= n; ++p)
        if (n % p == 0 && ((n / p) > 1 || p == n)) {
        }
    // collect n/p for primes p | n
    KPoly den = KPoly::constant(make_elem(e.field(), 1));
    std::vector<int> divs;
    for (int p = 2; p * p <= n || p <= n; ++p) {
        if (p > n) break;
        if (n % p == 0) {
            bool prime = true;
            for (int q = 2; q * q <= p; ++q)
                if (p % q == 0) prime = false;
            if (prime) divs.push_back(n / p);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    // inclusion-exclusion is overkill for the orders used here (prime powers
    // and 2p); handle via gcd-free iterated exact division
    KPoly res = num;
    for (int d : divs) {
        KPoly g = (d % 2 == 0 || d == 2) ? t[d] : t[d];
        if (d == 1) continue;
        KPoly dd = t[d];
        if (d % 2 == 0 && n % 2 != 0) dd = dd;  // same univariate convention
        KPoly common = KPoly::gcd(res, dd);
        while (common.degree() > 0) {
            res = KPoly::divexact(res, common);
            common = KPoly::gcd(res, dd);
        }
        (void)g;
    }
    // even n, odd divisor handling leaves the cubic factor when 2 | n and the
    // univariate forms differ; strip 2-torsion roots explicitly
    if (n % 2 == 0) {
        KPoly cubic = e.rhs_cubic();
        KPoly common = KPoly::gcd(res, cubic);
        while (common.degree() > 0) {
            res = KPoly::divexact(res, common);
            common = KPoly::gcd(res, cubic);
        }
    }
    return res;
}

Curve kubert_order7_curve(FieldId f, const FieldElem& t) {
    if (t.is_zero() || t.is_one()) throw qct_error("kubert parameter must avoid 0 and 1");
    FieldElem b = t * t * t - t * t;
    FieldElem c = t * t - t;
    return Curve(f, make_elem(f, 1) - c, -b, -b, make_elem(f, 0), make_elem(f, 0));
}

}  // namespace qct
