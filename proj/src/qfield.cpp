#include "qct/qfield.hpp"

#include <algorithm>
#include <cctype>

namespace qct {

FieldId field_from_name(const std::string& name) {
    if (name == "gauss") return FieldId::Gauss;
    if (name == "eisenstein") return FieldId::Eisenstein;
    throw qct_error("unknown field '" + name + "' (expected gauss or eisenstein)");
}

Rat FieldElem::norm() const {
    return a_ * a_ - field_D(f_) * b_ * b_;
}

static void check_same_field(const FieldElem& x, const FieldElem& y) {
    if (x.field() != y.field()) throw qct_error("field mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(f_, a_ + o.a_, b_ + o.b_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(*this, o);
    return FieldElem(f_, a_ - o.a_, b_ - o.b_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(*this, o);
    int D = field_D(f_);
    return FieldElem(f_, a_ * o.a_ + D * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw qct_error("division by zero in K");
    Rat n = norm();
    return FieldElem(f_, a_ / n, -b_ / n);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inv();
}

FieldElem operator*(long n, const FieldElem& x) {
    return FieldElem(x.field(), n * x.a(), n * x.b());
}

bool FieldElem::is_integral() const {
    if (f_ == FieldId::Gauss) {
        return a_.get_den() == 1 && b_.get_den() == 1;
    }
    // Z[omega]: (u + v*sqrt(-3))/2 with u = v mod 2.
    Rat ta = 2 * a_, tb = 2 * b_;
    if (ta.get_den() != 1 || tb.get_den() != 1) return false;
    return ((ta.get_num() - tb.get_num()) % 2) == 0;
}

int FieldElem::cmp(const FieldElem& x, const FieldElem& y) {
    check_same_field(x, y);
    Rat nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny ? -1 : 1;
    if (x.a_ != y.a_) return x.a_ < y.a_ ? -1 : 1;
    if (x.b_ != y.b_) return x.b_ < y.b_ ? -1 : 1;
    return 0;
}

static std::string rat_str(const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

std::string FieldElem::str() const {
    if (b_ == 0) return rat_str(a_);
    if (b_ > 0) return rat_str(a_) + "+" + rat_str(b_) + "*s";
    return rat_str(a_) + "-" + rat_str(-b_) + "*s";
}

const std::vector<FieldElem>& units_of(FieldId f) {
    static const std::vector<FieldElem> gauss_units = {
        make_elem(FieldId::Gauss, 1), make_elem(FieldId::Gauss, -1),
        make_elem(FieldId::Gauss, 0, 1), make_elem(FieldId::Gauss, 0, -1)};
    static const std::vector<FieldElem> eis_units = {
        make_elem(FieldId::Eisenstein, 1),
        make_elem(FieldId::Eisenstein, -1),
        FieldElem(FieldId::Eisenstein, Rat(1, 2), Rat(1, 2)),
        FieldElem(FieldId::Eisenstein, Rat(-1, 2), Rat(-1, 2)),
        FieldElem(FieldId::Eisenstein, Rat(-1, 2), Rat(1, 2)),
        FieldElem(FieldId::Eisenstein, Rat(1, 2), Rat(-1, 2))};
    return f == FieldId::Gauss ? gauss_units : eis_units;
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
};

Int parse_int(Cursor& c) {
    std::size_t start = c.pos;
    if (c.peek() == '-') ++c.pos;
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw parse_error("expected integer", c.pos);
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    return Int(c.s.substr(start, c.pos - start));
}

Rat parse_R(Cursor& c) {
    Int num = parse_int(c);
    if (c.peek() == '/') {
        ++c.pos;
        std::size_t dpos = c.pos;
        Int den = parse_int(c);
        if (den == 0) throw parse_error("zero denominator", dpos);
        Rat r(num);
        r /= Rat(den);
        return r;
    }
    return Rat(num);
}

}  // namespace

FieldElem parse_elem(FieldId f, const std::string& text) {
    Cursor c{text};
    Rat a = parse_R(c);
    Rat b(0);
    if (!c.done()) {
        char sign = c.peek();
        if (sign != '+' && sign != '-') throw parse_error("expected '+', '-' or end", c.pos);
        ++c.pos;
        Rat mag = parse_R(c);
        if (c.peek() != '*') throw parse_error("expected '*'", c.pos);
        ++c.pos;
        if (c.peek() != 's') throw parse_error("expected 's'", c.pos);
        ++c.pos;
        b = (sign == '-') ? -mag : mag;
    }
    if (!c.done()) throw parse_error("trailing input", c.pos);
    return FieldElem(f, a, b);
}

// ---- Euclidean structure ---------------------------------------------------

static Int round_to_int(const Rat& r) {
    // nearest integer, half rounds toward +inf; any tie rule works here
    Int num = r.get_num(), den = r.get_den();
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) q += 1;
    return q;
}

void divmod_OK(const FieldElem& x, const FieldElem& y, FieldElem& q, FieldElem& r) {
    check_same_field(x, y);
    if (y.is_zero()) throw qct_error("division by zero in O_K");
    FieldElem t = x / y;
    FieldId f = x.field();
    if (f == FieldId::Gauss) {
        q = FieldElem(f, Rat(round_to_int(t.a())), Rat(round_to_int(t.b())));
    } else {
        // coordinates in the (1, omega) basis, omega = (-1+sqrt(-3))/2
        Rat u = t.a() + t.b(), v = 2 * t.b();
        Int u0 = round_to_int(u), v0 = round_to_int(v);
        q = FieldElem(f, Rat(u0) - Rat(v0) / 2, Rat(v0) / 2);
    }
    r = x - q * y;
}

FieldElem gcd_OK(const FieldElem& x, const FieldElem& y) {
    check_same_field(x, y);
    if (x.is_zero() && y.is_zero()) throw qct_error("gcd(0,0) undefined");
    if (!x.is_integral() || !y.is_integral()) throw qct_error("gcd_OK needs integral arguments");
    FieldElem a = x, b = y;
    while (!b.is_zero()) {
        FieldElem q, r;
        divmod_OK(a, b, q, r);
        a = b;
        b = r;
    }
    return unit_normalize(a);
}

FieldElem unit_normalize(const FieldElem& x, FieldElem* unit_out) {
    if (x.is_zero()) {
        if (unit_out) *unit_out = make_elem(x.field(), 1);
        return x;
    }
    const auto& us = units_of(x.field());
    const FieldElem* best = nullptr;
    const FieldElem* best_u = nullptr;
    FieldElem cand;
    std::vector<FieldElem> cands;
    cands.reserve(us.size());
    for (const auto& u : us) cands.push_back(x * u);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const FieldElem& c = cands[i];
        if (c.a() < 0) continue;
        if (!best || c.a() > best->a() || (c.a() == best->a() && c.b() > best->b())) {
            best = &cands[i];
            best_u = &us[i];
        }
    }
    if (!best) throw qct_error("unit normalization failed");  // unreachable
    if (unit_out) *unit_out = *best_u;
    return *best;
}

// ---- rational integer factoring -------------------------------------------

namespace {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Int brent_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEuL);
    while (true) {
        Int y = rng.get_z_range(n - 2) + 1;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, d(1), q(1), ys(0);
        long r = 1, m = 128;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x > y ? x - y : y - x;
                    q = q * diff % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? x - ys : ys - x;
                d = gcd(diff, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_int(Int n, std::vector<std::pair<Int, int>>& out) {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(Int(p), e);
    }
    Int p(17);
    while (p * p <= n && p < 1000000) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
        p += 2;
    }
    // remainder: prime, prime power, or semiprime-ish; rho finishes it
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probable_prime(m)) {
            bool merged = false;
            for (auto& [q, e] : out)
                if (q == m) {
                    ++e;
                    merged = true;
                    break;
                }
            if (!merged) out.emplace_back(m, 1);
            continue;
        }
        Int d = brent_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
}

// square root of a mod p (p odd prime), assuming it exists
Int sqrt_mod_p(const Int& a0, const Int& p) {
    Int a = ((a0 % p) + p) % p;
    if (a == 0) return Int(0);
    if (p % 4 == 3) {
        Int r;
        Int e = (p + 1) / 4;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    // Tonelli-Shanks
    Int q = p - 1;
    long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z(2);
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) z += 1;
    Int m(s), c, t, r;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (long j = 0; j < m.get_si() - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

}  // namespace

Factorization factor_OK(const FieldElem& x, const Int& norm_bound) {
    if (x.is_zero()) throw qct_error("factor_OK(0)");
    if (!x.is_integral()) throw qct_error("factor_OK needs an integral argument");
    Rat nrm = x.norm();
    Int n = nrm.get_num();  // integral element => integer norm
    if (nrm.get_den() != 1) throw qct_error("internal: integral element with non-integer norm");
    if (norm_bound > 0 && n > norm_bound)
        throw qct_error("factor_OK: norm " + n.get_str() + " exceeds bound " + norm_bound.get_str());

    FieldId f = x.field();
    int D = field_D(f);
    std::vector<std::pair<Int, int>> rational;
    factor_int(n, rational);

    Factorization out;
    FieldElem rem = x;
    for (const auto& [p, e_norm] : rational) {
        std::vector<FieldElem> primes_above;
        if (p == -D) {
            primes_above.push_back(unit_normalize(field_s(f)));  // ramified
        } else if (p == 2 && f == FieldId::Gauss) {
            primes_above.push_back(unit_normalize(make_elem(f, 1, 1)));
        } else {
            int leg = mpz_legendre(Int(D).get_mpz_t(), p.get_mpz_t());
            if (leg == -1) {
                primes_above.push_back(elem_from_rat(f, Rat(p)));  // inert
            } else {
                Int r = sqrt_mod_p(Int(D), p);
                FieldElem pi = gcd_OK(elem_from_rat(f, Rat(p)), FieldElem(f, Rat(r), Rat(-1)));
                primes_above.push_back(unit_normalize(pi));
                primes_above.push_back(unit_normalize(pi.conj()));
            }
        }
        std::sort(primes_above.begin(), primes_above.end(),
                  [](const FieldElem& l, const FieldElem& r2) { return FieldElem::cmp(l, r2) < 0; });
        primes_above.erase(std::unique(primes_above.begin(), primes_above.end()), primes_above.end());
        for (const auto& pi : primes_above) {
            int e = 0;
            while (true) {
                FieldElem q, r;
                divmod_OK(rem, pi, q, r);
                if (!r.is_zero()) break;
                rem = q;
                ++e;
            }
            if (e) out.factors.push_back({pi, e});
        }
        (void)e_norm;
    }
    if (rem.norm() != 1)
        throw qct_error("factor_OK internal: nontrivial remainder " + rem.str());
    out.unit = rem;
    return out;
}

// ---- square classes --------------------------------------------------------

namespace {

std::optional<Rat> sqrt_rat(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        Int sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        Rat s(sn);
        s /= Rat(sd);
        return s;
    }
    return std::nullopt;
}

FieldElem canonical_sign(const FieldElem& w) {
    if (w.a() > 0 || (w.a() == 0 && w.b() > 0)) return w;
    return -w;
}

}  // namespace

std::optional<FieldElem> sqrt_in_K(const FieldElem& x) {
    FieldId f = x.field();
    int D = field_D(f);
    if (x.is_zero()) return make_elem(f, 0);
    if (x.b() == 0) {
        if (auto r = sqrt_rat(x.a())) return canonical_sign(elem_from_rat(f, *r));
        if (auto r = sqrt_rat(x.a() / D)) return canonical_sign(FieldElem(f, Rat(0), *r));
        return std::nullopt;
    }
    auto n = sqrt_rat(x.norm());
    if (!n) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rat h = sign == 0 ? Rat((x.a() + *n) / 2) : Rat((x.a() - *n) / 2);
        if (auto p = sqrt_rat(h)) {
            if (*p == 0) continue;
            Rat q = x.b() / (2 * *p);
            FieldElem w(f, *p, q);
            if (w * w == x) return canonical_sign(w);
        }
    }
    return std::nullopt;
}

FieldElem squarefree_part(const FieldElem& x, const Int& norm_bound) {
    if (x.is_zero()) throw qct_error("squarefree_part(0)");
    FieldId f = x.field();
    // scale to an integral element in the same square class
    Int t = lcm(x.a().get_den(), x.b().get_den());
    FieldElem z = x * elem_from_rat(f, Rat(t));  // integral coords
    FieldElem y = z * elem_from_rat(f, Rat(t));  // class of x, times t^2
    Factorization fac = factor_OK(y, norm_bound);

    FieldElem s = make_elem(f, 1);
    for (const auto& [p, e] : fac.factors)
        if (e % 2) s = s * p;

    // odd part of the unit class
    bool unit_is_square = sqrt_in_K(fac.unit).has_value();
    if (!unit_is_square) {
        FieldElem odd_unit = f == FieldId::Gauss ? make_elem(f, 0, 1) : make_elem(f, -1);
        s = s * odd_unit;
    }
    // canonical associate within the same square class (square units only)
    std::vector<FieldElem> cands;
    if (f == FieldId::Gauss) {
        cands = {s, -s};
    } else {
        FieldElem w = FieldElem(f, Rat(-1, 2), Rat(1, 2));  // omega
        cands = {s, s * w, s * w * w};
    }
    const FieldElem* best = nullptr;
    for (const auto& c : cands) {
        if (c.a() < 0) continue;
        if (!best || c.a() > best->a() || (c.a() == best->a() && c.b() > best->b())) best = &c;
    }
    if (!best) throw qct_error("squarefree_part: normalization failed");
    return *best;
}

FourthPowerInF sqrt_is_square_in_F(const FieldElem& x) {
    if (x.is_zero()) throw qct_error("sqrt_is_square_in_F(0)");
    FieldId f = x.field();
    FourthPowerInF res;
    auto add_radicand = [&](const FieldElem& r) {
        FieldElem s = squarefree_part(r);
        if (!s.is_one()) res.witness_radicands.push_back(s);
    };
    if (auto w = sqrt_in_K(x)) {
        res.yes = true;
        add_radicand(*w);  // u = sqrt(w), u^4 = x
        return res;
    }
    if (f == FieldId::Eisenstein) {
        if (auto v = sqrt_in_K(-x)) {
            // x = -v^2; u = (1+i)/sqrt(2) * sqrt(v) has u^4 = -v^2 = x
            res.yes = true;
            add_radicand(make_elem(f, -1));
            add_radicand(make_elem(f, 2));
            add_radicand(*v);
            return res;
        }
    }
    return res;
}

bool sqrt_i_multiple_never_square(FieldId f, const FieldElem& a) {
    if (f != FieldId::Eisenstein)
        throw qct_error("sqrt_i_multiple_never_square applies over Q(sqrt(-3)) only");
    if (a.field() != f) throw qct_error("field mismatch");
    if (a.is_zero()) throw qct_error("sqrt_i_multiple_never_square: zero multiple");
    return false;  // sqrt(a*i) is never a square in F
}

bool is_fourth_power_in_K(const FieldElem& x) {
    if (x.is_zero()) return true;
    auto w = sqrt_in_K(x);
    if (!w) return false;
    return sqrt_in_K(*w).has_value() || sqrt_in_K(-*w).has_value();
}

std::vector<FieldElem> small_odd_primes(FieldId f, std::size_t count, long max_residue) {
    std::vector<std::pair<Int, FieldElem>> found;  // (residue size, prime)
    int D = field_D(f);
    for (long p = 3; static_cast<long>(found.size()) < static_cast<long>(count) * 3 && p < 4000;
         p += 2) {
        if (!is_probable_prime(Int(p))) continue;
        if (p == -D) {
            if (p <= max_residue) found.push_back({Int(p), unit_normalize(field_s(f))});
            continue;
        }
        int leg = mpz_legendre(Int(D).get_mpz_t(), Int(p).get_mpz_t());
        if (leg == -1) {
            if (p <= max_residue / p) found.push_back({Int(p) * p, elem_from_rat(f, Rat(p))});
        } else if (p <= max_residue) {
            Int r = sqrt_mod_p(Int(D), Int(p));
            FieldElem pi = gcd_OK(elem_from_rat(f, Rat(p)), FieldElem(f, Rat(r), Rat(-1)));
            FieldElem p1 = unit_normalize(pi), p2 = unit_normalize(pi.conj());
            if (FieldElem::cmp(p2, p1) < 0) std::swap(p1, p2);
            found.push_back({Int(p), p1});
            found.push_back({Int(p), p2});
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first < r.first;
        return FieldElem::cmp(l.second, r.second) < 0;
    });
    std::vector<FieldElem> out;
    for (const auto& [n, pi] : found) {
        out.push_back(pi);
        if (out.size() == count) break;
    }
    return out;
}

}  // namespace qct
