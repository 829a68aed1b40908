#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in the quadratic cyclotomic fields K = Q(i) and
// K = Q(sqrt(-3)).  Elements are a + b*s with rational a, b, where s
// denotes sqrt(D) for D = -1 or -3.  Both rings of integers (Z[i] and
// Z[omega]) are norm-Euclidean, which everything downstream relies on.

namespace qct {

using Int = mpz_class;
using Rat = mpq_class;

struct qct_error : std::runtime_error {
    explicit qct_error(const std::string& m) : std::runtime_error(m) {}
};

struct parse_error : qct_error {
    std::size_t position;
    parse_error(const std::string& m, std::size_t pos) : qct_error(m), position(pos) {}
};

// Raised when a computed result contradicts the known classification
// theorems.  Either a bug or mathematical news; both must be loud.
struct classification_violation : qct_error {
    explicit classification_violation(const std::string& m) : qct_error(m) {}
};

enum class FieldId : std::uint8_t {
    Gauss,       // K = Q(i),        D = -1, O_K = Z[i]
    Eisenstein,  // K = Q(sqrt(-3)), D = -3, O_K = Z[omega]
};

inline int field_D(FieldId f) { return f == FieldId::Gauss ? -1 : -3; }
inline const char* field_name(FieldId f) { return f == FieldId::Gauss ? "gauss" : "eisenstein"; }
FieldId field_from_name(const std::string& name);

class FieldElem {
public:
    FieldElem() : f_(FieldId::Gauss) {}
    FieldElem(FieldId f, Rat a, Rat b) : f_(f), a_(std::move(a)), b_(std::move(b)) {
        canonicalize();
    }
    FieldElem(FieldId f, long a) : f_(f), a_(a) {}

    FieldId field() const { return f_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // norm = a^2 - D b^2 >= 0, zero iff the element is zero (D < 0).
    Rat norm() const;
    FieldElem conj() const { return FieldElem(f_, a_, -b_); }
    Rat trace() const { return 2 * a_; }

    FieldElem operator-() const { return FieldElem(f_, -a_, -b_); }
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inv() const;

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    bool operator==(const FieldElem& o) const { return f_ == o.f_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Member of O_K: for D=-1 integer coordinates, for D=-3 both integral
    // or both half-odd-integral in the (1, sqrt(-3)) basis.
    bool is_integral() const;

    // Deterministic total order (norm, then a, then b); used for canonical
    // orderings of radicands, prime lists and record output.
    static int cmp(const FieldElem& x, const FieldElem& y);

    std::string str() const;  // grammar: R | R+R*s | R-R*s , R = int | int/int

private:
    void canonicalize() {
        a_.canonicalize();
        b_.canonicalize();
    }
    FieldId f_;
    Rat a_, b_;
};

FieldElem operator*(long n, const FieldElem& x);

inline FieldElem make_elem(FieldId f, long a, long b = 0) { return FieldElem(f, Rat(a), Rat(b)); }
inline FieldElem elem_from_rat(FieldId f, const Rat& a) { return FieldElem(f, a, Rat(0)); }

// sqrt(D) as an element of K.
inline FieldElem field_s(FieldId f) { return make_elem(f, 0, 1); }

// Roots of unity in O_K: 4 for Z[i], 6 for Z[omega].
const std::vector<FieldElem>& units_of(FieldId f);

// Exact parser for the field-element grammar.  Throws parse_error with the
// offending position.
FieldElem parse_elem(FieldId f, const std::string& text);

// ---- O_K arithmetic -------------------------------------------------------

// Euclidean division x = q*y + r with norm(r) < norm(y); x, y integral.
void divmod_OK(const FieldElem& x, const FieldElem& y, FieldElem& q, FieldElem& r);

// Unit-normalized gcd.  (0,0) rejected.
FieldElem gcd_OK(const FieldElem& x, const FieldElem& y);

// Canonical associate: among the unit multiples with lexicographically
// maximal (a, b) subject to a >= 0.  The normalizing unit is reported so
// callers can track square classes exactly.
FieldElem unit_normalize(const FieldElem& x, FieldElem* unit_out = nullptr);

struct PrimeFactor {
    FieldElem prime;  // unit-normalized prime of O_K
    int exponent;
};

struct Factorization {
    FieldElem unit;  // x = unit * prod(prime^exponent)
    std::vector<PrimeFactor> factors;
};

// Factor a nonzero integral x by factoring its norm over Z and splitting
// rational primes according to their behaviour in O_K.  norm_bound guards
// against runaway inputs (0 = no bound).
Factorization factor_OK(const FieldElem& x, const Int& norm_bound = Int(1000000000000L));

// ---- square classes -------------------------------------------------------

// Exact square root in K, if one exists.
std::optional<FieldElem> sqrt_in_K(const FieldElem& x);
inline bool is_square_in_K(const FieldElem& x) { return sqrt_in_K(x).has_value(); }

// Canonical square-free O_K representative of x mod squares; 1 iff x is a
// square in K.  Deterministic: primes with odd exponent, odd unit part,
// normalized by a square unit.
FieldElem squarefree_part(const FieldElem& x, const Int& norm_bound = Int(1000000000000L));

// Same square class test without factoring: x*y a square in K.
inline bool same_square_class(const FieldElem& x, const FieldElem& y) {
    return is_square_in_K(x * y);
}

// Whether sqrt(x) is a square in F = K(sqrt(d) : d in O_K), i.e. whether x
// is a fourth power in F.  For D=-1: iff x is a square in K; for D=-3: iff
// x or -x is a square in K.  On success reports radicands of a witness u
// with u^4 = x (at most 3, all in K).
struct FourthPowerInF {
    bool yes = false;
    std::vector<FieldElem> witness_radicands;
};
FourthPowerInF sqrt_is_square_in_F(const FieldElem& x);

// Over K = Q(sqrt(-3)): sqrt(a*i) is never a square in F, for any nonzero
// a in K.  The element a*i is presented by its K-coefficient a (a multiple
// of the radicand -1).  Exposed as a named rule for growth certificates.
bool sqrt_i_multiple_never_square(FieldId f, const FieldElem& a);

// Fourth power / cube tests in K (via the quartic/cubic root finder).
bool is_fourth_power_in_K(const FieldElem& x);
bool is_cube_in_K(const FieldElem& x);

// Odd primes of O_K ordered by (norm, canonical generator), one from each
// conjugate pair kept separately.  Used for reduction-based bounds.
std::vector<FieldElem> small_odd_primes(FieldId f, std::size_t count, long max_residue = 169);

}  // namespace qct
