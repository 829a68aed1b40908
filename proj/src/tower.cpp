#include "qct/tower.hpp"

#include <algorithm>

namespace qct {

Tower::Tower(FieldId f, const std::vector<FieldElem>& radicands) : f_(f) {
    Tower t = span(f, radicands);
    if (t.depth() != radicands.size()) throw qct_error("tower: dependent radicand set");
    rad_ = std::move(t.rad_);
}

Tower Tower::span(FieldId f, const std::vector<FieldElem>& classes) {
    Tower t(f);
    for (const auto& d0 : classes) {
        if (d0.is_zero()) throw qct_error("tower: zero radicand");
        FieldElem s = squarefree_part(d0);
        if (s.is_one()) continue;
        // dependent iff s times some subset product is a square
        bool dependent = false;
        for (std::size_t mask = 0; mask < t.dim(); ++mask) {
            if (is_square_in_K(s * t.subset_product(mask))) {
                dependent = true;
                break;
            }
        }
        if (dependent) continue;
        t.rad_.push_back(s);
        if (t.rad_.size() > 3) throw qct_error("tower deeper than 3 radicands");
        std::sort(t.rad_.begin(), t.rad_.end(),
                  [](const FieldElem& a, const FieldElem& b) { return FieldElem::cmp(a, b) < 0; });
    }
    return t;
}

FieldElem Tower::subset_product(std::size_t mask) const {
    FieldElem p = make_elem(f_, 1);
    for (std::size_t i = 0; i < rad_.size(); ++i)
        if (mask & (std::size_t{1} << i)) p *= rad_[i];
    return p;
}

std::optional<std::size_t> Tower::class_subset(const FieldElem& x) const {
    if (x.is_zero()) return std::nullopt;
    for (std::size_t mask = 0; mask < dim(); ++mask)
        if (is_square_in_K(x * subset_product(mask))) return mask;
    return std::nullopt;
}

TowerElem TowerElem::from_K(const Tower& t, const FieldElem& x) {
    std::vector<FieldElem> c(t.dim(), make_elem(t.field(), 0));
    c[0] = x;
    return TowerElem(t, std::move(c));
}

TowerElem TowerElem::basis(const Tower& t, std::size_t mask, const FieldElem& coeff) {
    std::vector<FieldElem> c(t.dim(), make_elem(t.field(), 0));
    c.at(mask) = coeff;
    return TowerElem(t, std::move(c));
}

bool TowerElem::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool TowerElem::in_K() const { return supported_on(0); }

bool TowerElem::supported_on(std::size_t mask) const {
    for (std::size_t s = 0; s < c_.size(); ++s)
        if ((s & ~mask) && !c_[s].is_zero()) return false;
    return true;
}

FieldElem TowerElem::as_K() const {
    if (!in_K()) throw qct_error("tower element not in K");
    return c_[0];
}

TowerElem TowerElem::operator-() const {
    std::vector<FieldElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return TowerElem(t_, std::move(c));
}

static void check_same_tower(const TowerElem& a, const TowerElem& b) {
    if (!(a.tower() == b.tower())) throw qct_error("tower mismatch");
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
    check_same_tower(*this, o);
    std::vector<FieldElem> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return TowerElem(t_, std::move(c));
}

TowerElem TowerElem::operator-(const TowerElem& o) const { return *this + (-o); }

TowerElem TowerElem::operator*(const TowerElem& o) const {
    check_same_tower(*this, o);
    std::vector<FieldElem> c(c_.size(), make_elem(t_.field(), 0));
    for (std::size_t s = 0; s < c_.size(); ++s) {
        if (c_[s].is_zero()) continue;
        for (std::size_t u = 0; u < c_.size(); ++u) {
            if (o.c_[u].is_zero()) continue;
            // sqrt(prod_s) * sqrt(prod_u) = prod_(s&u) * sqrt(prod_(s^u))
            c[s ^ u] += c_[s] * o.c_[u] * t_.subset_product(s & u);
        }
    }
    return TowerElem(t_, std::move(c));
}

TowerElem TowerElem::inv() const {
    if (is_zero()) throw qct_error("tower division by zero");
    std::size_t m = t_.depth();
    if (m == 0) return from_K(t_, c_[0].inv());
    // z = x + y sqrt(d_top): 1/z = conj(z) / (z conj(z)), recursing downward
    TowerElem zbar = conj(m - 1);
    TowerElem nrm = *this * zbar;  // lives in the sub-tower
    Tower lower(t_.field(),
                std::vector<FieldElem>(t_.radicands().begin(), t_.radicands().end() - 1));
    std::vector<FieldElem> low(nrm.c_.begin(), nrm.c_.begin() + nrm.c_.size() / 2);
    TowerElem nlow_inv = TowerElem(lower, std::move(low)).inv();
    std::vector<FieldElem> lifted(c_.size(), make_elem(t_.field(), 0));
    for (std::size_t i = 0; i < nlow_inv.c_.size(); ++i) lifted[i] = nlow_inv.c_[i];
    return zbar * TowerElem(t_, std::move(lifted));
}

TowerElem TowerElem::operator/(const TowerElem& o) const { return *this * o.inv(); }

bool TowerElem::operator==(const TowerElem& o) const { return t_ == o.t_ && c_ == o.c_; }

TowerElem TowerElem::conj(std::size_t radicand_index) const {
    std::vector<FieldElem> c(c_);
    for (std::size_t s = 0; s < c.size(); ++s)
        if (s & (std::size_t{1} << radicand_index)) c[s] = -c[s];
    return TowerElem(t_, std::move(c));
}

std::string TowerElem::str() const {
    std::string out;
    for (std::size_t s = 0; s < c_.size(); ++s) {
        if (c_[s].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[s].str() + ")";
        for (std::size_t i = 0; i < t_.depth(); ++i)
            if (s & (std::size_t{1} << i)) out += "*sqrt(" + t_.radicands()[i].str() + ")";
    }
    return out.empty() ? "0" : out;
}

TowerElem embed(const TowerElem& x, const Tower& target) {
    const auto& src = x.tower().radicands();
    const auto& dst = target.radicands();
    std::vector<std::size_t> pos(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = std::find(dst.begin(), dst.end(), src[i]);
        if (it == dst.end()) throw qct_error("embed: radicand missing from target tower");
        pos[i] = static_cast<std::size_t>(it - dst.begin());
    }
    std::vector<FieldElem> c(target.dim(), make_elem(target.field(), 0));
    for (std::size_t s = 0; s < x.coords().size(); ++s) {
        if (x.coords()[s].is_zero()) continue;
        std::size_t t = 0;
        for (std::size_t i = 0; i < src.size(); ++i)
            if (s & (std::size_t{1} << i)) t |= std::size_t{1} << pos[i];
        c[t] = x.coords()[s];
    }
    return TowerElem(target, std::move(c));
}

namespace {

void split_top(const TowerElem& z, TowerElem& x, TowerElem& y, Tower& lower) {
    const Tower& t = z.tower();
    std::size_t half = t.dim() / 2;
    lower = Tower(t.field(),
                  std::vector<FieldElem>(t.radicands().begin(), t.radicands().end() - 1));
    std::vector<FieldElem> xc(z.coords().begin(), z.coords().begin() + half);
    std::vector<FieldElem> yc(z.coords().begin() + half, z.coords().end());
    x = TowerElem(lower, std::move(xc));
    y = TowerElem(lower, std::move(yc));
}

TowerElem lift_pair(const Tower& t, const TowerElem& x, const TowerElem& y) {
    std::vector<FieldElem> c(t.dim(), make_elem(t.field(), 0));
    std::size_t half = t.dim() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        c[i] = x.coords()[i];
        c[i + half] = y.coords()[i];
    }
    return TowerElem(t, std::move(c));
}

}  // namespace

std::optional<TowerElem> sqrt_of_K_elem(const Tower& t, const FieldElem& x) {
    if (x.is_zero()) return TowerElem::from_K(t, x);
    auto mask = t.class_subset(x);
    if (!mask) return std::nullopt;
    auto c = sqrt_in_K(x / t.subset_product(*mask));
    if (!c) throw qct_error("sqrt_of_K_elem: internal class mismatch");
    return TowerElem::basis(t, *mask, *c);
}

std::optional<TowerElem> sqrt_in_tower(const TowerElem& z) {
    const Tower& t = z.tower();
    FieldId f = t.field();
    if (z.is_zero()) return TowerElem::from_K(t, make_elem(f, 0));
    if (t.depth() == 0) {
        auto w = sqrt_in_K(z.as_K());
        if (!w) return std::nullopt;
        return TowerElem::from_K(t, *w);
    }
    TowerElem x, y;
    Tower lower(f);
    split_top(z, x, y, lower);
    const FieldElem d = t.radicands().back();
    TowerElem dlow = TowerElem::from_K(lower, d);
    if (y.is_zero()) {
        if (auto w = sqrt_in_tower(x))
            return lift_pair(t, *w, TowerElem::from_K(lower, make_elem(f, 0)));
        if (auto w = sqrt_in_tower(x / dlow))
            return lift_pair(t, TowerElem::from_K(lower, make_elem(f, 0)), *w);
        return std::nullopt;
    }
    // w = p + q sqrt(d): p^2 = (x +- s)/2 with s^2 = x^2 - d y^2
    TowerElem n = x * x - dlow * y * y;
    auto s = sqrt_in_tower(n);
    if (!s) return std::nullopt;
    TowerElem two = TowerElem::from_K(lower, make_elem(f, 2));
    for (int sign = 0; sign < 2; ++sign) {
        TowerElem h = (sign == 0) ? (x + *s) / two : (x - *s) / two;
        if (h.is_zero()) continue;
        if (auto p = sqrt_in_tower(h)) {
            if (p->is_zero()) continue;
            TowerElem q = y / (two * *p);
            TowerElem w = lift_pair(t, *p, q);
            if (w * w == z) return w;
        }
    }
    return std::nullopt;
}

}  // namespace qct
