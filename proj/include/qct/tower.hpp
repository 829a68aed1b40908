#pragma once

#include "qct/qfield.hpp"

#include <optional>
#include <vector>

// Flat multiquadratic towers K(sqrt(d1),...,sqrt(dm)) with m <= 3.  The
// radicands are square-free, pairwise independent in K*/K*^2 and canonically
// ordered, so equal towers compare equal.  Elements carry one K-coefficient
// per subset of radicands.  Nesting depth beyond 3 is rejected: the halving
// chains never need more.

namespace qct {

class Tower {
public:
    explicit Tower(FieldId f) : f_(f) {}
    // radicands are replaced by their square-free parts; squares are dropped
    // and dependent radicands rejected.
    Tower(FieldId f, const std::vector<FieldElem>& radicands);

    // Independent basis spanning the given classes (dependent entries merged).
    static Tower span(FieldId f, const std::vector<FieldElem>& classes);

    FieldId field() const { return f_; }
    std::size_t depth() const { return rad_.size(); }
    std::size_t dim() const { return std::size_t{1} << rad_.size(); }
    const std::vector<FieldElem>& radicands() const { return rad_; }

    // product of radicands in a subset (bitmask)
    FieldElem subset_product(std::size_t mask) const;

    bool operator==(const Tower& o) const { return f_ == o.f_ && rad_ == o.rad_; }

    // Is the square class of x generated by the radicands? (i.e. sqrt(x) lies
    // in this tower.)  Returns the subset mask if so.
    std::optional<std::size_t> class_subset(const FieldElem& x) const;

private:
    FieldId f_;
    std::vector<FieldElem> rad_;
};

class TowerElem {
public:
    TowerElem() = default;
    TowerElem(Tower t, std::vector<FieldElem> coords) : t_(std::move(t)), c_(std::move(coords)) {
        if (c_.size() != t_.dim()) throw qct_error("tower element: wrong coordinate count");
    }
    static TowerElem from_K(const Tower& t, const FieldElem& x);
    // coordinate on the subset `mask`, i.e. the coefficient of prod sqrt(d_i)
    static TowerElem basis(const Tower& t, std::size_t mask, const FieldElem& coeff);

    const Tower& tower() const { return t_; }
    const std::vector<FieldElem>& coords() const { return c_; }
    const FieldElem& coord(std::size_t mask) const { return c_[mask]; }

    bool is_zero() const;
    bool in_K() const;
    FieldElem as_K() const;  // throws unless in_K()
    // supported only on subsets of `mask` (element of the sub-tower)
    bool supported_on(std::size_t mask) const;

    TowerElem operator-() const;
    TowerElem operator+(const TowerElem& o) const;
    TowerElem operator-(const TowerElem& o) const;
    TowerElem operator*(const TowerElem& o) const;
    TowerElem operator/(const TowerElem& o) const;
    TowerElem inv() const;
    bool operator==(const TowerElem& o) const;
    bool operator!=(const TowerElem& o) const { return !(*this == o); }

    TowerElem conj(std::size_t radicand_index) const;  // sqrt(d_i) -> -sqrt(d_i)

    std::string str() const;

private:
    Tower t_{FieldId::Gauss};
    std::vector<FieldElem> c_;
};

// exact square root within the tower, if one exists
std::optional<TowerElem> sqrt_in_tower(const TowerElem& z);
inline bool is_square_in_tower(const TowerElem& z) { return sqrt_in_tower(z).has_value(); }

// sqrt of a K-element x whose square class is spanned by the radicands
std::optional<TowerElem> sqrt_of_K_elem(const Tower& t, const FieldElem& x);

// embed an element of a sub-tower into a larger tower (radicand sets must be
// compatible: every radicand of the source appears in the target)
TowerElem embed(const TowerElem& x, const Tower& target);

}  // namespace qct
