#pragma once

#include "wmin/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wmin {

enum class BasisTag : int { Eps = 0, Del = 1, Lambda0 = 2, DeltaIm = 3 };

struct BasisLabel {
    BasisTag tag = BasisTag::Eps;
    int index = 0; // >= 1 for Eps/Del, 0 for Lambda0/DeltaIm

    friend bool operator==(const BasisLabel& a, const BasisLabel& b) {
        return a.tag == b.tag && a.index == b.index;
    }
    friend bool operator<(const BasisLabel& a, const BasisLabel& b) {
        if (a.tag != b.tag) return static_cast<int>(a.tag) < static_cast<int>(b.tag);
        return a.index < b.index;
    }
    std::string str() const;
};

inline BasisLabel eps_label(int i) { return {BasisTag::Eps, i}; }
inline BasisLabel del_label(int i) { return {BasisTag::Del, i}; }
inline BasisLabel lambda0_label() { return {BasisTag::Lambda0, 0}; }
inline BasisLabel delta_label() { return {BasisTag::DeltaIm, 0}; }

// Sparse exact-rational vector over labeled basis directions. Canonical form:
// no stored zero coefficients.
class Weight {
public:
    Weight() = default;
    Weight(BasisLabel l, Rational c) { set(l, std::move(c)); }

    Rational coeff(const BasisLabel& l) const {
        auto it = c_.find(l);
        return it == c_.end() ? Rational(0) : it->second;
    }
    void set(const BasisLabel& l, Rational c) {
        if (c == 0)
            c_.erase(l);
        else
            c_[l] = std::move(c);
    }
    bool is_zero() const { return c_.empty(); }
    const std::map<BasisLabel, Rational>& terms() const { return c_; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(const Rational& s);

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
    friend Weight operator-(const Weight& a) {
        Weight r;
        for (const auto& [l, c] : a.c_) r.c_.emplace(l, -c);
        return r;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    // Deterministic total order (map-lexicographic); used for container keys.
    friend bool operator<(const Weight& a, const Weight& b);

    std::string str() const;

private:
    std::map<BasisLabel, Rational> c_;
};

inline Weight eps(int i) { return Weight(eps_label(i), 1); }
inline Weight del(int i) { return Weight(del_label(i), 1); }
inline Weight lambda0() { return Weight(lambda0_label(), 1); }
inline Weight delta() { return Weight(delta_label(), 1); }

// mu = j*delta + mu_dot + lambda0_coef*Lambda0 with mu_dot over Eps/Del labels.
struct Decomp {
    Rational j;
    Weight mu_dot;
    Rational lambda0_coef;
};
Decomp decompose(const Weight& mu);

// Symmetric form: diagonal on finite labels, (Lambda0, delta) = 1, all other
// pairings involving Lambda0/delta vanish.
class BilinearForm {
public:
    void set_diag(const BasisLabel& l, Rational v);
    Rational diag(const BasisLabel& l) const;
    bool has_label(const BasisLabel& l) const { return diag_.count(l) > 0; }
    const std::map<BasisLabel, Rational>& diagonal() const { return diag_; }

    Rational pair(const Weight& x, const Weight& y) const;
    Rational norm2(const Weight& x) const { return pair(x, x); }

private:
    std::map<BasisLabel, Rational> diag_;
};

} // namespace wmin
