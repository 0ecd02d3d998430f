#pragma once

#include "wmin/weyl.hpp"

#include <map>
#include <optional>

namespace wmin {

// Truncation box for character series. `ddeg` caps the delta-degree of stored
// exponent offsets; `height` is the finite height allowed on top of the full
// delta box, so the total affine height is capped by
//   height + ddeg * (1 + htt Theta).
// The box is closed under splitting a nonnegative exponent into nonnegative
// parts, which is what makes truncated products exact within the box.
struct Bounds {
    long long ddeg = 0;
    long long height = 0;
};

// Formal sum  f = sum_nu c_nu e^{anchor - nu}  with integer coefficients.
// Offsets nu live in the rational span of the roots plus Z*delta; the anchor
// is arbitrary and carries any Lambda0 part. The referenced algebra must
// outlive the series.
class CharSeries {
public:
    CharSeries(const AlgebraSpec& s, Weight anchor, Bounds b);
    static CharSeries unit(const AlgebraSpec& s, Weight anchor, Bounds b); // e^{anchor}

    const AlgebraSpec& spec() const { return *spec_; }
    const Weight& anchor() const { return anchor_; }
    const Bounds& bounds() const { return bounds_; }
    const std::map<Weight, Integer>& terms() const { return coef_; }

    Integer coef(const Weight& nu) const;
    bool is_zero() const { return coef_.empty(); }

    // Whether an offset is stored at these bounds. Offsets never carry a
    // Lambda0 part; seeing one is reported as a structural fault.
    bool in_region(const Weight& nu) const;

    // Accumulate c * e^{anchor - nu}, pruning out-of-region offsets and
    // dropping cancelled terms.
    void add_term(const Weight& nu, const Integer& c);

private:
    const AlgebraSpec* spec_;
    Weight anchor_;
    Bounds bounds_;
    std::map<Weight, Integer> coef_;
};

// Affine grade used for truncation and for ordering witnesses:
// (delta-degree) * (1 + htt Theta) + finite height of the rest.
Rational series_grade(const AlgebraSpec& s, const Weight& nu);

CharSeries series_add(const CharSeries& f, const CharSeries& g); // equal anchors
CharSeries series_sub(const CharSeries& f, const CharSeries& g); // equal anchors
CharSeries series_scale(const CharSeries& f, const Integer& c);
CharSeries series_shift(const CharSeries& f, const Weight& lam); // multiply by e^{lam}
CharSeries series_mul(const CharSeries& f, const CharSeries& g); // anchors add

// Inverse of a series whose constant term is +-1 and whose remaining support
// has strictly positive grade; anything else raises ArithmeticError.
CharSeries series_invert_unit(const CharSeries& f);

// Finite denominator: product over positive roots of (1 - e^{-alpha}) for even
// alpha divided by (1 + e^{-beta}) for odd beta. Anchor 0.
CharSeries rdot(const AlgebraSpec& s, Bounds b);

// Affine denominator: the same product extended over roots alpha + n*delta up
// to delta-degree bounds.ddeg, with imaginary roots n*delta of even parity and
// multiplicity dim_h. Anchor 0.
CharSeries affine_r(const AlgebraSpec& s, Bounds b);

// sum over w in the selected finite reflection group of
//   sgn(w) * w( e^{lam} / prod_{beta in S} (1 + e^{-beta}) ),
// expanded termwise as sum_mu (-1)^{htt mu} e^{w lam - |w mu|}. Anchor lam.
// The selector must name a finite group (no translations).
CharSeries weyl_mu_sum(const AlgebraSpec& s, Subgroup sel, const Weight& lam, Bounds b);

struct DenomReport {
    bool ok = true;
    std::optional<Weight> witness; // lowest-grade mismatching offset
    Integer lhs = 0, rhs = 0;      // coefficients at the witness
};

// Coefficientwise comparison within the common box; anchors must agree.
DenomReport compare_series(const CharSeries& f, const CharSeries& g);

// rdot * e^{rho_dot} against the alternating sum over the larger even Weyl
// factor, compared within the box.
DenomReport denominator_check(const AlgebraSpec& s, Bounds b);

} // namespace wmin
