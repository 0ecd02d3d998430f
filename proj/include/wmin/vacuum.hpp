#pragma once

#include "wmin/charser.hpp"

#include <optional>
#include <utility>

namespace wmin {

// phi_mu(k) = 2 (k Lambda0 + rho, mu) - (mu, mu)
//           = |k Lambda0 + rho|^2 - |k Lambda0 + rho - mu|^2.
Rational phi(const AlgebraSpec& s, const Rational& k, const Weight& mu);

// All mu in the nonnegative affine root cone inside the truncation box with
// phi_mu(k) == 0, sorted by (grade, weight). Refuses the critical level
// k == -h^vee, where the delta-degree term of phi drops out and every
// delta-coset meets the zero locus infinitely often.
std::vector<Weight> enumerate_Uk(const AlgebraSpec& s, const Rational& k, Bounds b);

// Series with anchor 0 supported on the phi == 0 locus. The coefficient at
// e^{-mu} is an alternating count over factorizations of the delta-degree of
// mu: for each divisor pair r*s = ddeg(mu) the finite denominator coefficient
// is read off at mu_dot - r*gamma_dot, where gamma_dot runs over the finite
// roots (sign (-1)^{r+1} at odd roots) and once over 0 with weight dim_h.
CharSeries jantzen_sum(const AlgebraSpec& s, const Rational& k, Bounds b);

// Closed form of the same series when the root system has no odd part: an
// alternating double sum of e^{lam - w s_alpha lam} over the finite Weyl
// group and the real roots sd*delta + gamma outside the finite system.
// Requires a nonnegative integer level.
CharSeries jantzen_sum_liealg(const AlgebraSpec& s, const Rational& k, Bounds b);

// e^{-k Lambda0} ch of the full vacuum module, anchor 0: the inverse affine
// denominator times the finite denominator. Independent of the level.
CharSeries vacuum_module_character(const AlgebraSpec& s, Bounds b);

// e^{-k Lambda0} ch of the simple vacuum quotient, anchor 0: the translated
// alternating numerator divided by the affine denominator. Requires a
// nonnegative integer level away from -h^vee, a nonnegative dual Coxeter
// number, the isotropic set inside the base, and refuses the one-parameter
// rank-two family, for which no such formula is available.
CharSeries kw_vacuum_character(const AlgebraSpec& s, const Rational& k, Bounds b);

// The nonzero-translation part of the same numerator scaled by
// e^{-k Lambda0 - rho}: anchor 0, one term per translation t_nu (nu != 0 in
// the coroot lattice of the positive-length simples), element y of the primed
// finite factor, and expansion exponent over the isotropic set. Same
// preconditions as kw_vacuum_character.
CharSeries q_l_series(const AlgebraSpec& s, const Rational& k, Bounds b);

enum class LengthVerdict { ConsistentWithLengthTwo, LengthGreaterThanTwo };

struct JantzenReport {
    Rational k;
    Bounds bounds;
    CharSeries q_j;
    CharSeries q_l;
    LengthVerdict verdict = LengthVerdict::ConsistentWithLengthTwo;
    std::optional<Weight> witness; // lowest-grade offset with q_j + q_l != 0
    Integer witness_coef = 0;
};

// Compares jantzen_sum against -q_l_series inside the box. A nonzero sum
// certifies that the vacuum module has length greater than two at this level;
// a zero sum is consistency only, not a proof of length two.
JantzenReport length_two_test(const AlgebraSpec& s, const Rational& k, Bounds b);

enum class YSource { FromJantzen, FromKW };

struct YSet {
    Weight mu0;
    YSource source = YSource::FromJantzen;
    std::vector<Weight> points;
};

// Projected supports used to separate the two series on lattice cones. For
// each support weight sigma the finite part is taken and the candidate point
// eta = -mu0 - sigma_dot is kept when it lies in the integral complement of
// ZS inside the finite root lattice. When the primed finite factor differs
// from the positive-length factor (the sp/so-balanced spo family), the split
// is by label side instead: mu0 enters through its negative-side projection
// zeta, support weights with negative side -zeta contribute the negated
// positive-side part, filtered to the positive-side lattice. Returns the set
// from jantzen_sum first, the one from q_l_series second. mu0 must lie in ZS.
std::pair<YSet, YSet> y_sets(const AlgebraSpec& s, const Rational& k, const Weight& mu0,
                             Bounds b);

} // namespace wmin
