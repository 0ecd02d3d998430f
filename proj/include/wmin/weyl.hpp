#pragma once

#include "wmin/rootsys.hpp"

#include <vector>

namespace wmin {

// Subgroups of the affine Weyl group used by the character formulas.
//   W          affine Weyl group (all even affine components)
//   Wdot       finite Weyl group of the even part
//   WdotSharp  finite Weyl group of the positive-length even roots
//   WdotPrime / WdotSecond  the two declared factors of Wdot
//   T          translation subgroup t_mu, mu in Q'
//   Wsharp     WdotSharp x T,  Wprime  WdotPrime x T
enum class Subgroup { W, Wdot, Wsharp, WdotSharp, WdotPrime, WdotSecond, T, Wprime };

struct WeylStep {
    Weight v;                 // reflection vector or translation vector
    bool translation = false;
};

// Group element as a word plus its cached action on an ambient spanning set;
// equality of elements is equality of cached actions, never of words.
struct WeylElement {
    std::vector<WeylStep> word;
    int sign = 1; // (-1)^{number of reflections}
    std::vector<Weight> images;
};

std::vector<Weight> spanning_set(const AlgebraSpec& s);
WeylElement identity_element(const AlgebraSpec& s);
WeylElement reflection_element(const AlgebraSpec& s, const Weight& alpha);
WeylElement translation_element(const AlgebraSpec& s, const Weight& mu);
WeylElement compose(const AlgebraSpec& s, const WeylElement& a, const WeylElement& b);
bool same_action(const WeylElement& a, const WeylElement& b);
bool is_identity(const AlgebraSpec& s, const WeylElement& w);

// Linear action and the two shifted actions.
Weight reflect(const AlgebraSpec& s, const Weight& alpha, const Weight& lam);
Weight apply_element(const AlgebraSpec& s, const WeylElement& w, const Weight& lam);
Weight shifted_action(const AlgebraSpec& s, const WeylElement& w, const Weight& lam);
Weight shifted_reflect(const AlgebraSpec& s, const Weight& alpha, const Weight& lam);
Weight circ_action(const AlgebraSpec& s, const AffineComponent& comp, const WeylElement& w,
                   const Weight& lam);
Weight circ_reflect(const AlgebraSpec& s, const AffineComponent& comp, const Weight& alpha,
                    const Weight& lam);

// Translations t_mu for mu in the lattice Q' spanned by the coroots of the
// positive-length simple roots.
Weight translation(const AlgebraSpec& s, const Weight& mu, const Weight& lam);
std::vector<Weight> qprime_basis(const AlgebraSpec& s);
bool in_qprime(const AlgebraSpec& s, const Weight& mu);

// Lattice of the positive-length root system (finite part + integer delta).
bool in_qsharp(const AlgebraSpec& s, const Weight& nu);

// Projections along the direct sum (finite root lattice) = ZS + (plus part).
Weight ps_project(const AlgebraSpec& s, const Weight& nu);
Weight pplus_project(const AlgebraSpec& s, const Weight& nu);

// |w mu| for mu = sum m_beta beta over the isotropic set S.
Weight wmu_expand(const AlgebraSpec& s, const WeylElement& w, const std::vector<long long>& m);

// bound: word length cap for W, coordinate cap for T / Wsharp / Wprime,
// ignored for the finite groups (always exhaustive).
std::vector<WeylElement> enumerate_group(const AlgebraSpec& s, Subgroup sel, long long bound);

// Elements of a finite subgroup fixing lam (exact weight equality).
std::vector<WeylElement> stabilizer(const AlgebraSpec& s, Subgroup sel, const Weight& lam);

// Trivial-stabilizer test in Wsharp via the divisibility criterion.
bool is_regular(const AlgebraSpec& s, const Rational& k, const Weight& lam);

} // namespace wmin
