#pragma once

#include "wmin/rootsys.hpp"

#include <cstddef>
#include <vector>

namespace wmin {

// A finite set of distinct positive odd roots with nonzero imaginary part,
// together with the statistics consumed by the level-inequality engine.
// For each member root j*delta + gamma the finite part gamma pairs to -1 or
// +1 with theta; a_plus[i]/a_minus[i] count the members built on the i-th
// lowering root with sign +/-, indexed against lowering_odd_roots().
struct OddSubset {
    std::vector<Weight> roots; // sorted, distinct
    Weight mu;                 // sum of the roots
    long long height = 0;      // affine height of mu
    long long m_delta = 0;     // delta coefficient of mu (= pairing with Lambda0)
    std::vector<long long> a_plus, a_minus, a; // a = a_plus - a_minus
    long long D = 0;           // sum of a_i; equals -(mu, theta) for theta of norm 2
    long long D_abs = 0;       // sum of |a_i|
    long long D_sq = 0;        // sum of a_i^2
};

// The finite odd roots pairing to -1 with theta (half of the odd system).
// Requires a unitary-type presentation: the positive-norm even roots must be
// exactly {+-theta}, which forces every odd root to pair to +-1 with theta.
std::vector<Weight> lowering_odd_roots(const AlgebraSpec& s);

// All roots j*delta + gamma with j >= 1, gamma a finite odd root, of affine
// height <= height_cap; sorted by (height, weight order).
std::vector<Weight> shifted_odd_roots(const AlgebraSpec& s, long long height_cap);

// Integral dominance of -mu for the even subalgebra: 2(-mu, alpha)/(alpha,
// alpha) must be a nonnegative integer for every even simple root.  A central
// direction of the even part imposes no condition.
bool minus_mu_even_dominant(const AlgebraSpec& s, const Weight& mu);

// All admissible subsets (mu != 0 and -mu even-dominant) of height <= cap,
// ordered by height and lexicographically within a height.  The order
// guarantees that whenever mu_j - mu_i is a nonnegative integer combination
// of positive even roots, j comes no earlier than i.
std::vector<OddSubset> enumerate_aplus(const AlgebraSpec& s, long long height_cap);

// u = 2(k + hvee) m_delta - (1 - hvee)(mu, theta) - |mu|^2, the quantity whose
// positivity drives the norm-drop estimate at level k.
Rational u_value(const AlgebraSpec& s, const Rational& k, const OddSubset& A);

enum class IneqStatus {
    OkStrict,      // 0 < u and the second bound holds strictly
    BoundaryEqual, // 0 < u and the second bound holds with equality
    Violated,      // u <= 0 or the second bound fails
};

struct IneqRecord {
    OddSubset A;
    Rational u;
    Rational second_bound; // 2(2 - hvee)(-mu, theta), must be <= u
    IneqStatus status = IneqStatus::OkStrict;
    bool sum_bound_holds = false;  // 2 m_delta >= D_sq + D_abs
    bool norm_bound_holds = false; // l * D_sq >= 2 |mu|^2, l = #lowering roots
};

struct IneqReport {
    bool all_pass = true;                // no Violated record
    long long total_sets = 0;            // admissible subsets examined, incl. pure-imaginary ones
    std::vector<IneqRecord> records;     // subsets with a nonzero finite part, in stream order
    std::vector<std::size_t> violations; // indices into records
    std::vector<std::size_t> boundary;   // indices with second-bound equality
};

// Evaluates both inequalities for every admissible subset with a nonzero
// finite part up to the height cap; pure-imaginary sums are counted but not
// scored, since the target estimate is automatic for them.
IneqReport check_inequalities(const AlgebraSpec& s, const Rational& k, long long height_cap);

} // namespace wmin
