#pragma once

#include "wmin/linalg.hpp"
#include "wmin/weight.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wmin {

// Embedded copy of data/catalog.txt (generated at configure time).
const char* catalog_text();

struct Root {
    Weight w;
    bool odd = false;
};

struct AffineComponent {
    std::vector<Weight> roots;       // all roots of this even component
    std::vector<Weight> simples;     // simple system w.r.t. the ambient positivity
    Weight highest;                  // highest root of the component
    Weight rho_l;                    // affine Weyl vector of the component's affinization
    bool contains_theta = false;
};

struct RootDatumReport {
    Rational hvee;
    int defect = 0;
    bool type_ii = false;
    bool unitary_type = false;
    std::vector<Weight> delta_sharp_pos; // positive part of the positive-length even roots
    int lacety = 1;
    long long sdim = 0;
    int dim_h = 0;
    long long dim_g1bar = 0;
};

class AlgebraSpec {
public:
    std::string id;     // canonical id string
    std::string family; // "lie", "sl", "psl", "spo", "osp", "d21a", "g3", "f4"
    bool alt = false;   // alternative normalization (g3:alt / f4:alt)
    int m = 0, n = 0;   // family parameters
    char lie_type = 0;  // 'A'..'G' when family == "lie"
    int lie_rank = 0;
    Rational a; // d21a parameter

    BilinearForm form;
    std::vector<Root> roots;   // finite root system, both parities
    std::vector<Weight> base;  // ordered simple system Sigma-dot
    Weight theta;              // minimal-grading root (norm 2)
    Weight Theta;              // affine attachment: delta - Theta is the extra simple root
    std::vector<Weight> S;     // mutually orthogonal isotropic subset of the base
    Weight rho_dot;            // finite Weyl vector for this base
    Weight rho;                // h^vee Lambda0 + rho_dot
    Rational hvee;
    int defect = 0;
    bool type_ii = false;
    bool unitary_type = false;
    int lacety = 1;
    long long sdim = 0;
    int dim_h = 0;
    bool flagged = false; // built, but base-dependent operations refuse it
    std::string flag_reason;

    // Derived caches.
    std::vector<Weight> even_pos, odd_pos; // positive roots per parity
    std::vector<Weight> even_simples;      // simple system of the even subalgebra
    std::vector<Weight> sharp_simples;     // simple system of positive-length even roots
    long long htt_Theta = 0;               // height of Theta over the base
    std::vector<AffineComponent> components;
    std::vector<Weight> wprime_gens;       // reflection generators of the larger even factor
    std::vector<Weight> wsecond_gens;      // generators of the complementary factor
    Integer wprime_order = 1, wsecond_order = 1;

    bool is_lie() const { return family == "lie"; }
    bool is_root(const Weight& w) const;
    bool is_odd_root(const Weight& w) const;
    bool is_positive_root(const Weight& w) const;
    Rational pair(const Weight& x, const Weight& y) const { return form.pair(x, y); }
    Rational norm2(const Weight& x) const { return form.norm2(x); }

    // Finite height over the base (defined on the rational span of the base).
    Rational height_of(const Weight& w) const;
    long long htt(const Weight& w) const; // integer height; throws if non-integral
    // Expansion over the base; nullopt if outside the span.
    std::optional<Vec> base_coords(const Weight& w) const;

    // Affine positive system helpers: a weight j*delta + w_dot with j >= 1 is a
    // positive root iff w_dot in finite roots or zero (imaginary); j == 0 falls
    // back to the finite system.
    long long affine_htt(const Weight& w) const; // uses htt(delta) = 1 + htt(Theta)

    std::shared_ptr<SpanSolver> base_solver; // shared so copies stay cheap

    // Sorted copies for O(log n) membership tests; filled by build_algebra.
    std::vector<Weight> sorted_all, sorted_odd, sorted_pos;
};

// --- catalog ---------------------------------------------------------------

// Parses ids per the grammar: sl:m|n, psl:n|n, spo:m|n, osp:m|n, d21a:p/q,
// g3, f4, g3:alt, f4:alt, lie:<A..G><rank>.
AlgebraSpec build_algebra(const std::string& id);

// The list of ids exercised by catalog-wide property tests.
std::vector<std::string> catalog_sample_ids();

// --- operations ------------------------------------------------------------

Weight weyl_vector(const AlgebraSpec& spec); // returns spec.rho (recomputed)
Rational dual_coxeter(const AlgebraSpec& spec);

// Partition of the finite roots by (alpha, theta)/2 in {0, +-1/2, +-1}.
struct MinimalGrading {
    std::vector<Root> minus_one, minus_half, zero, plus_half, plus_one;
};
MinimalGrading minimal_grading(const AlgebraSpec& spec);

// Standard odd reflection of a base at an isotropic member.
std::vector<Weight> odd_reflection(const AlgebraSpec& spec, const std::vector<Weight>& base,
                                   const Weight& beta);

std::vector<AffineComponent> affine_components(const AlgebraSpec& spec);

RootDatumReport report(const AlgebraSpec& spec);

} // namespace wmin
