#pragma once

#include "wmin/weight.hpp"

#include <optional>
#include <vector>

namespace wmin {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Row rank of A (destroys nothing; copies internally).
int rank(Mat a);

// Any exact solution x of A x = b, free variables set to 0; nullopt if
// inconsistent.
std::optional<Vec> solve(Mat a, Vec b);

// Repeated solving of basis * x = target for a fixed list of weight columns.
class SpanSolver {
public:
    explicit SpanSolver(std::vector<Weight> basis);

    // Coefficients expressing target in the span; nullopt if outside.
    std::optional<Vec> express(const Weight& target) const;
    int rank() const { return rank_; }

private:
    std::vector<Weight> basis_;
    std::vector<BasisLabel> labels_;
    Mat reduced_;         // row-reduced [A | I]
    std::vector<int> pivot_col_of_row_;
    int rank_ = 0;
    int n_ = 0; // number of basis vectors
};

} // namespace wmin
