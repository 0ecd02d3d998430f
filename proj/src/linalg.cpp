#include "wmin/linalg.hpp"

#include <set>

namespace wmin {

namespace {

// Gauss-Jordan over the first ncols columns; returns pivot columns.
std::vector<int> reduce(Mat& m, int ncols) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int row = 0;
    for (int col = 0; col < ncols && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r) {
            if (m[r][col] != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        Rational inv = m[row][col];
        for (auto& v : m[row]) v /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(Mat a) {
    if (a.empty()) return 0;
    return static_cast<int>(reduce(a, static_cast<int>(a[0].size())).size());
}

std::optional<Vec> solve(Mat a, Vec b) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return Vec{};
    int n = static_cast<int>(a[0].size());
    for (int r = 0; r < rows; ++r) a[r].push_back(b[r]);
    auto pivots = reduce(a, n);
    int rk = static_cast<int>(pivots.size());
    for (int r = rk; r < rows; ++r)
        if (a[r][n] != 0) return std::nullopt;
    Vec x(n, Rational(0));
    for (int r = 0; r < rk; ++r) x[pivots[r]] = a[r][n];
    return x;
}

SpanSolver::SpanSolver(std::vector<Weight> basis) : basis_(std::move(basis)) {
    std::set<BasisLabel> labels;
    for (const auto& w : basis_)
        for (const auto& [l, c] : w.terms()) labels.insert(l);
    labels_.assign(labels.begin(), labels.end());
    n_ = static_cast<int>(basis_.size());
    int m = static_cast<int>(labels_.size());
    reduced_.assign(m, Vec(n_ + m, Rational(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n_; ++j) reduced_[i][j] = basis_[j].coeff(labels_[i]);
        reduced_[i][n_ + i] = 1;
    }
    pivot_col_of_row_ = reduce(reduced_, n_);
    rank_ = static_cast<int>(pivot_col_of_row_.size());
}

std::optional<Vec> SpanSolver::express(const Weight& target) const {
    // Labels outside the span's support force failure.
    for (const auto& [l, c] : target.terms()) {
        if (c == 0) continue;
        bool known = false;
        for (const auto& kl : labels_)
            if (kl == l) {
                known = true;
                break;
            }
        if (!known) return std::nullopt;
    }
    int m = static_cast<int>(labels_.size());
    Vec t(m);
    for (int i = 0; i < m; ++i) t[i] = target.coeff(labels_[i]);
    // t' = E t where E is the recorded row-op matrix.
    Vec tp(m, Rational(0));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < m; ++i)
            if (reduced_[r][n_ + i] != 0 && t[i] != 0) tp[r] += reduced_[r][n_ + i] * t[i];
    for (int r = rank_; r < m; ++r)
        if (tp[r] != 0) return std::nullopt;
    Vec x(n_, Rational(0));
    for (int r = 0; r < rank_; ++r) x[pivot_col_of_row_[r]] = tp[r];
    return x;
}

} // namespace wmin
