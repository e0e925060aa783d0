#include "perdet/matching.hpp"

#include "perdet/errors.hpp"

#include <algorithm>

namespace perdet {

namespace {

// Maximum bipartite matching on the support of a, rows to columns, Kuhn's
// augmenting paths in ascending row/column order. match_col[j-1] = row
// matched to column j, or 0.
struct SupportMatching {
    explicit SupportMatching(const SquareMatrix& a) : a_(a), n_(a.n()) {
        match_col_.assign(static_cast<std::size_t>(n_), 0);
        match_row_.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 1; i <= n_; ++i) {
            visited_.assign(static_cast<std::size_t>(n_), false);
            if (augment(i)) ++size_;
        }
    }

    bool augment(int row) {
        for (int j = 1; j <= n_; ++j) {
            if (visited_[static_cast<std::size_t>(j - 1)] || a_.at(row, j) == 0) continue;
            visited_[static_cast<std::size_t>(j - 1)] = true;
            int& owner = match_col_[static_cast<std::size_t>(j - 1)];
            if (owner == 0 || augment(owner)) {
                match_row_[static_cast<std::size_t>(row - 1)] = j;
                owner = row;
                return true;
            }
        }
        return false;
    }

    const SquareMatrix& a_;
    int n_;
    int size_ = 0;
    std::vector<int> match_col_;
    std::vector<int> match_row_;
    std::vector<bool> visited_;
};

} // namespace

bool zero_block_valid(const ZeroBlockWitness& w, const SquareMatrix& a) {
    if (w.rows.empty() || w.cols.empty()) return false;
    if (static_cast<int>(w.rows.size() + w.cols.size()) != a.n() + 1) return false;
    for (int i : w.rows)
        for (int j : w.cols)
            if (a.at(i, j) != 0) return false;
    return true;
}

std::optional<Permutation> find_nonzero_diagonal(const SquareMatrix& a) {
    SupportMatching m(a);
    if (m.size_ < a.n()) return std::nullopt;
    return Permutation(m.match_row_);
}

bool is_permanent_zero(const SquareMatrix& a) {
    if (!a.is_nonnegative())
        throw DomainError("permanent-zero test requires a nonnegative matrix");
    return !find_nonzero_diagonal(a).has_value();
}

std::optional<ZeroBlockWitness> zero_block_witness(const SquareMatrix& a) {
    const int n = a.n();
    SupportMatching m(a);
    if (m.size_ == n) return std::nullopt;

    // Koenig: alternating reachability from unmatched rows, rows via
    // non-matching support entries, columns back via matching edges.
    std::vector<bool> row_seen(static_cast<std::size_t>(n), false);
    std::vector<bool> col_seen(static_cast<std::size_t>(n), false);
    std::vector<int> queue;
    for (int i = 1; i <= n; ++i)
        if (m.match_row_[static_cast<std::size_t>(i - 1)] == 0) {
            row_seen[static_cast<std::size_t>(i - 1)] = true;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        const int i = queue.back();
        queue.pop_back();
        for (int j = 1; j <= n; ++j) {
            if (a.at(i, j) == 0 || col_seen[static_cast<std::size_t>(j - 1)]) continue;
            if (m.match_row_[static_cast<std::size_t>(i - 1)] == j) continue;
            col_seen[static_cast<std::size_t>(j - 1)] = true;
            const int owner = m.match_col_[static_cast<std::size_t>(j - 1)];
            if (owner != 0 && !row_seen[static_cast<std::size_t>(owner - 1)]) {
                row_seen[static_cast<std::size_t>(owner - 1)] = true;
                queue.push_back(owner);
            }
        }
    }

    // Reachable rows x unreachable columns is all-zero, of total size
    // 2n - |matching| >= n + 1; trim columns down to exactly n + 1.
    ZeroBlockWitness w;
    for (int i = 1; i <= n; ++i)
        if (row_seen[static_cast<std::size_t>(i - 1)]) w.rows.push_back(i);
    for (int j = 1; j <= n; ++j)
        if (!col_seen[static_cast<std::size_t>(j - 1)]) w.cols.push_back(j);
    const std::size_t want_cols = static_cast<std::size_t>(n + 1) - w.rows.size();
    w.cols.resize(want_cols);
    return w;
}

} // namespace perdet
