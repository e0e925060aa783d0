#pragma once

#include "perdet/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace perdet {

// Dense n x n matrix of exact rationals. Indexed 1..n in both coordinates.
class SquareMatrix {
public:
    explicit SquareMatrix(int n)
        : n_(check_dim(n)), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    SquareMatrix(int n, std::vector<Rational> cells) : n_(check_dim(n)), cells_(std::move(cells)) {
        if (cells_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw std::invalid_argument("cell count does not match dimension");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
        return m;
    }

    // Row-major integer literal, handy for fixed test matrices.
    static SquareMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        const int n = static_cast<int>(rows.size());
        SquareMatrix m(n);
        int i = 1;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("matrix literal is not square");
            int j = 1;
            for (long long v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    int n() const { return n_; }

    const Rational& at(int i, int j) const { return cells_[index(i, j)]; }
    Rational& at(int i, int j) { return cells_[index(i, j)]; }

    bool is_nonnegative() const {
        for (const auto& c : cells_)
            if (c < 0) return false;
        return true;
    }

    bool is_zero_one() const {
        for (const auto& c : cells_)
            if (c != 0 && c != 1) return false;
        return true;
    }

    bool is_symmetric() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && at(i, j) != 0) return false;
        return true;
    }

    bool has_zero_row() const {
        for (int i = 1; i <= n_; ++i) {
            bool zero = true;
            for (int j = 1; j <= n_ && zero; ++j)
                if (at(i, j) != 0) zero = false;
            if (zero) return true;
        }
        return false;
    }

    int zero_count() const {
        int z = 0;
        for (const auto& c : cells_)
            if (c == 0) ++z;
        return z;
    }

    SquareMatrix operator*(const SquareMatrix& rhs) const {
        require_same_dim(rhs);
        SquareMatrix out(n_);
        for (int i = 1; i <= n_; ++i)
            for (int k = 1; k <= n_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (int j = 1; j <= n_; ++j) {
                    const Rational& b = rhs.at(k, j);
                    if (b != 0) out.at(i, j) += a * b;
                }
            }
        return out;
    }

    SquareMatrix operator+(const SquareMatrix& rhs) const {
        require_same_dim(rhs);
        SquareMatrix out = *this;
        for (std::size_t t = 0; t < cells_.size(); ++t) out.cells_[t] += rhs.cells_[t];
        return out;
    }

    SquareMatrix operator-(const SquareMatrix& rhs) const {
        require_same_dim(rhs);
        SquareMatrix out = *this;
        for (std::size_t t = 0; t < cells_.size(); ++t) out.cells_[t] -= rhs.cells_[t];
        return out;
    }

    SquareMatrix pow(long long k) const {
        if (k < 0) throw std::invalid_argument("negative matrix power");
        SquareMatrix acc = identity(n_);
        SquareMatrix base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            if (k >>= 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    static int check_dim(int n) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
        return n;
    }

    void require_same_dim(const SquareMatrix& rhs) const {
        if (rhs.n_ != n_) throw std::invalid_argument("matrix dimensions disagree");
    }

    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_;
    std::vector<Rational> cells_;
};

} // namespace perdet
