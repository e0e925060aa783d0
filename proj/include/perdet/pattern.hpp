#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace perdet {

enum class PatternKind { sign, zero_star };

enum class PatternCell { zero, plus, minus, star };

// Qualitative n x n pattern: either a sign pattern over {-,0,+} or a
// zero/nonzero pattern over {0,*}. Q(pattern) is the class of rational
// matrices realizing it entrywise.
class ZeroPattern {
public:
    ZeroPattern(int n, PatternKind kind, std::vector<PatternCell> cells)
        : n_(n), kind_(kind), cells_(std::move(cells)) {
        if (n < 1) throw std::invalid_argument("pattern dimension must be positive");
        if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw std::invalid_argument("cell count does not match dimension");
        for (PatternCell c : cells_)
            if (!cell_legal(kind_, c))
                throw std::invalid_argument("pattern cell not legal for its kind");
    }

    // Rows of symbol characters, one char per cell, e.g. {"00**0", "000**", ...}.
    static ZeroPattern from_strings(PatternKind kind, const std::vector<std::string>& rows) {
        const int n = static_cast<int>(rows.size());
        std::vector<PatternCell> cells;
        cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("pattern rows are not square");
            for (char ch : row) cells.push_back(cell_from_char(ch));
        }
        return ZeroPattern(n, kind, std::move(cells));
    }

    int n() const { return n_; }
    PatternKind kind() const { return kind_; }

    PatternCell cell(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("pattern index");
        return cells_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(j - 1)];
    }

    bool all_zero() const {
        for (PatternCell c : cells_)
            if (c != PatternCell::zero) return false;
        return true;
    }

    bool has_minus_cell() const {
        for (PatternCell c : cells_)
            if (c == PatternCell::minus) return true;
        return false;
    }

    static char cell_char(PatternCell c) {
        switch (c) {
        case PatternCell::zero: return '0';
        case PatternCell::plus: return '+';
        case PatternCell::minus: return '-';
        case PatternCell::star: return '*';
        }
        return '?';
    }

    static PatternCell cell_from_char(char ch) {
        switch (ch) {
        case '0': return PatternCell::zero;
        case '+': return PatternCell::plus;
        case '-': return PatternCell::minus;
        case '*': return PatternCell::star;
        default: throw std::invalid_argument(std::string("unknown pattern symbol '") + ch + "'");
        }
    }

    friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;

private:
    static bool cell_legal(PatternKind kind, PatternCell c) {
        if (c == PatternCell::zero) return true;
        if (kind == PatternKind::sign) return c == PatternCell::plus || c == PatternCell::minus;
        return c == PatternCell::star;
    }

    int n_;
    PatternKind kind_;
    std::vector<PatternCell> cells_;
};

} // namespace perdet
