#include "perdet/core.hpp"

#include "perdet/rng.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace perdet {

namespace {

// Applies fn(indices, parity_sign) to every permutation of {0..n-1}.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(j)])
                    ++inversions;
        fn(idx, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

Rational expansion_sum(const SquareMatrix& a, bool signed_terms, int cap, const char* hint) {
    const int n = a.n();
    if (n > cap)
        throw CapExceeded(std::string("permutation expansion capped at n = ") +
                              std::to_string(cap) + "; " + hint,
                          n, cap);
    Rational sum = 0;
    for_each_permutation(n, [&](const std::vector<int>& idx, int parity) {
        Rational term = 1;
        for (int i = 0; i < n && term != 0; ++i)
            term *= a.at(i + 1, idx[static_cast<std::size_t>(i)] + 1);
        if (term == 0) return;
        if (signed_terms && parity < 0)
            sum -= term;
        else
            sum += term;
    });
    return sum;
}

} // namespace

Rational permanent_expansion(const SquareMatrix& a, int cap) {
    return expansion_sum(a, false, cap, "use permanent_ryser for larger matrices");
}

Rational determinant_expansion(const SquareMatrix& a, int cap) {
    return expansion_sum(a, true, cap, "use determinant (fraction-free) for larger matrices");
}

Rational permanent_ryser(const SquareMatrix& a, int cap) {
    const int n = a.n();
    if (n > cap)
        throw CapExceeded("Ryser permanent capped at n = " + std::to_string(cap), n, cap);

    // per(A) = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} A_ij,
    // visiting subsets in Gray-code order so each step updates one column.
    std::vector<Rational> row_sums(static_cast<std::size_t>(n));
    Rational total = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray_prev = 0;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const std::uint64_t flipped = gray ^ gray_prev;
        const int col = std::countr_zero(flipped);
        const bool added = (gray & flipped) != 0;
        for (int i = 0; i < n; ++i) {
            const Rational& v = a.at(i + 1, col + 1);
            if (v == 0) continue;
            if (added)
                row_sums[static_cast<std::size_t>(i)] += v;
            else
                row_sums[static_cast<std::size_t>(i)] -= v;
        }
        gray_prev = gray;

        Rational prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= row_sums[static_cast<std::size_t>(i)];
        if (prod == 0) continue;
        if (std::popcount(gray) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return (n % 2 == 0) ? total : Rational(-total);
}

Rational determinant(const SquareMatrix& a) {
    const int n = a.n();

    // Clear denominators row by row, then run integer Bareiss elimination;
    // every division in the update step is exact.
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n)));
    Int scale = 1;
    for (int i = 1; i <= n; ++i) {
        Int row_lcm = 1;
        for (int j = 1; j <= n; ++j) row_lcm = lcm(row_lcm, denominator(a.at(i, j)));
        scale *= row_lcm;
        for (int j = 1; j <= n; ++j) {
            const Rational& v = a.at(i, j);
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                numerator(v) * (row_lcm / denominator(v));
        }
    }

    int det_sign = 1;
    Int prev_pivot = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
            det_sign = -det_sign;
        }
        const Int pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                auto& mij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                mij = (mij * pivot -
                       m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                           m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                      prev_pivot;
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev_pivot = pivot;
    }

    Int det_int = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (det_sign < 0) det_int = -det_int;
    return make_rational(det_int, scale);
}

Rational diagonal_product(const SquareMatrix& a, const Permutation& sigma) {
    if (sigma.n() != a.n())
        throw std::invalid_argument("permutation and matrix dimensions disagree");
    Rational prod = 1;
    for (int i = 1; i <= a.n() && prod != 0; ++i) prod *= a.at(i, sigma(i));
    return prod;
}

SquareMatrix perm_matrix(const Permutation& sigma) {
    SquareMatrix p(sigma.n());
    for (int j = 1; j <= sigma.n(); ++j) p.at(sigma(j), j) = 1;
    return p;
}

SquareMatrix phi(const SquareMatrix& a) {
    SquareMatrix out(a.n());
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            if (a.at(i, j) != 0) out.at(i, j) = 1;
    return out;
}

SquareMatrix phi(const ZeroPattern& gamma) {
    SquareMatrix out(gamma.n());
    for (int i = 1; i <= gamma.n(); ++i)
        for (int j = 1; j <= gamma.n(); ++j)
            if (gamma.cell(i, j) != PatternCell::zero) out.at(i, j) = 1;
    return out;
}

std::set<std::pair<int, int>> support(const SquareMatrix& a) {
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            if (a.at(i, j) != 0) out.emplace(i, j);
    return out;
}

SquareMatrix sample_from_pattern(const ZeroPattern& gamma, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = gamma.n();
    SquareMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const PatternCell c = gamma.cell(i, j);
            if (c == PatternCell::zero) continue;
            const long long num = rng.range(1, 100);
            const long long den = rng.range(1, 100);
            Rational v = make_rational(num, den);
            if (c == PatternCell::minus) v = -v;
            if (c == PatternCell::star && rng.chance(1, 2)) v = -v;
            out.at(i, j) = v;
        }
    return out;
}

} // namespace perdet
