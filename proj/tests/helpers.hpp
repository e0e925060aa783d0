#pragma once

#include "perdet/core.hpp"
#include "perdet/digraph.hpp"
#include "perdet/matrix.hpp"
#include "perdet/pattern.hpp"
#include "perdet/permutation.hpp"
#include "perdet/rational.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

// Fixed instances and brute-force reference computations shared by the test
// binaries. The brute-force sums here are deliberately written from scratch
// so they cannot share a bug with the library path they validate.
namespace fixtures {

using perdet::Permutation;
using perdet::Rational;
using perdet::SquareMatrix;
using perdet::ZeroPattern;

// 5x5 zero-star pattern whose support admits only even nonzero diagonals.
inline ZeroPattern star_pattern5() {
    return perdet::ZeroPattern::from_strings(
        perdet::PatternKind::zero_star, {"00**0", "000**", "*0*0*", "**000", "0**00"});
}

// The {0,1} support matrix of star_pattern5; per = det = 3.
inline SquareMatrix star_support5() {
    return SquareMatrix::from_rows({{0, 0, 1, 1, 0},
                                    {0, 0, 0, 1, 1},
                                    {1, 0, 1, 0, 1},
                                    {1, 1, 0, 0, 0},
                                    {0, 1, 1, 0, 0}});
}

// (13524), an even 5-cycle with nonzero diagonal product on star_support5.
inline Permutation tau5() { return Permutation::from_cycles(5, {{1, 3, 5, 2, 4}}); }

// B = star_support5 * P_tau5 - I and its powers; all diagonals of B^2 and
// B^4 vanish.
inline SquareMatrix walk_b() {
    return SquareMatrix::from_rows({{0, 1, 0, 0, 0},
                                    {0, 0, 1, 0, 0},
                                    {1, 0, 0, 1, 0},
                                    {0, 0, 0, 0, 1},
                                    {1, 0, 0, 0, 0}});
}

inline SquareMatrix walk_b2() {
    return SquareMatrix::from_rows({{0, 0, 1, 0, 0},
                                    {1, 0, 0, 1, 0},
                                    {0, 1, 0, 0, 1},
                                    {1, 0, 0, 0, 0},
                                    {0, 1, 0, 0, 0}});
}

inline SquareMatrix walk_b4() {
    return SquareMatrix::from_rows({{0, 1, 0, 0, 1},
                                    {1, 0, 1, 0, 0},
                                    {1, 1, 0, 1, 0},
                                    {0, 0, 1, 0, 0},
                                    {1, 0, 0, 1, 0}});
}

// 6x6 {0,1} matrix with a unique nonzero diagonal (142)(356); per(A^k) =
// det(A^k) = 1 for every k.
inline SquareMatrix stable6() {
    return SquareMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                                    {1, 0, 0, 0, 0, 0},
                                    {1, 1, 0, 1, 1, 0},
                                    {0, 1, 0, 0, 0, 0},
                                    {1, 1, 0, 1, 0, 1},
                                    {1, 1, 1, 1, 0, 0}});
}

inline SquareMatrix stable6_cubed() {
    return SquareMatrix::from_rows({{1, 0, 0, 0, 0, 0},
                                    {0, 1, 0, 0, 0, 0},
                                    {3, 3, 1, 3, 0, 0},
                                    {0, 0, 0, 1, 0, 0},
                                    {3, 3, 0, 3, 1, 0},
                                    {3, 3, 0, 3, 0, 1}});
}

inline Permutation sigma6() { return Permutation::from_cycles(6, {{1, 4, 2}, {3, 5, 6}}); }

// The even permutation whose matrix satisfies per = det = 1 while its
// digraph carries two length-4 dicycles.
inline Permutation cycle8() { return Permutation::from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}); }

// I + P_c for the 3-cycle c = (123): per = det at k = 1 but not at k = 2.
inline SquareMatrix unstable3() {
    return SquareMatrix::identity(3) + perdet::perm_matrix(Permutation::from_cycles(3, {{1, 2, 3}}));
}

// Visits every permutation of [n] as a 1-based image vector with its sign.
template <typename Fn>
void all_perms(int n, Fn&& fn) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (images[static_cast<std::size_t>(i)] > images[static_cast<std::size_t>(j)])
                    ++inversions;
        fn(images, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(images.begin(), images.end()));
}

inline Rational diag_product_of(const SquareMatrix& a, const std::vector<int>& images) {
    Rational prod = 1;
    for (int i = 1; i <= a.n() && prod != 0; ++i)
        prod *= a.at(i, images[static_cast<std::size_t>(i - 1)]);
    return prod;
}

inline Rational per_brute(const SquareMatrix& a) {
    Rational sum = 0;
    all_perms(a.n(), [&](const std::vector<int>& images, int) { sum += diag_product_of(a, images); });
    return sum;
}

inline Rational det_brute(const SquareMatrix& a) {
    Rational sum = 0;
    all_perms(a.n(), [&](const std::vector<int>& images, int sign) {
        sum += Rational(sign) * diag_product_of(a, images);
    });
    return sum;
}

inline int count_nonzero_diagonals(const SquareMatrix& a) {
    int count = 0;
    all_perms(a.n(), [&](const std::vector<int>& images, int) {
        if (diag_product_of(a, images) != 0) ++count;
    });
    return count;
}

// Number of walks i -> j of length k, counted by explicit extension.
inline long long count_walks_brute(const perdet::Digraph& g, int from, int to, int k) {
    if (k == 0) return from == to ? 1 : 0;
    long long total = 0;
    for (int w : g.neighbors(from)) total += count_walks_brute(g, w, to, k - 1);
    return total;
}

} // namespace fixtures
