#pragma once

#include "perdet/errors.hpp"
#include "perdet/matrix.hpp"
#include "perdet/pattern.hpp"
#include "perdet/permutation.hpp"
#include "perdet/rational.hpp"

#include <cstdint>
#include <set>
#include <utility>

namespace perdet {

// Caps keep the exponential oracles at desk scale; both are overridable per call.
inline constexpr int kExpansionCap = 9;
inline constexpr int kRyserCap = 20;

// Sum of diagonal products over all n! permutations. The reference oracle
// everything else is validated against. Throws CapExceeded above the cap.
Rational permanent_expansion(const SquareMatrix& a, int cap = kExpansionCap);

// Signed version of the expansion, the independent determinant oracle.
Rational determinant_expansion(const SquareMatrix& a, int cap = kExpansionCap);

// Ryser's inclusion-exclusion over column subsets, Gray-code order.
Rational permanent_ryser(const SquareMatrix& a, int cap = kRyserCap);

// Exact determinant by fraction-free (Bareiss) elimination.
Rational determinant(const SquareMatrix& a);

// Product of a's diagonal selected by sigma: prod_i a(i, sigma(i)).
Rational diagonal_product(const SquareMatrix& a, const Permutation& sigma);

// Permutation matrix with entry 1 at (sigma(j), j).
SquareMatrix perm_matrix(const Permutation& sigma);

// {0,1} matrix with exactly the support of the input.
SquareMatrix phi(const SquareMatrix& a);
SquareMatrix phi(const ZeroPattern& gamma);

// Positions of nonzero entries, 1-based.
std::set<std::pair<int, int>> support(const SquareMatrix& a);

// Deterministic-for-seed member of Q(gamma): sign cells get rationals of the
// demanded sign, star cells nonzero rationals, zero cells zero. Numerators
// and denominators are drawn uniformly from [1, 100].
SquareMatrix sample_from_pattern(const ZeroPattern& gamma, std::uint64_t seed);

} // namespace perdet
