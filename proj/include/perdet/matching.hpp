#pragma once

#include "perdet/matrix.hpp"
#include "perdet/permutation.hpp"

#include <optional>
#include <vector>

namespace perdet {

// r x s all-zero submatrix with r + s = n + 1; rows and cols are 1-based
// ascending index lists.
struct ZeroBlockWitness {
    std::vector<int> rows;
    std::vector<int> cols;

    friend bool operator==(const ZeroBlockWitness&, const ZeroBlockWitness&) = default;
};

// True iff the witness block is genuinely zero in a and r + s = n + 1.
bool zero_block_valid(const ZeroBlockWitness& w, const SquareMatrix& a);

// A permutation tau with nonzero diagonal product, found by augmenting-path
// matching on the support (rows processed in ascending index, columns tried
// in ascending index), or nullopt when the support has no perfect matching.
std::optional<Permutation> find_nonzero_diagonal(const SquareMatrix& a);

// For nonnegative a: per(a) = 0 iff the support has no perfect matching.
// Throws DomainError on matrices with negative entries.
bool is_permanent_zero(const SquareMatrix& a);

// Zero block certifying per(a) = 0, or nullopt when per(a) != 0. Derived
// from the alternating-reachability minimum vertex cover; columns are
// trimmed to the lowest indices so that r + s = n + 1 exactly.
std::optional<ZeroBlockWitness> zero_block_witness(const SquareMatrix& a);

} // namespace perdet
