#pragma once

#include "perdet/core.hpp"
#include "perdet/digraph.hpp"
#include "perdet/matrix.hpp"
#include "perdet/permutation.hpp"
#include "perdet/rational.hpp"

#include <cstdint>
#include <vector>

namespace perdet {

enum class EntryKind { zero_one, small_rational };

// Recipe for a reproducible random nonnegative matrix; generation is a pure
// function of these fields.
struct InstanceSpec {
    int n = 3;
    Rational density = Rational(1, 2); // probability of a nonzero entry, in [0, 1]
    EntryKind entry_kind = EntryKind::zero_one;
    std::uint64_t seed = 0;
    bool force_positive_diagonal = false;
};

SquareMatrix generate(const InstanceSpec& spec);

// One row of an exact per/det comparison table.
struct OracleRow {
    long long k = 1;
    Rational per;
    Rational det;
    bool equal = false;

    friend bool operator==(const OracleRow&, const OracleRow&) = default;
};

// Exact permanent by expansion when it fits the cap, else Ryser.
Rational permanent_oracle(const SquareMatrix& a);

// per(A^k) vs det(A^k) for k = 1..k_max, all exact.
std::vector<OracleRow> oracle_compare(const SquareMatrix& a, int k_max);

// The 8 x 8 permutation matrix of (1234)(5678): permanent and determinant
// both equal 1, yet its digraph contains two dicycles of length 4. The
// matching "equal iff no even dicycle" folklore fails on it; the flagship
// regression test of this repository.
struct CounterexampleReport {
    Permutation sigma;
    SquareMatrix matrix;
    Rational per;
    Rational det;
    std::vector<Dicycle> dicycles;
};

CounterexampleReport reproduce_counterexample();

} // namespace perdet
