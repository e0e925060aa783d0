#pragma once

#include "perdet/digraph.hpp"
#include "perdet/matching.hpp"
#include "perdet/matrix.hpp"
#include "perdet/oracle.hpp"
#include "perdet/pattern.hpp"
#include "perdet/permutation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace perdet {

enum class Decision { holds, fails, inapplicable };

const char* decision_name(Decision d);

// Distinct off-diagonal positions with a(i,j) != 0 and a(j,i) != 0.
struct SymmetricPair {
    int i = 0;
    int j = 0;
    friend bool operator==(const SymmetricPair&, const SymmetricPair&) = default;
};

// Residual submatrix on which greedy triangularization got stuck: every row
// and every column of it carries at least two nonzero entries.
struct StuckSubmatrix {
    std::vector<int> rows;
    std::vector<int> cols;
    friend bool operator==(const StuckSubmatrix&, const StuckSubmatrix&) = default;
};

// (a P_tau)_{ii} != 1 at row i.
struct MissingUnitDiagonal {
    int i = 0;
    friend bool operator==(const MissingUnitDiagonal&, const MissingUnitDiagonal&) = default;
};

// (B^{2k})_{ii} != ((B^k)_{ii})^2: a closed walk of length 2k through i that
// is not a join of two length-k walks.
struct WalkJoinMismatch {
    long long k = 0;
    int i = 0;
    friend bool operator==(const WalkJoinMismatch&, const WalkJoinMismatch&) = default;
};

// per(A^k) != det(A^k) at the recorded power.
struct PowerMismatch {
    long long k = 0;
    friend bool operator==(const PowerMismatch&, const PowerMismatch&) = default;
};

using Witness = std::variant<std::monostate, SymmetricPair, Dicycle, Permutation,
                             ZeroBlockWitness, StuckSubmatrix, MissingUnitDiagonal,
                             WalkJoinMismatch, PowerMismatch>;

// Uniform result envelope returned by every decision procedure. A fails
// decision always carries an independently checkable witness; an
// inapplicable decision names the violated precondition in notes.
struct Verdict {
    Decision decision = Decision::inapplicable;
    std::string check;
    std::optional<Permutation> tau;     // permutation the decision was made against
    std::optional<int> sign;            // sign(tau): per = sign * det when the check holds
    Witness witness;
    std::optional<Permutation> odd_theta;   // odd permutation with nonzero diagonal product
    std::optional<Permutation> row_perm;    // triangularize: P of P A Q
    std::optional<Permutation> col_perm;    // triangularize: Q of P A Q
    std::vector<std::string> notes;
    std::vector<OracleRow> oracle_checks;   // exact per/det of powers, for cross-validation
    bool cap_exceeded = false;              // some enumeration or oracle cap was hit

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Tags identifying the decision procedures in reports.
namespace checks {
inline constexpr const char* eq_positive_diagonal = "eq-positive-diagonal";
inline constexpr const char* abs_eq = "abs-eq";
inline constexpr const char* zero_count_bound = "zero-count-bound";
inline constexpr const char* psd = "psd";
inline constexpr const char* sufficient_powers = "sufficient-powers";
inline constexpr const char* powers_positive_diagonal = "powers-positive-diagonal";
inline constexpr const char* powers_general = "powers-general";
inline constexpr const char* triangularize = "triangularize";
inline constexpr const char* pattern_class = "pattern-class";
} // namespace checks

struct CheckOptions {
    int k_max = 8;                      // power sweep bound for embedded oracle rows
    std::size_t cycle_cap = kCycleCap;  // dicycle enumeration cap
    int psd_minor_cap = 8;              // principal-minor PSD verification cap
};

// per(A) = det(A) for nonnegative A with positive diagonal: holds iff the
// digraph of A has no even dicycle (a 2-cycle doubles as a symmetric
// off-diagonal pair). Sound and complete.
Verdict check_eq_positive_diagonal(const SquareMatrix& a, const CheckOptions& opt = {});

// 0 != per(A) = |det(A)| for nonnegative A: picks tau with nonzero diagonal
// product by matching and tests A P_tau as above; when it holds,
// per(A) = sign(tau) * det(A). per(A) = 0 is inapplicable, with a zero-block
// witness attached.
Verdict check_abs_eq(const SquareMatrix& a, const CheckOptions& opt = {});

// When 0 != per(A) = |det(A)|, A must contain at least (n^2 - n)/2 zero
// entries. A fails here certifies an implementation bug, not a property of A.
Verdict check_zero_count_bound(const SquareMatrix& a, const CheckOptions& opt = {});

// For symmetric positive semidefinite A (verified exactly through principal
// minors): per(A) = det(A) iff A has a zero row or is diagonal.
Verdict check_psd(const SquareMatrix& a, const CheckOptions& opt = {});

// Sufficient condition on a {0,1} matrix: (a P_tau) has unit diagonal, and
// with B = a P_tau - I the diagonal of B^{2k} equals the squared diagonal of
// B^k for k = 1..floor(n/2). Then 0 != per(a) = sign(tau) * det(a). A fails
// decision means "condition violated", never "per != +-det".
Verdict check_sufficient_powers(const SquareMatrix& a01, const Permutation& tau,
                                const CheckOptions& opt = {});

// Convenience wrapper: applies the support map first, so any rational matrix
// (or pattern-class member) can be tested.
Verdict check_sufficient_powers_phi(const SquareMatrix& a, const Permutation& tau,
                                    const CheckOptions& opt = {});

// For nonnegative A with positive diagonal and per(A) = det(A):
// per(A^k) = det(A^k) for every k >= 1 iff per(A) equals the plain diagonal
// product L_e(A).
Verdict check_powers_positive_diagonal(const SquareMatrix& a, const CheckOptions& opt = {});

// For nonnegative A with per(A) != 0: per(A^k) = det(A^k) for every k >= 1
// iff tau is even, per(A) = L_tau(A), and per(A^s) = L_e(A^s) where s is the
// order of tau. On fails, records the first power where per and det part.
Verdict check_powers_general(const SquareMatrix& a, const CheckOptions& opt = {});

// per(A) = L_tau(A) for some tau iff P A Q is upper triangular for some
// permutation matrices P, Q. Greedy single-nonzero elimination; on success
// returns P, Q (verified by direct multiplication), on fails the stuck
// residual submatrix.
Verdict triangularize(const SquareMatrix& a, const CheckOptions& opt = {});

// Pattern-class verdict: decides per = +-det for the whole class Q(gamma)
// through its support matrix, then cross-checks the stated number of seeded
// members. A sampled disagreement is reported as fails with a bug note,
// since the class property is support-determined.
Verdict check_pattern(const ZeroPattern& gamma, int trials, std::uint64_t seed,
                      const CheckOptions& opt = {});

} // namespace perdet
