#include "perdet/verdicts.hpp"

#include "perdet/core.hpp"
#include "perdet/errors.hpp"
#include "perdet/rng.hpp"

#include <algorithm>
#include <string>

namespace perdet {

namespace {

std::string fmt_pos(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string cycle_text(const Dicycle& c) {
    std::string out = "(";
    for (std::size_t t = 0; t < c.vertices.size(); ++t) {
        if (t) out += ' ';
        out += std::to_string(c.vertices[static_cast<std::size_t>(t)]);
    }
    return out + ")";
}

Verdict inapplicable(const char* check, std::string why) {
    Verdict v;
    v.check = check;
    v.decision = Decision::inapplicable;
    v.notes.push_back(std::move(why));
    return v;
}

// k = 1 per/det row for the report; silently skipped above the Ryser cap.
void attach_oracle_row(Verdict& v, const SquareMatrix& a) {
    if (a.n() > kRyserCap) {
        v.notes.push_back("per/det values omitted: dimension exceeds the exact oracle cap");
        return;
    }
    OracleRow row{1, permanent_oracle(a), determinant(a), false};
    row.equal = row.per == row.det;
    v.oracle_checks.push_back(std::move(row));
}

// Even dicycle of g(m), translated into a verdicts witness. Returns true if
// one was found. tau_for_theta maps the dicycle permutation back to the
// original matrix when m = A P_tau.
bool attach_even_dicycle_witness(Verdict& v, const SquareMatrix& m, const Permutation& tau,
                                 std::size_t cycle_cap) {
    const auto even = find_even_dicycle(build_digraph(m), cycle_cap);
    if (!even) return false;

    const Dicycle& c = *even;
    if (c.length() == 2) {
        v.witness = SymmetricPair{c.vertices[0], c.vertices[1]};
        v.notes.push_back("entries " + fmt_pos(c.vertices[0], c.vertices[1]) + " and " +
                          fmt_pos(c.vertices[1], c.vertices[0]) + " are both nonzero");
    } else {
        v.witness = c;
        v.notes.push_back("even dicycle " + cycle_text(c) + " of length " +
                          std::to_string(c.length()));
    }
    // The dicycle, padded with the positive diagonal, is a nonzero diagonal
    // of m; composed with tau it yields an odd permutation for the original.
    const Permutation on_m = Permutation::from_cycles(m.n(), {c.vertices});
    v.odd_theta = tau.compose(on_m);
    return true;
}

} // namespace

const char* decision_name(Decision d) {
    switch (d) {
    case Decision::holds: return "holds";
    case Decision::fails: return "fails";
    case Decision::inapplicable: return "inapplicable";
    }
    return "?";
}

Verdict check_eq_positive_diagonal(const SquareMatrix& a, const CheckOptions& opt) {
    const char* tag = checks::eq_positive_diagonal;
    if (!a.is_nonnegative()) return inapplicable(tag, "matrix has negative entries");
    for (int i = 1; i <= a.n(); ++i)
        if (a.at(i, i) == 0)
            return inapplicable(tag, "diagonal entry " + fmt_pos(i, i) + " is zero");

    Verdict v;
    v.check = tag;
    v.tau = Permutation::identity(a.n());
    v.sign = 1;
    try {
        if (attach_even_dicycle_witness(v, a, *v.tau, opt.cycle_cap)) {
            v.decision = Decision::fails;
            v.notes.push_back("per(A) > det(A): an odd permutation has nonzero diagonal product");
        } else {
            v.decision = Decision::holds;
            v.notes.push_back("no even dicycle: every nonzero diagonal permutation is even");
        }
    } catch (const CycleCapExceeded& e) {
        Verdict t = inapplicable(tag, std::string("undecided: ") + e.what());
        t.cap_exceeded = true;
        return t;
    }
    attach_oracle_row(v, a);
    return v;
}

Verdict check_abs_eq(const SquareMatrix& a, const CheckOptions& opt) {
    const char* tag = checks::abs_eq;
    if (!a.is_nonnegative()) return inapplicable(tag, "matrix has negative entries");

    auto tau = find_nonzero_diagonal(a);
    if (!tau) {
        Verdict v = inapplicable(tag, "per(A) = 0: the support has no nonzero diagonal");
        if (auto block = zero_block_witness(a)) v.witness = *block;
        return v;
    }

    Verdict v;
    v.check = tag;
    v.tau = tau;
    v.sign = tau->sign();
    const SquareMatrix m = a * perm_matrix(*tau);
    try {
        if (attach_even_dicycle_witness(v, m, *tau, opt.cycle_cap)) {
            v.decision = Decision::fails;
            v.notes.push_back("per(A) > |det(A)|; witness refers to A*P_tau with tau = " +
                              tau->cycle_string());
        } else {
            v.decision = Decision::holds;
            v.notes.push_back(std::string("per(A) = sign(tau)*det(A) with sign(tau) = ") +
                              (v.sign == 1 ? "+1" : "-1"));
        }
    } catch (const CycleCapExceeded& e) {
        Verdict t = inapplicable(tag, std::string("undecided: ") + e.what());
        t.cap_exceeded = true;
        return t;
    }
    attach_oracle_row(v, a);
    return v;
}

Verdict check_zero_count_bound(const SquareMatrix& a, const CheckOptions& opt) {
    const char* tag = checks::zero_count_bound;
    Verdict pre = check_abs_eq(a, opt);
    if (pre.decision != Decision::holds) {
        Verdict v = inapplicable(tag, pre.decision == Decision::fails
                                          ? "per(A) != |det(A)|"
                                          : "0 != per(A) = |det(A)| not established");
        v.cap_exceeded = pre.cap_exceeded;
        return v;
    }

    Verdict v;
    v.check = tag;
    v.tau = pre.tau;
    v.sign = pre.sign;
    const int zeros = a.zero_count();
    const int bound = (a.n() * a.n() - a.n()) / 2;
    v.notes.push_back(std::to_string(zeros) + " zero entries, bound (n^2-n)/2 = " +
                      std::to_string(bound));
    if (zeros >= bound) {
        v.decision = Decision::holds;
    } else {
        // Unreachable if the abs-eq decision is correct; report as a bug.
        v.decision = Decision::fails;
        v.notes.push_back("zero-count bound violated despite per = |det|: implementation bug");
    }
    return v;
}

Verdict check_psd(const SquareMatrix& a, const CheckOptions& opt) {
    const char* tag = checks::psd;
    if (!a.is_symmetric()) return inapplicable(tag, "matrix is not symmetric");
    if (a.n() > opt.psd_minor_cap)
        return inapplicable(tag, "principal-minor PSD verification capped at n <= " +
                                     std::to_string(opt.psd_minor_cap));

    // Exact PSD test: every nonempty principal minor is >= 0.
    const int n = a.n();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) idx.push_back(i + 1);
        SquareMatrix sub(static_cast<int>(idx.size()));
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                sub.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) =
                    a.at(idx[r], idx[c]);
        if (determinant(sub) < 0) {
            std::string rows;
            for (std::size_t r = 0; r < idx.size(); ++r)
                rows += (r ? "," : "") + std::to_string(idx[r]);
            return inapplicable(tag, "not positive semidefinite: principal minor {" + rows +
                                         "} is negative");
        }
    }

    Verdict v;
    v.check = tag;
    if (a.has_zero_row()) {
        v.decision = Decision::holds;
        v.notes.push_back("zero row: per(A) = det(A) = 0");
    } else if (a.is_diagonal()) {
        v.decision = Decision::holds;
        v.notes.push_back("diagonal matrix: per(A) = det(A) = product of the diagonal");
    } else {
        v.decision = Decision::fails;
        for (int i = 1; i <= n && std::holds_alternative<std::monostate>(v.witness); ++i)
            for (int j = i + 1; j <= n; ++j)
                if (a.at(i, j) != 0) {
                    v.witness = SymmetricPair{i, j};
                    v.notes.push_back("no zero row and off-diagonal entry " + fmt_pos(i, j) +
                                      " is nonzero (symmetric), so per(A) != det(A)");
                    break;
                }
    }
    attach_oracle_row(v, a);
    return v;
}

Verdict check_sufficient_powers(const SquareMatrix& a01, const Permutation& tau,
                                const CheckOptions&) {
    const char* tag = checks::sufficient_powers;
    if (tau.n() != a01.n()) throw std::invalid_argument("tau does not match the matrix dimension");
    if (!a01.is_zero_one())
        return inapplicable(tag, "requires a {0,1} matrix; apply the support map first");

    Verdict v;
    v.check = tag;
    v.tau = tau;
    v.sign = tau.sign();

    const SquareMatrix m = a01 * perm_matrix(tau);
    for (int i = 1; i <= m.n(); ++i)
        if (m.at(i, i) != 1) {
            v.decision = Decision::fails;
            v.witness = MissingUnitDiagonal{i};
            v.notes.push_back("(A*P_tau)" + fmt_pos(i, i) + " != 1: unit-diagonal condition violated");
            v.notes.push_back("sufficient condition only: no conclusion about per vs det");
            return v;
        }

    const SquareMatrix b = m - SquareMatrix::identity(m.n());
    SquareMatrix bk = SquareMatrix::identity(b.n());
    for (long long k = 1; k <= b.n() / 2; ++k) {
        bk = bk * b;
        const SquareMatrix b2k = bk * bk;
        for (int i = 1; i <= b.n(); ++i) {
            const Rational joined = bk.at(i, i) * bk.at(i, i);
            if (b2k.at(i, i) != joined) {
                v.decision = Decision::fails;
                v.witness = WalkJoinMismatch{k, i};
                v.notes.push_back("(B^" + std::to_string(2 * k) + ")" + fmt_pos(i, i) + " = " +
                                  to_string(b2k.at(i, i)) + " but ((B^" + std::to_string(k) +
                                  ")" + fmt_pos(i, i) + ")^2 = " + to_string(joined) +
                                  " with B = A*P_tau - I");
                v.notes.push_back("sufficient condition only: no conclusion about per vs det");
                return v;
            }
        }
    }

    v.decision = Decision::holds;
    v.notes.push_back(std::string("0 != per(A) = sign(tau)*det(A) with sign(tau) = ") +
                      (v.sign == 1 ? "+1" : "-1"));
    attach_oracle_row(v, a01);
    return v;
}

Verdict check_sufficient_powers_phi(const SquareMatrix& a, const Permutation& tau,
                                    const CheckOptions& opt) {
    Verdict v = check_sufficient_powers(phi(a), tau, opt);
    v.notes.push_back("checked on the support matrix of A; the verdict transfers to every "
                      "matrix with this support");
    return v;
}

Verdict check_powers_positive_diagonal(const SquareMatrix& a, const CheckOptions& opt) {
    const char* tag = checks::powers_positive_diagonal;
    if (!a.is_nonnegative()) return inapplicable(tag, "matrix has negative entries");
    for (int i = 1; i <= a.n(); ++i)
        if (a.at(i, i) == 0)
            return inapplicable(tag, "diagonal entry " + fmt_pos(i, i) + " is zero");

    Verdict pre = check_eq_positive_diagonal(a, opt);
    if (pre.decision != Decision::holds) {
        Verdict v = inapplicable(tag, pre.decision == Decision::fails
                                          ? "per(A) != det(A)"
                                          : "per(A) = det(A) not established");
        v.witness = pre.witness;
        v.cap_exceeded = pre.cap_exceeded;
        return v;
    }

    Verdict v;
    v.check = tag;
    v.tau = Permutation::identity(a.n());
    v.sign = 1;

    Rational per;
    try {
        per = permanent_oracle(a);
    } catch (const CapExceeded& e) {
        Verdict t = inapplicable(tag, std::string("undecided: ") + e.what());
        t.cap_exceeded = true;
        return t;
    }
    const Rational diag = diagonal_product(a, *v.tau);
    if (per == diag) {
        v.decision = Decision::holds;
        v.notes.push_back("per(A) = L_e(A) = " + to_string(per) +
                          ": per(A^k) = det(A^k) for every k >= 1");
    } else {
        v.decision = Decision::fails;
        v.notes.push_back("per(A) = " + to_string(per) + " != " + to_string(diag) +
                          " = L_e(A), so per(A^2) != det(A^2)");
        if (auto c = shortest_dicycle(build_digraph(a))) {
            v.witness = *c;
            v.notes.push_back("dicycle " + cycle_text(*c) +
                              " certifies a nonzero diagonal permutation besides e");
        }
    }

    if (a.n() <= kRyserCap) {
        v.oracle_checks = oracle_compare(a, opt.k_max);
        for (const auto& row : v.oracle_checks)
            if (!row.equal) {
                if (std::holds_alternative<std::monostate>(v.witness))
                    v.witness = PowerMismatch{row.k};
                v.notes.push_back("per(A^" + std::to_string(row.k) + ") = " + to_string(row.per) +
                                  " != " + to_string(row.det) + " = det(A^" +
                                  std::to_string(row.k) + ")");
                break;
            }
    }
    return v;
}

Verdict check_powers_general(const SquareMatrix& a, const CheckOptions& opt) {
    const char* tag = checks::powers_general;
    if (!a.is_nonnegative()) return inapplicable(tag, "matrix has negative entries");

    auto tau = find_nonzero_diagonal(a);
    if (!tau) {
        Verdict v = inapplicable(tag, "per(A) = 0: the support has no nonzero diagonal");
        if (auto block = zero_block_witness(a)) v.witness = *block;
        return v;
    }

    Verdict v;
    v.check = tag;
    v.tau = tau;
    v.sign = tau->sign();
    const long long s = tau->order();
    v.notes.push_back("tau = " + tau->cycle_string() + ", order s = " + std::to_string(s));

    Rational per_a, per_as, diag_as;
    SquareMatrix a_s = a.pow(s);
    try {
        per_a = permanent_oracle(a);
        per_as = permanent_oracle(a_s);
    } catch (const CapExceeded& e) {
        Verdict t = inapplicable(tag, std::string("undecided: ") + e.what());
        t.cap_exceeded = true;
        return t;
    }
    const Rational diag_tau = diagonal_product(a, *tau);
    diag_as = diagonal_product(a_s, Permutation::identity(a.n()));

    const bool cond_even = tau->sign() == 1;
    const bool cond_unique = per_a == diag_tau;
    const bool cond_power = per_as == diag_as;

    if (!cond_even) {
        v.notes.push_back("tau is odd, so per(A) != det(A) already at k = 1");
        v.odd_theta = tau;
    }
    if (!cond_unique)
        v.notes.push_back("per(A) = " + to_string(per_a) + " != " + to_string(diag_tau) +
                          " = L_tau(A)");
    if (!cond_power)
        v.notes.push_back("per(A^s) = " + to_string(per_as) + " != " + to_string(diag_as) +
                          " = L_e(A^s) at s = " + std::to_string(s));

    const int sweep = static_cast<int>(std::max<long long>(2 * s, opt.k_max));
    if (a.n() <= kRyserCap) v.oracle_checks = oracle_compare(a, sweep);

    if (cond_even && cond_unique && cond_power) {
        v.decision = Decision::holds;
        v.notes.push_back("per(A) = L_tau(A) = " + to_string(per_a) +
                          " and per(A^s) = L_e(A^s): per(A^k) = det(A^k) for every k >= 1");
    } else {
        v.decision = Decision::fails;
        bool witnessed = false;
        for (const auto& row : v.oracle_checks)
            if (!row.equal) {
                v.witness = PowerMismatch{row.k};
                v.notes.push_back("per(A^" + std::to_string(row.k) + ") = " + to_string(row.per) +
                                  " != " + to_string(row.det) + " = det(A^" +
                                  std::to_string(row.k) + ")");
                witnessed = true;
                break;
            }
        if (!witnessed && v.odd_theta) {
            v.witness = *v.odd_theta;
            witnessed = true;
        }
        if (!witnessed)
            v.notes.push_back("no power mismatch within the sweep: implementation bug suspected");
    }
    return v;
}

Verdict triangularize(const SquareMatrix& a, const CheckOptions&) {
    const char* tag = checks::triangularize;
    if (!a.is_nonnegative()) return inapplicable(tag, "matrix has negative entries");

    auto tau = find_nonzero_diagonal(a);
    if (!tau) {
        Verdict v = inapplicable(tag, "per(A) = 0: the support has no nonzero diagonal");
        if (auto block = zero_block_witness(a)) v.witness = *block;
        return v;
    }

    const int n = a.n();
    std::vector<int> active_rows(static_cast<std::size_t>(n)), active_cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) active_rows[static_cast<std::size_t>(i)] = active_cols[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> row_at(static_cast<std::size_t>(n) + 1, 0), col_at(static_cast<std::size_t>(n) + 1, 0);
    int lo = 1, hi = n;

    auto erase_value = [](std::vector<int>& xs, int value) {
        xs.erase(std::find(xs.begin(), xs.end(), value));
    };

    while (!active_rows.empty()) {
        // A row with a single nonzero is pinned to the bottom-right corner of
        // the remaining block, a column with a single nonzero to the top-left.
        int pick_row = 0, pick_col = 0;
        bool row_case = false;
        for (int r : active_rows) {
            int count = 0, last = 0;
            for (int c : active_cols)
                if (a.at(r, c) != 0) { ++count; last = c; }
            if (count == 1) { pick_row = r; pick_col = last; row_case = true; break; }
        }
        if (!row_case) {
            for (int c : active_cols) {
                int count = 0, last = 0;
                for (int r : active_rows)
                    if (a.at(r, c) != 0) { ++count; last = r; }
                if (count == 1) { pick_row = last; pick_col = c; break; }
            }
        }
        if (pick_row == 0) {
            Verdict v;
            v.check = tag;
            v.decision = Decision::fails;
            v.tau = tau;
            v.sign = tau->sign();
            v.witness = StuckSubmatrix{active_rows, active_cols};
            v.notes.push_back("every row and column of the residual " +
                              std::to_string(active_rows.size()) + "x" +
                              std::to_string(active_cols.size()) +
                              " submatrix has at least two nonzero entries, so several "
                              "permutations have nonzero diagonal product");
            return v;
        }
        const int pos = row_case ? hi-- : lo++;
        row_at[static_cast<std::size_t>(pos)] = pick_row;
        col_at[static_cast<std::size_t>(pos)] = pick_col;
        erase_value(active_rows, pick_row);
        erase_value(active_cols, pick_col);
    }

    // (P A Q)_{pq} = A(row_at[p], col_at[q]).
    std::vector<int> p_images(static_cast<std::size_t>(n)), q_images(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) {
        p_images[static_cast<std::size_t>(row_at[static_cast<std::size_t>(pos)] - 1)] = pos;
        q_images[static_cast<std::size_t>(pos - 1)] = col_at[static_cast<std::size_t>(pos)];
    }
    Verdict v;
    v.check = tag;
    v.decision = Decision::holds;
    v.tau = tau;
    v.sign = tau->sign();
    v.row_perm = Permutation(p_images);
    v.col_perm = Permutation(q_images);

    const SquareMatrix t = perm_matrix(*v.row_perm) * a * perm_matrix(*v.col_perm);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (t.at(i, j) != 0)
                throw std::logic_error("triangularize produced a non-triangular arrangement");

    v.notes.push_back("P A Q is upper triangular with P = " + v.row_perm->cycle_string() +
                      ", Q = " + v.col_perm->cycle_string());
    v.notes.push_back("per(A) = L_tau(A) with tau = " + tau->cycle_string() +
                      ", the unique nonzero diagonal");
    return v;
}

Verdict check_pattern(const ZeroPattern& gamma, int trials, std::uint64_t seed,
                      const CheckOptions& opt) {
    const char* tag = checks::pattern_class;
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    const SquareMatrix support_matrix = phi(gamma);
    Verdict base = check_abs_eq(support_matrix, opt);
    Verdict v;
    v.check = tag;
    v.tau = base.tau;
    v.sign = base.sign;
    v.witness = base.witness;
    v.cap_exceeded = base.cap_exceeded;
    v.oracle_checks = base.oracle_checks;

    if (base.decision == Decision::inapplicable) {
        v.decision = Decision::inapplicable;
        v.notes.push_back("support matrix: " + (base.notes.empty() ? "inapplicable" : base.notes[0]));
        return v;
    }

    const bool class_holds = base.decision == Decision::holds;
    v.notes.push_back(std::string("support matrix verdict: per = +-det ") +
                      (class_holds ? "holds" : "fails"));

    int agreeing = 0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = SplitMix64::mix(seed + 0x9e3779b97f4a7c15ULL *
                                                                    static_cast<std::uint64_t>(t + 1));
        const SquareMatrix sample = sample_from_pattern(gamma, trial_seed);
        const Rational per = permanent_oracle(sample);
        const Rational det = determinant(sample);
        // Members of the class satisfy per = sign(tau)*det exactly when the
        // support matrix does; the sign is fixed by the parity class of the
        // support's nonzero diagonals.
        const bool member_eq = class_holds ? (per == Rational(*v.sign) * det)
                                           : (per != det && per != -det);
        if (member_eq) {
            ++agreeing;
        } else {
            v.decision = Decision::fails;
            v.notes.push_back("sample (trial " + std::to_string(t + 1) + ", seed " +
                              std::to_string(trial_seed) + ") disagrees with the class verdict: "
                              "per = " + to_string(per) + ", det = " + to_string(det) +
                              " -- implementation bug suspected");
            return v;
        }
    }
    v.notes.push_back(std::to_string(agreeing) + "/" + std::to_string(trials) +
                      " sampled members agree with the support verdict");
    v.decision = class_holds ? Decision::holds : Decision::fails;
    if (gamma.kind() == PatternKind::sign && !gamma.has_minus_cell() && class_holds)
        v.notes.push_back("nonnegative pattern: per = |det| for every member");
    return v;
}

} // namespace perdet
