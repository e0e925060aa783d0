#include "perdet/oracle.hpp"

#include "perdet/errors.hpp"
#include "perdet/rng.hpp"

#include <stdexcept>

namespace perdet {

SquareMatrix generate(const InstanceSpec& spec) {
    if (spec.density < 0 || spec.density > 1)
        throw std::invalid_argument("density must lie in [0, 1]");
    SplitMix64 rng(spec.seed);
    SquareMatrix out(spec.n);

    auto draw_entry = [&]() -> Rational {
        if (spec.entry_kind == EntryKind::zero_one) return 1;
        const long long num = rng.range(1, 10);
        const long long den = rng.range(1, 4);
        return make_rational(num, den);
    };

    // Presence test at 1/10000 resolution, exact against the rational density.
    auto present = [&]() {
        const Rational u(rng.below(10000), 10000);
        return u < spec.density;
    };

    for (int i = 1; i <= spec.n; ++i)
        for (int j = 1; j <= spec.n; ++j) {
            if (i == j && spec.force_positive_diagonal) {
                out.at(i, j) = draw_entry();
                continue;
            }
            if (present()) out.at(i, j) = draw_entry();
        }
    return out;
}

Rational permanent_oracle(const SquareMatrix& a) {
    if (a.n() <= kExpansionCap) return permanent_expansion(a);
    return permanent_ryser(a);
}

std::vector<OracleRow> oracle_compare(const SquareMatrix& a, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    if (a.n() > kRyserCap)
        throw CapExceeded("oracle comparison capped at n = " + std::to_string(kRyserCap), a.n(),
                          kRyserCap);
    std::vector<OracleRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max));
    SquareMatrix power = a;
    for (long long k = 1; k <= k_max; ++k) {
        if (k > 1) power = power * a;
        OracleRow row{k, permanent_oracle(power), determinant(power), false};
        row.equal = row.per == row.det;
        rows.push_back(std::move(row));
    }
    return rows;
}

CounterexampleReport reproduce_counterexample() {
    const Permutation sigma = Permutation::from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}});
    SquareMatrix p = perm_matrix(sigma);
    CounterexampleReport report{sigma, p, permanent_oracle(p), determinant(p),
                                enumerate_dicycles(build_digraph(p))};

    auto check = [](bool ok, const char* what) {
        if (!ok)
            throw std::logic_error(std::string("counterexample reproduction failed: ") + what +
                                   " (permutation-matrix convention bug?)");
    };
    check(report.per == 1, "per != 1");
    check(report.det == 1, "det != 1");
    check(report.dicycles.size() == 2, "expected exactly 2 dicycles");
    for (const auto& c : report.dicycles) check(c.length() == 4, "expected length-4 dicycles");
    return report;
}

} // namespace perdet
