#include "perdet/report.hpp"

#include "perdet/io.hpp"

#include <sstream>

namespace perdet {

using nlohmann::json;

namespace {

json permutation_to_json(const Permutation& p) {
    return json{{"cycles", p.cycle_string()}, {"images", p.images()}};
}

Permutation permutation_from_json(const json& j) {
    return Permutation(j.at("images").get<std::vector<int>>());
}

json opt_perm(const std::optional<Permutation>& p) {
    return p ? permutation_to_json(*p) : json(nullptr);
}

std::optional<Permutation> opt_perm_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return permutation_from_json(j);
}

json witness_to_json(const Witness& w) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, SymmetricPair>) {
                return json{{"kind", "symmetric-pair"}, {"i", x.i}, {"j", x.j}};
            } else if constexpr (std::is_same_v<T, Dicycle>) {
                return json{{"kind", "dicycle"}, {"vertices", x.vertices}};
            } else if constexpr (std::is_same_v<T, Permutation>) {
                return json{{"kind", "odd-permutation"}, {"theta", permutation_to_json(x)}};
            } else if constexpr (std::is_same_v<T, ZeroBlockWitness>) {
                return json{{"kind", "zero-block"}, {"rows", x.rows}, {"cols", x.cols}};
            } else if constexpr (std::is_same_v<T, StuckSubmatrix>) {
                return json{{"kind", "stuck-submatrix"}, {"rows", x.rows}, {"cols", x.cols}};
            } else if constexpr (std::is_same_v<T, MissingUnitDiagonal>) {
                return json{{"kind", "missing-unit-diagonal"}, {"i", x.i}};
            } else if constexpr (std::is_same_v<T, WalkJoinMismatch>) {
                return json{{"kind", "walk-join-mismatch"}, {"k", x.k}, {"i", x.i}};
            } else {
                static_assert(std::is_same_v<T, PowerMismatch>);
                return json{{"kind", "power-mismatch"}, {"k", x.k}};
            }
        },
        w);
}

Witness witness_from_json(const json& j) {
    if (j.is_null()) return std::monostate{};
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "symmetric-pair") return SymmetricPair{j.at("i").get<int>(), j.at("j").get<int>()};
    if (kind == "dicycle") return Dicycle{j.at("vertices").get<std::vector<int>>()};
    if (kind == "odd-permutation") return permutation_from_json(j.at("theta"));
    if (kind == "zero-block")
        return ZeroBlockWitness{j.at("rows").get<std::vector<int>>(),
                                j.at("cols").get<std::vector<int>>()};
    if (kind == "stuck-submatrix")
        return StuckSubmatrix{j.at("rows").get<std::vector<int>>(),
                              j.at("cols").get<std::vector<int>>()};
    if (kind == "missing-unit-diagonal") return MissingUnitDiagonal{j.at("i").get<int>()};
    if (kind == "walk-join-mismatch")
        return WalkJoinMismatch{j.at("k").get<long long>(), j.at("i").get<int>()};
    if (kind == "power-mismatch") return PowerMismatch{j.at("k").get<long long>()};
    throw std::invalid_argument("unknown witness kind '" + kind + "'");
}

std::string witness_to_text(const Witness& w) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "none";
            } else if constexpr (std::is_same_v<T, SymmetricPair>) {
                return "symmetric pair (" + std::to_string(x.i) + "," + std::to_string(x.j) + ")";
            } else if constexpr (std::is_same_v<T, Dicycle>) {
                return "dicycle " + dicycle_to_text(x) + " of length " + std::to_string(x.length());
            } else if constexpr (std::is_same_v<T, Permutation>) {
                return "odd permutation " + x.cycle_string();
            } else if constexpr (std::is_same_v<T, ZeroBlockWitness>) {
                std::string out = "zero block rows {";
                for (std::size_t t = 0; t < x.rows.size(); ++t)
                    out += (t ? "," : "") + std::to_string(x.rows[t]);
                out += "} x cols {";
                for (std::size_t t = 0; t < x.cols.size(); ++t)
                    out += (t ? "," : "") + std::to_string(x.cols[t]);
                return out + "}";
            } else if constexpr (std::is_same_v<T, StuckSubmatrix>) {
                std::string out = "stuck submatrix rows {";
                for (std::size_t t = 0; t < x.rows.size(); ++t)
                    out += (t ? "," : "") + std::to_string(x.rows[t]);
                out += "} x cols {";
                for (std::size_t t = 0; t < x.cols.size(); ++t)
                    out += (t ? "," : "") + std::to_string(x.cols[t]);
                return out + "}";
            } else if constexpr (std::is_same_v<T, MissingUnitDiagonal>) {
                return "(A*P_tau)(" + std::to_string(x.i) + "," + std::to_string(x.i) + ") != 1";
            } else if constexpr (std::is_same_v<T, WalkJoinMismatch>) {
                return "walk-join mismatch at k = " + std::to_string(x.k) + ", vertex " +
                       std::to_string(x.i);
            } else {
                static_assert(std::is_same_v<T, PowerMismatch>);
                return "per(A^" + std::to_string(x.k) + ") != det(A^" + std::to_string(x.k) + ")";
            }
        },
        w);
}

} // namespace

json oracle_rows_to_json(const std::vector<OracleRow>& rows) {
    json out = json::array();
    for (const auto& row : rows)
        out.push_back(json{{"k", row.k},
                           {"per", to_string(row.per)},
                           {"det", to_string(row.det)},
                           {"equal", row.equal}});
    return out;
}

std::vector<OracleRow> oracle_rows_from_json(const json& j) {
    std::vector<OracleRow> rows;
    for (const auto& entry : j) {
        OracleRow row;
        row.k = entry.at("k").get<long long>();
        row.per = parse_rational(entry.at("per").get<std::string>());
        row.det = parse_rational(entry.at("det").get<std::string>());
        row.equal = entry.at("equal").get<bool>();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string oracle_rows_to_text(const std::vector<OracleRow>& rows) {
    std::ostringstream os;
    os << "  k | per(A^k) | det(A^k) | equal\n";
    for (const auto& row : rows)
        os << "  " << row.k << " | " << row.per << " | " << row.det << " | "
           << (row.equal ? "yes" : "NO") << "\n";
    return os.str();
}

json verdict_to_json(const Verdict& v) {
    return json{{"decision", decision_name(v.decision)},
                {"check", v.check},
                {"tau", opt_perm(v.tau)},
                {"sign", v.sign ? json(*v.sign) : json(nullptr)},
                {"witness", witness_to_json(v.witness)},
                {"odd_theta", opt_perm(v.odd_theta)},
                {"row_perm", opt_perm(v.row_perm)},
                {"col_perm", opt_perm(v.col_perm)},
                {"notes", v.notes},
                {"oracle_checks", oracle_rows_to_json(v.oracle_checks)},
                {"cap_exceeded", v.cap_exceeded}};
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    const std::string decision = j.at("decision").get<std::string>();
    if (decision == "holds")
        v.decision = Decision::holds;
    else if (decision == "fails")
        v.decision = Decision::fails;
    else if (decision == "inapplicable")
        v.decision = Decision::inapplicable;
    else
        throw std::invalid_argument("unknown decision '" + decision + "'");
    v.check = j.at("check").get<std::string>();
    v.tau = opt_perm_from(j.at("tau"));
    if (!j.at("sign").is_null()) v.sign = j.at("sign").get<int>();
    v.witness = witness_from_json(j.at("witness"));
    v.odd_theta = opt_perm_from(j.at("odd_theta"));
    v.row_perm = opt_perm_from(j.at("row_perm"));
    v.col_perm = opt_perm_from(j.at("col_perm"));
    v.notes = j.at("notes").get<std::vector<std::string>>();
    v.oracle_checks = oracle_rows_from_json(j.at("oracle_checks"));
    v.cap_exceeded = j.at("cap_exceeded").get<bool>();
    return v;
}

std::string verdict_to_text(const Verdict& v) {
    std::ostringstream os;
    os << "check:    " << v.check << "\n";
    os << "decision: " << decision_name(v.decision) << "\n";
    if (v.tau)
        os << "tau:      " << v.tau->cycle_string()
           << (v.sign ? (*v.sign == 1 ? "  [sign +1]" : "  [sign -1]") : "") << "\n";
    if (!std::holds_alternative<std::monostate>(v.witness))
        os << "witness:  " << witness_to_text(v.witness) << "\n";
    if (v.odd_theta) os << "theta:    " << v.odd_theta->cycle_string() << " (odd)\n";
    if (v.row_perm && v.col_perm)
        os << "P, Q:     " << v.row_perm->cycle_string() << ", " << v.col_perm->cycle_string()
           << "\n";
    if (!v.notes.empty()) {
        os << "notes:\n";
        for (const auto& note : v.notes) os << "  - " << note << "\n";
    }
    if (!v.oracle_checks.empty()) os << "oracle:\n" << oracle_rows_to_text(v.oracle_checks);
    if (v.cap_exceeded) os << "cap:      exceeded\n";
    return os.str();
}

std::string dicycle_to_text(const Dicycle& c) {
    std::string out = "(";
    for (std::size_t t = 0; t < c.vertices.size(); ++t) {
        if (t) out += ' ';
        out += std::to_string(c.vertices[t]);
    }
    return out + ")";
}

json counterexample_to_json(const CounterexampleReport& r) {
    json cycles = json::array();
    for (const auto& c : r.dicycles) cycles.push_back(c.vertices);
    std::ostringstream matrix_text;
    write_matrix(matrix_text, r.matrix);
    return json{{"sigma", permutation_to_json(r.sigma)},
                {"matrix", matrix_text.str()},
                {"per", to_string(r.per)},
                {"det", to_string(r.det)},
                {"dicycles", cycles}};
}

std::string counterexample_to_text(const CounterexampleReport& r) {
    std::ostringstream os;
    os << "sigma = " << r.sigma.cycle_string() << ", P_sigma is " << r.matrix.n() << "x"
       << r.matrix.n() << "\n";
    os << "per(P_sigma) = " << r.per << ", det(P_sigma) = " << r.det << "\n";
    os << "dicycles of G(P_sigma):\n";
    for (const auto& c : r.dicycles)
        os << "  " << dicycle_to_text(c) << "  (length " << c.length() << ", "
           << (c.even() ? "even" : "odd") << ")\n";
    os << "per = det although even dicycles exist: \"equal iff no even dicycle\" is not a "
          "characterization without further hypotheses\n";
    return os.str();
}

} // namespace perdet
