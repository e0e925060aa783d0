#include "perdet/cli.hpp"

#include "perdet/core.hpp"
#include "perdet/errors.hpp"
#include "perdet/io.hpp"
#include "perdet/matching.hpp"
#include "perdet/oracle.hpp"
#include "perdet/report.hpp"
#include "perdet/verdicts.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <ostream>

namespace perdet {

using nlohmann::json;

namespace {

const char* command_name(Command c) {
    switch (c) {
    case Command::check: return "check";
    case Command::check_powers: return "check-powers";
    case Command::find_tau: return "find-tau";
    case Command::cycles: return "cycles";
    case Command::triangularize: return "triangularize";
    case Command::oracle: return "oracle";
    case Command::pattern: return "pattern";
    case Command::counterexample: return "counterexample";
    }
    return "?";
}

SquareMatrix load_matrix(const RunConfig& config) {
    if (!config.input_path) throw std::runtime_error("this command needs --input FILE");
    return read_matrix_file(*config.input_path);
}

int verdict_exit(const Verdict& v) {
    if (v.cap_exceeded) return kExitCapExceeded;
    switch (v.decision) {
    case Decision::holds: return kExitHolds;
    case Decision::fails: return kExitFails;
    case Decision::inapplicable: return kExitInapplicable;
    }
    return kExitInapplicable;
}

void emit(const RunConfig& config, std::ostream& out, const json& doc, const std::string& text) {
    if (config.format == OutputFormat::structured)
        out << doc.dump(2) << "\n";
    else
        out << text;
}

int run_verdict_command(const RunConfig& config, std::ostream& out, const Verdict& v) {
    json doc{{"command", command_name(config.command)},
             {"input", config.input_path ? json(*config.input_path) : json(nullptr)},
             {"verdict", verdict_to_json(v)}};
    emit(config, out, doc, verdict_to_text(v));
    return verdict_exit(v);
}

int run_find_tau(const RunConfig& config, std::ostream& out) {
    const SquareMatrix a = load_matrix(config);
    const auto tau = find_nonzero_diagonal(a);
    json doc{{"command", command_name(config.command)},
             {"input", json(*config.input_path)}};
    if (tau) {
        doc["tau"] = json{{"cycles", tau->cycle_string()}, {"images", tau->images()}};
        doc["sign"] = tau->sign();
        emit(config, out, doc,
             "tau = " + tau->cycle_string() + "  [sign " + (tau->sign() == 1 ? "+1" : "-1") +
                 "]\nL_tau(A) = " + to_string(diagonal_product(a, *tau)) + "\n");
        return kExitHolds;
    }
    doc["tau"] = nullptr;
    std::string text = "no nonzero diagonal: per(A) = 0\n";
    if (auto block = zero_block_witness(a)) {
        doc["zero_block"] = json{{"rows", block->rows}, {"cols", block->cols}};
        text += "zero block rows {";
        for (std::size_t t = 0; t < block->rows.size(); ++t)
            text += (t ? "," : "") + std::to_string(block->rows[t]);
        text += "} x cols {";
        for (std::size_t t = 0; t < block->cols.size(); ++t)
            text += (t ? "," : "") + std::to_string(block->cols[t]);
        text += "}\n";
    }
    emit(config, out, doc, text);
    return kExitFails;
}

int run_cycles(const RunConfig& config, std::ostream& out) {
    const SquareMatrix a = load_matrix(config);
    const Digraph g = build_digraph(a);
    const auto cycles = enumerate_dicycles(g, config.cycle_cap);

    int even = 0, odd = 0;
    json cycle_list = json::array();
    std::string text;
    for (const auto& c : cycles) {
        (c.even() ? even : odd) += 1;
        cycle_list.push_back(c.vertices);
        text += "  " + dicycle_to_text(c) + "  (length " + std::to_string(c.length()) + ", " +
                (c.even() ? "even" : "odd") + ")\n";
    }
    json doc{{"command", command_name(config.command)},
             {"input", json(*config.input_path)},
             {"n", g.n()},
             {"arc_count", g.arc_count()},
             {"dicycles", cycle_list},
             {"even_count", even},
             {"odd_count", odd}};
    std::string head = "digraph on " + std::to_string(g.n()) + " vertices, " +
                       std::to_string(g.arc_count()) + " arcs\n" +
                       std::to_string(cycles.size()) + " dicycles (" + std::to_string(even) +
                       " even, " + std::to_string(odd) + " odd)\n";
    emit(config, out, doc, head + text);
    return even == 0 ? kExitHolds : kExitFails;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
    const SquareMatrix a = load_matrix(config);
    const auto rows = oracle_compare(a, config.k_max);
    json doc{{"command", command_name(config.command)},
             {"input", json(*config.input_path)},
             {"rows", oracle_rows_to_json(rows)}};
    emit(config, out, doc, oracle_rows_to_text(rows));
    for (const auto& row : rows)
        if (!row.equal) return kExitFails;
    return kExitHolds;
}

int run_counterexample(const RunConfig& config, std::ostream& out) {
    const CounterexampleReport report = reproduce_counterexample();
    json doc{{"command", command_name(config.command)},
             {"report", counterexample_to_json(report)}};
    emit(config, out, doc, counterexample_to_text(report));
    return kExitHolds;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    CheckOptions opt;
    opt.k_max = config.k_max;
    opt.cycle_cap = config.cycle_cap;
    try {
        switch (config.command) {
        case Command::check:
            return run_verdict_command(config, out, check_abs_eq(load_matrix(config), opt));
        case Command::check_powers:
            return run_verdict_command(config, out, check_powers_general(load_matrix(config), opt));
        case Command::find_tau:
            return run_find_tau(config, out);
        case Command::cycles:
            return run_cycles(config, out);
        case Command::triangularize:
            return run_verdict_command(config, out, triangularize(load_matrix(config), opt));
        case Command::oracle:
            return run_oracle(config, out);
        case Command::pattern: {
            if (!config.input_path) throw std::runtime_error("this command needs --input FILE");
            const ZeroPattern gamma = read_pattern_file(*config.input_path);
            return run_verdict_command(config, out,
                                       check_pattern(gamma, config.trials, config.seed, opt));
        }
        case Command::counterexample:
            return run_counterexample(config, out);
        }
        err << "unknown command\n";
        return kExitParseError;
    } catch (const ParseError& e) {
        err << (config.input_path ? *config.input_path : std::string("<input>")) << ":"
            << e.what() << "\n";
        return kExitParseError;
    } catch (const CycleCapExceeded& e) {
        err << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitParseError;
    }
}

} // namespace perdet
