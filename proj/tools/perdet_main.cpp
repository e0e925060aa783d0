// Command-line front door: parse flags into a RunConfig and dispatch.
#include "perdet/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Exact permanent-vs-determinant checks for nonnegative rational matrices"};
    app.require_subcommand(1);

    perdet::RunConfig config;
    std::string format = "text";
    std::string input;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* in = cmd->add_option("--input", input, "matrix or pattern file");
        if (needs_input) in->required();
        cmd->add_option("--kmax", config.k_max, "power sweep bound")->capture_default_str();
        cmd->add_option("--seed", config.seed, "seed for sampled members")->capture_default_str();
        cmd->add_option("--cycle-cap", config.cycle_cap, "dicycle enumeration cap")
            ->capture_default_str();
        cmd->add_option("--format", format, "text|structured")
            ->check(CLI::IsMember({"text", "structured"}))
            ->capture_default_str();
        return cmd;
    };

    struct Sub {
        CLI::App* cmd;
        perdet::Command command;
    };
    std::vector<Sub> subs{
        {add_common(app.add_subcommand("check", "decide per(A) = |det(A)| with witnesses"), true),
         perdet::Command::check},
        {add_common(app.add_subcommand("check-powers",
                                       "decide per(A^k) = det(A^k) for every k >= 1"),
                    true),
         perdet::Command::check_powers},
        {add_common(app.add_subcommand("find-tau",
                                       "find a permutation with nonzero diagonal product"),
                    true),
         perdet::Command::find_tau},
        {add_common(app.add_subcommand("cycles", "list the dicycles of G(A) with parity tally"),
                    true),
         perdet::Command::cycles},
        {add_common(app.add_subcommand("triangularize",
                                       "find P, Q with P A Q upper triangular"),
                    true),
         perdet::Command::triangularize},
        {add_common(app.add_subcommand("oracle", "exact per/det table for powers of A"), true),
         perdet::Command::oracle},
        {add_common(app.add_subcommand("pattern", "decide per = +-det across a pattern class"),
                    true),
         perdet::Command::pattern},
        {add_common(app.add_subcommand("counterexample",
                                       "reproduce the 8x8 even-dicycle counterexample"),
                    false),
         perdet::Command::counterexample},
    };
    for (auto& sub : subs)
        if (sub.command == perdet::Command::pattern)
            sub.cmd->add_option("--trials", config.trials, "sampled members to cross-check")
                ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    for (const auto& sub : subs)
        if (sub.cmd->parsed()) {
            config.command = sub.command;
            break;
        }
    if (!input.empty()) config.input_path = input;
    config.format =
        format == "structured" ? perdet::OutputFormat::structured : perdet::OutputFormat::text;

    return perdet::run(config, std::cout, std::cerr);
}
