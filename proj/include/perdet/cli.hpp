#pragma once

#include "perdet/digraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace perdet {

enum class Command {
    check,          // per = |det| decision with witnesses
    check_powers,   // per(A^k) = det(A^k) for all k
    find_tau,       // nonzero-diagonal permutation by matching
    cycles,         // dicycle listing with even/odd tally
    triangularize,  // P A Q upper triangular
    oracle,         // exact per/det table of powers
    pattern,        // pattern-class decision with sampled cross-checks
    counterexample, // the 8x8 permutation-matrix regression case
};

enum class OutputFormat { text, structured };

struct RunConfig {
    Command command = Command::check;
    std::optional<std::string> input_path;
    int k_max = 8;
    std::uint64_t seed = 0;
    std::size_t cycle_cap = kCycleCap;
    int trials = 10;
    OutputFormat format = OutputFormat::text;
};

// Exit status: 0 holds, 1 fails, 2 inapplicable, 3 input/parse error,
// 4 cap exceeded. These are the only machine-facing channel; the text
// report may change freely.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInapplicable = 2;
inline constexpr int kExitParseError = 3;
inline constexpr int kExitCapExceeded = 4;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace perdet
