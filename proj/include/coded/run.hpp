#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coded/spec_io.hpp"

// Command dispatch: every analysis exposed by the library behind a uniform
// (command, spec, options) -> Report interface shared by the CLI and tests.

namespace coded {

struct RunOptions {
    std::optional<int> len;
    std::optional<long long> horizon;
    std::optional<int> k_max;
    std::optional<int> level;
    std::optional<int> depth;
    std::optional<int> bound;
    std::optional<int> n;
    std::optional<int> b;
    std::optional<int> k;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<long long> a1, a2;
    std::vector<std::string> words; // positional word arguments
};

struct Report {
    std::string command;
    nlohmann::json data;    // machine-readable payload
    std::string text;       // plain rendering of the same data
    int exit_status = 0;    // 0 definite, 2 unknown (errors are thrown)
};

// Dispatches to the owning module. Throws coded::error on unknown commands
// and precondition failures; the CLI maps those to exit status 1.
Report run(const std::string& command, const SystemSpec& spec, const RunOptions& opts);

const std::vector<std::string>& command_names();

} // namespace coded
