#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <variant>

#include "coded/cover.hpp"
#include "coded/syncsys.hpp"

// System-spec files: JSON descriptions of the object under analysis
// (generator set, generator family, half-synchronized family, or line
// cover) plus analysis defaults.

namespace coded {

struct AnalysisDefaults {
    int len = 3;
    long long horizon = 64;
    int k_max = 6;
    int level = 6;
    int depth = 4;
};

struct CoverSpec {
    std::optional<std::string> provider;
    std::vector<Word> substitution; // rules by symbol when no named provider
    int k = 1;
    int window = 64;
};

struct SystemSpec {
    Alphabet alphabet{2};
    std::variant<GeneratorSet, GeneratorFamily, HalfSyncSpec, CoverSpec> payload;
    AnalysisDefaults defaults;
    std::optional<int> level; // truncation level for family payloads
};

SystemSpec parse_spec(const nlohmann::json& j);
SystemSpec parse_spec_file(const std::string& path);
nlohmann::json render_spec(const SystemSpec& spec);

} // namespace coded
