#include <CLI11.hpp>
#include <iostream>

#include "coded/run.hpp"

// codedshift <command> [words...] --spec file.json [flags]
//
// Exit status: 0 definite verdict, 1 error, 2 analysis returned "unknown".

int main(int argc, char** argv) {
    CLI::App app{"Analyzer for coded shift spaces"};
    app.require_subcommand(0, 0);

    std::string command, spec_path;
    std::vector<std::string> words;
    coded::RunOptions opts;
    bool as_json = false;

    app.add_option("command", command, "One of: " + [] {
                       std::string s;
                       for (const auto& n : coded::command_names())
                           s += (s.empty() ? "" : ", ") + n;
                       return s;
                   }())
        ->required();
    app.add_option("words", words, "Word arguments (digit strings, or comma-separated symbols)");
    app.add_option("--spec", spec_path, "System-spec JSON file");
    app.add_flag("--json", as_json, "Emit the report as JSON");

    auto opt = [&](const char* name, auto& slot, const char* help) {
        using T = typename std::decay_t<decltype(slot)>::value_type;
        app.add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
    };
    opt("--len", opts.len, "Cylinder word length for classify");
    opt("--horizon", opts.horizon, "Return-set horizon");
    opt("--k-max", opts.k_max, "Largest subsampling power reported");
    opt("--level", opts.level, "Family truncation level");
    opt("--depth", opts.depth, "Follower-set comparison depth");
    opt("--bound", opts.bound, "Length bound (sync-gen, sync-word counterexamples)");
    opt("-n,--n", opts.n, "Length / period / represented number, per command");
    opt("-b,--b", opts.b, "Window radius for sft-window");
    opt("-k,--k", opts.k, "Tuple length for property-p");
    opt("--samples", opts.samples, "Sampled tuples for property-p (default exhaustive)");
    opt("--seed", opts.seed, "RNG seed; required whenever sampling is requested");
    opt("--a1", opts.a1, "First coprime length for frobenius");
    opt("--a2", opts.a2, "Second coprime length for frobenius");

    CLI11_PARSE(app, argc, argv);
    opts.words = words;

    try {
        coded::SystemSpec spec{coded::Alphabet(2), coded::CoverSpec{}, {}, std::nullopt};
        if (!spec_path.empty())
            spec = coded::parse_spec_file(spec_path);
        else if (command != "frobenius")
            throw coded::error("this command needs --spec");
        coded::Report rep = coded::run(command, spec, opts);
        if (as_json)
            std::cout << rep.data.dump(2) << "\n";
        else
            std::cout << rep.text;
        return rep.exit_status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
