#include "coded/run.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "coded/cover.hpp"
#include "coded/property_p.hpp"
#include "coded/syncsys.hpp"

namespace coded {

using nlohmann::json;

namespace {

bool log_enabled() {
    static const bool on = [] {
        const char* v = std::getenv("COD_LOG");
        return v && *v && std::string(v) != "0";
    }();
    return on;
}

void log(const std::string& msg) {
    if (log_enabled()) std::cerr << "[cod] " << msg << "\n";
}

int level_of(const SystemSpec& spec, const RunOptions& opts) {
    if (opts.level) return *opts.level;
    if (spec.level) return *spec.level;
    return spec.defaults.level;
}

GeneratorSet set_of(const SystemSpec& spec, const RunOptions& opts) {
    if (const auto* g = std::get_if<GeneratorSet>(&spec.payload)) return *g;
    if (const auto* f = std::get_if<GeneratorFamily>(&spec.payload)) {
        int lvl = level_of(spec, opts);
        log("truncating family at level " + std::to_string(lvl));
        return f->set_at(lvl);
    }
    if (const auto* h = std::get_if<HalfSyncSpec>(&spec.payload)) {
        int lvl = level_of(spec, opts);
        log("building half-synchronized family at level " + std::to_string(lvl));
        return build_half_sync(*h, lvl).set_at(lvl);
    }
    throw error("this command needs a generator-based spec, not a cover spec");
}

LineCoverSystem cover_of(const SystemSpec& spec) {
    const auto* c = std::get_if<CoverSpec>(&spec.payload);
    if (!c) throw error("this command needs a cover spec");
    SequenceProvider provider =
        c->provider ? SequenceProvider::by_name(*c->provider, c->k)
                    : SequenceProvider("custom", c->substitution, c->k);
    LineCoverSystem s(provider, c->window);
    if (s.alphabet().size != spec.alphabet.size)
        throw error("cover spec alphabet must be twice the base alphabet");
    return s;
}

Word word_arg(const SystemSpec& spec, const RunOptions& opts, std::size_t i,
              const char* what) {
    if (i >= opts.words.size())
        throw error(std::string("missing word argument: ") + what);
    return parse_word(opts.words[i], spec.alphabet);
}

json words_json(const std::vector<Word>& ws) {
    json out = json::array();
    for (const Word& w : ws) out.push_back(format_word(w));
    return out;
}

std::string bits(const std::vector<char>& v) {
    std::string s;
    s.reserve(v.size());
    for (char c : v) s.push_back(c ? '1' : '0');
    return s;
}

json return_json(const ReturnSetReport& r) {
    json j;
    j["u"] = format_word(r.u);
    j["v"] = format_word(r.v);
    j["horizon"] = r.horizon;
    j["present"] = bits(r.present);
    j["certified"] = r.certified;
    if (r.certified) {
        j["preperiod"] = r.preperiod;
        j["period"] = r.period;
        j["tail_cycle"] = bits(r.tail_cycle);
    }
    j["cofinite"] = verdict_name(r.cofinite);
    j["thickest_interval"] = r.thickest_interval;
    return j;
}

json classify_json(const DynamicsVerdict& v) {
    json j;
    j["transitive"] = verdict_name(v.transitive);
    j["totally_transitive"] = verdict_name(v.totally_transitive);
    j["weak_mixing"] = verdict_name(v.weak_mixing);
    j["mixing"] = verdict_name(v.mixing);
    j["word_length"] = v.word_length;
    j["horizon"] = v.horizon;
    j["k_max"] = v.k_max;
    if (v.failing_k) j["failing_k"] = v.failing_k;
    return j;
}

bool any_unknown(const DynamicsVerdict& v) {
    return v.transitive == Verdict::unknown || v.totally_transitive == Verdict::unknown ||
           v.weak_mixing == Verdict::unknown || v.mixing == Verdict::unknown;
}

void render_text(const json& j, std::ostream& os, int indent) {
    const std::string pad((std::size_t)indent * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           it.value().front().is_structured())) {
                os << pad << it.key() << ":\n";
                render_text(it.value(), os, indent + 1);
            } else if (it.value().is_array()) {
                os << pad << it.key() << ":";
                for (const auto& e : it.value()) os << " " << e.dump();
                os << "\n";
            } else {
                os << pad << it.key() << ": "
                   << (it.value().is_string() ? it.value().get<std::string>()
                                              : it.value().dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            os << pad << "-\n";
            render_text(e, os, indent + 1);
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {
        "lang",       "member",     "periodic",         "return-set",
        "classify",   "gcd",        "augment",          "frobenius",
        "property-p", "sync-word",  "sync-gen",         "half-sync-verify",
        "cover-lang", "cover-periodic", "cover-return", "sft-window"};
    return names;
}

Report run(const std::string& command, const SystemSpec& spec, const RunOptions& opts) {
    Report rep;
    rep.command = command;
    json& j = rep.data;
    j["command"] = command;

    const int len = opts.len.value_or(spec.defaults.len);
    const long long horizon = opts.horizon.value_or(spec.defaults.horizon);
    const int k_max = opts.k_max.value_or(spec.defaults.k_max);
    const int depth = opts.depth.value_or(spec.defaults.depth);

    if (command == "lang") {
        int n = opts.n.value_or(len);
        FlowerAutomaton a = build_flower(set_of(spec, opts));
        LanguageTable t = language(a, n);
        j["n"] = n;
        json levels = json::array();
        for (int m = 1; m <= n; ++m) levels.push_back(words_json(t.at(m)));
        j["words_by_length"] = levels;
    } else if (command == "member") {
        Word w = word_arg(spec, opts, 0, "the word to test");
        FlowerAutomaton a = build_flower(set_of(spec, opts));
        j["word"] = format_word(w);
        j["member"] = contains(a, w);
    } else if (command == "periodic") {
        int p = opts.n.value_or(len);
        FlowerAutomaton a = build_flower(set_of(spec, opts));
        std::vector<Word> pts = periodic_points(a, p);
        j["max_period"] = p;
        j["periodic_words"] = words_json(pts);
    } else if (command == "return-set") {
        Word u = word_arg(spec, opts, 0, "u");
        Word v = word_arg(spec, opts, 1, "v");
        FlowerAutomaton a = build_flower(set_of(spec, opts));
        ReturnSetReport r = return_set(a.graph(), u, v, horizon);
        j["return_set"] = return_json(r);
        rep.exit_status = r.certified ? 0 : 2;
    } else if (command == "classify") {
        FlowerAutomaton a = build_flower(set_of(spec, opts));
        DynamicsVerdict v = classify(a.graph(), len, horizon, k_max);
        j["classification"] = classify_json(v);
        rep.exit_status = any_unknown(v) ? 2 : 0;
    } else if (command == "gcd") {
        GeneratorSet w = set_of(spec, opts);
        j["generators"] = words_json(w.words());
        j["gcd_of_lengths"] = gcd_lengths(w);
    } else if (command == "augment") {
        GeneratorSet w = set_of(spec, opts);
        BezoutAugmentation b = bezout_augment(w);
        j["added"] = json::array({format_word(b.added.first), format_word(b.added.second)});
        j["added_lengths"] =
            json::array({b.coprime_pair_lengths.first, b.coprime_pair_lengths.second});
        j["coefficients"] = b.coefficients;
        j["augmented"] = words_json(b.augmented().words());
    } else if (command == "frobenius") {
        if (!opts.a1 || !opts.a2) throw error("frobenius needs --a1 and --a2");
        j["a1"] = *opts.a1;
        j["a2"] = *opts.a2;
        j["bound"] = frobenius_bound(*opts.a1, *opts.a2);
        if (opts.n) {
            auto r = represent((long long)*opts.n, *opts.a1, *opts.a2);
            j["n"] = *opts.n;
            if (r)
                j["representation"] = json::array({r->first, r->second});
            else
                j["representation"] = nullptr;
        }
    } else if (command == "property-p") {
        if (opts.words.empty()) throw error("property-p needs at least one cylinder word");
        GeneratorSet w = set_of(spec, opts);
        FlowerAutomaton a = build_flower(w);
        std::vector<Word> us;
        for (std::size_t i = 0; i < opts.words.size(); ++i)
            us.push_back(word_arg(spec, opts, i, "cylinder word"));
        PropertyPWitness wit = build_witness(a, w, us);
        int k = opts.k.value_or(2);
        TuplePlan plan = TuplePlan::all();
        if (opts.samples) {
            if (!opts.seed) throw error("sampled verification needs --seed");
            plan = TuplePlan::sample(*opts.samples, *opts.seed);
            j["samples"] = *opts.samples;
            j["seed"] = *opts.seed;
        }
        // verification needs the pair available as generators
        std::vector<Word> padded = w.words();
        padded.push_back(wit.coprime_pair.first);
        padded.push_back(wit.coprime_pair.second);
        FlowerAutomaton effective = build_flower(GeneratorSet(padded, w.alphabet()));
        j["coprime_pair"] = json::array({format_word(wit.coprime_pair.first),
                                         format_word(wit.coprime_pair.second)});
        j["prefix_len"] = wit.prefix_len;
        j["block_len"] = wit.block_len;
        j["blocks"] = words_json(wit.blocks);
        j["k"] = k;
        j["verified"] = verify_witness(effective, wit, k, plan);
    } else if (command == "sync-word") {
        Word w = word_arg(spec, opts, 0, "the candidate synchronizing word");
        FlowerAutomaton a = build_flower(set_of(spec, opts));
        SyncCheck c = is_synchronizing(a, w, opts.bound.value_or(12));
        j["word"] = format_word(w);
        j["synchronizing"] = verdict_name(c.verdict);
        if (c.counterexample)
            j["counterexample"] = json::array({format_word(c.counterexample->first),
                                               format_word(c.counterexample->second)});
        rep.exit_status = c.verdict == Verdict::unknown ? 2 : 0;
    } else if (command == "sync-gen") {
        Word alpha = word_arg(spec, opts, 0, "alpha");
        if (!opts.bound) throw error("sync-gen needs --bound");
        FlowerAutomaton a = build_flower(set_of(spec, opts));
        GeneratorSet g = synchronized_generator(a, alpha, *opts.bound);
        j["alpha"] = format_word(alpha);
        j["bound"] = *opts.bound;
        j["generators"] = words_json(g.words());
    } else if (command == "half-sync-verify") {
        const auto* h = std::get_if<HalfSyncSpec>(&spec.payload);
        if (!h) throw error("half-sync-verify needs a half_sync spec");
        int lvl = level_of(spec, opts);
        GeneratorFamily fam = build_half_sync(*h, lvl);
        FlowerAutomaton a = build_flower(fam, lvl);
        HalfSyncEvidence e = verify_half_sync(a, h->m, depth);
        j["m"] = format_word(h->m);
        j["level"] = lvl;
        j["depth"] = depth;
        j["follower_evidence"] =
            e == HalfSyncEvidence::consistent ? "consistent" : "inconsistent";
        // a consistent finite-depth comparison is evidence, not proof
        rep.exit_status = e == HalfSyncEvidence::consistent ? 2 : 0;
    } else if (command == "cover-lang") {
        int n = opts.n.value_or(len);
        LineCoverSystem s = cover_of(spec);
        j["n"] = n;
        j["words"] = words_json(cover_language(s, n));
    } else if (command == "cover-periodic") {
        int p = opts.n.value_or(len);
        LineCoverSystem s = cover_of(spec);
        json pts = json::array();
        for (const auto& [w, per] : cover_periodic(s, p))
            pts.push_back({{"word", format_word(w)}, {"least_period", per}});
        j["max_period"] = p;
        j["periodic_words"] = pts;
    } else if (command == "cover-return") {
        LineCoverSystem s = cover_of(spec);
        Word u = word_arg(spec, opts, 0, "u");
        Word v = word_arg(spec, opts, 1, "v");
        ReturnSetReport r = cover_return_set(s, u, v, horizon);
        j["return_set"] = return_json(r);
        rep.exit_status = 2; // window evidence only
    } else if (command == "sft-window") {
        LineCoverSystem s = cover_of(spec);
        int b = opts.b.value_or(1);
        SftWindow w = sft_window(s, b);
        j["b"] = b;
        j["states"] = w.graph.num_states();
        json edges = json::array();
        for (const Edge& e : w.graph.edges())
            edges.push_back({{"from", e.from - b}, {"sym", (int)e.sym}, {"to", e.to - b}});
        j["edges"] = edges;
        DynamicsVerdict v = classify(w.graph, 1, horizon, k_max);
        j["classification"] = classify_json(v);
        rep.exit_status = any_unknown(v) ? 2 : 0;
    } else {
        throw error("unknown command \"" + command + "\"");
    }

    j["exit_status"] = rep.exit_status;
    std::ostringstream os;
    render_text(j, os, 0);
    rep.text = os.str();
    return rep;
}

} // namespace coded
