#include "coded/spec_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace coded {

using nlohmann::json;

namespace {

Word get_word(const json& j, const char* field, Alphabet a) {
    if (!j.contains(field))
        throw error(std::string("spec: missing field \"") + field + "\"");
    return parse_word(j.at(field).get<std::string>(), a);
}

GeneratorFamily::Rule parse_family_rule(const json& j, Alphabet a) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "power_suffix")
        return PowerSuffixRule{get_word(j, "u", a), get_word(j, "v", a)};
    if (kind == "levels") {
        ExplicitLevelsRule rule;
        for (const auto& lvl : j.at("levels")) {
            std::vector<Word> ws;
            for (const auto& s : lvl) ws.push_back(parse_word(s.get<std::string>(), a));
            rule.levels.push_back(std::move(ws));
        }
        return rule;
    }
    throw error("spec: unknown family kind \"" + kind + "\"");
}

GeneratorFamily::Rule parse_u_rule(const json& j, Alphabet a, const Word& m) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") return HalfSyncPowerRule{m, get_word(j, "word", a)};
    if (kind == "mfree") return HalfSyncMFreeRule{m};
    if (kind == "list") {
        HalfSyncListRule rule;
        rule.m = m;
        for (const auto& s : j.at("words"))
            rule.us.push_back(parse_word(s.get<std::string>(), a));
        return rule;
    }
    throw error("spec: unknown U kind \"" + kind + "\"");
}

} // namespace

SystemSpec parse_spec(const json& j) {
    if (!j.contains("alphabet")) throw error("spec: missing field \"alphabet\"");
    Alphabet a(j.at("alphabet").get<int>());

    SystemSpec spec{a, CoverSpec{}, {}, std::nullopt};

    int payloads = (int)j.contains("generators") + (int)j.contains("family") +
                   (int)j.contains("half_sync") + (int)j.contains("cover");
    if (payloads != 1)
        throw error("spec: exactly one of generators / family / half_sync / cover required");

    if (j.contains("generators")) {
        std::vector<Word> ws;
        for (const auto& s : j.at("generators")) ws.push_back(parse_word(s.get<std::string>(), a));
        spec.payload = GeneratorSet(std::move(ws), a);
    } else if (j.contains("family")) {
        const json& f = j.at("family");
        spec.payload = GeneratorFamily(a, parse_family_rule(f, a));
        if (f.contains("level")) spec.level = f.at("level").get<int>();
    } else if (j.contains("half_sync")) {
        const json& h = j.at("half_sync");
        Word m = get_word(h, "m", a);
        HalfSyncSpec hs{m, parse_u_rule(h.at("U"), a, m), a};
        spec.payload = std::move(hs);
        if (h.contains("level")) spec.level = h.at("level").get<int>();
    } else {
        const json& c = j.at("cover");
        CoverSpec cs;
        if (c.contains("provider")) cs.provider = c.at("provider").get<std::string>();
        if (c.contains("substitution")) {
            const json& sub = c.at("substitution");
            int base = (int)sub.size();
            Alphabet ba(base);
            cs.substitution.resize((std::size_t)base, Word(SymString(), ba));
            for (auto it = sub.begin(); it != sub.end(); ++it) {
                int sym = std::stoi(it.key());
                if (sym < 0 || sym >= base) throw error("spec: substitution keys must be 0..k-1");
                cs.substitution[(std::size_t)sym] = parse_word(it.value().get<std::string>(), ba);
            }
        }
        if (!cs.provider && cs.substitution.empty())
            throw error("spec: cover needs a provider or a substitution");
        if (c.contains("k")) cs.k = c.at("k").get<int>();
        if (c.contains("window")) cs.window = c.at("window").get<int>();
        spec.payload = std::move(cs);
    }

    if (j.contains("defaults")) {
        const json& d = j.at("defaults");
        if (d.contains("len")) spec.defaults.len = d.at("len").get<int>();
        if (d.contains("horizon")) spec.defaults.horizon = d.at("horizon").get<long long>();
        if (d.contains("k_max")) spec.defaults.k_max = d.at("k_max").get<int>();
        if (d.contains("level")) spec.defaults.level = d.at("level").get<int>();
        if (d.contains("depth")) spec.defaults.depth = d.at("depth").get<int>();
    }
    return spec;
}

SystemSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open spec file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error("spec file " + path + ": " + e.what());
    }
    return parse_spec(j);
}

json render_spec(const SystemSpec& spec) {
    json j;
    j["alphabet"] = spec.alphabet.size;

    struct V {
        json& j;
        const SystemSpec& spec;
        void operator()(const GeneratorSet& g) const {
            json ws = json::array();
            for (const Word& w : g.words()) ws.push_back(format_word(w));
            j["generators"] = ws;
        }
        void operator()(const GeneratorFamily& f) const {
            json fam;
            if (const auto* r = std::get_if<PowerSuffixRule>(&f.rule())) {
                fam["kind"] = "power_suffix";
                fam["u"] = format_word(r->u);
                fam["v"] = format_word(r->v);
            } else if (const auto* r = std::get_if<ExplicitLevelsRule>(&f.rule())) {
                fam["kind"] = "levels";
                json lvls = json::array();
                for (const auto& lvl : r->levels) {
                    json ws = json::array();
                    for (const Word& w : lvl) ws.push_back(format_word(w));
                    lvls.push_back(ws);
                }
                fam["levels"] = lvls;
            } else {
                throw error("render_spec: family rule not renderable");
            }
            if (spec.level) fam["level"] = *spec.level;
            j["family"] = fam;
        }
        void operator()(const HalfSyncSpec& h) const {
            json hs;
            hs["m"] = format_word(h.m);
            json u;
            if (const auto* r = std::get_if<HalfSyncPowerRule>(&h.u_rule)) {
                u["kind"] = "power";
                u["word"] = format_word(r->base);
            } else if (std::get_if<HalfSyncMFreeRule>(&h.u_rule)) {
                u["kind"] = "mfree";
            } else if (const auto* r = std::get_if<HalfSyncListRule>(&h.u_rule)) {
                u["kind"] = "list";
                json ws = json::array();
                for (const Word& w : r->us) ws.push_back(format_word(w));
                u["words"] = ws;
            } else {
                throw error("render_spec: U rule not renderable");
            }
            hs["U"] = u;
            if (spec.level) hs["level"] = *spec.level;
            j["half_sync"] = hs;
        }
        void operator()(const CoverSpec& c) const {
            json cv;
            if (c.provider) cv["provider"] = *c.provider;
            if (!c.substitution.empty()) {
                json sub;
                for (std::size_t i = 0; i < c.substitution.size(); ++i)
                    sub[std::to_string(i)] = format_word(c.substitution[i]);
                cv["substitution"] = sub;
            }
            cv["k"] = c.k;
            cv["window"] = c.window;
            j["cover"] = cv;
        }
    };
    std::visit(V{j, spec}, spec.payload);

    j["defaults"] = {{"len", spec.defaults.len},
                     {"horizon", spec.defaults.horizon},
                     {"k_max", spec.defaults.k_max},
                     {"level", spec.defaults.level},
                     {"depth", spec.defaults.depth}};
    return j;
}

} // namespace coded
