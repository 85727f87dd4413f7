#include "coded/syncsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace coded {

FollowerTable follower_set(const FlowerAutomaton& a, const Word& w, int d) {
    if (!contains(a, w)) throw error("follower_set: word not in the language");
    if (d < 1) throw error("follower_set: depth must be >= 1");
    StateMask ends = a.graph().run(a.graph().all_states(), w);
    return FollowerTable{w, d, words_from(a.graph(), ends, d)};
}

namespace {

// Is L(from_b) a subset of L(from_a)? Both are path-label languages of state
// sets in g. Returns a shortest word in L(from_b) \ L(from_a) otherwise.
std::optional<Word> language_gap(const LabeledGraph& g, StateMask from_a, StateMask from_b) {
    std::set<std::pair<StateMask, StateMask>> seen;
    std::deque<std::pair<std::pair<StateMask, StateMask>, Word>> queue;
    Word eps{SymString(), g.alphabet()};
    queue.push_back({{from_a, from_b}, eps});
    seen.insert({from_a, from_b});
    while (!queue.empty()) {
        auto [masks, w] = queue.front();
        queue.pop_front();
        for (int s = 0; s < g.alphabet().size; ++s) {
            StateMask a2 = g.step(masks.first, (Symbol)s);
            StateMask b2 = g.step(masks.second, (Symbol)s);
            if (!b2) continue;
            Word w2 = w + Word(SymString(1, (Symbol)s), g.alphabet());
            if (!a2) return w2;
            if (seen.insert({a2, b2}).second) queue.push_back({{a2, b2}, std::move(w2)});
        }
    }
    return std::nullopt;
}

} // namespace

SyncCheck is_synchronizing(const FlowerAutomaton& a, const Word& w, int len_bound) {
    if (!contains(a, w)) throw error("is_synchronizing: word not in the language");
    const LabeledGraph& g = a.graph();
    const StateMask ends_w = g.run(g.all_states(), w);

    // All state sets reachable as delta(Q, u) over left contexts u, with a
    // shortest representative context each.
    std::map<StateMask, Word> contexts;
    std::deque<StateMask> queue;
    Word eps{SymString(), g.alphabet()};
    contexts.emplace(g.all_states(), eps);
    queue.push_back(g.all_states());
    while (!queue.empty()) {
        StateMask cur = queue.front();
        queue.pop_front();
        const Word u = contexts.at(cur);
        if (contexts.size() > 200000) return SyncCheck{Verdict::unknown, std::nullopt};
        for (int s = 0; s < g.alphabet().size; ++s) {
            StateMask nxt = g.step(cur, (Symbol)s);
            if (!nxt) continue;
            if (contexts.emplace(nxt, u + Word(SymString(1, (Symbol)s), g.alphabet())).second)
                queue.push_back(nxt);
        }
    }

    for (const auto& [ctx_mask, u] : contexts) {
        StateMask after_w = g.run(ctx_mask, w);
        if (!after_w) continue; // uw not in L
        // after_w is a subset of ends_w, so only one inclusion can fail.
        if (auto v = language_gap(g, after_w, ends_w)) {
            if ((int)u.size() <= len_bound && (int)v->size() <= len_bound)
                return SyncCheck{Verdict::no, std::make_pair(u, *v)};
            return SyncCheck{Verdict::no, std::nullopt};
        }
    }
    return SyncCheck{Verdict::yes, std::nullopt};
}

GeneratorSet synchronized_generator(const FlowerAutomaton& a, const Word& alpha, int bound) {
    if (!contains(a, alpha)) throw error("synchronized_generator: alpha not in the language");
    if (bound < (int)alpha.size())
        throw error("synchronized_generator: bound below |alpha|");
    const LabeledGraph& g = a.graph();
    const int wmax = bound - (int)alpha.size();

    std::vector<Word> out;
    // DFS over candidate interior words w, alpha-factor-free, pruned by the
    // reachable state set after alpha w.
    struct Item {
        Word w;
        StateMask mask;
    };
    std::vector<Item> stack;
    stack.push_back({Word(SymString(), g.alphabet()), g.run(g.all_states(), alpha)});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        if (g.run(it.mask, alpha) != 0) out.push_back(it.w + alpha);
        if ((int)it.w.size() >= wmax) continue;
        for (int s = g.alphabet().size - 1; s >= 0; --s) {
            Word w2 = it.w + Word(SymString(1, (Symbol)s), g.alphabet());
            if (is_factor(alpha, w2)) continue;
            StateMask m2 = g.step(it.mask, (Symbol)s);
            if (!m2) continue;
            stack.push_back({std::move(w2), m2});
        }
    }
    if (out.empty()) throw error("synchronized_generator: empty result (alpha alpha not in L?)");
    return GeneratorSet(std::move(out), g.alphabet());
}

namespace {

std::vector<Word> enumerate_u(const HalfSyncSpec& spec, int level) {
    GeneratorFamily fam(spec.alphabet, spec.u_rule);
    GeneratorSet with_m = fam.set_at(level);
    // Strip the trailing m to recover U's enumerated prefix.
    const Word& m = spec.m;
    std::vector<Word> us;
    for (const Word& w : with_m.words()) {
        if (w.size() < m.size() ||
            w.symbols().compare(w.size() - m.size(), m.size(), m.symbols()) != 0)
            throw error("half-sync rule produced a word not ending in m");
        us.push_back(w.subword(0, w.size() - m.size()));
    }
    return us;
}

struct UMemberVisitor {
    const Word& u;
    bool operator()(const HalfSyncPowerRule& r) const {
        if (u.empty()) return true;
        if (r.base.empty() || u.size() % r.base.size()) return false;
        return power(r.base, u.size() / r.base.size()) == u;
    }
    bool operator()(const HalfSyncMFreeRule& r) const { return !is_factor(r.m, u); }
    bool operator()(const HalfSyncListRule& r) const {
        return std::find(r.us.begin(), r.us.end(), u) != r.us.end();
    }
    template <typename T>
    bool operator()(const T&) const {
        throw error("half-sync spec requires a half-sync U rule");
    }
};

bool u_member(const HalfSyncSpec& spec, const Word& u) {
    return std::visit(UMemberVisitor{u}, spec.u_rule);
}

} // namespace

GeneratorFamily build_half_sync(const HalfSyncSpec& spec, int level) {
    if (spec.m.empty()) throw error("half-sync word m must be non-empty");
    std::vector<Word> us = enumerate_u(spec, level);
    const Word& m = spec.m;
    for (const Word& u : us) {
        // every u = u1 m u2 must have u2 in U
        const auto& s = u.symbols();
        for (std::size_t i = 0; i + m.size() <= s.size(); ++i) {
            if (s.compare(i, m.size(), m.symbols()) != 0) continue;
            Word u2 = u.subword(i + m.size(), s.size() - i - m.size());
            if (!u_member(spec, u2))
                throw error("half-sync closure violation: u = " + format_word(u) +
                            " splits as u1·m·u2 with u2 = " +
                            (u2.empty() ? std::string("(empty)") : format_word(u2)) +
                            " not in U");
        }
    }
    return GeneratorFamily(spec.alphabet, spec.u_rule);
}

HalfSyncEvidence verify_half_sync(const FlowerAutomaton& a, const Word& m, int d) {
    if (!contains(a, m)) throw error("verify_half_sync: m not in the language");
    if (d < 1) throw error("verify_half_sync: depth must be >= 1");
    FollowerTable ref = follower_set(a, m, d);

    int cmax = d + (int)m.size();
    LanguageTable lang = language(a, cmax);
    for (int n = (int)m.size(); n <= cmax; ++n) {
        for (const Word& c : lang.at(n)) {
            if (c.symbols().compare(c.size() - m.size(), m.size(), m.symbols()) != 0) continue;
            FollowerTable f = follower_set(a, c, d);
            if (!(f.extensions == ref.extensions)) return HalfSyncEvidence::inconsistent;
        }
    }
    return HalfSyncEvidence::consistent;
}

} // namespace coded
