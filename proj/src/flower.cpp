#include "coded/flower.hpp"

#include <algorithm>
#include <bit>

namespace coded {

FlowerAutomaton build_flower(const GeneratorSet& w) {
    int num_states = 1;
    for (const Word& g : w.words()) num_states += (int)g.size() - 1;

    std::vector<Edge> edges;
    std::vector<int> state_word(num_states, -1);
    std::vector<int> state_pos(num_states, 0);

    int fresh = 1;
    for (int wi = 0; wi < (int)w.words().size(); ++wi) {
        const Word& g = w.words()[wi];
        int cur = FlowerAutomaton::kHub;
        for (std::size_t i = 0; i < g.size(); ++i) {
            int nxt = (i + 1 == g.size()) ? FlowerAutomaton::kHub : fresh++;
            edges.push_back({cur, g[i], nxt});
            if (nxt != FlowerAutomaton::kHub) {
                state_word[nxt] = wi;
                state_pos[nxt] = (int)i + 1;
            }
            cur = nxt;
        }
    }
    return FlowerAutomaton(LabeledGraph(num_states, w.alphabet(), edges), w,
                           std::move(state_word), std::move(state_pos));
}

FlowerAutomaton build_flower(const GeneratorFamily& f, int level) {
    return build_flower(f.set_at(level));
}

bool contains(const FlowerAutomaton& a, const Word& w) {
    return graph_contains(a.graph(), w);
}

LanguageTable language(const FlowerAutomaton& a, int n) {
    return graph_language(a.graph(), n);
}

std::vector<Word> periodic_points(const FlowerAutomaton& a, int p) {
    if (p < 1) throw error("periodic_points: p must be >= 1");
    const LabeledGraph& g = a.graph();
    LanguageTable lang = graph_language(g, p);

    std::vector<Word> out;
    for (int m = 1; m <= lang.max_length && m <= p; ++m) {
        for (const Word& u : lang.at(m)) {
            if ((int)least_period(u) != m) continue;
            if (!(min_rotation(u) == u)) continue;

            // q -> q' iff a path labeled u runs q to q'; a cycle in this
            // relation yields the bi-infinite point u^inf.
            std::vector<StateMask> rel(g.num_states());
            for (int q = 0; q < g.num_states(); ++q)
                rel[q] = g.run(StateMask(1) << q, u);

            StateMask s = g.all_states();
            for (int it = 0; it <= g.num_states() && s; ++it) {
                StateMask t = 0;
                StateMask scan = s;
                while (scan) {
                    int q = std::countr_zero(scan);
                    scan &= scan - 1;
                    t |= rel[q];
                }
                s = t;
            }
            if (s) out.push_back(u);
        }
    }
    return out;
}

std::optional<std::vector<Word>> parse_concatenation(const GeneratorSet& w, const Word& target) {
    const std::size_t n = target.size();
    std::vector<int> choice(n + 1, -1); // word index ending a parse at position j
    std::vector<char> ok(n + 1, 0);
    ok[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        for (int wi = 0; wi < (int)w.words().size() && !ok[j]; ++wi) {
            const Word& g = w.words()[wi];
            if (g.size() > j || !ok[j - g.size()]) continue;
            if (target.symbols().compare(j - g.size(), g.size(), g.symbols()) == 0) {
                ok[j] = 1;
                choice[j] = wi;
            }
        }
    }
    if (!ok[n] || n == 0) {
        if (n == 0) return std::vector<Word>{};
        return std::nullopt;
    }
    std::vector<Word> parse;
    std::size_t j = n;
    while (j > 0) {
        const Word& g = w.words()[choice[j]];
        parse.push_back(g);
        j -= g.size();
    }
    std::reverse(parse.begin(), parse.end());
    return parse;
}

} // namespace coded
