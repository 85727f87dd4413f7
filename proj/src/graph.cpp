#include "coded/graph.hpp"

#include <algorithm>
#include <bit>

namespace coded {

LabeledGraph::LabeledGraph(int num_states, Alphabet alphabet, const std::vector<Edge>& edges)
    : num_states_(num_states), alphabet_(alphabet), edges_(edges) {
    if (num_states < 1 || num_states > 64)
        throw error("presentation must have between 1 and 64 states, got " +
                    std::to_string(num_states));
    next_.assign(alphabet_.size, std::vector<StateMask>(num_states_, 0));
    prev_.assign(alphabet_.size, std::vector<StateMask>(num_states_, 0));
    adj_.assign(num_states_, 0);
    for (const Edge& e : edges_) {
        if (e.from < 0 || e.from >= num_states_ || e.to < 0 || e.to >= num_states_)
            throw error("edge endpoint out of range");
        if (e.sym >= alphabet_.size) throw error("edge label out of alphabet");
        next_[e.sym][e.from] |= StateMask(1) << e.to;
        prev_[e.sym][e.to] |= StateMask(1) << e.from;
        adj_[e.from] |= StateMask(1) << e.to;
    }
}

StateMask LabeledGraph::step(StateMask from, Symbol sym) const {
    StateMask out = 0;
    const auto& t = next_[sym];
    while (from) {
        int q = std::countr_zero(from);
        from &= from - 1;
        out |= t[q];
    }
    return out;
}

StateMask LabeledGraph::step_back(StateMask to, Symbol sym) const {
    StateMask out = 0;
    const auto& t = prev_[sym];
    while (to) {
        int q = std::countr_zero(to);
        to &= to - 1;
        out |= t[q];
    }
    return out;
}

StateMask LabeledGraph::step_any(StateMask from) const {
    StateMask out = 0;
    while (from) {
        int q = std::countr_zero(from);
        from &= from - 1;
        out |= adj_[q];
    }
    return out;
}

StateMask LabeledGraph::run(StateMask from, const Word& w) const {
    StateMask m = from;
    for (Symbol s : w.symbols()) {
        if (!m) return 0;
        m = step(m, s);
    }
    return m;
}

StateMask LabeledGraph::co_run(StateMask into, const Word& w) const {
    StateMask m = into;
    const auto& s = w.symbols();
    for (std::size_t i = s.size(); i-- > 0;) {
        if (!m) return 0;
        m = step_back(m, s[i]);
    }
    return m;
}

bool LanguageTable::contains(const Word& w) const {
    int n = (int)w.size();
    if (n < 1 || n > max_length) return false;
    const auto& v = by_length[n];
    return std::binary_search(v.begin(), v.end(), w);
}

bool graph_contains(const LabeledGraph& g, const Word& w) {
    if (w.empty()) throw error("membership query on the empty word");
    return g.run(g.all_states(), w) != 0;
}

LanguageTable graph_language(const LabeledGraph& g, int n) {
    if (n < 1) throw error("language bound must be >= 1");
    LanguageTable table;
    table.max_length = n;
    table.by_length.assign(n + 1, {});

    // Extensions of distinct words are distinct, so each level is generated
    // already deduplicated and in shortlex order.
    std::vector<std::pair<Word, StateMask>> level;
    {
        Word eps(SymString(), g.alphabet());
        level.emplace_back(eps, g.all_states());
    }
    for (int len = 1; len <= n; ++len) {
        std::vector<std::pair<Word, StateMask>> next;
        next.reserve(level.size() * g.alphabet().size);
        auto& out = table.by_length[len];
        for (const auto& [w, m] : level) {
            for (int s = 0; s < g.alphabet().size; ++s) {
                StateMask m2 = g.step(m, (Symbol)s);
                if (!m2) continue;
                Word w2 = w + Word(SymString(1, (Symbol)s), g.alphabet());
                out.push_back(w2);
                next.emplace_back(std::move(w2), m2);
            }
        }
        level = std::move(next);
        if (level.empty()) break;
    }
    return table;
}

std::vector<Word> words_from(const LabeledGraph& g, StateMask start, int d) {
    if (d < 1) throw error("depth must be >= 1");
    std::vector<std::pair<Word, StateMask>> level;
    level.emplace_back(Word(SymString(), g.alphabet()), start);
    for (int len = 1; len <= d; ++len) {
        std::vector<std::pair<Word, StateMask>> next;
        for (const auto& [w, m] : level) {
            for (int s = 0; s < g.alphabet().size; ++s) {
                StateMask m2 = g.step(m, (Symbol)s);
                if (!m2) continue;
                next.emplace_back(w + Word(SymString(1, (Symbol)s), g.alphabet()), m2);
            }
        }
        level = std::move(next);
    }
    std::vector<Word> out;
    out.reserve(level.size());
    for (auto& [w, m] : level) out.push_back(std::move(w));
    return out;
}

} // namespace coded
