#pragma once

#include <cstdint>
#include <vector>

#include "coded/words.hpp"

// Labeled-graph shift presentations and the NFA machinery shared by the
// flower automaton, the follower-set analysis and the windowed SFT covers.
// State sets are 64-bit masks; presentations are capped at 64 states.

namespace coded {

using StateMask = std::uint64_t;

struct Edge {
    int from;
    Symbol sym;
    int to;
};

class LabeledGraph {
public:
    LabeledGraph(int num_states, Alphabet alphabet, const std::vector<Edge>& edges);

    int num_states() const { return num_states_; }
    Alphabet alphabet() const { return alphabet_; }
    const std::vector<Edge>& edges() const { return edges_; }

    StateMask all_states() const {
        return num_states_ == 64 ? ~StateMask(0) : ((StateMask(1) << num_states_) - 1);
    }

    // One forward/backward step along edges labeled sym.
    StateMask step(StateMask from, Symbol sym) const;
    StateMask step_back(StateMask to, Symbol sym) const;

    // Any-symbol adjacency step.
    StateMask step_any(StateMask from) const;

    // End states of w-paths that start inside `from`.
    StateMask run(StateMask from, const Word& w) const;
    // States from which a w-path exists into `into`.
    StateMask co_run(StateMask into, const Word& w) const;

private:
    int num_states_;
    Alphabet alphabet_;
    std::vector<Edge> edges_;
    std::vector<std::vector<StateMask>> next_; // [sym][state]
    std::vector<std::vector<StateMask>> prev_;
    std::vector<StateMask> adj_;
};

struct LanguageTable {
    // by_length[n] is L_n, shortlex sorted; index 0 unused.
    std::vector<std::vector<Word>> by_length;
    int max_length = 0;

    const std::vector<Word>& at(int n) const { return by_length.at(n); }
    bool contains(const Word& w) const;
};

// True iff some path in g is labeled w. For presentations where every state
// is bi-extendable this is membership in the presented language.
bool graph_contains(const LabeledGraph& g, const Word& w);

// Exact L_m for all m <= n by breadth-first path enumeration.
LanguageTable graph_language(const LabeledGraph& g, int n);

// All length-d words readable starting from the given state set.
std::vector<Word> words_from(const LabeledGraph& g, StateMask start, int d);

} // namespace coded
