#pragma once

#include "coded/generators.hpp"
#include "coded/graph.hpp"

// The flower automaton: one hub, one labeled cycle per generator word. Its
// path labels are exactly the language of the coded system X(W) when W is
// finite.

namespace coded {

class FlowerAutomaton {
public:
    static constexpr int kHub = 0;

    FlowerAutomaton(LabeledGraph graph, GeneratorSet origin,
                    std::vector<int> state_word, std::vector<int> state_pos)
        : graph_(std::move(graph)), origin_(std::move(origin)),
          state_word_(std::move(state_word)), state_pos_(std::move(state_pos)) {}

    const LabeledGraph& graph() const { return graph_; }
    const GeneratorSet& origin() const { return origin_; }
    Alphabet alphabet() const { return graph_.alphabet(); }

    // Which generator word a state lies on and at which interior position;
    // the hub reports (-1, 0).
    int word_of(int state) const { return state_word_[state]; }
    int pos_of(int state) const { return state_pos_[state]; }

private:
    LabeledGraph graph_;
    GeneratorSet origin_;
    std::vector<int> state_word_;
    std::vector<int> state_pos_;
};

FlowerAutomaton build_flower(const GeneratorSet& w);
FlowerAutomaton build_flower(const GeneratorFamily& f, int level);

bool contains(const FlowerAutomaton& a, const Word& w);

LanguageTable language(const FlowerAutomaton& a, int n);

// All u with |u| <= p, u in least period and lexicographically minimal among
// its rotations, such that the bi-infinite repetition of u lies in X(W).
// Decided exactly via a cycle search in the u-labeled state relation.
std::vector<Word> periodic_points(const FlowerAutomaton& a, int p);

// Exact parse of w as a concatenation of generator words, if one exists.
// Independent of hub bookkeeping beyond the word list itself.
std::optional<std::vector<Word>> parse_concatenation(const GeneratorSet& w, const Word& target);

} // namespace coded
