#pragma once

#include "coded/flower.hpp"

// Constructive strong-property-P witnesses: pattern words embedded into
// equal-length generator concatenations at a common offset, so that any
// block sequence realizes the chosen cylinders at arithmetic positions.

namespace coded {

struct Embedding {
    Word concatenation;      // shortest hub-anchored cover containing u
    long long offset = 0;    // position of u inside it
    std::vector<Word> parse; // generator-word decomposition
};

Embedding embed_in_concatenation(const FlowerAutomaton& a, const Word& u);

struct PropertyPWitness {
    std::vector<Word> cylinder_words;   // u_1 .. u_n
    std::pair<Word, Word> coprime_pair; // generator (or augmented) words v1, v2
    std::vector<Word> blocks;           // V^(1) .. V^(n), all of length block_len
    std::vector<std::vector<Word>> block_parses;
    long long prefix_len = 0; // l: offset of u_i inside V^(i)
    long long block_len = 0;  // N
};

// Builds the witness: embeds each u_i, left-pads to a common prefix length
// and right-pads to a common block length with concatenations of the coprime
// pair. Requires a relatively prime generator (a coprime pair is obtained by
// augmentation when absent).
PropertyPWitness build_witness(const FlowerAutomaton& a, const GeneratorSet& w,
                               const std::vector<Word>& words);

struct TuplePlan {
    bool exhaustive = true;
    int samples = 0;
    std::uint64_t seed = 0;

    static TuplePlan all() { return {true, 0, 0}; }
    static TuplePlan sample(int n, std::uint64_t seed) { return {false, n, seed}; }
};

// Checks, for each index tuple s of length k, that the concatenated blocks
// form a generator concatenation and that u_{s(j)} sits at offset
// l + (j-1) N. Returns true iff every checked tuple passes.
bool verify_witness(const FlowerAutomaton& a, const PropertyPWitness& w, int k, TuplePlan plan);

} // namespace coded
