#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "coded/words.hpp"

// Generator sets, gcd of element lengths, the Bezout augmentation producing a
// coprime-length pair, and representability bounds for two coprime lengths.

namespace coded {

class GeneratorSet {
public:
    GeneratorSet(std::vector<Word> words, Alphabet alphabet);

    const std::vector<Word>& words() const { return words_; }
    Alphabet alphabet() const { return alphabet_; }
    std::size_t size() const { return words_.size(); }

    bool contains_word(const Word& w) const;

private:
    std::vector<Word> words_; // canonical: deduplicated, shortlex sorted
    Alphabet alphabet_;
};

// gcd of the lengths of all elements.
long long gcd_lengths(const GeneratorSet& w);

struct BezoutAugmentation {
    GeneratorSet original;
    std::pair<Word, Word> added;
    // coefficients[i] is the signed exponent of original word i in the added
    // pair: positive exponents build added.first, negative ones added.second.
    std::vector<long long> coefficients;
    std::pair<long long, long long> coprime_pair_lengths;

    GeneratorSet augmented() const;
};

// Extends W with two words of coprime length built from concatenations of
// W's elements. If W already holds a coprime-length pair those two words are
// returned unchanged. Rejects gcd_lengths(W) > 1.
BezoutAugmentation bezout_augment(const GeneratorSet& w);

// Least L such that every n >= L is r1*a1 + r2*a2 with r1, r2 >= 0.
// Equals (a1-1)(a2-1); requires gcd(a1,a2) = 1.
long long frobenius_bound(long long a1, long long a2);

// Representation of n with minimal r2, or nullopt.
std::optional<std::pair<long long, long long>> represent(long long n, long long a1, long long a2);

// ---------------------------------------------------------------------------
// Countable generator families, approximated from below by nested finite
// truncations W_t.

struct PowerSuffixRule { // { u^n v : n <= t }
    Word u, v;
};
struct ExplicitLevelsRule { // cumulative word lists per level
    std::vector<std::vector<Word>> levels;
};
struct HalfSyncPowerRule { // { (base^j) m : |base^j| <= t }
    Word m, base;
};
struct HalfSyncMFreeRule { // { u m : u avoids m as a factor, |u| <= t }
    Word m;
};
struct HalfSyncListRule { // { u m : u in list, |u| <= t }
    Word m;
    std::vector<Word> us;
};

class GeneratorFamily {
public:
    using Rule = std::variant<GeneratorSet, PowerSuffixRule, ExplicitLevelsRule,
                              HalfSyncPowerRule, HalfSyncMFreeRule, HalfSyncListRule>;

    GeneratorFamily(Alphabet a, Rule rule) : alphabet_(a), rule_(std::move(rule)) {}

    bool finite() const { return std::holds_alternative<GeneratorSet>(rule_); }
    Alphabet alphabet() const { return alphabet_; }
    const Rule& rule() const { return rule_; }

    // Truncation W_t. Nested: set_at(t) is a subset of set_at(t+1).
    GeneratorSet set_at(int level) const;

private:
    Alphabet alphabet_;
    Rule rule_;
};

} // namespace coded
