#pragma once

#include "coded/dynamics.hpp"
#include "coded/flower.hpp"

// Synchronizing-word detection, the synchronized-system generator built from
// a synchronizing word, finite-depth follower sets, and the half-synchronized
// builder and verifier.

namespace coded {

struct FollowerTable {
    Word base;
    int depth = 0;
    std::vector<Word> extensions; // shortlex sorted
};

// Exact { v in L_d : wv in L }.
FollowerTable follower_set(const FlowerAutomaton& a, const Word& w, int d);

struct SyncCheck {
    Verdict verdict = Verdict::unknown;
    // Populated for verdict "no": uw, wv in L but uwv not in L.
    std::optional<std::pair<Word, Word>> counterexample;
};

// Is w synchronizing: uw, wv in L implies uwv in L. Exact for finite W via
// follower-language comparison over all reachable left-context state sets;
// len_bound caps the counterexample search.
SyncCheck is_synchronizing(const FlowerAutomaton& a, const Word& w, int len_bound);

// { w*alpha : alpha w alpha in L, alpha not a factor of w }, truncated to
// |w alpha| <= bound. The empty w is admitted when alpha alpha is in L.
GeneratorSet synchronized_generator(const FlowerAutomaton& a, const Word& alpha, int bound);

struct HalfSyncSpec {
    Word m;
    GeneratorFamily::Rule u_rule; // one of the HalfSync* rules
    Alphabet alphabet;
};

// Validates the suffix-closure condition (u = u1 m u2 in U implies u2 in U)
// on the enumerated prefix of U and returns the family W_t = { u m }.
// Closure violations are reported with the offending decomposition.
GeneratorFamily build_half_sync(const HalfSyncSpec& spec, int level);

enum class HalfSyncEvidence { consistent, inconsistent };

// Compares the depth-d follower set of m against the follower sets of every
// language word ending in m with length <= d + |m|. "consistent" is
// evidence, not proof.
HalfSyncEvidence verify_half_sync(const FlowerAutomaton& a, const Word& m, int d);

} // namespace coded
