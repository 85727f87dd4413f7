#pragma once

#include <optional>
#include <vector>

#include "coded/graph.hpp"

// Return-time sets N([u]_0, [v]_0) restricted to n >= 0, with exact
// certification of the eventually periodic tail, and the transitivity /
// mixing classification built on them.

namespace coded {

enum class Verdict { yes, no, unknown };

const char* verdict_name(Verdict v);

struct ReturnSetReport {
    Word u, v;
    long long horizon = 0;
    std::vector<char> present; // present[n] for n in [0, horizon]

    // Certified eventually periodic tail of the indicator sequence: for
    // n >= preperiod, present(n) == tail_cycle[(n - preperiod) % period].
    bool certified = false;
    long long preperiod = 0;
    long long period = 0;
    std::vector<char> tail_cycle;

    // Indicator values for |u| <= n < preperiod, kept even when the cycle
    // closes beyond the horizon so member() stays exact.
    std::vector<char> prefix;

    Verdict cofinite = Verdict::unknown; // of the n >= 0 side
    long long thickest_interval = 0;     // longest run of consecutive members in [0, horizon]

    // Exact membership; nullopt when n > horizon and the tail is uncertified.
    std::optional<bool> member(long long n) const;
    bool any_member() const;
};

ReturnSetReport return_set(const LabeledGraph& g, const Word& u, const Word& v, long long horizon);

struct DynamicsVerdict {
    Verdict transitive = Verdict::unknown;
    Verdict totally_transitive = Verdict::unknown;
    Verdict weak_mixing = Verdict::unknown;
    Verdict mixing = Verdict::unknown;
    int word_length = 0;
    long long horizon = 0;
    int k_max = 0;
    long long failing_k = 0; // smallest k with N(U,V) disjoint from kZ, when found
    std::vector<ReturnSetReport> certificates; // all ordered pairs, row-major

    bool chain_consistent() const;
};

// Quantifies each property over all pairs of length-len cylinders at offset
// 0. Verdicts are exact whenever every per-pair tail certifies; otherwise
// "unknown" is reported for whatever cannot be decided from the window.
DynamicsVerdict classify(const LabeledGraph& g, int len, long long horizon, int k_max);

} // namespace coded
