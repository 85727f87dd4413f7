#pragma once

#include <map>
#include <string>

#include "coded/dynamics.hpp"
#include "coded/graph.hpp"

// The integer-line labeled cover driven by a substitution fixed point:
// forward edges b -> b+1 labeled x_b, backward edges b+1 -> b labeled
// x_b + base alphabet size. Finite windows [-B, B] give lower
// approximations of the presented coded system.

namespace coded {

class SequenceProvider {
public:
    // rules: symbol -> image word over the base alphabet {0..k-1}.
    SequenceProvider(std::string name, std::vector<Word> rules, int k_power = 1);

    static SequenceProvider thue_morse(int k_power = 1);
    static SequenceProvider fibonacci(int k_power = 1);
    static SequenceProvider chacon(int k_power = 1);
    static SequenceProvider by_name(const std::string& name, int k_power = 1);

    const std::string& name() const { return name_; }
    Alphabet base_alphabet() const { return base_alphabet_; }
    int k_power() const { return k_power_; }

    // x_{-B} .. x_{B} of the anchored two-sided fixed point, subsampled by
    // k_power.
    Word window(int b) const;

private:
    Symbol at(long long pos) const; // unsampled fixed point
    void extend(long long need_left, long long need_right) const;

    std::string name_;
    std::vector<Word> rules_;
    Alphabet base_alphabet_;
    int k_power_;
    Symbol left_seed_, right_seed_;
    int left_power_, right_power_;
    mutable SymString left_, right_; // left_ holds x_{-n}..x_{-1} in natural order
};

class LineCoverSystem {
public:
    LineCoverSystem(SequenceProvider provider, int window);

    const SequenceProvider& provider() const { return provider_; }
    int window() const { return window_; }
    Alphabet alphabet() const; // 2 * base alphabet size
    int base_size() const { return provider_.base_alphabet().size; }

    // x_b for b in [-window, window].
    Symbol x(long long b) const;

    // Largest start-vertex magnitude from which a length-n walk stays
    // inside the window.
    int safe_range(int n) const;

private:
    SequenceProvider provider_;
    int window_;
    Word cache_;
};

struct WalkTrace {
    Word label;
    long long start_vertex = 0;
    long long leftmost = 0;  // m_u
    long long rightmost = 0; // M_u
    Word x_of_u;             // x_{m_u} .. x_{M_u - 1}
    Word y_of_u;             // y_{M_u - 1} .. y_{m_u}
    bool closed = false;     // end vertex == start vertex
};

// Every walk in the window labeled u, one trace per (start, step pattern)
// up to trace equality; deduplicated on the trace fields.
std::vector<WalkTrace> walk_traces(const LineCoverSystem& s, const Word& u);

// Labels of all length-n walks from every safe start vertex: a lower
// approximation of L_n(S), exact as the window grows.
std::vector<Word> cover_language(const LineCoverSystem& s, int n);

// All periodic label words of least period <= p arising from closed walks,
// reported as lexicographically minimal rotations with their least period.
std::vector<std::pair<Word, int>> cover_periodic(const LineCoverSystem& s, int p);

// Empirical return set from window walks; cofinite always "unknown".
ReturnSetReport cover_return_set(const LineCoverSystem& s, const Word& u, const Word& v,
                                 long long horizon);

struct SftWindow {
    LabeledGraph graph; // vertex-indexed edge shift on [-B, B]
    int b = 0;
    // edge symbols: forward b -> b+1 is 2*(b+B), backward b+1 -> b is
    // 2*(b+B)+1, for b in [-B, B-1].
};

SftWindow sft_window(const LineCoverSystem& s, int b);

} // namespace coded
