#include "coded/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace coded {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

std::optional<bool> ReturnSetReport::member(long long n) const {
    if (n < 0) return false;
    if (n <= horizon) return present[(std::size_t)n] != 0;
    if (!certified) return std::nullopt;
    long long t = n - (long long)u.size();
    long long p = preperiod - (long long)u.size();
    if (t < p) return prefix[(std::size_t)t] != 0;
    return tail_cycle[(std::size_t)((t - p) % period)] != 0;
}

bool ReturnSetReport::any_member() const {
    for (char c : present)
        if (c) return true;
    if (certified) {
        for (char c : prefix)
            if (c) return true;
        for (char c : tail_cycle)
            if (c) return true;
    }
    return false;
}

ReturnSetReport return_set(const LabeledGraph& g, const Word& u, const Word& v, long long horizon) {
    if (u.empty() || v.empty()) throw error("return_set: cylinder words must be non-empty");
    if (horizon < (long long)(u.size() + v.size()))
        throw error("return_set: horizon must be at least |u| + |v|");
    if (!graph_contains(g, u)) throw error("return_set: u not in the language");
    if (!graph_contains(g, v)) throw error("return_set: v not in the language");

    ReturnSetReport rep;
    rep.u = u;
    rep.v = v;
    rep.horizon = horizon;
    rep.present.assign((std::size_t)horizon + 1, 0);

    // Overlapping placements: merge u and v at offset n and test membership.
    for (long long n = 0; n < (long long)u.size() && n <= horizon; ++n) {
        bool consistent = true;
        for (std::size_t i = 0; i + n < u.size() && i < v.size(); ++i)
            if (u[(std::size_t)(i + n)] != v[i]) { consistent = false; break; }
        if (!consistent) continue;
        Word merged = (n + (long long)v.size() <= (long long)u.size())
                          ? u
                          : u.subword(0, (std::size_t)n) + v;
        rep.present[(std::size_t)n] = graph_contains(g, merged) ? 1 : 0;
    }

    // Separated placements: step the end states of u-paths through the
    // adjacency relation; the mask sequence is eventually periodic.
    const StateMask starts_v = g.co_run(g.all_states(), v);
    StateMask r = g.run(g.all_states(), u);

    const long long tmax_window = horizon - (long long)u.size();
    const long long cap = std::max<long long>(tmax_window, 4096) + 1;

    std::unordered_map<StateMask, long long> seen;
    std::vector<char> b;
    long long cycle_start = -1, cycle_len = 0;
    for (long long t = 0; t <= cap; ++t) {
        auto [it, fresh] = seen.emplace(r, t);
        if (!fresh) {
            cycle_start = it->second;
            cycle_len = t - it->second;
            break;
        }
        b.push_back((r & starts_v) ? 1 : 0);
        r = g.step_any(r);
    }

    long long p = 0, q = 0;
    if (cycle_start >= 0) {
        rep.certified = true;
        // Minimal period of the cyclic part, then minimal preperiod.
        q = cycle_len;
        for (long long d = 1; d < cycle_len; ++d) {
            if (cycle_len % d) continue;
            bool ok = true;
            for (long long i = 0; i < cycle_len && ok; ++i)
                ok = b[(std::size_t)(cycle_start + i)] ==
                     b[(std::size_t)(cycle_start + i % d)];
            if (ok) { q = d; break; }
        }
        p = cycle_start;
        while (p > 0 && b[(std::size_t)(p - 1)] == b[(std::size_t)(p - 1 + q)]) --p;

        rep.preperiod = (long long)u.size() + p;
        rep.period = q;
        rep.prefix.assign(b.begin(), b.begin() + p);
        rep.tail_cycle.assign(b.begin() + p, b.begin() + p + q);
        bool all = std::all_of(rep.tail_cycle.begin(), rep.tail_cycle.end(),
                               [](char c) { return c != 0; });
        rep.cofinite = all ? Verdict::yes : Verdict::no;
    }

    for (long long t = 0; t <= tmax_window; ++t) {
        char val;
        if (t < (long long)b.size())
            val = b[(std::size_t)t];
        else // cycle closed before the horizon
            val = rep.tail_cycle[(std::size_t)((t - p) % q)];
        rep.present[(std::size_t)(t + (long long)u.size())] = val;
    }

    long long run = 0;
    for (char c : rep.present) {
        run = c ? run + 1 : 0;
        rep.thickest_interval = std::max(rep.thickest_interval, run);
    }
    return rep;
}

namespace {

// Residues mod the certified period hit by infinitely many members of the
// one-sided set (negated for the n <= 0 side of the two-sided return set).
std::vector<char> tail_residues(const ReturnSetReport& r, bool negate) {
    std::vector<char> res((std::size_t)r.period, 0);
    for (long long i = 0; i < r.period; ++i) {
        if (!r.tail_cycle[(std::size_t)i]) continue;
        long long rho = (r.preperiod + i) % r.period;
        if (negate) rho = (r.period - rho) % r.period;
        res[(std::size_t)rho] = 1;
    }
    return res;
}

// Some residue marked in res (mod q) is congruent to r mod g, where g | q.
bool tail_covers(const std::vector<char>& res, long long q, long long g, long long r) {
    for (long long rho = 0; rho < q; ++rho)
        if (res[(std::size_t)rho] && rho % g == r % g) return true;
    return false;
}

// (X, T^k) transitivity quantifies over shifted cylinders too, so the
// two-sided return set must meet every residue class mod k, for every k.
// Finitely many sporadic members cannot cover unboundedly many classes, so
// the decision reduces to tail coverage over the divisors of
// lcm(period+, period-); this is exact for certified pairs.
bool pair_totally_transitive(const ReturnSetReport& r1, const ReturnSetReport& r2) {
    const std::vector<char> a = tail_residues(r1, false);
    const std::vector<char> b = tail_residues(r2, true);
    const long long big = std::lcm(r1.period, r2.period);
    for (long long k = 1; k <= big; ++k) {
        if (big % k) continue;
        long long g1 = std::gcd(r1.period, k), g2 = std::gcd(r2.period, k);
        for (long long r = 0; r < k; ++r)
            if (!tail_covers(a, r1.period, g1, r) && !tail_covers(b, r2.period, g2, r))
                return false;
    }
    return true;
}

// Smallest k >= 2 such that some residue class mod k misses the two-sided
// set entirely, sporadic members included; 0 when none is found within the
// scan bound (reporting aid only, the verdict never depends on it).
long long smallest_failing_k(const ReturnSetReport& r1, const ReturnSetReport& r2) {
    const std::vector<char> a = tail_residues(r1, false);
    const std::vector<char> b = tail_residues(r2, true);
    std::vector<long long> sporadic;
    for (long long n = 0; n < r1.preperiod; ++n)
        if (n <= r1.horizon && r1.present[(std::size_t)n]) sporadic.push_back(n);
    for (long long n = 0; n < r2.preperiod; ++n)
        if (n <= r2.horizon && r2.present[(std::size_t)n]) sporadic.push_back(-n);

    const long long big = std::lcm(r1.period, r2.period);
    const long long bound = 4 * big * (long long)(sporadic.size() + 2) + 64;
    for (long long k = 2; k <= bound; ++k) {
        long long g1 = std::gcd(r1.period, k), g2 = std::gcd(r2.period, k);
        for (long long r = 0; r < k; ++r) {
            if (tail_covers(a, r1.period, g1, r) || tail_covers(b, r2.period, g2, r)) continue;
            bool hit = false;
            for (long long s : sporadic)
                if (((s - r) % k + k) % k == 0) { hit = true; break; }
            if (!hit) return k;
        }
    }
    return 0;
}

Verdict aggregate(Verdict acc, Verdict v) {
    if (acc == Verdict::no || v == Verdict::no) return Verdict::no;
    if (acc == Verdict::unknown || v == Verdict::unknown) return Verdict::unknown;
    return Verdict::yes;
}

} // namespace

bool DynamicsVerdict::chain_consistent() const {
    auto rank = [](Verdict v) { return v == Verdict::yes ? 2 : (v == Verdict::unknown ? 1 : 0); };
    return rank(mixing) <= rank(weak_mixing) && rank(weak_mixing) <= rank(totally_transitive) &&
           rank(totally_transitive) <= rank(transitive);
}

DynamicsVerdict classify(const LabeledGraph& g, int len, long long horizon, int k_max) {
    if (len < 1) throw error("classify: word length must be >= 1");
    if (horizon < 2LL * len + g.num_states())
        throw error("classify: horizon too small (need >= 2*len + states)");
    if (k_max < 2) throw error("classify: k_max must be >= 2");

    LanguageTable lang = graph_language(g, len);
    const auto& words = lang.at(len);
    const std::size_t m = words.size();
    if (m == 0) throw error("classify: empty language at this length");

    DynamicsVerdict out;
    out.word_length = len;
    out.horizon = horizon;
    out.k_max = k_max;

    std::vector<ReturnSetReport> reps;
    reps.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            reps.push_back(return_set(g, words[i], words[j], horizon));

    Verdict trans = Verdict::yes, tt = Verdict::yes, wm = Verdict::yes, mix = Verdict::yes;

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const ReturnSetReport& r1 = reps[i * m + j];
            const ReturnSetReport& r2 = reps[j * m + i];
            bool both_certified = r1.certified && r2.certified;

            Verdict pt;
            if (r1.any_member() || r2.any_member()) pt = Verdict::yes;
            else pt = both_certified ? Verdict::no : Verdict::unknown;
            trans = aggregate(trans, pt);

            Verdict ptt;
            if (!both_certified) {
                ptt = Verdict::unknown;
            } else if (pair_totally_transitive(r1, r2)) {
                ptt = Verdict::yes;
            } else {
                ptt = Verdict::no;
                long long k = smallest_failing_k(r1, r2);
                if (k > 0 && (out.failing_k == 0 || k < out.failing_k)) out.failing_k = k;
            }
            tt = aggregate(tt, ptt);

            Verdict pwm;
            if (r1.cofinite == Verdict::yes || r2.cofinite == Verdict::yes) pwm = Verdict::yes;
            else if (r1.cofinite == Verdict::no && r2.cofinite == Verdict::no) pwm = Verdict::no;
            else pwm = Verdict::unknown;
            wm = aggregate(wm, pwm);
        }
    }

    for (const ReturnSetReport& r : reps) mix = aggregate(mix, r.cofinite);

    out.transitive = trans;
    out.totally_transitive = tt;
    out.weak_mixing = wm;
    out.mixing = mix;
    out.certificates = std::move(reps);
    return out;
}

} // namespace coded
