#include "coded/generators.hpp"

#include <algorithm>
#include <numeric>

namespace coded {

GeneratorSet::GeneratorSet(std::vector<Word> words, Alphabet alphabet)
    : words_(std::move(words)), alphabet_(alphabet) {
    if (words_.empty()) throw error("generator set must be non-empty");
    for (const Word& w : words_) {
        if (w.empty()) throw error("generator words must be non-empty");
        if (!(w.alphabet() == alphabet_)) throw error("generator word alphabet mismatch");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool GeneratorSet::contains_word(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

long long gcd_lengths(const GeneratorSet& w) {
    long long g = 0;
    for (const Word& x : w.words()) g = std::gcd(g, (long long)x.size());
    return g;
}

GeneratorSet BezoutAugmentation::augmented() const {
    std::vector<Word> words = original.words();
    words.push_back(added.first);
    words.push_back(added.second);
    return GeneratorSet(std::move(words), original.alphabet());
}

namespace {

Word word_power_concat(const std::vector<Word>& ws, const std::vector<long long>& coeff, int sign) {
    SymString out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        long long c = coeff[i] * sign;
        for (long long r = 0; r < c; ++r) out += ws[i].symbols();
    }
    return Word(std::move(out), ws.front().alphabet());
}

} // namespace

BezoutAugmentation bezout_augment(const GeneratorSet& w) {
    if (gcd_lengths(w) != 1)
        throw error("bezout_augment: generator is not relatively prime (gcd of lengths > 1)");
    const auto& ws = w.words();
    const std::size_t n = ws.size();

    // An existing coprime-length pair is kept as-is.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::gcd(ws[i].size(), ws[j].size()) == 1) {
                std::vector<long long> coeff(n, 0);
                coeff[i] = 1;
                coeff[j] = -1;
                return BezoutAugmentation{w, {ws[i], ws[j]},
                                          std::move(coeff),
                                          {(long long)ws[i].size(), (long long)ws[j].size()}};
            }

    if (n == 1) {
        // gcd 1 with a single word means |w| = 1; pair it with its square.
        std::vector<long long> coeff{1};
        return BezoutAugmentation{w, {ws[0], ws[0] + ws[0]}, std::move(coeff), {1, 2}};
    }

    // Greedy minimal subset whose lengths reach gcd 1.
    std::vector<std::size_t> subset{0};
    long long g = (long long)ws[0].size();
    for (std::size_t i = 1; i < n && g > 1; ++i) {
        long long g2 = std::gcd(g, (long long)ws[i].size());
        if (g2 < g) {
            subset.push_back(i);
            g = g2;
        }
    }

    // Smallest-coefficient signed solution of sum c_i * |w_i| = 1 over the
    // subset, both sign groups non-empty. Tie-break: least total added
    // length, then lexicographically greatest vector.
    const std::size_t k = subset.size();
    std::vector<long long> lens(k);
    for (std::size_t i = 0; i < k; ++i) lens[i] = (long long)ws[subset[i]].size();

    std::vector<long long> best;
    long long best_total = 0;
    for (long long bound = 1; bound <= 16 && best.empty(); ++bound) {
        std::vector<long long> c(k, -bound);
        while (true) {
            long long sum = 0, total = 0;
            bool pos = false, neg = false;
            for (std::size_t i = 0; i < k; ++i) {
                sum += c[i] * lens[i];
                total += std::abs(c[i]) * lens[i];
                if (c[i] > 0) pos = true;
                if (c[i] < 0) neg = true;
            }
            if (sum == 1 && pos && neg) {
                if (best.empty() || total < best_total ||
                    (total == best_total && c > best)) {
                    best = c;
                    best_total = total;
                }
            }
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (c[i] < bound) { ++c[i]; break; }
                c[i] = -bound;
            }
            if (i == k) break;
        }
    }
    if (best.empty()) throw error("bezout_augment: coefficient search failed");

    std::vector<long long> coeff(n, 0);
    for (std::size_t i = 0; i < k; ++i) coeff[subset[i]] = best[i];
    Word first = word_power_concat(ws, coeff, +1);
    Word second = word_power_concat(ws, coeff, -1);
    return BezoutAugmentation{w, {first, second}, std::move(coeff),
                              {(long long)first.size(), (long long)second.size()}};
}

long long frobenius_bound(long long a1, long long a2) {
    if (a1 < 1 || a2 < 1) throw error("frobenius_bound: arguments must be positive");
    if (std::gcd(a1, a2) != 1) throw error("frobenius_bound: arguments must be coprime");
    if (a1 == 1 || a2 == 1) return 0;
    return (a1 - 1) * (a2 - 1);
}

std::optional<std::pair<long long, long long>> represent(long long n, long long a1, long long a2) {
    if (a1 < 1 || a2 < 1) throw error("represent: lengths must be positive");
    if (std::gcd(a1, a2) != 1) throw error("represent: lengths must be coprime");
    if (n < 0) return std::nullopt;
    for (long long r2 = 0; r2 * a2 <= n; ++r2) {
        long long rest = n - r2 * a2;
        if (rest % a1 == 0) return std::make_pair(rest / a1, r2);
    }
    return std::nullopt;
}

namespace {

void enumerate_avoiding(const Word& m, Alphabet a, int maxlen, std::vector<Word>& out) {
    // BFS over words with m not a factor; bounded by maxlen.
    std::vector<Word> frontier{Word(SymString(), a)};
    out.push_back(frontier.front());
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        for (const Word& u : frontier) {
            for (int s = 0; s < a.size; ++s) {
                Word v = u + Word(SymString(1, (Symbol)s), a);
                if (!is_factor(m, v)) {
                    out.push_back(v);
                    next.push_back(std::move(v));
                }
            }
        }
        if (out.size() > 200000) throw error("m-free enumeration too large at this level");
        frontier = std::move(next);
    }
}

} // namespace

GeneratorSet GeneratorFamily::set_at(int level) const {
    if (level < 0) throw error("family level must be >= 0");
    struct V {
        Alphabet a;
        int t;
        GeneratorSet operator()(const GeneratorSet& g) const { return g; }
        GeneratorSet operator()(const PowerSuffixRule& r) const {
            std::vector<Word> ws;
            Word acc = r.v;
            ws.push_back(acc);
            Word pre(SymString(), a);
            for (int n = 1; n <= t; ++n) {
                pre = pre + r.u;
                ws.push_back(pre + r.v);
            }
            return GeneratorSet(std::move(ws), a);
        }
        GeneratorSet operator()(const ExplicitLevelsRule& r) const {
            std::vector<Word> ws;
            int upto = std::min<int>(t, (int)r.levels.size() - 1);
            for (int i = 0; i <= upto; ++i)
                ws.insert(ws.end(), r.levels[i].begin(), r.levels[i].end());
            return GeneratorSet(std::move(ws), a);
        }
        GeneratorSet operator()(const HalfSyncPowerRule& r) const {
            std::vector<Word> ws;
            Word u(SymString(), a);
            while ((int)u.size() <= t) {
                ws.push_back(u + r.m);
                u = u + r.base;
                if (r.base.empty()) break;
            }
            return GeneratorSet(std::move(ws), a);
        }
        GeneratorSet operator()(const HalfSyncMFreeRule& r) const {
            std::vector<Word> us;
            enumerate_avoiding(r.m, a, t, us);
            std::vector<Word> ws;
            ws.reserve(us.size());
            for (const Word& u : us) ws.push_back(u + r.m);
            return GeneratorSet(std::move(ws), a);
        }
        GeneratorSet operator()(const HalfSyncListRule& r) const {
            std::vector<Word> ws;
            for (const Word& u : r.us)
                if ((int)u.size() <= t) ws.push_back(u + r.m);
            if (ws.empty()) throw error("half-sync list has no words at this level");
            return GeneratorSet(std::move(ws), a);
        }
    };
    return std::visit(V{alphabet_, level}, rule_);
}

} // namespace coded
