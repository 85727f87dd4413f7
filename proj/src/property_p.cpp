#include "coded/property_p.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace coded {

Embedding embed_in_concatenation(const FlowerAutomaton& a, const Word& u) {
    if (!contains(a, u)) throw error("embed_in_concatenation: word not in the language");
    const LabeledGraph& g = a.graph();
    const auto& gens = a.origin().words();

    auto prefix_len = [&](int q) {
        return q == FlowerAutomaton::kHub ? 0 : a.pos_of(q);
    };
    auto suffix_len = [&](int q) {
        return q == FlowerAutomaton::kHub ? 0 : (int)gens[a.word_of(q)].size() - a.pos_of(q);
    };

    int best_q0 = -1, best_q1 = -1;
    long long best_total = -1, best_off = -1;
    for (int q0 = 0; q0 < g.num_states(); ++q0) {
        StateMask ends = g.run(StateMask(1) << q0, u);
        if (!ends) continue;
        for (int q1 = 0; q1 < g.num_states(); ++q1) {
            if (!(ends >> q1 & 1)) continue;
            long long off = prefix_len(q0);
            long long total = off + (long long)u.size() + suffix_len(q1);
            if (best_q0 < 0 || total < best_total ||
                (total == best_total && off < best_off)) {
                best_q0 = q0;
                best_q1 = q1;
                best_total = total;
                best_off = off;
            }
        }
    }

    Word pre = best_q0 == FlowerAutomaton::kHub
                   ? Word(SymString(), g.alphabet())
                   : gens[a.word_of(best_q0)].subword(0, (std::size_t)a.pos_of(best_q0));
    Word suf = best_q1 == FlowerAutomaton::kHub
                   ? Word(SymString(), g.alphabet())
                   : gens[a.word_of(best_q1)].subword((std::size_t)a.pos_of(best_q1),
                                                      suffix_len(best_q1));
    Word cover = pre + u + suf;
    auto parse = parse_concatenation(a.origin(), cover);
    if (!parse) throw error("embed_in_concatenation: internal parse failure");
    return Embedding{std::move(cover), best_off, std::move(*parse)};
}

namespace {

// Concatenation of v1/v2 copies of total length n: fewest words, ties broken
// toward more copies of the shorter word; shorter copies come first.
Word pad_combination(long long n, const Word& v1, const Word& v2) {
    const Word& a = v1.size() <= v2.size() ? v1 : v2;
    const Word& b = v1.size() <= v2.size() ? v2 : v1;
    long long la = (long long)a.size(), lb = (long long)b.size();
    long long best_ra = -1, best_rb = -1;
    for (long long rb = 0; rb * lb <= n; ++rb) {
        long long rest = n - rb * lb;
        if (rest % la) continue;
        long long ra = rest / la;
        if (best_ra < 0 || ra + rb < best_ra + best_rb ||
            (ra + rb == best_ra + best_rb && ra > best_ra)) {
            best_ra = ra;
            best_rb = rb;
        }
    }
    if (best_ra < 0) throw error("padding length not representable");
    SymString out;
    for (long long i = 0; i < best_ra; ++i) out += a.symbols();
    for (long long i = 0; i < best_rb; ++i) out += b.symbols();
    return Word(std::move(out), v1.alphabet());
}

bool representable(long long n, long long a1, long long a2) {
    return represent(n, a1, a2).has_value();
}

} // namespace

PropertyPWitness build_witness(const FlowerAutomaton& a, const GeneratorSet& w,
                               const std::vector<Word>& words) {
    if (words.empty()) throw error("build_witness: need at least one cylinder word");

    // A coprime-length pair, augmenting W when necessary.
    std::optional<std::pair<Word, Word>> pair;
    const auto& ws = w.words();
    for (std::size_t i = 0; i < ws.size() && !pair; ++i)
        for (std::size_t j = i + 1; j < ws.size() && !pair; ++j)
            if (std::gcd(ws[i].size(), ws[j].size()) == 1) pair = std::make_pair(ws[i], ws[j]);
    if (!pair) pair = bezout_augment(w).added; // throws when gcd(W) > 1

    const Word& v1 = pair->first;
    const Word& v2 = pair->second;
    const long long a1 = (long long)v1.size(), a2 = (long long)v2.size();
    const long long big_l = frobenius_bound(a1, a2);

    std::vector<Embedding> embeds;
    embeds.reserve(words.size());
    for (const Word& u : words) embeds.push_back(embed_in_concatenation(a, u));

    long long n0 = 0;
    bool uniform = true;
    for (const Embedding& e : embeds) {
        n0 = std::max(n0, e.offset);
        if (e.offset != embeds.front().offset) uniform = false;
    }
    const long long l = uniform ? embeds.front().offset : big_l + n0;

    std::vector<Word> blocks;
    for (const Embedding& e : embeds) {
        Word blk = uniform ? e.concatenation
                           : pad_combination(l - e.offset, v1, v2) + e.concatenation;
        blocks.push_back(std::move(blk));
    }

    long long n = 0;
    for (const Word& b : blocks) n = std::max(n, (long long)b.size());
    while (true) {
        bool ok = true;
        for (const Word& b : blocks)
            if (!representable(n - (long long)b.size(), a1, a2)) { ok = false; break; }
        if (ok) break;
        ++n;
    }
    for (Word& b : blocks)
        if ((long long)b.size() < n) b = b + pad_combination(n - (long long)b.size(), v1, v2);

    // The padded generator set: W plus the pair (a no-op when the pair was
    // already in W).
    std::vector<Word> padded_words = ws;
    padded_words.push_back(v1);
    padded_words.push_back(v2);
    GeneratorSet effective(std::move(padded_words), w.alphabet());

    PropertyPWitness out;
    out.cylinder_words = words;
    out.coprime_pair = *pair;
    out.prefix_len = l;
    out.block_len = n;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto parse = parse_concatenation(effective, blocks[i]);
        if (!parse) throw error("build_witness: block failed to parse as a concatenation");
        if (blocks[i].symbols().compare((std::size_t)l, words[i].size(), words[i].symbols()) != 0)
            throw error("build_witness: cylinder word not at the common offset");
        out.block_parses.push_back(std::move(*parse));
    }
    out.blocks = std::move(blocks);
    return out;
}

bool verify_witness(const FlowerAutomaton& a, const PropertyPWitness& w, int k, TuplePlan plan) {
    if (k < 2) throw error("verify_witness: k must be >= 2");
    const int n = (int)w.blocks.size();
    const LabeledGraph& g = a.graph();
    const StateMask hub = StateMask(1) << FlowerAutomaton::kHub;

    auto check_tuple = [&](const std::vector<int>& s) {
        SymString cat;
        for (int idx : s) cat += w.blocks[(std::size_t)idx].symbols();
        Word word(cat, g.alphabet());
        // exact W*-membership: a hub-to-hub path
        if (!(g.run(hub, word) & hub)) return false;
        for (int j = 0; j < k; ++j) {
            const Word& u = w.cylinder_words[(std::size_t)s[(std::size_t)j]];
            std::size_t off = (std::size_t)(w.prefix_len + (long long)j * w.block_len);
            if (cat.compare(off, u.size(), u.symbols()) != 0) return false;
        }
        return true;
    };

    if (plan.exhaustive) {
        std::vector<int> s((std::size_t)k, 0);
        while (true) {
            if (!check_tuple(s)) return false;
            int i = 0;
            for (; i < k; ++i) {
                if (s[(std::size_t)i] + 1 < n) { ++s[(std::size_t)i]; break; }
                s[(std::size_t)i] = 0;
            }
            if (i == k) break;
        }
        return true;
    }

    std::mt19937_64 rng(plan.seed);
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int t = 0; t < plan.samples; ++t) {
        std::vector<int> s((std::size_t)k);
        for (int& x : s) x = dist(rng);
        if (!check_tuple(s)) return false;
    }
    return true;
}

} // namespace coded
