#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "coded/flower.hpp"
#include "oracle.hpp"

using namespace coded;

namespace {

const Alphabet kBin(2);

Word w(const char* digits, Alphabet a = kBin) { return parse_word(digits, a); }

GeneratorSet gens(std::initializer_list<const char*> ws, Alphabet a = kBin) {
    std::vector<Word> v;
    for (const char* s : ws) v.push_back(parse_word(s, a));
    return GeneratorSet(std::move(v), a);
}

std::vector<SymString> raw(const GeneratorSet& g) {
    std::vector<SymString> out;
    for (const Word& x : g.words()) out.push_back(x.symbols());
    return out;
}

std::vector<std::uint32_t> keys_of(const LanguageTable& t) {
    std::vector<std::uint32_t> keys;
    for (int n = 1; n <= t.max_length; ++n)
        for (const Word& x : t.at(n)) keys.push_back(oracle::pack(x.symbols()));
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Sampled generator set over a small alphabet.
GeneratorSet random_gens(std::mt19937& rng, int k) {
    std::uniform_int_distribution<int> count(1, 3), len(1, 4), sym(0, k - 1);
    std::vector<Word> ws;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
        SymString s;
        int n = len(rng);
        for (int j = 0; j < n; ++j) s.push_back((Symbol)sym(rng));
        ws.push_back(Word(std::move(s), Alphabet(k)));
    }
    return GeneratorSet(std::move(ws), Alphabet(k));
}

} // namespace

TEST_CASE("flower shapes") {
    FlowerAutomaton a1 = build_flower(gens({"0"}));
    CHECK(a1.graph().num_states() == 1);
    CHECK(a1.graph().edges().size() == 1);

    FlowerAutomaton a2 = build_flower(gens({"0", "11"}));
    CHECK(a2.graph().num_states() == 2);
    CHECK(a2.graph().edges().size() == 3);

    FlowerAutomaton a3 = build_flower(gens({"01"}));
    CHECK(a3.graph().num_states() == 2);
    CHECK(a3.graph().edges().size() == 2);
}

TEST_CASE("interior state bookkeeping") {
    FlowerAutomaton a = build_flower(gens({"0", "110"}));
    CHECK(a.word_of(FlowerAutomaton::kHub) == -1);
    for (int q = 1; q < a.graph().num_states(); ++q) {
        int wi = a.word_of(q);
        REQUIRE(wi >= 0);
        CHECK(a.pos_of(q) >= 1);
        CHECK(a.pos_of(q) < (int)a.origin().words()[(std::size_t)wi].size());
    }
}

TEST_CASE("membership examples") {
    FlowerAutomaton even = build_flower(gens({"0", "11"}));
    CHECK(contains(even, w("0110")));
    CHECK_FALSE(contains(even, w("010")));

    FlowerAutomaton alt = build_flower(gens({"01"}));
    CHECK_FALSE(contains(alt, w("00")));
    CHECK(contains(alt, w("1010")));
}

TEST_CASE("language examples") {
    LanguageTable alt = language(build_flower(gens({"01"})), 2);
    CHECK(alt.at(2) == std::vector<Word>{w("01"), w("10")});

    LanguageTable full = language(build_flower(gens({"0", "1"})), 3);
    CHECK(full.at(3).size() == 8);

    LanguageTable even = language(build_flower(gens({"0", "11"})), 3);
    CHECK(even.at(3) == std::vector<Word>{w("000"), w("001"), w("011"), w("100"), w("101"),
                                          w("110"), w("111")}); // everything but 010
}

TEST_CASE("language levels are shortlex sorted and factor closed") {
    LanguageTable t = language(build_flower(gens({"0", "1101"})), 6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(std::is_sorted(t.at(n).begin(), t.at(n).end()));
        for (const Word& x : t.at(n))
            for (std::size_t m = 1; m < x.size(); ++m)
                for (const Word& f : factors(x, m)) CHECK(t.contains(f));
    }
}

TEST_CASE("periodic point examples") {
    auto alt = periodic_points(build_flower(gens({"01"})), 2);
    CHECK(alt == std::vector<Word>{w("01")});

    auto even = periodic_points(build_flower(gens({"0", "11"})), 2);
    CHECK(even == std::vector<Word>{w("0"), w("1")}); // 01 repeats into an odd interior 1-run

    auto full = periodic_points(build_flower(gens({"0", "1"})), 1);
    CHECK(full == std::vector<Word>{w("0"), w("1")});
}

TEST_CASE("parse of concatenations") {
    GeneratorSet g = gens({"0", "11"});
    auto parse = parse_concatenation(g, w("0110"));
    REQUIRE(parse.has_value());
    Word rebuilt(SymString(), kBin);
    for (const Word& x : *parse) {
        CHECK(g.contains_word(x));
        rebuilt = rebuilt + x;
    }
    CHECK(rebuilt == w("0110"));
    CHECK_FALSE(parse_concatenation(g, w("010")).has_value());
}

TEST_CASE("language agrees with the string oracle on sampled sets") {
    std::mt19937 rng(20260823);
    for (int t = 0; t < 150; ++t) {
        int k = 1 + (int)(rng() % 3);
        GeneratorSet g = random_gens(rng, k);
        auto lib = keys_of(language(build_flower(g), 7));
        auto ref = oracle::language_keys(raw(g), 7);
        REQUIRE(lib == ref);
    }
}

TEST_CASE("periodic points agree with the power oracle on sampled sets") {
    std::mt19937 rng(99);
    for (int t = 0; t < 100; ++t) {
        int k = 1 + (int)(rng() % 2);
        GeneratorSet g = random_gens(rng, k);
        FlowerAutomaton a = build_flower(g);
        int states = a.graph().num_states();
        auto pts = periodic_points(a, 3);
        std::set<Word> reported(pts.begin(), pts.end());

        // oracle: u is periodic iff u^m stays in the language for m up to
        // states + 1 (pumping closes the cycle)
        for (int n = 1; n <= 3; ++n) {
            std::vector<Word> all;
            SymString s((std::size_t)n, 0);
            while (true) {
                Word u(s, g.alphabet());
                if ((int)least_period(u) == n && min_rotation(u) == u) {
                    bool ok = true;
                    for (int m = 1; m <= states + 1 && ok; ++m)
                        ok = oracle::member(raw(g), power(u, (std::size_t)m).symbols());
                    CHECK(reported.count(u) == (ok ? 1u : 0u));
                }
                std::size_t i = 0;
                for (; i < s.size(); ++i) {
                    if (s[i] + 1 < k) { ++s[i]; break; }
                    s[i] = 0;
                }
                if (i == s.size()) break;
            }
        }
    }
}

TEST_CASE("family truncations give monotone languages") {
    GeneratorFamily f(kBin, PowerSuffixRule{w("0"), w("11")});
    for (int t = 1; t <= 4; ++t) {
        LanguageTable lo = language(build_flower(f, t), 6);
        LanguageTable hi = language(build_flower(f, t + 1), 6);
        for (int n = 1; n <= 6; ++n)
            CHECK(std::includes(hi.at(n).begin(), hi.at(n).end(), lo.at(n).begin(),
                                lo.at(n).end()));
    }
}
