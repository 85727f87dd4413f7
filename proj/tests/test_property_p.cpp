#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coded/property_p.hpp"
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

// Independent audit of a witness: equal block lengths, each cylinder word at
// the common offset, every block a free concatenation of generators plus the
// coprime pair (checked by the string-DP parser).
void audit(const GeneratorSet& g, const PropertyPWitness& wit) {
    std::vector<SymString> vocab;
    for (const Word& x : g.words()) vocab.push_back(x.symbols());
    vocab.push_back(wit.coprime_pair.first.symbols());
    vocab.push_back(wit.coprime_pair.second.symbols());

    REQUIRE(wit.blocks.size() == wit.cylinder_words.size());
    for (std::size_t i = 0; i < wit.blocks.size(); ++i) {
        const SymString& blk = wit.blocks[i].symbols();
        const SymString& u = wit.cylinder_words[i].symbols();
        CHECK((long long)blk.size() == wit.block_len);
        REQUIRE((std::size_t)wit.prefix_len + u.size() <= blk.size());
        CHECK(blk.compare((std::size_t)wit.prefix_len, u.size(), u) == 0);
        CHECK(oracle::parses_as_concatenation(vocab, blk));
    }
}

} // namespace

TEST_CASE("embedding examples on the even shift") {
    FlowerAutomaton a = build_flower(gens({"0", "11"}));

    Embedding e1 = embed_in_concatenation(a, w("1"));
    CHECK(e1.concatenation == w("11"));
    CHECK(e1.offset == 0);
    CHECK(e1.parse == std::vector<Word>{w("11")});

    Embedding e0 = embed_in_concatenation(a, w("0"));
    CHECK(e0.concatenation == w("0"));
    CHECK(e0.offset == 0);

    Embedding e110 = embed_in_concatenation(a, w("110"));
    CHECK(e110.concatenation == w("110"));
    CHECK(e110.offset == 0);
    CHECK(e110.parse == std::vector<Word>{w("11"), w("0")});

    CHECK_THROWS_AS(embed_in_concatenation(a, w("010")), error);
}

TEST_CASE("embedding of words that start mid-generator") {
    FlowerAutomaton a = build_flower(gens({"0", "11"}));
    Embedding e = embed_in_concatenation(a, w("10"));
    CHECK(e.concatenation == w("110"));
    CHECK(e.offset == 1);
}

TEST_CASE("witness for the even shift on 0 and 1") {
    GeneratorSet g = gens({"0", "11"});
    FlowerAutomaton a = build_flower(g);
    PropertyPWitness wit = build_witness(a, g, {w("0"), w("1")});
    CHECK(wit.coprime_pair == std::pair<Word, Word>{w("0"), w("11")});
    CHECK(wit.prefix_len == 0);
    CHECK(wit.block_len == 2);
    CHECK(wit.blocks == std::vector<Word>{w("00"), w("11")});
    audit(g, wit);
}

TEST_CASE("witness for the full shift on a single word") {
    GeneratorSet g = gens({"0", "1"});
    FlowerAutomaton a = build_flower(g);
    PropertyPWitness wit = build_witness(a, g, {w("0")});
    CHECK(wit.prefix_len == 0);
    CHECK(wit.block_len == 1);
    CHECK(wit.blocks == std::vector<Word>{w("0")});
    audit(g, wit);
}

TEST_CASE("witness for the even shift on 110 and 0") {
    GeneratorSet g = gens({"0", "11"});
    FlowerAutomaton a = build_flower(g);
    PropertyPWitness wit = build_witness(a, g, {w("110"), w("0")});
    audit(g, wit);
    for (int k = 2; k <= 4; ++k) CHECK(verify_witness(a, wit, k, TuplePlan::all()));
}

TEST_CASE("witness verification catches corruption") {
    GeneratorSet g = gens({"0", "11"});
    FlowerAutomaton a = build_flower(g);
    PropertyPWitness wit = build_witness(a, g, {w("0"), w("1")});
    REQUIRE(verify_witness(a, wit, 3, TuplePlan::all()));

    PropertyPWitness bad = wit;
    bad.blocks[1] = w("10"); // not a generator concatenation
    CHECK_FALSE(verify_witness(a, bad, 2, TuplePlan::all()));

    PropertyPWitness shifted = wit;
    shifted.cylinder_words[0] = w("1"); // wrong word at the offset
    CHECK_FALSE(verify_witness(a, shifted, 2, TuplePlan::all()));
}

TEST_CASE("witness construction needs a coprime route") {
    GeneratorSet g = gens({"00", "0000"});
    FlowerAutomaton a = build_flower(g);
    CHECK_THROWS_AS(build_witness(a, g, {w("00")}), error);
}

TEST_CASE("witness verification across k with one block length") {
    // Non-uniform offsets force the general left-padding path.
    GeneratorSet g = gens({"0", "11", "101"});
    FlowerAutomaton a = build_flower(g);
    std::vector<Word> words{w("0"), w("01"), w("110")};
    PropertyPWitness wit = build_witness(a, g, words);
    audit(g, wit);

    std::vector<Word> padded = g.words();
    padded.push_back(wit.coprime_pair.first);
    padded.push_back(wit.coprime_pair.second);
    FlowerAutomaton eff = build_flower(GeneratorSet(padded, g.alphabet()));

    long long n_first = wit.block_len;
    for (int k = 2; k <= 3; ++k) CHECK(verify_witness(eff, wit, k, TuplePlan::all()));
    for (int k = 4; k <= 6; ++k)
        CHECK(verify_witness(eff, wit, k, TuplePlan::sample(100, 20260823 + (unsigned)k)));
    CHECK(wit.block_len == n_first); // N fixed before k is chosen
}

TEST_CASE("witnesses verify on sampled generator sets") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> count(2, 3), len(1, 4);
    int built = 0;
    while (built < 25) {
        int k = 2;
        std::vector<Word> ws;
        int m = count(rng);
        for (int i = 0; i < m; ++i) {
            SymString s;
            int n = len(rng);
            for (int j = 0; j < n; ++j) s.push_back((Symbol)(rng() % (unsigned)k));
            ws.push_back(Word(std::move(s), Alphabet(k)));
        }
        GeneratorSet g(std::move(ws), Alphabet(k));
        if (gcd_lengths(g) != 1) continue;
        ++built;

        FlowerAutomaton a = build_flower(g);
        LanguageTable lang = language(a, 2);
        std::vector<Word> words = lang.at(2);
        if (words.size() > 3) words.resize(3);
        PropertyPWitness wit = build_witness(a, g, words);
        audit(g, wit);

        std::vector<Word> padded = g.words();
        padded.push_back(wit.coprime_pair.first);
        padded.push_back(wit.coprime_pair.second);
        FlowerAutomaton eff = build_flower(GeneratorSet(padded, g.alphabet()));
        CHECK(verify_witness(eff, wit, 2, TuplePlan::all()));
        CHECK(verify_witness(eff, wit, 3, TuplePlan::all()));
        CHECK(verify_witness(eff, wit, 5, TuplePlan::sample(100, 9000 + (unsigned)built)));
    }
}
