#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "coded/dynamics.hpp"
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

// Brute force: n is a return time iff some language word of length
// max(|u|, n+|v|) carries u at 0 and v at n.
bool oracle_return(const std::vector<std::uint32_t>& keys, int k, const SymString& u,
                   const SymString& v, int n) {
    std::size_t len = std::max(u.size(), (std::size_t)n + v.size());
    SymString x(len, 0);
    std::vector<int> free_pos;
    for (std::size_t i = 0; i < len; ++i) {
        bool in_u = i < u.size(), in_v = i >= (std::size_t)n && i < (std::size_t)n + v.size();
        if (in_u && in_v && u[i] != v[i - (std::size_t)n]) return false;
        if (in_u) x[i] = u[i];
        else if (in_v) x[i] = v[i - (std::size_t)n];
        else free_pos.push_back((int)i);
    }
    std::vector<int> c(free_pos.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free_pos.size(); ++i) x[(std::size_t)free_pos[i]] = (Symbol)c[i];
        if (std::binary_search(keys.begin(), keys.end(), oracle::pack(x))) return true;
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
            if (c[i] + 1 < k) { ++c[i]; break; }
            c[i] = 0;
        }
        if (i == c.size()) return false;
    }
}

} // namespace

TEST_CASE("return set on the full shift is everything") {
    FlowerAutomaton a = build_flower(gens({"0", "1"}));
    ReturnSetReport r = return_set(a.graph(), w("0"), w("0"), 16);
    for (int n = 0; n <= 16; ++n) CHECK(r.present[(std::size_t)n] == 1);
    CHECK(r.certified);
    CHECK(r.cofinite == Verdict::yes);
}

TEST_CASE("return set of the period-2 orbit hits only even times") {
    FlowerAutomaton a = build_flower(gens({"01"}));
    ReturnSetReport r = return_set(a.graph(), w("01"), w("01"), 16);
    for (int n = 0; n <= 16; ++n) CHECK(r.present[(std::size_t)n] == (n % 2 == 0 ? 1 : 0));
    CHECK(r.certified);
    CHECK(r.period == 2);
    CHECK(r.cofinite == Verdict::no);
}

TEST_CASE("even-shift zero word returns at every time") {
    FlowerAutomaton a = build_flower(gens({"0", "11"}));
    ReturnSetReport r = return_set(a.graph(), w("0"), w("0"), 16);
    for (int n = 0; n <= 16; ++n) CHECK(r.present[(std::size_t)n] == 1);
    CHECK(r.cofinite == Verdict::yes);
}

TEST_CASE("return set preconditions") {
    FlowerAutomaton a = build_flower(gens({"0", "11"}));
    CHECK_THROWS_AS(return_set(a.graph(), w("010"), w("0"), 16), error);
    CHECK_THROWS_AS(return_set(a.graph(), w("0"), w("0"), 1), error);
}

TEST_CASE("member extends the window through the certified tail") {
    FlowerAutomaton a = build_flower(gens({"01"}));
    ReturnSetReport r = return_set(a.graph(), w("01"), w("01"), 16);
    REQUIRE(r.certified);
    for (long long n = 17; n <= 200; ++n) {
        auto m = r.member(n);
        REQUIRE(m.has_value());
        CHECK(*m == (n % 2 == 0));
    }
}

TEST_CASE("return sets match the brute-force placement oracle") {
    std::vector<GeneratorSet> corpus = {gens({"0", "11"}), gens({"01"}), gens({"0", "1"}),
                                        gens({"0", "110"}), gens({"011", "0101"}),
                                        gens({"00", "000"})};
    for (const GeneratorSet& g : corpus) {
        FlowerAutomaton a = build_flower(g);
        auto keys = oracle::language_keys(raw(g), 12);
        LanguageTable lang = language(a, 2);
        for (int lu = 1; lu <= 2; ++lu)
            for (int lv = 1; lv <= 2; ++lv)
                for (const Word& u : lang.at(lu))
                    for (const Word& v : lang.at(lv)) {
                        ReturnSetReport r = return_set(a.graph(), u, v, 10);
                        for (int n = 0; n + (int)v.size() <= 12 && n <= 10; ++n)
                            CHECK(r.present[(std::size_t)n] ==
                                  (oracle_return(keys, g.alphabet().size, u.symbols(),
                                                 v.symbols(), n)
                                       ? 1
                                       : 0));
                    }
    }
}

TEST_CASE("classification of the period-2 orbit") {
    FlowerAutomaton a = build_flower(gens({"01"}));
    DynamicsVerdict v = classify(a.graph(), 2, 32, 6);
    CHECK(v.transitive == Verdict::yes);
    CHECK(v.totally_transitive == Verdict::no);
    CHECK(v.failing_k == 2);
    CHECK(v.weak_mixing == Verdict::no);
    CHECK(v.mixing == Verdict::no);
    CHECK(v.chain_consistent());
}

TEST_CASE("classification of the even shift") {
    FlowerAutomaton a = build_flower(gens({"0", "11"}));
    DynamicsVerdict v = classify(a.graph(), 3, 32, 6);
    CHECK(v.mixing == Verdict::yes);
    CHECK(v.totally_transitive == Verdict::yes);
    CHECK(v.weak_mixing == Verdict::yes);
    CHECK(v.transitive == Verdict::yes);
}

TEST_CASE("the one-point system from {00, 0000} is mixing") {
    FlowerAutomaton a = build_flower(gens({"00", "0000"}));
    DynamicsVerdict v = classify(a.graph(), 3, 32, 6);
    CHECK(v.mixing == Verdict::yes);
    CHECK(gcd_lengths(gens({"00", "0000"})) == 2); // gcd 2 does not preclude mixing
}

TEST_CASE("classify input validation") {
    FlowerAutomaton a = build_flower(gens({"0", "11"}));
    CHECK_THROWS_AS(classify(a.graph(), 0, 32, 6), error);
    CHECK_THROWS_AS(classify(a.graph(), 3, 4, 6), error);
    CHECK_THROWS_AS(classify(a.graph(), 3, 32, 1), error);
}

TEST_CASE("verdict chain is monotone on sampled systems") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> count(1, 3), len(1, 4), ab(1, 3);
    for (int t = 0; t < 60; ++t) {
        int k = ab(rng);
        std::vector<Word> ws;
        int m = count(rng);
        for (int i = 0; i < m; ++i) {
            SymString s;
            int n = len(rng);
            for (int j = 0; j < n; ++j) s.push_back((Symbol)(rng() % (unsigned)k));
            ws.push_back(Word(std::move(s), Alphabet(k)));
        }
        GeneratorSet g(std::move(ws), Alphabet(k));
        FlowerAutomaton a = build_flower(g);
        DynamicsVerdict v = classify(a.graph(), 2, 40, 5);
        CHECK(v.chain_consistent());
    }
}

TEST_CASE("a coprime-length pair forces certified mixing") {
    std::vector<GeneratorSet> corpus = {gens({"0", "11"}), gens({"10", "011"}),
                                        gens({"010", "1101"}), gens({"0", "10", "110"})};
    for (const GeneratorSet& g : corpus) {
        bool coprime = false;
        for (const Word& x : g.words())
            for (const Word& y : g.words())
                if (std::gcd(x.size(), y.size()) == 1 && !(x == y)) coprime = true;
        REQUIRE(coprime);
        DynamicsVerdict v = classify(build_flower(g).graph(), 2, 48, 4);
        CHECK(v.mixing == Verdict::yes);
    }
}
