#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coded/words.hpp"

using namespace coded;

namespace {

const Alphabet kBin(2);

Word w(const char* digits, Alphabet a = kBin) { return parse_word(digits, a); }

std::set<Word> to_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }

// Brute-force period: try every p from 1 up.
std::size_t brute_period(const Word& u) {
    for (std::size_t p = 1; p < u.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < u.size(); ++i)
            if (u[i] != u[i + p]) { ok = false; break; }
        if (ok) return p;
    }
    return u.size() == 0 ? 0 : u.size();
}

Word random_word(std::mt19937& rng, int max_len, int k) {
    std::uniform_int_distribution<int> len(1, max_len), sym(0, k - 1);
    SymString s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back((Symbol)sym(rng));
    return Word(std::move(s), Alphabet(k));
}

} // namespace

TEST_CASE("alphabet bounds") {
    CHECK_THROWS_AS(Alphabet(0), error);
    CHECK_THROWS_AS(Alphabet(65), error);
    CHECK(Alphabet(1).size == 1);
    CHECK(Alphabet(64).size == 64);
}

TEST_CASE("word symbol validation") {
    CHECK_THROWS_AS(Word::from_symbols({0, 2}, kBin), error);
    CHECK(Word::from_symbols({0, 1}, kBin).size() == 2);
}

TEST_CASE("parse and format round-trip") {
    CHECK(format_word(w("0110")) == "0110");
    CHECK(w("0110") == Word::from_symbols({0, 1, 1, 0}, kBin));
    CHECK_THROWS_AS(parse_word("012", kBin), error);

    Alphabet big(12);
    Word v = parse_word("0,11,3", big);
    CHECK(v == Word::from_symbols({0, 11, 3}, big));
    CHECK(format_word(v) == "0,11,3");
    CHECK(parse_word(format_word(v), big) == v);
}

TEST_CASE("shortlex ordering") {
    CHECK(w("1") < w("00"));
    CHECK(w("00") < w("01"));
    CHECK_FALSE(w("01") < w("01"));
    CHECK(w("11") < w("000"));
}

TEST_CASE("factors examples") {
    CHECK(to_set(factors(w("0110"), 2)) == std::set<Word>{w("01"), w("11"), w("10")});
    CHECK(to_set(factors(w("000"), 1)) == std::set<Word>{w("0")});
    CHECK(factors(w("01"), 3).empty());
}

TEST_CASE("least period examples") {
    CHECK(least_period(w("0101")) == 2);
    CHECK(least_period(w("011")) == 3);
    CHECK(least_period(w("0000")) == 1);
    CHECK_THROWS_AS(least_period(Word(SymString(), kBin)), error);
}

TEST_CASE("least period equals brute force for all binary words up to length 12") {
    for (int n = 1; n <= 12; ++n) {
        for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
            SymString s;
            for (int i = 0; i < n; ++i) s.push_back((Symbol)((bits >> i) & 1));
            Word u(s, kBin);
            CHECK(least_period(u) == brute_period(u));
        }
    }
}

TEST_CASE("least period vs brute force on longer random words") {
    std::mt19937 rng(20260823);
    for (int t = 0; t < 2000; ++t) {
        Word u = random_word(rng, 16, 3);
        CHECK(least_period(u) == brute_period(u));
    }
}

TEST_CASE("factor sets embed into the doubled word") {
    std::mt19937 rng(7);
    for (int t = 0; t < 500; ++t) {
        Word u = random_word(rng, 10, 3);
        for (std::size_t n = 1; n <= u.size(); ++n) {
            auto single = to_set(factors(u, n));
            auto doubled = to_set(factors(u + u, n));
            CHECK(std::includes(doubled.begin(), doubled.end(), single.begin(), single.end()));
        }
    }
}

TEST_CASE("min rotation is minimal among all rotations") {
    std::mt19937 rng(11);
    for (int t = 0; t < 500; ++t) {
        Word u = random_word(rng, 10, 3);
        Word best = u;
        for (std::size_t r = 1; r < u.size(); ++r) {
            Word rot = u.subword(r, u.size() - r) + u.subword(0, r);
            if (rot.symbols() < best.symbols()) best = rot;
        }
        CHECK(min_rotation(u).symbols() == best.symbols());
    }
}

TEST_CASE("power and is_factor") {
    CHECK(power(w("01"), 3) == w("010101"));
    CHECK(power(w("1"), 0).empty());
    CHECK(is_factor(w("11"), w("0110")));
    CHECK_FALSE(is_factor(w("010"), w("0110")));
    CHECK(is_factor(w("0110"), w("0110")));
}
