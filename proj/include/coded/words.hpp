#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Alphabets, finite words and elementary word combinatorics. Everything in
// this header is immutable after construction and safe to share across
// threads.

namespace coded {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Symbol = std::uint8_t;

// Symbol storage. basic_string keeps short words inline, which matters for
// the enumeration-heavy callers.
using SymString = std::basic_string<Symbol>;

struct Alphabet {
    int size = 0;

    explicit Alphabet(int n) : size(n) {
        if (n < 1 || n > 64)
            throw error("alphabet size must be in [1,64], got " + std::to_string(n));
    }

    bool operator==(const Alphabet&) const = default;
};

class Word {
public:
    Word() = default;
    Word(SymString syms, Alphabet alphabet)
        : syms_(std::move(syms)), alphabet_(static_cast<std::uint8_t>(alphabet.size)) {
        for (Symbol s : syms_)
            if (s >= alphabet_)
                throw error("symbol " + std::to_string(int(s)) + " out of alphabet of size " +
                            std::to_string(int(alphabet_)));
    }

    static Word from_symbols(std::initializer_list<int> syms, Alphabet a) {
        SymString s;
        for (int v : syms) s.push_back(static_cast<Symbol>(v));
        return Word(std::move(s), a);
    }

    const SymString& symbols() const { return syms_; }
    Alphabet alphabet() const { return Alphabet(alphabet_); }
    std::size_t size() const { return syms_.size(); }
    bool empty() const { return syms_.empty(); }
    Symbol operator[](std::size_t i) const { return syms_[i]; }

    Word subword(std::size_t pos, std::size_t len) const {
        return Word(syms_.substr(pos, len), alphabet());
    }

    friend Word operator+(const Word& a, const Word& b) {
        if (a.alphabet_ != b.alphabet_)
            throw error("concatenation across different alphabets");
        return Word(a.syms_ + b.syms_, a.alphabet());
    }

    // Shortlex; keeps enumerations deterministic.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.syms_.size() != b.syms_.size()) return a.syms_.size() < b.syms_.size();
        return a.syms_ < b.syms_;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.syms_ == b.syms_; }

private:
    SymString syms_;
    std::uint8_t alphabet_ = 1;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (Symbol s : w.symbols()) {
            h ^= s;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct Cylinder {
    Word word;
    long long offset = 0; // starting coordinate p
};

// Textual I/O: digit string for alphabets of size <= 10, comma-separated
// integers otherwise.
Word parse_word(const std::string& text, Alphabet a);
std::string format_word(const Word& w);

// All contiguous length-n subwords of w; empty when n > |w|.
std::vector<Word> factors(const Word& w, std::size_t n);

// Smallest p >= 1 with w[i] == w[i+p] for all i with i+p < |w|.
std::size_t least_period(const Word& w);

// Lexicographically minimal rotation of w.
Word min_rotation(const Word& w);

// w repeated k times.
Word power(const Word& w, std::size_t k);

bool is_factor(const Word& needle, const Word& hay);

} // namespace coded
