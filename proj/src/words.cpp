#include "coded/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coded {

Word parse_word(const std::string& text, Alphabet a) {
    SymString syms;
    if (a.size <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw error(std::string("bad symbol character '") + c + "' in word \"" + text + "\"");
            syms.push_back(static_cast<Symbol>(c - '0'));
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            int v;
            try {
                v = std::stoi(item);
            } catch (const std::exception&) {
                throw error("bad symbol \"" + item + "\" in word \"" + text + "\"");
            }
            if (v < 0 || v > 255) throw error("symbol out of range in word \"" + text + "\"");
            syms.push_back(static_cast<Symbol>(v));
        }
    }
    return Word(std::move(syms), a);
}

std::string format_word(const Word& w) {
    std::string out;
    if (w.alphabet().size <= 10) {
        for (Symbol s : w.symbols()) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(int(w[i]));
        }
    }
    return out;
}

std::vector<Word> factors(const Word& w, std::size_t n) {
    if (n < 1) throw error("factors: n must be >= 1");
    std::vector<Word> out;
    if (n > w.size()) return out;
    std::set<Word> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        Word f = w.subword(i, n);
        if (seen.insert(f).second) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t least_period(const Word& w) {
    if (w.empty()) throw error("least_period: empty word");
    const auto& s = w.symbols();
    for (std::size_t p = 1; p < s.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < s.size(); ++i)
            if (s[i] != s[i + p]) { ok = false; break; }
        if (ok) return p;
    }
    return s.size();
}

Word min_rotation(const Word& w) {
    if (w.empty()) return w;
    const auto& s = w.symbols();
    SymString best = s;
    SymString cur = s;
    for (std::size_t r = 1; r < s.size(); ++r) {
        cur = s.substr(r) + s.substr(0, r);
        if (cur < best) best = cur;
    }
    return Word(std::move(best), w.alphabet());
}

Word power(const Word& w, std::size_t k) {
    SymString out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += w.symbols();
    return Word(std::move(out), w.alphabet());
}

bool is_factor(const Word& needle, const Word& hay) {
    if (needle.empty()) return true;
    return hay.symbols().find(needle.symbols()) != SymString::npos;
}

} // namespace coded
