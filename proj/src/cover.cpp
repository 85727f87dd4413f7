#include "coded/cover.hpp"

#include <algorithm>
#include <set>

namespace coded {

namespace {

SymString apply_rules(const std::vector<Word>& rules, const SymString& w) {
    SymString out;
    for (Symbol s : w) out += rules[s].symbols();
    return out;
}

SymString repeat_apply(const std::vector<Word>& rules, SymString w, int times) {
    for (int i = 0; i < times; ++i) w = apply_rules(rules, w);
    return w;
}

} // namespace

SequenceProvider::SequenceProvider(std::string name, std::vector<Word> rules, int k_power)
    : name_(std::move(name)), rules_(std::move(rules)),
      base_alphabet_((int)std::max<std::size_t>(rules_.size(), 1)), k_power_(k_power) {
    if (rules_.empty() || rules_.size() > 32)
        throw error("substitution must have between 1 and 32 rules");
    if (k_power_ < 1) throw error("k_power must be >= 1");
    for (const Word& r : rules_) {
        if (r.empty()) throw error("substitution must be non-erasing");
        for (Symbol s : r.symbols())
            if (s >= rules_.size()) throw error("substitution image symbol out of range");
    }

    auto find_seed = [&](bool prefix) -> std::pair<int, int> {
        for (int a = 0; a < (int)rules_.size(); ++a) {
            for (int p = 1; p <= 4; ++p) {
                SymString img = repeat_apply(rules_, SymString(1, (Symbol)a), p);
                if (img.size() < 2) continue;
                Symbol anchor = prefix ? img.front() : img.back();
                if (anchor == (Symbol)a) return {a, p};
            }
        }
        throw error("substitution has no expanding fixed-point seed");
    };
    auto [r, pr] = find_seed(true);
    right_seed_ = (Symbol)r;
    right_power_ = pr;
    auto [l, pl] = find_seed(false);
    left_seed_ = (Symbol)l;
    left_power_ = pl;

    // The junction pair must occur in the substitution language so the
    // two-sided point is legal.
    SymString probe(1, right_seed_);
    SymString pair;
    pair.push_back(left_seed_);
    pair.push_back(right_seed_);
    bool legal = false;
    for (int i = 0; i < 16 && !legal; ++i) {
        probe = apply_rules(rules_, probe);
        if (probe.find(pair) != SymString::npos) legal = true;
        if (probe.size() > 100000) break;
    }
    if (!legal) throw error("no legal two-sided anchoring for this substitution");

    left_ = SymString(1, left_seed_);
    right_ = SymString(1, right_seed_);
}

void SequenceProvider::extend(long long need_left, long long need_right) const {
    // Each side is only fixed under the p-th iterate found for its seed, so
    // extension must apply the substitution p times per step.
    while ((long long)right_.size() <= need_right)
        right_ = repeat_apply(rules_, right_, right_power_);
    while ((long long)left_.size() < need_left)
        left_ = repeat_apply(rules_, left_, left_power_);
}

Symbol SequenceProvider::at(long long pos) const {
    if (pos >= 0) {
        extend(0, pos);
        return right_[(std::size_t)pos];
    }
    extend(-pos, 0);
    return left_[left_.size() - (std::size_t)(-pos)];
}

Word SequenceProvider::window(int b) const {
    if (b < 1) throw error("window radius must be >= 1");
    SymString out;
    out.reserve(2 * (std::size_t)b + 1);
    for (long long i = -b; i <= b; ++i) out.push_back(at(i * k_power_));
    return Word(std::move(out), base_alphabet_);
}

SequenceProvider SequenceProvider::thue_morse(int k_power) {
    Alphabet a(2);
    return SequenceProvider("thue-morse",
                            {parse_word("01", a), parse_word("10", a)}, k_power);
}

SequenceProvider SequenceProvider::fibonacci(int k_power) {
    Alphabet a(2);
    return SequenceProvider("fibonacci", {parse_word("01", a), parse_word("0", a)}, k_power);
}

SequenceProvider SequenceProvider::chacon(int k_power) {
    Alphabet a(2);
    return SequenceProvider("chacon", {parse_word("0010", a), parse_word("1", a)}, k_power);
}

SequenceProvider SequenceProvider::by_name(const std::string& name, int k_power) {
    if (name == "thue-morse" || name == "thue_morse") return thue_morse(k_power);
    if (name == "fibonacci") return fibonacci(k_power);
    if (name == "chacon") return chacon(k_power);
    throw error("unknown sequence provider \"" + name + "\"");
}

LineCoverSystem::LineCoverSystem(SequenceProvider provider, int window)
    : provider_(std::move(provider)), window_(window) {
    if (window < 1) throw error("cover window must be >= 1");
    cache_ = provider_.window(window);
}

Alphabet LineCoverSystem::alphabet() const { return Alphabet(2 * base_size()); }

Symbol LineCoverSystem::x(long long b) const {
    if (b < -window_ || b > window_) throw error("x index outside the window");
    return cache_[(std::size_t)(b + window_)];
}

int LineCoverSystem::safe_range(int n) const {
    return window_ - n; // negative when no start is safe
}

namespace {

// Walks with a given label are deterministic per start vertex: forward and
// backward labels live in disjoint symbol ranges.
std::optional<WalkTrace> trace_from(const LineCoverSystem& s, const Word& u, long long start) {
    const int base = s.base_size();
    long long p = start, lo = start, hi = start;
    for (Symbol c : u.symbols()) {
        if (c < base) {
            if (p + 1 > s.window() || s.x(p) != c) return std::nullopt;
            ++p;
        } else {
            if (p - 1 < -s.window() || s.x(p - 1) != c - base) return std::nullopt;
            --p;
        }
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    WalkTrace t;
    t.label = u;
    t.start_vertex = start;
    t.leftmost = lo;
    t.rightmost = hi;
    t.closed = (p == start);
    SymString xs, ys;
    for (long long b = lo; b < hi; ++b) xs.push_back(s.x(b));
    for (long long b = hi - 1; b >= lo; --b) ys.push_back((Symbol)(s.x(b) + base));
    t.x_of_u = Word(std::move(xs), s.provider().base_alphabet());
    t.y_of_u = Word(std::move(ys), s.alphabet());
    return t;
}

long long end_vertex(const LineCoverSystem& s, const WalkTrace& t) {
    long long p = t.start_vertex;
    for (Symbol c : t.label.symbols()) p += (c < s.base_size()) ? 1 : -1;
    return p;
}

} // namespace

std::vector<WalkTrace> walk_traces(const LineCoverSystem& s, const Word& u) {
    if (u.empty()) throw error("walk_traces: empty label");
    std::vector<WalkTrace> out;
    for (long long b = -s.window(); b <= s.window(); ++b)
        if (auto t = trace_from(s, u, b)) out.push_back(std::move(*t));
    return out;
}

std::vector<Word> cover_language(const LineCoverSystem& s, int n) {
    if (n < 1) throw error("cover_language: n must be >= 1");
    if (s.safe_range(n) < 0) throw error("cover_language: n exceeds the safe window range");
    const int base = s.base_size();
    std::set<Word> words;
    // all length-n walks from every safe start
    for (long long b = -s.safe_range(n); b <= s.safe_range(n); ++b) {
        struct Node {
            long long p;
            SymString label;
        };
        std::vector<Node> stack{{b, SymString()}};
        while (!stack.empty()) {
            Node nd = std::move(stack.back());
            stack.pop_back();
            if ((int)nd.label.size() == n) {
                words.insert(Word(nd.label, s.alphabet()));
                continue;
            }
            SymString fwd = nd.label;
            fwd.push_back(s.x(nd.p));
            stack.push_back({nd.p + 1, std::move(fwd)});
            SymString bwd = nd.label;
            bwd.push_back((Symbol)(s.x(nd.p - 1) + base));
            stack.push_back({nd.p - 1, std::move(bwd)});
        }
    }
    return {words.begin(), words.end()};
}

std::vector<std::pair<Word, int>> cover_periodic(const LineCoverSystem& s, int p) {
    if (p < 1) throw error("cover_periodic: p must be >= 1");
    if (s.safe_range(p) < 0) throw error("cover_periodic: p exceeds the safe window range");
    std::set<std::pair<Word, int>> found;
    for (int m = 1; m <= p; ++m) {
        for (const Word& u : cover_language(s, m)) {
            auto traces = walk_traces(s, u);
            bool closed = std::any_of(traces.begin(), traces.end(),
                                      [](const WalkTrace& t) { return t.closed; });
            if (!closed) continue;
            if ((int)least_period(u) != m) continue;
            found.insert({min_rotation(u), m});
        }
    }
    return {found.begin(), found.end()};
}

ReturnSetReport cover_return_set(const LineCoverSystem& s, const Word& u, const Word& v,
                                 long long horizon) {
    if (horizon < (long long)(u.size() + v.size()))
        throw error("cover_return_set: horizon must be at least |u| + |v|");
    auto tu = walk_traces(s, u);
    auto tv = walk_traces(s, v);
    if (tu.empty()) throw error("cover_return_set: u not realizable in the window");
    if (tv.empty()) throw error("cover_return_set: v not realizable in the window");

    ReturnSetReport rep;
    rep.u = u;
    rep.v = v;
    rep.horizon = horizon;
    rep.present.assign((std::size_t)horizon + 1, 0);
    rep.cofinite = Verdict::unknown; // finite window of an infinite graph

    for (long long n = 0; n < (long long)u.size() && n <= horizon; ++n) {
        bool consistent = true;
        for (std::size_t i = 0; i + n < u.size() && i < v.size(); ++i)
            if (u[(std::size_t)(i + n)] != v[i]) { consistent = false; break; }
        if (!consistent) continue;
        Word merged = (n + (long long)v.size() <= (long long)u.size())
                          ? u
                          : u.subword(0, (std::size_t)n) + v;
        rep.present[(std::size_t)n] = walk_traces(s, merged).empty() ? 0 : 1;
    }

    // minimal even / odd gap distances between u-ends and v-starts
    long long dmin[2] = {-1, -1};
    for (const WalkTrace& a : tu) {
        long long e = end_vertex(s, a);
        for (const WalkTrace& b : tv) {
            long long d = std::llabs(e - b.start_vertex);
            int par = (int)(d % 2);
            if (dmin[par] < 0 || d < dmin[par]) dmin[par] = d;
        }
    }
    for (long long n = (long long)u.size(); n <= horizon; ++n) {
        long long t = n - (long long)u.size();
        long long d = dmin[t % 2];
        if (d >= 0 && t >= d) rep.present[(std::size_t)n] = 1;
    }

    long long run = 0;
    for (char c : rep.present) {
        run = c ? run + 1 : 0;
        rep.thickest_interval = std::max(rep.thickest_interval, run);
    }
    return rep;
}

SftWindow sft_window(const LineCoverSystem& s, int b) {
    (void)s;
    if (b < 1 || b > 16) throw error("sft_window: b must be in [1,16]");
    std::vector<Edge> edges;
    for (int v = -b; v < b; ++v) {
        int from = v + b, to = v + b + 1;
        edges.push_back({from, (Symbol)(2 * (v + b)), to});
        edges.push_back({to, (Symbol)(2 * (v + b) + 1), from});
    }
    return SftWindow{LabeledGraph(2 * b + 1, Alphabet(4 * b), edges), b};
}

} // namespace coded
