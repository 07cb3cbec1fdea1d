#pragma once

/*
 * Deterministic and nondeterministic finite automata over integer-coded
 * alphabets, including tuple alphabets used by relation automata.
 *
 * All stored DFAs are complete: every (state, symbol) has a successor and a
 * designated sink absorbs junk. canonicalize() returns the minimal complete
 * automaton with states renumbered in BFS order from the initial state, so
 * canonical automata of equal languages are structurally identical.
 *
 * rank/unrank enumerate a regular language in genealogical order (length,
 * then lexicographic by symbol id) using per-length path-count tables.
 */

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "wbound/base.hpp"

namespace wbound {

struct Dfa {
    int num_symbols = 0;
    int initial = 0;
    std::vector<bool> accepting;      // size = number of states
    std::vector<int> trans;           // trans[s * num_symbols + c]

    int num_states() const { return static_cast<int>(accepting.size()); }

    int step(int state, int symbol) const { return trans[state * num_symbols + symbol]; }

    int run(const Word& w) const {
        int q = initial;
        for (int c : w) q = step(q, c);
        return q;
    }

    bool accepts(const Word& w) const { return accepting[run(w)]; }

    int add_state(bool acc = false) {
        accepting.push_back(acc);
        trans.resize(trans.size() + num_symbols, -1);
        return num_states() - 1;
    }

    void set_trans(int from, int symbol, int to) { trans[from * num_symbols + symbol] = to; }

    // Replaces every missing transition by a fresh sink (or an existing one).
    void complete() {
        bool missing = false;
        for (int t : trans)
            if (t < 0) { missing = true; break; }
        if (!missing) return;
        int sink = add_state(false);
        for (auto& t : trans)
            if (t < 0) t = sink;
    }

    static Dfa empty_language(int num_symbols) {
        Dfa a;
        a.num_symbols = num_symbols;
        a.add_state(false);
        for (int c = 0; c < num_symbols; ++c) a.set_trans(0, c, 0);
        return a;
    }

    static Dfa universal(int num_symbols) {
        Dfa a = empty_language(num_symbols);
        a.accepting[0] = true;
        return a;
    }

    static Dfa single_word(int num_symbols, const Word& w) {
        Dfa a;
        a.num_symbols = num_symbols;
        int sink = -1;
        int n = static_cast<int>(w.size());
        for (int i = 0; i <= n; ++i) a.add_state(i == n);
        sink = a.add_state(false);
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c < num_symbols; ++c)
                a.set_trans(i, c, (i < n && w[i] == c) ? i + 1 : sink);
        for (int c = 0; c < num_symbols; ++c) a.set_trans(sink, c, sink);
        return a;
    }
};

// ---------------------------------------------------------------------------
// Reachability, minimization, canonical form

inline Dfa reachable_part(const Dfa& a) {
    std::vector<int> id(a.num_states(), -1);
    std::vector<int> order;
    std::queue<int> q;
    id[a.initial] = 0;
    order.push_back(a.initial);
    q.push(a.initial);
    while (!q.empty()) {
        int s = q.front(); q.pop();
        for (int c = 0; c < a.num_symbols; ++c) {
            int t = a.step(s, c);
            if (id[t] < 0) {
                id[t] = static_cast<int>(order.size());
                order.push_back(t);
                q.push(t);
            }
        }
    }
    Dfa r;
    r.num_symbols = a.num_symbols;
    r.initial = 0;
    for (int s : order) r.add_state(a.accepting[s]);
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        for (int c = 0; c < a.num_symbols; ++c)
            r.set_trans(i, c, id[a.step(order[i], c)]);
    return r;
}

// Hopcroft partition refinement on a complete, reachable DFA.
inline std::vector<int> minimize_classes(const Dfa& a, const std::vector<int>& initial_class) {
    int n = a.num_states();
    int k = a.num_symbols;
    // inverse transitions
    std::vector<std::vector<std::vector<int>>> inv(k, std::vector<std::vector<int>>(n));
    for (int s = 0; s < n; ++s)
        for (int c = 0; c < k; ++c) inv[c][a.step(s, c)].push_back(s);

    int num_classes = *std::max_element(initial_class.begin(), initial_class.end()) + 1;
    std::vector<int> cls = initial_class;
    std::vector<std::vector<int>> members(num_classes);
    for (int s = 0; s < n; ++s) members[cls[s]].push_back(s);

    std::set<std::pair<int, int>> work;  // (class, symbol)
    for (int b = 0; b < num_classes; ++b)
        for (int c = 0; c < k; ++c) work.insert({b, c});

    std::vector<int> touched_count;   // per class, how many members hit
    std::vector<char> in_hit(n, 0);
    while (!work.empty()) {
        auto [b, c] = *work.begin();
        work.erase(work.begin());
        // states with a c-transition into class b
        std::vector<int> hit;
        for (int t : members[b])
            for (int s : inv[c][t])
                if (!in_hit[s]) { in_hit[s] = 1; hit.push_back(s); }
        if (hit.empty()) continue;
        std::map<int, std::vector<int>> by_class;
        for (int s : hit) by_class[cls[s]].push_back(s);
        for (auto& [old_b, part] : by_class) {
            if (static_cast<int>(part.size()) == static_cast<int>(members[old_b].size())) continue;
            // split old_b into part / rest
            int nb = num_classes++;
            members.push_back(part);
            for (int s : part) cls[s] = nb;
            auto& rest = members[old_b];
            rest.erase(std::remove_if(rest.begin(), rest.end(),
                                      [&](int s) { return cls[s] == nb; }),
                       rest.end());
            for (int cc = 0; cc < k; ++cc) {
                if (work.count({old_b, cc})) {
                    work.insert({nb, cc});
                } else {
                    // add the smaller half
                    if (members[nb].size() < members[old_b].size()) work.insert({nb, cc});
                    else work.insert({old_b, cc});
                }
            }
        }
        for (int s : hit) in_hit[s] = 0;
    }
    return cls;
}

inline Dfa quotient(const Dfa& a, const std::vector<int>& cls) {
    int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
    Dfa r;
    r.num_symbols = a.num_symbols;
    r.accepting.assign(num_classes, false);
    r.trans.assign(static_cast<size_t>(num_classes) * a.num_symbols, -1);
    for (int s = 0; s < a.num_states(); ++s) {
        r.accepting[cls[s]] = a.accepting[s];
        for (int c = 0; c < a.num_symbols; ++c) r.set_trans(cls[s], c, cls[a.step(s, c)]);
    }
    r.initial = cls[a.initial];
    return r;
}

inline Dfa bfs_renumber(const Dfa& a) { return reachable_part(a); }

/// Minimal, complete, reachable-only automaton with deterministic state ids.
inline Dfa canonicalize(const Dfa& a0) {
    Dfa a = reachable_part(a0);
    std::vector<int> init(a.num_states());
    for (int s = 0; s < a.num_states(); ++s) init[s] = a.accepting[s] ? 1 : 0;
    std::vector<int> cls = minimize_classes(a, init);
    return bfs_renumber(quotient(a, cls));
}

/// Number of states that are not the all-rejecting sink, after canonicalize.
inline int live_state_count(const Dfa& canon) {
    int dead = 0;
    for (int s = 0; s < canon.num_states(); ++s) {
        if (canon.accepting[s]) continue;
        bool sink = true;
        for (int c = 0; c < canon.num_symbols; ++c)
            if (canon.step(s, c) != s) { sink = false; break; }
        if (sink) ++dead;
    }
    return canon.num_states() - dead;
}

/// Moore-style minimization of an automaton with per-state outputs: trims to
/// reachable states and merges states with equal behavior. Returns the new
/// automaton and outputs; accepting flags are ignored.
inline std::pair<Dfa, std::vector<int>> minimize_with_outputs(const Dfa& a0,
                                                              const std::vector<int>& out0) {
    // reachable trim, keeping outputs aligned
    std::vector<int> id(a0.num_states(), -1), order;
    std::queue<int> bfs;
    id[a0.initial] = 0;
    order.push_back(a0.initial);
    bfs.push(a0.initial);
    while (!bfs.empty()) {
        int s = bfs.front(); bfs.pop();
        for (int c = 0; c < a0.num_symbols; ++c) {
            int t = a0.step(s, c);
            if (id[t] < 0) { id[t] = static_cast<int>(order.size()); order.push_back(t); bfs.push(t); }
        }
    }
    Dfa a;
    a.num_symbols = a0.num_symbols;
    a.initial = 0;
    std::vector<int> out;
    for (int s : order) { a.add_state(false); out.push_back(out0[s]); }
    for (size_t i = 0; i < order.size(); ++i)
        for (int c = 0; c < a.num_symbols; ++c) a.set_trans(static_cast<int>(i), c, id[a0.step(order[i], c)]);

    // initial partition by output
    std::map<int, int> cls_of_output;
    std::vector<int> init(a.num_states());
    for (int s = 0; s < a.num_states(); ++s) {
        auto it = cls_of_output.find(out[s]);
        if (it == cls_of_output.end())
            it = cls_of_output.emplace(out[s], static_cast<int>(cls_of_output.size())).first;
        init[s] = it->second;
    }
    std::vector<int> cls = minimize_classes(a, init);
    Dfa q = quotient(a, cls);
    std::vector<int> qout(q.num_states());
    for (int s = 0; s < a.num_states(); ++s) qout[cls[s]] = out[s];
    // BFS renumber for deterministic ids
    Dfa r = reachable_part(q);
    // recompute the renumbering map to carry outputs across
    std::vector<int> rid(q.num_states(), -1);
    std::vector<int> rorder;
    std::queue<int> bq;
    rid[q.initial] = 0;
    rorder.push_back(q.initial);
    bq.push(q.initial);
    while (!bq.empty()) {
        int s = bq.front(); bq.pop();
        for (int c = 0; c < q.num_symbols; ++c) {
            int t = q.step(s, c);
            if (rid[t] < 0) { rid[t] = static_cast<int>(rorder.size()); rorder.push_back(t); bq.push(t); }
        }
    }
    std::vector<int> rout;
    for (int s : rorder) rout.push_back(qout[s]);
    return {r, rout};
}

// ---------------------------------------------------------------------------
// Boolean algebra

enum class BoolOp { And, Or, AndNot, Xor };

inline Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
    require(a.num_symbols == b.num_symbols, "combine: alphabet mismatch");
    auto apply = [op](bool x, bool y) {
        switch (op) {
            case BoolOp::And: return x && y;
            case BoolOp::Or: return x || y;
            case BoolOp::AndNot: return x && !y;
            case BoolOp::Xor: return x != y;
        }
        return false;
    };
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> states;
    Dfa r;
    r.num_symbols = a.num_symbols;
    auto intern = [&](int x, int y) {
        auto it = id.find({x, y});
        if (it != id.end()) return it->second;
        int s = r.add_state(apply(a.accepting[x], b.accepting[y]));
        id[{x, y}] = s;
        states.push_back({x, y});
        return s;
    };
    intern(a.initial, b.initial);
    for (int i = 0; i < static_cast<int>(states.size()); ++i) {
        auto [x, y] = states[i];
        for (int c = 0; c < r.num_symbols; ++c)
            r.set_trans(i, c, intern(a.step(x, c), b.step(y, c)));
    }
    return r;
}

/// Canonical combination under a Boolean connective.
inline Dfa combine(const Dfa& a, const Dfa& b, BoolOp op) {
    return canonicalize(product(a, b, op));
}

inline Dfa complement(const Dfa& a) {
    Dfa r = a;
    for (size_t i = 0; i < r.accepting.size(); ++i) r.accepting[i] = !r.accepting[i];
    return r;
}

inline bool is_empty(const Dfa& a) {
    Dfa r = reachable_part(a);
    return std::none_of(r.accepting.begin(), r.accepting.end(), [](bool b) { return b; });
}

/// Exact language equality via product of the two automata.
inline bool equivalent(const Dfa& a, const Dfa& b)
{
    require(a.num_symbols == b.num_symbols, "equivalent: alphabet mismatch");
    return is_empty(product(a, b, BoolOp::Xor));
}

inline std::string canonical_key(const Dfa& canon) {
    std::ostringstream os;
    os << canon.num_states() << ':' << canon.initial << ':';
    for (bool b : canon.accepting) os << (b ? '1' : '0');
    os << ':';
    for (int t : canon.trans) os << t << ',';
    return os.str();
}

// ---------------------------------------------------------------------------
// NFA and determinization

struct Nfa {
    int num_symbols = 0;
    std::set<int> initial;
    std::vector<bool> accepting;
    std::vector<std::map<int, std::set<int>>> trans;

    int num_states() const { return static_cast<int>(accepting.size()); }
    int add_state(bool acc = false) {
        accepting.push_back(acc);
        trans.emplace_back();
        return num_states() - 1;
    }
    void add_trans(int from, int symbol, int to) {
        require(from < num_states() && to < num_states(), "nfa: undeclared state");
        trans[from][symbol].insert(to);
    }
};

inline Dfa determinize(const Nfa& n) {
    std::map<std::set<int>, int> id;
    std::vector<std::set<int>> sets;
    Dfa r;
    r.num_symbols = n.num_symbols;
    auto intern = [&](const std::set<int>& s) {
        auto it = id.find(s);
        if (it != id.end()) return it->second;
        bool acc = std::any_of(s.begin(), s.end(), [&](int q) { return n.accepting[q]; });
        int x = r.add_state(acc);
        id[s] = x;
        sets.push_back(s);
        return x;
    };
    intern(n.initial);
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
        std::set<int> cur = sets[i];
        for (int c = 0; c < n.num_symbols; ++c) {
            std::set<int> nxt;
            for (int q : cur) {
                auto it = n.trans[q].find(c);
                if (it != n.trans[q].end()) nxt.insert(it->second.begin(), it->second.end());
            }
            r.set_trans(i, c, intern(nxt));
        }
    }
    return r;
}

inline Nfa to_nfa(const Dfa& a) {
    Nfa n;
    n.num_symbols = a.num_symbols;
    n.initial = {a.initial};
    for (int s = 0; s < a.num_states(); ++s) n.add_state(a.accepting[s]);
    for (int s = 0; s < a.num_states(); ++s)
        for (int c = 0; c < a.num_symbols; ++c) n.add_trans(s, c, a.step(s, c));
    return n;
}

inline Dfa reverse_language(const Dfa& a) {
    Nfa n;
    n.num_symbols = a.num_symbols;
    for (int s = 0; s < a.num_states(); ++s) n.add_state(s == a.initial);
    for (int s = 0; s < a.num_states(); ++s)
        for (int c = 0; c < a.num_symbols; ++c) n.add_trans(a.step(s, c), c, s);
    for (int s = 0; s < a.num_states(); ++s)
        if (a.accepting[s]) n.initial.insert(s);
    return canonicalize(determinize(n));
}

// ---------------------------------------------------------------------------
// Tuple alphabets

/// Fixed-arity tuple symbols over a common per-track alphabet of size `base`.
/// Symbol ids encode tracks little-endian: id = t0 + t1*base + t2*base^2 ...
struct TupleShape {
    int tracks = 1;
    int base = 0;

    int num_symbols() const {
        int n = 1;
        for (int i = 0; i < tracks; ++i) n *= base;
        return n;
    }
    int encode(const std::vector<int>& letters) const {
        int id = 0;
        for (int i = tracks - 1; i >= 0; --i) id = id * base + letters[i];
        return id;
    }
    std::vector<int> decode(int symbol) const {
        std::vector<int> out(tracks);
        for (int i = 0; i < tracks; ++i) { out[i] = symbol % base; symbol /= base; }
        return out;
    }
    int track_letter(int symbol, int track) const {
        for (int i = 0; i < track; ++i) symbol /= base;
        return symbol % base;
    }
    TupleShape drop(int) const { return TupleShape{tracks - 1, base}; }
};

/// Existential projection: drop one track, keeping words of the remaining
/// tracks that extend to an accepted tuple. Result is determinized but not
/// yet padding-saturated; callers that need Walnut-style saturation apply
/// saturate_msd afterwards.
inline Dfa project_track(const Dfa& a, const TupleShape& shape, int track) {
    require(shape.tracks >= 2, "project: arity must be at least 2");
    TupleShape out_shape = shape.drop(track);
    Nfa n;
    n.num_symbols = out_shape.num_symbols();
    for (int s = 0; s < a.num_states(); ++s) n.add_state(a.accepting[s]);
    n.initial = {a.initial};
    for (int s = 0; s < a.num_states(); ++s)
        for (int c = 0; c < shape.num_symbols(); ++c) {
            std::vector<int> full = shape.decode(c);
            std::vector<int> rest;
            rest.reserve(shape.tracks - 1);
            for (int i = 0; i < shape.tracks; ++i)
                if (i != track) rest.push_back(full[i]);
            n.add_trans(s, out_shape.encode(rest), a.step(s, c));
        }
    return canonicalize(determinize(n));
}

/// Makes an msd automaton pad-prefix invariant: the result accepts p^a w
/// for every a >= 0 exactly when the input accepts p^b w for some b >= 0,
/// where p is the all-pad column.
inline Dfa saturate_msd(const Dfa& a, int pad_symbol) {
    // states reachable from the initial state by pad columns
    std::set<int> reach;
    int q = a.initial;
    while (!reach.count(q)) { reach.insert(q); q = a.step(q, pad_symbol); }
    Nfa n;
    n.num_symbols = a.num_symbols;
    for (int s = 0; s < a.num_states(); ++s) n.add_state(a.accepting[s]);
    bool any_acc = std::any_of(reach.begin(), reach.end(), [&](int s) { return a.accepting[s]; });
    int fresh = n.add_state(any_acc);
    n.initial = {fresh};
    for (int s = 0; s < a.num_states(); ++s)
        for (int c = 0; c < a.num_symbols; ++c) n.add_trans(s, c, a.step(s, c));
    n.add_trans(fresh, pad_symbol, fresh);
    for (int s : reach)
        for (int c = 0; c < a.num_symbols; ++c)
            if (c != pad_symbol) n.add_trans(fresh, c, a.step(s, c));
    return canonicalize(determinize(n));
}

// ---------------------------------------------------------------------------
// Genealogical rank / unrank

/// Path-count table for genealogical enumeration of L(a). Counts grow on
/// demand and saturate at SAT; consuming a saturated count is an error.
class RankTable {
public:
    explicit RankTable(Dfa a) : a_(std::move(a)) {
        counts_.push_back(std::vector<u64>(a_.num_states()));
        for (int s = 0; s < a_.num_states(); ++s) counts_[0][s] = a_.accepting[s] ? 1 : 0;
    }

    const Dfa& dfa() const { return a_; }

    // number of accepted words of exactly length len starting at state s
    u64 count(int len, int s) const {
        grow(len);
        return counts_[len][s];
    }

    u64 rank(const Word& w) const {
        require(a_.accepts(w), "rank: word not in language");
        std::lock_guard<std::mutex> lock(mu_);
        int len = static_cast<int>(w.size());
        u64 before = 0;
        for (int m = 0; m < len; ++m) before = sat_add(before, count_unlocked(m, a_.initial));
        int q = a_.initial;
        for (int i = 0; i < len; ++i) {
            for (int c = 0; c < w[i]; ++c)
                before = sat_add(before, count_unlocked(len - i - 1, a_.step(q, c)));
            q = a_.step(q, w[i]);
        }
        return checked(before, "rank");
    }

    Word unrank(u64 n) const {
        std::lock_guard<std::mutex> lock(mu_);
        int len = 0;
        u64 remaining = n;
        for (;;) {
            u64 c = count_unlocked(len, a_.initial);
            if (c != SAT && remaining < c) break;
            require(c != SAT, "unrank: count overflow");
            remaining -= c;
            ++len;
            require(len <= 100000, "unrank: index beyond language (finite language?)");
        }
        Word w;
        int q = a_.initial;
        for (int i = 0; i < len; ++i) {
            for (int c = 0;; ++c) {
                require(c < a_.num_symbols, "unrank: internal inconsistency");
                u64 cnt = checked(count_unlocked(len - i - 1, a_.step(q, c)), "unrank");
                if (remaining < cnt) { w.push_back(c); q = a_.step(q, c); break; }
                remaining -= cnt;
            }
        }
        return w;
    }

    /// True when the language has more than n words (cheap check for unrank).
    bool has_at_least(u64 n) const {
        std::lock_guard<std::mutex> lock(mu_);
        u64 total = 0;
        for (int len = 0; len <= 100000; ++len) {
            total = sat_add(total, count_unlocked(len, a_.initial));
            if (total == SAT || total > n) return true;
            // finite language heuristic: no live state can produce more words
            if (count_unlocked(len, a_.initial) == 0 && language_exhausted(len)) return total > n;
        }
        return true;
    }

private:
    void grow(int len) const {
        std::lock_guard<std::mutex> lock(mu_);
        grow_unlocked(len);
    }
    void grow_unlocked(int len) const {
        while (static_cast<int>(counts_.size()) <= len) {
            const auto& prev = counts_.back();
            std::vector<u64> cur(a_.num_states(), 0);
            for (int s = 0; s < a_.num_states(); ++s)
                for (int c = 0; c < a_.num_symbols; ++c)
                    cur[s] = sat_add(cur[s], prev[a_.step(s, c)]);
            counts_.push_back(std::move(cur));
        }
    }
    u64 count_unlocked(int len, int s) const {
        grow_unlocked(len);
        return counts_[len][s];
    }
    bool language_exhausted(int len) const {
        // if every state has zero count at this length, longer words cannot appear
        for (int s = 0; s < a_.num_states(); ++s)
            if (counts_[len][s] != 0) return false;
        return true;
    }

    Dfa a_;
    mutable std::vector<std::vector<u64>> counts_;
    mutable std::mutex mu_;
};

inline u64 rank(const Dfa& a, const Word& w) { return RankTable(a).rank(w); }
inline Word unrank(const Dfa& a, u64 n) { return RankTable(a).unrank(n); }

// ---------------------------------------------------------------------------
// Enumeration helpers

/// All accepted words of length <= max_len, genealogical order.
inline std::vector<Word> enumerate_words(const Dfa& a, int max_len, size_t cap = 1u << 22) {
    std::vector<Word> out;
    Word cur;
    struct Frame { int state; int next_symbol; };
    for (int len = 0; len <= max_len; ++len) {
        // DFS by length for genealogical order within each length
        std::vector<Frame> stack{{a.initial, 0}};
        cur.clear();
        while (!stack.empty()) {
            if (static_cast<int>(cur.size()) == len) {
                if (a.accepting[stack.back().state]) {
                    out.push_back(cur);
                    require(out.size() <= cap, "enumerate_words: cap exceeded");
                }
                stack.pop_back();
                if (!cur.empty()) cur.pop_back();
                continue;
            }
            Frame& f = stack.back();
            if (f.next_symbol >= a.num_symbols) {
                stack.pop_back();
                if (!cur.empty()) cur.pop_back();
                continue;
            }
            int c = f.next_symbol++;
            cur.push_back(c);
            stack.push_back({a.step(f.state, c), 0});
        }
    }
    return out;
}

}  // namespace wbound
