#pragma once

/*
 * Addition relations over numeration systems: triples (x, y, z) of padded
 * representations with val(x) + val(y) = val(z), read as 3-track tuple words.
 *
 * Written triples are always msd with minimal global padding. An automaton
 * tagged lsd consumes the reversed column sequence. adder_explore derives
 * the relation for a linear-recurrence system by breadth-first search over
 * pending-balance vectors expressed in the recurrence basis; the heuristic
 * carry bound is discharged by adder_validate's exhaustive sweep.
 */

#include "wbound/numeration.hpp"

namespace wbound {

struct AdditionAutomaton {
    Dfa dfa;                 // over TupleShape{3, padded alphabet}
    TupleShape shape;
    bool lsd = false;
    std::string system;
    bool validated = false;
    bool pruned = false;     // carry bound cut branches; validation is mandatory

    std::vector<Word> padded_columns(const Ans& ans, u64 x, u64 y, u64 z) const {
        Word rx = ans.rep(x), ry = ans.rep(y), rz = ans.rep(z);
        size_t len = std::max({rx.size(), ry.size(), rz.size()});
        auto pad = [&](Word w) {
            Word out(len - w.size(), ans.pad_letter());
            out.insert(out.end(), w.begin(), w.end());
            return out;
        };
        return {pad(rx), pad(ry), pad(rz)};
    }

    Word encode_columns(const std::vector<Word>& tracks) const {
        size_t len = tracks[0].size();
        Word symbols;
        symbols.reserve(len);
        for (size_t i = 0; i < len; ++i)
            symbols.push_back(shape.encode({tracks[0][i], tracks[1][i], tracks[2][i]}));
        if (lsd) std::reverse(symbols.begin(), symbols.end());
        return symbols;
    }

    bool accepts_values(const Ans& ans, u64 x, u64 y, u64 z) const {
        return dfa.accepts(encode_columns(padded_columns(ans, x, y, z)));
    }
};

// ---------------------------------------------------------------------------
// Built-in adders

/// Carry automaton for base-k addition, least significant digit first.
inline AdditionAutomaton adder_base_k(int k) {
    AdditionAutomaton add;
    add.system = "base:" + std::to_string(k);
    add.lsd = true;
    add.shape = TupleShape{3, k};
    Dfa a;
    a.num_symbols = add.shape.num_symbols();
    int c0 = a.add_state(true);
    int c1 = a.add_state(false);
    int sink = a.add_state(false);
    a.initial = c0;
    for (int carry = 0; carry <= 1; ++carry) {
        int from = carry == 0 ? c0 : c1;
        for (int s = 0; s < a.num_symbols; ++s) {
            auto t = add.shape.decode(s);
            int total = carry + t[0] + t[1];
            int nxt = sink;
            if (total % k == t[2] % k && total / k <= 1 && t[2] == total % k)
                nxt = (total / k == 0) ? c0 : c1;
            a.set_trans(from, s, nxt);
        }
    }
    for (int s = 0; s < a.num_symbols; ++s) a.set_trans(sink, s, sink);
    add.dfa = std::move(a);
    return add;
}

/// The three-carry adder for the {1,2}* system with U_n = 2^n: state m steps
/// to n on column (p,q,r) exactly when m + p + q = r + 2n, with the padding
/// mark read as 0. The result track is never padded.
inline AdditionAutomaton adder_one_two(const Ans& ans) {
    require(ans.name == "ans:one-two-star", "adder_one_two expects ans:one-two-star");
    AdditionAutomaton add;
    add.system = ans.name;
    add.lsd = true;
    add.shape = TupleShape{3, ans.padded_size()};  // letters 1, 2, #
    auto digit = [&](int letter) { return letter == ans.pad_letter() ? 0 : letter + 1; };
    Dfa a;
    a.num_symbols = add.shape.num_symbols();
    for (int m = 0; m < 3; ++m) a.add_state(m == 0);
    int sink = a.add_state(false);
    a.initial = 0;
    for (int m = 0; m < 3; ++m)
        for (int s = 0; s < a.num_symbols; ++s) {
            auto t = add.shape.decode(s);
            int p = digit(t[0]), q = digit(t[1]);
            int nxt = sink;
            if (t[2] != ans.pad_letter()) {
                int r = digit(t[2]);
                int num = m + p + q - r;
                if (num >= 0 && num % 2 == 0 && num / 2 <= 2) nxt = num / 2;
            }
            a.set_trans(m, s, nxt);
        }
    for (int s = 0; s < a.num_symbols; ++s) a.set_trans(sink, s, sink);
    add.dfa = std::move(a);
    return add;
}

inline AdditionAutomaton adder_builtin(const std::string& name, const Ans& ans) {
    if (name.rfind("base:", 0) == 0) return adder_base_k(std::stoi(name.substr(5)));
    if (name == "fig2" || name == "ans:one-two-star") return adder_one_two(ans);
    throw error("unknown builtin adder: " + name);
}

// ---------------------------------------------------------------------------
// Exploration for linear-recurrence systems

/// Product of one single-track automaton per track, over the tuple alphabet.
inline Dfa track_product(const std::vector<Dfa>& tracks, const TupleShape& shape) {
    Dfa r;
    r.num_symbols = shape.num_symbols();
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> states;
    auto intern = [&](const std::vector<int>& qs) {
        auto it = id.find(qs);
        if (it != id.end()) return it->second;
        bool acc = true;
        for (size_t i = 0; i < qs.size(); ++i) acc = acc && tracks[i].accepting[qs[i]];
        int s = r.add_state(acc);
        id[qs] = s;
        states.push_back(qs);
        return s;
    };
    std::vector<int> init;
    for (const auto& t : tracks) init.push_back(t.initial);
    intern(init);
    for (int i = 0; i < static_cast<int>(states.size()); ++i) {
        std::vector<int> cur = states[i];
        for (int c = 0; c < r.num_symbols; ++c) {
            std::vector<int> nxt(cur.size());
            for (size_t tk = 0; tk < cur.size(); ++tk)
                nxt[tk] = tracks[tk].step(cur[tk], shape.track_letter(c, static_cast<int>(tk)));
            r.set_trans(i, c, intern(nxt));
        }
    }
    return r;
}

/// msd exploration of the balance-vector automaton. The state is the vector
/// of pending contributions over a sliding window of d basis elements; a
/// column with digit excess delta shifts the window by one position using
/// the recurrence. Acceptance: the pending value over U_0..U_{d-1} is zero.
inline AdditionAutomaton adder_explore(const Ans& ans, int carry_bound = 64,
                                       bool lsd = false, int state_budget = 200000) {
    require(ans.positional.has_value(), "adder_explore needs a positional system");
    require(ans.zero_pad, "adder_explore assumes digit-0 padding");
    const PositionalSystem& sys = *ans.positional;
    int d = static_cast<int>(sys.coeffs.size());
    TupleShape shape{3, ans.padded_size()};

    std::map<std::vector<i64>, int> id;
    std::vector<std::vector<i64>> states;
    Dfa a;
    a.num_symbols = shape.num_symbols();
    bool pruned = false;
    auto accepting = [&](const std::vector<i64>& w) {
        i64 p = 0;
        for (int j = 0; j < d; ++j) p += w[j] * static_cast<i64>(sys.term(j));
        return p == 0;
    };
    auto intern = [&](const std::vector<i64>& w) {
        auto it = id.find(w);
        if (it != id.end()) return it->second;
        int s = a.add_state(accepting(w));
        require(a.num_states() <= state_budget, "adder_explore: state budget exceeded");
        id[w] = s;
        states.push_back(w);
        return s;
    };
    int start = intern(std::vector<i64>(d, 0));
    a.initial = start;
    int sink = -1;
    for (int i = 0; i < static_cast<int>(states.size()); ++i) {
        std::vector<i64> w = states[i];
        for (int c = 0; c < a.num_symbols; ++c) {
            auto col = shape.decode(c);
            i64 delta = col[0] + col[1] - col[2];
            std::vector<i64> nw(d, 0);
            for (int j = 0; j < d; ++j) {
                i64 v = (j >= 1 ? w[j - 1] : 0) + w[d - 1] * sys.coeffs[d - j - 1];
                if (j == 0) v += delta;
                nw[j] = v;
            }
            bool over = false;
            for (i64 v : nw)
                if (v > carry_bound || v < -carry_bound) over = true;
            if (over) {
                pruned = true;
                if (sink < 0) sink = a.add_state(false);
                a.set_trans(i, c, sink);
            } else {
                a.set_trans(i, c, intern(nw));
            }
        }
    }
    if (sink >= 0)
        for (int c = 0; c < a.num_symbols; ++c) a.set_trans(sink, c, sink);
    a.complete();

    // restrict to valid padded representations on every track
    Dfa padded = ans.padded_language();
    Dfa valid = track_product({padded, padded, padded}, shape);
    Dfa relation = canonicalize(product(a, valid, BoolOp::And));

    AdditionAutomaton add;
    add.system = ans.name;
    add.shape = shape;
    add.lsd = lsd;
    add.dfa = lsd ? reverse_language(relation) : relation;
    add.pruned = pruned;
    return add;
}

// ---------------------------------------------------------------------------
// Validation

struct AdderReport {
    bool ok = true;
    std::string detail;
    u64 checked_pairs = 0;
};

/// For all 0 <= x, y <= bound: the padded triple (x, y, x+y) is accepted and
/// the set of result-track words accepted against fixed x, y encodes exactly
/// x + y.
inline std::vector<bool> co_reachable(const Dfa& a) {
    std::vector<std::vector<int>> rev(a.num_states());
    for (int s = 0; s < a.num_states(); ++s)
        for (int c = 0; c < a.num_symbols; ++c) rev[a.step(s, c)].push_back(s);
    std::vector<bool> live(a.num_states(), false);
    std::queue<int> q;
    for (int s = 0; s < a.num_states(); ++s)
        if (a.accepting[s]) { live[s] = true; q.push(s); }
    while (!q.empty()) {
        int s = q.front(); q.pop();
        for (int p : rev[s])
            if (!live[p]) { live[p] = true; q.push(p); }
    }
    return live;
}

inline AdderReport adder_validate(AdditionAutomaton& add, const Ans& ans, u64 bound) {
    AdderReport rep;
    std::vector<bool> live = co_reachable(add.dfa);
    for (u64 x = 0; x <= bound && rep.ok; ++x) {
        for (u64 y = x; y <= bound && rep.ok; ++y) {
            if (!add.accepts_values(ans, x, y, x + y) || !add.accepts_values(ans, y, x, x + y)) {
                rep.ok = false;
                rep.detail = "missing triple at x=" + std::to_string(x) + " y=" + std::to_string(y);
                break;
            }
            // functional check: enumerate accepted z-words for this (x, y)
            Word rx = ans.rep(x), ry = ans.rep(y), rz = ans.rep(x + y);
            size_t len = std::max({rx.size(), ry.size(), rz.size()});
            auto pad = [&](const Word& w) {
                Word out(len - w.size(), ans.pad_letter());
                out.insert(out.end(), w.begin(), w.end());
                return out;
            };
            Word px = pad(rx), py = pad(ry);
            std::vector<Word> found;
            // DFS over z letters in automaton reading order
            struct Frame { int state; size_t pos; Word z; };
            std::vector<Frame> stack{{add.dfa.initial, 0, {}}};
            while (!stack.empty()) {
                Frame f = stack.back();
                stack.pop_back();
                if (f.pos == len) {
                    if (add.dfa.accepting[f.state]) found.push_back(f.z);
                    continue;
                }
                size_t col = add.lsd ? len - 1 - f.pos : f.pos;
                for (int zl = 0; zl < add.shape.base; ++zl) {
                    int sym = add.shape.encode({px[col], py[col], zl});
                    int ns = add.dfa.step(f.state, sym);
                    if (!live[ns]) continue;
                    Frame nf{ns, f.pos + 1, f.z};
                    nf.z.push_back(zl);
                    stack.push_back(nf);
                }
            }
            std::set<Word> stripped;
            for (Word& z : found) {
                if (add.lsd) std::reverse(z.begin(), z.end());
                size_t k = 0;
                while (k < z.size() && z[k] == ans.pad_letter()) ++k;
                z.erase(z.begin(), z.begin() + k);
                stripped.insert(z);
            }
            if (stripped.size() != 1 || *stripped.begin() != rz) {
                rep.ok = false;
                rep.detail = "result track not functional at x=" + std::to_string(x) +
                             " y=" + std::to_string(y) + " (found " +
                             std::to_string(stripped.size()) + " values)";
                break;
            }
            ++rep.checked_pairs;
        }
    }
    add.validated = rep.ok;
    return rep;
}

}  // namespace wbound
