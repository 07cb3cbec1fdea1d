#pragma once

/*
 * Numeration systems. Two flavours share one interface:
 *
 *  - PositionalSystem: an increasing basis U with U_0 = 1 given by initial
 *    terms plus a linear recurrence; greedy_rep/value work digit-wise.
 *  - Ans: an abstract numeration system, i.e. a regular language with a
 *    total letter order; rep_S/val_S are genealogical unrank/rank.
 *
 * Every positional system here also carries a numeration-language automaton
 * that is validated exhaustively against the greedy oracle, so the Ans view
 * (rank/unrank) and the digit view (greedy_rep/value) provably agree on the
 * tested range.
 */

#include <memory>
#include <optional>

#include "wbound/automata.hpp"

namespace wbound {

struct PositionalSystem {
    std::string name;
    std::vector<u64> initial_terms;   // U_0 .. U_{d-1}, U_0 = 1, increasing
    std::vector<i64> coeffs;          // U_n = sum_i coeffs[i] * U_{n-1-i}
    int digit_count = 0;              // digits {0, .., digit_count-1}

    u64 term(size_t i) const {
        if (terms_.empty()) {
            require(!initial_terms.empty() && initial_terms[0] == 1,
                    "positional system: U_0 must be 1");
            terms_ = initial_terms;
        }
        while (terms_.size() <= i) {
            i64 acc = 0;
            for (size_t j = 0; j < coeffs.size(); ++j) {
                i64 t = static_cast<i64>(terms_[terms_.size() - 1 - j]);
                acc += coeffs[j] * t;
            }
            require(acc > 0 && static_cast<u64>(acc) > terms_.back(),
                    "positional system: basis not increasing");
            terms_.push_back(static_cast<u64>(acc));
        }
        return terms_[i];
    }

    /// Greedy digits, most significant first; rep(0) is the empty word.
    Word greedy_rep(u64 n) const {
        if (n == 0) return {};
        size_t t = 0;
        while (term(t + 1) <= n) ++t;
        Word w;
        for (size_t i = t + 1; i-- > 0;) {
            u64 u = term(i);
            int c = static_cast<int>(n / u);
            require(c < digit_count, "greedy_rep: digit exceeds declared alphabet");
            w.push_back(c);
            n -= static_cast<u64>(c) * u;
        }
        return w;
    }

    u64 value(const Word& w) const {
        u64 acc = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            require(w[i] >= 0 && w[i] < digit_count, "value: digit outside alphabet");
            u64 u = term(w.size() - 1 - i);
            acc += static_cast<u64>(w[i]) * u;
        }
        return acc;
    }

private:
    mutable std::vector<u64> terms_;
};

// ---------------------------------------------------------------------------
// Abstract numeration systems

/// Prepends pad^* to a language given over the padded alphabet.
inline Dfa pad_closure(const Dfa& lang, int pad) {
    return saturate_msd(lang, pad);
}

struct Ans {
    std::string name;
    std::vector<std::string> letters;  // in the total order
    Dfa language;                      // over letters, msd
    bool zero_pad = false;             // positional systems pad with digit 0
    std::optional<PositionalSystem> positional;

    int base_size() const { return static_cast<int>(letters.size()); }
    int padded_size() const { return zero_pad ? base_size() : base_size() + 1; }
    int pad_letter() const { return zero_pad ? 0 : base_size(); }

    std::string letter_name(int i) const {
        return i == base_size() ? "#" : letters[i];
    }

    void finish() {
        language = canonicalize(language);
        ranks_ = std::make_shared<RankTable>(language);
        // language over the padded alphabet, then its pad closure
        Dfa ext = language;
        if (!zero_pad) {
            Dfa wide;
            wide.num_symbols = padded_size();
            for (int s = 0; s < ext.num_states(); ++s) wide.add_state(ext.accepting[s]);
            int sink = wide.add_state(false);
            for (int s = 0; s < ext.num_states(); ++s) {
                for (int c = 0; c < ext.num_symbols; ++c) wide.set_trans(s, c, ext.step(s, c));
                wide.set_trans(s, pad_letter(), sink);
            }
            for (int c = 0; c < wide.num_symbols; ++c) wide.set_trans(sink, c, sink);
            wide.initial = ext.initial;
            ext = wide;
        }
        padded_language_ = pad_closure(ext, pad_letter());
    }

    const RankTable& ranks() const {
        require(ranks_ != nullptr, "Ans not finished");
        return *ranks_;
    }
    const Dfa& padded_language() const { return padded_language_; }

    /// rep_S(n): the (n+1)st word of the genealogically ordered language.
    Word rep(u64 n) const { return ranks().unrank(n); }

    /// val_S, extended so leading pads are ignored.
    u64 val(const Word& w) const {
        Word v = w;
        size_t k = 0;
        while (k < v.size() && v[k] == pad_letter()) ++k;
        v.erase(v.begin(), v.begin() + k);
        return ranks().rank(v);
    }

    Word parse(const std::string& s) const {
        Word w;
        for (char ch : s) {
            std::string one(1, ch);
            if (!zero_pad && one == "#") { w.push_back(pad_letter()); continue; }
            int id = -1;
            for (int i = 0; i < base_size(); ++i)
                if (letters[i] == one) { id = i; break; }
            require(id >= 0, "parse: unknown letter '" + one + "' for " + name);
            w.push_back(id);
        }
        return w;
    }

    std::string format(const Word& w) const {
        std::string s;
        for (int c : w) s += letter_name(c);
        return s;
    }

private:
    std::shared_ptr<RankTable> ranks_;
    Dfa padded_language_;
};

// ---------------------------------------------------------------------------
// Built-in positional systems

inline PositionalSystem make_positional(const std::string& name) {
    PositionalSystem s;
    s.name = name;
    if (name.rfind("base:", 0) == 0) {
        int k = std::stoi(name.substr(5));
        require(k >= 2, "base:k needs k >= 2");
        s.initial_terms = {1};
        s.coeffs = {k};
        s.digit_count = k;
    } else if (name == "fibonacci") {
        s.initial_terms = {1, 2};
        s.coeffs = {1, 1};
        s.digit_count = 2;
    } else if (name == "tribonacci") {
        s.initial_terms = {1, 2, 4};
        s.coeffs = {1, 1, 1};
        s.digit_count = 2;
    } else if (name == "mersenne") {
        // U_n = 2^{n+1} - 1, satisfies U_n = 3U_{n-1} - 2U_{n-2}
        s.initial_terms = {1, 3};
        s.coeffs = {3, -2};
        s.digit_count = 3;
    } else if (name == "v-quaternary") {
        s.initial_terms = {1, 4, 15, 54};
        s.coeffs = {3, 2, 0, 3};
        s.digit_count = 4;
    } else {
        throw error("unknown positional system: " + name);
    }
    return s;
}

namespace detail {

inline Dfa base_k_language(int k) {
    // {\varepsilon} + {1..k-1}{0..k-1}*
    Dfa a;
    a.num_symbols = k;
    int q0 = a.add_state(true);
    int q1 = a.add_state(true);
    int sink = a.add_state(false);
    a.initial = q0;
    a.set_trans(q0, 0, sink);
    for (int c = 1; c < k; ++c) a.set_trans(q0, c, q1);
    for (int c = 0; c < k; ++c) a.set_trans(q1, c, q1);
    for (int c = 0; c < k; ++c) a.set_trans(sink, c, sink);
    return a;
}

inline Dfa zeckendorf_language() {
    // starts with 1, avoids 11
    Dfa a;
    a.num_symbols = 2;
    int q0 = a.add_state(true);
    int one = a.add_state(true);
    int zero = a.add_state(true);
    int sink = a.add_state(false);
    a.initial = q0;
    a.set_trans(q0, 0, sink);
    a.set_trans(q0, 1, one);
    a.set_trans(one, 0, zero);
    a.set_trans(one, 1, sink);
    a.set_trans(zero, 0, zero);
    a.set_trans(zero, 1, one);
    for (int c = 0; c < 2; ++c) a.set_trans(sink, c, sink);
    return a;
}

inline Dfa tribonacci_language() {
    // starts with 1, avoids 111
    Dfa a;
    a.num_symbols = 2;
    int q0 = a.add_state(true);
    int one = a.add_state(true);    // one trailing 1
    int two = a.add_state(true);    // two trailing 1s
    int zero = a.add_state(true);
    int sink = a.add_state(false);
    a.initial = q0;
    a.set_trans(q0, 0, sink);
    a.set_trans(q0, 1, one);
    a.set_trans(one, 0, zero);
    a.set_trans(one, 1, two);
    a.set_trans(two, 0, zero);
    a.set_trans(two, 1, sink);
    a.set_trans(zero, 0, zero);
    a.set_trans(zero, 1, one);
    for (int c = 0; c < 2; ++c) a.set_trans(sink, c, sink);
    return a;
}

inline Dfa mersenne_language() {
    // leading-nonzero part of (0+1)*(e + 20*)
    Dfa a;
    a.num_symbols = 3;
    int q0 = a.add_state(true);
    int qa = a.add_state(true);   // inside (0+1)* after a leading 1
    int qb = a.add_state(true);   // after the single digit 2
    int sink = a.add_state(false);
    a.initial = q0;
    a.set_trans(q0, 0, sink);
    a.set_trans(q0, 1, qa);
    a.set_trans(q0, 2, qb);
    a.set_trans(qa, 0, qa);
    a.set_trans(qa, 1, qa);
    a.set_trans(qa, 2, qb);
    a.set_trans(qb, 0, qb);
    a.set_trans(qb, 1, sink);
    a.set_trans(qb, 2, sink);
    for (int c = 0; c < 3; ++c) a.set_trans(sink, c, sink);
    return a;
}

// Greedy words of the v-quaternary system are exactly the words all of whose
// suffixes are lexicographically smaller than (3202)^w; track the set of
// in-progress pattern matches (residues mod 4) of suffixes.
inline Dfa v_quaternary_language() {
    static const int pat[4] = {3, 2, 0, 2};
    Dfa a;
    a.num_symbols = 4;
    std::map<std::pair<bool, int>, int> id;  // (started, residue mask) -> state
    std::vector<std::pair<bool, int>> keys;
    std::vector<int> ids;
    auto intern = [&](bool started, int mask) {
        auto key = std::make_pair(started, mask);
        auto it = id.find(key);
        if (it != id.end()) return it->second;
        int s = a.add_state(true);
        id[key] = s;
        keys.push_back(key);
        ids.push_back(s);
        return s;
    };
    a.initial = intern(false, 0);
    int sink = a.add_state(false);
    for (int i = 0; i < static_cast<int>(keys.size()); ++i) {
        auto [started, mask] = keys[i];
        int src = ids[i];
        for (int c = 0; c < 4; ++c) {
            if (!started && c == 0) { a.set_trans(src, c, sink); continue; }
            bool bad = false;
            int nmask = 0;
            for (int r = 0; r < 4; ++r) {
                if (!(mask & (1 << r))) continue;
                if (c > pat[r]) { bad = true; break; }
                if (c == pat[r]) nmask |= 1 << ((r + 1) % 4);
            }
            if (bad) { a.set_trans(src, c, sink); continue; }
            if (c == pat[0]) nmask |= 1 << 1;
            a.set_trans(src, c, intern(true, nmask));
        }
    }
    for (int c = 0; c < 4; ++c) a.set_trans(sink, c, sink);
    return a;
}

}  // namespace detail

/// Exhaustive check of a candidate numeration language against the greedy
/// oracle: the genealogical listing of L up to max_len must be exactly
/// greedy_rep(0), greedy_rep(1), ... Returns the first counterexample word.
inline std::optional<Word> validate_language(const Dfa& lang, const PositionalSystem& sys,
                                             int max_len) {
    std::vector<Word> listed = enumerate_words(lang, max_len);
    u64 expected_count = sys.term(max_len);  // #n with rep length <= max_len
    if (listed.size() != expected_count) {
        return listed.size() > expected_count ? listed[static_cast<size_t>(expected_count)]
                                              : Word{-1};
    }
    for (u64 n = 0; n < expected_count; ++n) {
        Word g = sys.greedy_rep(n);
        if (listed[static_cast<size_t>(n)] != g) return listed[static_cast<size_t>(n)];
    }
    return std::nullopt;
}

/// Numeration-language automaton of a built-in positional system, validated.
inline Dfa numeration_language(const PositionalSystem& sys, int validate_len = 10) {
    Dfa lang;
    if (sys.name.rfind("base:", 0) == 0) lang = detail::base_k_language(sys.digit_count);
    else if (sys.name == "fibonacci") lang = detail::zeckendorf_language();
    else if (sys.name == "tribonacci") lang = detail::tribonacci_language();
    else if (sys.name == "mersenne") lang = detail::mersenne_language();
    else if (sys.name == "v-quaternary") lang = detail::v_quaternary_language();
    else throw error("no built-in language for system: " + sys.name);
    lang = canonicalize(lang);
    auto bad = validate_language(lang, sys, validate_len);
    if (bad) {
        throw error("numeration_language validation failed for " + sys.name +
                    " at word of length " + std::to_string(bad->size()));
    }
    return lang;
}

// ---------------------------------------------------------------------------
// ANS registry

inline std::vector<std::string> digit_names(int k) {
    std::vector<std::string> v;
    for (int i = 0; i < k; ++i) v.push_back(std::string(1, static_cast<char>('0' + i)));
    return v;
}

inline Ans make_ans(const std::string& name) {
    Ans a;
    a.name = name;
    if (name.rfind("base:", 0) == 0 || name == "fibonacci" || name == "tribonacci" ||
        name == "mersenne" || name == "v-quaternary") {
        PositionalSystem sys = make_positional(name);
        a.letters = digit_names(sys.digit_count);
        a.language = numeration_language(sys);
        a.zero_pad = true;
        a.positional = std::move(sys);
    } else if (name == "ans:astar-bstar") {
        a.letters = {"a", "b"};
        Dfa d;
        d.num_symbols = 2;
        int s0 = d.add_state(true), s1 = d.add_state(true), sink = d.add_state(false);
        d.initial = s0;
        d.set_trans(s0, 0, s0); d.set_trans(s0, 1, s1);
        d.set_trans(s1, 0, sink); d.set_trans(s1, 1, s1);
        d.set_trans(sink, 0, sink); d.set_trans(sink, 1, sink);
        a.language = d;
    } else if (name == "ans:astar-bstar-or-bstar-cstar") {
        a.letters = {"a", "b", "c"};
        Dfa d;
        d.num_symbols = 3;
        int s0 = d.add_state(true), p1 = d.add_state(true), p2 = d.add_state(true);
        int q = d.add_state(true), g = d.add_state(true), sink = d.add_state(false);
        d.initial = s0;
        auto T = [&](int f, int c, int t) { d.set_trans(f, c, t); };
        T(s0, 0, p1); T(s0, 1, q); T(s0, 2, g);
        T(p1, 0, p1); T(p1, 1, p2); T(p1, 2, sink);
        T(p2, 0, sink); T(p2, 1, p2); T(p2, 2, sink);
        T(q, 0, sink); T(q, 1, q); T(q, 2, g);
        T(g, 0, sink); T(g, 1, sink); T(g, 2, g);
        for (int c = 0; c < 3; ++c) T(sink, c, sink);
        a.language = d;
    } else if (name == "ans:one-two-star") {
        a.letters = {"1", "2"};
        a.language = Dfa::universal(2);
    } else {
        throw error("unknown numeration system: " + name);
    }
    a.finish();
    return a;
}

}  // namespace wbound
