#pragma once

/*
 * S-kernel machinery. The subsequence x o s picks the letters of x at the
 * positions val_S(p s) where p runs over the genealogically ordered left
 * quotient L s^{-1}; x is S-automatic exactly when finitely many distinct
 * subsequences arise. Kernel classes are keyed by the canonical quotient
 * automaton plus a subsequence prefix; that heuristic equality is later
 * discharged by regenerating the word from the synthesized DFAO.
 */

#include "wbound/boundary.hpp"
#include "wbound/words.hpp"

namespace wbound {

struct KernelElement {
    Word suffix;
    bool quotient_empty = false;
    bool finite = false;          // finitely many positions
    std::vector<u64> mu;          // index map, increasing
    std::vector<int> letters;     // the subsequence x o s
    std::string quotient_key;     // canonical quotient automaton
};

/// The quotient automaton for L s^{-1}: same transitions, accepting states
/// are those from which reading s accepts.
inline Dfa quotient_language(const Dfa& lang, const Word& suffix) {
    Dfa q = lang;
    for (int st = 0; st < lang.num_states(); ++st) {
        int t = st;
        for (int c : suffix) t = lang.step(t, c);
        q.accepting[st] = lang.accepting[t];
    }
    return q;
}

inline KernelElement suffix_subsequence(const InfiniteWord& w, const Ans& ans, const Word& suffix,
                                        size_t count) {
    KernelElement el;
    el.suffix = suffix;
    Dfa q = canonicalize(quotient_language(ans.language, suffix));
    el.quotient_key = canonical_key(q);
    if (is_empty(q)) {
        el.quotient_empty = true;
        el.finite = true;
        return el;
    }
    RankTable qt(q);
    for (size_t n = 0; n < count; ++n) {
        if (!qt.has_at_least(n)) { el.finite = true; break; }
        Word p = qt.unrank(n);
        p.insert(p.end(), suffix.begin(), suffix.end());
        u64 idx = ans.val(p);
        require(el.mu.empty() || idx > el.mu.back(), "kernel: index map not increasing");
        el.mu.push_back(idx);
        if (w.valid()) el.letters.push_back(w.letter(idx));
    }
    return el;
}

// ---------------------------------------------------------------------------
// Kernel enumeration

struct KernelClass {
    Word repr;                    // genealogically first suffix in the class
    std::string key;
    std::vector<Word> members;
    KernelElement element;        // data of the representative
};

struct KernelReport {
    std::vector<KernelClass> classes;     // refined: (quotient, subsequence)
    size_t distinct_subsequences = 0;     // the kernel proper: distinct words x o s
    bool stabilized = true;               // no new class appeared at the deepest level
    size_t max_suffix_len = 0;
    size_t cmp_prefix_len = 0;
};

namespace detail {

inline std::string kernel_key(const KernelElement& el) {
    std::string k = el.quotient_key + "|";
    if (el.quotient_empty) return k + "empty";
    if (el.finite) k += "F";
    for (int c : el.letters) k += static_cast<char>('0' + c);
    return k;
}

}  // namespace detail

/// Groups suffixes of length <= max_suffix_len by (quotient language,
/// subsequence prefix). Stabilization means the deepest level added no class.
inline KernelReport kernel_enumerate(const InfiniteWord& w, const Ans& ans,
                                     size_t max_suffix_len, size_t cmp_prefix_len = 2048) {
    KernelReport rep;
    rep.max_suffix_len = max_suffix_len;
    rep.cmp_prefix_len = cmp_prefix_len;
    std::map<std::string, size_t> index;
    std::set<std::string> subsequences;  // content only, empty quotients skipped
    std::vector<Word> level{Word{}};
    for (size_t len = 0; len <= max_suffix_len; ++len) {
        bool fresh_class = false;
        for (const Word& s : level) {
            KernelElement el = suffix_subsequence(w, ans, s, cmp_prefix_len);
            if (!el.quotient_empty) {
                std::string content = el.finite ? "F" : "";
                for (int c : el.letters) content += static_cast<char>('0' + c);
                subsequences.insert(content);
            }
            std::string key = detail::kernel_key(el);
            auto it = index.find(key);
            if (it == index.end()) {
                fresh_class = true;
                index.emplace(key, rep.classes.size());
                rep.classes.push_back(KernelClass{s, key, {s}, std::move(el)});
            } else {
                rep.classes[it->second].members.push_back(s);
            }
        }
        rep.distinct_subsequences = subsequences.size();
        if (len == max_suffix_len) {
            rep.stabilized = !fresh_class || max_suffix_len == 0;
            break;
        }
        std::vector<Word> next;
        for (const Word& s : level)
            for (int c = 0; c < ans.base_size(); ++c) {
                Word t{c};
                t.insert(t.end(), s.begin(), s.end());
                next.push_back(std::move(t));
            }
        level = std::move(next);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// DFAO synthesis

struct KernelDfao {
    Dfa base;
    std::vector<int> outputs;
    bool lsd = true;  // reads representations least significant letter first
};

/// States are kernel classes; reading letter c (least significant first)
/// moves from the class of s to the class of cs. The output of a class is
/// the first letter of its subsequence. The generated word is checked
/// against the source word before returning.
inline KernelDfao dfao_from_kernel(const KernelReport& rep, const InfiniteWord& w, const Ans& ans,
                                   size_t validate_len = 4096) {
    require(rep.stabilized, "dfao_from_kernel: kernel enumeration did not stabilize");
    std::map<std::string, int> index;
    for (size_t i = 0; i < rep.classes.size(); ++i) index.emplace(rep.classes[i].key, static_cast<int>(i));

    KernelDfao out;
    out.base.num_symbols = ans.base_size();
    for (const KernelClass& kc : rep.classes) {
        out.base.add_state(false);
        out.outputs.push_back(kc.element.letters.empty() ? -1 : kc.element.letters[0]);
    }
    // classes never visited on valid input (empty quotients, finite tails)
    // can take any output; copying a live one helps the minimizer
    int live_output = 0;
    for (int o : out.outputs)
        if (o >= 0) { live_output = o; break; }
    for (int& o : out.outputs)
        if (o < 0) o = live_output;
    for (size_t i = 0; i < rep.classes.size(); ++i) {
        for (int c = 0; c < ans.base_size(); ++c) {
            Word t{c};
            const Word& s = rep.classes[i].repr;
            t.insert(t.end(), s.begin(), s.end());
            KernelElement el = suffix_subsequence(w, ans, t, rep.cmp_prefix_len);
            std::string key = detail::kernel_key(el);
            auto it = index.find(key);
            require(it != index.end(),
                    "dfao_from_kernel: extension left the enumerated classes; "
                    "raise max_suffix_len or cmp_prefix_len");
            out.base.set_trans(static_cast<int>(i), c, it->second);
        }
    }
    // class of the empty suffix is the start
    KernelElement root = suffix_subsequence(w, ans, {}, rep.cmp_prefix_len);
    out.base.initial = index.at(detail::kernel_key(root));
    std::tie(out.base, out.outputs) = minimize_with_outputs(out.base, out.outputs);

    InfiniteWord regen = automatic_word(ans, out.base, out.outputs, w.letter_names(), true);
    auto got = regen.prefix(validate_len);
    auto want = w.prefix(validate_len);
    require(got == want, "dfao_from_kernel: regenerated word disagrees with the source; "
                         "cmp_prefix_len too short");
    return out;
}

}  // namespace wbound
