#pragma once

/*
 * The boundary-sequence oracle: for a window of length n + l sliding along
 * an infinite word, collect the pairs (length-l prefix, length-l suffix) of
 * the factors seen. Everything here is computed from explicit prefixes; the
 * *_stable variants recompute with a doubled prefix and flag disagreement,
 * since an undersized scan can only miss pairs, never invent them.
 *
 * The same window extraction serves n < l (overlapping borders) and the
 * asymmetric (k, l) variant.
 */

#include "wbound/words.hpp"

namespace wbound {

struct BoundarySet {
    int left_len = 0;
    int right_len = 0;
    std::vector<std::pair<std::string, std::string>> pairs;  // sorted

    void canonicalize_pairs() {
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    bool operator==(const BoundarySet& o) const {
        return left_len == o.left_len && right_len == o.right_len && pairs == o.pairs;
    }
    bool operator<(const BoundarySet& o) const {
        if (left_len != o.left_len) return left_len < o.left_len;
        if (right_len != o.right_len) return right_len < o.right_len;
        return pairs < o.pairs;
    }
    size_t size() const { return pairs.size(); }
    bool contains(const std::string& u, const std::string& v) const {
        return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
    }
    std::string to_string() const {
        std::string s = "{";
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (i) s += ",";
            s += "(" + pairs[i].first + "," + pairs[i].second + ")";
        }
        return s + "}";
    }
};

inline BoundarySet make_boundary_set(int l_left, int l_right,
                                     std::initializer_list<std::pair<std::string, std::string>> ps) {
    BoundarySet b;
    b.left_len = l_left;
    b.right_len = l_right;
    b.pairs.assign(ps.begin(), ps.end());
    b.canonicalize_pairs();
    return b;
}

namespace detail {

inline std::string display(const InfiniteWord& w, const uint8_t* p, size_t n) {
    std::string s;
    s.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const std::string& name = w.letter_names()[p[i]];
        require(name.size() == 1, "boundary: letter names must be single characters");
        s += name;
    }
    return s;
}

}  // namespace detail

/// Boundary set with asymmetric border lengths: pairs (length-k prefix,
/// length-l suffix) of the length-(n+l) factors of the scanned prefix.
inline BoundarySet boundary_set_kl(const InfiniteWord& w, size_t k, size_t l, size_t n,
                                   size_t prefix_len) {
    require(k >= 1 && l >= 1, "boundary: border lengths must be positive");
    require(n >= 1, "boundary: n must be positive");
    auto p = w.prefix(prefix_len);
    BoundarySet b;
    b.left_len = static_cast<int>(k);
    b.right_len = static_cast<int>(l);
    std::set<std::pair<std::string, std::string>> seen;
    if (p.size() >= n + l) {
        for (size_t i = 0; i + n + l <= p.size(); ++i) {
            seen.insert({detail::display(w, p.data() + i, k),
                         detail::display(w, p.data() + i + n, l)});
        }
    }
    b.pairs.assign(seen.begin(), seen.end());
    return b;
}

inline BoundarySet boundary_set(const InfiniteWord& w, size_t l, size_t n, size_t prefix_len) {
    return boundary_set_kl(w, l, l, n, prefix_len);
}

// ---------------------------------------------------------------------------
// Boundary words over a first-appearance alphabet

struct BoundaryAlphabet {
    std::vector<BoundarySet> sets;          // letter id -> set, first-appearance order
    std::map<BoundarySet, int> index;

    int intern(const BoundarySet& b) {
        auto it = index.find(b);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(sets.size());
        sets.push_back(b);
        index.emplace(b, id);
        return id;
    }
    static std::string letter_name(int id) {
        if (id < 26) return std::string(1, static_cast<char>('a' + id));
        return "s" + std::to_string(id);
    }
    std::string legend() const {
        std::string s;
        for (size_t i = 0; i < sets.size(); ++i)
            s += letter_name(static_cast<int>(i)) + " := " + sets[i].to_string() + "\n";
        return s;
    }
};

struct BoundaryWord {
    size_t first_index = 0;              // usually l
    std::vector<int> letters;            // letters[i] names the set at n = first_index + i
    BoundaryAlphabet alphabet;
    bool stabilized = true;              // false when doubling still changed the answer
    size_t prefix_used = 0;

    std::string to_string() const {
        std::string s;
        for (int c : letters) s += BoundaryAlphabet::letter_name(c);
        return s;
    }
    const BoundarySet& set_at(size_t n) const {
        require(n >= first_index && n - first_index < letters.size(), "boundary word: index out of range");
        return alphabet.sets[letters[n - first_index]];
    }
};

namespace detail {

// Pair-occurrence sweep for every n in one pass per letter pair: bitmask of
// occurrence positions per length-l factor, tested with shifted AND. Used
// when the factor count is small and the prefix is long.
struct FactorMasks {
    std::vector<std::string> factors;
    std::vector<std::vector<u64>> masks;
    size_t positions = 0;

    static FactorMasks build(const InfiniteWord& w, size_t l, size_t prefix_len) {
        FactorMasks fm;
        auto p = w.prefix(prefix_len);
        if (p.size() < l) return fm;
        fm.positions = p.size() - l + 1;
        std::map<std::string, int> idx;
        std::vector<int> fid(fm.positions);
        for (size_t i = 0; i < fm.positions; ++i) {
            std::string f = display(w, p.data() + i, l);
            auto it = idx.find(f);
            if (it == idx.end()) {
                it = idx.emplace(f, static_cast<int>(fm.factors.size())).first;
                fm.factors.push_back(f);
            }
            fid[i] = it->second;
        }
        size_t nwords = (fm.positions + 63) / 64;
        fm.masks.assign(fm.factors.size(), std::vector<u64>(nwords, 0));
        for (size_t i = 0; i < fm.positions; ++i) fm.masks[fid[i]][i >> 6] |= u64{1} << (i & 63);
        return fm;
    }

    // does factor a occur at some i with factor b at i + shift?
    bool pair_occurs(int a, int b, size_t shift) const {
        const auto& ma = masks[a];
        const auto& mb = masks[b];
        size_t wshift = shift >> 6, bshift = shift & 63;
        for (size_t i = 0; i + wshift < ma.size(); ++i) {
            u64 hi = mb[i + wshift] >> bshift;
            if (bshift && i + wshift + 1 < mb.size()) hi |= mb[i + wshift + 1] << (64 - bshift);
            if (ma[i] & hi) return true;
        }
        return false;
    }
};

inline BoundaryWord boundary_word_once(const InfiniteWord& w, size_t l, size_t from, size_t to,
                                       size_t prefix_len) {
    BoundaryWord bw;
    bw.first_index = from;
    bw.prefix_used = prefix_len;
    FactorMasks fm = FactorMasks::build(w, l, prefix_len);
    int nf = static_cast<int>(fm.factors.size());
    for (size_t n = from; n <= to; ++n) {
        BoundarySet b;
        b.left_len = b.right_len = static_cast<int>(l);
        for (int a = 0; a < nf; ++a)
            for (int c = 0; c < nf; ++c)
                if (fm.pair_occurs(a, c, n)) b.pairs.push_back({fm.factors[a], fm.factors[c]});
        b.canonicalize_pairs();
        bw.letters.push_back(bw.alphabet.intern(b));
    }
    return bw;
}

}  // namespace detail

/// The l-boundary word on [from, to] with first-appearance letter naming.
/// Doubles the scanned prefix until the answer stops changing (or the cap is
/// reached, in which case the result is flagged unstabilized).
inline BoundaryWord boundary_word(const InfiniteWord& w, size_t l, size_t from, size_t to,
                                  size_t initial_prefix = 0, size_t max_prefix = 1u << 24) {
    require(from >= 1, "boundary word: range must start at 1 or later");
    size_t p = initial_prefix ? initial_prefix : 4 * (to + l) + 64;
    BoundaryWord cur = detail::boundary_word_once(w, l, from, to, p);
    for (;;) {
        size_t p2 = p * 2;
        if (p2 > max_prefix) {
            cur.stabilized = false;
            return cur;
        }
        BoundaryWord next = detail::boundary_word_once(w, l, from, to, p2);
        if (next.letters == cur.letters && next.alphabet.sets == cur.alphabet.sets) {
            next.stabilized = true;
            next.prefix_used = p2;
            return next;
        }
        cur = next;
        p = p2;
    }
}

// ---------------------------------------------------------------------------
// Census

struct CensusEntry {
    BoundarySet set;
    size_t count = 0;
    size_t first_n = 0;
    size_t last_n = 0;
};

/// Distinct boundary sets over a range with occurrence statistics, ordered
/// by first appearance.
inline std::vector<CensusEntry> alphabet_census(const BoundaryWord& bw) {
    std::vector<CensusEntry> out(bw.alphabet.sets.size());
    std::vector<bool> seen(out.size(), false);
    for (size_t i = 0; i < bw.letters.size(); ++i) {
        int c = bw.letters[i];
        size_t n = bw.first_index + i;
        if (!seen[c]) {
            seen[c] = true;
            out[c] = CensusEntry{bw.alphabet.sets[c], 0, n, n};
        }
        out[c].count++;
        out[c].last_n = n;
    }
    return out;
}

}  // namespace wbound
