#pragma once

/*
 * Lazy infinite words. A generator materializes letters into a shared,
 * mutex-guarded prefix buffer; letter(n) and prefix(n) are consistent across
 * calls by construction. Analytics (factor sets, complexity, powers,
 * periodicity probes) work on explicit prefixes and leave the choice of
 * prefix length to the caller, with a doubling-until-stable helper for
 * callers that want a self-checking default.
 */

#include <functional>
#include <set>

#include "wbound/numeration.hpp"

namespace wbound {

struct Morphism {
    std::vector<Word> images;  // indexed by source letter; may be empty words

    Word apply(const Word& w) const {
        Word out;
        for (int c : w) {
            require(c >= 0 && c < static_cast<int>(images.size()), "morphism: letter out of range");
            out.insert(out.end(), images[c].begin(), images[c].end());
        }
        return out;
    }
    int num_letters() const { return static_cast<int>(images.size()); }
};

/// Parses images like "0:01,1:0" over single-character letter names.
inline Morphism parse_morphism(const std::string& spec, const std::string& letter_names) {
    auto idx = [&](char ch) {
        auto p = letter_names.find(ch);
        require(p != std::string::npos, std::string("morphism: unknown letter ") + ch);
        return static_cast<int>(p);
    };
    Morphism m;
    m.images.assign(letter_names.size(), {});
    std::vector<bool> seen(letter_names.size(), false);
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t colon = item.find(':');
        require(colon == 1, "morphism item must look like a:word");
        int src = idx(item[0]);
        Word img;
        for (size_t i = colon + 1; i < item.size(); ++i) img.push_back(idx(item[i]));
        m.images[src] = img;
        seen[src] = true;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (bool b : seen) require(b, "morphism: image missing for some letter");
    return m;
}

class InfiniteWord {
public:
    struct Impl {
        std::vector<std::string> letter_names;
        virtual ~Impl() = default;
        virtual void ensure(size_t n) = 0;  // called under lock
        std::vector<uint8_t> buf;
        std::mutex mu;
    };

    InfiniteWord() = default;
    explicit InfiniteWord(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

    int letter(u64 n) const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        impl_->ensure(static_cast<size_t>(n) + 1);
        return impl_->buf[static_cast<size_t>(n)];
    }

    std::vector<uint8_t> prefix(size_t n) const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        impl_->ensure(n);
        return std::vector<uint8_t>(impl_->buf.begin(), impl_->buf.begin() + n);
    }

    std::string prefix_str(size_t n) const {
        auto p = prefix(n);
        std::string s;
        s.reserve(n);
        for (uint8_t c : p) {
            const std::string& name = impl_->letter_names[c];
            require(name.size() == 1, "prefix_str needs single-character letter names");
            s += name;
        }
        return s;
    }

    const std::vector<std::string>& letter_names() const { return impl_->letter_names; }
    int alphabet_size() const { return static_cast<int>(impl_->letter_names.size()); }
    bool valid() const { return impl_ != nullptr; }

private:
    std::shared_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// Generators

namespace detail {

struct MorphicImpl : InfiniteWord::Impl {
    Morphism f;
    Morphism g;
    int seed;
    Word fixed;       // prefix of the fixed point f^w(seed)
    size_t expanded = 0;

    void ensure(size_t n) override {
        size_t guard = 0;
        while (buf.size() < n) {
            if (expanded == 0) {
                fixed = f.images[seed];
                require(!fixed.empty() && fixed[0] == seed && fixed.size() >= 2,
                        "morphic_word: morphism not prolongable on the seed");
                for (int c : fixed) push_coded(c);
                expanded = 1;
                continue;
            }
            require(expanded < fixed.size(), "morphic_word: fixed point stalled");
            int c = fixed[expanded++];
            const Word& img = f.images[c];
            require(!img.empty(), "morphic_word: erasing image inside the fixed point");
            for (int d : img) {
                fixed.push_back(d);
                push_coded(d);
            }
            require(++guard < (1u << 26), "morphic_word: coded word appears finite (erasing degeneracy)");
            if (buf.size() >= n) break;
        }
    }

    void push_coded(int fixed_letter) {
        const Word& img = g.images[fixed_letter];
        for (int d : img) buf.push_back(static_cast<uint8_t>(d));
    }
};

struct CharacteristicImpl : InfiniteWord::Impl {
    std::function<u64(u64)> gen;  // strictly increasing values
    u64 next_index = 0;
    u64 next_value = 0;
    bool primed = false;

    void ensure(size_t n) override {
        if (!primed) { next_value = gen(0); primed = true; }
        while (buf.size() < n) {
            u64 pos = buf.size();
            if (pos == next_value) {
                buf.push_back(1);
                u64 v = gen(++next_index);
                require(v > next_value, "characteristic_word: generator not strictly increasing");
                next_value = v;
            } else {
                buf.push_back(0);
            }
        }
    }
};

struct PeriodicImpl : InfiniteWord::Impl {
    Word head, cycle;
    void ensure(size_t n) override {
        while (buf.size() < n) {
            size_t i = buf.size();
            int c = i < head.size() ? head[i] : cycle[(i - head.size()) % cycle.size()];
            buf.push_back(static_cast<uint8_t>(c));
        }
    }
};

struct ExplicitImpl : InfiniteWord::Impl {
    void ensure(size_t n) override {
        require(n <= buf.size(), "explicit word: prefix exhausted");
    }
};

struct AutomaticImpl : InfiniteWord::Impl {
    Ans ans;
    Dfa base;                 // dfao base
    std::vector<int> output;  // per state
    bool lsd = false;

    void ensure(size_t n) override {
        while (buf.size() < n) {
            Word r = ans.rep(buf.size());
            if (lsd) std::reverse(r.begin(), r.end());
            for (int c : r)
                require(c < base.num_symbols, "automatic_word: representation letter outside DFAO alphabet");
            buf.push_back(static_cast<uint8_t>(output[base.run(r)]));
        }
    }
};

}  // namespace detail

inline std::vector<std::string> char_names(const std::string& s) {
    std::vector<std::string> v;
    for (char c : s) v.emplace_back(1, c);
    return v;
}

/// g(f^w(seed)) with a possibly erasing coding g.
inline InfiniteWord morphic_word(const Morphism& f, int seed, const Morphism& g,
                                 std::vector<std::string> target_letters) {
    auto impl = std::make_shared<detail::MorphicImpl>();
    impl->f = f;
    impl->g = g;
    impl->seed = seed;
    impl->letter_names = std::move(target_letters);
    require(!f.images[seed].empty() && f.images[seed][0] == seed && f.images[seed].size() >= 2,
            "morphic_word: morphism not prolongable on the seed");
    return InfiniteWord(impl);
}

inline InfiniteWord morphic_word(const Morphism& f, int seed, std::vector<std::string> letters) {
    Morphism id;
    for (int i = 0; i < f.num_letters(); ++i) id.images.push_back({i});
    return morphic_word(f, seed, id, std::move(letters));
}

/// letter(n) = 1 iff n is a value of the strictly increasing generator.
inline InfiniteWord characteristic_word(std::function<u64(u64)> gen) {
    auto impl = std::make_shared<detail::CharacteristicImpl>();
    impl->gen = std::move(gen);
    impl->letter_names = {"0", "1"};
    return InfiniteWord(impl);
}

inline InfiniteWord periodic_word(const Word& head, const Word& cycle,
                                  std::vector<std::string> letters) {
    require(!cycle.empty(), "periodic word: empty cycle");
    auto impl = std::make_shared<detail::PeriodicImpl>();
    impl->head = head;
    impl->cycle = cycle;
    impl->letter_names = std::move(letters);
    return InfiniteWord(impl);
}

inline InfiniteWord explicit_word(std::vector<uint8_t> prefix, std::vector<std::string> letters) {
    auto impl = std::make_shared<detail::ExplicitImpl>();
    impl->buf = std::move(prefix);
    impl->letter_names = std::move(letters);
    return InfiniteWord(impl);
}

/// x[n] = output of the DFAO after reading rep_S(n).
inline InfiniteWord automatic_word(const Ans& ans, const Dfa& dfao_base,
                                   const std::vector<int>& outputs,
                                   std::vector<std::string> output_letters, bool lsd = false) {
    auto impl = std::make_shared<detail::AutomaticImpl>();
    impl->ans = ans;
    impl->base = dfao_base;
    impl->output = outputs;
    impl->lsd = lsd;
    impl->letter_names = std::move(output_letters);
    return InfiniteWord(impl);
}

// ---------------------------------------------------------------------------
// Factor analytics

inline std::set<std::string> factor_set(const InfiniteWord& w, size_t n, size_t prefix_len) {
    require(prefix_len >= n, "factor_set: prefix shorter than factor length");
    auto p = w.prefix(prefix_len);
    std::set<std::string> out;
    for (size_t i = 0; i + n <= p.size(); ++i)
        out.insert(std::string(reinterpret_cast<const char*>(p.data()) + i, n));
    return out;
}

inline size_t factor_complexity(const InfiniteWord& w, size_t n, size_t prefix_len) {
    return factor_set(w, n, prefix_len).size();
}

struct PowerResult {
    size_t max_power = 0;
    bool hit_scan_limit = false;  // set when the largest power touches the window end
};

/// Largest r such that u^r occurs in the scanned prefix.
inline PowerResult max_power(const InfiniteWord& w, const Word& u, size_t prefix_len) {
    require(!u.empty(), "max_power: empty word");
    auto p = w.prefix(prefix_len);
    PowerResult res;
    size_t m = u.size();
    for (size_t i = 0; i < p.size(); ++i) {
        size_t j = 0;
        while (i + j < p.size() && p[i + j] == static_cast<uint8_t>(u[j % m])) ++j;
        size_t r = j / m;
        bool cut = (i + j == p.size());  // the match ran into the window end
        if (r > res.max_power) {
            res.max_power = r;
            res.hit_scan_limit = cut;
        } else if (r == res.max_power && r > 0 && cut) {
            res.hit_scan_limit = true;
        }
    }
    return res;
}

struct PeriodCandidate {
    size_t preperiod = 0;
    size_t period = 0;
};

/// Smallest (preperiod, period) consistent with the scanned window, requiring
/// at least min_tail positions of agreement. Heuristic: a candidate is
/// evidence, not proof.
inline std::optional<PeriodCandidate> detect_eventual_period(const InfiniteWord& w,
                                                             size_t scan_len,
                                                             size_t max_period = 0,
                                                             size_t min_tail = 2000) {
    auto p = w.prefix(scan_len);
    if (max_period == 0) max_period = scan_len / 4;
    std::optional<PeriodCandidate> best;
    for (size_t q = 1; q <= max_period; ++q) {
        size_t last_bad = 0;
        bool any_bad = false;
        for (size_t i = scan_len - q; i-- > 0;) {
            if (p[i] != p[i + q]) { last_bad = i; any_bad = true; break; }
        }
        size_t pre = any_bad ? last_bad + 1 : 0;
        if (scan_len >= q + pre && scan_len - q - pre >= min_tail) {
            if (!best || q < best->period) best = PeriodCandidate{pre, q};
            break;  // smallest period found
        }
    }
    return best;
}

/// Right-special factors of each length; an infinite word is aperiodic iff
/// one exists for every length.
inline bool has_right_special_factor(const InfiniteWord& w, size_t n, size_t prefix_len) {
    auto p = w.prefix(prefix_len);
    std::map<std::string, std::set<uint8_t>> ext;
    for (size_t i = 0; i + n + 1 <= p.size(); ++i)
        ext[std::string(reinterpret_cast<const char*>(p.data()) + i, n)].insert(p[i + n]);
    for (auto& [f, s] : ext)
        if (s.size() >= 2) return true;
    return false;
}

}  // namespace wbound
