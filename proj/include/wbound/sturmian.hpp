#pragma once

/*
 * Sturmian machinery: characteristic words from continued fractions,
 * rotation constellations with exact arithmetic, the length-2l sliding
 * block code behind the boundary sequence, and the morphic presentation
 * T-boundary = h(s_beta).
 *
 * Slopes come in two arithmetic modes. A quadratic slope carries a Quad and
 * every comparison is exact. A slope given only by a continued-fraction
 * prefix is handled with rational convergent intervals, refined until the
 * comparison is certain; running out of declared depth raises an error
 * rather than guessing.
 */

#include "wbound/boundary.hpp"
#include "wbound/quadratic.hpp"

namespace wbound {

struct ContinuedFraction {
    std::vector<i64> head;    // partial quotients a_1, a_2, ...
    std::vector<i64> period;  // empty: declared depth is head.size()

    i64 term(size_t i) const {
        if (i < head.size()) return head[i];
        require(!period.empty(), "continued fraction: declared depth exhausted");
        return period[(i - head.size()) % period.size()];
    }
    bool has_term(size_t i) const { return i < head.size() || !period.empty(); }

    /// Drops the first k quotients and adds `bump` to the new first one.
    ContinuedFraction shifted(size_t k, i64 bump) const {
        ContinuedFraction out;
        if (period.empty()) {
            require(k < head.size(), "continued fraction: shift beyond declared depth");
            out.head.assign(head.begin() + k, head.end());
        } else {
            size_t off = head.size() > k ? head.size() - k : 0;
            size_t p = period.size();
            for (size_t i = 0; i < off + p; ++i) out.head.push_back(term(k + i));
            for (size_t i = 0; i < p; ++i) out.period.push_back(term(k + off + p + i));
        }
        out.head[0] += bump;
        return out;
    }

    std::string to_string() const {
        std::string s = "[0;";
        for (size_t i = 0; i < head.size(); ++i) s += (i ? "," : "") + std::to_string(head[i]);
        if (!period.empty()) {
            s += ";(";
            for (size_t i = 0; i < period.size(); ++i)
                s += (i ? "," : "") + std::to_string(period[i]);
            s += ")*";
        }
        return s + "]";
    }
    bool operator==(const ContinuedFraction& o) const {
        return head == o.head && period == o.period;
    }
};

inline ContinuedFraction cf_of_quad(Quad x, size_t depth) {
    require(x.sign() > 0 && Quad::integer(1, x.d).compare(x) > 0, "cf_of_quad: need 0 < x < 1");
    ContinuedFraction cf;
    for (size_t i = 0; i < depth; ++i) {
        Quad y = x.reciprocal();
        i64 a = y.floor();
        cf.head.push_back(a);
        x = y - Quad::integer(a, y.d);
    }
    return cf;
}

// ---------------------------------------------------------------------------
// Slopes with exact fractional-part comparisons

class Slope {
public:
    static Slope from_quad(const Quad& q) {
        require(q.sign() > 0 && Quad::integer(1, q.d).compare(q) > 0, "slope must be in (0,1)");
        Slope s;
        s.quad_ = q;
        return s;
    }
    static Slope from_cf(ContinuedFraction cf) {
        require(!cf.head.empty() || !cf.period.empty(), "slope: empty continued fraction");
        Slope s;
        s.cf_ = std::move(cf);
        return s;
    }

    bool exact() const { return quad_.has_value(); }
    const std::optional<Quad>& quad() const { return quad_; }

    /// Partial quotient a_{i+1} of the slope.
    i64 cf_term(size_t i) const {
        if (quad_) {
            while (cf_.head.size() <= i) extend_quad_cf();
            return cf_.head[i];
        }
        return cf_.term(i);
    }
    ContinuedFraction cf_prefix(size_t depth) const {
        if (!quad_) return cf_;  // generators fail loudly if the depth runs out
        ContinuedFraction out;
        for (size_t i = 0; i < depth; ++i) out.head.push_back(cf_term(i));
        return out;
    }

    /// sign({k1 a} - {k2 a})
    int compare_frac(i64 k1, i64 k2) const {
        if (k1 == k2) return 0;
        if (quad_) {
            Quad f1 = (*quad_ * k1).frac();
            Quad f2 = (*quad_ * k2).frac();
            int s = f1.compare(f2);
            require(s != 0, "slope: unexpected tie, slope not irrational?");
            return s;
        }
        for (size_t depth = 2;; ++depth) {
            auto i1 = frac_interval(k1, depth);
            auto i2 = frac_interval(k2, depth);
            if (i1 && i2) {
                if (i1->second.compare(i2->first) <= 0) return -1;
                if (i2->second.compare(i1->first) <= 0) return 1;
            }
            require(cf_.has_term(depth), "slope: convergent depth exhausted in compare");
        }
    }

    i64 floor_mult(i64 k) const {
        if (k == 0) return 0;
        if (quad_) return (*quad_ * k).floor();
        for (size_t depth = 2;; ++depth) {
            auto [lo, hi] = raw_interval(k, depth);
            if (lo.floor() == hi.floor()) return lo.floor();
            require(cf_.has_term(depth), "slope: convergent depth exhausted in floor");
        }
    }

private:
    // strictly bracketing rational interval for k*alpha
    std::pair<Rat, Rat> raw_interval(i64 k, size_t depth) const {
        ensure_convergents(depth);
        const Rat& c1 = convergents_[depth - 1];
        const Rat& c2 = convergents_[depth];
        Rat lo = c1, hi = c2;
        if (hi < lo) std::swap(lo, hi);
        Rat tl = lo * k, th = hi * k;
        if (k < 0) std::swap(tl, th);
        return {tl, th};
    }
    // interval for {k alpha}: defined only when both ends share a floor
    std::optional<std::pair<Rat, Rat>> frac_interval(i64 k, size_t depth) const {
        if (k == 0) return std::make_pair(Rat::integer(0), Rat::integer(0));
        auto [lo, hi] = raw_interval(k, depth);
        if (lo.floor() != hi.floor()) return std::nullopt;
        i64 f = lo.floor();
        return std::make_pair(lo - Rat::integer(f), hi - Rat::integer(f));
    }
    void ensure_convergents(size_t depth) const {
        if (convergents_.empty()) {
            convergents_.push_back(Rat(0, 1));  // p0/q0
        }
        while (convergents_.size() <= depth) {
            size_t i = convergents_.size();  // building convergent i (a_i involved)
            i64 a = quad_ ? cf_term(i - 1) : cf_.term(i - 1);
            i64 p2 = i >= 2 ? convergents_[i - 2].num : 1;
            i64 q2 = i >= 2 ? convergents_[i - 2].den : 0;
            i64 p1 = convergents_[i - 1].num;
            i64 q1 = convergents_[i - 1].den;
            Rat c(a * p1 + p2, a * q1 + q2);
            convergents_.push_back(c);
        }
    }
    void extend_quad_cf() const {
        if (cf_.head.empty()) quad_state_ = *quad_;
        Quad y = quad_state_->reciprocal();
        i64 a = y.floor();
        cf_.head.push_back(a);
        quad_state_ = y - Quad::integer(a, y.d);
    }

    std::optional<Quad> quad_;
    mutable ContinuedFraction cf_;
    mutable std::optional<Quad> quad_state_;
    mutable std::vector<Rat> convergents_;
};

// ---------------------------------------------------------------------------
// Standard words and the characteristic word

/// S_{-1} = 1, S_0 = 0, S_1 = 0^{a_1 - 1} 1, S_{k+1} = S_k^{a_{k+1}} S_{k-1}.
inline std::vector<std::string> standard_words(const ContinuedFraction& cf, size_t k_max) {
    std::vector<std::string> s{"1", "0"};  // S_{-1}, S_0
    for (size_t k = 1; k <= k_max; ++k) {
        require(cf.has_term(k - 1), "standard_words: continued fraction too shallow");
        i64 a = cf.term(k - 1);
        std::string next;
        if (k == 1) {
            require(a >= 1, "standard_words: quotient must be positive");
            next = std::string(static_cast<size_t>(a - 1), '0') + "1";
        } else {
            for (i64 i = 0; i < a; ++i) next += s[k];      // S_{k-1} sits at index k
            next += s[k - 1];
        }
        s.push_back(next);
    }
    return s;
}

namespace detail {

struct SturmianImpl : InfiniteWord::Impl {
    ContinuedFraction cf;
    std::string prev = "1", cur = "0";  // S_{k-1}, S_k
    size_t k = 0;

    void ensure(size_t n) override {
        while (cur.size() < n) {
            require(cf.has_term(k), "sturmian word: continued fraction depth exhausted");
            i64 a = cf.term(k);
            std::string next;
            if (k == 0) {
                next = std::string(static_cast<size_t>(a - 1), '0') + "1";
            } else {
                for (i64 i = 0; i < a; ++i) next += cur;
                next += prev;
            }
            prev = cur;
            cur = next;
            ++k;
        }
        if (buf.size() < n) {
            buf.clear();
            for (size_t i = 0; i < n; ++i) buf.push_back(cur[i] == '1' ? 1 : 0);
        }
    }
};

}  // namespace detail

/// The characteristic Sturmian word of the slope, lim S_k.
inline InfiniteWord sturmian_word(const ContinuedFraction& cf) {
    auto impl = std::make_shared<detail::SturmianImpl>();
    impl->cf = cf;
    impl->letter_names = {"0", "1"};
    return InfiniteWord(impl);
}

inline InfiniteWord sturmian_word(const Slope& slope, size_t cf_depth = 64) {
    return sturmian_word(slope.cf_prefix(cf_depth));
}

/// Rotation coding letter: s[n] = 1 iff {(n+1) a} lies in [1 - a, 1).
inline int rotation_letter(const Slope& slope, i64 n) {
    return slope.compare_frac(n + 1, -1) >= 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Constellations

struct Constellation {
    i64 n = 0;
    std::vector<int> sigma;            // sigma[j]: interval index of R^n({-j a})
    std::vector<std::string> factors;  // w_0 < ... < w_l, lexicographic
    BoundarySet set;
};

namespace detail {

inline std::vector<std::string> sturmian_factors(const InfiniteWord& s, size_t l) {
    size_t prefix = 8 * l + 64;
    for (;;) {
        auto fs = factor_set(s, l, prefix);
        if (fs.size() == l + 1) {
            std::vector<std::string> out;
            for (const std::string& f : fs) {
                std::string named;
                for (char c : f) named += static_cast<char>('0' + c);
                out.push_back(named);
            }
            std::sort(out.begin(), out.end());
            return out;
        }
        require(fs.size() < l + 1, "sturmian factors: more than l+1 factors, slope data wrong");
        prefix *= 2;
        require(prefix < (1u << 26), "sturmian factors: factors of length l not all found");
    }
}

// membership of point {x a} in the circular arc [{s a}, {e a})
inline bool in_arc(const Slope& al, i64 x, i64 s, i64 e) {
    int se = al.compare_frac(s, e);
    if (se < 0) return al.compare_frac(x, s) >= 0 && al.compare_frac(x, e) < 0;
    return al.compare_frac(x, s) >= 0 || al.compare_frac(x, e) < 0;
}

}  // namespace detail

/// Exact boundary set of any Sturmian word of this slope at index n > l,
/// via the positions of the rotated interval endpoints.
inline Constellation constellation(const Slope& slope, size_t l, i64 n) {
    require(n > static_cast<i64>(l), "constellation: need n > l (use boundary_first at n = l)");
    InfiniteWord s = sturmian_word(slope);
    Constellation out;
    out.n = n;
    out.factors = detail::sturmian_factors(s, l);

    // endpoints i_0 < i_1 < ... < i_l are the points {-j a}; sort the js
    std::vector<i64> js(l + 1);
    for (size_t j = 0; j <= l; ++j) js[j] = -static_cast<i64>(j);
    std::sort(js.begin(), js.end(), [&](i64 x, i64 y) { return slope.compare_frac(x, y) < 0; });
    require(js[0] == 0, "constellation: 0 should be the least endpoint");

    // sigma[j]: interval of {(n - j) a}; interval t is [js[t], js[t+1]) cyclically
    auto locate = [&](i64 x) {
        for (size_t t = 0; t <= l; ++t) {
            i64 lo = js[t];
            i64 hi = (t == l) ? js[0] : js[t + 1];  // wraps at 1 ~ 0
            if (detail::in_arc(slope, x, lo, hi)) return static_cast<int>(t);
        }
        throw error("constellation: point not located");
    };
    out.sigma.resize(l + 1);
    for (size_t j = 0; j <= l; ++j) out.sigma[j] = locate(n - static_cast<i64>(j));

    // pairs (w_a, w_b) with R^n(I_{w_a}) meeting I_{w_b}
    out.set.left_len = out.set.right_len = static_cast<int>(l);
    for (size_t a = 0; a <= l; ++a) {
        i64 lo = n - (-js[a]);                        // {(n - j_a) a}
        i64 hi = (a == l) ? n : n - (-js[a + 1]);     // rotated right endpoint
        for (size_t b = 0; b <= l; ++b) {
            i64 blo = js[b];
            i64 bhi = (b == l) ? js[0] : js[b + 1];
            bool meets = detail::in_arc(slope, lo, blo, bhi) ||
                         detail::in_arc(slope, blo, lo, hi);
            if (meets) out.set.pairs.push_back({out.factors[a], out.factors[b]});
        }
    }
    out.set.canonicalize_pairs();
    return out;
}

/// The first boundary set, at n = l: pairs of l-borders of the 2l-factors.
inline BoundarySet boundary_first(const Slope& slope, size_t l) {
    InfiniteWord s = sturmian_word(slope);
    auto factors = detail::sturmian_factors(s, 2 * l);
    require(factors.size() == 2 * l + 1, "boundary_first: expected 2l+1 factors");
    BoundarySet b;
    b.left_len = b.right_len = static_cast<int>(l);
    for (const std::string& f : factors)
        b.pairs.push_back({f.substr(0, l), f.substr(f.size() - l)});
    b.canonicalize_pairs();
    return b;
}

// ---------------------------------------------------------------------------
// The sliding block code and the morphism h

struct BlockCode {
    size_t l = 0;
    std::map<std::string, int> code;   // length-2l factor -> letter of T-boundary
    BoundaryWord t_boundary;           // indices n = l+1 ... (shifted boundary word)

    int letter_of(const std::string& factor) const {
        auto it = code.find(factor);
        require(it != code.end(), "block code: unseen factor");
        return it->second;
    }
    std::vector<int> apply(const std::string& word01) const {
        std::vector<int> out;
        if (word01.size() < 2 * l) return out;
        for (size_t i = 0; i + 2 * l <= word01.size(); ++i)
            out.push_back(letter_of(word01.substr(i, 2 * l)));
        return out;
    }
};

/// Scan length that provably captures every length-m factor of the
/// characteristic word: the recurrence function of a Sturmian word is at
/// most m + q_k + q_{k+1} where q_k <= m < q_{k+1} are convergent
/// denominators of the slope.
inline size_t sturmian_scan_hint(const Slope& slope, size_t m) {
    u64 q_prev = 0, q = 1;  // q_0 = 1
    size_t i = 0;
    while (q <= m) {
        u64 nq = static_cast<u64>(slope.cf_term(i)) * q + q_prev;
        q_prev = q;
        q = nq;
        ++i;
    }
    return static_cast<size_t>(q + q_prev) + 3 * m + 64;
}

/// Derives the length-2l block code empirically from a scan and asserts the
/// sliding-block-code guarantees: the same factor never maps to two distinct
/// boundary sets, the map is total on the 2l-factors, and (for l >= 2)
/// injective.
inline BlockCode block_code_table(const Slope& slope, size_t l, size_t n_max) {
    InfiniteWord s = sturmian_word(slope);
    BlockCode bc;
    bc.l = l;
    bc.t_boundary = boundary_word(s, l, l + 1, n_max,
                                  sturmian_scan_hint(slope, n_max + l), 1u << 27);
    require(bc.t_boundary.stabilized, "block code: boundary scan did not stabilize");
    auto p = s.prefix(static_cast<size_t>(n_max) + 2 * l + 8);
    for (size_t m = 0; m + l + 1 <= n_max; ++m) {
        std::string f;
        for (size_t i = 0; i < 2 * l; ++i) f += static_cast<char>('0' + p[m + i]);
        int letter = bc.t_boundary.letters[m];
        auto it = bc.code.find(f);
        if (it == bc.code.end()) bc.code.emplace(f, letter);
        else require(it->second == letter,
                     "block code: not well defined, contradicts the sliding block theorem");
    }
    auto factors = detail::sturmian_factors(s, 2 * l);
    for (const std::string& f : factors)
        require(bc.code.count(f), "block code: factor never seen in scan range");
    if (l >= 2) {
        std::set<int> images;
        for (auto& [f, letter] : bc.code) images.insert(letter);
        require(images.size() == bc.code.size(), "block code: not injective at l >= 2");
    }
    return bc;
}

struct MorphismH {
    size_t k = 0;                       // index of the standard word used
    ContinuedFraction beta;             // slope of the preimage word
    std::vector<int> image0, image1;    // h(0), h(1) over block-code letters
    BlockCode block;
};

/// T-boundary = h(s_beta) with h: 0 -> B(S_k X), 1 -> B(S_{k-1} X),
/// X = pref_{2l-1}(S_k S_{k-1}), k minimal with |S_k S_{k-1}| >= 2l + 1.
inline MorphismH morphism_h(const Slope& slope, size_t l, size_t scan = 4000) {
    require(l >= 2, "morphism_h: needs l >= 2");
    MorphismH out;
    ContinuedFraction cf = slope.cf_prefix(48);
    size_t k = 1;
    std::vector<std::string> S = standard_words(cf, k + 1);
    auto slen = [&](size_t i) { return S[i + 1].size(); };  // S_i at index i + 1
    while (slen(k) + slen(k - 1) < 2 * l + 1) {
        ++k;
        S = standard_words(cf, k + 1);
    }
    out.k = k;
    out.beta = cf.shifted(k, 1);
    out.block = block_code_table(slope, l, scan);
    const std::string& Sk = S[k + 1];
    const std::string& Sk1 = S[k];
    std::string X = (Sk + Sk1).substr(0, 2 * l - 1);
    out.image0 = out.block.apply(Sk + X);
    out.image1 = out.block.apply(Sk1 + X);
    require(out.image0.size() == Sk.size() && out.image1.size() == Sk1.size(),
            "morphism_h: image lengths disagree with the standard words");
    return out;
}

// ---------------------------------------------------------------------------
// First-letter recurrence

enum class Recurrence { Once, Recurrent };

/// The first boundary set recurs iff 0^{2l} or 1^{2l} occurs in the word.
inline Recurrence first_letter_recurrence(const Slope& slope, size_t l, size_t scan = 40000) {
    InfiniteWord s = sturmian_word(slope);
    size_t p0 = max_power(s, Word{0}, scan).max_power;
    size_t p1 = max_power(s, Word{1}, scan).max_power;
    bool recurrent = p0 >= 2 * l || p1 >= 2 * l;
    if (slope.exact()) {
        // 2l ||a|| < 1 exactly
        bool alpha_small = slope.floor_mult(2) == 0;  // alpha < 1/2
        i64 f = slope.floor_mult(2 * static_cast<i64>(l));
        bool crit = alpha_small ? (f == 0) : (f == 2 * static_cast<i64>(l) - 1);
        require(crit == recurrent, "first letter criterion disagrees with the power scan");
    }
    return recurrent ? Recurrence::Recurrent : Recurrence::Once;
}

// ---------------------------------------------------------------------------
// Slope spec strings: quad:(a,b,c,d) and cf:[a1,a2,...] period:[...]

inline Slope parse_slope(const std::string& spec) {
    auto parse_list = [](const std::string& s) {
        std::vector<i64> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',' ) { out.push_back(std::stoll(cur)); cur.clear(); }
            else if (ch != ' ') cur += ch;
        }
        if (!cur.empty()) out.push_back(std::stoll(cur));
        return out;
    };
    if (spec.rfind("quad:(", 0) == 0) {
        auto xs = parse_list(spec.substr(6, spec.size() - 7));
        require(xs.size() == 4, "slope quad:(a,b,c,d) needs four integers");
        return Slope::from_quad(Quad(xs[0], xs[1], xs[2], xs[3]));
    }
    if (spec.rfind("cf:[", 0) == 0) {
        size_t close = spec.find(']');
        require(close != std::string::npos, "slope cf:[...] missing ]");
        ContinuedFraction cf;
        cf.head = parse_list(spec.substr(4, close - 4));
        size_t per = spec.find("period:[", close);
        if (per != std::string::npos) {
            size_t pc = spec.find(']', per);
            cf.period = parse_list(spec.substr(per + 8, pc - per - 8));
        }
        return Slope::from_cf(cf);
    }
    throw error("unknown slope spec: " + spec);
}

inline Slope fibonacci_slope() { return Slope::from_quad(Quad(3, -1, 2, 5)); }       // (3 - sqrt 5)/2
inline Slope one_minus_inv_sqrt3_slope() { return Slope::from_quad(Quad(3, -1, 3, 3)); }
inline Slope pi_slope() {
    // (pi - 3)/2, declared depth 24
    ContinuedFraction cf;
    cf.head = {14, 7, 1, 586, 3, 1, 2, 1, 1, 29, 1, 3, 2, 2, 2, 2, 169, 1, 3, 1, 7, 6, 6, 1};
    return Slope::from_cf(cf);
}

}  // namespace wbound
