#include <catch2/catch_amalgamated.hpp>

#include "wbound/automata.hpp"

using namespace wbound;

namespace {

Dfa astar_bstar() {
    Dfa d;
    d.num_symbols = 2;
    int s0 = d.add_state(true), s1 = d.add_state(true), sink = d.add_state(false);
    d.initial = s0;
    d.set_trans(s0, 0, s0); d.set_trans(s0, 1, s1);
    d.set_trans(s1, 0, sink); d.set_trans(s1, 1, s1);
    d.set_trans(sink, 0, sink); d.set_trans(sink, 1, sink);
    return d;
}

}  // namespace

TEST_CASE("canonicalize collapses redundant states") {
    // (0+1)* written with three interchangeable states
    Dfa a;
    a.num_symbols = 2;
    for (int i = 0; i < 3; ++i) a.add_state(true);
    a.initial = 0;
    a.set_trans(0, 0, 1); a.set_trans(0, 1, 2);
    a.set_trans(1, 0, 2); a.set_trans(1, 1, 0);
    a.set_trans(2, 0, 0); a.set_trans(2, 1, 1);
    Dfa c = canonicalize(a);
    CHECK(c.num_states() == 1);
    CHECK(c.accepting[0]);
}

TEST_CASE("canonicalize of the empty language is a single sink") {
    Dfa c = canonicalize(Dfa::empty_language(3));
    CHECK(c.num_states() == 1);
    CHECK_FALSE(c.accepting[0]);
}

TEST_CASE("canonicalize is idempotent and language-preserving") {
    Dfa a = astar_bstar();
    Dfa c1 = canonicalize(a);
    Dfa c2 = canonicalize(c1);
    CHECK(equivalent(a, c1));
    CHECK(canonical_key(c1) == canonical_key(c2));
}

TEST_CASE("combine implements the boolean connectives") {
    Dfa l = astar_bstar();
    Dfa none = Dfa::empty_language(2);
    CHECK(equivalent(combine(l, none, BoolOp::Or), l));
    CHECK(is_empty(combine(l, l, BoolOp::AndNot)));
    CHECK(equivalent(combine(l, Dfa::universal(2), BoolOp::And), l));
}

TEST_CASE("rank and unrank enumerate genealogically") {
    Dfa l = astar_bstar();
    RankTable rt(l);
    // e, a, b, aa, ab, bb, aaa, ...
    CHECK(rt.rank({}) == 0);
    CHECK(rt.rank({0, 0}) == 3);
    CHECK(rt.rank({0}) == 1);
    CHECK(rt.unrank(2) == Word{1});
    CHECK(rt.unrank(0) == Word{});
    for (u64 n = 0; n < 500; ++n) CHECK(rt.rank(rt.unrank(n)) == n);
    // genealogical order is monotone
    for (u64 n = 0; n + 1 < 200; ++n) {
        Word a = rt.unrank(n), b = rt.unrank(n + 1);
        bool less = a.size() < b.size() || (a.size() == b.size() && a < b);
        CHECK(less);
    }
    CHECK_THROWS_AS(rt.rank({1, 0}), error);
}

TEST_CASE("unrank on {1,2}*") {
    Dfa all = Dfa::universal(2);
    RankTable rt(all);
    // e,1,2,11,12,21,22 with letters 1 -> 0, 2 -> 1
    CHECK(rt.unrank(5) == Word{1, 0});
    CHECK(rt.unrank(0) == Word{});
}

TEST_CASE("projection of the equality relation is universal") {
    TupleShape shape{2, 3};  // two tracks over {0,1,#}
    int pad = 2;
    Dfa eq;
    eq.num_symbols = shape.num_symbols();
    int q = eq.add_state(true), sink = eq.add_state(false);
    eq.initial = q;
    for (int c = 0; c < eq.num_symbols; ++c) {
        auto t = shape.decode(c);
        eq.set_trans(q, c, (t[0] == t[1] && t[0] != pad) ? q : sink);
        eq.set_trans(sink, c, sink);
    }
    Dfa p = saturate_msd(project_track(eq, shape, 1), pad);
    // p accepts every word over {0,1} plus leading pads
    CHECK(p.accepts({0, 1, 0}));
    CHECK(p.accepts({pad, pad, 1, 0}));
    CHECK(p.accepts({}));
}

TEST_CASE("projection soundness on sampled tuples") {
    // relation: second track is first track shifted by one symbol value mod 2
    TupleShape shape{2, 2};
    Dfa rel;
    rel.num_symbols = shape.num_symbols();
    int q = rel.add_state(true), sink = rel.add_state(false);
    rel.initial = q;
    for (int c = 0; c < rel.num_symbols; ++c) {
        auto t = shape.decode(c);
        rel.set_trans(q, c, (t[1] == (t[0] ^ 1)) ? q : sink);
        rel.set_trans(sink, c, sink);
    }
    Dfa proj = project_track(rel, shape, 1);
    for (const Word& w : enumerate_words(rel, 6)) {
        Word first;
        for (int sym : w) first.push_back(shape.track_letter(sym, 0));
        CHECK(proj.accepts(first));
    }
}

TEST_CASE("reverse_language reverses") {
    Dfa l = astar_bstar();
    Dfa r = reverse_language(l);
    CHECK(r.accepts({1, 1, 0}));
    CHECK_FALSE(r.accepts({0, 1}));
    CHECK(equivalent(reverse_language(r), canonicalize(l)));
}

TEST_CASE("padding saturation makes msd automata pad-invariant") {
    Dfa one = Dfa::single_word(3, {0, 1});  // over {0,1,#}
    Dfa s = saturate_msd(one, 2);
    CHECK(s.accepts({0, 1}));
    CHECK(s.accepts({2, 0, 1}));
    CHECK(s.accepts({2, 2, 2, 0, 1}));
    CHECK_FALSE(s.accepts({0, 1, 2}));
    for (const Word& w : enumerate_words(s, 5))
        CHECK(s.accepts([&] { Word v{2}; v.insert(v.end(), w.begin(), w.end()); return v; }()));
}
