#include <catch2/catch_amalgamated.hpp>

#include "wbound/word_registry.hpp"

using namespace wbound;

TEST_CASE("classic morphic words") {
    CHECK(fibonacci_word().prefix_str(10) == "0100101001");
    CHECK(thue_morse_word().prefix_str(16) == "0110100110010110");
    // triangular word via the erasing coding
    Morphism g1 = parse_morphism("0:01,1:12,2:2", "012");
    Morphism f = parse_morphism("0:,1:1,2:0", "012");
    InfiniteWord w1 = morphic_word(g1, 0, f, char_names("01"));
    CHECK(w1.prefix_str(16) == "1101001000100001");
    CHECK(w1.prefix_str(16) == triangular_word().prefix_str(16));
}

TEST_CASE("characteristic words") {
    CHECK(triangular_word().prefix_str(16) == "1101001000100001");
    CHECK(squares_word().prefix_str(16) == "1100100001000000");
    InfiniteWord v = v_characteristic_word();
    CHECK(v.letter(1) == 1);
    CHECK(v.letter(4) == 1);
    CHECK(v.letter(15) == 1);
    CHECK(v.letter(54) == 1);
    CHECK(v.letter(5) == 0);
}

TEST_CASE("polygonal words match their characteristic sets") {
    for (int s = 1; s <= 6; ++s) {
        InfiniteWord a = polygonal_morphic_word(s);
        InfiniteWord b = polygonal_characteristic_word(s);
        CHECK(a.prefix(10000) == b.prefix(10000));
    }
    CHECK(polygonal_morphic_word(1).prefix(10000) == triangular_word().prefix(10000));
    CHECK(polygonal_morphic_word(2).prefix(10000) == squares_word().prefix(10000));
}

TEST_CASE("prefix consistency across generators") {
    for (const InfiniteWord& w :
         {fibonacci_word(), triangular_word(),
          periodic_word({1}, {0, 1}, char_names("01"))}) {
        auto p1 = w.prefix(64);
        auto p2 = w.prefix(200);
        CHECK(std::equal(p1.begin(), p1.end(), p2.begin()));
        CHECK(w.letter(63) == p1[63]);
    }
}

TEST_CASE("factor sets of the Fibonacci word") {
    InfiniteWord f = fibonacci_word();
    auto f2 = factor_set(f, 2, 1000);
    CHECK(f2 == std::set<std::string>{std::string("\0\0", 2), std::string("\0\1", 2),
                                      std::string("\1\0", 2)});
    CHECK(factor_set(f, 3, 1000).size() == 4);
    CHECK(factor_set(f, 0, 10) == std::set<std::string>{""});
    for (size_t n = 1; n <= 200; ++n) CHECK(factor_complexity(f, n, 8000) == n + 1);
}

TEST_CASE("automatic word: parity DFAO over base 2 is Thue-Morse") {
    Ans b2 = make_ans("base:2");
    Dfa base;
    base.num_symbols = 2;
    base.add_state(false);
    base.add_state(false);
    base.initial = 0;
    base.set_trans(0, 0, 0); base.set_trans(0, 1, 1);
    base.set_trans(1, 0, 1); base.set_trans(1, 1, 0);
    InfiniteWord t = automatic_word(b2, base, {0, 1}, char_names("01"));
    CHECK(t.prefix(16384) == thue_morse_word().prefix(16384));
}

TEST_CASE("automatic word: 10* DFAO over Zeckendorf marks Fibonacci numbers") {
    Ans fib = make_ans("fibonacci");
    // output 1 exactly on representations in 10*
    Dfa base;
    base.num_symbols = 2;
    int q0 = base.add_state(false);  // e: 0 is not a Fibonacci number here (F_0 = 1)
    int q1 = base.add_state(false);
    int bad = base.add_state(false);
    base.initial = q0;
    base.set_trans(q0, 1, q1); base.set_trans(q0, 0, bad);
    base.set_trans(q1, 0, q1); base.set_trans(q1, 1, bad);
    base.set_trans(bad, 0, bad); base.set_trans(bad, 1, bad);
    InfiniteWord w = automatic_word(fib, base, {0, 1, 0}, char_names("01"));
    PositionalSystem sys = make_positional("fibonacci");
    InfiniteWord expect = characteristic_word([sys](u64 n) { return sys.term(n); });
    CHECK(w.prefix(10000) == expect.prefix(10000));
}

TEST_CASE("automatic word over astar-bstar marks triangular numbers") {
    Ans ab = make_ans("ans:astar-bstar");
    // output 1 exactly on representations in a*
    Dfa base;
    base.num_symbols = 2;
    int qa = base.add_state(false);
    int qb = base.add_state(false);
    base.initial = qa;
    base.set_trans(qa, 0, qa); base.set_trans(qa, 1, qb);
    base.set_trans(qb, 0, qb); base.set_trans(qb, 1, qb);
    InfiniteWord w = automatic_word(ab, base, {1, 0}, char_names("01"));
    CHECK(w.prefix(10000) == triangular_word().prefix(10000));
}

TEST_CASE("max_power") {
    InfiniteWord f = fibonacci_word();
    CHECK(max_power(f, {0, 1}, 5000).max_power == 2);
    CHECK(max_power(f, {0}, 5000).max_power == 2);
    CHECK_FALSE(max_power(f, {0, 1}, 5000).hit_scan_limit);
    auto pr = max_power(periodic_word({}, {0, 1}, char_names("01")), {0, 1}, 1000);
    CHECK(pr.max_power >= 499);
    CHECK(pr.hit_scan_limit);
}

TEST_CASE("detect_eventual_period") {
    auto per = detect_eventual_period(periodic_word({1, 1, 0}, {0, 1}, char_names("01")), 9000,
                                      50, 2000);
    REQUIRE(per.has_value());
    CHECK(per->period == 2);
    CHECK(per->preperiod <= 3);
    CHECK_FALSE(detect_eventual_period(fibonacci_word(), 10000, 500, 2000).has_value());
}

TEST_CASE("aperiodicity via right special factors") {
    for (const InfiniteWord& w : {fibonacci_word(), thue_morse_word()})
        for (size_t n = 1; n <= 50; ++n) CHECK(has_right_special_factor(w, n, 20000));
    InfiniteWord p = periodic_word({}, {0, 1, 1}, char_names("01"));
    CHECK_FALSE(has_right_special_factor(p, 10, 5000));
}
