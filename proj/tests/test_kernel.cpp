#include <catch2/catch_amalgamated.hpp>

#include "wbound/kernel.hpp"
#include "wbound/word_registry.hpp"

using namespace wbound;

TEST_CASE("Fibonacci index maps mu_s") {
    Ans fib = make_ans("fibonacci");
    InfiniteWord none;
    auto mu = [&](const Word& s, size_t count) {
        return suffix_subsequence(none, fib, s, count).mu;
    };
    CHECK(mu({}, 10) == std::vector<u64>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(mu({0}, 9) == std::vector<u64>{2, 3, 5, 7, 8, 10, 11, 13, 15});
    CHECK(mu({1}, 10) == std::vector<u64>{1, 4, 6, 9, 12, 14, 17, 19, 22, 25});
    CHECK(mu({0, 1}, 9) == std::vector<u64>{4, 6, 9, 12, 14, 17, 19, 22, 25});
    CHECK(mu({0, 0}, 9) == std::vector<u64>{3, 5, 8, 11, 13, 16, 18, 21, 24});
    CHECK(mu({1, 0}, 10) == std::vector<u64>{2, 7, 10, 15, 20, 23, 28, 31, 36, 41});
}

TEST_CASE("Thue-Morse kernel over base 2 has two classes") {
    Ans b2 = make_ans("base:2");
    InfiniteWord t = thue_morse_word();
    KernelReport rep = kernel_enumerate(t, b2, 6, 512);
    CHECK(rep.stabilized);
    CHECK(rep.distinct_subsequences == 2);  // the word and its complement
    KernelDfao m = dfao_from_kernel(rep, t, b2, 4096);
    CHECK(m.base.num_states() == 2);
}

TEST_CASE("constant word kernel is a single class") {
    Ans ab = make_ans("ans:astar-bstar");
    InfiniteWord c = periodic_word({}, {1}, char_names("ab"));
    KernelReport rep = kernel_enumerate(c, ab, 4, 256);
    CHECK(rep.distinct_subsequences == 1);
    KernelDfao m = dfao_from_kernel(rep, c, ab, 512);
    CHECK(m.base.num_states() == 1);
}

TEST_CASE("triangular word kernel over astar-bstar") {
    Ans ab = make_ans("ans:astar-bstar");
    InfiniteWord w1 = triangular_word();
    KernelReport rep = kernel_enumerate(w1, ab, 5, 512);
    CHECK(rep.stabilized);
    // w itself, the all-ones row (suffixes a^l), the all-zeros rows
    CHECK(rep.distinct_subsequences == 3);
    KernelDfao m = dfao_from_kernel(rep, w1, ab, 4096);
    CHECK(m.base.num_states() <= 4);
}

TEST_CASE("periodic word over base 2 has a finite kernel") {
    Ans b2 = make_ans("base:2");
    InfiniteWord p = periodic_word({1}, {0, 0, 1}, char_names("01"));
    KernelReport rep = kernel_enumerate(p, b2, 7, 512);
    CHECK(rep.stabilized);
    CHECK(rep.distinct_subsequences <= 6);
    CHECK_NOTHROW(dfao_from_kernel(rep, p, b2, 2048));
}

TEST_CASE("characteristic word of Fibonacci numbers: kernel resynthesis") {
    Ans fib = make_ans("fibonacci");
    PositionalSystem sys = make_positional("fibonacci");
    InfiniteWord w = characteristic_word([sys](u64 n) { return sys.term(n); });
    KernelReport rep = kernel_enumerate(w, fib, 6, 512);
    CHECK(rep.stabilized);
    KernelDfao m = dfao_from_kernel(rep, w, fib, 10000);

    // matches the direct 10* construction on a long prefix
    Dfa direct;
    direct.num_symbols = 2;
    int q0 = direct.add_state(false), q1 = direct.add_state(false), bad = direct.add_state(false);
    direct.initial = q0;
    direct.set_trans(q0, 1, q1); direct.set_trans(q0, 0, bad);
    direct.set_trans(q1, 0, q1); direct.set_trans(q1, 1, bad);
    direct.set_trans(bad, 0, bad); direct.set_trans(bad, 1, bad);
    InfiniteWord expect = automatic_word(fib, direct, {0, 1, 0}, char_names("01"));
    InfiniteWord got = automatic_word(fib, m.base, m.outputs, char_names("01"), true);
    CHECK(got.prefix(10000) == expect.prefix(10000));
}

TEST_CASE("kernel size bound for DFAO-generated words") {
    // for a word generated by a DFAO, the class count is bounded by
    // |dfao states| * |Myhill-Nerode classes of the numeration language|
    Ans b2 = make_ans("base:2");
    InfiniteWord t = thue_morse_word();
    KernelReport rep = kernel_enumerate(t, b2, 6, 512);
    size_t bound = 2 * static_cast<size_t>(canonicalize(b2.language).num_states());
    CHECK(rep.classes.size() <= bound);
}
