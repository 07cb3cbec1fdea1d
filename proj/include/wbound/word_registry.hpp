#pragma once

/*
 * Named word constructions shared by the CLI, the tests, and the
 * reproduction claims.
 */

#include "wbound/words.hpp"

namespace wbound {

inline InfiniteWord fibonacci_word() {
    Morphism f = parse_morphism("0:01,1:0", "01");
    return morphic_word(f, 0, char_names("01"));
}

inline InfiniteWord thue_morse_word() {
    Morphism f = parse_morphism("0:01,1:10", "01");
    return morphic_word(f, 0, char_names("01"));
}

inline InfiniteWord tribonacci_word() {
    Morphism f = parse_morphism("0:01,1:02,2:0", "012");
    return morphic_word(f, 0, char_names("012"));
}

/// w_s = f(g_s^w(0)) with g_s: 0 -> 01, 1 -> 12^s, 2 -> 2 and
/// f: 0 -> e, 1 -> 1, 2 -> 0; the characteristic word of the s-gonal-like
/// numbers P_n = n(sn - s + 2)/2.
inline InfiniteWord polygonal_morphic_word(int s) {
    require(s >= 1, "polygonal word: s >= 1");
    Morphism g;
    g.images = {{0, 1}, Word{1}, {2}};
    for (int i = 0; i < s; ++i) g.images[1].push_back(2);
    Morphism f;
    f.images = {{}, {1}, {0}};
    return morphic_word(g, 0, f, char_names("01"));
}

inline u64 polygonal_number(int s, u64 n) {
    // n(sn - s + 2)/2; s(n-1) + 2 is even whenever n is odd
    u64 t = static_cast<u64>(s) * n + 2 - static_cast<u64>(s);
    return (n % 2 == 0) ? (n / 2) * t : n * (t / 2);
}

inline InfiniteWord triangular_word() {
    return characteristic_word([](u64 n) { return n * (n + 1) / 2; });
}

inline InfiniteWord squares_word() {
    return characteristic_word([](u64 n) { return n * n; });
}

inline InfiniteWord polygonal_characteristic_word(int s) {
    return characteristic_word([s](u64 n) {
        u64 t = static_cast<u64>(s) * n + 2 - static_cast<u64>(s);
        return (n % 2 == 0) ? (n / 2) * t : n * (t / 2);
    });
}

/// Characteristic word of the Mersenne-type basis U_n = 2^{n+1} - 1.
inline InfiniteWord mersenne_characteristic_word() {
    return characteristic_word([](u64 n) { return (u64{2} << n) - 1; });
}

/// Characteristic word of the quaternary counterexample basis V.
inline InfiniteWord v_characteristic_word() {
    auto sys = std::make_shared<PositionalSystem>(make_positional("v-quaternary"));
    return characteristic_word([sys](u64 n) { return sys->term(static_cast<size_t>(n)); });
}

}  // namespace wbound
