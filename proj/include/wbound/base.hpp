#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wbound {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Thrown for contract violations and unsatisfiable requests.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

// Saturating add used by path-count tables; SAT poisons any sum.
constexpr u64 SAT = ~u64{0};

inline u64 sat_add(u64 a, u64 b) {
    if (a == SAT || b == SAT) return SAT;
    u64 r = a + b;
    if (r < a) return SAT;
    return r;
}

inline u64 checked(u64 v, const char* what) {
    if (v == SAT) throw error(std::string("count overflow in ") + what);
    return v;
}

/// A word over an integer-coded alphabet.
using Word = std::vector<int>;

inline Word to_word(std::initializer_list<int> xs) { return Word(xs); }

}  // namespace wbound
