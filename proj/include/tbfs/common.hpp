#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tbfs {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

// Thrown when an internal structural invariant is violated. The CLI maps
// this to exit code 3; it is never caught and ignored.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Thrown on malformed user input (files, parameters). CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void invariant_fail(const char* expr, const char* file, int line) {
    throw invariant_error(std::string("invariant violated: ") + expr + " at " + file + ":" +
                          std::to_string(line));
}

// Always-on checks for structural invariants; not compiled out in release.
#define TBFS_CHECK(cond)                                                                 \
    do {                                                                                 \
        if (!(cond)) ::tbfs::invariant_fail(#cond, __FILE__, __LINE__);                  \
    } while (0)

#define TBFS_CHECK_MSG(cond, msg)                                                        \
    do {                                                                                 \
        if (!(cond)) ::tbfs::invariant_fail(msg, __FILE__, __LINE__);                    \
    } while (0)

inline int bit_length_u64(u64 x) { return x == 0 ? 0 : 64 - __builtin_clzll(x); }

// floor(log2 x) for x >= 1
inline int floor_log2_u64(u64 x) { return bit_length_u64(x) - 1; }

// ceil(log2 x) for x >= 1
inline int ceil_log2_u64(u64 x) { return x <= 1 ? 0 : bit_length_u64(x - 1); }

inline u64 next_pow2_u64(u64 x) {
    if (x <= 1) return 1;
    return u64(1) << ceil_log2_u64(x);
}

// Exact ceil(n * log2(3)). log2(3) scaled by 2^60; the fractional part of
// n*log2(3) is never within n/2^60 of an integer at supported sizes, which
// the guard check enforces.
inline u64 ceil_n_log2_3(u64 n) {
    if (n == 0) return 0;
    constexpr u64 kLog2Of3Q60 = 1827342245680698826ull;  // floor(log2(3) * 2^60)
    u128 lo = u128(n) * kLog2Of3Q60;
    u64 frac = u64(lo & ((u128(1) << 60) - 1));
    TBFS_CHECK_MSG(frac > n && frac < (u64(1) << 60) - n, "ceil(n*log2 3) ambiguous");
    return u64(lo >> 60) + 1;
}

}  // namespace tbfs
