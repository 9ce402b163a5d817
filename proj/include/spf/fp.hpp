#pragma once

#include <cstdint>
#include <stdexcept>

namespace spf {

// Arithmetic in the prime field F_p. Values live in [0, p), p < 2^31,
// so sums and products fit in 64 bits before reduction.
namespace fp {

inline uint32_t reduce(int64_t x, uint32_t p) {
    int64_t r = x % static_cast<int64_t>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t base = a % p, acc = 1 % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

inline uint32_t inv(uint32_t a, uint32_t p) {
    if (a % p == 0) throw std::domain_error("fp::inv: zero is not invertible");
    return pow(a, p - 2, p);
}

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

}  // namespace fp
}  // namespace spf
