#pragma once

// Trailing-digit prefixes of the 10-adic idempotents: the four solutions of
// y^2 = y are 0, 1 and the two automorphic tails alpha25 (limit of 5^(2^n))
// and alpha76 = 1 - alpha25.  The nontrivial prefixes come from iterating
// x <- x^2 mod 10^n to its fixed point; convergence is quadratic.

#include <string>

#include "tetra/arith.hpp"
#include "tetra/errors.hpp"

namespace tetra {

enum class DecadicRoot { alpha00, alpha01, alpha25, alpha76 };

struct DecadicPrefix {
    DecadicRoot root;
    unsigned long length = 0;
    std::string digits;  // exactly `length` chars, most significant first

    Nat value() const { return Nat(digits); }
    // digit at 10^i (i = 0 is the units digit)
    unsigned digit_at(unsigned long i) const {
        if (i >= length)
            throw domain_error("decadic prefix: digit index past the prefix");
        return static_cast<unsigned>(digits[length - 1 - i] - '0');
    }
};

namespace detail {

inline std::string zero_padded(const Nat& x, unsigned long n) {
    std::string s = x.get_str();
    return s.size() >= n ? s : std::string(n - s.size(), '0') + s;
}

} // namespace detail

inline DecadicPrefix alpha25_prefix(unsigned long n) {
    if (n < 1)
        throw domain_error("alpha25_prefix: need n >= 1");
    Nat mod = pow10(n);
    Nat x = 5;
    while (true) {
        Nat sq = x * x % mod;
        if (sq == x)
            break;
        x = sq;
    }
    return {DecadicRoot::alpha25, n, detail::zero_padded(x, n)};
}

inline DecadicPrefix alpha76_prefix(unsigned long n) {
    if (n < 1)
        throw domain_error("alpha76_prefix: need n >= 1");
    Nat mod = pow10(n);
    Nat x = (1 - alpha25_prefix(n).value()) % mod;
    if (x < 0)
        x += mod;
    return {DecadicRoot::alpha76, n, detail::zero_padded(x, n)};
}

inline bool is_automorphic(const Nat& y, unsigned long n) {
    if (n < 1)
        throw domain_error("is_automorphic: need n >= 1");
    Nat mod = pow10(n);
    return (y * y - y) % mod == 0;
}

} // namespace tetra
