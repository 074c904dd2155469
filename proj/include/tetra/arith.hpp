#pragma once

// Digit and valuation primitives over arbitrary-precision naturals.
// Everything here is exact integer arithmetic; no float shortcuts.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "tetra/errors.hpp"

namespace tetra {

using Nat = mpz_class;

inline Nat pow10(unsigned long n) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
    return r;
}

inline Nat pow_ui(const Nat& base, unsigned long e) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Nat pow_mod(const Nat& base, const Nat& e, const Nat& m) {
    Nat r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

struct Valuation {
    unsigned long prime = 0;
    unsigned long order = 0;
};

// largest e with p^e | n; exact by repeated division
inline Valuation nu(unsigned long p, const Nat& n) {
    if (p < 2)
        throw domain_error("nu: p must be a prime >= 2");
    if (n == 0)
        throw domain_error("nu: valuation of 0 is undefined (infinite)");
    Nat rest;
    unsigned long order =
        mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Nat(p).get_mpz_t());
    return {p, order};
}

inline unsigned long nu_order(unsigned long p, const Nat& n) { return nu(p, n).order; }

// rightmost nonzero decimal digit of c
inline unsigned last_nonzero_digit(const Nat& c) {
    if (c == 0)
        throw domain_error("last_nonzero_digit: undefined for 0");
    Nat x = c;
    while (true) {
        unsigned long d = mpz_fdiv_ui(x.get_mpz_t(), 10);
        if (d != 0)
            return static_cast<unsigned>(d);
        x /= 10;
    }
}

// the unique d with 10^(d-1) <= c < 10^d
inline unsigned long decimal_length(const Nat& c) {
    if (c == 0)
        throw domain_error("decimal_length: undefined for 0");
    // sizeinbase is exact for base 10 only up to +1; settle with a compare
    unsigned long d = mpz_sizeinbase(c.get_mpz_t(), 10);
    if (d > 1 && c < pow10(d - 1))
        --d;
    return d;
}

inline Nat digit_sum(const Nat& n) {
    std::string s = n.get_str();
    unsigned long acc = 0;
    Nat total = 0;
    for (char ch : s) {
        acc += static_cast<unsigned long>(ch - '0');
        if (acc > (1UL << 60)) { total += acc; acc = 0; }
    }
    total += acc;
    return total;
}

struct AgreementDepth {
    unsigned long depth = 0;
    bool saturated = false;  // depth == cap: the true depth may exceed precision
};

// largest n <= cap with x == y (mod 10^n); inputs are residues mod 10^cap
inline AgreementDepth agreement_depth(const Nat& x, const Nat& y, unsigned long cap) {
    if (cap < 1)
        throw domain_error("agreement_depth: cap must be >= 1");
    Nat diff = x - y;
    if (diff < 0)
        diff = -diff;
    diff %= pow10(cap);
    if (diff == 0)
        return {cap, true};
    // 10^n | diff  <=>  n <= min(nu2, nu5)
    unsigned long v2 = mpz_scan1(diff.get_mpz_t(), 0);
    unsigned long v5 = nu_order(5, diff);
    unsigned long d = std::min({v2, v5, cap});
    return {d, d == cap};
}

// nu_p(x^c - y^c) by the lifting-the-exponent case split
inline Valuation lte_predict(unsigned long p, const Nat& x, const Nat& y, const Nat& c) {
    if (p < 2)
        throw domain_error("lte: p must be a prime >= 2");
    if (c < 1)
        throw domain_error("lte: c must be >= 1");
    if (mpz_divisible_ui_p(x.get_mpz_t(), p))
        throw domain_error("lte: precondition p | x violated (requires p not dividing x)");
    if (mpz_divisible_ui_p(y.get_mpz_t(), p))
        throw domain_error("lte: precondition p | y violated (requires p not dividing y)");
    Nat d = x - y;
    if (d < 0)
        d = -d;
    if (d == 0 || !mpz_divisible_ui_p(d.get_mpz_t(), p))
        throw domain_error("lte: precondition p | (x - y) violated");
    if (p != 2)
        return {p, nu_order(p, d) + nu_order(p, c)};
    // p = 2: x, y odd is implied by 2 not dividing them
    if (mpz_odd_p(c.get_mpz_t()))
        return {2, nu_order(2, d)};
    return {2, nu_order(2, d) + nu_order(2, x + y) + nu_order(2, c) - 1};
}

} // namespace tetra
