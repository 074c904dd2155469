#pragma once

// Evaluation of power towers  ^b a = a^(a^(...^a))  modulo 2^alpha * 5^beta.
//
// The modulus chain m, lambda(m), lambda(lambda(m)), ..., 1 stays inside the
// family 2^alpha * 5^beta, so lambda has a closed form and no factoring is
// needed.  A tower residue at one link is the exponent residue for the link
// above it.  Bases sharing a factor with the modulus are handled by splitting
// mod 2^alpha and 5^beta and recombining with CRT: on the non-unit side a^E
// vanishes once E reaches the exponent of the prime power.
//
// Exponents are carried exactly while the tower value is provably small;
// beyond that only the residue matters and a "large" flag certifies that the
// true exponent exceeds every prime-power exponent in play.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tetra/arith.hpp"
#include "tetra/errors.hpp"

namespace tetra {

namespace detail {

// exact exponent values are tracked only up to this bound; anything above
// certifies E >= alpha, beta for every modulus this library can build
inline constexpr unsigned long long kLargeExponent = 1ULL << 62;

inline std::pair<unsigned long, unsigned long> factor_25(const Nat& m) {
    if (m < 1)
        throw unsupported_modulus("modulus must be >= 1");
    Nat rest;
    unsigned long a = mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), Nat(2).get_mpz_t());
    Nat rest2;
    unsigned long b = mpz_remove(rest2.get_mpz_t(), rest.get_mpz_t(), Nat(5).get_mpz_t());
    if (rest2 != 1)
        throw unsupported_modulus("modulus " + m.get_str() + " is not of the form 2^a*5^b");
    return {a, b};
}

// lambda(2^a * 5^b) as an exponent pair
inline std::pair<unsigned long, unsigned long> lambda_exponents(unsigned long a, unsigned long b) {
    unsigned long e2 = a <= 1 ? 0 : (a == 2 ? 1 : a - 2);
    unsigned long a2 = std::max(e2, b >= 1 ? 2UL : 0UL);
    unsigned long b2 = b >= 1 ? b - 1 : 0;
    return {a2, b2};
}

inline Nat from_exponents(unsigned long a, unsigned long b) {
    Nat r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), a);
    Nat p5;
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, b);
    return r * p5;
}

inline Nat mod_floor(const Nat& x, const Nat& m) {
    Nat r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace detail

inline Nat carmichael(const Nat& m) {
    auto [a, b] = detail::factor_25(m);
    auto [a2, b2] = detail::lambda_exponents(a, b);
    return detail::from_exponents(a2, b2);
}

struct ChainLink {
    unsigned long alpha = 0, beta = 0;
    Nat m;                       // 2^alpha * 5^beta
    Nat pow2, pow5;              // the two prime-power parts
    Nat inv2_mod5;               // (2^alpha)^-1 mod 5^beta, when both parts nontrivial
    unsigned long lam2_exp = 0;  // lambda(2^alpha) = 2^lam2_exp
    Nat lam5;                    // lambda(5^beta)

    explicit ChainLink(unsigned long a, unsigned long b) : alpha(a), beta(b) {
        m = detail::from_exponents(a, b);
        pow2 = detail::from_exponents(a, 0);
        pow5 = detail::from_exponents(0, b);
        lam2_exp = a <= 1 ? 0 : (a == 2 ? 1 : a - 2);
        lam5 = b >= 1 ? 4 * detail::from_exponents(0, b - 1) : Nat(1);
        if (a > 0 && b > 0) {
            Nat inv;
            int ok = mpz_invert(inv.get_mpz_t(), pow2.get_mpz_t(), pow5.get_mpz_t());
            assert(ok);
            (void)ok;
            inv2_mod5 = inv;
        }
    }
};

class ModulusChain {
  public:
    explicit ModulusChain(const Nat& m) {
        auto [a, b] = detail::factor_25(m);
        links_.emplace_back(a, b);
        while (a != 0 || b != 0) {
            std::tie(a, b) = detail::lambda_exponents(a, b);
            links_.emplace_back(a, b);
        }
    }

    const std::vector<ChainLink>& links() const { return links_; }
    std::size_t size() const { return links_.size(); }
    const ChainLink& operator[](std::size_t i) const { return links_[i]; }

    std::vector<Nat> moduli() const {
        std::vector<Nat> out;
        out.reserve(links_.size());
        for (const auto& l : links_) out.push_back(l.m);
        return out;
    }

  private:
    std::vector<ChainLink> links_;
};

namespace detail {

// a^E mod p^k for one prime side of a link.  va = nu_p(a).  When e_is_large,
// e is a residue mod lambda(link.m) and the true exponent is >= kLargeExponent.
inline Nat side_pow(const Nat& a, unsigned long va, const Nat& e, bool e_is_large,
                    unsigned long p, unsigned long k, const Nat& pk, const ChainLink& link) {
    if (k == 0)
        return 0;
    if (va == 0) {
        Nat er;
        if (e_is_large) {
            // ord_{p^k}(a) divides lambda(p^k) divides lambda(link.m)
            if (p == 2)
                mpz_fdiv_r_2exp(er.get_mpz_t(), e.get_mpz_t(), link.lam2_exp);
            else
                er = mod_floor(e, link.lam5);
        } else {
            er = e;
        }
        return pow_mod(a, er, pk);
    }
    // p | a: the power vanishes once va * E >= k
    if (e_is_large)
        return 0;
    if (va * e >= k)
        return 0;
    return pow_mod(a, e, pk);
}

inline Nat crt_25(const Nat& r2, const Nat& r5, const ChainLink& link) {
    if (link.alpha == 0)
        return r5;
    if (link.beta == 0)
        return r2;
    Nat t = mod_floor((r5 - r2) * link.inv2_mod5, link.pow5);
    return r2 + link.pow2 * t;
}

inline Nat pow_mod_lifted_link(const Nat& a, unsigned long va2, unsigned long va5,
                               const Nat& e, bool e_is_large, const ChainLink& link) {
    if (link.alpha == 0 && link.beta == 0)
        return 0;
    Nat r2 = side_pow(a, va2, e, e_is_large, 2, link.alpha, link.pow2, link);
    Nat r5 = side_pow(a, va5, e, e_is_large, 5, link.beta, link.pow5, link);
    return crt_25(r2, r5, link);
}

} // namespace detail

// a^E mod m where E is represented by (e, e_is_large):  e is the exact
// exponent when the flag is false, otherwise a residue of E mod lambda(m)
// together with the certificate E >= 2^62.
inline Nat pow_mod_lifted(const Nat& a, const Nat& e, bool e_is_large, const Nat& m) {
    auto [al, be] = detail::factor_25(m);
    ChainLink link(al, be);
    unsigned long va2 = a == 0 ? 0 : nu_order(2, a);
    unsigned long va5 = a == 0 ? 0 : nu_order(5, a);
    return detail::pow_mod_lifted_link(a, va2, va5, e, e_is_large, link);
}

// Iterates tower heights against a fixed modulus chain.  Residues for every
// link are kept per height; a link whose exponent residue did not change is
// not recomputed, and once a whole sweep changes nothing the tower is
// stationary at every link for all larger heights.
class TowerEvaluator {
  public:
    TowerEvaluator(Nat base, const ModulusChain& chain)
        : a_(std::move(base)), chain_(chain) {
        if (a_ < 2)
            throw domain_error("tower: base must be >= 2");
        va2_ = nu_order(2, a_);
        va5_ = nu_order(5, a_);
        const auto& ls = chain_.links();
        vals_.reserve(ls.size());
        for (const auto& l : ls) vals_.push_back(detail::mod_floor(a_, l.m));
        next_.resize(ls.size());
        last_exp_.resize(ls.size());
        memo_.assign(ls.size(), false);
        small_ = a_.fits_ulong_p() && a_.get_ui() < detail::kLargeExponent
                     ? std::optional<unsigned long long>(a_.get_ui())
                     : std::nullopt;
        height_ = 1;
    }

    unsigned long long height() const { return height_; }
    const Nat& top() const { return vals_.front(); }
    const Nat& at_link(std::size_t j) const { return vals_[j]; }
    bool stationary() const { return stationary_; }

    // advance from height h to h+1
    void step() {
        if (stationary_) {
            ++height_;
            return;
        }
        const auto& ls = chain_.links();
        const std::size_t L = ls.size();
        bool exact = height_ == 1 || small_.has_value();
        Nat e_exact;
        if (exact)
            e_exact = height_ == 1 ? a_ : Nat(static_cast<unsigned long>(*small_));
        bool any_change = false;
        static const Nat zero = 0;
        for (std::size_t j = 0; j < L; ++j) {
            if (exact) {
                next_[j] = detail::pow_mod_lifted_link(a_, va2_, va5_, e_exact, false, ls[j]);
                memo_[j] = false;
            } else {
                const Nat& er = j + 1 < L ? vals_[j + 1] : zero;
                if (memo_[j] && er == last_exp_[j]) {
                    next_[j] = vals_[j];
                    continue;
                }
                next_[j] = detail::pow_mod_lifted_link(a_, va2_, va5_, er, true, ls[j]);
                last_exp_[j] = er;
                memo_[j] = true;
                any_change = true;
            }
        }
        if (!exact && !any_change)
            stationary_ = true;
        vals_.swap(next_);
        ++height_;
        advance_small();
    }

  private:
    // saturating exact tower value: small_ = ^h a while < 2^62
    void advance_small() {
        if (!small_)
            return;
        unsigned long long base = a_.get_ui();  // fits: small_ was seeded from a_
        unsigned long long e = *small_;
        if (e >= 63) {  // base >= 2, so base^e >= 2^63
            small_.reset();
            return;
        }
        unsigned long long result = 1;
        for (unsigned long long i = 0; i < e; ++i) {
            __uint128_t r = static_cast<__uint128_t>(result) * base;
            if (r >= detail::kLargeExponent) {
                small_.reset();
                return;
            }
            result = static_cast<unsigned long long>(r);
        }
        small_ = result;
    }

    Nat a_;
    const ModulusChain& chain_;
    unsigned long va2_ = 0, va5_ = 0;
    std::vector<Nat> vals_, next_, last_exp_;
    std::vector<bool> memo_;
    std::optional<unsigned long long> small_;
    unsigned long long height_ = 1;
    bool stationary_ = false;
};

// residue of ^b a mod m for any m = 2^alpha * 5^beta; b may be astronomically
// large (heights past the stationary point all share one residue)
inline Nat tower_mod_m(const Nat& a, const Nat& b, const Nat& m) {
    if (a < 2)
        throw domain_error("tower_mod: base must be >= 2");
    if (b < 1)
        throw domain_error("tower_mod: height must be >= 1");
    ModulusChain chain(m);
    TowerEvaluator ev(a, chain);
    while (Nat(ev.height()) < b && !ev.stationary())
        ev.step();
    return ev.top();
}

struct TowerResidue {
    Nat base;
    Nat height;
    unsigned long modulus_digits = 0;
    Nat residue;
    bool exact = false;  // true iff ^b a < 10^n, so residue is the exact value
};

// exact value of ^b a, failing once the tower exceeds size_cap digits
inline Nat tower_exact(const Nat& a, const Nat& b, unsigned long size_cap_digits) {
    if (a < 1)
        throw domain_error("tower_exact: base must be >= 1");
    if (b < 1)
        throw domain_error("tower_exact: height must be >= 1");
    if (a == 1)
        return 1;
    // bit budget: 10^d < 2^(3.33*d + 1)
    const unsigned long long bit_cap = static_cast<unsigned long long>(size_cap_digits) * 10 / 3 + 4;
    const auto too_big = [&] {
        return overflow_cap("tower_exact: exceeds " + std::to_string(size_cap_digits) + " digits");
    };
    Nat t = a;
    const unsigned long abits = mpz_sizeinbase(a.get_mpz_t(), 2);  // >= 2 since a >= 2
    for (Nat h = 1; h < b; ++h) {
        if (!t.fits_ulong_p())
            throw too_big();
        unsigned long e = t.get_ui();
        if (static_cast<__uint128_t>(e) * (abits - 1) > bit_cap)  // a^e >= 2^(e*(abits-1))
            throw too_big();
        t = pow_ui(a, e);
        if (decimal_length(t) > size_cap_digits)
            throw too_big();
    }
    return t;
}

// true iff ^b a < limit (cheap saturating check, no big towers materialized)
inline bool tower_below(const Nat& a, const Nat& b, const Nat& limit) {
    if (a == 1)
        return 1 < limit;
    Nat t = a;
    const unsigned long abits = mpz_sizeinbase(a.get_mpz_t(), 2);
    const unsigned long long lbits = mpz_sizeinbase(limit.get_mpz_t(), 2);
    for (Nat h = 1; h < b; ++h) {
        if (t >= limit || !t.fits_ulong_p())
            return false;
        unsigned long e = t.get_ui();
        if (static_cast<__uint128_t>(e) * (abits - 1) > lbits)  // a^e >= 2^(e*(abits-1)) >= limit
            return false;
        t = pow_ui(a, e);
    }
    return t < limit;
}

inline TowerResidue tower_mod(const Nat& a, const Nat& b, unsigned long n_digits) {
    if (n_digits < 1)
        throw domain_error("tower_mod: digit count must be >= 1");
    TowerResidue out;
    out.base = a;
    out.height = b;
    out.modulus_digits = n_digits;
    out.residue = tower_mod_m(a, b, pow10(n_digits));
    out.exact = tower_below(a, b, pow10(n_digits));
    return out;
}

} // namespace tetra
