#pragma once

// Congruence speed of tetration in radix 10.
//
// d(b) is the agreement depth of consecutive towers ^b a and ^(b+1) a, i.e.
// the number of frozen rightmost digits at height b; the speed V(a,b) is the
// per-height increment d(b) - d(b-1) with d(0) = 0.  For every base >= 2 not
// divisible by 10 the increments become a positive constant V(a).
//
// Working precision is estimated from a cheap low-precision prepass and grown
// geometrically whenever any depth saturates, so reported profiles are always
// strictly inside the computed precision.

#include <optional>
#include <string>
#include <vector>

#include "tetra/arith.hpp"
#include "tetra/errors.hpp"
#include "tetra/tower.hpp"

namespace tetra {

struct SpeedProfile {
    Nat base;
    std::vector<unsigned long> depths;  // d(b) for b = 1..B
    std::vector<unsigned long> speeds;  // V(a,b) for b = 1..B
    unsigned long stabilization_height = 0;  // first height of the trailing constant run
    unsigned long constant_speed = 0;        // value of that run
    unsigned long precision_digits = 0;
};

enum class Policy { guaranteed, windowed };

inline const char* policy_name(Policy p) {
    return p == Policy::guaranteed ? "guaranteed" : "windowed";
}

struct SpeedOptions {
    Policy policy = Policy::windowed;
    unsigned long window = 30;               // W equal increments end the windowed scan
    unsigned long height_cap = 2000;         // windowed gives up past this height
    unsigned long guaranteed_cutoff = 400;   // guaranteed mode only runs for a <= cutoff
    unsigned long precision_cap = 1UL << 20; // hard cap on working digits
};

namespace detail {

struct DepthScan {
    std::vector<unsigned long> depths;
    bool saturated = false;  // scan stopped early: precision too low
};

inline void check_speed_base(const Nat& a) {
    if (a <= 1)
        throw invalid_base("congruence speed undefined for a <= 1 (V(1) = 0 by convention)");
    if (mpz_divisible_ui_p(a.get_mpz_t(), 10))
        throw invalid_base("congruence speed undefined for multiples of 10");
}

// depths d(1)..d(B) at fixed precision; stops at the first saturated depth
inline DepthScan scan_depths(const Nat& a, unsigned long max_height, unsigned long n) {
    ModulusChain chain(pow10(n));
    TowerEvaluator ev(a, chain);
    DepthScan out;
    Nat prev = ev.top();
    for (unsigned long b = 1; b <= max_height; ++b) {
        ev.step();
        auto d = agreement_depth(prev, ev.top(), n);
        if (d.saturated) {
            out.saturated = true;
            return out;
        }
        out.depths.push_back(d.depth);
        prev = ev.top();
    }
    return out;
}

// cheap slope estimate used to seed the working precision
inline unsigned long estimate_speed(const Nat& a, unsigned long n_pre = 96) {
    auto scan = scan_depths(a, 64, n_pre);
    const auto& d = scan.depths;
    if (d.size() < 2)
        return d.empty() ? 8 : std::max<unsigned long>(d[0], 8);
    unsigned long est = 1;
    std::size_t lo = d.size() > 3 ? d.size() - 3 : 1;
    for (std::size_t i = lo; i < d.size(); ++i)
        est = std::max(est, d[i] - d[i - 1]);
    return est;
}

inline std::vector<unsigned long> speeds_from_depths(const std::vector<unsigned long>& depths) {
    std::vector<unsigned long> v;
    v.reserve(depths.size());
    unsigned long prev = 0;  // d(0) = 0
    for (unsigned long d : depths) {
        if (d < prev)
            throw std::logic_error("depth sequence decreased; tower evaluation is broken");
        v.push_back(d - prev);
        prev = d;
    }
    return v;
}

inline void fill_tail_run(SpeedProfile& p) {
    const auto& v = p.speeds;
    if (v.empty())
        return;
    std::size_t i = v.size() - 1;
    while (i > 0 && v[i - 1] == v.back())
        --i;
    p.stabilization_height = i + 1;  // heights are 1-based
    p.constant_speed = v.back();
}

} // namespace detail

// full profile for b = 1..max_height at one shared precision
inline SpeedProfile speed_profile(const Nat& a, unsigned long max_height,
                                  const SpeedOptions& opt = {}) {
    detail::check_speed_base(a);
    if (max_height < 1)
        throw domain_error("speed_profile: height must be >= 1");
    unsigned long est = detail::estimate_speed(a);
    unsigned long n = std::max<unsigned long>(64, est * (max_height + 2) + 40);
    while (true) {
        if (n > opt.precision_cap)
            throw precision_exhausted("speed_profile: needs more than " +
                                      std::to_string(opt.precision_cap) + " digits");
        auto scan = detail::scan_depths(a, max_height, n);
        if (!scan.saturated) {
            SpeedProfile p;
            p.base = a;
            p.depths = std::move(scan.depths);
            p.speeds = detail::speeds_from_depths(p.depths);
            p.precision_digits = n;
            detail::fill_tail_run(p);
            return p;
        }
        n += (n + 1) / 2;  // grow by 1.5x
    }
}

// V(a, b)
inline unsigned long speed_at(const Nat& a, unsigned long b, const SpeedOptions& opt = {}) {
    if (b < 1)
        throw domain_error("speed_at: height must be >= 1");
    return speed_profile(a, b, opt).speeds.back();
}

// V(a) under the chosen stabilization policy
inline SpeedProfile stabilized_profile(const Nat& a, const SpeedOptions& opt = {}) {
    detail::check_speed_base(a);
    if (opt.policy == Policy::guaranteed) {
        // the paper's sufficient bound: V(a) = V(a, a+1)
        if (a > opt.guaranteed_cutoff)
            throw domain_error("guaranteed policy: base exceeds the cutoff " +
                               std::to_string(opt.guaranteed_cutoff) +
                               " (use the windowed policy)");
        return speed_profile(a, a.get_ui() + 1, opt);
    }
    const unsigned long w = opt.window;
    const unsigned long h_min = std::max<unsigned long>(10, decimal_length(a) + 8);
    unsigned long height = std::max(h_min, w + 5);
    while (height <= opt.height_cap) {
        SpeedProfile p = speed_profile(a, height, opt);
        const auto& v = p.speeds;
        if (v.size() >= h_min && v.size() >= w) {
            bool tail_equal = true;
            for (std::size_t i = v.size() - w; i < v.size(); ++i)
                if (v[i] != v.back()) {
                    tail_equal = false;
                    break;
                }
            if (tail_equal)
                return p;
        }
        height += w;
    }
    throw non_stabilized("windowed policy: no constant tail of length " +
                         std::to_string(w) + " within " +
                         std::to_string(opt.height_cap) + " heights");
}

inline unsigned long constant_speed(const Nat& a, const SpeedOptions& opt = {}) {
    return stabilized_profile(a, opt).constant_speed;
}

// closed forms quoted by the paper; anything else reports "not covered"
inline std::optional<unsigned long> constant_speed_shortcut(const Nat& a) {
    if (a > 1 && a % 100 == 1)
        return std::min(nu_order(5, a - 1), nu_order(2, a - 1));
    // a = 10^t - 1
    if (a >= 9) {
        Nat succ = a + 1;
        unsigned long t2 = nu_order(2, succ);
        if (t2 >= 1 && nu_order(5, succ) == t2 && pow10(t2) == succ)
            return t2;
    }
    return std::nullopt;
}

} // namespace tetra
