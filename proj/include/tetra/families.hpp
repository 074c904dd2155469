#pragma once

// The paper's constructive families of tetration bases with a prescribed
// constant congruence speed, each carrying its predicted speed and whether
// the prediction is exact or a lower bound.

#include <optional>
#include <string>

#include "tetra/arith.hpp"
#include "tetra/decadic.hpp"
#include "tetra/errors.hpp"

namespace tetra {

enum class Family { lemma20, thm22, thm23, thm24, cor21, cor25, remark1 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::lemma20: return "lemma20";
        case Family::thm22: return "thm22";
        case Family::thm23: return "thm23";
        case Family::thm24: return "thm24";
        case Family::cor21: return "cor21";
        case Family::cor25: return "cor25";
        case Family::remark1: return "remark1";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::lemma20, Family::thm22, Family::thm23, Family::thm24,
                     Family::cor21, Family::cor25, Family::remark1})
        if (s == family_name(f))
            return f;
    return std::nullopt;
}

struct FamilyParams {
    std::optional<unsigned long> t, k, h, n;
    std::optional<Nat> c;

    std::string to_string() const {
        std::string out;
        auto add = [&](const char* name, const std::string& v) {
            if (!out.empty())
                out += ' ';
            out += name;
            out += '=';
            out += v;
        };
        if (t) add("t", std::to_string(*t));
        if (k) add("k", std::to_string(*k));
        if (c) add("c", c->get_str());
        if (h) add("h", std::to_string(*h));
        if (n) add("n", std::to_string(*n));
        return out;
    }
};

enum class PredictionKind { exact, at_least };

struct ConstructedBase {
    Family family = Family::lemma20;
    FamilyParams params;
    Nat root;
    Nat degree = 1;
    unsigned long predicted_speed = 0;
    PredictionKind kind = PredictionKind::exact;

    // decimal size of root^degree without materializing it
    unsigned long base_digits_upper() const {
        return decimal_length(root) * mpz_get_ui(degree.get_mpz_t()) + 1;
    }

    bool materializable(unsigned long digit_cap = 20000) const {
        if (!degree.fits_ulong_p())
            return false;
        return decimal_length(root) * degree.get_ui() <= digit_cap + 1;
    }

    Nat base() const {
        if (!materializable())
            throw overflow_cap("constructed base too large to materialize; use (root, degree)");
        return pow_ui(root, degree.get_ui());
    }

    std::string display(unsigned long digit_cap = 40) const {
        if (degree == 1)
            return decimal_length(root) <= digit_cap ? root.get_str() : root_display();
        std::string r = decimal_length(root) <= digit_cap ? root.get_str() : root_display();
        if (materializable(digit_cap))
            return base().get_str();
        return (r.find('^') != std::string::npos || r.find('+') != std::string::npos
                    ? "(" + r + ")"
                    : r) +
               "^" + degree.get_str();
    }

  private:
    // roots of the trinomial families render as 10^A+10^B+1
    std::string root_display() const {
        // recover the two exponents from the digit pattern
        std::string s = root.get_str();
        auto hi = s.size() - 1;
        auto mid = s.rfind('1', s.size() - 2);
        if (s[0] == '1' && mid != std::string::npos && mid > 0)
            return "10^" + std::to_string(hi) + "+10^" + std::to_string(s.size() - 1 - mid) + "+1";
        return s;
    }
};

// base 10^t - 1: speed exactly t
inline ConstructedBase lemma20_base(unsigned long t) {
    if (t < 1)
        throw domain_error("lemma20: t must be >= 1 (t = 0 is the excluded base 1)");
    ConstructedBase b;
    b.family = Family::lemma20;
    b.params.t = t;
    b.root = pow10(t) - 1;
    b.predicted_speed = t;
    return b;
}

// rightmost t digits of alpha25 with the adjusted (t+1)-th digit prepended;
// optional padding term 10^(k+t).  The result is 5 mod 20 with speed exactly
// t; its powers keep speed >= t.
inline ConstructedBase thm23_construct(unsigned long t,
                                       std::optional<unsigned long> k = std::nullopt) {
    if (t < 2)
        throw domain_error("thm23: t must be >= 2");
    if (k && *k < 1)
        throw domain_error("thm23: k must be >= 1 when given");
    auto prefix = alpha25_prefix(t + 1);
    unsigned x_next = prefix.digit_at(t);
    unsigned adjusted = x_next == 9 ? x_next - 1 : x_next + 1;
    ConstructedBase b;
    b.family = Family::thm23;
    b.params.t = t;
    b.params.k = k;
    b.root = Nat(adjusted) * pow10(t) + prefix.value() % pow10(t);
    if (k)
        b.root += pow10(*k + t);
    b.predicted_speed = t;
    return b;
}

// (10^(k+t) + 10^t + 1)^c: speed exactly t + min(nu5(c), nu2(c))
inline ConstructedBase thm22_base(unsigned long t, unsigned long k, const Nat& c) {
    if (t < 2)
        throw domain_error("thm22: t must be >= 2");
    if (k < 1)
        throw domain_error("thm22: k must be >= 1");
    if (c < 1)
        throw domain_error("thm22: c must be >= 1");
    ConstructedBase b;
    b.family = Family::thm22;
    b.params.t = t;
    b.params.k = k;
    b.params.c = c;
    b.root = pow10(k + t) + pow10(t) + 1;
    b.degree = c;
    b.predicted_speed = t + std::min(nu_order(5, c), nu_order(2, c));
    return b;
}

// degree 2^(k+h) * 5^h raises the speed of the thm22 root by exactly h;
// the t = 1 case uses the 10^(k+1)+86 family with degree 2^(k-1) * 5^h
inline ConstructedBase cor21_instance(unsigned long t, unsigned long k, unsigned long h) {
    if (t < 1)
        throw domain_error("cor21: t must be >= 1");
    if (k < 1)
        throw domain_error("cor21: k must be >= 1");
    ConstructedBase b;
    b.family = Family::cor21;
    b.params.t = t;
    b.params.k = k;
    b.params.h = h;
    if (t >= 2) {
        b.root = pow10(k + t) + pow10(t) + 1;
        b.degree = pow_ui(2, k + h) * pow_ui(5, h);
        b.predicted_speed = t + h;
    } else {
        b.root = pow10(k + 1) + 86;
        b.degree = pow_ui(2, k - 1) * pow_ui(5, h);
        b.predicted_speed = 1 + h;
    }
    return b;
}

// trinomial with the second exponent shifted down by nu5(c) (or nu2(c) when
// the last nonzero digit of c is 5): speed exactly t
inline ConstructedBase thm24_base(const Nat& c, unsigned long t, unsigned long k) {
    if (c < 1)
        throw domain_error("thm24: c must be >= 1");
    if (k < 1)
        throw domain_error("thm24: k must be >= 1");
    unsigned long v5 = nu_order(5, c), v2 = nu_order(2, c);
    if (t <= std::min(v5, v2) + 1)
        throw domain_error("thm24: t must exceed min(nu5(c), nu2(c)) + 1");
    unsigned long shift = last_nonzero_digit(c) != 5 ? v5 : v2;
    ConstructedBase b;
    b.family = Family::thm24;
    b.params.t = t;
    b.params.k = k;
    b.params.c = c;
    b.root = pow10(k + t) + pow10(t - shift) + 1;
    b.degree = c;
    b.predicted_speed = t;
    return b;
}

// perfect power of degree exactly c with speed c
inline ConstructedBase cor25_base(unsigned long c, unsigned long k) {
    if (c < 1)
        throw domain_error("cor25: c must be >= 1");
    if (k < 1)
        throw domain_error("cor25: k must be >= 1");
    ConstructedBase b;
    if (c >= 3) {
        b = thm24_base(c, c, k);
    } else if (c == 2) {
        b.root = pow10(2 + k) + 101;
        b.degree = 2;
        b.predicted_speed = 2;
    } else {
        b.root = pow10(1 + k) + 11;
        b.degree = 1;
        b.predicted_speed = 1;
    }
    b.family = Family::cor25;
    b.params = {};
    b.params.c = c;
    b.params.k = k;
    return b;
}

// 10^(n+1) + 86: unit speed, preserved by any power with 5 not dividing c
inline ConstructedBase remark1_base(unsigned long n) {
    if (n < 1)
        throw domain_error("remark1: n must be >= 1");
    ConstructedBase b;
    b.family = Family::remark1;
    b.params.n = n;
    b.root = pow10(n + 1) + 86;
    b.predicted_speed = 1;
    return b;
}

// (10^(k+t)+10^t+1)^c == c*10^t + 1 (mod 10^(t+d)) with d = decimal_length(c)
inline Nat remark2_residue(const Nat& c, unsigned long t, unsigned long k) {
    if (c < 1)
        throw domain_error("remark2: c must be >= 1");
    if (k < 1)
        throw domain_error("remark2: k must be >= 1");
    unsigned long d = decimal_length(c);
    if (t < d + 1)
        throw domain_error("remark2: t must be >= decimal_length(c) + 1");
    return (c * pow10(t) + 1) % pow10(t + d);
}

enum class Relation { equal, at_least };

// Eqs (1)-(3): how V(a^c) relates to V(a) for the three covered classes
inline Relation remark0_relation(const Nat& a_class_rep, const Nat& c) {
    if (c < 1)
        throw domain_error("remark0: c must be >= 1");
    Nat m10 = a_class_rep % 10;
    Nat m20 = a_class_rep % 20;
    if (m10 == 6)
        return c % 5 != 0 ? Relation::equal : Relation::at_least;
    if (m20 == 5)
        return c % 2 != 0 ? Relation::equal : Relation::at_least;
    if (m20 == 1)
        return c % 5 != 0 ? Relation::equal : Relation::at_least;
    throw domain_error("remark0: base class not covered (need 6 mod 10, 5 mod 20, or 1 mod 20)");
}

} // namespace tetra
