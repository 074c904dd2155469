#include <catch2/catch_amalgamated.hpp>

#include "tetra/arith.hpp"

#include <random>

using namespace tetra;

TEST_CASE("p-adic valuation", "[arith]") {
    CHECK(nu(5, 1000).order == 3);
    CHECK(nu(2, 1000).order == 3);
    CHECK(nu(5, 651250).order == 4);  // 807^2 + 1
    CHECK(nu(7, 49).order == 2);
    CHECK(nu(2, 7).order == 0);
    CHECK_THROWS_AS(nu(5, 0), domain_error);
    CHECK_THROWS_AS(nu(1, 10), domain_error);
}

TEST_CASE("valuation is exact: p^v | n, p^(v+1) does not", "[arith]") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        Nat n = Nat(rng() % 100000 + 1) * Nat(rng() % 1000 + 1);
        for (unsigned long p : {2UL, 5UL}) {
            unsigned long v = nu_order(p, n);
            CHECK(mpz_divisible_p(n.get_mpz_t(), pow_ui(p, v).get_mpz_t()));
            CHECK_FALSE(mpz_divisible_p(n.get_mpz_t(), pow_ui(p, v + 1).get_mpz_t()));
        }
    }
}

TEST_CASE("last nonzero digit", "[arith]") {
    CHECK(last_nonzero_digit(940030) == 3);
    CHECK(last_nonzero_digit(1000) == 1);
    CHECK(last_nonzero_digit(7) == 7);
    CHECK(last_nonzero_digit(Nat("500000000000000000000000")) == 5);
    CHECK_THROWS_AS(last_nonzero_digit(0), domain_error);
}

TEST_CASE("decimal length", "[arith]") {
    CHECK(decimal_length(7) == 1);
    CHECK(decimal_length(1000) == 4);
    CHECK(decimal_length(940030) == 6);
    CHECK(decimal_length(9) == 1);
    CHECK(decimal_length(10) == 2);
    for (unsigned long d = 1; d < 40; ++d) {
        CHECK(decimal_length(pow10(d)) == d + 1);
        CHECK(decimal_length(pow10(d) - 1) == d);
    }
    CHECK_THROWS_AS(decimal_length(0), domain_error);
}

TEST_CASE("digit sum", "[arith]") {
    CHECK(digit_sum(pow10(7) + pow10(3) + 1) == 3);
    CHECK(digit_sum(0) == 0);
    CHECK(digit_sum(999) == 27);
    // S(n) == n (mod 9)
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Nat n = Nat(rng()) * Nat(rng() % 100000);
        CHECK((digit_sum(n) - n) % 9 == 0);
    }
}

TEST_CASE("agreement depth", "[arith]") {
    CHECK(agreement_depth(12, 17, 5).depth == 0);
    CHECK(agreement_depth(1025, 3025, 4).depth == 3);
    CHECK_FALSE(agreement_depth(1025, 3025, 4).saturated);

    // the paper's height-2/height-3 residues of 807 share the suffix 7943
    Nat t2("549620396283318273888501737943");
    Nat t3("601692651466822940525632857943");
    auto d = agreement_depth(t2, t3, 30);
    CHECK(d.depth == 4);
    CHECK_FALSE(d.saturated);

    auto sat = agreement_depth(t2, t2, 30);
    CHECK(sat.depth == 30);
    CHECK(sat.saturated);

    // symmetry
    CHECK(agreement_depth(t3, t2, 30).depth == 4);
    CHECK_THROWS_AS(agreement_depth(1, 2, 0), domain_error);
}

TEST_CASE("lte_predict matches the spec examples", "[arith]") {
    CHECK(lte_predict(5, 1101, 1, 5).order == 3);
    CHECK(lte_predict(2, 1101, 1, 3).order == 2);
    CHECK(lte_predict(2, 1101, 1, 2).order == 3);
}

TEST_CASE("lte_predict rejects violated hypotheses", "[arith]") {
    CHECK_THROWS_AS(lte_predict(5, 10, 1, 3), domain_error);   // 5 | x
    CHECK_THROWS_AS(lte_predict(5, 1101, 5, 3), domain_error); // 5 | y
    CHECK_THROWS_AS(lte_predict(5, 1102, 1, 3), domain_error); // 5 does not divide x - y
    CHECK_THROWS_AS(lte_predict(2, 1101, 1, 0), domain_error); // c < 1
    CHECK_THROWS_AS(lte_predict(5, 1101, 1101, 2), domain_error); // x == y
}

TEST_CASE("lte_predict agrees with brute-force valuations", "[arith]") {
    // direct big-integer oracle: nu_p(x^c - y^c) by exact subtraction
    std::mt19937_64 rng(2024);
    int checked = 0;
    while (checked < 300) {
        unsigned long p = (rng() % 2) ? 5 : 2;
        Nat x = rng() % 1000000 + 2;
        Nat c = rng() % 30 + 1;
        unsigned long shift = rng() % 4 + 1;
        Nat y = x - pow_ui(p, shift) * Nat(rng() % 20 + 1);
        if (y < 1)
            continue;
        if (mpz_divisible_ui_p(x.get_mpz_t(), p) || mpz_divisible_ui_p(y.get_mpz_t(), p))
            continue;
        Nat diff = pow_ui(x, c.get_ui()) - pow_ui(y, c.get_ui());
        CHECK(lte_predict(p, x, y, c).order == nu_order(p, diff));
        ++checked;
    }
}
