#include <catch2/catch_amalgamated.hpp>

#include "tetra/speed.hpp"

using namespace tetra;

TEST_CASE("807 worked example", "[speed]") {
    auto p = speed_profile(807, 8);
    CHECK(p.speeds == std::vector<unsigned long>{0, 4, 4, 4, 4, 3, 3, 3});
    CHECK(p.depths == std::vector<unsigned long>{0, 4, 8, 12, 16, 19, 22, 25});
    CHECK(p.stabilization_height == 6);
    CHECK(p.constant_speed == 3);

    CHECK(speed_at(807, 1) == 0);
    CHECK(speed_at(807, 2) == 4);
    CHECK(speed_at(807, 6) == 3);
    CHECK(constant_speed(807) == 3);
}

TEST_CASE("repunit-style bases 10^t - 1", "[speed]") {
    auto p9 = speed_profile(9, 6);
    CHECK(p9.speeds == std::vector<unsigned long>{1, 1, 1, 1, 1, 1});
    auto p99 = speed_profile(99, 8);
    CHECK(p99.speeds.back() == 2);
    CHECK(p99.stabilization_height == 1);
    CHECK(constant_speed(999) == 3);
}

TEST_CASE("invalid bases are rejected", "[speed]") {
    CHECK_THROWS_AS(speed_profile(10, 3), invalid_base);
    CHECK_THROWS_AS(speed_profile(1, 3), invalid_base);
    CHECK_THROWS_AS(speed_profile(0, 3), invalid_base);
    CHECK_THROWS_AS(constant_speed(1000), invalid_base);
}

TEST_CASE("policies agree where both run", "[speed]") {
    SpeedOptions guaranteed;
    guaranteed.policy = Policy::guaranteed;
    for (unsigned a : {2, 3, 5, 7, 9, 11, 14, 16, 21, 25, 26, 39, 99}) {
        auto g = stabilized_profile(a, guaranteed);
        auto w = stabilized_profile(a);
        INFO("a = " << a);
        CHECK(g.constant_speed == w.constant_speed);
        CHECK(g.constant_speed >= 1);
    }
}

TEST_CASE("guaranteed policy refuses bases past the cutoff", "[speed]") {
    SpeedOptions opt;
    opt.policy = Policy::guaranteed;
    opt.guaranteed_cutoff = 50;
    CHECK_THROWS_AS(stabilized_profile(807, opt), domain_error);
}

TEST_CASE("precision independence", "[speed]") {
    // profiles must be identical when recomputed at doubled precision
    for (unsigned a : {2, 7, 18, 47, 186, 807, 1999}) {
        auto p = speed_profile(a, 12);
        auto scan = tetra::detail::scan_depths(a, 12, p.precision_digits * 2);
        REQUIRE_FALSE(scan.saturated);
        CHECK(scan.depths == p.depths);
    }
}

TEST_CASE("depths eventually exactly linear", "[speed]") {
    for (unsigned a : {13, 47, 186, 807}) {
        auto p = stabilized_profile(a);
        REQUIRE(p.stabilization_height >= 1);
        for (std::size_t b = p.stabilization_height; b < p.depths.size(); ++b)
            CHECK(p.depths[b] - p.depths[b - 1] == p.constant_speed);
    }
}

TEST_CASE("shortcut classes", "[speed]") {
    CHECK(constant_speed_shortcut(100101) == 2);
    CHECK(constant_speed_shortcut(9999) == 4);
    CHECK_FALSE(constant_speed_shortcut(807).has_value());
    CHECK_FALSE(constant_speed_shortcut(1).has_value());
    CHECK_FALSE(constant_speed_shortcut(11).has_value());  // needs mod 100, not mod 10
    CHECK(constant_speed_shortcut(9) == 1);
    CHECK(constant_speed_shortcut(101) == 2);  // min(nu5(100), nu2(100))
    CHECK(constant_speed_shortcut(Nat("100000001")) == 8);
}

TEST_CASE("shortcut agrees with the definitional oracle", "[speed]") {
    for (unsigned a : {9, 99, 999, 9999, 101, 201, 301, 401, 501, 601, 1001, 2401,
                       1201, 100101, 10001}) {
        auto s = constant_speed_shortcut(a);
        REQUIRE(s.has_value());
        INFO("a = " << a);
        CHECK(*s == constant_speed(a));
    }
}

TEST_CASE("constant speed is strictly positive on a sample", "[speed]") {
    for (unsigned a = 2; a <= 60; ++a) {
        if (a % 10 == 0)
            continue;
        CHECK(constant_speed(a) >= 1);
    }
}
