#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// modulus has a prime factor other than 2 or 5
struct unsupported_modulus : domain_error {
    using domain_error::domain_error;
};

// congruence speed asked for a <= 1 or a multiple of 10
struct invalid_base : domain_error {
    using domain_error::domain_error;
};

// tower exceeds the caller-supplied digit cap
struct overflow_cap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// working precision hit the configured hard cap
struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// windowed policy hit the height cap without a constant tail
struct non_stabilized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct fixture_missing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct fetch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tetra
