#pragma once

#include <stdexcept>

namespace nlfg {

// Contract violation: bad parameters, mismatched fields, malformed input.
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A desk-scale resource bound was exceeded (state space, census size, matrix order).
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Primitivity cannot be certified: factoring q^d - 1 is out of reach.
struct CertifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nlfg
