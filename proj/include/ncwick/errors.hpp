#pragma once

#include <stdexcept>
#include <string>

namespace ncwick {

// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// left_quotient(beta, alpha) called with beta not a prefix of alpha.
class not_a_prefix : public error {
public:
    using error::error;
};

// A word weight (or a weighted norm term) left the double range.
class weight_overflow : public error {
public:
    using error::error;
};

// A term violates the truncation policy in strict construction mode.
class truncation_violation : public error {
public:
    using error::error;
};

// Argument outside the mathematical domain of the operation.
class domain_error : public error {
public:
    using error::error;
};

// A letter-weight sum (or the monoid sum built from it) does not converge.
class divergent_sum : public error {
public:
    using error::error;
};

// The embedding is not a Hilbert-Schmidt contraction, so no second
// quantization constant exists.
class not_contractive : public error {
public:
    using error::error;
};

// |E[f]| is at or beyond radius/B2 for the declared power series.
class radius_violation : public error {
public:
    using error::error;
};

// Wick inverse requested for an element with E[f] = 0.
class not_invertible : public error {
public:
    using error::error;
};

// Matrix shapes incompatible with the requested operation.
class dimension_mismatch : public error {
public:
    using error::error;
};

// A stated precondition of the operation does not hold.
class precondition_failed : public error {
public:
    using error::error;
};

// A JSON document does not match the expected schema.
class schema_error : public error {
public:
    using error::error;
};

} // namespace ncwick
