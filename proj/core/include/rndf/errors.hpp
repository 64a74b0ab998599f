#pragma once

#include <stdexcept>
#include <string>

namespace rndf {

// Requested accuracy would need more terms than cfg.max_terms allows.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of the operation (pole, h = 0, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A decimal input does not carry enough digits to certify the result.
class precision_exhausted : public std::runtime_error {
public:
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// Operation applied to a rational point of the wrong class (corner vs spiral).
class class_error : public std::invalid_argument {
public:
    explicit class_error(const std::string& what) : std::invalid_argument(what) {}
};

// Offset outside the validity radius of an asymptotic expansion.
class validity_error : public std::invalid_argument {
public:
    explicit validity_error(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside the admissible window/range of the operation.
class range_error : public std::out_of_range {
public:
    explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

// A probe or certificate could not resolve the answer at the available
// precision. Never a wrong answer, only an honest refusal.
class inconclusive_error : public std::runtime_error {
public:
    explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical machinery failed to converge (quadrature, fits).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Polyline too coarse for the requested box-counting scales.
class resolution_error : public std::runtime_error {
public:
    explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

// Every probe offset produced a zero increment (constant-curve pathology).
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rndf
