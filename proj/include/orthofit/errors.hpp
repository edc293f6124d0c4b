#pragma once

#include <stdexcept>
#include <string>

namespace orthofit {

/// Quadrature could not reach the requested tolerance within its
/// subdivision budget.  Carries the best estimate obtained so far and
/// the corresponding error bound.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// A linear system or inverse mapping is too close to singular to trust.
class conditioning_error : public std::runtime_error {
public:
    explicit conditioning_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input data violates a structural requirement (non-positive-definite
/// covariance sequence, degenerate series, ...).  `order()` identifies the
/// recursion order at which the failure surfaced, or -1 when not
/// applicable.
class validity_error : public std::runtime_error {
public:
    explicit validity_error(const std::string& what, int order = -1)
        : std::runtime_error(what), order_(order) {}

    int order() const noexcept { return order_; }

private:
    int order_;
};

} // namespace orthofit
