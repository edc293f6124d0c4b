#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthofit/errors.hpp"

namespace orthofit {

inline constexpr double euler_gamma = 0.577215664901532860606512090082;

/// Closed interval with finite endpoints, lo < hi.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
            throw std::domain_error("Interval: requires finite lo < hi");
    }

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

namespace detail {

inline void check_positive(double x, const char* who) {
    if (!(std::isfinite(x) && x > 0.0))
        throw std::domain_error(std::string(who) + ": argument must be positive and finite");
}

} // namespace detail

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
    detail::check_positive(x, "log_gamma");
    return std::lgamma(x);
}

/// Digamma function psi(x) = Gamma'(x)/Gamma(x), x > 0.
///
/// Upward recurrence shifts the argument above 10, then the asymptotic
/// expansion in 1/x^2 gives close to full double accuracy.
inline double digamma(double x) {
    detail::check_positive(x, "digamma");
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
    const double z = 1.0 / (x * x);
    double series = z * (1.0 / 12.0
                  - z * (1.0 / 120.0
                  - z * (1.0 / 252.0
                  - z * (1.0 / 240.0
                  - z * (1.0 / 132.0
                  - z * (691.0 / 32760.0
                  - z * (1.0 / 12.0)))))));
    return result + std::log(x) - 0.5 / x - series;
}

/// Trigamma function psi'(x), x > 0.
inline double trigamma(double x) {
    detail::check_positive(x, "trigamma");
    double result = 0.0;
    while (x < 10.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double z = 1.0 / (x * x);
    // psi'(x) ~ 1/x + 1/(2x^2) + sum B_{2k} / x^{2k+1}
    double series = (1.0
                  + z * (1.0 / 6.0
                  + z * (-1.0 / 30.0
                  + z * (1.0 / 42.0
                  + z * (-1.0 / 30.0
                  + z * (5.0 / 66.0
                  + z * (-691.0 / 2730.0
                  + z * (7.0 / 6.0)))))))) / x;
    return result + 0.5 * z + series;
}

/// Inverse of the digamma function: returns x > 0 with psi(x) = y.
inline double digamma_inv(double y) {
    if (!std::isfinite(y))
        throw std::domain_error("digamma_inv: non-finite argument");
    // Standard starting guess, then Newton with the trigamma derivative.
    double x = (y >= -2.22) ? std::exp(y) + 0.5 : -1.0 / (y + euler_gamma);
    for (int i = 0; i < 50; ++i) {
        const double step = (digamma(x) - y) / trigamma(x);
        double next = x - step;
        if (next <= 0.0) next = 0.5 * x;
        if (std::abs(next - x) <= 1e-14 * std::max(1.0, std::abs(next))) return next;
        x = next;
    }
    return x;
}

/// Regularized incomplete beta function I_x(a, b) via the standard
/// continued fraction (Lentz's method).
inline double incomplete_beta_reg(double a, double b, double x) {
    detail::check_positive(a, "incomplete_beta_reg");
    detail::check_positive(b, "incomplete_beta_reg");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    if (x > (a + 1.0) / (a + b + 2.0))
        return 1.0 - incomplete_beta_reg(b, a, 1.0 - x);

    const double ln_front = a * std::log(x) + b * std::log1p(-x)
                          + std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    const double tiny = 1e-300;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const double m2 = 2.0 * m;
        double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
        d = 1.0 + num * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
        d = 1.0 + num * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(ln_front) * h / a;
}

// ---------------------------------------------------------------------------
// Adaptive quadrature
// ---------------------------------------------------------------------------

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (nodes/weights on
// [-1, 1]; only nonnegative abscissae stored).
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double gk_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double gauss7_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double lo, hi;
    double value;
    double error;
};

struct SegmentWorse {
    bool operator()(const Segment& a, const Segment& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo > b.lo; // deterministic tie break
    }
};

template <class F>
Segment gauss_kronrod_15(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double halfw = 0.5 * (hi - lo);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - halfw * gk_nodes[i]);
        fv[14 - i] = f(center + halfw * gk_nodes[i]);
    }
    fv[7] = f(center);
    double kronrod = gk_weights[7] * fv[7];
    double gauss = gauss7_weights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += gk_weights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            gauss += gauss7_weights[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= halfw;
    gauss *= halfw;
    for (double v : fv)
        if (!std::isfinite(v))
            throw std::domain_error("adaptive quadrature: non-finite integrand value");
    return Segment{lo, hi, kronrod, std::abs(kronrod - gauss)};
}

template <class F>
double adaptive_gk(const F& f, double lo, double hi, double tol, int max_segments) {
    std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> queue;
    queue.push(gauss_kronrod_15(f, lo, hi));
    double total = queue.top().value;
    double total_err = queue.top().error;
    int segments = 1;
    while (total_err > tol && segments < max_segments) {
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi)) {
            // interval no longer splittable in double precision
            queue.push(Segment{worst.lo, worst.hi, worst.value, 0.0});
            total_err -= worst.error;
            continue;
        }
        const Segment left = gauss_kronrod_15(f, worst.lo, mid);
        const Segment right = gauss_kronrod_15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++segments;
    }
    if (total_err > tol)
        throw quadrature_error("adaptive quadrature: subdivision budget exhausted",
                               total, total_err);
    return total;
}

} // namespace detail

/// Integral of f over a finite interval, adaptively refined until the
/// estimated absolute error is below tol.
template <class F>
double adaptive_quadrature(const F& f, const Interval& domain, double tol,
                           int max_segments = 4000) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_quadrature: tol must be positive");
    return detail::adaptive_gk(f, domain.lo, domain.hi, tol, max_segments);
}

/// Integral of f over [lo, +inf), mapped to a finite interval through
/// x = lo + t/(1-t).
template <class F>
double adaptive_quadrature_half_line(const F& f, double lo, double tol,
                                     int max_segments = 4000) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_quadrature: tol must be positive");
    auto g = [&f, lo](double t) {
        const double u = 1.0 - t;
        const double x = lo + t / u;
        return f(x) / (u * u);
    };
    return detail::adaptive_gk(g, 0.0, 1.0, tol, max_segments);
}

/// Integral of f over the whole real line through x = t/(1-t^2); the
/// integrand only needs to decay polynomially for the transform to behave.
template <class F>
double adaptive_quadrature_real_line(const F& f, double tol, int max_segments = 4000) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_quadrature: tol must be positive");
    auto g = [&f](double t) {
        const double u = 1.0 - t * t;
        const double x = t / u;
        return f(x) * (1.0 + t * t) / (u * u);
    };
    return detail::adaptive_gk(g, -1.0, 1.0, tol, max_segments);
}

// ---------------------------------------------------------------------------
// One-dimensional maximization and finite differences
// ---------------------------------------------------------------------------

struct GoldenSectionResult {
    double argmax;
    double max;
};

/// Golden-section search for the maximum of a unimodal function on a
/// bracket.  If the maximum sits on the boundary the better endpoint is
/// returned.  Deterministic; at most 200 shrink steps.
template <class F>
GoldenSectionResult golden_section_max(const F& f, const Interval& bracket, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("golden_section_max: tol must be positive");
    constexpr double invphi = 0.6180339887498948482045868343656;
    double a = bracket.lo, b = bracket.hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    double best_x = (fc >= fd) ? c : d;
    double best_f = std::max(fc, fd);
    // boundary maxima: compare against the original endpoints
    const double fa = f(bracket.lo), fb = f(bracket.hi);
    if (fa > best_f) { best_x = bracket.lo; best_f = fa; }
    if (fb > best_f) { best_x = bracket.hi; best_f = fb; }
    return GoldenSectionResult{best_x, best_f};
}

/// Default central-difference step for coordinate i.
inline double finite_diff_step(double xi) {
    static const double cbrt_eps = std::cbrt(std::numeric_limits<double>::epsilon());
    return cbrt_eps * std::max(1.0, std::abs(xi));
}

/// Central-difference gradient of f at x.  h <= 0 selects the default
/// per-coordinate step eps^(1/3) * max(1, |x_i|).
template <class F>
std::vector<double> finite_diff_gradient(const F& f, std::vector<double> x, double h = 0.0) {
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double hi = (h > 0.0) ? h : finite_diff_step(x[i]);
        const double xi = x[i];
        x[i] = xi + hi;
        const double fp = f(x);
        x[i] = xi - hi;
        const double fm = f(x);
        x[i] = xi;
        grad[i] = (fp - fm) / (2.0 * hi);
    }
    return grad;
}

/// Central-difference partial derivative of a scalar function of one value.
template <class F>
double central_difference(const F& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace orthofit
