#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "orthofit/numerics.hpp"

using namespace orthofit;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("Interval validates its endpoints") {
    CHECK_NOTHROW(Interval(0.0, 1.0));
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("log_gamma at known points") {
    CHECK(log_gamma(1.0) == Approx(0.0).margin(1e-14));
    CHECK(log_gamma(0.5) == Approx(std::log(std::sqrt(pi))).margin(1e-12));
    CHECK(log_gamma(10.0) == Approx(std::log(362880.0)).margin(1e-11));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("digamma at known points") {
    CHECK(digamma(1.0) == Approx(-euler_gamma).margin(1e-12));
    CHECK(digamma(2.0) == Approx(1.0 - euler_gamma).margin(1e-12));
    CHECK(digamma(0.5) == Approx(-euler_gamma - 2.0 * std::log(2.0)).margin(1e-12));
    CHECK_THROWS_AS(digamma(-0.5), std::domain_error);
}

TEST_CASE("trigamma at known points") {
    CHECK(trigamma(1.0) == Approx(pi * pi / 6.0).margin(1e-12));
    CHECK(trigamma(0.5) == Approx(pi * pi / 2.0).margin(1e-12));
    CHECK(trigamma(2.0) == Approx(pi * pi / 6.0 - 1.0).margin(1e-12));
    CHECK_THROWS_AS(trigamma(0.0), std::domain_error);
}

TEST_CASE("digamma satisfies its recurrence on a grid") {
    for (double x = 0.1; x <= 100.0; x += 0.7) {
        CHECK(digamma(x + 1.0) - digamma(x) == Approx(1.0 / x).margin(1e-10));
    }
}

TEST_CASE("trigamma satisfies its recurrence on a grid") {
    for (double x = 0.1; x <= 100.0; x += 0.7) {
        CHECK(trigamma(x + 1.0) - trigamma(x) == Approx(-1.0 / (x * x)).margin(1e-10));
    }
}

TEST_CASE("digamma_inv inverts digamma") {
    for (double x : {0.05, 0.3, 1.0, 2.5, 7.0, 42.0, 300.0}) {
        CHECK(digamma_inv(digamma(x)) == Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("incomplete beta basics") {
    CHECK(incomplete_beta_reg(1.0, 1.0, 0.37) == Approx(0.37).margin(1e-14));
    // symmetry: I_x(a,b) = 1 - I_{1-x}(b,a)
    CHECK(incomplete_beta_reg(2.5, 0.5, 0.3)
          == Approx(1.0 - incomplete_beta_reg(0.5, 2.5, 0.7)).margin(1e-13));
    CHECK(incomplete_beta_reg(3.0, 4.0, 0.0) == 0.0);
    CHECK(incomplete_beta_reg(3.0, 4.0, 1.0) == 1.0);
}

TEST_CASE("adaptive quadrature on finite intervals") {
    auto square = [](double x) { return x * x; };
    CHECK(adaptive_quadrature(square, Interval(0.0, 1.0), 1e-10)
          == Approx(1.0 / 3.0).margin(1e-10));
}

TEST_CASE("adaptive quadrature integrates the normal density over the line") {
    auto phi = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi); };
    CHECK(adaptive_quadrature_real_line(phi, 1e-10) == Approx(1.0).margin(1e-10));
}

TEST_CASE("adaptive quadrature recovers the Cauchy f2 value") {
    // location-scale information integral for the Cauchy case: the
    // integral piece z^2 (g'/g)^2 g evaluates to 3/2, and with the
    // integration-by-parts terms f2(1) = 3/2 - 2 + 1 = 1/2.
    auto g = [](double z) { return 1.0 / (pi * (1.0 + z * z)); };
    auto integrand = [&g](double z) {
        const double score_z = -2.0 * z / (1.0 + z * z); // d/dz log g
        return z * z * score_z * score_z * g(z);
    };
    const double piece = adaptive_quadrature_real_line(integrand, 1e-10);
    CHECK(piece == Approx(1.5).margin(1e-9));
    CHECK(piece - 2.0 + 1.0 == Approx(0.5).margin(1e-9));
}

TEST_CASE("adaptive quadrature of a probability density is one") {
    // exponential on the half line
    auto dens = [](double x) { return std::exp(-x); };
    CHECK(adaptive_quadrature_half_line(dens, 0.0, 1e-10) == Approx(1.0).margin(1e-10));
}

TEST_CASE("quadrature budget exhaustion reports the best estimate") {
    auto rough = [](double x) { return std::cos(500.0 * x * x); };
    try {
        adaptive_quadrature(rough, Interval(0.0, 6.0), 1e-14, 4);
        FAIL("expected quadrature_error");
    } catch (const quadrature_error& e) {
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.error_bound() > 1e-14);
    }
}

TEST_CASE("golden section on a concave quadratic") {
    auto f = [](double x) { return -(x - 2.0) * (x - 2.0); };
    auto r = golden_section_max(f, Interval(0.0, 5.0), 1e-8);
    CHECK(r.argmax == Approx(2.0).margin(1e-7));
    CHECK(r.max == Approx(0.0).margin(1e-12));
}

TEST_CASE("golden section on a non-smooth unimodal function") {
    auto f = [](double x) { return -std::abs(x); };
    auto r = golden_section_max(f, Interval(-1.0, 3.0), 1e-9);
    CHECK(r.argmax == Approx(0.0).margin(1e-8));
}

TEST_CASE("golden section returns the boundary for monotone functions") {
    auto inc = [](double x) { return x; };
    auto r = golden_section_max(inc, Interval(0.1, 30.0), 1e-9);
    CHECK(r.argmax == 30.0);
    auto dec = [](double x) { return -x; };
    auto r2 = golden_section_max(dec, Interval(0.1, 30.0), 1e-9);
    CHECK(r2.argmax == 0.1);
}

TEST_CASE("golden section argmax maps consistently under affine rescaling") {
    auto f = [](double x) { return -(x - 1.3) * (x - 1.3); };
    const double a = 2.5, b = -0.7;
    auto g = [&](double u) { return f(a * u + b); };
    auto rf = golden_section_max(f, Interval(-4.0, 4.0), 1e-10);
    auto rg = golden_section_max(g, Interval((-4.0 - b) / a, (4.0 - b) / a), 1e-10);
    CHECK(a * rg.argmax + b == Approx(rf.argmax).margin(1e-8));
}

TEST_CASE("finite difference gradient of a sum of squares") {
    auto f = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    };
    auto g = finite_diff_gradient(f, {1.0, 2.0}, 1e-5);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == Approx(2.0).margin(1e-8));
    CHECK(g[1] == Approx(4.0).margin(1e-8));
}

TEST_CASE("finite difference gradient of a constant is zero") {
    auto f = [](const std::vector<double>&) { return 4.2; };
    auto g = finite_diff_gradient(f, {0.3, -1.0, 5.0});
    for (double v : g) CHECK(v == 0.0);
}
