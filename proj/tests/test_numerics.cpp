#include "doctest.h"

#include "hbim/errors.hpp"
#include "hbim/numerics.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hbim;
namespace nm = hbim::numerics;
using hbim::numerics::Tolerance;

TEST_CASE("erf: examples") {
    CHECK(nm::erf(0.0) == 0.0);
    CHECK(nm::erf(1.0) == doctest::Approx(0.8427007929).epsilon(1e-10));
    CHECK(nm::erf(-1.0) == -nm::erf(1.0));
    CHECK_THROWS_AS(nm::erf(std::nan("")), DomainError);
    CHECK_THROWS_AS(nm::erf(INFINITY), DomainError);
}

TEST_CASE("erf: within 1e-12 of the independent oracle on |x| <= 6") {
    double worst = 0.0;
    for (int i = -600; i <= 600; ++i) {
        const double x = i * 0.01;
        worst = std::max(worst, std::abs(nm::erf(x) - static_cast<double>(oracle::erf(x))));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("erfc: examples and tail accuracy") {
    CHECK(nm::erfc(0.0) == 1.0);
    CHECK(nm::erfc(1.0) == doctest::Approx(0.1572992071).epsilon(1e-10));
    CHECK(nm::erfc(6.0) == doctest::Approx(2.1519736713e-17).epsilon(1e-3));
    // The tail stays relatively accurate where 1 - erf would cancel.
    for (double x : {0.75, 1.5, 2.5, 4.0, 6.0}) {
        const double ref = static_cast<double>(oracle::erfc(x));
        CHECK(std::abs(nm::erfc(x) - ref) / ref < 1e-13);
    }
    CHECK(nm::erfc(-2.0) == doctest::Approx(2.0 - nm::erfc(2.0)));
    CHECK_THROWS_AS(nm::erfc(std::nan("")), DomainError);
}

TEST_CASE("erf + erfc = 1 for random x in [-6, 6]") {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        CHECK(std::abs(nm::erf(x) + nm::erfc(x) - 1.0) <= 1e-14);
    }
}

TEST_CASE("erf is odd and strictly increasing on a random grid") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    std::vector<double> xs(400);
    for (auto& x : xs) x = dist(rng);
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] > xs[i - 1]) CHECK(nm::erf(xs[i]) > nm::erf(xs[i - 1]));
        CHECK(nm::erf(-xs[i]) == -nm::erf(xs[i]));
        CHECK(std::abs(nm::erf(xs[i])) < 1.0);
    }
}

TEST_CASE("ierfc") {
    CHECK(nm::ierfc(0.0) == doctest::Approx(0.5641895835).epsilon(1e-10));
    const double expected = std::exp(-0.25) / std::sqrt(std::numbers::pi) - 0.5 * static_cast<double>(oracle::erfc(0.5));
    CHECK(nm::ierfc(0.5) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(nm::ierfc(10.0) < 1e-40);
    CHECK(nm::ierfc(10.0) >= 0.0);
    CHECK_THROWS_AS(nm::ierfc(-1e-3), DomainError);

    SUBCASE("derivative is -erfc") {
        const double h = 1e-5;
        for (double x = h; x <= 4.0; x += 0.05) {
            const double fd = (nm::ierfc(x + h) - nm::ierfc(x - h)) / (2.0 * h);
            CHECK(std::abs(fd + nm::erfc(x)) <= 1e-6);
        }
    }
}

TEST_CASE("integrate: examples") {
    CHECK(nm::integrate([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(nm::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-10));
    const double e66a = nm::integrate(
        [](double x) {
            const double d = std::pow(std::max(1.0 - 0.288 * x, 0.0), 2.0) - nm::erf(x);
            return d * d;
        },
        0.0, 3.46);
    CHECK(std::abs(e66a - 1.91332) / 1.91332 < 0.01);
    CHECK(nm::integrate([](double) { return 5.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("integrate: error estimate honours the tolerance") {
    const Tolerance tol{1e-9, 1e-9, 1};
    const auto r = nm::integrate_with_error([](double x) { return std::exp(-x * x); }, 0.0, 3.0, tol);
    CHECK(r.error_estimate <= std::max(tol.absolute, tol.relative * std::abs(r.value)));
    CHECK(r.value == doctest::Approx(0.5 * std::sqrt(std::numbers::pi) * std::erf(3.0)).epsilon(1e-11));
}

TEST_CASE("integrate is additive over random splits") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(0.0, 5.0);
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x) + x * x; };
    for (int i = 0; i < 50; ++i) {
        double a = dist(rng), b = dist(rng);
        if (a > b) std::swap(a, b);
        const double c = a + (b - a) * 0.37;
        const auto whole = nm::integrate_with_error(f, a, b);
        const auto left = nm::integrate_with_error(f, a, c);
        const auto right = nm::integrate_with_error(f, c, b);
        const double slack = whole.error_estimate + left.error_estimate + right.error_estimate + 1e-12;
        CHECK(std::abs(whole.value - left.value - right.value) <= 10.0 * slack);
    }
}

TEST_CASE("integrate: failure paths") {
    CHECK_THROWS_AS(nm::integrate([](double x) { return x; }, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(nm::integrate([](double) { return NAN; }, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(nm::integrate([](double x) { return x; }, 0.0, 1.0, {0.0, 1e-10, 1}), DomainError);

    // A jump cannot meet a tiny absolute tolerance; the best estimate survives.
    try {
        nm::integrate([](double x) { return x < 0.3 ? 0.0 : 1.0; }, 0.0, 1.0, {1e-15, 1e-15, 1});
        FAIL("expected non-convergence");
    } catch (const NonConvergenceError& e) {
        CHECK(e.best_estimate() == doctest::Approx(0.7).epsilon(1e-6));
    }
}

TEST_CASE("find_root: examples") {
    const double pi = std::numbers::pi;
    const double n = nm::find_root([&](double n) { return n * std::sqrt(pi) - 2.0 * (n + 1.0) / std::sqrt(pi); }, 1.0, 10.0);
    CHECK(n == doctest::Approx(2.0 / (pi - 2.0)).epsilon(1e-12));
    CHECK(n == doctest::Approx(1.751938).epsilon(1e-6));
    CHECK(nm::find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) == doctest::Approx(1.4142136).epsilon(1e-7));
    CHECK_THROWS_AS(nm::find_root([](double x) { return x * x + 1.0; }, 0.0, 2.0), BracketError);
}

TEST_CASE("find_root: bracket and determinism") {
    const Tolerance tol{1e-13, 1e-13, 400};
    auto g = [](double x) { return std::cos(x) - x; };
    const double r1 = nm::find_root(g, 0.0, 1.0, tol);
    const double r2 = nm::find_root(g, 0.0, 1.0, tol);
    CHECK(r1 == r2);
    CHECK(std::abs(g(r1)) <= 10.0 * tol.absolute);
    CHECK(nm::find_root([](double x) { return x - 1.0; }, 1.0, 3.0) == 1.0);
    CHECK_THROWS_AS(nm::find_root(g, 0.0, 1.0, {1e-300, 1e-12, 2}), NonConvergenceError);
    CHECK_THROWS_AS(nm::find_root(g, 1.0, 0.0), DomainError);
}

TEST_CASE("integrate_ode: examples") {
    CHECK(std::abs(nm::integrate_ode([](double, double y) { return y; }, 1.0, 0.0, 1.0, 1000) - std::numbers::e) <= 1e-6);
    const double delta = nm::integrate_ode([](double, double d) { return 1.0 * (1.0 + d); }, 0.0, 0.0, 0.5, 2000);
    CHECK(std::abs(delta - std::expm1(0.5)) <= 1e-8);
    CHECK(nm::integrate_ode([](double, double) { return 0.0; }, 7.0, 0.0, 3.0, 5) == 7.0);
}

TEST_CASE("integrate_ode: fourth-order convergence and failures") {
    auto rhs = [](double t, double y) { return -2.0 * t * y; };
    const double exact = std::exp(-1.0);
    const double e1 = std::abs(nm::integrate_ode(rhs, 1.0, 0.0, 1.0, 20) - exact);
    const double e2 = std::abs(nm::integrate_ode(rhs, 1.0, 0.0, 1.0, 40) - exact);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));

    CHECK_THROWS_AS(nm::integrate_ode([](double, double y) { return y * y; }, 1.0, 0.0, 2.0, 1000), DivergenceError);
    CHECK_THROWS_AS(nm::integrate_ode(rhs, 1.0, 0.0, 1.0, 0), DomainError);
    CHECK_THROWS_AS(nm::integrate_ode(rhs, 1.0, 1.0, 0.0, 10), DomainError);
}
