#include "doctest.h"

#include "hbim/errors.hpp"
#include "hbim/exact_ref.hpp"
#include "hbim/exponent_solver.hpp"

#include <cmath>
#include <numbers>

using namespace hbim;

namespace {

const double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
const double kNpt = 2.0 / (kPi - 2.0);
const double kNpf = kPi / (4.0 - kPi);

ConstraintKind C(Constraint c) { return ConstraintKind{c}; }

}  // namespace

TEST_CASE("depth_ratio curves") {
    CHECK(depth_ratio(C(Constraint::flux_match_pt), 1.751938) == doctest::Approx(3.1054).epsilon(1e-4));
    CHECK(depth_ratio(C(Constraint::surface_temp_match_pf), 3.65979) == doctest::Approx(4.1297).epsilon(1e-4));
    CHECK(depth_ratio(C(Constraint::hbi_depth_pt), 2.0) == doctest::Approx(3.4641).epsilon(1e-4));
    CHECK(depth_ratio(C(Constraint::heat_match_pt), 3.0) == doctest::Approx(8.0 / kSqrtPi).epsilon(1e-15));
    CHECK(depth_ratio(C(Constraint::heat_match_pf), 3.0) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
    CHECK(depth_ratio(C(Constraint::mokrushin_midpoint), 2.0) == doctest::Approx(std::sqrt(48.0)).epsilon(1e-15));
    CHECK(depth_ratio(C(Constraint::veinik_pt), 2.0) == depth_ratio(C(Constraint::hbi_depth_pt), 2.0));
    CHECK(depth_ratio(C(Constraint::veinik_pf), 2.0) == depth_ratio(C(Constraint::hbi_depth_pf), 2.0));
    CHECK(depth_ratio({Constraint::mokrushin_flux_group, 4.0, GroupKind::biot}, 2.0) ==
          doctest::Approx(std::sqrt(8.0 * 6.0 * 4.0)).epsilon(1e-15));
    CHECK_THROWS_AS(depth_ratio(C(Constraint::flux_match_pt), 1.0), DomainError);

    SUBCASE("continuous and strictly increasing on (1, 100]") {
        const Constraint all[] = {Constraint::flux_match_pt,  Constraint::heat_match_pt,      Constraint::heat_match_pf,
                                  Constraint::surface_temp_match_pf, Constraint::hbi_depth_pt, Constraint::hbi_depth_pf,
                                  Constraint::veinik_pt,      Constraint::veinik_pf,          Constraint::mokrushin_midpoint,
                                  Constraint::mokrushin_flux_group};
        for (auto c : all) {
            double prev = depth_ratio(C(c), 1.0 + 1e-6);
            const double h = (99.0 - 1e-6) / 2000.0;
            for (int i = 1; i <= 2000; ++i) {
                const double n = 1.0 + 1e-6 + i * h;
                const double v = depth_ratio(C(c), n);
                CHECK(v > prev);
                // No curve is steeper than 3 per unit n, so steps stay bounded.
                CHECK(v - prev <= 3.0 * h);
                prev = v;
            }
        }
    }
}

TEST_CASE("solve_exponent") {
    const auto a = solve_exponent(C(Constraint::flux_match_pt), C(Constraint::heat_match_pt));
    CHECK(a.n == doctest::Approx(kNpt).epsilon(1e-12));
    CHECK(std::abs(a.n - 1.751938) < 1e-6);
    CHECK(a.depth_ratio == doctest::Approx(kNpt * kSqrtPi).epsilon(1e-12));
    CHECK(a.depth_ratio > 1.0);

    const auto b = solve_exponent(C(Constraint::surface_temp_match_pf), C(Constraint::hbi_depth_pf));
    CHECK(std::abs(b.n - 3.65979) < 1e-5);
    CHECK(b.n == doctest::Approx(kNpf).epsilon(1e-12));

    const auto c = solve_exponent(C(Constraint::flux_match_pt), C(Constraint::hbi_depth_pt));
    CHECK(std::abs(c.n - a.n) <= 1e-9);

    SUBCASE("symmetric in the pair and small residual") {
        const auto r = solve_exponent(C(Constraint::heat_match_pt), C(Constraint::flux_match_pt));
        CHECK(std::abs(r.n - a.n) <= 1e-12);
        for (const auto& s : {a, b, c, r}) {
            CHECK(std::abs(depth_ratio(s.pair.first, s.n) - depth_ratio(s.pair.second, s.n)) <= 1e-10);
            CHECK(s.residual <= 1e-10);
            CHECK(s.depth_ratio == depth_ratio(s.pair.first, s.n));
        }
    }

    CHECK_THROWS_AS(solve_exponent(C(Constraint::mokrushin_midpoint), C(Constraint::flux_match_pt)), NoSolutionError);
    CHECK_THROWS_AS(solve_exponent(C(Constraint::flux_match_pt), C(Constraint::flux_match_pt)), DomainError);
}

TEST_CASE("closed_form_exponent and solve_problem") {
    CHECK(std::abs(closed_form_exponent(ProblemClass::pt) - 1.7519388) <= 1e-6);
    CHECK(std::abs(closed_form_exponent(ProblemClass::pf) - 3.6597926) <= 1e-6);
    CHECK(closed_form_exponent(ProblemClass::pt) == kNpt);
    CHECK(closed_form_exponent(ProblemClass::sphere) == closed_form_exponent(ProblemClass::pt));
    CHECK_THROWS_AS(closed_form_exponent(ProblemClass::overspecified), DomainError);

    const auto m = Medium::unit();
    const auto pt = solve_problem(PtProblem{1.0, 0.0}, m);
    const auto sph = solve_problem(SpherePtProblem{1.0, 1.0, 0.0}, m);
    CHECK(pt.n == sph.n);
    CHECK(pt.depth_ratio == sph.depth_ratio);
    CHECK(std::abs(pt.n - closed_form_exponent(ProblemClass::pt)) <= 1e-12);
    CHECK(std::abs(solve_problem(PfProblem{1.0, 0.0}, m).n - closed_form_exponent(ProblemClass::pf)) <= 1e-12);
    CHECK_THROWS_AS(solve_problem(PtProblem{1.0, 1.0}, m), DomainError);
}

TEST_CASE("solutions are unchanged under rescaling of the inputs") {
    const auto base_pt = solve_problem(PtProblem{1.0, 0.0}, Medium::unit());
    const auto base_pf = solve_problem(PfProblem{1.0, 0.0}, Medium::unit());
    for (double s : {1e-3, 0.7, 3.0, 1e4}) {
        const auto m = Medium::from_properties(2.0 * s, 3.0, 5.0 / s);
        const auto pt = solve_problem(PtProblem{300.0 * s, 20.0}, m);
        const auto pf = solve_problem(PfProblem{-1e3 * s, 7.0}, m);
        CHECK(pt.n == base_pt.n);
        CHECK(pt.depth_ratio == base_pt.depth_ratio);
        CHECK(pf.n == base_pf.n);
        CHECK(pf.depth_ratio == base_pf.depth_ratio);
    }
}

TEST_CASE("solved PT exponent matches surface flux and accumulated heat") {
    const auto m = Medium::from_properties(1.8, 2.5, 0.9);
    const double Ts = 340.0, Tinf = 290.0, t = 12.0;
    const double n = solve_problem(PtProblem{Ts, Tinf}, m).n;
    const double ratio = depth_ratio(C(Constraint::flux_match_pt), n);
    const PowerLawProfile p(Tinf, Ts - Tinf, ratio * std::sqrt(m.diffusivity() * t), n);
    const double qa = surface_flux_approx(p, m.conductivity());
    const double qe = exact::pt_surface_flux(m, Ts, Tinf, t);
    CHECK(std::abs(qa - qe) <= 1e-9 * std::abs(qe));
    const double Qa = accumulated_heat_approx(p, m);
    const double Qe = exact::pt_accumulated_heat(m, Ts, Tinf, t);
    CHECK(std::abs(Qa - Qe) <= 1e-9 * std::abs(Qe));
}

TEST_CASE("scaling_estimate") {
    const auto v = scaling_estimate(3.1054, 1.0, 1.0);
    CHECK(v.n_estimate == doctest::Approx(2.196).epsilon(1e-3));
    CHECK(v.tuning_coefficient == 1.0);
    CHECK(v.group == 1.0);
    for (double n : {1.5, 2.0, 7.25}) {
        const auto e = scaling_estimate(2.0 * std::sqrt(2.0) * n, 1.0, 1.0, ScalingPattern::mokrushin);
        CHECK(e.n_estimate == doctest::Approx(n).epsilon(1e-15));
    }
    CHECK(scaling_estimate(4.0, 4.0, 2.0).n_estimate == doctest::Approx(4.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(scaling_estimate(-1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(scaling_estimate(1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("consistency_report") {
    const auto pt = consistency_report(ProblemClass::pt);
    int agreeing = 0;
    bool saw_no_crossing = false;
    for (const auto& row : pt) {
        if (row.n) {
            if (row.agrees) {
                ++agreeing;
                CHECK(std::abs(*row.n - kNpt) <= 1e-9);
            }
        } else {
            saw_no_crossing = true;
            CHECK(row.pair.first.tag == Constraint::mokrushin_midpoint);
            CHECK(row.residual > 0.0);
            CHECK_FALSE(row.note.empty());
        }
    }
    CHECK(agreeing >= 3);
    CHECK(saw_no_crossing);

    const auto pf = consistency_report(ProblemClass::pf);
    bool heat_route = false;
    for (const auto& row : pf) {
        if (row.pair.second.tag == Constraint::heat_match_pf) {
            heat_route = true;
            REQUIRE(row.n);
            CHECK(std::abs(*row.n - kNpf) <= 1e-9);
        }
    }
    CHECK(heat_route);
    CHECK(consistency_report(ProblemClass::overspecified).empty());

    const auto sph = consistency_report(ProblemClass::sphere);
    REQUIRE(sph.size() == pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) CHECK(sph[i].n == pt[i].n);
}

TEST_CASE("constraint names") {
    CHECK(to_string(C(Constraint::flux_match_pt)) != to_string(C(Constraint::heat_match_pt)));
    CHECK_FALSE(to_string({Constraint::mokrushin_flux_group, 2.0, GroupKind::biot}).empty());
}
