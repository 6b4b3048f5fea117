#include "hbim/exponent_solver.hpp"

#include "hbim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hbim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kAgreement = 1e-9;

ConstraintKind kind(Constraint c) { return ConstraintKind{c}; }

}  // namespace

std::string to_string(const ConstraintKind& c) {
    switch (c.tag) {
        case Constraint::flux_match_pt: return "flux_match_pt";
        case Constraint::heat_match_pt: return "heat_match_pt";
        case Constraint::heat_match_pf: return "heat_match_pf";
        case Constraint::surface_temp_match_pf: return "surface_temp_match_pf";
        case Constraint::hbi_depth_pt: return "hbi_depth_pt";
        case Constraint::hbi_depth_pf: return "hbi_depth_pf";
        case Constraint::veinik_pt: return "veinik_pt";
        case Constraint::veinik_pf: return "veinik_pf";
        case Constraint::mokrushin_midpoint: return "mokrushin_midpoint";
        case Constraint::mokrushin_flux_group:
            return std::string("mokrushin_flux_group(") + (c.which == GroupKind::biot ? "Bi=" : "phi0=") +
                   std::to_string(c.group) + ")";
    }
    return "unknown";
}

double depth_ratio(const ConstraintKind& kind, double n) {
    if (!(n > 1.0) || !std::isfinite(n)) throw DomainError("depth_ratio: n must be finite and > 1");
    switch (kind.tag) {
        case Constraint::flux_match_pt: return n * kSqrtPi;
        case Constraint::heat_match_pt: return 2.0 * (n + 1.0) / kSqrtPi;
        case Constraint::surface_temp_match_pf: return 2.0 * n / kSqrtPi;
        case Constraint::hbi_depth_pt:
        case Constraint::veinik_pt: return std::sqrt(2.0 * n * (n + 1.0));
        case Constraint::hbi_depth_pf:
        case Constraint::heat_match_pf:
        case Constraint::veinik_pf: return std::sqrt(n * (n + 1.0));
        case Constraint::mokrushin_midpoint: return std::sqrt(8.0 * n * (n + 1.0));
        case Constraint::mokrushin_flux_group:
            if (!(kind.group > 0.0)) throw DomainError("depth_ratio: group must be > 0");
            return std::sqrt(8.0 * n * (n + 1.0) * kind.group);
    }
    throw DomainError("depth_ratio: unknown constraint");
}

ExponentSolution solve_exponent(const ConstraintKind& c1, const ConstraintKind& c2, const numerics::Tolerance& tol) {
    if (c1 == c2) throw DomainError("solve_exponent: constraints must differ");
    auto gap = [&](double n) { return depth_ratio(c1, n) - depth_ratio(c2, n); };
    double n = 0.0;
    try {
        n = numerics::find_root(gap, kExponentLo, kExponentHi, tol);
    } catch (const BracketError&) {
        throw NoSolutionError("solve_exponent: " + to_string(c1) + " and " + to_string(c2) +
                              " do not cross on the exponent bracket");
    }
    return ExponentSolution{n, depth_ratio(c1, n), std::abs(gap(n)), {c1, c2}};
}

double closed_form_exponent(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::pt:
        case ProblemClass::sphere: return 2.0 / (kPi - 2.0);
        case ProblemClass::pf: return kPi / (4.0 - kPi);
        case ProblemClass::overspecified: break;
    }
    throw DomainError("closed_form_exponent: the over-specified exponent is time dependent (n = phi delta)");
}

std::pair<ConstraintKind, ConstraintKind> canonical_pair(ProblemClass cls) {
    switch (cls) {
        case ProblemClass::pt:
        case ProblemClass::sphere: return {kind(Constraint::flux_match_pt), kind(Constraint::heat_match_pt)};
        case ProblemClass::pf: return {kind(Constraint::surface_temp_match_pf), kind(Constraint::hbi_depth_pf)};
        case ProblemClass::overspecified: break;
    }
    throw DomainError("canonical_pair: the over-specified problem needs no extra constraint");
}

ExponentSolution solve_problem(const BoundaryProblem& problem, const Medium&) {
    validate(problem);
    const auto [c1, c2] = canonical_pair(problem_class(problem));
    return solve_exponent(c1, c2);
}

ScalingEstimate scaling_estimate(double depth_ratio, double group, double p, ScalingPattern pattern) {
    if (!(depth_ratio > 0.0) || !(group > 0.0) || !(p > 0.0)) {
        throw DomainError("scaling_estimate: depth_ratio, group and p must be > 0");
    }
    const double divisor = pattern == ScalingPattern::veinik ? std::numbers::sqrt2 : 2.0 * std::numbers::sqrt2;
    return ScalingEstimate{p * depth_ratio / divisor / std::sqrt(group), p, group};
}

std::vector<PairOutcome> consistency_report(ProblemClass cls) {
    using C = Constraint;
    std::vector<std::pair<ConstraintKind, ConstraintKind>> pairs;
    switch (cls) {
        case ProblemClass::pt:
        case ProblemClass::sphere:
            pairs = {{kind(C::flux_match_pt), kind(C::heat_match_pt)},
                     {kind(C::flux_match_pt), kind(C::hbi_depth_pt)},
                     {kind(C::heat_match_pt), kind(C::hbi_depth_pt)},
                     {kind(C::flux_match_pt), kind(C::veinik_pt)},
                     {kind(C::mokrushin_midpoint), kind(C::flux_match_pt)}};
            break;
        case ProblemClass::pf:
            pairs = {{kind(C::surface_temp_match_pf), kind(C::hbi_depth_pf)},
                     {kind(C::surface_temp_match_pf), kind(C::heat_match_pf)},
                     {kind(C::surface_temp_match_pf), kind(C::veinik_pf)},
                     {kind(C::mokrushin_midpoint), kind(C::surface_temp_match_pf)}};
            break;
        case ProblemClass::overspecified: return {};
    }

    const double reference = closed_form_exponent(cls);
    std::vector<PairOutcome> out;
    out.reserve(pairs.size());
    for (const auto& pr : pairs) {
        PairOutcome row;
        row.pair = pr;
        try {
            const ExponentSolution s = solve_exponent(pr.first, pr.second);
            row.n = s.n;
            row.depth_ratio = s.depth_ratio;
            row.residual = s.residual;
            row.agrees = std::abs(s.n - reference) <= kAgreement;
            row.note = row.agrees ? "agrees with the class exponent" : "distinct crossing";
        } catch (const NoSolutionError&) {
            // Report the closest approach on the bracket as context.
            const double lo = depth_ratio(pr.first, kExponentLo) - depth_ratio(pr.second, kExponentLo);
            const double hi = depth_ratio(pr.first, kExponentHi) - depth_ratio(pr.second, kExponentHi);
            row.residual = std::min(std::abs(lo), std::abs(hi));
            row.note = "no crossing on the exponent bracket";
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace hbim
