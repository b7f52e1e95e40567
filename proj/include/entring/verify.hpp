#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "entring/group_action.hpp"
#include "entring/hilbert.hpp"
#include "entring/invariants.hpp"
#include "entring/parallel.hpp"
#include "entring/positivity.hpp"
#include "entring/rng.hpp"
#include "entring/states.hpp"

namespace entring {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

}  // namespace detail

/// Eigenvalue positivity versus the sign test on all S_k, over a seeded
/// mixture of positive and indefinite Hermitian unit-trace matrices.
/// Samples inside the +-1e-10 band around either boundary are not counted.
inline CheckResult check_positivity_equivalence(std::uint64_t seed, int samples = 10000) {
    const auto start = std::chrono::steady_clock::now();
    std::atomic<int> mismatches{0};
    std::atomic<int> banded{0};
    parallel_for_index(static_cast<std::size_t>(samples), [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        const Eigen::MatrixXcd rho = (i % 2 == 0) ? sample_hilbert_schmidt(4, rng)
                                                  : sample_hermitian_unit_trace(4, rng);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
        const double min_eig = es.eigenvalues()(0);
        const CharPolyCoeffs coeffs = char_poly_coeffs(rho);
        double min_s = coeffs.s(0);
        for (int k = 1; k < coeffs.dim; ++k) min_s = std::min(min_s, coeffs.s(k));
        if (std::abs(min_eig) <= kBoundaryTolerance || std::abs(min_s) <= kBoundaryTolerance) {
            banded.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        if ((min_eig >= 0.0) != (min_s >= 0.0)) {
            mismatches.fetch_add(1, std::memory_order_relaxed);
        }
    });
    const double elapsed = detail::seconds_since(start);
    CheckResult r;
    r.name = "positivity-equivalence";
    r.pass = mismatches.load() == 0 && elapsed < 10.0;
    r.detail = std::to_string(samples) + " samples, " + std::to_string(mismatches.load()) +
               " mismatches, " + std::to_string(banded.load()) + " in tolerance band, " +
               detail::fmt(elapsed) + "s";
    return r;
}

/// The three double inequalities in Casimir coordinates: random physical
/// states never classify outside; the Bell projector sits on the boundary
/// with exactly three saturated margins; Werner p=-1/2 violates the third
/// inequality by exactly 1.6875.
inline CheckResult check_region_inequalities(std::uint64_t seed, int samples = 1000) {
    std::atomic<int> outside{0};
    parallel_for_index(static_cast<std::size_t>(samples), [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        const RegionReport rep = region_check(casimirs_of_state(sample_hilbert_schmidt(4, rng)));
        if (rep.classification == RegionClass::outside) {
            outside.fetch_add(1, std::memory_order_relaxed);
        }
    });

    const RegionReport bell = region_check(casimirs_of_state(bell_state(0)));
    int saturated = 0;
    for (double m : bell.margins) {
        if (std::abs(m) < kBoundaryTolerance) ++saturated;
    }
    const bool bell_ok = bell.classification == RegionClass::boundary && saturated == 3;

    const RegionReport werner = region_check(casimirs_of_state(werner_state(-0.5)));
    const bool werner_ok = werner.classification == RegionClass::outside &&
                           std::abs(werner.margins[4] + 1.6875) <= 1e-12;

    CheckResult r;
    r.name = "region-inequalities";
    r.pass = outside.load() == 0 && bell_ok && werner_ok;
    r.detail = std::to_string(samples) + " physical states, " + std::to_string(outside.load()) +
               " outside; Bell saturates " + std::to_string(saturated) +
               " margins; Werner(-1/2) third margin " + detail::fmt(werner.margins[4]);
    return r;
}

/// Bloch-side Casimirs against their Fano-side polynomial combinations.
inline CheckResult check_casimir_identities(std::uint64_t seed, int samples = 500) {
    std::vector<double> worst(samples, 0.0);
    parallel_for_index(static_cast<std::size_t>(samples), [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        const Eigen::Vector3d res =
            casimir_identities_residual(fano_decompose(sample_hermitian_unit_trace(4, rng)));
        worst[i] = res.cwiseAbs().maxCoeff();
    });
    double max_residual = 0.0;
    for (double w : worst) max_residual = std::max(max_residual, w);
    CheckResult r;
    r.name = "casimir-identities";
    r.pass = max_residual < 1e-11;
    r.detail = std::to_string(samples) + " states, max residual " + detail::fmt(max_residual);
    return r;
}

/// Every tracked quantity is preserved by Haar-random local pairs; a global
/// SU(4) conjugation moves c200 while leaving the spectral quantities put.
inline CheckResult check_local_invariance(std::uint64_t seed, int states = 20,
                                          int trials = 100) {
    double worst_local = 0.0;
    for (int s = 0; s < states; ++s) {
        Rng rng(derive_seed(seed, 1000 + s));
        const Eigen::MatrixXcd rho = (s % 2 == 0) ? sample_hilbert_schmidt(4, rng)
                                                  : sample_hermitian_unit_trace(4, rng);
        const InvarianceReport rep =
            invariance_report(rho, trials, derive_seed(seed, s), ActionKind::local);
        worst_local = std::max(worst_local, rep.overall);
    }

    Rng rng(derive_seed(seed, 2000));
    const Eigen::MatrixXcd generic = sample_hilbert_schmidt(4, rng);
    const InvarianceReport global_rep =
        invariance_report(generic, trials, derive_seed(seed, 2001), ActionKind::global);
    // quantity layout: 20 invariants, K1..K10, J1..J15, C2..C4, S1..S4
    const double c200_dev = global_rep.max_rel_deviation(1);
    double spectral_dev = 0.0;
    for (int k = 45; k < 52; ++k) {
        spectral_dev = std::max(spectral_dev, global_rep.max_rel_deviation(k));
    }

    CheckResult r;
    r.name = "local-invariance";
    r.pass = worst_local < 1e-10 && c200_dev > 1e-3 && spectral_dev < 1e-10;
    r.detail = std::to_string(states) + "x" + std::to_string(trials) +
               " local trials, max deviation " + detail::fmt(worst_local) +
               "; global witness moves c200 by " + detail::fmt(c200_dev) +
               " with spectral drift " + detail::fmt(spectral_dev);
    return r;
}

/// The 15x15 block rotation commutes with conjugation through the Fano map,
/// is orthogonal, and composes as a homomorphism.
inline CheckResult check_linearization(std::uint64_t seed, int trials = 100) {
    double worst_diagram = 0.0;
    double worst_ortho = 0.0;
    double worst_hom = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const Eigen::Matrix2cd ua = haar_su(2, rng);
        const Eigen::Matrix2cd ub = haar_su(2, rng);
        const Eigen::MatrixXcd rho = sample_hilbert_schmidt(4, rng);
        const LinearizedAction act = linearized_action(ua, ub);

        const FanoForm f = fano_decompose(rho);
        const Eigen::Matrix<double, 15, 1> lin = apply_linearized(act, f);
        const FanoForm moved = fano_decompose(adjoint_action(rho, local_unitary(ua, ub)));
        Eigen::Matrix<double, 15, 1> conj;
        conj.segment<3>(0) = moved.a;
        conj.segment<3>(3) = moved.b;
        for (int i = 0; i < 3; ++i) conj.segment<3>(6 + 3 * i) = moved.C.row(i).transpose();
        worst_diagram = std::max(worst_diagram, (lin - conj).cwiseAbs().maxCoeff());

        worst_ortho = std::max(
            worst_ortho, (act.l.transpose() * act.l - Eigen::Matrix<double, 15, 15>::Identity())
                             .cwiseAbs()
                             .maxCoeff());

        const Eigen::Matrix2cd va = haar_su(2, rng);
        const Eigen::Matrix2cd vb = haar_su(2, rng);
        const LinearizedAction second = linearized_action(va, vb);
        const LinearizedAction composed = linearized_action(ua * va, ub * vb);
        worst_hom = std::max(worst_hom,
                             (composed.l - act.l * second.l).cwiseAbs().maxCoeff());
    }
    CheckResult r;
    r.name = "linearization";
    r.pass = worst_diagram <= 1e-11 && worst_ortho <= 1e-10 && worst_hom <= 1e-10;
    r.detail = std::to_string(trials) + " trials, diagram " + detail::fmt(worst_diagram) +
               ", orthogonality " + detail::fmt(worst_ortho) + ", homomorphism " +
               detail::fmt(worst_hom);
    return r;
}

/// Exact series coefficients and the rank oracle agreeing at k = 1..6,
/// stable across two unrelated master seeds.
inline CheckResult check_molien_consistency(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const PowerSeries series = molien_expand(6);
    const std::vector<std::int64_t> expected = {1, 1, 4, 6, 16, 23, 52};
    const bool series_ok = series.coeffs == expected;

    const ConsistencyReport first = basis_consistency(6, seed);
    const ConsistencyReport second = basis_consistency(6, derive_seed(seed, 999));
    bool ranks_stable = true;
    for (int k = 0; k < 6; ++k) {
        ranks_stable =
            ranks_stable && first.checks[k].oracle_rank == second.checks[k].oracle_rank;
    }
    const double elapsed = detail::seconds_since(start);

    std::string ranks;
    for (const DegreeCheck& c : first.checks) {
        ranks += (ranks.empty() ? "" : ",") + std::to_string(c.oracle_rank);
    }
    CheckResult r;
    r.name = "molien-consistency";
    r.pass = series_ok && first.all_match && second.all_match && ranks_stable && elapsed < 30.0;
    r.detail = "d0..d6 exact: " + std::string(series_ok ? "yes" : "NO") + "; oracle ranks " +
               ranks + (first.all_match ? " match" : " MISMATCH") + ", two seeds " +
               (ranks_stable ? "agree" : "DISAGREE") + ", " + detail::fmt(elapsed) + "s";
    return r;
}

/// Scaling (a,b,C) -> (ta,ub,vC) multiplies each invariant by t^s u^t v^q.
inline CheckResult check_homogeneity(std::uint64_t seed, int trials = 100) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, t));
        const FanoForm f = fano_decompose(sample_hermitian_unit_trace(4, rng));
        const double ts = (rng.uniform() < 0.5 ? -1.0 : 1.0) * std::exp(rng.uniform() - 0.5);
        const double us = (rng.uniform() < 0.5 ? -1.0 : 1.0) * std::exp(rng.uniform() - 0.5);
        const double vs = (rng.uniform() < 0.5 ? -1.0 : 1.0) * std::exp(rng.uniform() - 0.5);
        FanoForm scaled;
        scaled.a = ts * f.a;
        scaled.b = us * f.b;
        scaled.C = vs * f.C;
        const LocalInvariants base = evaluate_all(f);
        const LocalInvariants moved = evaluate_all(scaled);
        for (const auto& row : invariant_table()) {
            const double predicted = std::pow(ts, row.s) * std::pow(us, row.t) *
                                     std::pow(vs, row.q) * (base.*(row.field));
            const double actual = moved.*(row.field);
            worst = std::max(worst, std::abs(actual - predicted) /
                                        std::max(1.0, std::abs(predicted)));
        }
    }
    CheckResult r;
    r.name = "homogeneity";
    r.pass = worst <= 1e-12;
    r.detail = std::to_string(trials) + " scaled pairs, max relative error " +
               detail::fmt(worst);
    return r;
}

/// Werner family: Casimirs are (p^2, p^3, p^4); the S4 sign flip at
/// p = -1/3 is found by bisection.
inline CheckResult check_werner_family(std::uint64_t /*seed*/ = 0) {
    double casimir_err = 0.0;
    for (double p : {-1.0 / 3.0, -0.2, 0.0, 0.3, 0.5, 0.9, 1.0}) {
        const CasimirTriple t = casimirs_of_state(werner_state(p));
        casimir_err = std::max({casimir_err, std::abs(t.c2 - p * p),
                                std::abs(t.c3 - p * p * p), std::abs(t.c4 - p * p * p * p)});
    }

    auto s4 = [](double p) { return char_poly_coeffs(werner_state(p)).s(3); };
    double lo = -0.45, hi = -0.25;
    const bool bracketed = s4(lo) < 0.0 && s4(hi) > 0.0;
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        (s4(mid) < 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    const bool flip_located = bracketed && std::abs(root + 1.0 / 3.0) <= 1e-8;
    const bool classes_flip =
        positivity_check(werner_state(root - 1e-6)).classification ==
            PositivityClass::non_positive &&
        positivity_check(werner_state(root + 1e-6)).classification == PositivityClass::positive;

    CheckResult r;
    r.name = "werner-family";
    r.pass = casimir_err <= 1e-12 && flip_located && classes_flip;
    r.detail = "Casimir error " + detail::fmt(casimir_err) + ", S4 root at p = " +
               detail::fmt(root) + (classes_flip ? ", classification flips" : ", NO flip");
    return r;
}

inline std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
    return {check_positivity_equivalence(derive_seed(seed, 101)),
            check_region_inequalities(derive_seed(seed, 102)),
            check_casimir_identities(derive_seed(seed, 103)),
            check_local_invariance(derive_seed(seed, 104)),
            check_linearization(derive_seed(seed, 105)),
            check_molien_consistency(derive_seed(seed, 106)),
            check_homogeneity(derive_seed(seed, 107)),
            check_werner_family(derive_seed(seed, 108))};
}

}  // namespace entring
