#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "entring/invariants.hpp"
#include "entring/parallel.hpp"
#include "entring/positivity.hpp"
#include "entring/rng.hpp"
#include "entring/states.hpp"

namespace entring {

/// Haar-distributed special unitary: Ginibre matrix, QR, diagonal phases of
/// R folded into Q (the convention that makes QR Haar-unbiased), then a
/// global phase dividing out the principal d-th root of det. Conjugation is
/// phase-blind, so the root branch does not matter downstream.
inline Eigen::MatrixXcd haar_su(int d, Rng& rng) {
    if (d < 2) throw std::domain_error("haar_su: dimension must be >= 2");
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR();
    for (int j = 0; j < d; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        q.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
    }
    const Complex det = q.determinant();
    return q / std::pow(det, 1.0 / d);
}

inline Eigen::MatrixXcd haar_su(int d, std::uint64_t seed) {
    Rng rng(seed);
    return haar_su(d, rng);
}

inline Eigen::MatrixXcd adjoint_action(const Eigen::MatrixXcd& rho,
                                       const Eigen::MatrixXcd& u) {
    if (rho.rows() != u.rows() || rho.cols() != u.cols() || u.rows() != u.cols()) {
        throw std::invalid_argument("adjoint_action: dimension mismatch");
    }
    return u * rho * u.adjoint();
}

inline Eigen::MatrixXcd local_unitary(const Eigen::MatrixXcd& ua,
                                      const Eigen::MatrixXcd& ub) {
    if (ua.rows() != 2 || ua.cols() != 2 || ub.rows() != 2 || ub.cols() != 2) {
        throw std::invalid_argument("local_unitary: expected two 2x2 matrices");
    }
    return kron(ua, ub);
}

/// The SO(3) rotations induced on the two local Bloch vectors and the
/// block-diagonal 15x15 matrix acting on (a, b, vec C): a' = R_A a,
/// b' = R_B b, C' = R_A C R_B^T.
struct LinearizedAction {
    Eigen::Matrix3d ra;
    Eigen::Matrix3d rb;
    Eigen::Matrix<double, 15, 15> l;
};

inline Eigen::Matrix3d rotation_from_su2(const Eigen::Matrix2cd& u) {
    const auto& sigma = pauli_matrices();
    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i) {
        const Eigen::Matrix2cd conj = u * sigma[i] * u.adjoint();
        for (int j = 0; j < 3; ++j) r(j, i) = 0.5 * (sigma[j] * conj).trace().real();
    }
    return r;
}

inline LinearizedAction linearized_action(const Eigen::Matrix2cd& ua,
                                          const Eigen::Matrix2cd& ub) {
    LinearizedAction act;
    act.ra = rotation_from_su2(ua);
    act.rb = rotation_from_su2(ub);
    act.l.setZero();
    act.l.block<3, 3>(0, 0) = act.ra;
    act.l.block<3, 3>(3, 3) = act.rb;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            act.l.block<3, 3>(6 + 3 * i, 6 + 3 * j) = act.ra(i, j) * act.rb;
    return act;
}

inline Eigen::Matrix<double, 15, 1> apply_linearized(const LinearizedAction& act,
                                                     const FanoForm& f) {
    Eigen::Matrix<double, 15, 1> v;
    v.segment<3>(0) = f.a;
    v.segment<3>(3) = f.b;
    for (int i = 0; i < 3; ++i) v.segment<3>(6 + 3 * i) = f.C.row(i).transpose();
    return act.l * v;
}

/// All scalar quantities the invariance harness tracks: the 20 invariants,
/// K1..K10, J1..J15, the Casimirs, and S1..S4 (52 in total).
inline const std::vector<std::string>& tracked_quantity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& row : invariant_table()) n.push_back(row.name);
        for (int i = 1; i <= 10; ++i) n.push_back("K" + std::to_string(i));
        for (int i = 1; i <= 15; ++i) n.push_back("J" + std::to_string(i));
        n.insert(n.end(), {"C2", "C3", "C4", "S1", "S2", "S3", "S4"});
        return n;
    }();
    return names;
}

inline Eigen::VectorXd tracked_quantities(const Eigen::MatrixXcd& rho) {
    const LocalInvariants inv = evaluate_all(fano_decompose(rho));
    const CasimirTriple cas = casimirs_of_state(rho);
    const BasisValues bv = basis_values(inv, cas);
    const CharPolyCoeffs coeffs = char_poly_coeffs(rho);
    Eigen::VectorXd q(52);
    int at = 0;
    for (const auto& row : invariant_table()) q(at++) = inv.*(row.field);
    for (double k : bv.k) q(at++) = k;
    for (double j : bv.j) q(at++) = j;
    q(at++) = cas.c2;
    q(at++) = cas.c3;
    q(at++) = cas.c4;
    for (int k = 0; k < 4; ++k) q(at++) = coeffs.s(k);
    return q;
}

enum class ActionKind { local, global };

struct InvarianceReport {
    std::vector<std::string> names;
    Eigen::VectorXd max_rel_deviation;  // per quantity, over all trials
    double overall = 0.0;
};

/// Conjugates rho by `trials` Haar-random unitaries (SU(2) pairs for local,
/// SU(4) for global) and reports the worst relative drift of each tracked
/// quantity, |q' - q| / max(1, |q|). Trial i depends only on (seed, i).
inline InvarianceReport invariance_report(const Eigen::MatrixXcd& rho, int trials,
                                          std::uint64_t seed,
                                          ActionKind kind = ActionKind::local) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("invariance_report: expected a 4x4 state");
    }
    const Eigen::VectorXd base = tracked_quantities(rho);
    Eigen::MatrixXd dev(trials, base.size());
    parallel_for_index(static_cast<std::size_t>(trials), [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        Eigen::MatrixXcd u;
        if (kind == ActionKind::local) {
            const Eigen::MatrixXcd ua = haar_su(2, rng);
            const Eigen::MatrixXcd ub = haar_su(2, rng);
            u = local_unitary(ua, ub);
        } else {
            u = haar_su(4, rng);
        }
        const Eigen::VectorXd moved = tracked_quantities(adjoint_action(rho, u));
        for (Eigen::Index k = 0; k < base.size(); ++k) {
            dev(i, k) = std::abs(moved(k) - base(k)) / std::max(1.0, std::abs(base(k)));
        }
    });
    InvarianceReport report;
    report.names = tracked_quantity_names();
    if (trials > 0) {
        report.max_rel_deviation = dev.colwise().maxCoeff().transpose();
        report.overall = report.max_rel_deviation.maxCoeff();
    } else {
        report.max_rel_deviation = Eigen::VectorXd::Zero(base.size());
    }
    return report;
}

}  // namespace entring
