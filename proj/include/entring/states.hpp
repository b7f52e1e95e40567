#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>

#include "entring/rng.hpp"
#include "entring/su_basis.hpp"

namespace entring {

/// Two-qubit correlation data: rho = (I + a.sigma x I + I x b.sigma
/// + sum_ij C_ij sigma_i x sigma_j) / 4.
struct FanoForm {
    Eigen::Vector3d a = Eigen::Vector3d::Zero();
    Eigen::Vector3d b = Eigen::Vector3d::Zero();
    Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
};

inline const std::array<Eigen::Matrix2cd, 3>& pauli_matrices() {
    static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
        std::array<Eigen::Matrix2cd, 3> s;
        s[0] << 0, 1, 1, 0;
        s[1] << 0, Complex(0, -1), Complex(0, 1), 0;
        s[2] << 1, 0, 0, -1;
        return s;
    }();
    return sigma;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

inline FanoForm fano_decompose(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("fano_decompose: expected a 4x4 matrix");
    }
    const auto& sigma = pauli_matrices();
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
    FanoForm f;
    for (int i = 0; i < 3; ++i) {
        f.a(i) = (rho * kron(sigma[i], id2)).trace().real();
        f.b(i) = (rho * kron(id2, sigma[i])).trace().real();
        for (int j = 0; j < 3; ++j) {
            f.C(i, j) = (rho * kron(sigma[i], sigma[j])).trace().real();
        }
    }
    return f;
}

inline Eigen::MatrixXcd fano_compose(const FanoForm& f) {
    const auto& sigma = pauli_matrices();
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(4, 4);
    for (int i = 0; i < 3; ++i) {
        rho += f.a(i) * kron(sigma[i], id2);
        rho += f.b(i) * kron(id2, sigma[i]);
        for (int j = 0; j < 3; ++j) rho += f.C(i, j) * kron(sigma[i], sigma[j]);
    }
    return 0.25 * rho;
}

/// xi_a = sqrt(d / (2(d-1))) Tr(rho lambda_a). Defined on the unit-trace
/// affine slice only; from_bloch inverts it there.
inline BlochVector to_bloch(const Eigen::MatrixXcd& rho, const BasisSet& basis) {
    if (rho.rows() != basis.dim || rho.cols() != basis.dim) {
        throw std::invalid_argument("to_bloch: matrix does not match basis dimension");
    }
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) {
        throw std::invalid_argument("to_bloch: input must have unit trace");
    }
    const int d = basis.dim;
    const double scale = std::sqrt(d / (2.0 * (d - 1)));
    BlochVector v;
    v.dim = d;
    v.xi = Eigen::VectorXd(basis.count());
    for (int a = 0; a < basis.count(); ++a) {
        v.xi(a) = scale * (rho * basis.matrices[a]).trace().real();
    }
    return v;
}

/// rho = (1/d)(I + sqrt(d(d-1)/2) xi . lambda), the inverse of to_bloch.
inline Eigen::MatrixXcd from_bloch(const BlochVector& v, const BasisSet& basis) {
    if (v.dim != basis.dim || v.xi.size() != basis.count()) {
        throw std::invalid_argument("from_bloch: vector does not match basis dimension");
    }
    const int d = basis.dim;
    const double scale = std::sqrt(d * (d - 1) / 2.0);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(d, d);
    for (int a = 0; a < basis.count(); ++a) rho += scale * v.xi(a) * basis.matrices[a];
    return rho / static_cast<double>(d);
}

/// Product-Pauli basis of su(4), ordered (sigma_i x I, I x sigma_j,
/// sigma_i x sigma_j row-major), each divided by sqrt(2) so that
/// Tr(tau_a tau_b) = 2 delta_ab. Bloch coordinates in this basis are the
/// Fano data over sqrt(3), which keeps the two parameterizations aligned.
inline BasisSet tensor_pauli_basis() {
    const auto& sigma = pauli_matrices();
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
    const double s = 1.0 / std::sqrt(2.0);
    BasisSet basis;
    basis.dim = 4;
    basis.matrices.reserve(15);
    for (int i = 0; i < 3; ++i) basis.matrices.push_back(s * kron(sigma[i], id2));
    for (int j = 0; j < 3; ++j) basis.matrices.push_back(s * kron(id2, sigma[j]));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) basis.matrices.push_back(s * kron(sigma[i], sigma[j]));
    return basis;
}

inline BlochVector fano_to_bloch(const FanoForm& f) {
    const double s = 1.0 / std::sqrt(3.0);
    BlochVector v;
    v.dim = 4;
    v.xi = Eigen::VectorXd(15);
    for (int i = 0; i < 3; ++i) {
        v.xi(i) = s * f.a(i);
        v.xi(3 + i) = s * f.b(i);
        for (int j = 0; j < 3; ++j) v.xi(6 + 3 * i + j) = s * f.C(i, j);
    }
    return v;
}

inline FanoForm bloch_to_fano(const BlochVector& v) {
    if (v.dim != 4 || v.xi.size() != 15) {
        throw std::invalid_argument("bloch_to_fano: expected a two-qubit Bloch vector");
    }
    const double s = std::sqrt(3.0);
    FanoForm f;
    for (int i = 0; i < 3; ++i) {
        f.a(i) = s * v.xi(i);
        f.b(i) = s * v.xi(3 + i);
        for (int j = 0; j < 3; ++j) f.C(i, j) = s * v.xi(6 + 3 * i + j);
    }
    return f;
}

/// Trace over one tensor factor of a state on C^r x C^s
/// (row index = i*s + j with i on A and j on B).
enum class Subsystem { A, B };

inline Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, Subsystem keep, int r,
                                      int s) {
    if (r < 1 || s < 1 || rho.rows() != r * s || rho.cols() != r * s) {
        throw std::invalid_argument("partial_trace: dims do not factor the matrix size");
    }
    if (keep == Subsystem::A) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(r, r);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < s; ++j) out(i, k) += rho(i * s + j, k * s + j);
        return out;
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(s, s);
    for (int j = 0; j < s; ++j)
        for (int l = 0; l < s; ++l)
            for (int i = 0; i < r; ++i) out(j, l) += rho(i * s + j, i * s + l);
    return out;
}

inline Eigen::MatrixXcd maximally_mixed(int d) {
    if (d < 1) throw std::domain_error("maximally_mixed: dimension must be positive");
    return Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
}

/// The four Bell projectors, index 0..3 = (phi+, phi-, psi+, psi-).
inline Eigen::MatrixXcd bell_state(int which) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    const double s = 1.0 / std::sqrt(2.0);
    switch (which) {
        case 0: psi(0) = s; psi(3) = s; break;
        case 1: psi(0) = s; psi(3) = -s; break;
        case 2: psi(1) = s; psi(2) = s; break;
        case 3: psi(1) = s; psi(2) = -s; break;
        default: throw std::domain_error("bell_state: index must be 0..3");
    }
    return psi * psi.adjoint();
}

/// Werner family p * psi- + (1-p)/4 * I, a state for p in [-1/3, 1].
/// Fano data: a = b = 0, C = -p I.
inline Eigen::MatrixXcd werner_state(double p) {
    return p * bell_state(3) + (1.0 - p) * maximally_mixed(4);
}

/// Pure product state from unit Bloch vectors of the two qubits.
inline Eigen::MatrixXcd pure_product(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    const auto& sigma = pauli_matrices();
    Eigen::Matrix2cd ra = 0.5 * Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd rb = 0.5 * Eigen::Matrix2cd::Identity();
    for (int i = 0; i < 3; ++i) {
        ra += 0.5 * a(i) * sigma[i];
        rb += 0.5 * b(i) * sigma[i];
    }
    return kron(ra, rb);
}

/// Projector onto a Gaussian random direction, uniform on pure states.
inline Eigen::MatrixXcd sample_pure(int d, Rng& rng) {
    Eigen::VectorXcd psi(d);
    for (int i = 0; i < d; ++i) psi(i) = rng.complex_gaussian();
    psi /= psi.norm();
    return psi * psi.adjoint();
}

/// Hilbert-Schmidt measure: G G^dag normalized by its trace, G Ginibre.
inline Eigen::MatrixXcd sample_hilbert_schmidt(int d, Rng& rng) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
    Eigen::MatrixXcd w = g * g.adjoint();
    return w / w.trace().real();
}

/// Hermitian unit-trace sample with no positivity constraint, for probing
/// the region outside the state space.
inline Eigen::MatrixXcd sample_hermitian_unit_trace(int d, Rng& rng) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
    Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
    const double gap = (1.0 - h.trace().real()) / d;
    h += gap * Eigen::MatrixXcd::Identity(d, d);
    return h;
}

enum class StateKind { pure, hilbert_schmidt, hermitian_unit_trace };

inline Eigen::MatrixXcd random_state(int d, std::uint64_t seed, StateKind kind) {
    if (d < 2) throw std::domain_error("random_state: dimension must be >= 2");
    Rng rng(seed);
    switch (kind) {
        case StateKind::pure: return sample_pure(d, rng);
        case StateKind::hilbert_schmidt: return sample_hilbert_schmidt(d, rng);
        case StateKind::hermitian_unit_trace: return sample_hermitian_unit_trace(d, rng);
    }
    throw std::logic_error("random_state: unknown kind");
}

}  // namespace entring
