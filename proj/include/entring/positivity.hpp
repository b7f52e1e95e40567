#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "entring/parallel.hpp"
#include "entring/rng.hpp"
#include "entring/states.hpp"
#include "entring/su_basis.hpp"

namespace entring {

/// Signed coefficients of det(xI - rho) = x^n - S1 x^{n-1} + S2 x^{n-2} - ...
/// S_k is the k-th elementary symmetric polynomial of the eigenvalues and
/// equals the sum of principal k x k minors.
struct CharPolyCoeffs {
    int dim = 0;
    Eigen::VectorXd s;  // s(k-1) = S_k, k = 1..dim
};

struct CasimirTriple {
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
};

enum class PositivityClass { positive, boundary, non_positive };
enum class RegionClass { inside, boundary, outside };

/// Pure states and other rank-deficient matrices sit exactly on S_k = 0;
/// the band keeps them from misclassifying as violations.
inline constexpr double kBoundaryTolerance = 1e-10;

/// S_k from power traces via Newton's identities,
/// k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i with p_i = Tr(rho^i).
inline CharPolyCoeffs char_poly_coeffs(const Eigen::MatrixXcd& rho) {
    const int n = static_cast<int>(rho.rows());
    if (n < 1 || rho.cols() != n) {
        throw std::invalid_argument("char_poly_coeffs: expected a square matrix");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("char_poly_coeffs: input is not Hermitian");
    }
    std::vector<double> p(n + 1, 0.0);
    Eigen::MatrixXcd power = rho;
    p[1] = power.trace().real();
    for (int m = 2; m <= n; ++m) {
        power = power * rho;
        p[m] = power.trace().real();
    }
    std::vector<double> e(n + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        double sign = 1.0;
        for (int i = 1; i <= k; ++i) {
            acc += sign * e[k - i] * p[i];
            sign = -sign;
        }
        e[k] = acc / k;
    }
    CharPolyCoeffs out;
    out.dim = n;
    out.s = Eigen::VectorXd(n);
    for (int k = 1; k <= n; ++k) out.s(k - 1) = e[k];
    return out;
}

struct PositivityReport {
    PositivityClass classification = PositivityClass::positive;
    Eigen::VectorXd margins;  // margins(k-1) = S_k; nonnegativity of all is the criterion
};

/// rho >= 0 iff every S_k >= 0 (all roots of the characteristic polynomial
/// are real, and sign-definite coefficients bar negative ones).
inline PositivityReport positivity_check(const Eigen::MatrixXcd& rho) {
    const CharPolyCoeffs coeffs = char_poly_coeffs(rho);
    PositivityReport report;
    report.margins = coeffs.s;
    bool boundary = false;
    for (int k = 0; k < coeffs.dim; ++k) {
        const double m = coeffs.s(k);
        if (m < -kBoundaryTolerance) {
            report.classification = PositivityClass::non_positive;
            return report;
        }
        if (m <= kBoundaryTolerance) boundary = true;
    }
    report.classification = boundary ? PositivityClass::boundary : PositivityClass::positive;
    return report;
}

/// B_k = k! n^{k-1} S_k / ((n-1)(n-2)...(n-k+1)) for k = 2..n; physical
/// states give B_k in [0,1] and the maximally mixed state gives all ones.
/// Values are returned unclamped so violations stay visible.
inline Eigen::VectorXd normalized_bounds(const CharPolyCoeffs& coeffs) {
    const int n = coeffs.dim;
    if (n < 2) throw std::invalid_argument("normalized_bounds: need dim >= 2");
    Eigen::VectorXd out(n - 1);
    double factorial = 1.0;
    double n_power = 1.0;
    double falling = 1.0;
    for (int k = 2; k <= n; ++k) {
        factorial *= k;
        n_power *= n;
        falling *= n - k + 1;
        out(k - 2) = factorial * n_power * coeffs.s(k - 1) / falling;
    }
    return out;
}

/// (S2, S3, S4) directly from Bloch coordinates. Needs dim >= 4 because the
/// S4 expression carries 1/(n-3).
inline Eigen::Vector3d s_from_bloch(const BlochVector& xi, const StructureConstants& sc) {
    const int n = sc.dim();
    if (n < 4) throw std::domain_error("s_from_bloch: S4 requires dim >= 4");
    if (xi.dim != n) throw std::invalid_argument("s_from_bloch: dimension mismatch");
    const BlochVector v = vee_product(xi, sc);
    const double x2 = xi.xi.squaredNorm();
    const double vx = v.xi.dot(xi.xi);
    const double vv = v.xi.squaredNorm();
    const double nn = n;
    Eigen::Vector3d s;
    s(0) = (1.0 / 2.0) * ((nn - 1) / nn) * (1.0 - x2);
    s(1) = (1.0 / 6.0) * ((nn - 1) * (nn - 2) / (nn * nn)) * (1.0 - 3.0 * x2 + 2.0 * vx);
    s(2) = (1.0 / 24.0) * ((nn - 1) * (nn - 2) * (nn - 3) / (nn * nn * nn)) *
           (1.0 - 6.0 * x2 + 8.0 * vx + 3.0 * ((nn - 1) / (nn - 3)) * x2 * x2 -
            6.0 * ((nn - 2) / (nn - 3)) * vv);
    return s;
}

/// C2 = xi.xi, C3 = (xi v xi).xi, C4 = (xi v xi).(xi v xi), for su(4) only.
inline CasimirTriple casimirs(const BlochVector& xi, const StructureConstants& sc) {
    if (sc.dim() != 4 || xi.dim != 4) {
        throw std::domain_error("casimirs: defined for dim 4");
    }
    const BlochVector v = vee_product(xi, sc);
    CasimirTriple t;
    t.c2 = xi.xi.squaredNorm();
    t.c3 = v.xi.dot(xi.xi);
    t.c4 = v.xi.squaredNorm();
    return t;
}

inline Eigen::Vector3d s_from_casimirs(const CasimirTriple& t) {
    Eigen::Vector3d s;
    s(0) = (3.0 / 8.0) * (1.0 - t.c2);
    s(1) = (1.0 / 16.0) * (1.0 - 3.0 * t.c2 + 2.0 * t.c3);
    const double w = 1.0 - 3.0 * t.c2;
    s(2) = (1.0 / 256.0) * (w * w + 8.0 * t.c3 - 12.0 * t.c4);
    return s;
}

struct RegionReport {
    RegionClass classification = RegionClass::inside;
    // Lower/upper margins of the three double inequalities, in order:
    // C2, 1-C2, 3C2-2C3, 1-(3C2-2C3), (1-3C2)^2+8C3-12C4, 1-same.
    std::array<double, 6> margins{};
};

/// The positivity region in Casimir coordinates:
/// 0 <= C2 <= 1, 0 <= 3C2-2C3 <= 1, 0 <= (1-3C2)^2+8C3-12C4 <= 1.
inline RegionReport region_check(const CasimirTriple& t) {
    const double g1 = t.c2;
    const double g2 = 3.0 * t.c2 - 2.0 * t.c3;
    const double w = 1.0 - 3.0 * t.c2;
    const double g3 = w * w + 8.0 * t.c3 - 12.0 * t.c4;
    RegionReport report;
    report.margins = {g1, 1.0 - g1, g2, 1.0 - g2, g3, 1.0 - g3};
    bool boundary = false;
    for (double m : report.margins) {
        if (m < -kBoundaryTolerance) {
            report.classification = RegionClass::outside;
            return report;
        }
        if (m <= kBoundaryTolerance) boundary = true;
    }
    report.classification = boundary ? RegionClass::boundary : RegionClass::inside;
    return report;
}

/// Shared su(4) basis and structure constants for two-qubit work.
inline const BasisSet& su4_basis() {
    static const BasisSet basis = gellmann_basis(4);
    return basis;
}

inline const StructureConstants& su4_structure() {
    static const StructureConstants sc = structure_constants(su4_basis());
    return sc;
}

inline CasimirTriple casimirs_of_state(const Eigen::MatrixXcd& rho) {
    return casimirs(to_bloch(rho, su4_basis()), su4_structure());
}

struct RegionSampleRow {
    double c2, c3, c4, s2, s3, s4;
    int inside;  // 1 unless the triple violates an inequality beyond tolerance
};

/// Casimir/coefficient table over seeded random states; row i depends only
/// on (seed, i), so the output is identical however many workers run.
inline std::vector<RegionSampleRow> region_sample(
    std::size_t n, std::uint64_t seed, StateKind kind = StateKind::hilbert_schmidt) {
    std::vector<RegionSampleRow> rows(n);
    parallel_for_index(n, [&](std::size_t i) {
        Rng rng(derive_seed(seed, i));
        const Eigen::MatrixXcd rho = kind == StateKind::hilbert_schmidt
                                         ? sample_hilbert_schmidt(4, rng)
                                     : kind == StateKind::pure
                                         ? sample_pure(4, rng)
                                         : sample_hermitian_unit_trace(4, rng);
        const CasimirTriple t = casimirs_of_state(rho);
        const Eigen::Vector3d s = s_from_casimirs(t);
        const RegionReport report = region_check(t);
        rows[i] = {t.c2, t.c3, t.c4, s(0), s(1), s(2),
                   report.classification == RegionClass::outside ? 0 : 1};
    });
    return rows;
}

}  // namespace entring
