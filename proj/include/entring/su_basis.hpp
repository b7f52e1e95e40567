#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace entring {

using Complex = std::complex<double>;

/// Orthogonal Hermitian traceless basis of su(d), normalized to
/// Tr(lambda_a lambda_b) = 2 delta_ab.
struct BasisSet {
    int dim = 0;
    std::vector<Eigen::MatrixXcd> matrices;  // d^2 - 1 entries

    int count() const { return dim * dim - 1; }
};

/// Coordinates of a state in a BasisSet, xi_a proportional to <lambda_a>.
/// For physical states |xi| <= 1, with equality exactly on pure states.
struct BlochVector {
    int dim = 0;             // matrix dimension d
    Eigen::VectorXd xi;      // length d^2 - 1
};

/// Generalized Gell-Mann basis of su(d): symmetric off-diagonal pairs
/// (j<k, lexicographic), then antisymmetric pairs, then the d-1 diagonal
/// matrices. For d=2 this is exactly the Pauli triple (sigma1, sigma2, sigma3).
inline BasisSet gellmann_basis(int d) {
    if (d < 2) throw std::domain_error("gellmann_basis: dimension must be >= 2");
    BasisSet basis;
    basis.dim = d;
    basis.matrices.reserve(static_cast<std::size_t>(d) * d - 1);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.matrices.push_back(std::move(m));
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
            m(j, k) = Complex(0.0, -1.0);
            m(k, j) = Complex(0.0, 1.0);
            basis.matrices.push_back(std::move(m));
        }
    }
    for (int l = 1; l < d; ++l) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) m(j, j) = scale;
        m(l, l) = -scale * l;
        basis.matrices.push_back(std::move(m));
    }
    return basis;
}

/// Totally symmetric (d_abc) and antisymmetric (f_abc) structure constants,
/// d_abc = Tr({la,lb}lc)/4 and f_abc = -i Tr([la,lb]lc)/4, stored dense.
class StructureConstants {
public:
    StructureConstants(int dim, std::vector<double> d_sym, std::vector<double> f_anti)
        : dim_(dim), n_(dim * dim - 1), d_sym_(std::move(d_sym)), f_anti_(std::move(f_anti)) {}

    int dim() const { return dim_; }
    int count() const { return n_; }

    double d(int a, int b, int c) const { return d_sym_[idx(a, b, c)]; }
    double f(int a, int b, int c) const { return f_anti_[idx(a, b, c)]; }

private:
    std::size_t idx(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
    }

    int dim_;
    int n_;
    std::vector<double> d_sym_;
    std::vector<double> f_anti_;
};

/// Computes both structure-constant tensors of a basis. Values are filled
/// from sorted index triples so the symmetry properties hold exactly; a
/// verification pass re-evaluates the trace formulas on every index order
/// and requires agreement to 1e-12.
inline StructureConstants structure_constants(const BasisSet& basis) {
    const int n = basis.count();
    const int d = basis.dim;
    std::vector<double> dsym(static_cast<std::size_t>(n) * n * n, 0.0);
    std::vector<double> fant(static_cast<std::size_t>(n) * n * n, 0.0);
    auto at = [n](std::vector<double>& t, int a, int b, int c) -> double& {
        return t[(static_cast<std::size_t>(a) * n + b) * n + c];
    };

    // Tr(la lb lc) carries both tensors: d = Re/2, f = Im/2.
    std::vector<Eigen::MatrixXcd> products(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            products[static_cast<std::size_t>(a) * n + b] = basis.matrices[a] * basis.matrices[b];
    auto triple_trace = [&](int a, int b, int c) {
        return (products[static_cast<std::size_t>(a) * n + b] * basis.matrices[c]).trace();
    };

    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            for (int c = b; c < n; ++c) {
                const Complex t = triple_trace(a, b, c);
                const double dv = 0.5 * t.real();
                const double fv = 0.5 * t.imag();
                const int perms[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                                         {b, c, a}, {c, a, b}, {c, b, a}};
                const double signs[6] = {1, -1, -1, 1, 1, -1};
                for (int p = 0; p < 6; ++p) {
                    at(dsym, perms[p][0], perms[p][1], perms[p][2]) = dv;
                    at(fant, perms[p][0], perms[p][1], perms[p][2]) = signs[p] * fv;
                }
            }
        }
    }

    // Verify against the unsorted trace formulas and the algebra relation
    // la lb = (2/d) dab I + (d_abc + i f_abc) lc on a diagonal slice.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                const Complex t = triple_trace(a, b, c);
                if (std::abs(0.5 * t.real() - at(dsym, a, b, c)) > 1e-12 ||
                    std::abs(0.5 * t.imag() - at(fant, a, b, c)) > 1e-12) {
                    throw std::logic_error("structure_constants: symmetry verification failed");
                }
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        Eigen::MatrixXcd rhs = (2.0 / d) * Eigen::MatrixXcd::Identity(d, d);
        for (int c = 0; c < n; ++c)
            rhs += Complex(at(dsym, a, a, c), at(fant, a, a, c)) * basis.matrices[c];
        if ((products[static_cast<std::size_t>(a) * n + a] - rhs).cwiseAbs().maxCoeff() > 1e-12) {
            throw std::logic_error("structure_constants: algebra relation verification failed");
        }
    }

    return StructureConstants(d, std::move(dsym), std::move(fant));
}

/// Symmetric bilinear product on Bloch space,
/// (xi v xi)_k = sqrt(d(d-1)/2) / (d-2) * d_ijk xi_i xi_j.
/// Pure states are the solutions of xi.xi = 1, xi v xi = xi.
inline BlochVector vee_product(const BlochVector& xi, const StructureConstants& sc) {
    if (sc.dim() == 2) throw std::domain_error("vee-product undefined for d=2");
    if (xi.dim != sc.dim() || xi.xi.size() != sc.count()) {
        throw std::invalid_argument("vee_product: dimension mismatch");
    }
    const int n = sc.count();
    const double scale =
        std::sqrt(sc.dim() * (sc.dim() - 1) / 2.0) / static_cast<double>(sc.dim() - 2);
    BlochVector out;
    out.dim = xi.dim;
    out.xi = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double xi_i = xi.xi(i);
            if (xi_i == 0.0) continue;
            for (int j = 0; j < n; ++j) acc += sc.d(i, j, k) * xi_i * xi.xi(j);
        }
        out.xi(k) = scale * acc;
    }
    return out;
}

}  // namespace entring
