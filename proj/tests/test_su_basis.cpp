#include <catch2/catch_amalgamated.hpp>

#include "entring/positivity.hpp"
#include "entring/states.hpp"
#include "entring/su_basis.hpp"
#include "test_helpers.hpp"

using namespace entring;

TEST_CASE("gellmann_basis(2) is exactly the Pauli triple") {
    const BasisSet basis = gellmann_basis(2);
    REQUIRE(basis.count() == 3);
    const auto& sigma = pauli_matrices();
    for (int a = 0; a < 3; ++a) {
        REQUIRE((basis.matrices[a] - sigma[a]).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("basis matrices are Hermitian, traceless, and orthonormal for d=2..6") {
    for (int d = 2; d <= 6; ++d) {
        const BasisSet basis = gellmann_basis(d);
        REQUIRE(static_cast<int>(basis.matrices.size()) == d * d - 1);
        for (int a = 0; a < basis.count(); ++a) {
            const Eigen::MatrixXcd& m = basis.matrices[a];
            REQUIRE((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
            REQUIRE(std::abs(m.trace()) < 1e-15);
            for (int b = 0; b < basis.count(); ++b) {
                const double expected = a == b ? 2.0 : 0.0;
                REQUIRE(std::abs((m * basis.matrices[b]).trace().real() - expected) < 1e-12);
                REQUIRE(std::abs((m * basis.matrices[b]).trace().imag()) < 1e-12);
            }
        }
    }
}

TEST_CASE("gellmann_basis rejects d < 2") {
    REQUIRE_THROWS_AS(gellmann_basis(1), std::domain_error);
    REQUIRE_THROWS_AS(gellmann_basis(0), std::domain_error);
}

TEST_CASE("d=2 structure constants are the Levi-Civita symbol and zero d-tensor") {
    const StructureConstants sc = structure_constants(gellmann_basis(2));
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            for (int c = 0; c < 3; ++c) {
                REQUIRE(std::abs(sc.d(a, b, c)) < 1e-12);
                double eps = 0.0;
                if (a != b && b != c && a != c) {
                    eps = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
                }
                REQUIRE(std::abs(sc.f(a, b, c) - eps) < 1e-12);
            }
        }
    }
}

TEST_CASE("d=3 symmetric constants match hand values in this ordering") {
    // ordering: sym01, sym02, sym12, anti01, anti02, anti12, diag1, diag2;
    // index 0 is the standard lambda_1, index 7 the standard lambda_8
    const StructureConstants sc = structure_constants(gellmann_basis(3));
    REQUIRE(sc.d(0, 0, 7) == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-12));
    REQUIRE(sc.d(7, 7, 7) == Catch::Approx(-1.0 / std::sqrt(3.0)).margin(1e-12));
}

TEST_CASE("structure constants have the claimed index symmetries") {
    for (int d : {2, 3, 4}) {
        const StructureConstants sc = structure_constants(gellmann_basis(d));
        const int n = sc.count();
        Rng rng(99 + d);
        for (int trial = 0; trial < 200; ++trial) {
            const int a = static_cast<int>(rng.raw() % n);
            const int b = static_cast<int>(rng.raw() % n);
            const int c = static_cast<int>(rng.raw() % n);
            REQUIRE(sc.d(a, b, c) == sc.d(b, a, c));
            REQUIRE(sc.d(a, b, c) == sc.d(a, c, b));
            REQUIRE(sc.f(a, b, c) == -sc.f(b, a, c));
            REQUIRE(sc.f(a, b, c) == -sc.f(a, c, b));
            REQUIRE(sc.f(a, a, b) == 0.0);
        }
    }
}

TEST_CASE("algebra relation la lb = (2/d) dab I + (d+if) lc holds for d=2..4") {
    for (int d : {2, 3, 4}) {
        const BasisSet basis = gellmann_basis(d);
        const StructureConstants sc = structure_constants(basis);
        const int n = basis.count();
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(d, d);
                if (a == b) rhs += (2.0 / d) * Eigen::MatrixXcd::Identity(d, d);
                for (int c = 0; c < n; ++c) {
                    rhs += Complex(sc.d(a, b, c), sc.f(a, b, c)) * basis.matrices[c];
                }
                const Eigen::MatrixXcd lhs = basis.matrices[a] * basis.matrices[b];
                REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("vee product rejects d=2 and dimension mismatches") {
    const StructureConstants sc2 = structure_constants(gellmann_basis(2));
    BlochVector xi;
    xi.dim = 2;
    xi.xi = Eigen::Vector3d(0, 0, 1);
    REQUIRE_THROWS_AS(vee_product(xi, sc2), std::domain_error);

    const StructureConstants sc3 = structure_constants(gellmann_basis(3));
    REQUIRE_THROWS_AS(vee_product(xi, sc3), std::invalid_argument);
}

TEST_CASE("vee product is zero at zero and matches the d=3 diagonal value") {
    const StructureConstants sc = structure_constants(gellmann_basis(3));
    BlochVector zero;
    zero.dim = 3;
    zero.xi = Eigen::VectorXd::Zero(8);
    REQUIRE(vee_product(zero, sc).xi.norm() == 0.0);

    // unit vector along the last diagonal direction maps to its negative,
    // driven by d_{888} = -1/sqrt(3)
    BlochVector e8;
    e8.dim = 3;
    e8.xi = Eigen::VectorXd::Zero(8);
    e8.xi(7) = 1.0;
    const BlochVector v = vee_product(e8, sc);
    REQUIRE((v.xi + e8.xi).norm() < 1e-12);
}

TEST_CASE("Bell-state Bloch vector satisfies the pure-state equations") {
    const BasisSet basis = gellmann_basis(4);
    const StructureConstants sc = structure_constants(basis);
    const BlochVector xi = to_bloch(bell_state(0), basis);
    REQUIRE(xi.xi.squaredNorm() == Catch::Approx(1.0).margin(1e-12));
    const BlochVector v = vee_product(xi, sc);
    REQUIRE((v.xi - xi.xi).norm() < 1e-10);
}

TEST_CASE("random pure states satisfy xi.xi = 1 and xi v xi = xi for d=3..5") {
    for (int d : {3, 4, 5}) {
        const BasisSet basis = gellmann_basis(d);
        const StructureConstants sc = structure_constants(basis);
        Rng rng(1234 + d);
        for (int trial = 0; trial < 200; ++trial) {
            const BlochVector xi = to_bloch(sample_pure(d, rng), basis);
            REQUIRE(xi.xi.squaredNorm() == Catch::Approx(1.0).margin(1e-10));
            REQUIRE((vee_product(xi, sc).xi - xi.xi).norm() < 1e-10);
        }
    }
}
