#pragma once

#include <Eigen/Dense>
#include <array>

#include "entring/positivity.hpp"
#include "entring/states.hpp"

namespace entring {

/// The 20 independent local-unitary invariant polynomials in (a, b, C),
/// named c<stq> after their multi-degree: s powers of a, t of b, q of C.
struct LocalInvariants {
    double c002, c200, c020;          // degree 2
    double c003, c111;                // degree 3
    double c004, c202, c022, c112;    // degree 4
    double c113;                      // degree 5
    double c123, c204, c024, c213;    // degree 6
    double c214, c124;                // degree 7
    double c125, c215;                // degree 8
    double c306, c036;                // degree 9
};

/// Cofactor matrix, cof(C)_{ij} = d(det C)/dC_{ij}; rows are cyclic cross
/// products of the rows of C, no inverse needed so singular C is fine.
inline Eigen::Matrix3d cofactor_matrix(const Eigen::Matrix3d& c) {
    const Eigen::Vector3d r0 = c.row(0).transpose();
    const Eigen::Vector3d r1 = c.row(1).transpose();
    const Eigen::Vector3d r2 = c.row(2).transpose();
    Eigen::Matrix3d out;
    out.row(0) = r1.cross(r2).transpose();
    out.row(1) = r2.cross(r0).transpose();
    out.row(2) = r0.cross(r1).transpose();
    return out;
}

/// Closed matrix forms of all 20 invariants. Each collapses the defining
/// epsilon-tensor contraction; the raw index sums survive as a test oracle.
inline LocalInvariants evaluate_all(const FanoForm& f) {
    const Eigen::Vector3d& a = f.a;
    const Eigen::Vector3d& b = f.b;
    const Eigen::Matrix3d& c = f.C;
    const Eigen::Matrix3d g = c * c.transpose();   // A-side Gram
    const Eigen::Matrix3d h = c.transpose() * c;   // B-side Gram

    const Eigen::Vector3d ca = c.transpose() * a;  // pulls a to the B side
    const Eigen::Vector3d cb = c * b;              // pulls b to the A side
    const Eigen::Vector3d ga = g * a;
    const Eigen::Vector3d hb = h * b;

    LocalInvariants v{};
    v.c002 = h.trace();
    v.c200 = a.squaredNorm();
    v.c020 = b.squaredNorm();
    v.c003 = c.determinant();
    v.c111 = a.dot(cb);
    v.c004 = (h * h).trace();
    v.c202 = a.dot(ga);
    v.c022 = b.dot(hb);
    v.c112 = 2.0 * a.dot(cofactor_matrix(c) * b);
    v.c113 = a.dot(c * hb);
    v.c123 = b.dot(ca.cross(c.transpose() * cb));
    v.c204 = ga.squaredNorm();
    v.c024 = hb.squaredNorm();
    v.c213 = a.dot(cb.cross(ga));
    v.c214 = b.dot(ca.cross(c.transpose() * ga));
    v.c124 = a.dot(cb.cross(g * cb));
    v.c125 = b.dot(hb.cross(c.transpose() * ga));
    v.c215 = a.dot(ga.cross(g * cb));
    v.c306 = a.dot(ga.cross(g * ga));
    v.c036 = b.dot(hb.cross(h * hb));
    return v;
}

/// Primary (K) and secondary (J) invariants spanning the invariant ring.
/// J4..J7 are products of J1..J3 and add no new generator.
struct BasisValues {
    std::array<double, 10> k;  // K1..K10, K1 = 1
    std::array<double, 15> j;  // J1..J15
};

inline BasisValues basis_values(const LocalInvariants& inv, const CasimirTriple& cas) {
    BasisValues bv{};
    bv.k = {1.0,      cas.c2,   inv.c200, inv.c020, cas.c3,
            inv.c111, inv.c004, inv.c202, inv.c022, inv.c204 + inv.c024};
    const double j1 = cas.c4;
    const double j2 = inv.c113;
    const double j3 = inv.c204 - inv.c024;
    bv.j = {j1,       j2,       j3,       j1 * j2,  j1 * j3,
            j2 * j3,  j1 * j2 * j3,       inv.c123, inv.c213, inv.c214,
            inv.c124, inv.c215, inv.c125, inv.c306, inv.c036};
    return bv;
}

/// The Casimirs rewritten in Fano data:
///   C2 = (c200 + c020 + c002) / 3
///   C3 = c111 - c003
///   C4 = (1/6)(2(c200 c020 + c202 + c022 - c112) + c002^2 - c004)
inline CasimirTriple casimirs_from_fano(const LocalInvariants& inv) {
    CasimirTriple t;
    t.c2 = (inv.c200 + inv.c020 + inv.c002) / 3.0;
    t.c3 = inv.c111 - inv.c003;
    t.c4 = (2.0 * (inv.c200 * inv.c020 + inv.c202 + inv.c022 - inv.c112) +
            inv.c002 * inv.c002 - inv.c004) /
           6.0;
    return t;
}

/// Residuals between the Bloch-side Casimirs of the reconstructed state and
/// the Fano-side combinations above. Both sides are evaluated through fully
/// independent code paths.
inline Eigen::Vector3d casimir_identities_residual(const FanoForm& f) {
    const CasimirTriple bloch = casimirs_of_state(fano_compose(f));
    const CasimirTriple fano = casimirs_from_fano(evaluate_all(f));
    return {bloch.c2 - fano.c2, bloch.c3 - fano.c3, bloch.c4 - fano.c4};
}

/// Name, multi-degree and member pointer per invariant, in the canonical
/// field order; drives reports, serialization, and the homogeneity tests.
struct InvariantDescriptor {
    const char* name;
    int s, t, q;
    double LocalInvariants::*field;
};

inline const std::array<InvariantDescriptor, 20>& invariant_table() {
    static const std::array<InvariantDescriptor, 20> table = {{
        {"c002", 0, 0, 2, &LocalInvariants::c002},
        {"c200", 2, 0, 0, &LocalInvariants::c200},
        {"c020", 0, 2, 0, &LocalInvariants::c020},
        {"c003", 0, 0, 3, &LocalInvariants::c003},
        {"c111", 1, 1, 1, &LocalInvariants::c111},
        {"c004", 0, 0, 4, &LocalInvariants::c004},
        {"c202", 2, 0, 2, &LocalInvariants::c202},
        {"c022", 0, 2, 2, &LocalInvariants::c022},
        {"c112", 1, 1, 2, &LocalInvariants::c112},
        {"c113", 1, 1, 3, &LocalInvariants::c113},
        {"c123", 1, 2, 3, &LocalInvariants::c123},
        {"c204", 2, 0, 4, &LocalInvariants::c204},
        {"c024", 0, 2, 4, &LocalInvariants::c024},
        {"c213", 2, 1, 3, &LocalInvariants::c213},
        {"c214", 2, 1, 4, &LocalInvariants::c214},
        {"c124", 1, 2, 4, &LocalInvariants::c124},
        {"c125", 1, 2, 5, &LocalInvariants::c125},
        {"c215", 2, 1, 5, &LocalInvariants::c215},
        {"c306", 3, 0, 6, &LocalInvariants::c306},
        {"c036", 0, 3, 6, &LocalInvariants::c036},
    }};
    return table;
}

}  // namespace entring
