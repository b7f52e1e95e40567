#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>
#include <string>

#include "entring/invariants.hpp"
#include "entring/states.hpp"
#include "test_helpers.hpp"

using namespace entring;

namespace {

double eps(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0.0;
    return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

// Raw index-sum oracle. Every formula below spells out the defining
// contraction with explicit loops; the first slot of c pairs with a-side
// indices, the second with b-side indices.
LocalInvariants raw_evaluate(const FanoForm& f) {
    const Eigen::Vector3d& a = f.a;
    const Eigen::Vector3d& b = f.b;
    const Eigen::Matrix3d& c = f.C;
    LocalInvariants v{};

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.c002 += c(i, j) * c(i, j);
    for (int i = 0; i < 3; ++i) v.c200 += a(i) * a(i);
    for (int i = 0; i < 3; ++i) v.c020 += b(i) * b(i);

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int al = 0; al < 3; ++al)
                    for (int be = 0; be < 3; ++be)
                        for (int ga = 0; ga < 3; ++ga)
                            v.c003 += eps(i, j, k) * eps(al, be, ga) * c(i, al) * c(j, be) *
                                      c(k, ga) / 6.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.c111 += a(i) * c(i, j) * b(j);

    for (int i = 0; i < 3; ++i)
        for (int al = 0; al < 3; ++al)
            for (int j = 0; j < 3; ++j)
                for (int be = 0; be < 3; ++be)
                    v.c004 += c(i, al) * c(i, be) * c(j, al) * c(j, be);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int al = 0; al < 3; ++al) v.c202 += a(i) * a(j) * c(i, al) * c(j, al);
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int i = 0; i < 3; ++i) v.c022 += b(al) * b(be) * c(i, al) * c(i, be);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int al = 0; al < 3; ++al)
                    for (int be = 0; be < 3; ++be)
                        for (int ga = 0; ga < 3; ++ga)
                            v.c112 += eps(i, j, k) * eps(al, be, ga) * a(i) * b(al) *
                                      c(j, be) * c(k, ga);

    for (int i = 0; i < 3; ++i)
        for (int al = 0; al < 3; ++al)
            for (int j = 0; j < 3; ++j)
                for (int be = 0; be < 3; ++be)
                    v.c113 += a(i) * c(i, al) * c(j, al) * c(j, be) * b(be);

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int al = 0; al < 3; ++al)
                    for (int be = 0; be < 3; ++be)
                        for (int l = 0; l < 3; ++l)
                            v.c123 += eps(i, j, k) * b(i) * c(al, j) * a(al) * c(be, k) *
                                      c(be, l) * b(l);
    for (int i = 0; i < 3; ++i)
        for (int al = 0; al < 3; ++al)
            for (int j = 0; j < 3; ++j)
                for (int be = 0; be < 3; ++be)
                    for (int k = 0; k < 3; ++k)
                        v.c204 += a(i) * c(i, al) * c(j, al) * c(j, be) * c(k, be) * a(k);
    for (int i = 0; i < 3; ++i)
        for (int al = 0; al < 3; ++al)
            for (int j = 0; j < 3; ++j)
                for (int be = 0; be < 3; ++be)
                    for (int k = 0; k < 3; ++k)
                        v.c024 += b(i) * c(al, i) * c(al, j) * c(be, j) * c(be, k) * b(k);
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        for (int de = 0; de < 3; ++de)
                            v.c213 += eps(al, be, ga) * a(al) * c(be, i) * b(i) * c(ga, j) *
                                      c(de, j) * a(de);

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int al = 0; al < 3; ++al)
                    for (int be = 0; be < 3; ++be)
                        for (int l = 0; l < 3; ++l)
                            for (int ga = 0; ga < 3; ++ga)
                                v.c214 += eps(i, j, k) * b(i) * c(al, j) * a(al) * c(be, k) *
                                          c(be, l) * c(ga, l) * a(ga);
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga)
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k)
                        for (int de = 0; de < 3; ++de)
                            for (int l = 0; l < 3; ++l)
                                v.c124 += eps(al, be, ga) * a(al) * c(be, j) * b(j) *
                                          c(ga, k) * c(de, k) * c(de, l) * b(l);

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int al = 0; al < 3; ++al)
                    for (int l = 0; l < 3; ++l)
                        for (int be = 0; be < 3; ++be)
                            for (int m = 0; m < 3; ++m)
                                for (int ga = 0; ga < 3; ++ga)
                                    v.c125 += eps(i, j, k) * b(i) * c(al, j) * c(al, l) *
                                              b(l) * c(be, k) * c(be, m) * c(ga, m) * a(ga);
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga)
                for (int i = 0; i < 3; ++i)
                    for (int de = 0; de < 3; ++de)
                        for (int k = 0; k < 3; ++k)
                            for (int rh = 0; rh < 3; ++rh)
                                for (int l = 0; l < 3; ++l)
                                    v.c215 += eps(al, be, ga) * a(al) * c(be, i) * c(de, i) *
                                              a(de) * c(ga, k) * c(rh, k) * c(rh, l) * b(l);

    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga)
                for (int i = 0; i < 3; ++i)
                    for (int de = 0; de < 3; ++de)
                        for (int j = 0; j < 3; ++j)
                            for (int rh = 0; rh < 3; ++rh)
                                for (int k = 0; k < 3; ++k)
                                    for (int si = 0; si < 3; ++si)
                                        v.c306 += eps(al, be, ga) * a(al) * c(be, i) *
                                                  c(de, i) * a(de) * c(ga, j) * c(rh, j) *
                                                  c(rh, k) * c(si, k) * a(si);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int al = 0; al < 3; ++al)
                    for (int l = 0; l < 3; ++l)
                        for (int be = 0; be < 3; ++be)
                            for (int m = 0; m < 3; ++m)
                                for (int ga = 0; ga < 3; ++ga)
                                    for (int s = 0; s < 3; ++s)
                                        v.c036 += eps(i, j, k) * b(i) * c(al, j) * c(al, l) *
                                                  b(l) * c(be, k) * c(be, m) * c(ga, m) *
                                                  c(ga, s) * b(s);
    return v;
}

std::map<std::string, double> as_map(const LocalInvariants& v) {
    std::map<std::string, double> out;
    for (const auto& row : invariant_table()) out[row.name] = v.*(row.field);
    return out;
}

}  // namespace

TEST_CASE("matrix shortcuts reproduce the raw index sums on 100 random forms") {
    Rng rng(271828);
    for (int trial = 0; trial < 100; ++trial) {
        const FanoForm f = test::random_fano(rng);
        const LocalInvariants fast = evaluate_all(f);
        const LocalInvariants slow = raw_evaluate(f);
        for (const auto& row : invariant_table()) {
            const double expect = slow.*(row.field);
            const double got = fast.*(row.field);
            REQUIRE(std::abs(got - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("invariants of the Bell correlation data") {
    FanoForm bell;
    bell.C = Eigen::Vector3d(1, -1, 1).asDiagonal();
    const LocalInvariants v = evaluate_all(bell);
    REQUIRE(v.c002 == 3.0);
    REQUIRE(v.c003 == Catch::Approx(-1.0).margin(1e-15));
    REQUIRE(v.c004 == 3.0);
    for (const auto& [name, value] : as_map(v)) {
        if (name != "c002" && name != "c003" && name != "c004") {
            REQUIRE(std::abs(value) < 1e-15);
        }
    }
}

TEST_CASE("invariants of a pure product state along z") {
    FanoForm f;
    f.a = Eigen::Vector3d(0, 0, 1);
    f.b = Eigen::Vector3d(0, 0, 1);
    f.C = f.a * f.b.transpose();
    const auto values = as_map(evaluate_all(f));
    const std::set<std::string> ones = {"c200", "c020", "c002", "c111", "c202",
                                        "c022", "c004", "c113", "c204", "c024"};
    for (const auto& [name, value] : values) {
        if (ones.count(name)) {
            REQUIRE(value == Catch::Approx(1.0).margin(1e-15));
        } else {
            REQUIRE(std::abs(value) < 1e-15);
        }
    }
}

TEST_CASE("all invariants vanish on the zero form") {
    const auto values = as_map(evaluate_all(FanoForm{}));
    for (const auto& [name, value] : values) REQUIRE(value == 0.0);
}

TEST_CASE("swapping the two qubits permutes the invariants as expected") {
    const std::map<std::string, std::string> image = {
        {"c200", "c020"}, {"c020", "c200"}, {"c202", "c022"}, {"c022", "c202"},
        {"c204", "c024"}, {"c024", "c204"}, {"c214", "c124"}, {"c124", "c214"},
        {"c215", "c125"}, {"c125", "c215"}, {"c306", "c036"}, {"c036", "c306"},
        {"c213", "c123"}, {"c123", "c213"}, {"c002", "c002"}, {"c003", "c003"},
        {"c004", "c004"}, {"c111", "c111"}, {"c112", "c112"}, {"c113", "c113"}};
    Rng rng(161803);
    for (int trial = 0; trial < 50; ++trial) {
        const FanoForm f = test::random_fano(rng);
        FanoForm swapped;
        swapped.a = f.b;
        swapped.b = f.a;
        swapped.C = f.C.transpose();
        const auto before = as_map(evaluate_all(f));
        const auto after = as_map(evaluate_all(swapped));
        for (const auto& [name, target] : image) {
            const double expect = before.at(name);
            const double got = after.at(target);
            REQUIRE(std::abs(got - expect) <= 1e-13 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("each invariant scales with its printed multi-degree") {
    Rng rng(141421);
    for (int trial = 0; trial < 20; ++trial) {
        const FanoForm f = test::random_fano(rng);
        const double t = 1.0 + rng.uniform();
        const double u = 1.0 + rng.uniform();
        const double w = 1.0 + rng.uniform();
        FanoForm scaled;
        scaled.a = t * f.a;
        scaled.b = u * f.b;
        scaled.C = w * f.C;
        const LocalInvariants base = evaluate_all(f);
        const LocalInvariants moved = evaluate_all(scaled);
        for (const auto& row : invariant_table()) {
            const double predicted =
                std::pow(t, row.s) * std::pow(u, row.t) * std::pow(w, row.q) *
                (base.*(row.field));
            REQUIRE(std::abs(moved.*(row.field) - predicted) <=
                    1e-12 * std::max(1.0, std::abs(predicted)));
        }
    }
}

TEST_CASE("cofactor matrix satisfies C cof(C)^T = det(C) I") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Matrix3d c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c(i, j) = rng.gaussian();
        const Eigen::Matrix3d product = c * cofactor_matrix(c).transpose();
        const Eigen::Matrix3d expected = c.determinant() * Eigen::Matrix3d::Identity();
        REQUIRE((product - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("basis values of the canonical states") {
    FanoForm bellf;
    bellf.C = Eigen::Vector3d(1, -1, 1).asDiagonal();
    const LocalInvariants inv = evaluate_all(bellf);
    const CasimirTriple cas = casimirs_from_fano(inv);
    const BasisValues bv = basis_values(inv, cas);
    REQUIRE(bv.k[0] == 1.0);
    REQUIRE(bv.k[1] == Catch::Approx(1.0).margin(1e-15));   // K2 = C2
    REQUIRE(bv.k[4] == Catch::Approx(1.0).margin(1e-15));   // K5 = C3
    REQUIRE(bv.k[6] == Catch::Approx(3.0).margin(1e-15));   // K7 = c004
    REQUIRE(bv.j[0] == Catch::Approx(1.0).margin(1e-15));   // J1 = C4
    for (int i : {2, 3, 5, 7, 8, 9}) REQUIRE(std::abs(bv.k[i]) < 1e-15);
    for (int i = 1; i < 15; ++i) REQUIRE(std::abs(bv.j[i]) < 1e-15);

    const LocalInvariants zero{};
    const BasisValues mixed = basis_values(zero, CasimirTriple{});
    REQUIRE(mixed.k[0] == 1.0);
    for (int i = 1; i < 10; ++i) REQUIRE(mixed.k[i] == 0.0);
    for (int i = 0; i < 15; ++i) REQUIRE(mixed.j[i] == 0.0);
}

TEST_CASE("composite secondaries are bitwise products of their factors") {
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const FanoForm f = test::random_fano(rng);
        const LocalInvariants inv = evaluate_all(f);
        const BasisValues bv = basis_values(inv, casimirs_from_fano(inv));
        REQUIRE(bv.j[3] == bv.j[0] * bv.j[1]);
        REQUIRE(bv.j[4] == bv.j[0] * bv.j[2]);
        REQUIRE(bv.j[5] == bv.j[1] * bv.j[2]);
        REQUIRE(bv.j[6] == bv.j[0] * bv.j[1] * bv.j[2]);
    }
}

TEST_CASE("Casimir decomposition identities hold to 1e-11 on 500 random states") {
    FanoForm bellf;
    bellf.C = Eigen::Vector3d(1, -1, 1).asDiagonal();
    const CasimirTriple bell_fano = casimirs_from_fano(evaluate_all(bellf));
    REQUIRE(bell_fano.c2 == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(casimir_identities_residual(bellf).cwiseAbs().maxCoeff() < 1e-12);

    REQUIRE(casimir_identities_residual(FanoForm{}).cwiseAbs().maxCoeff() < 1e-15);

    Rng rng(97);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const FanoForm f = fano_decompose(sample_hermitian_unit_trace(4, rng));
        worst = std::max(worst, casimir_identities_residual(f).cwiseAbs().maxCoeff());
    }
    REQUIRE(worst < 1e-11);
}

TEST_CASE("invariant table is complete and consistent") {
    const auto& table = invariant_table();
    REQUIRE(table.size() == 20);
    std::set<std::string> names;
    std::map<int, int> per_degree;
    for (const auto& row : table) {
        names.insert(row.name);
        per_degree[row.s + row.t + row.q] += 1;
        // the name encodes the multi-degree
        REQUIRE(row.name[1] - '0' == row.s);
        REQUIRE(row.name[2] - '0' == row.t);
        REQUIRE(row.name[3] - '0' == row.q);
    }
    REQUIRE(names.size() == 20);
    const std::map<int, int> expected = {{2, 3}, {3, 2}, {4, 4}, {5, 1},
                                         {6, 4}, {7, 2}, {8, 2}, {9, 2}};
    REQUIRE(per_degree == expected);
}
