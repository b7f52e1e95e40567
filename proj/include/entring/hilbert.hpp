#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "entring/group_action.hpp"
#include "entring/invariants.hpp"
#include "entring/parallel.hpp"
#include "entring/rng.hpp"
#include "entring/states.hpp"

namespace entring {

struct PowerSeries {
    std::vector<std::int64_t> coeffs;  // coeffs[k] = d_k
};

/// Exact integer expansion of
///   M(q) = (1 + q^4 + q^5 + 3q^6 + 2q^7 + 2q^8 + 3q^9 + q^10 + q^11 + q^15)
///          / ((1-q)(1-q^2)^3 (1-q^3)^2 (1-q^4)^3 (1-q^6))
/// by polynomial long division over int64. d_k counts the linearly
/// independent invariants of degree k on the 16-dimensional Hermitian space.
inline PowerSeries molien_expand(int kmax) {
    if (kmax < 0) throw std::invalid_argument("molien_expand: kmax must be nonnegative");
    if (kmax > 64) throw std::invalid_argument("molien_expand: kmax capped at 64");
    std::vector<std::int64_t> num(kmax + 1, 0);
    const std::pair<int, std::int64_t> numerator_terms[] = {
        {0, 1}, {4, 1}, {5, 1}, {6, 3}, {7, 2}, {8, 2}, {9, 3}, {10, 1}, {11, 1}, {15, 1}};
    for (auto [k, c] : numerator_terms)
        if (k <= kmax) num[k] = c;

    std::vector<std::int64_t> den(kmax + 1, 0);
    den[0] = 1;
    const std::pair<int, int> denominator_factors[] = {{1, 1}, {2, 3}, {3, 2}, {4, 3}, {6, 1}};
    for (auto [m, count] : denominator_factors) {
        for (int rep = 0; rep < count; ++rep) {
            // multiply den by (1 - q^m) in place, truncated
            for (int k = kmax; k >= m; --k) den[k] -= den[k - m];
        }
    }

    PowerSeries series;
    series.coeffs.assign(kmax + 1, 0);
    for (int k = 0; k <= kmax; ++k) {
        std::int64_t acc = num[k];
        for (int i = 1; i <= k; ++i) acc -= den[i] * series.coeffs[k - i];
        series.coeffs[k] = acc;  // den[0] = 1
    }
    return series;
}

/// The multiplicative generators feeding the rank oracle: trace plus the
/// non-composite K/J entries (J4..J7 are products and add nothing).
struct Generator {
    const char* name;
    int degree;
};

inline const std::vector<Generator>& generator_table() {
    static const std::vector<Generator> table = {
        {"T", 1},   {"K2", 2},  {"K3", 2},  {"K4", 2},  {"K5", 3},  {"K6", 3},
        {"K7", 4},  {"K8", 4},  {"K9", 4},  {"J1", 4},  {"J2", 5},  {"K10", 6},
        {"J3", 6},  {"J8", 6},  {"J9", 6},  {"J10", 7}, {"J11", 7}, {"J12", 8},
        {"J13", 8}, {"J14", 9}, {"J15", 9}};
    return table;
}

/// A point of the full 16-dimensional Hermitian space, coordinatized by the
/// trace and the Fano data of the matrix (which scale linearly with it).
struct RingSamplePoint {
    double trace = 0.0;
    FanoForm fano;
};

inline RingSamplePoint sample_ring_point(Rng& rng) {
    const Eigen::MatrixXcd h = sample_hermitian_unit_trace(4, rng);
    const double tau = rng.gaussian();
    RingSamplePoint p;
    p.trace = tau;
    p.fano = fano_decompose(h);
    p.fano.a *= tau;
    p.fano.b *= tau;
    p.fano.C *= tau;
    return p;
}

inline Eigen::VectorXd generator_values(const RingSamplePoint& p) {
    const LocalInvariants inv = evaluate_all(p.fano);
    const CasimirTriple cas = casimirs_from_fano(inv);
    const BasisValues bv = basis_values(inv, cas);
    Eigen::VectorXd g(21);
    g << p.trace, bv.k[1], bv.k[2], bv.k[3], bv.k[4], bv.k[5], bv.k[6], bv.k[7], bv.k[8],
        bv.j[0], bv.j[1], bv.k[9], bv.j[2], bv.j[7], bv.j[8], bv.j[9], bv.j[10], bv.j[11],
        bv.j[12], bv.j[13], bv.j[14];
    return g;
}

/// Exponent vectors (aligned with generator_table) of every generator
/// monomial with weighted total degree exactly k, in lexicographic order.
inline std::vector<std::vector<int>> monomials_of_degree(int k) {
    const auto& gens = generator_table();
    std::vector<std::vector<int>> out;
    std::vector<int> current(gens.size(), 0);
    auto recurse = [&](auto&& self, std::size_t g, int remaining) -> void {
        if (g == gens.size()) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        const int deg = gens[g].degree;
        for (int e = 0; e * deg <= remaining; ++e) {
            current[g] = e;
            self(self, g + 1, remaining - e * deg);
        }
        current[g] = 0;
    };
    recurse(recurse, 0, k);
    return out;
}

namespace detail {

inline int evaluation_rank(int samples, std::uint64_t stream_seed,
                           const std::vector<std::vector<int>>& monomials) {
    Eigen::MatrixXd e(samples, static_cast<Eigen::Index>(monomials.size()));
    parallel_for_index(static_cast<std::size_t>(samples), [&](std::size_t row) {
        Rng rng(derive_seed(stream_seed, row));
        const Eigen::VectorXd g = generator_values(sample_ring_point(rng));
        for (std::size_t m = 0; m < monomials.size(); ++m) {
            double value = 1.0;
            for (std::size_t i = 0; i < monomials[m].size(); ++i) {
                for (int rep = 0; rep < monomials[m][i]; ++rep) value *= g(i);
            }
            e(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(m)) = value;
        }
    });
    // Rows span many orders of magnitude (each carries tau^k) and columns
    // differ by the typical size of their monomial. Equilibrating both is
    // rank-preserving and keeps the singular-value gap well clear of the
    // cutoff.
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
        const double norm = e.row(i).norm();
        if (norm > 0.0) e.row(i) /= norm;
    }
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
        const double norm = e.col(j).norm();
        if (norm > 0.0) e.col(j) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = 1e-8 * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

}  // namespace detail

/// Numerical rank of the degree-k monomial evaluation matrix. The rank is
/// computed on two independent derived sample streams; disagreement means
/// the sampling was degenerate and raises instead of returning quietly.
inline int dimension_oracle(int k, int samples, std::uint64_t seed) {
    if (k < 1 || k > 6) throw std::invalid_argument("dimension_oracle: degree must be 1..6");
    const auto monomials = monomials_of_degree(k);
    if (samples < 2 * static_cast<int>(monomials.size())) {
        throw std::invalid_argument("dimension_oracle: need at least 2x monomial count samples");
    }
    const int rank_a = detail::evaluation_rank(samples, derive_seed(seed, 0), monomials);
    const int rank_b = detail::evaluation_rank(samples, derive_seed(seed, 1), monomials);
    if (rank_a != rank_b) {
        throw std::runtime_error("dimension_oracle: rank unstable across seeds (" +
                                 std::to_string(rank_a) + " vs " + std::to_string(rank_b) +
                                 ") at degree " + std::to_string(k));
    }
    return rank_a;
}

struct DegreeCheck {
    int degree = 0;
    int monomial_count = 0;
    std::int64_t molien_dimension = 0;
    int oracle_rank = 0;
    bool match = false;
};

struct ConsistencyReport {
    std::vector<DegreeCheck> checks;
    bool all_match = true;
};

/// Compares molien_expand against the rank oracle for k = 1..kmax.
/// Mismatches are report content, not exceptions.
inline ConsistencyReport basis_consistency(int kmax, std::uint64_t seed) {
    if (kmax < 1 || kmax > 6) {
        throw std::invalid_argument("basis_consistency: kmax must be 1..6");
    }
    const PowerSeries series = molien_expand(kmax);
    ConsistencyReport report;
    for (int k = 1; k <= kmax; ++k) {
        DegreeCheck check;
        check.degree = k;
        check.monomial_count = static_cast<int>(monomials_of_degree(k).size());
        check.molien_dimension = series.coeffs[k];
        check.oracle_rank =
            dimension_oracle(k, 3 * check.monomial_count + 10, derive_seed(seed, k));
        check.match = check.oracle_rank == check.molien_dimension;
        report.all_match = report.all_match && check.match;
        report.checks.push_back(check);
    }
    return report;
}

}  // namespace entring
