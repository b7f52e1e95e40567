// Walks the Werner family rho(p) = p |psi-><psi-| + (1-p)/4 I, printing the
// Casimirs, the quartic coefficient S4, and the classification at each step.
// The family leaves the physical region at p = -1/3 and p = 1.
#include <cstdio>

#include "entring/entring.hpp"

using namespace entring;

namespace {

const char* positivity_name(PositivityClass c) {
    switch (c) {
        case PositivityClass::positive: return "positive";
        case PositivityClass::boundary: return "boundary";
        default: return "non-positive";
    }
}

const char* region_name(RegionClass c) {
    switch (c) {
        case RegionClass::inside: return "inside";
        case RegionClass::boundary: return "boundary";
        default: return "outside";
    }
}

}  // namespace

int main() {
    std::printf("%8s %12s %12s %12s %13s %13s %9s\n", "p", "C2", "C3", "C4", "S4",
                "positivity", "region");
    for (int step = -5; step <= 10; ++step) {
        const double p = step / 10.0;
        const Eigen::MatrixXcd rho = werner_state(p);
        const CasimirTriple cas = casimirs_of_state(rho);
        const CharPolyCoeffs coeffs = char_poly_coeffs(rho);
        const PositivityReport pos = positivity_check(rho);
        const RegionReport region = region_check(cas);
        std::printf("%8.2f %12.6f %12.6f %12.6f %13.6e %13s %9s\n", p, cas.c2, cas.c3,
                    cas.c4, coeffs.s(3), positivity_name(pos.classification),
                    region_name(region.classification));
    }

    // bisect the S4 sign change on the negative side
    double lo = -0.45, hi = -0.25;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (char_poly_coeffs(werner_state(mid)).s(3) < 0.0 ? lo : hi) = mid;
    }
    std::printf("\nS4 changes sign at p = %.9f (exact: -1/3)\n", 0.5 * (lo + hi));
    return 0;
}
