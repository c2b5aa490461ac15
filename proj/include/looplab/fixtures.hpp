#pragma once

// Published reference data for size-4 matchings and the eight-arch example.

#include <string>
#include <vector>

#include "looplab/matching.hpp"
#include "looplab/poly.hpp"

namespace looplab::fixtures {

struct APolyEntry {
    std::string word;  // one representative of a conjugate pair
    RatPoly poly;
};

// The ten size-4 polynomials A_pi(t).
const std::vector<APolyEntry>& size4_polynomials();

struct GEntry {
    std::vector<int> diagram;
    long value;
};
// G_pi keyed by Y(pi), ten diagrams up to conjugation.
const std::vector<GEntry>& size4_g_values();

struct GTauEntry {
    std::vector<int> diagram;
    RatPoly poly;  // in tau
};
// G_pi(tau) for all fourteen diagrams inside the size-4 staircase.
const std::vector<GTauEntry>& size4_g_tau();

// The eight-arch matching used for the rule examples.
Matching pi0();
// Root factor (t+2)(t+3)^2(t+4)^2(t+5)^2(t+6)(t+7)/145152000.
RatPoly pi0_root_factor();
// Sextic cofactor of A_{pi0}(t) with coefficients as printed.
RatPoly pi0_sextic_printed();
// Same sextic with constant term 1231200: the printed 123120 makes A_{pi0}(0)
// non-integral and disagrees with the tau = 1 slice of the bivariate data.
RatPoly pi0_sextic();
RatPoly pi0_a_poly();
// Psi_{pi0}(tau, t) = root factor * tau^9 * bracket.
TauTPoly pi0_tau_bracket();
TauTPoly pi0_psi_tau();

}  // namespace looplab::fixtures
