#pragma once

// A_pi(t) by interpolating groundstate components A_{(pi)_p} in p.

#include <gmpxx.h>
#include <vector>

#include "looplab/cpl.hpp"
#include "looplab/matching.hpp"
#include "looplab/poly.hpp"

namespace looplab {

struct APolyOptions {
    // Two extra nodes p = d+1, d+2 are used while |pi| + p stays within
    // this size; beyond it only the degree and leading coefficient are checked.
    int guard_size_bound = 12;
};

// Degree exactly d(pi) with leading coefficient 1/H_pi; throws
// std::logic_error otherwise, ResourceError if a needed size is too large.
RatPoly a_poly(const Matching& pi, GroundStateCache& cache, const APolyOptions& opt = {});

// A_pi(-|pi|); throws std::logic_error if not an integer.
mpz_class g_value(const Matching& pi, GroundStateCache& cache);
mpz_class g_value(const Matching& pi, const RatPoly& a);

// c_0..c_d with P(t) = sum_i c_i C(t+d-i, d).
std::vector<mpq_class> binomial_basis_coeffs(const RatPoly& p, int d);

}  // namespace looplab
