#pragma once

// Hook-content polynomials, the binomial determinant giving the top tau
// coefficient, tableau counts, and closed forms for the subleading
// coefficient of A_pi(t).

#include <gmpxx.h>
#include <vector>

#include "looplab/matching.hpp"
#include "looplab/poly.hpp"

namespace looplab {

// S_sigma(t - n + 1) = prod_u (t - n + 1 + c(u)) / H_sigma, as a polynomial in t.
RatPoly s_sigma(const Matching& sigma);

// det | C(t + i - 1, a_i - j) | for a = a(pi), i, j = 1..n.
mpq_class d_det(const Matching& pi, const mpq_class& t);
RatPoly d_det(const Matching& pi);

enum class TableauMode { Strict, Weak };

// Fillings of y increasing along rows and columns. Strict: entries in
// 1..bound, strictly increasing. Weak: entries in 0..bound, weakly increasing.
mpz_class count_tableaux(const YoungDiagram& y, int bound, TableauMode mode);

struct Subleading {
    mpq_class from_contents_rows;     // (1/H) sum c(u) + sum_cor (n-y)/H'
    mpq_class from_contents_columns;  // -(1/H) sum c(u) + sum_cor (n-x)/H'
    mpq_class from_determinant;       // t^{-1} part of the expanded determinant
    mpq_class corner_average;         // (1/2) sum_cor (2n-x-y)/H'
    mpq_class corner_unhalved;        // sum_cor (2n-x-y)/H', as printed
};

// Coefficient of t^{d-1} in A_pi(t) by several closed forms. Throws
// std::logic_error if the first three disagree or the value is not positive.
Subleading subleading(const Matching& pi);

struct HookIdentities {
    mpq_class twice_content;  // 2 sum c(u) / H_Y
    mpq_class corner_sum;     // sum_cor (y-x) / H_{Y-(x,y)}
    mpq_class domino_sum;     // sum_HD 1/H - sum_VD 1/H
    bool holds() const { return twice_content == corner_sum && twice_content == domino_sum; }
};
HookIdentities hook_identities(const YoungDiagram& y);

// det | 1/(a_i - j)! |, with 1/k! = 0 for k < 0.
mpq_class inverse_factorial_det(const std::vector<int>& a);

struct DominoDeterminants {
    mpq_class row_sum;  // sum_k det with row k scaled by (a_k-j)(a_k-j-1)
    mpq_class product;  // sum_k (a_k-k)(a_k-2n+k-1) * det | 1/(a_i-j)! |
};
DominoDeterminants domino_determinants(const std::vector<int>& a);

}  // namespace looplab
