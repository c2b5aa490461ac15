#pragma once

// The tau-deformed side: constant-term polynomials Phi_a(tau, t), their
// multivariate versions evaluated at the points q^eps, the triangular basis
// change C(tau) to the groundstate basis, and Psi_pi(tau, t).

#include <gmpxx.h>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "looplab/matching.hpp"
#include "looplab/poly.hpp"

namespace looplab {

// Element of Q(q) stored as num/den with coprime integer polynomials in q,
// den having positive leading coefficient. Laurent polynomials carry a power
// of q in den.
class QFieldElem {
public:
    QFieldElem() : den_(1) {}
    QFieldElem(const mpq_class& c);  // NOLINT
    QFieldElem(RatPoly num, RatPoly den);
    // sum_k coeffs[k] q^(lowest + k)
    static QFieldElem laurent(int lowest, const std::vector<mpq_class>& coeffs);
    static QFieldElem q() { return QFieldElem(RatPoly::x(), RatPoly(1)); }

    const RatPoly& num() const noexcept { return num_; }
    const RatPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    QFieldElem& operator+=(const QFieldElem& o);
    QFieldElem& operator-=(const QFieldElem& o);
    QFieldElem& operator*=(const QFieldElem& o);
    QFieldElem& operator/=(const QFieldElem& o);  // throws std::domain_error on zero
    friend QFieldElem operator+(QFieldElem a, const QFieldElem& b) { return a += b; }
    friend QFieldElem operator-(QFieldElem a, const QFieldElem& b) { return a -= b; }
    friend QFieldElem operator*(QFieldElem a, const QFieldElem& b) { return a *= b; }
    friend QFieldElem operator/(QFieldElem a, const QFieldElem& b) { return a /= b; }
    friend bool operator==(const QFieldElem&, const QFieldElem&) = default;

    mpq_class operator()(const mpq_class& q) const;
    // Lowest exponent and coefficients if den is a monomial.
    std::optional<std::pair<int, std::vector<mpq_class>>> as_laurent() const;
    // Rewrite as a polynomial in tau = -q - 1/q; nullopt if not of that form.
    std::optional<RatPoly> to_tau() const;
    std::string to_string() const;

private:
    void normalize();
    RatPoly num_, den_;
};

// Phi_a(tau, t): coefficient of prod u_i^(a_i - 1) in
// prod_i (1 + tau u_i)^t prod_{i<j} (u_j - u_i)(1 + tau u_j + u_i u_j).
TauTPoly phi_homog(const std::vector<int>& a);
// Same at t = p, a polynomial in tau.
RatPoly phi_homog(const std::vector<int>& a, int p);

// Phi_a(q^eps1, ..., q^eps2n) with eps_k = -1 at openers of eps and +1 at
// closers. Throws std::logic_error if the value cannot be certified as a
// Laurent polynomial in q.
QFieldElem phi_multivariate_eval(const std::vector<int>& a, const Matching& eps);
// Values for several sequences against one evaluation point, sharing work.
std::vector<QFieldElem> phi_multivariate_eval(const std::vector<std::vector<int>>& as, const Matching& eps);

struct CMatrix {
    int n = 0;
    std::vector<Matching> order;         // lexicographic; rows index a(pi), columns index pi
    std::vector<std::vector<RatPoly>> c;  // c[row][col], polynomials in tau
    int index(const Matching& m) const;
    const RatPoly& at(const Matching& a, const Matching& pi) const { return c[index(a)][index(pi)]; }
};

// Built from phi_multivariate_eval; throws std::logic_error if an entry is not
// in Z[tau] or cmatrix_violations is nonempty.
CMatrix c_matrix(int n);
// Triangularity, unit diagonal, degree bound and parity.
std::vector<std::string> cmatrix_violations(const CMatrix& m);
// Entries of `big` at nested indices against `small`.
std::vector<std::string> stability_violations(const CMatrix& small, const CMatrix& big);
// Inverse by forward substitution along a linear extension of the order.
std::vector<std::vector<RatPoly>> c_inverse(const CMatrix& m);

// Shared per-size tables: C, its inverse and Phi_a(tau, t).
class TauSystem {
public:
    explicit TauSystem(int n);
    int n() const noexcept { return m_.n; }
    const CMatrix& c() const noexcept { return m_; }
    const std::vector<std::vector<RatPoly>>& c_inv() const noexcept { return inv_; }
    const TauTPoly& phi(const Matching& a) const { return phi_.at(m_.index(a)); }
    TauTPoly psi(const Matching& pi) const;

private:
    CMatrix m_;
    std::vector<std::vector<RatPoly>> inv_;
    std::vector<TauTPoly> phi_;
};

// Process-wide TauSystem per size, built on first use.
const TauSystem& tau_system(int n);

TauTPoly psi_tau(const Matching& pi);
// Psi_pi(tau, -|pi|)
RatPoly g_tau(const Matching& pi);
// Psi_pi(tau, -1) equals Psi_pi'(tau, 0) when pi = (pi'), else vanishes.
bool first_root_check(const Matching& pi);

}  // namespace looplab
