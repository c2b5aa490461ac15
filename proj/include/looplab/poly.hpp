#pragma once

// Exact univariate and bivariate polynomials over the rationals.

#include <climits>
#include <gmpxx.h>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace looplab {

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

class RatPoly {
public:
    static constexpr int kZeroDegree = INT_MIN;

    RatPoly() = default;
    RatPoly(const mpq_class& c);  // NOLINT: constants convert implicitly
    RatPoly(long c) : RatPoly(mpq_class(c)) {}  // NOLINT
    explicit RatPoly(std::vector<mpq_class> ascending);

    static RatPoly monomial(const mpq_class& c, int k);
    static RatPoly x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    mpq_class coeff(int k) const;
    mpq_class leading() const { return is_zero() ? mpq_class(0) : c_.back(); }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const mpq_class& s);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
    friend RatPoly operator*(const mpq_class& s, RatPoly a) { return a *= s; }
    RatPoly operator-() const;
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    // Quotient and remainder; throws std::domain_error on division by zero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    // Throws std::domain_error if d does not divide *this.
    RatPoly exact_div(const RatPoly& d) const;

    mpq_class operator()(const mpq_class& x) const;
    RatPoly derivative() const;
    // P(t + c)
    RatPoly shift(const mpq_class& c) const;
    // P(s * t)
    RatPoly scale_var(const mpq_class& s) const;
    RatPoly monic() const;

    // Least common denominator of the coefficients.
    mpz_class denominator_lcm() const;
    bool has_integer_coeffs() const;
    bool nonnegative_coeffs() const;

    std::string to_string(const std::string& var = "t") const;
    nlohmann::json to_json(const std::string& var = "t") const;
    static RatPoly from_json(const nlohmann::json& j);

private:
    void trim();
    std::vector<mpq_class> c_;  // ascending degree, no trailing zero
};

RatPoly pow(const RatPoly& p, int e);
RatPoly gcd(RatPoly a, RatPoly b);  // monic, gcd(0,0) = 0
RatPoly squarefree_part(const RatPoly& p);
// C(t + shift, k) = (t+shift)(t+shift-1)...(t+shift-k+1)/k!, zero for k < 0.
RatPoly binomial_poly(int k, const mpq_class& shift = 0);
mpq_class binomial_rational(const mpq_class& x, int k);

// Exact determinant by Gaussian elimination; the empty matrix gives 1.
mpq_class determinant(std::vector<std::vector<mpq_class>> m);

// Unique polynomial of degree < #points through the points; throws on a
// repeated abscissa.
RatPoly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points);

// Bound for root counting; nullopt stands for -inf (lower) or +inf (upper).
using Endpoint = std::optional<mpq_class>;

// Distinct real roots of p in (a, b]. The zero polynomial throws.
int sturm_real_roots(const RatPoly& p, const Endpoint& a = std::nullopt, const Endpoint& b = std::nullopt);

struct RootReport {
    std::map<int, int> multiplicity;  // p -> multiplicity of the root -p
    RatPoly residual;                  // P / prod (t+p)^mult
    int residual_real_roots = 0;
    // scale * residual has integer coefficients
    bool integer_after_scaling = false;
};

RootReport integer_root_report(const RatPoly& p, int p_min, int p_max, const mpz_class& scale);

// Bivariate polynomial, coefficient of tau^i t^j at [i][j].
class TauTPoly {
public:
    TauTPoly() = default;
    TauTPoly(const mpq_class& c);  // NOLINT
    explicit TauTPoly(std::vector<std::vector<mpq_class>> rows);

    static TauTPoly from_t(const RatPoly& p);
    static TauTPoly from_tau(const RatPoly& p);
    static TauTPoly tau_power(int i);

    bool is_zero() const noexcept { return rows_.empty(); }
    // -1 for the zero polynomial
    int degree_tau() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    int degree_t() const;
    mpq_class coeff(int i, int j) const;
    // Coefficient of tau^i as a polynomial in t.
    RatPoly tau_coeff(int i) const;
    const std::vector<std::vector<mpq_class>>& rows() const noexcept { return rows_; }

    TauTPoly& operator+=(const TauTPoly& o);
    TauTPoly& operator-=(const TauTPoly& o);
    TauTPoly& operator*=(const TauTPoly& o);
    TauTPoly& operator*=(const mpq_class& s);
    friend TauTPoly operator+(TauTPoly a, const TauTPoly& b) { return a += b; }
    friend TauTPoly operator-(TauTPoly a, const TauTPoly& b) { return a -= b; }
    friend TauTPoly operator*(TauTPoly a, const TauTPoly& b) { return a *= b; }
    friend TauTPoly operator*(TauTPoly a, const mpq_class& s) { return a *= s; }
    friend bool operator==(const TauTPoly&, const TauTPoly&) = default;

    // Polynomial in t at tau = v.
    RatPoly at_tau(const mpq_class& v) const;
    // Polynomial in tau at t = v.
    RatPoly at_t(const mpq_class& v) const;
    mpq_class operator()(const mpq_class& tau, const mpq_class& t) const;
    // P(-tau, t)
    TauTPoly negate_tau() const;
    // P(tau, t + c)
    TauTPoly shift_t(const mpq_class& c) const;
    // Exact division by a polynomial in t alone; throws std::domain_error if inexact.
    TauTPoly exact_div_t(const RatPoly& d) const;

    std::string to_string() const;
    nlohmann::json to_json() const;
    static TauTPoly from_json(const nlohmann::json& j);

private:
    void trim();
    std::vector<std::vector<mpq_class>> rows_;
};

}  // namespace looplab
