#include "looplab/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace looplab {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

RatPoly::RatPoly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) { trim(); }

RatPoly RatPoly::monomial(const mpq_class& c, int k) {
    if (c == 0) return {};
    std::vector<mpq_class> v(k + 1);
    v[k] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RatPoly::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : mpq_class(0);
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return {};
    std::vector<mpq_class> rem = c_;
    const int dd = d.degree();
    std::vector<mpq_class> quo(std::max(0, degree() - dd + 1));
    const mpq_class lead = d.leading();
    for (int k = degree() - dd; k >= 0; --k) {
        mpq_class f = rem[k + dd] / lead;
        if (f == 0) continue;
        quo[k] = f;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= f * d.c_[i];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

mpq_class RatPoly::operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::shift(const mpq_class& c) const {
    // Horner in the shifted variable.
    RatPoly acc;
    const RatPoly lin(std::vector<mpq_class>{c, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += RatPoly(*it);
    }
    return acc;
}

RatPoly RatPoly::scale_var(const mpq_class& s) const {
    RatPoly r = *this;
    mpq_class f = 1;
    for (auto& c : r.c_) {
        c *= f;
        f *= s;
    }
    r.trim();
    return r;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    return *this * mpq_class(1 / leading());
}

mpz_class RatPoly::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

bool RatPoly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

bool RatPoly::nonnegative_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& c) { return c >= 0; });
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpq_class& c = c_[k];
        if (c == 0) continue;
        mpq_class a = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (k == 0 || a != 1) os << a.get_str() << (k > 0 ? "*" : "");
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

nlohmann::json RatPoly::to_json(const std::string& var) const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : c_) cs.push_back(rational_to_string(c));
    return {{"var", var}, {"coeffs", cs}};
}

RatPoly RatPoly::from_json(const nlohmann::json& j) {
    std::vector<mpq_class> v;
    for (const auto& c : j.at("coeffs")) v.push_back(rational_from_string(c.get<std::string>()));
    return RatPoly(std::move(v));
}

RatPoly pow(const RatPoly& p, int e) {
    RatPoly r(1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return p.exact_div(gcd(p, p.derivative())).monic();
}

RatPoly binomial_poly(int k, const mpq_class& shift) {
    if (k < 0) return {};
    RatPoly r(1);
    for (int i = 0; i < k; ++i) r *= RatPoly(std::vector<mpq_class>{shift - i, 1});
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return r * mpq_class(1, f);
}

mpq_class binomial_rational(const mpq_class& x, int k) {
    if (k < 0) return 0;
    mpq_class r = 1;
    for (int i = 0; i < k; ++i) r = r * (x - i) / (i + 1);
    return r;
}

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
    const size_t n = m.size();
    mpq_class det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

RatPoly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points) {
    const size_t m = points.size();
    std::set<mpq_class> xs;
    for (const auto& [x, y] : points)
        if (!xs.insert(x).second) throw std::invalid_argument("interpolate: duplicate abscissa " + x.get_str());
    // Newton divided differences.
    std::vector<mpq_class> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = points[i].second;
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    RatPoly result;
    for (size_t i = m; i-- > 0;) {
        result *= RatPoly(std::vector<mpq_class>{-points[i].first, 1});
        result += RatPoly(dd[i]);
    }
    return result;
}

namespace {

int sign_at(const RatPoly& p, const Endpoint& x, bool lower) {
    if (x) return sgn(p(*x));
    int s = sgn(p.leading());
    if (lower && p.degree() % 2 != 0) s = -s;
    return s;
}

int variations(const std::vector<RatPoly>& seq, const Endpoint& x, bool lower) {
    int v = 0, prev = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x, lower);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int sturm_real_roots(const RatPoly& p, const Endpoint& a, const Endpoint& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_roots: zero polynomial");
    if (a && b && *a >= *b) return 0;
    RatPoly s = squarefree_part(p);
    if (s.degree() <= 0) return 0;
    std::vector<RatPoly> seq{s, s.derivative()};
    while (!seq.back().is_zero()) {
        auto r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return variations(seq, a, true) - variations(seq, b, false);
}

RootReport integer_root_report(const RatPoly& p, int p_min, int p_max, const mpz_class& scale) {
    if (p.is_zero()) throw std::invalid_argument("integer_root_report: zero polynomial");
    RootReport rep;
    RatPoly q = p;
    for (int k = p_min; k <= p_max; ++k) {
        int mult = 0;
        while (q.degree() > 0 && q(mpq_class(-k)) == 0) {
            q = q.exact_div(RatPoly(std::vector<mpq_class>{k, 1}));
            ++mult;
        }
        if (mult > 0) rep.multiplicity[k] = mult;
    }
    rep.residual_real_roots = q.degree() > 0 ? sturm_real_roots(q) : 0;
    rep.integer_after_scaling = (q * mpq_class(scale)).has_integer_coeffs();
    rep.residual = std::move(q);
    return rep;
}

// --------------------------------------------------------------- TauTPoly

TauTPoly::TauTPoly(const mpq_class& c) {
    if (c != 0) rows_ = {{c}};
}

TauTPoly::TauTPoly(std::vector<std::vector<mpq_class>> rows) : rows_(std::move(rows)) { trim(); }

TauTPoly TauTPoly::from_t(const RatPoly& p) {
    if (p.is_zero()) return {};
    return TauTPoly(std::vector<std::vector<mpq_class>>{p.coeffs()});
}

TauTPoly TauTPoly::from_tau(const RatPoly& p) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& c : p.coeffs()) rows.push_back({c});
    return TauTPoly(std::move(rows));
}

TauTPoly TauTPoly::tau_power(int i) {
    std::vector<std::vector<mpq_class>> rows(i + 1);
    rows[i] = {1};
    return TauTPoly(std::move(rows));
}

void TauTPoly::trim() {
    for (auto& r : rows_)
        while (!r.empty() && r.back() == 0) r.pop_back();
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

int TauTPoly::degree_t() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, static_cast<int>(r.size()) - 1);
    return d;
}

mpq_class TauTPoly::coeff(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(rows_.size())) return 0;
    const auto& r = rows_[i];
    return j >= 0 && j < static_cast<int>(r.size()) ? r[j] : mpq_class(0);
}

RatPoly TauTPoly::tau_coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(rows_.size())) return {};
    return RatPoly(rows_[i]);
}

TauTPoly& TauTPoly::operator+=(const TauTPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (size_t i = 0; i < o.rows_.size(); ++i) {
        auto& r = rows_[i];
        if (o.rows_[i].size() > r.size()) r.resize(o.rows_[i].size());
        for (size_t j = 0; j < o.rows_[i].size(); ++j) r[j] += o.rows_[i][j];
    }
    trim();
    return *this;
}

TauTPoly& TauTPoly::operator-=(const TauTPoly& o) {
    TauTPoly neg = o;
    neg *= mpq_class(-1);
    return *this += neg;
}

TauTPoly& TauTPoly::operator*=(const TauTPoly& o) {
    if (is_zero() || o.is_zero()) {
        rows_.clear();
        return *this;
    }
    std::vector<std::vector<mpq_class>> r(rows_.size() + o.rows_.size() - 1,
                                          std::vector<mpq_class>(degree_t() + o.degree_t() + 1));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (rows_[i][j] == 0) continue;
            for (size_t k = 0; k < o.rows_.size(); ++k)
                for (size_t l = 0; l < o.rows_[k].size(); ++l) r[i + k][j + l] += rows_[i][j] * o.rows_[k][l];
        }
    rows_ = std::move(r);
    trim();
    return *this;
}

TauTPoly& TauTPoly::operator*=(const mpq_class& s) {
    for (auto& r : rows_)
        for (auto& c : r) c *= s;
    trim();
    return *this;
}

RatPoly TauTPoly::at_tau(const mpq_class& v) const {
    RatPoly acc;
    mpq_class f = 1;
    for (const auto& r : rows_) {
        acc += RatPoly(r) * f;
        f *= v;
    }
    return acc;
}

RatPoly TauTPoly::at_t(const mpq_class& v) const {
    std::vector<mpq_class> out;
    for (const auto& r : rows_) out.push_back(RatPoly(r)(v));
    return RatPoly(std::move(out));
}

mpq_class TauTPoly::operator()(const mpq_class& tau, const mpq_class& t) const { return at_t(t)(tau); }

TauTPoly TauTPoly::negate_tau() const {
    TauTPoly r = *this;
    for (size_t i = 1; i < r.rows_.size(); i += 2)
        for (auto& c : r.rows_[i]) c = -c;
    return r;
}

TauTPoly TauTPoly::shift_t(const mpq_class& c) const {
    std::vector<std::vector<mpq_class>> out;
    for (const auto& r : rows_) out.push_back(RatPoly(r).shift(c).coeffs());
    return TauTPoly(std::move(out));
}

TauTPoly TauTPoly::exact_div_t(const RatPoly& d) const {
    std::vector<std::vector<mpq_class>> out;
    for (const auto& r : rows_) out.push_back(RatPoly(r).exact_div(d).coeffs());
    return TauTPoly(std::move(out));
}

std::string TauTPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree_tau(); i >= 0; --i) {
        RatPoly p(rows_[i]);
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p.to_string("t") << ")";
        if (i >= 1) os << "*tau";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

nlohmann::json TauTPoly::to_json() const {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& r : rows_) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : r) row.push_back(rational_to_string(c));
        m.push_back(row);
    }
    return {{"vars", {"tau", "t"}}, {"coeffs", m}};
}

TauTPoly TauTPoly::from_json(const nlohmann::json& j) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& row : j.at("coeffs")) {
        rows.emplace_back();
        for (const auto& c : row) rows.back().push_back(rational_from_string(c.get<std::string>()));
    }
    return TauTPoly(std::move(rows));
}

}  // namespace looplab
