#include "looplab/qkz.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace looplab {

// ---------------------------------------------------------------- QFieldElem

namespace {

mpz_class integer_content(const RatPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

}  // namespace

QFieldElem::QFieldElem(const mpq_class& c) : num_(c), den_(1) { normalize(); }

QFieldElem::QFieldElem(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QFieldElem: zero denominator");
    normalize();
}

QFieldElem QFieldElem::laurent(int lowest, const std::vector<mpq_class>& coeffs) {
    const int shift = std::max(0, -lowest);
    std::vector<mpq_class> num(coeffs.size() + std::max(0, lowest));
    for (size_t k = 0; k < coeffs.size(); ++k) num[k + std::max(0, lowest)] = coeffs[k];
    return QFieldElem(RatPoly(std::move(num)), RatPoly::monomial(1, shift));
}

void QFieldElem::normalize() {
    if (num_.is_zero()) {
        den_ = RatPoly(1);
        return;
    }
    const RatPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    mpz_class l = 1;
    for (const RatPoly* p : {&num_, &den_}) {
        const mpz_class d = p->denominator_lcm();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    num_ *= mpq_class(l);
    den_ *= mpq_class(l);
    mpz_class c = integer_content(num_);
    const mpz_class cd = integer_content(den_);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    mpq_class scale(1, c);
    if (den_.leading() < 0) scale = -scale;
    num_ *= scale;
    den_ *= scale;
}

QFieldElem& QFieldElem::operator+=(const QFieldElem& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QFieldElem& QFieldElem::operator-=(const QFieldElem& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QFieldElem& QFieldElem::operator*=(const QFieldElem& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QFieldElem& QFieldElem::operator/=(const QFieldElem& o) {
    if (o.is_zero()) throw std::domain_error("QFieldElem: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

mpq_class QFieldElem::operator()(const mpq_class& q) const {
    const mpq_class d = den_(q);
    if (d == 0) throw std::domain_error("QFieldElem: pole at " + q.get_str());
    return num_(q) / d;
}

std::optional<std::pair<int, std::vector<mpq_class>>> QFieldElem::as_laurent() const {
    const int k = den_.degree();
    for (int i = 0; i < k; ++i)
        if (den_.coeff(i) != 0) return std::nullopt;
    std::vector<mpq_class> c = num_.coeffs();
    for (auto& x : c) x /= den_.leading();
    return std::make_pair(-k, std::move(c));
}

std::optional<RatPoly> QFieldElem::to_tau() const {
    auto l = as_laurent();
    if (!l) return std::nullopt;
    std::map<int, mpq_class> c;
    for (size_t i = 0; i < l->second.size(); ++i)
        if (l->second[i] != 0) c[l->first + static_cast<int>(i)] = l->second[i];
    std::vector<mpq_class> tau;
    while (!c.empty()) {
        const auto [k, v] = *c.rbegin();
        if (k < 0) return std::nullopt;
        // tau^k = (-1)^k (q + 1/q)^k
        if (static_cast<int>(tau.size()) <= k) tau.resize(k + 1);
        tau[k] = k % 2 ? -v : v;
        mpz_class binom = 1;
        for (int j = 0; j <= k; ++j) {
            auto it = c.find(k - 2 * j);
            const mpq_class sub = v * mpq_class(binom);
            if (it == c.end())
                c[k - 2 * j] = -sub;
            else if ((it->second -= sub) == 0)
                c.erase(it);
            binom = binom * (k - j) / (j + 1);
        }
    }
    return RatPoly(std::move(tau));
}

std::string QFieldElem::to_string() const {
    if (den_ == RatPoly(1)) return num_.to_string("q");
    return "(" + num_.to_string("q") + ")/(" + den_.to_string("q") + ")";
}

// ------------------------------------------------------------ constant term

TauTPoly phi_homog(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    if (n > 10) throw std::invalid_argument("phi_homog: size above 10");
    constexpr int kBits = 6;
    auto exp_of = [](std::uint64_t m, int i) { return static_cast<int>((m >> (kBits * i)) & 63); };
    auto unit = [](int i) { return std::uint64_t{1} << (kBits * i); };

    // monomial in u -> coefficients in tau
    using Poly = std::map<std::uint64_t, std::vector<mpz_class>>;
    Poly cur{{0, {mpz_class(1)}}};
    struct Term {
        std::uint64_t dm;
        int tau;
        int sign;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // (u_j - u_i)(1 + tau u_j + u_i u_j)
            const Term terms[] = {
                {unit(j), 0, 1},           {2 * unit(j), 1, 1},  {unit(i) + 2 * unit(j), 0, 1},
                {unit(i), 0, -1},          {unit(i) + unit(j), 1, -1}, {2 * unit(i) + unit(j), 0, -1},
            };
            Poly next;
            for (const auto& [m, coef] : cur)
                for (const auto& tm : terms) {
                    const std::uint64_t nm = m + tm.dm;
                    if (exp_of(nm, i) > a[i] - 1 || exp_of(nm, j) > a[j] - 1) continue;
                    auto& dst = next[nm];
                    if (dst.size() < coef.size() + tm.tau) dst.resize(coef.size() + tm.tau);
                    for (size_t k = 0; k < coef.size(); ++k)
                        if (tm.sign > 0)
                            dst[k + tm.tau] += coef[k];
                        else
                            dst[k + tm.tau] -= coef[k];
                }
            cur = std::move(next);
        }

    std::vector<RatPoly> binom;
    for (int k = 0; k <= 2 * n; ++k) binom.push_back(binomial_poly(k));
    std::vector<RatPoly> rows;
    for (const auto& [m, coef] : cur) {
        int shift = 0;
        RatPoly b(1);
        for (int i = 0; i < n; ++i) {
            const int r = a[i] - 1 - exp_of(m, i);
            shift += r;
            b *= binom.at(r);
        }
        if (rows.size() < coef.size() + shift) rows.resize(coef.size() + shift);
        for (size_t k = 0; k < coef.size(); ++k)
            if (coef[k] != 0) rows[k + shift] += b * mpq_class(coef[k]);
    }
    std::vector<std::vector<mpq_class>> out;
    for (const auto& r : rows) out.push_back(r.coeffs());
    return TauTPoly(std::move(out));
}

RatPoly phi_homog(const std::vector<int>& a, int p) { return phi_homog(a).at_t(mpq_class(p)); }

// ------------------------------------------------ evaluation at q^eps points

namespace {

using u64 = std::uint64_t;

struct Zp {
    u64 p;
    u64 add(u64 x, u64 y) const { return (x + y) % p; }
    u64 sub(u64 x, u64 y) const { return (x + p - y) % p; }
    u64 mul(u64 x, u64 y) const { return x * y % p; }
    u64 pow(u64 x, u64 e) const {
        u64 r = 1;
        for (; e; e >>= 1, x = mul(x, x))
            if (e & 1) r = mul(r, x);
        return r;
    }
    u64 inv(u64 x) const { return pow(x, p - 2); }
    u64 from(long v) const { return static_cast<u64>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); }
};

// Primes just below 2^31, so products fit in 64 bits.
u64 nth_prime(size_t i) {
    static std::vector<u64> primes;
    static std::mutex mu;
    std::lock_guard lock(mu);
    u64 cand = primes.empty() ? (u64{1} << 31) - 1 : primes.back() - 2;
    while (primes.size() <= i) {
        mpz_class c(static_cast<unsigned long>(cand));
        if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) primes.push_back(cand);
        cand -= 2;
    }
    return primes[i];
}

// Newton form through (xs, ys).
std::vector<u64> newton(const Zp& f, const std::vector<u64>& xs, std::vector<u64> ys) {
    const size_t m = xs.size();
    for (size_t j = 1; j < m; ++j)
        for (size_t i = m - 1; i >= j; --i) {
            ys[i] = f.mul(f.sub(ys[i], ys[i - 1]), f.inv(f.sub(xs[i], xs[i - j])));
            if (i == j) break;
        }
    return ys;
}

u64 newton_eval(const Zp& f, const std::vector<u64>& xs, const std::vector<u64>& c, u64 x) {
    u64 r = 0;
    for (size_t i = c.size(); i-- > 0;) r = f.add(f.mul(r, f.sub(x, xs[i])), c[i]);
    return r;
}

std::vector<u64> newton_to_monomial(const Zp& f, const std::vector<u64>& xs, const std::vector<u64>& c) {
    std::vector<u64> r;
    for (size_t i = c.size(); i-- > 0;) {
        // r = r * (x - xs[i]) + c[i]
        std::vector<u64> nr(r.size() + 1, 0);
        for (size_t k = 0; k < r.size(); ++k) {
            nr[k + 1] = f.add(nr[k + 1], r[k]);
            nr[k] = f.sub(nr[k], f.mul(r[k], xs[i]));
        }
        nr[0] = f.add(nr[0], c[i]);
        r = std::move(nr);
    }
    return r;
}

// Phi_a for every a in `as` at z_k = q^eps_k (1 + k s), all mod p. Returns
// false when the residue formula degenerates at this point.
bool eval_perturbed(const Zp& f, const std::vector<int>& eps, u64 q, u64 s, const std::vector<std::vector<int>>& as,
                    std::vector<u64>& out) {
    const int N = static_cast<int>(eps.size()), n = N / 2;
    const u64 qi = f.inv(q);
    std::vector<u64> z(N + 1);
    for (int k = 1; k <= N; ++k) z[k] = f.mul(eps[k - 1] < 0 ? qi : q, f.add(1, f.mul(k % f.p, s)));
    auto E = [&](int k, int l) { return f.sub(z[k], z[l]); };
    auto Q = [&](int k, int l) { return f.sub(f.mul(q, z[k]), f.mul(qi, z[l])); };

    u64 pref = f.pow(f.inv(f.sub(q, qi)), static_cast<u64>(n) * (n - 1));
    for (int k = 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l) pref = f.mul(pref, Q(k, l));

    // rinv[m][k]: reciprocal of the w-denominator at w = z_k when the
    // variable has a_i = m.
    std::vector<std::vector<u64>> rinv(N + 1, std::vector<u64>(N + 1, 0));
    for (int m = 1; m <= N; ++m)
        for (int k = 1; k <= m; ++k) {
            u64 d = 1;
            for (int l = 1; l <= m; ++l)
                if (l != k) d = f.mul(d, E(k, l));
            for (int l = m + 1; l <= N; ++l) d = f.mul(d, Q(k, l));
            if (d == 0) return false;
            rinv[m][k] = f.inv(d);
        }
    std::vector<std::vector<u64>> v(N + 1, std::vector<u64>(N + 1, 0));
    for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) v[k][l] = f.mul(E(l, k), Q(k, l));

    out.assign(as.size(), 0);
    std::vector<int> kappa(n);
    for (size_t ai = 0; ai < as.size(); ++ai) {
        const auto& a = as[ai];
        u64 sum = 0;
        std::function<void(int, u64, unsigned)> rec = [&](int i, u64 prod, unsigned used) {
            if (i == n) {
                sum = f.add(sum, prod);
                return;
            }
            for (int k = 1; k <= a[i]; ++k) {
                if (used >> k & 1) continue;
                u64 p = f.mul(prod, rinv[a[i]][k]);
                for (int j = 0; j < i && p; ++j) p = f.mul(p, v[kappa[j]][k]);
                if (!p) continue;
                kappa[i] = k;
                rec(i + 1, p, used | (1u << k));
            }
        };
        rec(0, 1, 0);
        out[ai] = f.mul(pref, sum);
    }
    return true;
}

[[noreturn]] void alarm(const std::string& what) { throw std::logic_error("phi_multivariate_eval: " + what); }

// Laurent coefficients of q^D Phi_a(q^eps), lowest first, mod one prime.
std::vector<std::vector<u64>> laurent_mod(const Zp& f, const std::vector<int>& eps,
                                          const std::vector<std::vector<int>>& as, const std::vector<int>& dbound) {
    const int n = static_cast<int>(eps.size()) / 2;
    const int s_nodes = n * (n - 1) + 1, s_guard = 2;
    const int dmax = *std::max_element(dbound.begin(), dbound.end());
    const int q_nodes = 2 * dmax + 1 + 2;

    std::vector<u64> qs;
    std::vector<std::vector<u64>> at_q(as.size());  // value at s = 0 per q node
    for (u64 q = 2; static_cast<int>(qs.size()) < q_nodes; ++q) {
        std::vector<u64> ss;
        std::vector<std::vector<u64>> vals(as.size());
        std::vector<u64> out;
        for (u64 s = 1; static_cast<int>(ss.size()) < s_nodes + s_guard; ++s) {
            if (s > 1000) alarm("no regular perturbation points");
            if (!eval_perturbed(f, eps, q, s, as, out)) continue;
            ss.push_back(s);
            for (size_t i = 0; i < as.size(); ++i) vals[i].push_back(out[i]);
        }
        const std::vector<u64> xs(ss.begin(), ss.begin() + s_nodes);
        qs.push_back(q);
        for (size_t i = 0; i < as.size(); ++i) {
            const auto c = newton(f, xs, std::vector<u64>(vals[i].begin(), vals[i].begin() + s_nodes));
            for (int g = s_nodes; g < s_nodes + s_guard; ++g)
                if (newton_eval(f, xs, c, ss[g]) != vals[i][g]) alarm("value is not polynomial in the perturbation");
            at_q[i].push_back(f.mul(f.pow(q, dbound[i]), newton_eval(f, xs, c, 0)));
        }
    }
    std::vector<std::vector<u64>> res(as.size());
    for (size_t i = 0; i < as.size(); ++i) {
        const int m = 2 * dbound[i] + 1;
        const std::vector<u64> xs(qs.begin(), qs.begin() + m);
        const auto c = newton(f, xs, std::vector<u64>(at_q[i].begin(), at_q[i].begin() + m));
        for (int g = m; g < q_nodes; ++g)
            if (newton_eval(f, xs, c, qs[g]) != at_q[i][g])
                alarm("q-degree of Phi_a at q^eps exceeds d(a) for a of size " + std::to_string(n));
        res[i] = newton_to_monomial(f, xs, c);
        res[i].resize(m, 0);
    }
    return res;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& r, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        const mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class v(r1, t1);
    v.canonicalize();
    return v;
}

}  // namespace

std::vector<QFieldElem> phi_multivariate_eval(const std::vector<std::vector<int>>& as, const Matching& eps) {
    const int n = eps.size();
    if (n > 8) throw std::invalid_argument("phi_multivariate_eval: size above 8");
    std::vector<int> e(2 * n);
    for (int k = 1; k <= 2 * n; ++k) e[k - 1] = eps.is_opener(k) ? -1 : 1;
    std::vector<int> dbound;
    for (const auto& a : as) {
        if (static_cast<int>(a.size()) != n) throw std::invalid_argument("phi_multivariate_eval: size mismatch");
        dbound.push_back(box_count(Matching::from_sequence(a, n)));
    }

    // CRT over primes until the rational reconstruction stops changing.
    std::vector<std::vector<mpz_class>> residue(as.size());
    mpz_class modulus = 1;
    std::vector<std::vector<mpq_class>> prev;
    for (size_t pi = 0; pi < 10; ++pi) {
        const Zp f{nth_prime(pi)};
        const auto part = laurent_mod(f, e, as, dbound);
        const mpz_class p(static_cast<unsigned long>(f.p));
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        for (size_t i = 0; i < as.size(); ++i) {
            residue[i].resize(part[i].size(), 0);
            for (size_t k = 0; k < part[i].size(); ++k) {
                mpz_class diff = (mpz_class(static_cast<unsigned long>(part[i][k])) - residue[i][k]) % p;
                if (diff < 0) diff += p;
                residue[i][k] += modulus * ((diff * minv) % p);
            }
        }
        modulus *= p;
        if (pi == 0) continue;
        std::vector<std::vector<mpq_class>> cur(as.size());
        bool ok = true;
        for (size_t i = 0; i < as.size() && ok; ++i)
            for (const auto& r : residue[i]) {
                auto v = rational_reconstruct(r, modulus);
                if (!v) {
                    ok = false;
                    break;
                }
                cur[i].push_back(*v);
            }
        if (ok && cur == prev) {
            std::vector<QFieldElem> out;
            for (size_t i = 0; i < as.size(); ++i) out.push_back(QFieldElem::laurent(-dbound[i], cur[i]));
            return out;
        }
        prev = ok ? std::move(cur) : std::vector<std::vector<mpq_class>>{};
    }
    alarm("coefficients did not stabilize under modular reconstruction");
}

QFieldElem phi_multivariate_eval(const std::vector<int>& a, const Matching& eps) {
    return phi_multivariate_eval(std::vector<std::vector<int>>{a}, eps).front();
}

// ------------------------------------------------------------------ C(tau)

int CMatrix::index(const Matching& m) const {
    auto it = std::lower_bound(order.begin(), order.end(), m);
    if (it == order.end() || *it != m) throw std::out_of_range("CMatrix: matching of the wrong size");
    return static_cast<int>(it - order.begin());
}

CMatrix c_matrix(int n) {
    CMatrix m;
    m.n = n;
    m.order = enumerate_matchings(n);
    const size_t sz = m.order.size();
    std::vector<std::vector<int>> as;
    for (const auto& a : m.order) as.push_back(a.sequence());
    m.c.assign(sz, std::vector<RatPoly>(sz));
    for (size_t col = 0; col < sz; ++col) {
        const auto& pi = m.order[col];
        const int d = box_count(pi);
        const auto vals = phi_multivariate_eval(as, pi);
        for (size_t row = 0; row < sz; ++row) {
            auto tau = vals[row].to_tau();
            if (!tau)
                throw std::logic_error("c_matrix: Phi at q^eps is not a polynomial in tau: a = " + m.order[row].word() +
                                       ", eps = " + pi.word() + ": " + vals[row].to_string());
            const auto& cs = tau->coeffs();
            for (int k = 0; k < d && k < static_cast<int>(cs.size()); ++k)
                if (cs[k] != 0)
                    throw std::logic_error("c_matrix: value not divisible by tau^d at a = " + m.order[row].word() +
                                           ", eps = " + pi.word());
            std::vector<mpq_class> shifted(cs.size() > static_cast<size_t>(d) ? cs.begin() + d : cs.end(), cs.end());
            RatPoly entry(std::move(shifted));
            if (!entry.has_integer_coeffs())
                throw std::logic_error("c_matrix: non-integral entry at a = " + m.order[row].word() + ", eps = " +
                                       pi.word());
            m.c[row][col] = std::move(entry);
        }
    }
    if (auto v = cmatrix_violations(m); !v.empty()) throw std::logic_error("c_matrix: " + v.front());
    return m;
}

std::vector<std::string> cmatrix_violations(const CMatrix& m) {
    std::vector<std::string> out;
    for (size_t r = 0; r < m.order.size(); ++r)
        for (size_t c = 0; c < m.order.size(); ++c) {
            const auto& a = m.order[r];
            const auto& pi = m.order[c];
            const RatPoly& e = m.c[r][c];
            const std::string where = " at (" + a.word() + ", " + pi.word() + ")";
            const int gap = box_count(a) - box_count(pi);
            if (r == c) {
                if (e != RatPoly(1)) out.push_back("diagonal entry " + e.to_string("tau") + where);
                continue;
            }
            if (e.is_zero()) continue;
            if (!leq(pi, a)) {
                out.push_back("nonzero entry outside the order" + where);
                continue;
            }
            if (e.degree() > gap - 2) out.push_back("degree bound exceeded" + where);
            const RatPoly mirrored = e.scale_var(-1);
            if (e != (gap % 2 ? -mirrored : mirrored)) out.push_back("parity violated" + where);
        }
    return out;
}

std::vector<std::string> stability_violations(const CMatrix& small, const CMatrix& big) {
    std::vector<std::string> out;
    for (const auto& a : small.order)
        for (const auto& pi : small.order)
            if (big.at(nest(a, 1), nest(pi, 1)) != small.at(a, pi))
                out.push_back("unstable entry at (" + a.word() + ", " + pi.word() + ")");
    return out;
}

std::vector<std::vector<RatPoly>> c_inverse(const CMatrix& m) {
    const size_t sz = m.order.size();
    std::vector<size_t> ord(sz);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](size_t x, size_t y) { return box_count(m.order[x]) < box_count(m.order[y]); });
    // X = C^{-1}; in the sorted order C is lower unitriangular, so is X.
    for (size_t i = 0; i < sz; ++i) {
        if (m.c[ord[i]][ord[i]] != RatPoly(1)) throw std::logic_error("c_inverse: diagonal is not 1");
        for (size_t j = i + 1; j < sz; ++j)
            if (!m.c[ord[i]][ord[j]].is_zero()) throw std::logic_error("c_inverse: matrix is not triangular");
    }
    std::vector<std::vector<RatPoly>> x(sz, std::vector<RatPoly>(sz));
    for (size_t j = 0; j < sz; ++j) {
        x[ord[j]][ord[j]] = RatPoly(1);
        for (size_t i = j + 1; i < sz; ++i) {
            RatPoly acc;
            for (size_t k = j; k < i; ++k) {
                const RatPoly& cik = m.c[ord[i]][ord[k]];
                if (!cik.is_zero() && !x[ord[k]][ord[j]].is_zero()) acc += cik * x[ord[k]][ord[j]];
            }
            x[ord[i]][ord[j]] = -acc;
        }
    }
    return x;
}

TauSystem::TauSystem(int n) : m_(c_matrix(n)), inv_(c_inverse(m_)) {
    for (const auto& a : m_.order) phi_.push_back(phi_homog(a.sequence()));
}

TauTPoly TauSystem::psi(const Matching& pi) const {
    const int r = m_.index(pi);
    TauTPoly out;
    for (size_t a = 0; a < m_.order.size(); ++a)
        if (!inv_[r][a].is_zero()) out += TauTPoly::from_tau(inv_[r][a]) * phi_[a];
    return out;
}

const TauSystem& tau_system(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<TauSystem>> systems;
    std::lock_guard lock(mu);
    auto& slot = systems[n];
    if (!slot) slot = std::make_unique<TauSystem>(n);
    return *slot;
}

TauTPoly psi_tau(const Matching& pi) { return tau_system(pi.size()).psi(pi); }

RatPoly g_tau(const Matching& pi) { return psi_tau(pi).at_t(mpq_class(-pi.size())); }

bool first_root_check(const Matching& pi) {
    const RatPoly v = psi_tau(pi).at_t(mpq_class(-1));
    if (pi.partner(1) != pi.points()) return v.is_zero();
    if (pi.size() == 1) return v == RatPoly(1);
    return v == psi_tau(*strip_nesting(pi, 1)).at_t(mpq_class(0));
}

}  // namespace looplab
