#include "looplab/hookdet.hpp"

#include <map>
#include <stdexcept>

namespace looplab {

namespace {

mpq_class inverse_factorial(int k) {
    if (k < 0) return 0;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return mpq_class(1, f);
}

// Matrix 1/(a_i - j)! with row k (0-based, or -1 for none) scaled by w(i, j).
template <class W>
std::vector<std::vector<mpq_class>> scaled_matrix(const std::vector<int>& a, int k, W w) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            m[i - 1][j - 1] = inverse_factorial(a[i - 1] - j);
            if (i - 1 == k) m[i - 1][j - 1] *= w(i, j);
        }
    return m;
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpq_class content_sum(const YoungDiagram& y) {
    mpq_class s = 0;
    for (const auto& b : y.boxes()) s += content(b);
    return s;
}

mpq_class inverse_hook(const YoungDiagram& y) { return mpq_class(1, hook_product(y)); }

std::vector<std::vector<int>> subdiagrams(const YoungDiagram& y) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(y.num_rows());
    auto rec = [&](auto&& self, int x, int cap) -> void {
        if (x == y.num_rows()) {
            out.push_back(cur);
            return;
        }
        for (int len = 0; len <= std::min(cap, y.row(x + 1)); ++len) {
            cur[x] = len;
            self(self, x + 1, len);
        }
    };
    rec(rec, 0, y.num_rows() ? y.row(1) : 0);
    return out;
}

bool contains(const std::vector<int>& big, const std::vector<int>& small) {
    for (size_t x = 0; x < big.size(); ++x)
        if (small[x] > big[x]) return false;
    return true;
}

// big / small has at most one box in each row and each column.
bool rook_strip(const std::vector<int>& big, const std::vector<int>& small) {
    for (size_t x = 0; x < big.size(); ++x) {
        const int add = big[x] - small[x];
        if (add < 0 || add > 1) return false;
        if (add == 1 && x + 1 < big.size() && big[x + 1] - small[x + 1] == 1 && big[x + 1] == big[x]) return false;
    }
    return true;
}

}  // namespace

RatPoly s_sigma(const Matching& sigma) {
    const int n = sigma.size();
    const YoungDiagram y = young_of(sigma);
    RatPoly r = inverse_hook(y);
    for (const auto& b : y.boxes()) r *= RatPoly(std::vector<mpq_class>{mpq_class(1 - n + content(b)), 1});
    return r;
}

mpq_class d_det(const Matching& pi, const mpq_class& t) {
    const auto a = pi.sequence();
    const int n = pi.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = binomial_rational(t + i - 1, a[i - 1] - j);
    return determinant(std::move(m));
}

RatPoly d_det(const Matching& pi) {
    // Degree is at most d(pi); interpolate at d+1 integer points.
    const int d = box_count(pi);
    std::vector<std::pair<mpq_class, mpq_class>> pts;
    for (int t = 0; t <= d; ++t) pts.emplace_back(t, d_det(pi, mpq_class(t)));
    return interpolate(pts);
}

mpz_class count_tableaux(const YoungDiagram& y, int bound, TableauMode mode) {
    if (bound < 0) throw std::invalid_argument("count_tableaux: negative bound");
    const auto subs = subdiagrams(y);
    const size_t s = subs.size();
    // subs is ordered with the full diagram last and the empty one first
    std::vector<std::vector<size_t>> below(s);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) {
            const bool ok = mode == TableauMode::Strict ? rook_strip(subs[i], subs[j]) : contains(subs[i], subs[j]);
            if (ok) below[i].push_back(j);
        }
    // f[i]: fillings of subs[i] with the values used so far. Strict fillings
    // start from nothing; weak ones may put any order ideal at value 0.
    std::vector<mpz_class> f(s, mode == TableauMode::Strict ? 0 : 1);
    f[0] = 1;
    for (int v = 0; v < bound; ++v) {
        std::vector<mpz_class> g(s, 0);
        for (size_t i = 0; i < s; ++i)
            for (size_t j : below[i]) g[i] += f[j];
        f = std::move(g);
    }
    return f[s - 1];
}

Subleading subleading(const Matching& pi) {
    const YoungDiagram y = young_of(pi);
    if (y.empty()) throw std::invalid_argument("subleading: diagram is empty");
    const int n = pi.size();
    const mpq_class inv_h = inverse_hook(y);
    const mpq_class csum = content_sum(y);

    Subleading s;
    s.from_contents_rows = inv_h * csum;
    s.from_contents_columns = -inv_h * csum;
    s.corner_unhalved = 0;
    for (const auto& c : corners(y)) {
        const mpq_class h = inverse_hook(y.without(c));
        s.from_contents_rows += (n - c.y) * h;
        s.from_contents_columns += (n - c.x) * h;
        s.corner_unhalved += (2 * n - c.x - c.y) * h;
    }
    s.corner_average = s.corner_unhalved / 2;

    const auto a = pi.sequence();
    s.from_determinant = 0;
    for (int k = 0; k < n; ++k)
        s.from_determinant += determinant(scaled_matrix(
            a, k, [&](int i, int j) { return ratio((a[i - 1] - j) * (2 * i + j - a[i - 1] - 1), 2); }));

    if (s.from_contents_rows != s.from_contents_columns || s.from_contents_rows != s.from_determinant)
        throw std::logic_error("subleading(" + pi.word() + "): closed forms disagree: " +
                               s.from_contents_rows.get_str() + ", " + s.from_contents_columns.get_str() + ", " +
                               s.from_determinant.get_str());
    if (s.from_contents_rows <= 0)
        throw std::logic_error("subleading(" + pi.word() + ") is not positive: " + s.from_contents_rows.get_str());
    return s;
}

HookIdentities hook_identities(const YoungDiagram& y) {
    HookIdentities r;
    r.twice_content = 2 * content_sum(y) * inverse_hook(y);
    r.corner_sum = 0;
    for (const auto& c : corners(y)) r.corner_sum += (c.y - c.x) * inverse_hook(y.without(c));

    auto domino_terms = [](const YoungDiagram& d) {
        mpq_class s = 0;
        for (int x = 1; x <= d.num_rows(); ++x) {
            if (d.row(x) < 2 || d.row(x) - 2 < d.row(x + 1)) continue;
            auto rows = d.rows();
            rows[x - 1] -= 2;
            while (!rows.empty() && rows.back() == 0) rows.pop_back();
            s += inverse_hook(YoungDiagram(rows));
        }
        return s;
    };
    r.domino_sum = domino_terms(y) - domino_terms(y.transpose());
    return r;
}

mpq_class inverse_factorial_det(const std::vector<int>& a) {
    return determinant(scaled_matrix(a, -1, [](int, int) { return mpq_class(1); }));
}

DominoDeterminants domino_determinants(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    DominoDeterminants r;
    r.row_sum = 0;
    for (int k = 0; k < n; ++k)
        r.row_sum += determinant(
            scaled_matrix(a, k, [&](int i, int j) { return mpq_class((a[i - 1] - j) * (a[i - 1] - j - 1)); }));
    mpq_class coeff = 0;
    for (int k = 1; k <= n; ++k) coeff += (a[k - 1] - k) * (a[k - 1] - 2 * n + k - 1);
    r.product = coeff * inverse_factorial_det(a);
    return r;
}

}  // namespace looplab
