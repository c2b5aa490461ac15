#include "looplab/apoly.hpp"

#include <stdexcept>

namespace looplab {

RatPoly a_poly(const Matching& pi, GroundStateCache& cache, const APolyOptions& opt) {
    const int n = pi.size();
    const int d = box_count(pi);
    std::vector<std::pair<mpq_class, mpq_class>> nodes;
    for (int p = 0; p <= d; ++p) nodes.emplace_back(p, mpq_class(cache.psi_of(pi, p)));
    for (int p = d + 1; p <= d + 2 && n + p <= std::min(opt.guard_size_bound, cache.max_n()); ++p)
        nodes.emplace_back(p, mpq_class(cache.psi_of(pi, p)));
    RatPoly a = interpolate(nodes);
    const mpq_class lead(1, hook_product(young_of(pi)));
    if (a.degree() != std::max(d, 0) || a.leading() != lead)
        throw std::logic_error("a_poly(" + pi.word() + "): interpolant " + a.to_string() + " has degree " +
                               std::to_string(a.degree()) + ", expected degree " + std::to_string(d) +
                               " with leading coefficient " + lead.get_str());
    return a;
}

mpz_class g_value(const Matching& pi, const RatPoly& a) {
    const mpq_class v = a(mpq_class(-pi.size()));
    if (v.get_den() != 1) throw std::logic_error("G(" + pi.word() + ") = " + v.get_str() + " is not an integer");
    return v.get_num();
}

mpz_class g_value(const Matching& pi, GroundStateCache& cache) { return g_value(pi, a_poly(pi, cache)); }

std::vector<mpq_class> binomial_basis_coeffs(const RatPoly& p, int d) {
    // Solve sum_i c_i C(t+d-i, d) = p(t) at t = 0..d by exact elimination.
    const int m = d + 1;
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) a[k][i] = binomial_rational(mpq_class(k + d - i), d);
        a[k][m] = p(mpq_class(k));
    }
    for (int col = 0; col < m; ++col) {
        int piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) throw std::logic_error("binomial basis: singular system");
        std::swap(a[piv], a[col]);
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col] / a[col][col];
            for (int j = col; j <= m; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<mpq_class> c(m);
    for (int i = 0; i < m; ++i) c[i] = a[i][m] / a[i][i];
    if (p.degree() > d) throw std::invalid_argument("binomial basis: degree exceeds d");
    return c;
}

}  // namespace looplab
