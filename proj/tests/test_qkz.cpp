#include <doctest.h>

#include "looplab/apoly.hpp"
#include "looplab/fixtures.hpp"
#include "looplab/fpl.hpp"
#include "looplab/hookdet.hpp"
#include "looplab/qkz.hpp"
#include "support.hpp"

using namespace looplab;

namespace {

Matching W(const std::string& w) { return Matching::from_word(w); }

// Full expansion of prod_i (1 + tau u_i)^p prod_{i<j} (u_j - u_i)(1 + tau u_j + u_i u_j)
// with no truncation, then the coefficient of prod u_i^(a_i - 1).
RatPoly phi_brute(const std::vector<int>& a, int p) {
    const int n = static_cast<int>(a.size());
    using Mono = std::vector<int>;
    std::map<Mono, RatPoly> poly{{Mono(n, 0), RatPoly(1)}};
    const RatPoly tau = RatPoly::x();
    auto times = [&](const std::vector<std::pair<Mono, RatPoly>>& factor) {
        std::map<Mono, RatPoly> next;
        for (const auto& [m, c] : poly)
            for (const auto& [dm, fc] : factor) {
                Mono nm = m;
                for (int i = 0; i < n; ++i) nm[i] += dm[i];
                next[nm] += c * fc;
            }
        poly = std::move(next);
    };
    auto e = [&](int i, int k) {
        Mono m(n, 0);
        m[i] = k;
        return m;
    };
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < p; ++k) times({{Mono(n, 0), RatPoly(1)}, {e(i, 1), tau}});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            times({{e(j, 1), RatPoly(1)}, {e(i, 1), RatPoly(-1)}});
            Mono ij(n, 0);
            ij[i] = ij[j] = 1;
            times({{Mono(n, 0), RatPoly(1)}, {e(j, 1), tau}, {ij, RatPoly(1)}});
        }
    Mono target(n);
    for (int i = 0; i < n; ++i) target[i] = a[i] - 1;
    auto it = poly.find(target);
    return it == poly.end() ? RatPoly() : it->second;
}

}  // namespace

TEST_CASE("rational functions in q") {
    const QFieldElem q = QFieldElem::q();
    const QFieldElem one(1);
    CHECK((q * q - one) / (q - one) == q + one);
    CHECK((q + one / q).to_tau() == RatPoly(std::vector<mpq_class>{0, -1}));
    const auto tau = QFieldElem(0) - (q + one / q);
    CHECK((tau * tau * tau).to_tau() == RatPoly::monomial(1, 3));
    CHECK_FALSE((q + one).to_tau());
    CHECK_FALSE((one / (q - one)).to_tau());
    CHECK(QFieldElem::laurent(-1, {1, 0, 1}) == q + one / q);
    CHECK((q / (q + one))(mpq_class(1)) == mpq_class(1, 2));
    CHECK_THROWS_AS(one / QFieldElem(0), std::domain_error);
}

TEST_CASE("constant-term polynomials") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i + 1;
        CHECK(phi_homog(id) == TauTPoly(1));
    }
    CHECK(phi_homog({1, 3}, 0) == RatPoly::x());
    for (int n = 1; n <= 3; ++n)
        for (const auto& pi : enumerate_matchings(n))
            for (int p = 0; p <= 2; ++p) {
                CAPTURE(pi.word());
                CHECK(phi_homog(pi.sequence(), p) == phi_brute(pi.sequence(), p));
                // integrating out p nested arches
                CHECK(phi_homog(pi.sequence(), p) == phi_homog(nest(pi, p).sequence(), 0));
            }
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            const auto phi = phi_homog(pi.sequence());
            CHECK(phi.degree_tau() == box_count(pi));
            CHECK(phi.tau_coeff(box_count(pi)) == d_det(pi));
        }
}

TEST_CASE("evaluation at q^eps") {
    CHECK(phi_multivariate_eval(std::vector<int>{1}, W("()")) == QFieldElem(1));
    for (int n = 2; n <= 3; ++n) {
        const auto all = enumerate_matchings(n);
        for (const auto& a : all)
            for (const auto& eps : all) {
                const auto v = phi_multivariate_eval(a.sequence(), eps);
                if (a == eps) {
                    CHECK(v.to_tau() == RatPoly::monomial(1, box_count(a)));
                } else if (!leq(eps, a)) {
                    CHECK(v.is_zero());
                }
            }
    }
}

TEST_CASE("C matrix properties") {
    for (int n = 1; n <= 4; ++n) CHECK(cmatrix_violations(tau_system(n).c()).empty());
    for (int n = 1; n <= 3; ++n) CHECK(stability_violations(tau_system(n).c(), tau_system(n + 1).c()).empty());
    // size 2 is the identity
    const auto& c2 = tau_system(2).c();
    CHECK(c2.at(W("()()"), W("(())")).is_zero());
    for (int n = 1; n <= 4; ++n) {
        const auto& sys = tau_system(n);
        const auto& m = sys.c();
        const size_t sz = m.order.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                RatPoly s;
                for (size_t k = 0; k < sz; ++k) s += sys.c_inv()[i][k] * m.c[k][j];
                CHECK(s == RatPoly(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("bivariate groundstate polynomials") {
    auto& cache = shared_cache();
    for (int n = 1; n <= 4; ++n) {
        CHECK(psi_tau(Matching::nested(n)) == TauTPoly(1));
        mpq_class total = 0;
        for (const auto& pi : enumerate_matchings(n)) {
            CAPTURE(pi.word());
            const auto psi = psi_tau(pi);
            const int d = box_count(pi);
            CHECK(psi.at_tau(1) == a_poly(pi, cache));
            CHECK(psi.degree_tau() == d);
            CHECK(psi.tau_coeff(d) == d_det(pi));
            CHECK(psi.negate_tau() * mpq_class(d % 2 ? -1 : 1) == psi);
            CHECK(first_root_check(pi));
            total += psi(1, 0);
        }
        CHECK(total == mpq_class(a_n(n)));
    }
    CHECK(psi_tau(W("(())")).at_t(-1) == RatPoly(1));
    CHECK(psi_tau(W("()()")).at_t(-1).is_zero());
}

TEST_CASE("G(tau) table") {
    for (const auto& e : fixtures::size4_g_tau()) {
        const auto pi = matching_of(YoungDiagram(e.diagram), 4);
        CAPTURE(pi.word());
        CHECK(g_tau(pi) == e.poly);
        CHECK(g_tau(conjugate(pi)) == e.poly);
    }
    for (int n = 1; n <= 4; ++n) {
        RatPoly sum_g, sum_psi;
        for (const auto& pi : enumerate_matchings(n)) {
            const RatPoly g = g_tau(pi);
            sum_g += g;
            sum_psi += psi_tau(pi).at_t(0).scale_var(-1);
            const int d = box_count(pi);
            const RatPoly signed_g = g * mpq_class(d % 2 ? -1 : 1);
            CHECK(signed_g.nonnegative_coeffs());
            CHECK(signed_g.has_integer_coeffs());
            CHECK(signed_g.leading() == 1);
            CHECK(g.degree() == d);
        }
        CHECK(sum_g == sum_psi);
    }
}
