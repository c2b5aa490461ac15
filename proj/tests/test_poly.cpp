#include <doctest.h>

#include <random>
#include <set>

#include "looplab/poly.hpp"

using namespace looplab;

namespace {

RatPoly P(std::initializer_list<long> asc) {
    std::vector<mpq_class> v;
    for (long c : asc) v.emplace_back(c);
    return RatPoly(v);
}

RatPoly lin(long c) { return P({c, 1}); }  // t + c

RatPoly random_poly(std::mt19937& rng, int deg) {
    std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
    std::vector<mpq_class> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(d(rng), den(rng));
    for (auto& c : v) c.canonicalize();
    return RatPoly(v);
}

}  // namespace

TEST_CASE("basic arithmetic") {
    CHECK(RatPoly().degree() == RatPoly::kZeroDegree);
    CHECK((lin(1) * lin(-1)) == P({-1, 0, 1}));
    CHECK((lin(1) - lin(1)).is_zero());
    CHECK(P({1, 2, 3})(mpq_class(2)) == 17);
    CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
    CHECK(P({0, 0, 1}).shift(1) == P({1, 2, 1}));
    CHECK(P({1, 1}).scale_var(2) == P({1, 2}));
    CHECK(binomial_poly(2) == RatPoly(std::vector<mpq_class>{0, mpq_class(-1, 2), mpq_class(1, 2)}));
    CHECK(binomial_poly(-1).is_zero());
    CHECK(binomial_rational(-3, 2) == 6);
    CHECK(binomial_rational(5, 7) == 0);
}

TEST_CASE("divmod identity on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(rng, trial % 7);
        auto b = random_poly(rng, trial % 4);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK((a * b).exact_div(b) == a);
    }
    CHECK_THROWS_AS(P({1, 1}).exact_div(P({2, 1})), std::domain_error);
    CHECK_THROWS_AS(P({1}).divmod(RatPoly()), std::domain_error);
    CHECK(RatPoly().exact_div(P({2, 1})).is_zero());
}

TEST_CASE("gcd and squarefree part") {
    auto g = gcd(lin(1) * lin(2) * lin(2), lin(2) * lin(3));
    CHECK(g == lin(2));
    CHECK(squarefree_part(pow(lin(1), 3) * pow(lin(-4), 2) * mpq_class(5)) == lin(1) * lin(-4));
}

TEST_CASE("interpolation") {
    CHECK(interpolate({{0, 1}, {1, 1}}) == RatPoly(1));
    CHECK(interpolate({{0, 3}, {1, 4}, {2, 5}}) == lin(3));
    CHECK_THROWS_AS(interpolate({{0, 1}, {0, 2}}), std::invalid_argument);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly(rng, trial % 9);
        std::vector<std::pair<mpq_class, mpq_class>> pts;
        for (int i = 0; i <= std::max(0, p.degree()) + 2; ++i) {
            mpq_class x(i * 3 - 5, 2);
            pts.emplace_back(x, p(x));
        }
        CHECK(interpolate(pts) == p);
    }
    // the staircase entry of the size-4 table from its values at 0..6
    auto target = lin(1) * lin(3) * P({420, 334, 155, 32, 4}) * mpq_class(1, 180);
    std::vector<std::pair<mpq_class, mpq_class>> pts;
    for (int p = 0; p <= 6; ++p) pts.emplace_back(p, target(p));
    CHECK(interpolate(pts) == target);
}

TEST_CASE("sturm counts") {
    CHECK(sturm_real_roots(P({1, 0, 1})) == 0);
    CHECK(sturm_real_roots(P({-2, 0, 1})) == 2);
    CHECK(sturm_real_roots(P({-2, 0, 1}), mpq_class(0)) == 1);
    CHECK(sturm_real_roots(P({-2, 0, 1}), std::nullopt, mpq_class(0)) == 1);
    CHECK(sturm_real_roots(P({5})) == 0);
    // Oracle: products of distinct known linear factors with repeats.
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> root(-6, 6), rep(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        RatPoly p(1);
        std::set<int> roots;
        for (int k = 0; k < 4; ++k) {
            int r = root(rng);
            roots.insert(r);
            p *= pow(lin(-r), rep(rng));
        }
        p *= P({1, 1, 1});  // no real roots
        CHECK(sturm_real_roots(p) == static_cast<int>(roots.size()));
        int lo = root(rng), hi = root(rng);
        if (lo > hi) std::swap(lo, hi);
        int expected = 0;
        for (int r : roots)
            if (r > lo && r <= hi) ++expected;
        CHECK(sturm_real_roots(p, mpq_class(lo), mpq_class(hi)) == expected);
    }
}

TEST_CASE("integer root report") {
    auto p = lin(1) * pow(lin(2), 2) * lin(3) * mpq_class(1, 12);
    auto rep = integer_root_report(p, 1, 3, 24);
    CHECK(rep.multiplicity == std::map<int, int>{{1, 1}, {2, 2}, {3, 1}});
    CHECK(rep.residual.degree() == 0);
    CHECK(rep.integer_after_scaling);
    auto none = integer_root_report(P({1, 0, 1}), 1, 5, 1);
    CHECK(none.multiplicity.empty());
    CHECK(none.residual_real_roots == 0);
}

TEST_CASE("json round trip") {
    auto p = RatPoly(std::vector<mpq_class>{mpq_class(1, 3), 0, -7});
    auto j = p.to_json();
    CHECK(j["var"] == "t");
    CHECK(j["coeffs"][0] == "1/3");
    CHECK(RatPoly::from_json(j) == p);
    TauTPoly b(std::vector<std::vector<mpq_class>>{{1, 2}, {}, {mpq_class(-1, 2)}});
    CHECK(TauTPoly::from_json(b.to_json()) == b);
    CHECK(b.to_json()["vars"][0] == "tau");
}

TEST_CASE("bivariate operations") {
    // (tau + t)^2
    TauTPoly s(std::vector<std::vector<mpq_class>>{{0, 1}, {1}});
    auto sq = s * s;
    CHECK(sq.coeff(1, 1) == 2);
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.coeff(0, 2) == 1);
    CHECK(sq(2, 3) == 25);
    CHECK(sq.at_tau(1) == P({1, 2, 1}));
    CHECK(sq.at_t(1) == P({1, 2, 1}));
    CHECK(sq.negate_tau()(2, 3) == 1);
    CHECK(sq.shift_t(1)(0, 0) == 1);
    auto prod = sq * TauTPoly::from_t(lin(1));
    CHECK(prod.exact_div_t(lin(1)) == sq);
    CHECK_THROWS_AS(sq.exact_div_t(lin(1)), std::domain_error);
    CHECK((sq - sq).is_zero());
}
