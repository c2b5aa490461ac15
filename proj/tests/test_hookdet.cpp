#include <doctest.h>

#include "looplab/fixtures.hpp"
#include "looplab/hookdet.hpp"

using namespace looplab;

namespace {

Matching W(const std::string& w) { return Matching::from_word(w); }

// Backtracking over cells in row-major order.
struct Filler {
    const YoungDiagram& y;
    int lo, hi;
    bool strict_rows, strict_cols;
    std::vector<std::vector<int>> t;
    std::vector<Box> cells;
    long count = 0;

    Filler(const YoungDiagram& d, int l, int h, bool sr, bool sc)
        : y(d), lo(l), hi(h), strict_rows(sr), strict_cols(sc), cells(d.boxes()) {
        t.assign(d.num_rows() + 1, std::vector<int>(d.row(1) + 1, 0));
    }
    void run(size_t k = 0) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [x, c] = cells[k];
        int from = lo;
        if (c > 1) from = std::max(from, t[x - 1][c - 2] + (strict_rows ? 1 : 0));
        if (x > 1) from = std::max(from, t[x - 2][c - 1] + (strict_cols ? 1 : 0));
        for (int v = from; v <= hi; ++v) {
            t[x - 1][c - 1] = v;
            run(k + 1);
        }
    }
};

long brute(const YoungDiagram& y, int lo, int hi, bool sr, bool sc) {
    Filler f(y, lo, hi, sr, sc);
    f.run();
    return f.count;
}

RatPoly t_plus(long c) { return RatPoly(std::vector<mpq_class>{mpq_class(c), mpq_class(1)}); }

}  // namespace

TEST_CASE("hook-content polynomial") {
    CHECK(s_sigma(Matching::nested(3)) == RatPoly(1));
    for (int n = 1; n <= 5; ++n)
        for (const auto& sigma : enumerate_matchings(n)) {
            const auto s = s_sigma(sigma);
            const auto y = young_of(sigma);
            CHECK(s.degree() == std::max(box_count(sigma), 0));
            CHECK(s.leading() * mpq_class(hook_product(y)) == 1);
            // argument shifted by n - 1 counts semistandard tableaux with entries <= N
            for (int N = 0; N <= 4; ++N) CHECK(s(mpq_class(N + n - 1)) == brute(y, 1, N, false, true));
        }
    CHECK(s_sigma(W("()()"))(mpq_class(3 + 1)) == 3);
}

TEST_CASE("hook length formula over corners") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& y : diagrams_in_staircase(n)) {
            if (y.empty()) continue;
            mpq_class sum = 0;
            for (const auto& c : corners(y)) sum += mpq_class(1, hook_product(y.without(c)));
            mpq_class lhs(y.size(), hook_product(y));
            lhs.canonicalize();
            CHECK(lhs == sum);
        }
}

TEST_CASE("binomial determinant examples") {
    const auto pi = Matching::from_sequence({1, 2, 4, 7});
    CHECK(d_det(pi, 1) == 11);
    CHECK(d_det(pi, -5) == 7);
    CHECK(count_tableaux(young_of(pi), 4, TableauMode::Strict) == 11);
    CHECK(count_tableaux(young_of(pi), 1, TableauMode::Weak) == 7);
    for (int n = 1; n <= 5; ++n)
        for (int t = -6; t <= 6; ++t) CHECK(d_det(Matching::nested(n), t) == 1);
    CHECK(count_tableaux(YoungDiagram(), 0, TableauMode::Strict) == 1);
    CHECK(count_tableaux(YoungDiagram(), 3, TableauMode::Weak) == 1);
}

TEST_CASE("tableau counts agree with backtracking") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& y : diagrams_in_staircase(n))
            for (int b = 0; b <= 5; ++b) {
                CHECK(count_tableaux(y, b, TableauMode::Strict) == brute(y, 1, b, true, true));
                CHECK(count_tableaux(y, b, TableauMode::Weak) == brute(y, 0, b, false, false));
            }
}

TEST_CASE("determinant values count tableaux") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            CAPTURE(pi.word());
            const auto y = young_of(pi);
            const int d = box_count(pi);
            const RatPoly dp = d_det(pi);
            const int sign = d % 2 ? -1 : 1;
            for (int p = -8; p <= 8; ++p) {
                const mpq_class v = d_det(pi, p);
                CHECK(dp(mpq_class(p)) == v);
                if (p >= 0) CHECK(v == mpq_class(count_tableaux(y, p + n - 1, TableauMode::Strict)));
                if (p <= -n) CHECK(sign * v == mpq_class(count_tableaux(y, -p - n, TableauMode::Weak)));
                if (p < 0 && p >= 1 - n && !strip_nesting(pi, -p)) CHECK(v == 0);
            }
            CHECK(d_det(pi, -n) == sign);
        }
}

TEST_CASE("subleading coefficient") {
    // single box at size 2: t + 1
    CHECK(subleading(W("()()")).from_contents_rows == 1);
    CHECK(subleading(W("()()")).corner_average == 1);
    CHECK(subleading(W("()()")).corner_unhalved == 2);

    for (const auto& e : fixtures::size4_polynomials()) {
        const auto pi = W(e.word);
        if (box_count(pi) == 0) continue;
        CAPTURE(e.word);
        const auto s = subleading(pi);
        const mpq_class expect = e.poly.coeff(box_count(pi) - 1);
        CHECK(s.from_contents_rows == expect);
        CHECK(s.corner_average == expect);
        CHECK(s.corner_unhalved == 2 * expect);
        CHECK(subleading(conjugate(pi)).from_contents_rows == expect);
    }
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : enumerate_matchings(n))
            if (box_count(pi) > 0) CHECK(subleading(pi).corner_average == subleading(pi).from_contents_rows);

    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a + b <= 5; ++b) {
            const auto pi = W(Matching::nested(a).word() + Matching::nested(b).word());
            RatPoly prod(1);
            for (int i = 1; i <= a; ++i)
                for (int j = 1; j <= b; ++j) prod = prod * t_plus(i + j - 1) * RatPoly(mpq_class(1, i + j - 1));
            CHECK(subleading(pi).from_contents_rows == prod.coeff(a * b - 1));
        }
    CHECK_THROWS_AS(subleading(Matching::nested(3)), std::invalid_argument);
}

TEST_CASE("hook identities") {
    const auto box = hook_identities(YoungDiagram({1}));
    CHECK(box.twice_content == 0);
    CHECK(box.holds());
    const auto row = hook_identities(YoungDiagram({2}));
    CHECK(row.twice_content == 1);
    CHECK(row.corner_sum == 1);
    CHECK(row.domino_sum == 1);
    for (int n = 1; n <= 8; ++n)
        for (const auto& y : diagrams_in_staircase(n))
            if (!y.empty()) CHECK(hook_identities(y).holds());
}

TEST_CASE("inverse factorial determinants") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : enumerate_matchings(n))
            CHECK(inverse_factorial_det(pi.sequence()) == mpq_class(1, hook_product(young_of(pi))));
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            const auto r = domino_determinants(pi.sequence());
            CHECK(r.row_sum == r.product);
        }
}
