// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// Usage: acceptance [cache-dir]   (LOOPLAB_CACHE overrides the directory)
//
// The first run solves groundstates up to size 15 (several minutes); later
// runs load them from the cache directory.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "looplab/apoly.hpp"
#include "looplab/cpl.hpp"
#include "looplab/fixtures.hpp"
#include "looplab/fpl.hpp"
#include "looplab/harness.hpp"
#include "looplab/hookdet.hpp"
#include "looplab/multiplicity.hpp"
#include "looplab/qkz.hpp"

using namespace looplab;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
struct Outcome {
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Check = std::function<void(Outcome&)>;

GroundStateCache* g_cache = nullptr;
Harness* g_harness = nullptr;

mpz_class factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

// 1. Size-4 polynomials against the published table.
void size4_table(Outcome& o) {
    std::map<Matching, RatPoly> expected;
    for (const auto& e : fixtures::size4_polynomials()) {
        const Matching pi = Matching::from_word(e.word);
        expected[pi] = e.poly;
        expected[conjugate(pi)] = e.poly;
    }
    o.expect(expected.size() == 14, "table does not cover 14 matchings");
    for (const auto& pi : enumerate_matchings(4))
        o.expect(g_harness->a(pi) == expected.at(pi), pi.word() + ": A(t) = " + g_harness->a(pi).to_string());
    o.summary = "14 matchings, 10 table entries";
}

// 2. G integers and G(tau) polynomials.
void g_tables(Outcome& o) {
    std::map<std::vector<int>, long> g;
    for (const auto& e : fixtures::size4_g_values()) {
        g[e.diagram] = e.value;
        g[YoungDiagram(e.diagram).transpose().rows()] = e.value;
    }
    std::map<std::vector<int>, RatPoly> gt;
    for (const auto& e : fixtures::size4_g_tau()) gt[e.diagram] = e.poly;
    o.expect(g.size() == 14 && gt.size() == 14, "tables do not cover 14 diagrams");
    for (const auto& pi : enumerate_matchings(4)) {
        const auto rows = young_of(pi).rows();
        o.expect(g_harness->g(pi) == g.at(rows), pi.word() + ": G = " + g_harness->g(pi).get_str());
        o.expect(g_tau(pi) == gt.at(rows), pi.word() + ": G(tau) = " + g_tau(pi).to_string("tau"));
    }
    const RatPoly tau = RatPoly::x();
    o.expect(g_tau(matching_of(YoungDiagram({1}), 4)) == -tau, "single box");
    o.expect(g_tau(matching_of(YoungDiagram({2, 1}), 4)) == tau * mpq_class(-2) - pow(tau, 3), "{2,1}");
    o.expect(g_tau(matching_of(YoungDiagram({2, 2}), 4)) == pow(tau, 4), "2x2");
    o.expect(g_tau(matching_of(YoungDiagram({3, 2, 1}), 4)) == pow(tau, 2) * mpq_class(3) + pow(tau, 4) * mpq_class(5) + pow(tau, 6),
             "{3,2,1}");
    o.summary = "14 integers, 14 polynomials";
}

// 3. FPL census equals the groundstate.
void rs_cross_check(Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
        const FplCensus c = fpl_census(n);
        const auto gs = g_cache->get(n);
        for (const auto& [pi, v] : gs->components())
            o.expect(c.counts.at(pi) == v, "n=" + std::to_string(n) + " " + pi.word());
        o.expect(c.total() == a_n(n), "n=" + std::to_string(n) + " total");
    }
    const auto g3 = g_cache->get(3);
    const std::vector<std::pair<std::string, int>> printed{
        {"()()()", 2}, {"(()())", 2}, {"(())()", 1}, {"()(())", 1}, {"((()))", 1}};
    for (const auto& [w, v] : printed) o.expect((*g3)[Matching::from_word(w)] == v, "n=3 vector at " + w);
    o.summary = "n <= 6, A_6 = " + a_n(6).get_str();
}

// 4. Product formulas.
void product_formulas(Outcome& o) {
    for (int n = 1; n <= 8; ++n) o.expect(g_cache->get(n)->total() == a_n(n), "sum at n=" + std::to_string(n));
    o.expect(a_n(8) == 10850216, "A_8");
    for (int k = 1; k <= 10; ++k) o.expect(a_v(2 * k) == 0, "A^V at " + std::to_string(2 * k));
    o.summary = "n <= 8";
}

// 5. Rule A equals rule B.
void multiplicity_rules(Outcome& o) {
    long cases = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            o.expect(m_rule_a(pi) == m_rule_b(pi), pi.word());
            ++cases;
        }
    o.expect(multiplicities(fixtures::pi0()).values == std::vector<int>{0, 1, 2, 2, 2, 1, 1}, "eight-arch example");
    o.summary = std::to_string(cases) + " matchings";
}

// 6. Conjecture suites, n <= 4 plus size 5.
void conjecture_suites(Outcome& o) {
    int reports = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& r :
             {g_harness->verify_c1(n), g_harness->verify_c2(n), g_harness->verify_c3(n), g_harness->verify_c4(n)}) {
            ++reports;
            for (const auto& c : r.counterexamples) o.expect(false, r.id + " n=" + std::to_string(n) + " " + c);
        }
    o.summary = std::to_string(reports) + " reports, n <= 5";
}

// 7. Binomial determinant against tableau counts.
void determinant_tableaux(Outcome& o) {
    long values = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            const auto y = young_of(pi);
            const int sign = parity_sign(box_count(pi));
            const RatPoly dp = d_det(pi);
            for (int p = -8; p <= 8; ++p) {
                const mpq_class v = d_det(pi, p);
                const std::string at = pi.word() + " p=" + std::to_string(p);
                o.expect(dp(mpq_class(p)) == v, at + " polynomial");
                if (p >= 0) o.expect(v == mpq_class(count_tableaux(y, p + n - 1, TableauMode::Strict)), at + " strict");
                if (p <= -n) o.expect(sign * v == mpq_class(count_tableaux(y, -p - n, TableauMode::Weak)), at + " weak");
                ++values;
            }
            o.expect(d_det(pi, -n) == sign, pi.word() + " at -n");
        }
    const Matching a = Matching::from_sequence({1, 2, 4, 7});
    o.expect(d_det(a, 1) == 11, "value 11");
    o.expect(d_det(a, -5) == 7, "value 7");
    o.summary = std::to_string(values) + " values";
}

// 8. Hook identities and the subleading coefficient.
void hooks_and_subleading(Outcome& o) {
    const auto diagrams = diagrams_in_staircase(8);
    for (const auto& y : diagrams) {
        if (y.empty()) continue;
        o.expect(hook_identities(y).holds(), "hook identity fails");
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            const int d = box_count(pi);
            if (d == 0) continue;
            const Subleading s = subleading(pi);
            o.expect(s.from_contents_rows == g_harness->a(pi).coeff(d - 1), pi.word() + " coefficient");
            o.expect(s.corner_average == s.from_contents_rows, pi.word() + " corner form");
            o.expect(s.from_contents_rows > 0, pi.word() + " positivity");
        }
    o.summary = std::to_string(diagrams.size()) + " diagrams";
}

// 9. First root.
void first_root(Outcome& o) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : enumerate_matchings(n)) o.expect(first_root_check(pi), pi.word() + " Psi(tau,-1)");
    for (int n = 1; n <= 5; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            const bool outer = pi.partner(1) == pi.points();
            const bool root = g_harness->a(pi)(mpq_class(-1)) == 0;
            o.expect(root == !outer, pi.word() + " A(-1)");
        }
    o.summary = "psi_tau n <= 4, a_poly n <= 5";
}

// 10. Basis change matrix and the end-to-end tau = 1 check.
void basis_change(Outcome& o) {
    std::vector<CMatrix> ms;
    for (int n = 1; n <= 4; ++n) {
        ms.push_back(tau_system(n).c());
        for (const auto& v : cmatrix_violations(ms.back())) o.expect(false, "n=" + std::to_string(n) + " " + v);
    }
    for (size_t i = 0; i + 1 < ms.size(); ++i)
        for (const auto& v : stability_violations(ms[i], ms[i + 1])) o.expect(false, "stability " + v);
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : enumerate_matchings(n)) {
            const TauTPoly p = psi_tau(pi);
            o.expect(p.at_tau(1) == g_harness->a(pi), pi.word() + " tau = 1 slice");
            TauTPoly flipped = p.negate_tau();
            if (box_count(pi) % 2) flipped *= mpq_class(-1);
            o.expect(flipped == p, pi.word() + " parity");
        }
    o.summary = "n <= 4";
}

// 11. Polynomial sum rule and its corollaries.
void sum_rule(Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
        RatPoly sum;
        mpz_class gsum = 0;
        for (const auto& pi : enumerate_matchings(n)) {
            sum += g_harness->a(pi).shift(-1);
            gsum += g_harness->g(pi);
        }
        const std::string at = "n=" + std::to_string(n);
        o.expect(sum == g_harness->a(Matching::chain(n)), at + " polynomial identity");
        if (n % 2 == 0) o.expect(gsum == 0, at + " sum G");
        if (n % 2 == 1 && n > 1) o.expect(gsum == g_harness->g(Matching::chain(n - 1)), at + " sum G");
    }
    o.summary = "n <= 4";
}

// 12. Eight-arch data: internal consistency of the printed coefficients only.
void eight_arch_fixture(Outcome& o) {
    const Matching pi = fixtures::pi0();
    const int d = box_count(pi);
    const MultiplicityVector m = multiplicities(pi);
    const RatPoly printed = fixtures::pi0_root_factor() * fixtures::pi0_sextic_printed();
    o.expect(printed.degree() == d, "degree");
    o.expect(printed.leading() == mpq_class(1) / hook_product(young_of(pi)), "leading coefficient 1/H");
    o.expect(printed.nonnegative_coeffs(), "positivity of A");
    const RootReport rep = integer_root_report(printed, 1, 7, factorial(d));
    for (int p = 1; p <= 7; ++p) {
        const auto f = rep.multiplicity.find(p);
        o.expect((f == rep.multiplicity.end() ? 0 : f->second) == m.at(p), "root -" + std::to_string(p));
    }
    o.expect(rep.integer_after_scaling, "integral quotient");
    o.expect(fixtures::pi0_sextic_printed().nonnegative_coeffs(), "positivity of the sextic");

    const TauTPoly psi = fixtures::pi0_psi_tau();
    o.expect(psi.degree_tau() == d, "tau degree");
    TauTPoly flipped = psi.negate_tau() * mpq_class(parity_sign(d));
    o.expect(flipped == psi, "tau parity");
    bool nonneg = true;
    for (const auto& row : psi.rows())
        for (const auto& c : row) nonneg = nonneg && c >= 0;
    o.expect(nonneg, "positivity of Psi");
    o.expect(psi.tau_coeff(d) == d_det(pi), "tau-leading coefficient equals the binomial determinant");
    // The printed constant 123120 is inconsistent with the bivariate data;
    // the slice pins the corrected value.
    o.expect(psi.at_tau(1) == fixtures::pi0_a_poly(), "tau = 1 slice against the corrected sextic");
    const int printed_roots = sturm_real_roots(fixtures::pi0_sextic_printed());
    const int corrected_roots = sturm_real_roots(fixtures::pi0_sextic());
    o.expect(corrected_roots == 0, "corrected sextic has real roots");
    std::ostringstream s;
    s << "sextic real roots: printed " << printed_roots << ", corrected " << corrected_roots;
    o.summary = s.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path fallback = argc > 1 ? argv[1] : "acceptance-cache";
    GroundStateCache cache(GroundStateCache::resolve_dir(fallback));
    Harness harness(cache);
    g_cache = &cache;
    g_harness = &harness;

    const std::vector<std::pair<std::string, Check>> criteria{
        {"size-4 polynomial table", size4_table},
        {"G and G(tau) tables", g_tables},
        {"FPL census equals groundstate", rs_cross_check},
        {"product formulas", product_formulas},
        {"multiplicity rules agree", multiplicity_rules},
        {"conjecture suites C1-C4", conjecture_suites},
        {"determinant counts tableaux", determinant_tableaux},
        {"hook identities and subleading term", hooks_and_subleading},
        {"first root", first_root},
        {"basis change and tau = 1 slice", basis_change},
        {"polynomial sum rule", sum_rule},
        {"eight-arch fixture consistency", eight_arch_fixture},
    };
    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.failures.empty();
        all = all && pass;
        std::cout << "criterion " << (i + 1) << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
        if (!o.summary.empty()) std::cout << " (" << o.summary << ")";
        std::cout << " [" << static_cast<long>(secs * 1000) / 1000.0 << " s]\n";
        for (size_t k = 0; k < o.failures.size() && k < 10; ++k) std::cout << "    " << o.failures[k] << "\n";
        if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
