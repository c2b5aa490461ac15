#include "looplab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "looplab/apoly.hpp"
#include "looplab/fpl.hpp"
#include "looplab/hookdet.hpp"
#include "looplab/multiplicity.hpp"
#include "looplab/qkz.hpp"

namespace looplab {

namespace {

mpz_class factorial(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

int parity_sign(long k) { return k % 2 == 0 ? 1 : -1; }

int sign_of(const mpq_class& v) { return sgn(v); }

std::string str(const mpq_class& v) { return rational_to_string(v); }
std::string str(const mpz_class& v) { return v.get_str(); }

RatPoly root_product(const MultiplicityVector& m, int n) {
    RatPoly prod(1);
    for (int p = 1; p <= n; ++p) prod *= pow(RatPoly(std::vector<mpq_class>{p, 1}), m.at(p));
    return prod;
}

bool nonnegative_integer(const TauTPoly& p) {
    for (const auto& row : p.rows())
        for (const auto& c : row)
            if (c < 0 || c.get_den() != 1) return false;
    return true;
}

bool nonnegative_integer(const RatPoly& p) { return p.has_integer_coeffs() && p.nonnegative_coeffs(); }

// Counterexamples are the failing verdicts' messages plus aggregate failures.
void collect(ConjectureReport& r, const std::vector<std::string>& aggregate_failures = {}) {
    for (const auto& v : r.verdicts)
        for (const auto& f : v.failures) r.counterexamples.push_back(render_word(v.pi) + ": " + f);
    for (const auto& f : aggregate_failures) r.counterexamples.push_back(f);
}

}  // namespace

nlohmann::json ConjectureReport::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["n"] = n;
    j["pass"] = pass();
    auto& vs = j["verdicts"] = nlohmann::json::array();
    for (const auto& v : verdicts) {
        nlohmann::json e{{"matching", render_word(v.pi)}, {"pass", v.pass()}};
        if (!v.failures.empty()) e["failures"] = v.failures;
        if (!v.data.empty()) e["data"] = v.data;
        vs.push_back(std::move(e));
    }
    if (!aggregate.empty()) j["aggregate"] = aggregate;
    j["counterexamples"] = counterexamples;
    if (seconds) j["seconds"] = *seconds;
    return j;
}

const RatPoly& Harness::a(const Matching& pi) {
    auto it = a_.find(pi);
    if (it == a_.end()) it = a_.emplace(pi, a_poly(pi, cache_)).first;
    return it->second;
}

mpz_class Harness::g(const Matching& pi) { return g_value(pi, a(pi)); }

const TauTPoly& Harness::psi(const Matching& pi) {
    auto it = psi_.find(pi);
    if (it == psi_.end()) it = psi_.emplace(pi, psi_tau(pi)).first;
    return it->second;
}

const std::vector<mpq_class>& tau_samples() {
    static const std::vector<mpq_class> s{mpq_class(1), mpq_class(1, 2), mpq_class(2), mpq_class(3)};
    return s;
}

ConjectureReport Harness::verify_c1(int n) {
    ConjectureReport r{"C1", n};
    for (const auto& pi : enumerate_matchings(n)) {
        Verdict v{pi};
        const RatPoly& A = a(pi);
        const int d = box_count(pi);
        MultiplicityVector m;
        try {
            m = multiplicities(pi);
        } catch (const std::logic_error& e) {
            v.failures.push_back(e.what());
            r.verdicts.push_back(std::move(v));
            continue;
        }
        const mpz_class scale = factorial(d);
        const RootReport rep = integer_root_report(A, 1, n - 1, scale);
        for (int p = 1; p <= n - 1; ++p) {
            const auto f = rep.multiplicity.find(p);
            const int found = f == rep.multiplicity.end() ? 0 : f->second;
            if (found != m.at(p))
                v.failures.push_back("root -" + std::to_string(p) + " has multiplicity " + std::to_string(found) +
                                     ", expected " + std::to_string(m.at(p)));
        }
        if (rep.residual_real_roots != 0)
            v.failures.push_back("quotient has " + std::to_string(rep.residual_real_roots) + " real roots");
        if (!rep.integer_after_scaling) v.failures.push_back("d!-scaled quotient is not integral");
        v.data["m"] = m.values;
        v.data["q"] = (rep.residual * mpq_class(scale)).to_string();
        r.verdicts.push_back(std::move(v));
    }
    collect(r);
    return r;
}

ConjectureReport Harness::verify_c2(int n) {
    ConjectureReport r{"C2", n};
    for (const auto& pi : enumerate_matchings(n)) {
        Verdict v{pi};
        const MultiplicityVector m = multiplicities(pi);
        auto cuts = nlohmann::json::array();
        for (int p = 1; p <= n - 1; ++p) {
            if (m.at(p) != 0) continue;
            const auto dec = decompose_at(pi, p);
            const std::string at = "p=" + std::to_string(p) + ": ";
            if (!dec) {
                v.failures.push_back(at + "m_p = 0 but no decomposition");
                continue;
            }
            const auto& [alpha, beta] = *dec;
            const mpq_class lhs = a(pi)(mpq_class(-p));
            const mpz_class g_alpha = g(alpha);
            const mpz_class a_beta = cache_.psi_of(beta, 0);
            const mpq_class rhs = g_alpha * a_beta;
            if (lhs != rhs) v.failures.push_back(at + "A(-p) = " + str(lhs) + " but G*A = " + str(rhs));
            if (sign_of(lhs) != parity_sign(box_count(alpha)))
                v.failures.push_back(at + "sign of A(-p) differs from (-1)^d(alpha)");
            cuts.push_back({{"p", p},
                            {"alpha", render_word(alpha)},
                            {"beta", render_word(beta)},
                            {"value", str(lhs)}});
        }
        v.data["cuts"] = std::move(cuts);
        r.verdicts.push_back(std::move(v));
    }
    collect(r);
    return r;
}

ConjectureReport Harness::verify_c3(int n) {
    ConjectureReport r{"C3", n};
    mpz_class sum = 0, sum_abs = 0;
    std::vector<Matching> all = enumerate_matchings(n);
    for (const auto& pi : all) {
        Verdict v{pi};
        const mpz_class G = g(pi);
        sum += G;
        sum_abs += abs(G);
        if (sgn(G) != parity_sign(box_count(pi))) v.failures.push_back("sign of G differs from (-1)^d");
        v.data["g"] = str(G);
        r.verdicts.push_back(std::move(v));
    }
    std::vector<std::string> bad;
    const int sign = parity_sign(static_cast<long>(n) * (n - 1) / 2);
    const mpz_class total = a_n(n);
    if (sum_abs != total) bad.push_back("sum |G| = " + str(sum_abs) + ", expected " + str(total));
    const mpz_class av = a_v(n);
    const mpz_class expected_sum = sign * av * av;
    if (sum != expected_sum) bad.push_back("sum G = " + str(sum) + ", expected " + str(expected_sum));

    const mpz_class g_chain = g(Matching::chain(n));
    const mpz_class expected_chain = n % 2 == 0 ? mpz_class(sign * a_v(n + 1) * a_v(n + 1))
                                                : mpz_class(sign * a_v(n) * a_v(n + 2));
    if (g_chain != expected_chain)
        bad.push_back("G of the chain = " + str(g_chain) + ", expected " + str(expected_chain));

    // A_{()^n}(t) = sum_pi A_pi(t - 1), and its value at t = 1 - n.
    RatPoly shifted_sum;
    for (const auto& pi : all) shifted_sum += a(pi).shift(-1);
    const bool sum_rule = shifted_sum == a(Matching::chain(n));
    if (!sum_rule) bad.push_back("polynomial sum rule fails");
    if (n % 2 == 0 && sum != 0) bad.push_back("even size but sum G is nonzero");
    if (n % 2 == 1 && n > 1 && sum != g(Matching::chain(n - 1)))
        bad.push_back("odd size but sum G differs from G of the shorter chain");

    r.aggregate = {{"sum_abs_g", str(sum_abs)},
                   {"a_n", str(total)},
                   {"sum_g", str(sum)},
                   {"g_chain", str(g_chain)},
                   {"polynomial_sum_rule", sum_rule}};
    collect(r, bad);
    return r;
}

ConjectureReport Harness::verify_c4(int n) {
    ConjectureReport r{"C4", n};
    for (const auto& pi : enumerate_matchings(n)) {
        Verdict v{pi};
        const RatPoly& A = a(pi);
        const int d = box_count(pi);
        if (!A.nonnegative_coeffs()) v.failures.push_back("A has a negative coefficient");
        const RootReport rep = integer_root_report(A, 1, n - 1, factorial(d));
        if (!rep.residual.nonnegative_coeffs()) v.failures.push_back("quotient has a negative coefficient");
        if (d >= 1) {
            try {
                const Subleading s = subleading(pi);
                if (s.from_contents_rows != A.coeff(d - 1))
                    v.failures.push_back("subleading closed form " + str(s.from_contents_rows) +
                                         " differs from the interpolated " + str(A.coeff(d - 1)));
                v.data["subleading"] = str(s.from_contents_rows);
            } catch (const std::logic_error& e) {
                v.failures.push_back(e.what());
            }
        }
        r.verdicts.push_back(std::move(v));
    }
    collect(r);
    return r;
}

std::vector<ConjectureReport> Harness::verify_tau(int n) {
    ConjectureReport c1{"C1tau", n}, c2{"C2tau", n}, c3{"C3tau", n}, c4{"C4tau", n};
    const std::vector<Matching> all = enumerate_matchings(n);
    RatPoly sum_g, sum_psi0;
    for (const auto& pi : all) {
        const TauTPoly& P = psi(pi);
        const int d = box_count(pi);
        const MultiplicityVector m = multiplicities(pi);
        const mpz_class dfact = factorial(d);

        Verdict v1{pi};
        if (P.at_tau(1) != a(pi)) v1.failures.push_back("tau = 1 slice differs from A(t)");
        try {
            const TauTPoly Q = P.exact_div_t(root_product(m, n)) * mpq_class(dfact);
            auto samples = nlohmann::json::object();
            for (const auto& tau0 : tau_samples()) {
                const RatPoly q0 = Q.at_tau(tau0);
                const int roots = q0.is_zero() ? -1 : sturm_real_roots(q0);
                if (roots != 0)
                    v1.failures.push_back("quotient at tau = " + str(tau0) + " has " +
                                          (roots < 0 ? std::string("vanished") : std::to_string(roots) + " real roots"));
                samples[str(tau0)] = roots;
            }
            // Limits tau -> infinity and tau -> 0, recorded for inspection.
            const RatPoly lead = Q.tau_coeff(Q.degree_tau());
            int low = 0;
            while (Q.tau_coeff(low).is_zero()) ++low;
            const RatPoly trail = Q.tau_coeff(low);
            v1.data["real_roots_at_samples"] = std::move(samples);
            v1.data["leading_tau_real_roots"] = lead.degree() > 0 ? sturm_real_roots(lead) : 0;
            v1.data["trailing_tau_real_roots"] = trail.degree() > 0 ? sturm_real_roots(trail) : 0;
            v1.data["quotient_nonnegative"] = nonnegative_integer(Q);
        } catch (const std::domain_error&) {
            v1.failures.push_back("root factor does not divide Psi(tau, t)");
        }
        c1.verdicts.push_back(std::move(v1));

        Verdict v2{pi};
        for (int p = 1; p <= n - 1; ++p) {
            if (m.at(p) != 0) continue;
            const std::string at = "p=" + std::to_string(p) + ": ";
            const auto dec = decompose_at(pi, p);
            if (!dec) {
                v2.failures.push_back(at + "m_p = 0 but no decomposition");
                continue;
            }
            const auto& [alpha, beta] = *dec;
            const RatPoly lhs = P.at_t(mpq_class(-p));
            const RatPoly rhs = psi(alpha).at_t(mpq_class(-alpha.size())) * psi(beta).at_t(0);
            if (lhs != rhs) v2.failures.push_back(at + "Psi(tau, -p) differs from G_alpha(tau) Psi_beta(tau)");
        }
        c2.verdicts.push_back(std::move(v2));

        Verdict v3{pi};
        const RatPoly G = P.at_t(mpq_class(-n));
        const RatPoly unsigned_g = G * mpq_class(parity_sign(d));
        if (!nonnegative_integer(unsigned_g)) v3.failures.push_back("(-1)^d G(tau) has a negative or fractional coefficient");
        if (unsigned_g.degree() != d || unsigned_g.leading() != 1)
            v3.failures.push_back("(-1)^d G(tau) does not have leading term tau^d");
        v3.data["g_tau"] = G.to_string("tau");
        c3.verdicts.push_back(std::move(v3));
        sum_g += G;
        sum_psi0 += P.at_t(0);

        Verdict v4{pi};
        if (!nonnegative_integer(P * mpq_class(dfact)))
            v4.failures.push_back("d! Psi(tau, t) has a negative or fractional coefficient");
        c4.verdicts.push_back(std::move(v4));
    }
    std::vector<std::string> bad3;
    const RatPoly sum_psi_neg = sum_psi0.scale_var(-1);
    if (sum_g != sum_psi_neg) bad3.push_back("sum G(tau) differs from sum Psi(-tau)");
    c3.aggregate = {{"sum_g_tau", sum_g.to_string("tau")}, {"sum_psi_neg_tau", sum_psi_neg.to_string("tau")}};
    collect(c1);
    collect(c2);
    collect(c3, bad3);
    collect(c4);
    return {c1, c2, c3, c4};
}

namespace {

const std::vector<std::string>& suite_order() {
    static const std::vector<std::string> s{"c1", "c2", "c3", "c4", "tau"};
    return s;
}

}  // namespace

void validate(const RunConfig& cfg) {
    if (cfg.suites.empty()) throw UsageError("no suites selected");
    for (const auto& s : cfg.suites)
        if (std::find(suite_order().begin(), suite_order().end(), s) == suite_order().end())
            throw UsageError("unknown suite '" + s + "' (expected c1, c2, c3, c4, tau)");
    if (cfg.n_min < 1) throw UsageError("n-min must be at least 1");
    if (cfg.n_max < cfg.n_min) throw UsageError("n-max is below n-min");
    const int bound = cfg.extended ? 5 : 4;
    if (cfg.n_max > bound)
        throw UsageError("n-max " + std::to_string(cfg.n_max) + " exceeds " + std::to_string(bound) +
                         (cfg.extended ? "" : " (use --extended for 5)"));
}

RunResult run_report(const RunConfig& cfg) {
    validate(cfg);
    const std::set<std::string> wanted(cfg.suites.begin(), cfg.suites.end());
    GroundStateCache cache(GroundStateCache::resolve_dir(cfg.cache_dir));
    Harness h(cache);

    RunResult out;
    nlohmann::json& j = out.report;
    j["schema"] = 1;
    std::vector<std::string> suites;
    for (const auto& s : suite_order())
        if (wanted.count(s)) suites.push_back(s);
    j["config"] = {{"n_min", cfg.n_min}, {"n_max", cfg.n_max}, {"suites", suites}, {"extended", cfg.extended}};
    j["reports"] = nlohmann::json::array();
    bool pass = true;
    try {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n)
            for (const auto& s : suites) {
                const auto start = std::chrono::steady_clock::now();
                std::vector<ConjectureReport> reps;
                if (s == "c1") reps.push_back(h.verify_c1(n));
                if (s == "c2") reps.push_back(h.verify_c2(n));
                if (s == "c3") reps.push_back(h.verify_c3(n));
                if (s == "c4") reps.push_back(h.verify_c4(n));
                if (s == "tau") reps = h.verify_tau(n);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                for (auto& r : reps) {
                    if (cfg.timing) r.seconds = secs;  // the four tau reports share one run
                    pass = pass && r.pass();
                    j["reports"].push_back(r.to_json());
                }
            }
    } catch (const ResourceError& e) {
        j["error"] = {{"size", e.size()}, {"message", e.what()}};
        pass = false;
    }
    j["pass"] = pass;
    out.pass = pass;
    return out;
}

}  // namespace looplab
