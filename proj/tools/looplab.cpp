// looplab command line: FPL census, CPL groundstates, polynomials and the
// conjecture harness. Exit codes: 0 success / all pass, 1 a suite failed or
// a resource bound was hit, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "looplab/apoly.hpp"
#include "looplab/cpl.hpp"
#include "looplab/fpl.hpp"
#include "looplab/harness.hpp"
#include "looplab/matching.hpp"
#include "looplab/qkz.hpp"

using namespace looplab;

namespace {

constexpr int kUsage = 2;

nlohmann::json big(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

// Writes to the file, or stdout when the path is empty.
void emit(const nlohmann::json& j, const std::string& out, int indent = -1) {
    const std::string text = j.dump(indent) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    os << text;
    if (!os) throw std::runtime_error("cannot write " + out);
}

std::optional<std::filesystem::path> cache_dir(const std::string& flag) {
    return GroundStateCache::resolve_dir(flag.empty() ? std::nullopt : std::optional<std::filesystem::path>(flag));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on FPL/CPL link patterns and their polynomials"};
    app.require_subcommand(1);

    // fpl census
    auto* fpl = app.add_subcommand("fpl", "Fully packed loop enumeration");
    fpl->require_subcommand(1);
    auto* census = fpl->add_subcommand("census", "Count FPLs by link pattern");
    int census_n = 0, threads = 1;
    std::string census_out;
    census->add_option("--n", census_n, "Grid size")->required()->check(CLI::Range(1, 8));
    census->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 64));
    census->add_option("--out", census_out, "Output file (default stdout)");

    // cpl groundstate
    auto* cpl = app.add_subcommand("cpl", "Completely packed loop model");
    cpl->require_subcommand(1);
    auto* gs = cpl->add_subcommand("groundstate", "Exact integer groundstate");
    int gs_n = 0;
    std::string gs_out, gs_cache;
    gs->add_option("--n", gs_n, "Number of arches")->required()->check(CLI::Range(1, kDefaultMaxGroundstateSize));
    gs->add_option("--out", gs_out, "Output file (default stdout)");
    gs->add_option("--cache", gs_cache, "Cache directory");

    // apoly
    auto* ap = app.add_subcommand("apoly", "A_pi(t) by interpolation");
    std::string ap_matching, ap_out, ap_cache;
    ap->add_option("--matching", ap_matching, "Matching (word, a:..., or m:...)")->required();
    ap->add_option("--out", ap_out, "Output file (default stdout)");
    ap->add_option("--cache", ap_cache, "Cache directory");

    // qkz psi
    auto* qkz = app.add_subcommand("qkz", "Tau-deformed polynomials");
    qkz->require_subcommand(1);
    auto* psi = qkz->add_subcommand("psi", "Psi_pi(tau, t)");
    std::string psi_matching, psi_out;
    psi->add_option("--matching", psi_matching, "Matching (word, a:..., or m:...)")->required();
    psi->add_option("--out", psi_out, "Output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the conjecture suites");
    RunConfig cfg;
    std::string verify_out, verify_cache;
    verify->add_option("--n-min", cfg.n_min, "Smallest size")->capture_default_str();
    verify->add_option("--n-max", cfg.n_max, "Largest size")->capture_default_str();
    verify->add_option("--suites", cfg.suites, "Comma separated: c1,c2,c3,c4,tau")->delimiter(',');
    verify->add_flag("--extended", cfg.extended, "Allow size 5 (needs groundstates up to size 15)");
    verify->add_flag("--timing", cfg.timing, "Record wall time per report");
    verify->add_option("--cache", verify_cache, "Cache directory (LOOPLAB_CACHE overrides)");
    verify->add_option("--out", verify_out, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (census->parsed()) {
            const FplCensus c = fpl_census(census_n, threads);
            nlohmann::json counts = nlohmann::json::object();
            for (const auto& [m, k] : c.counts) counts[m.word()] = big(k);
            emit({{"n", census_n}, {"counts", counts}}, census_out);
            return 0;
        }
        if (gs->parsed()) {
            GroundStateCache cache(cache_dir(gs_cache));
            const auto g = cache.get(gs_n);
            if (gs_out.empty())
                emit(groundstate_json(*g), "");
            else
                save_groundstate(*g, gs_out);
            return 0;
        }
        if (ap->parsed()) {
            const Matching pi = parse_matching(ap_matching);
            GroundStateCache cache(cache_dir(ap_cache));
            emit(a_poly(pi, cache).to_json(), ap_out);
            return 0;
        }
        if (psi->parsed()) {
            const Matching pi = parse_matching(psi_matching);
            if (pi.size() > 5) {
                std::cerr << "qkz psi: sizes above 5 are out of range\n";
                return kUsage;
            }
            emit(psi_tau(pi).to_json(), psi_out);
            return 0;
        }
        if (verify->parsed()) {
            if (!verify_cache.empty()) cfg.cache_dir = verify_cache;
            const RunResult res = run_report(cfg);
            emit(res.report, verify_out, 1);
            if (res.report.contains("error"))
                std::cerr << "verify: " << res.report["error"]["message"].get<std::string>() << "\n";
            std::cerr << "verify: " << (res.pass ? "PASS" : "FAIL") << "\n";
            return res.pass ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "bad matching: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource bound at size " << e.size() << ": " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
