#include "looplab/fpl.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace looplab {

int FplConfig::degree(int r, int c) const {
    return horizontal[r][c] + horizontal[r][c + 1] + vertical[r][c] + vertical[r + 1][c];
}

std::vector<ExternalEdge> external_edges(int n) {
    std::vector<ExternalEdge> e;
    for (int r = 0; r < n; ++r) e.push_back({true, r, 0});
    for (int c = 0; c < n; ++c) e.push_back({false, n, c});
    for (int r = n - 1; r >= 0; --r) e.push_back({true, r, n});
    for (int c = n - 1; c >= 0; --c) e.push_back({false, 0, c});
    return e;
}

namespace {

FplConfig boundary(int n) {
    FplConfig cfg;
    cfg.n = n;
    cfg.horizontal.assign(n, std::vector<bool>(n + 1, false));
    cfg.vertical.assign(n + 1, std::vector<bool>(n, false));
    auto ext = external_edges(n);
    for (size_t k = 0; k < ext.size(); k += 2) {
        const auto& e = ext[k];
        if (e.horizontal)
            cfg.horizontal[e.r][e.c] = true;
        else
            cfg.vertical[e.r][e.c] = true;
    }
    return cfg;
}

// Row-major search; at vertex (r,c) the left and up edges are already fixed,
// we choose right (internal only) and down (internal only).
struct Search {
    FplConfig cfg;
    const std::vector<bool>* row0 = nullptr;
    const FplVisitor* visit = nullptr;

    void run(int r, int c) {
        const int n = cfg.n;
        if (r == n) {
            (*visit)(cfg);
            return;
        }
        const int nr = c + 1 == n ? r + 1 : r;
        const int nc = c + 1 == n ? 0 : c + 1;
        const int fixed = cfg.horizontal[r][c] + cfg.vertical[r][c];
        const bool right_free = c + 1 < n;
        const bool down_free = r + 1 < n;
        const int right_fixed = right_free ? 0 : static_cast<int>(cfg.horizontal[r][n]);
        const int down_fixed = down_free ? 0 : static_cast<int>(cfg.vertical[n][c]);
        for (int right = 0; right <= (right_free ? 1 : 0); ++right)
            for (int down = 0; down <= (down_free ? 1 : 0); ++down) {
                if (fixed + right + down + right_fixed + down_fixed != 2) continue;
                if (r == 0 && row0 && down_free && static_cast<bool>(down) != (*row0)[c]) continue;
                if (right_free) cfg.horizontal[r][c + 1] = right;
                if (down_free) cfg.vertical[r + 1][c] = down;
                run(nr, nc);
            }
        if (right_free) cfg.horizontal[r][c + 1] = false;
        if (down_free) cfg.vertical[r + 1][c] = false;
    }
};

}  // namespace

void enumerate_fpl(int n, const FplVisitor& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_fpl: n must be positive");
    Search s{boundary(n), nullptr, &visit};
    s.run(0, 0);
}

void enumerate_fpl(int n, const std::vector<bool>& row0_down, const FplVisitor& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_fpl: n must be positive");
    if (static_cast<int>(row0_down.size()) != n) throw std::invalid_argument("enumerate_fpl: row-0 pattern size");
    Search s{boundary(n), &row0_down, &visit};
    s.run(0, 0);
}

std::vector<std::vector<bool>> fpl_row0_partitions(int n) {
    // Row 0 alone: walk the vertices left to right, branching on right/down.
    std::vector<std::vector<bool>> out;
    const FplConfig b = boundary(n);
    std::vector<bool> down(n);
    std::function<void(int, bool)> rec = [&](int c, bool left) {
        if (c == n) {
            out.push_back(down);
            return;
        }
        const int fixed = left + b.vertical[0][c];
        for (int right = 0; right <= 1; ++right)
            for (int d = 0; d <= 1; ++d) {
                if (c + 1 == n && right != static_cast<int>(b.horizontal[0][n])) continue;
                if (n == 1 && d != static_cast<int>(b.vertical[1][0])) continue;
                if (fixed + right + d != 2) continue;
                down[c] = d;
                rec(c + 1, right);
            }
    };
    rec(0, b.horizontal[0][0]);
    return out;
}

Matching link_pattern(const FplConfig& cfg) {
    const int n = cfg.n;
    auto ext = external_edges(n);
    // label of each selected external edge, keyed by (horizontal, r, c)
    std::map<std::tuple<bool, int, int>, int> label;
    int next = 1;
    for (size_t k = 0; k < ext.size(); k += 2) label[{ext[k].horizontal, ext[k].r, ext[k].c}] = next++;

    std::vector<int> partner(2 * n, 0);
    for (size_t k = 0; k < ext.size(); k += 2) {
        const int start = label[{ext[k].horizontal, ext[k].r, ext[k].c}];
        if (partner[start - 1] != 0) continue;
        // Enter the grid through the external edge, then follow the path.
        bool horiz = ext[k].horizontal;
        int er = ext[k].r, ec = ext[k].c;
        int r, c;
        if (horiz)
            r = er, c = ec == 0 ? 0 : n - 1;
        else
            r = er == 0 ? 0 : n - 1, c = ec;
        while (true) {
            // the edge we arrived through is (horiz, er, ec); pick the other
            struct Cand { bool h; int r, c; };
            const Cand cands[4] = {{true, r, c}, {true, r, c + 1}, {false, r, c}, {false, r + 1, c}};
            const Cand* out = nullptr;
            for (const auto& cd : cands) {
                if (cd.h == horiz && cd.r == er && cd.c == ec) continue;
                const bool on = cd.h ? cfg.horizontal[cd.r][cd.c] : cfg.vertical[cd.r][cd.c];
                if (on) {
                    out = &cd;
                    break;
                }
            }
            if (!out) throw std::logic_error("link_pattern: broken path");
            horiz = out->h, er = out->r, ec = out->c;
            const bool external = horiz ? (ec == 0 || ec == n) : (er == 0 || er == n);
            if (external) {
                const int end = label.at({horiz, er, ec});
                partner[start - 1] = end;
                partner[end - 1] = start;
                break;
            }
            if (horiz)
                c = (ec == c) ? c - 1 : c + 1;
            else
                r = (er == r) ? r - 1 : r + 1;
        }
    }
    return Matching::from_partners(std::move(partner));
}

mpz_class FplCensus::total() const {
    mpz_class t = 0;
    for (const auto& [m, c] : counts) t += c;
    return t;
}

FplCensus fpl_census(int n, int threads) {
    FplCensus census;
    census.n = n;
    for (const auto& m : enumerate_matchings(n)) census.counts[m] = 0;
    if (threads <= 1) {
        std::map<Matching, unsigned long> local;
        enumerate_fpl(n, [&](const FplConfig& c) { ++local[link_pattern(c)]; });
        for (const auto& [m, k] : local) census.counts[m] += k;
        return census;
    }
    auto parts = fpl_row0_partitions(n);
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            std::map<Matching, unsigned long> local;
            for (size_t i; (i = next++) < parts.size();)
                enumerate_fpl(n, parts[i], [&](const FplConfig& c) { ++local[link_pattern(c)]; });
            std::lock_guard<std::mutex> lock(mu);
            for (const auto& [m, k] : local) census.counts[m] += k;
        });
    for (auto& th : pool) th.join();
    return census;
}

mpz_class a_n(int n) {
    if (n < 1) throw std::invalid_argument("a_n: n must be positive");
    mpq_class r = 1;
    mpz_class num, den;
    for (int k = 0; k < n; ++k) {
        mpz_fac_ui(num.get_mpz_t(), 3 * k + 1);
        mpz_fac_ui(den.get_mpz_t(), n + k);
        r *= mpq_class(num, den);
    }
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("a_n: non-integer product");
    return r.get_num();
}

mpz_class a_v(int n) {
    if (n < 1) throw std::invalid_argument("a_v: n must be positive");
    if (n % 2 == 0) return 0;
    const int m = (n - 1) / 2;
    mpq_class r = 1;
    auto fac = [](int k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        return f;
    };
    for (int k = 1; k <= m; ++k) r *= mpq_class(fac(6 * k - 2) * fac(2 * k - 1), fac(4 * k - 1) * fac(4 * k - 2));
    mpz_class two_m = 1;
    two_m <<= m;
    r /= two_m;
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("a_v: non-integer product");
    return r.get_num();
}

}  // namespace looplab
