#include "looplab/cpl.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <unsupported/Eigen/IterativeSolvers>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <unistd.h>
#include <unordered_map>

namespace looplab {

using Key = std::uint64_t;
using i128 = __int128;

namespace {

// Position k is 0-based, L = 2n.
inline bool is_closer(Key w, int L, int k) { return (w >> (L - 1 - k)) & 1; }

inline Key with_closer(Key w, int L, int k, bool closer) {
    const Key bit = Key{1} << (L - 1 - k);
    return closer ? (w | bit) : (w & ~bit);
}

int key_partner(Key w, int L, int k) {
    int depth = 0;
    if (!is_closer(w, L, k)) {
        for (int j = k; j < L; ++j) {
            depth += is_closer(w, L, j) ? -1 : 1;
            if (depth == 0) return j;
        }
    } else {
        for (int j = k; j >= 0; --j) {
            depth += is_closer(w, L, j) ? -1 : 1;
            if (depth == 0) return j;
        }
    }
    throw std::logic_error("unbalanced word key");
}

Key key_apply_e(Key w, int n, int i) {
    const int L = 2 * n;
    const int p = i == 0 ? L - 1 : i - 1;
    const int q = i == 0 ? 0 : i;
    const int a = key_partner(w, L, p);
    if (a == q) return w;
    const int b = key_partner(w, L, q);
    w = with_closer(w, L, std::min(p, q), false);
    w = with_closer(w, L, std::max(p, q), true);
    w = with_closer(w, L, std::min(a, b), false);
    w = with_closer(w, L, std::max(a, b), true);
    return w;
}

Key key_rotate(Key w, int n) {
    const int L = 2 * n;
    const Key mask = L == 64 ? ~Key{0} : (Key{1} << L) - 1;
    const int j = key_partner(w, L, 0);
    Key r = ((w << 1) & mask) | Key{1};
    return with_closer(r, L, j - 1, false);
}

Key key_conjugate(Key w, int n) {
    const int L = 2 * n;
    Key r = 0;
    for (int k = 0; k < L; ++k)
        if (!is_closer(w, L, L - 1 - k)) r |= Key{1} << (L - 1 - k);
    return r;
}

Key nested_key(int n) { return (Key{1} << n) - 1; }

// Smallest image and number of distinct images.
std::pair<Key, int> orbit_of(Key w, int n) {
    Key imgs[128];
    int cnt = 0;
    Key a = w, b = key_conjugate(w, n);
    for (int j = 0; j < 2 * n; ++j) {
        imgs[cnt++] = a;
        imgs[cnt++] = b;
        a = key_rotate(a, n);
        b = key_rotate(b, n);
    }
    std::sort(imgs, imgs + cnt);
    return {imgs[0], static_cast<int>(std::unique(imgs, imgs + cnt) - imgs)};
}

struct Chain {
    int n = 0;
    std::vector<Key> keys;
    std::vector<int> sizes;
    // out[s] = (target, number of i with e_i(s) in target)
    std::vector<std::vector<std::pair<int, int>>> out;
    int root = 0;
};

Chain build_chain(int n, Lumping lumping) {
    Chain ch;
    ch.n = n;
    std::unordered_map<Key, int> index;
    auto canon = [&](Key w) { return lumping == Lumping::Dihedral ? orbit_of(w, n).first : w; };
    auto add = [&](Key w) {
        auto [it, fresh] = index.emplace(w, static_cast<int>(ch.keys.size()));
        if (fresh) {
            ch.keys.push_back(w);
            ch.sizes.push_back(lumping == Lumping::Dihedral ? orbit_of(w, n).second : 1);
        }
        return it->second;
    };
    add(canon(nested_key(n)));
    std::vector<std::vector<std::pair<int, int>>> out;
    for (size_t s = 0; s < ch.keys.size(); ++s) {
        std::vector<int> targets;
        for (int i = 0; i < 2 * n; ++i) targets.push_back(add(canon(key_apply_e(ch.keys[s], n, i))));
        std::sort(targets.begin(), targets.end());
        std::vector<std::pair<int, int>> row;
        for (int t : targets) {
            if (!row.empty() && row.back().first == t)
                ++row.back().second;
            else
                row.emplace_back(t, 1);
        }
        out.push_back(std::move(row));
    }
    // Reorder by key.
    const size_t N = ch.keys.size();
    std::vector<int> order(N);
    for (size_t i = 0; i < N; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return ch.keys[x] < ch.keys[y]; });
    std::vector<int> pos(N);
    for (size_t i = 0; i < N; ++i) pos[order[i]] = static_cast<int>(i);
    Chain sorted;
    sorted.n = n;
    sorted.keys.resize(N);
    sorted.sizes.resize(N);
    sorted.out.resize(N);
    for (size_t i = 0; i < N; ++i) {
        sorted.keys[pos[i]] = ch.keys[i];
        sorted.sizes[pos[i]] = ch.sizes[i];
        auto row = out[i];
        for (auto& [t, c] : row) t = pos[t];
        std::sort(row.begin(), row.end());
        sorted.out[pos[i]] = std::move(row);
    }
    sorted.root = pos[0];
    return sorted;
}

mpz_class to_mpz(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

// Exact residual r_t = 2n |t| x_t - sum_s c(s->t) |s| x_s.
std::vector<i128> residual(const Chain& ch, const std::vector<i128>& x) {
    const size_t N = ch.keys.size();
    std::vector<i128> r(N);
    for (size_t t = 0; t < N; ++t) r[t] = static_cast<i128>(2 * ch.n) * ch.sizes[t] * x[t];
    for (size_t s = 0; s < N; ++s)
        for (auto [t, c] : ch.out[s]) r[t] -= static_cast<i128>(c) * ch.sizes[s] * x[s];
    return r;
}

}  // namespace

std::uint64_t word_key(const Matching& pi) {
    const int L = pi.points();
    if (L > 64) throw std::invalid_argument("word_key: matching too large");
    Key w = 0;
    for (int k = 0; k < L; ++k)
        if (!pi.is_opener(k + 1)) w |= Key{1} << (L - 1 - k);
    return w;
}

Matching matching_from_key(std::uint64_t key, int n) {
    std::string s(2 * n, '(');
    for (int k = 0; k < 2 * n; ++k)
        if (is_closer(key, 2 * n, k)) s[k] = ')';
    return Matching::from_word(s);
}

std::uint64_t dihedral_key(std::uint64_t key, int n) { return orbit_of(key, n).first; }

Matching apply_e(int i, const Matching& pi) {
    const int n = pi.size();
    if (i < 0 || i >= 2 * n) throw std::out_of_range("apply_e: index " + std::to_string(i));
    std::vector<int> part = pi.partners();
    const int x = i == 0 ? 2 * n : i;
    const int y = i == 0 ? 1 : i + 1;
    const int a = part[x - 1], b = part[y - 1];
    if (a == y) return pi;
    part[x - 1] = y;
    part[y - 1] = x;
    part[a - 1] = b;
    part[b - 1] = a;
    return Matching::from_partners(std::move(part));
}

std::vector<mpz_class> SparseIntMatrix::multiply(const std::vector<mpz_class>& v) const {
    std::vector<mpz_class> r(size);
    for (int i = 0; i < size; ++i)
        for (auto [c, val] : rows[i]) r[i] += v[c] * val;
    return r;
}

long SparseIntMatrix::at(int r, int c) const {
    for (auto [col, val] : rows.at(r))
        if (col == c) return val;
    return 0;
}

SparseIntMatrix hamiltonian(int n) {
    auto all = enumerate_matchings(n);
    std::map<Matching, int> index;
    for (size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);
    SparseIntMatrix h;
    h.size = static_cast<int>(all.size());
    std::vector<std::map<int, long>> rows(all.size());
    for (size_t s = 0; s < all.size(); ++s) {
        rows[s][static_cast<int>(s)] += 2 * n;
        for (int i = 0; i < 2 * n; ++i) rows[index.at(apply_e(i, all[s]))][static_cast<int>(s)] -= 1;
    }
    for (auto& r : rows) {
        std::vector<std::pair<int, long>> v;
        for (auto [c, val] : r)
            if (val != 0) v.emplace_back(c, val);
        h.rows.push_back(std::move(v));
    }
    return h;
}

GroundState::GroundState(int n, Lumping lumping, std::vector<std::uint64_t> keys, std::vector<int> orbit_sizes,
                         std::vector<mpz_class> values)
    : n_(n), lumping_(lumping), keys_(std::move(keys)), orbit_sizes_(std::move(orbit_sizes)),
      values_(std::move(values)) {}

mpz_class GroundState::operator[](const Matching& pi) const {
    if (pi.size() != n_) throw std::invalid_argument("groundstate lookup: size mismatch");
    Key k = word_key(pi);
    if (lumping_ == Lumping::Dihedral) k = dihedral_key(k, n_);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || *it != k) throw std::logic_error("groundstate lookup: missing " + pi.word());
    return values_[it - keys_.begin()];
}

mpz_class GroundState::total() const {
    mpz_class t = 0;
    for (size_t i = 0; i < values_.size(); ++i) t += values_[i] * orbit_sizes_[i];
    return t;
}

std::vector<std::pair<Matching, mpz_class>> GroundState::components() const {
    std::vector<std::pair<Matching, mpz_class>> out;
    for (auto& m : enumerate_matchings(n_)) {
        auto v = (*this)[m];
        out.emplace_back(std::move(m), std::move(v));
    }
    return out;
}

GroundState groundstate_exact(int n) {
    const Chain ch = build_chain(n, Lumping::None);
    const int N = static_cast<int>(ch.keys.size());
    // Dense H with the root row replaced by the pin x_root = 1.
    std::vector<std::vector<mpz_class>> a(N, std::vector<mpz_class>(N + 1));
    for (int s = 0; s < N; ++s) {
        a[s][s] += 2 * n;
        for (auto [t, c] : ch.out[s]) a[t][s] -= c;
    }
    for (int j = 0; j <= N; ++j) a[ch.root][j] = 0;
    a[ch.root][ch.root] = 1;
    a[ch.root][N] = 1;
    // Bareiss forward elimination with row pivoting.
    mpz_class prev = 1;
    for (int k = 0; k < N; ++k) {
        int piv = k;
        while (piv < N && a[piv][k] == 0) ++piv;
        if (piv == N) throw std::logic_error("groundstate_exact: kernel dimension is not one");
        std::swap(a[piv], a[k]);
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j <= N; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    std::vector<mpq_class> x(N);
    for (int i = N - 1; i >= 0; --i) {
        mpq_class acc = a[i][N];
        for (int j = i + 1; j < N; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
        x[i].canonicalize();
    }
    std::vector<mpz_class> vals(N);
    for (int i = 0; i < N; ++i) {
        if (x[i].get_den() != 1 || x[i] <= 0)
            throw std::logic_error("groundstate_exact: component is not a positive integer");
        vals[i] = x[i].get_num();
    }
    return GroundState(n, Lumping::None, ch.keys, ch.sizes, std::move(vals));
}

GroundState groundstate_refined(int n, Lumping lumping) {
    if (n < 1) throw std::invalid_argument("groundstate: n must be positive");
    if (n > 18) throw ResourceError(n, "groundstate: size " + std::to_string(n) + " exceeds 128-bit refinement range");
    const Chain ch = build_chain(n, lumping);
    const int N = static_cast<int>(ch.keys.size());
    std::vector<i128> x(N, 0);
    x[ch.root] = 1;
    if (N > 1) {
        // Approximate stationary orbit weights from the lazy chain.
        Eigen::VectorXd w = Eigen::VectorXd::Constant(N, 1.0 / N), next(N);
        for (int it = 0; it < 20000; ++it) {
            next = 0.5 * w;
            for (int src = 0; src < N; ++src)
                for (auto [t, c] : ch.out[src]) next[t] += 0.5 * w[src] * c / (2.0 * n);
            const double change = (next - w).cwiseAbs().maxCoeff() / next.maxCoeff();
            w.swap(next);
            if (change < 1e-10) break;
        }
        const double root_value = w[ch.root] / ch.sizes[ch.root];
        for (int t = 0; t < N; ++t)
            if (t != ch.root) x[t] = static_cast<i128>(std::nearbyint(w[t] / ch.sizes[t] / root_value));

        // Correction solves pin the heaviest orbit rather than ()_n: the root
        // carries almost no stationary mass, so pinning it is ill conditioned.
        // The kernel direction is restored afterwards from the current iterate.
        int anchor = 0;
        for (int t = 1; t < N; ++t)
            if (w[t] > w[anchor]) anchor = t;
        std::vector<Eigen::Triplet<double>> trip;
        for (int s = 0; s < N; ++s) {
            if (s != anchor) trip.emplace_back(s, s, 1.0);
            for (auto [t, c] : ch.out[s]) {
                if (t == anchor) continue;
                trip.emplace_back(t, s, -static_cast<double>(c) * ch.sizes[s] / (2.0 * n * ch.sizes[t]));
            }
        }
        trip.emplace_back(anchor, anchor, 1.0);
        Eigen::SparseMatrix<double> m(N, N);
        m.setFromTriplets(trip.begin(), trip.end());
        m.makeCompressed();

        // Unknowns and rows are scaled by the current iterate.
        Eigen::VectorXd scale(N), xd(N);
        Eigen::GMRES<Eigen::SparseMatrix<double>, Eigen::DiagonalPreconditioner<double>> solver;
        solver.set_restart(60);
        solver.setTolerance(1e-15);
        solver.setMaxIterations(2000);
        Eigen::SparseMatrix<double> ms;

        for (int iter = 0;; ++iter) {
            auto r = residual(ch, x);
            if (std::all_of(r.begin(), r.end(), [](i128 v) { return v == 0; })) break;
            if (iter > 60)
                throw std::runtime_error("groundstate: refinement did not reach an exact kernel vector at n = " +
                                         std::to_string(n));
            for (int t = 0; t < N; ++t) {
                xd[t] = static_cast<double>(x[t]);
                scale[t] = std::max(1.0, std::fabs(xd[t]));
            }
            ms = scale.cwiseInverse().asDiagonal() * m * scale.asDiagonal();
            solver.compute(ms);
            Eigen::VectorXd rhs(N);
            for (int t = 0; t < N; ++t)
                rhs[t] = t == anchor ? 0.0 : -static_cast<double>(r[t]) / (2.0 * n * ch.sizes[t] * scale[t]);
            Eigen::VectorXd d = scale.cwiseProduct(solver.solve(rhs));
            // Shift along the kernel so that ()_n stays at 1.
            d -= (d[ch.root] / xd[ch.root]) * xd;
            bool moved = false;
            for (int t = 0; t < N; ++t) {
                if (t == ch.root) continue;
                const double v = std::nearbyint(d[t]);
                if (!std::isfinite(v)) throw std::runtime_error("groundstate: non-finite correction");
                if (v != 0) moved = true;
                x[t] += static_cast<i128>(v);
            }
            if (!moved)
                throw std::runtime_error("groundstate: correction vanished before an exact kernel vector at n = " +
                                         std::to_string(n));
        }
    }
    std::vector<mpz_class> vals(N);
    for (int i = 0; i < N; ++i) {
        if (x[i] <= 0) throw std::logic_error("groundstate: nonpositive component");
        vals[i] = to_mpz(x[i]);
    }
    return GroundState(n, lumping, ch.keys, ch.sizes, std::move(vals));
}

bool is_kernel_vector(const GroundState& g) {
    const int n = g.n();
    const Chain ch = build_chain(n, Lumping::None);
    const size_t N = ch.keys.size();
    std::vector<mpz_class> x(N);
    for (size_t s = 0; s < N; ++s) x[s] = g[matching_from_key(ch.keys[s], n)];
    std::vector<mpz_class> acc(N);
    for (size_t s = 0; s < N; ++s) {
        acc[s] += 2 * n * x[s];
        for (auto [t, c] : ch.out[s]) acc[t] -= c * x[s];
    }
    return std::all_of(acc.begin(), acc.end(), [](const mpz_class& v) { return v == 0; });
}

// ------------------------------------------------------------------- cache

namespace {

nlohmann::json int_json(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

mpz_class json_int(const nlohmann::json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

constexpr int kLexFileMaxN = 12;

}  // namespace

nlohmann::json groundstate_json(const GroundState& g) {
    nlohmann::json j;
    j["version"] = 1;
    j["n"] = g.n();
    nlohmann::json comps = nlohmann::json::array();
    if (g.n() <= kLexFileMaxN) {
        j["order"] = "lex-a-seq";
        for (const auto& [m, v] : g.components()) comps.push_back(int_json(v));
    } else {
        j["order"] = "dihedral-orbits";
        nlohmann::json reps = nlohmann::json::array(), sizes = nlohmann::json::array();
        for (size_t i = 0; i < g.stored(); ++i) {
            reps.push_back(matching_from_key(g.keys()[i], g.n()).word());
            sizes.push_back(g.orbit_sizes()[i]);
            comps.push_back(int_json(g.values()[i]));
        }
        j["representatives"] = reps;
        j["orbit_sizes"] = sizes;
    }
    j["components"] = comps;
    return j;
}

void save_groundstate(const GroundState& g, const std::filesystem::path& file) {
    const nlohmann::json j = groundstate_json(g);
    std::filesystem::create_directories(file.parent_path().empty() ? "." : file.parent_path());
    auto tmp = file;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream os(tmp);
        os << j.dump() << '\n';
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

GroundState load_groundstate(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("cannot read " + file.string());
    nlohmann::json j = nlohmann::json::parse(is);
    if (j.at("version").get<int>() != 1) throw std::runtime_error("unsupported cache version in " + file.string());
    const int n = j.at("n").get<int>();
    const auto order = j.at("order").get<std::string>();
    const auto& comps = j.at("components");
    std::vector<Key> keys;
    std::vector<int> sizes;
    std::vector<mpz_class> vals;
    if (order == "lex-a-seq") {
        auto all = enumerate_matchings(n);
        if (comps.size() != all.size()) throw std::runtime_error("cache size mismatch in " + file.string());
        for (size_t i = 0; i < all.size(); ++i) {
            keys.push_back(word_key(all[i]));
            sizes.push_back(1);
            vals.push_back(json_int(comps[i]));
        }
        return GroundState(n, Lumping::None, std::move(keys), std::move(sizes), std::move(vals));
    }
    if (order == "dihedral-orbits") {
        const auto& reps = j.at("representatives");
        const auto& os = j.at("orbit_sizes");
        for (size_t i = 0; i < comps.size(); ++i) {
            keys.push_back(word_key(Matching::from_word(reps[i].get<std::string>())));
            sizes.push_back(os[i].get<int>());
            vals.push_back(json_int(comps[i]));
        }
        return GroundState(n, Lumping::Dihedral, std::move(keys), std::move(sizes), std::move(vals));
    }
    throw std::runtime_error("unknown component order '" + order + "' in " + file.string());
}

GroundStateCache::GroundStateCache(std::optional<std::filesystem::path> dir, int max_n)
    : dir_(std::move(dir)), max_n_(max_n) {}

std::optional<std::filesystem::path> GroundStateCache::resolve_dir(std::optional<std::filesystem::path> fallback) {
    if (const char* env = std::getenv("LOOPLAB_CACHE"); env && *env) return std::filesystem::path(env);
    return fallback;
}

std::shared_ptr<const GroundState> GroundStateCache::get(int n) {
    if (n < 1) throw std::invalid_argument("groundstate: n must be positive");
    if (n > max_n_)
        throw ResourceError(n, "groundstate of size " + std::to_string(n) + " exceeds the configured bound " +
                                   std::to_string(max_n_));
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = mem_.find(n); it != mem_.end()) return it->second;
    std::shared_ptr<const GroundState> g;
    std::optional<std::filesystem::path> file;
    if (dir_) file = *dir_ / ("groundstate_n" + std::to_string(n) + ".json");
    if (file && std::filesystem::exists(*file)) {
        g = std::make_shared<const GroundState>(load_groundstate(*file));
    } else {
        g = std::make_shared<const GroundState>(groundstate_refined(n, Lumping::Dihedral));
        if (file) save_groundstate(*g, *file);
    }
    mem_[n] = g;
    return g;
}

mpz_class GroundStateCache::psi_of(const Matching& pi, int p) {
    if (p < 0) throw std::invalid_argument("psi_of: negative nesting");
    const int size = pi.size() + p;
    if (size > max_n_)
        throw ResourceError(size, "psi_of needs a groundstate of size " + std::to_string(size) +
                                      " beyond the configured bound " + std::to_string(max_n_));
    return (*get(size))[nest(pi, p)];
}

}  // namespace looplab
