#pragma once

// Temperley-Lieb action on matchings, the loop Hamiltonian and its exact
// integer groundstate.

#include <cstdint>
#include <filesystem>
#include <gmpxx.h>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "looplab/matching.hpp"

namespace looplab {

// e_i creates the arch (i, i+1), indices mod 2n, so e_0 links 1 and 2n.
Matching apply_e(int i, const Matching& pi);

struct SparseIntMatrix {
    int size = 0;
    // rows[r] = (column, value) pairs sorted by column
    std::vector<std::vector<std::pair<int, long>>> rows;

    std::vector<mpz_class> multiply(const std::vector<mpz_class>& v) const;
    long at(int r, int c) const;
};

// H = sum_i (1 - e_i) over the lexicographic matching order:
// H[tau][sigma] = 2n [tau = sigma] - #{i : e_i sigma = tau}.
SparseIntMatrix hamiltonian(int n);

// Word key: bit (2n-1-k) is set iff position k+1 holds ')'. Numeric order on
// keys is the lexicographic matching order.
std::uint64_t word_key(const Matching& pi);
Matching matching_from_key(std::uint64_t key, int n);
// Smallest key over the 4n rotations and reflections of the matching.
std::uint64_t dihedral_key(std::uint64_t key, int n);

enum class Lumping { None, Dihedral };

class GroundState {
public:
    GroundState() = default;
    GroundState(int n, Lumping lumping, std::vector<std::uint64_t> keys, std::vector<int> orbit_sizes,
                std::vector<mpz_class> values);

    int n() const noexcept { return n_; }
    Lumping lumping() const noexcept { return lumping_; }
    mpz_class operator[](const Matching& pi) const;
    mpz_class total() const;
    // Number of stored values (matchings, or dihedral orbits when lumped).
    size_t stored() const noexcept { return keys_.size(); }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
    const std::vector<int>& orbit_sizes() const noexcept { return orbit_sizes_; }
    const std::vector<mpz_class>& values() const noexcept { return values_; }
    // Every component in lexicographic order; expands orbits.
    std::vector<std::pair<Matching, mpz_class>> components() const;

private:
    int n_ = 0;
    Lumping lumping_ = Lumping::None;
    std::vector<std::uint64_t> keys_;  // ascending
    std::vector<int> orbit_sizes_;
    std::vector<mpz_class> values_;
};

// Fraction-free elimination on the dense Hamiltonian; practical for n <= 7.
GroundState groundstate_exact(int n);

// Integer iterative refinement: the residual H x is computed exactly, a
// floating-point correction is rounded back to integers, and the loop stops
// only when H x = 0 holds exactly with x at ()_n equal to 1.
GroundState groundstate_refined(int n, Lumping lumping = Lumping::Dihedral);

// Exact check of H x = 0 over all matchings of the size.
bool is_kernel_vector(const GroundState& g);

class ResourceError : public std::runtime_error {
public:
    ResourceError(int size, const std::string& what) : std::runtime_error(what), size_(size) {}
    int size() const noexcept { return size_; }

private:
    int size_;
};

// Sizes up to this bound are solved on demand.
inline constexpr int kDefaultMaxGroundstateSize = 15;

// In-memory and on-disk store of groundstates keyed by size.
class GroundStateCache {
public:
    explicit GroundStateCache(std::optional<std::filesystem::path> dir = std::nullopt,
                              int max_n = kDefaultMaxGroundstateSize);
    // Directory from LOOPLAB_CACHE if set, else the given fallback.
    static std::optional<std::filesystem::path> resolve_dir(std::optional<std::filesystem::path> fallback);

    int max_n() const noexcept { return max_n_; }
    const std::optional<std::filesystem::path>& dir() const noexcept { return dir_; }

    std::shared_ptr<const GroundState> get(int n);
    // Component of groundstate(|pi|+p) at nest(pi, p).
    mpz_class psi_of(const Matching& pi, int p);

private:
    std::optional<std::filesystem::path> dir_;
    int max_n_;
    std::mutex mu_;
    std::map<int, std::shared_ptr<const GroundState>> mem_;
};

// JSON cache file. Sizes up to 12 use {"version":1,"n":N,"order":"lex-a-seq",
// "components":[...]}; larger sizes store dihedral orbits. Integers beyond
// 64 bits are written as decimal strings.
nlohmann::json groundstate_json(const GroundState& g);
void save_groundstate(const GroundState& g, const std::filesystem::path& file);
GroundState load_groundstate(const std::filesystem::path& file);

}  // namespace looplab
