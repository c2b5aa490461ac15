#pragma once

// Fully packed loop configurations on the n x n grid with alternating
// boundary, their link patterns, and the closed-form totals.

#include <functional>
#include <gmpxx.h>
#include <map>
#include <vector>

#include "looplab/matching.hpp"

namespace looplab {

struct FplConfig {
    int n = 0;
    // horizontal[r][c]: edge on row r between columns c-1 and c; c = 0 and
    // c = n are the external edges on the left and right.
    std::vector<std::vector<bool>> horizontal;  // n x (n+1)
    // vertical[r][c]: edge in column c between rows r-1 and r; r = 0 and
    // r = n are the external edges on top and bottom.
    std::vector<std::vector<bool>> vertical;  // (n+1) x n

    int degree(int r, int c) const;
};

// External edges in counterclockwise order starting with the topmost edge on
// the left side: left side downwards, bottom rightwards, right side upwards,
// top leftwards. The edge with index k (0-based) is selected iff k is even.
struct ExternalEdge {
    bool horizontal;
    int r, c;  // index into FplConfig::horizontal or ::vertical
};
std::vector<ExternalEdge> external_edges(int n);

using FplVisitor = std::function<void(const FplConfig&)>;

// Every configuration exactly once, in a fixed order. If row0 is given only
// configurations whose row-0 downward edges equal it are produced.
void enumerate_fpl(int n, const FplVisitor& visit);
void enumerate_fpl(int n, const std::vector<bool>& row0_down, const FplVisitor& visit);
// Downward-edge patterns of row 0 that occur in some configuration prefix.
std::vector<std::vector<bool>> fpl_row0_partitions(int n);

// Selected external edges are labelled 1..2n in the counterclockwise order.
Matching link_pattern(const FplConfig& c);

struct FplCensus {
    int n = 0;
    std::map<Matching, mpz_class> counts;
    mpz_class total() const;
};

// threads <= 1 runs inline; otherwise the row-0 partitions are spread over
// worker threads and merged.
FplCensus fpl_census(int n, int threads = 1);

mpz_class a_n(int n);
// Vertically symmetric count; zero for even arguments.
mpz_class a_v(int n);

}  // namespace looplab
