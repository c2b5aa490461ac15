#pragma once

// Conjectured root multiplicities m_p(pi), p = 1..n-1, via the arch-crossing
// rule (Rule A) and the rim-label rule (Rule B).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "looplab/matching.hpp"

namespace looplab {

struct MultiplicityVector {
    std::vector<int> values;  // values[p-1] = m_p for p = 1..n-1

    // m_p, zero outside 1..n-1.
    int at(int p) const {
        return p >= 1 && p <= static_cast<int>(values.size()) ? values[p - 1] : 0;
    }
    int total() const;
    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

// Multiset of integers as value -> multiplicity.
using Multiset = std::map<int, int>;

MultiplicityVector m_rule_a(const Matching& pi);
MultiplicityVector m_rule_b(const Matching& pi);
// Both rules; throws std::logic_error if they disagree.
MultiplicityVector multiplicities(const Matching& pi);

// Rule B multiset of one rim of Y(pi), given the size n used for the labels.
Multiset rim_multiset(const std::vector<Box>& rim, int n);
// Rule B multisets of all rims, outermost first.
std::vector<Multiset> rim_multisets(const Matching& pi);

struct RimRemoval {
    Matching inner;   // pi with its outer rim removed
    Multiset labels;  // Rule B multiset of the removed rim
};

// Replaces the leftmost ')' by '(' and the rightmost '(' by ')'.
// Throws std::invalid_argument when Y(pi) is empty.
RimRemoval remove_rim(const Matching& pi);

// pi = alpha o beta with |alpha| = p, defined exactly when m_p(pi) = 0.
std::optional<std::pair<Matching, Matching>> decompose_at(const Matching& pi, int p);

}  // namespace looplab
