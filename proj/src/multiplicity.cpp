#include "looplab/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace looplab {

int MultiplicityVector::total() const {
    int s = 0;
    for (int v : values) s += v;
    return s;
}

MultiplicityVector m_rule_a(const Matching& pi) {
    const int n = pi.size();
    MultiplicityVector mv;
    const auto arches = pi.arches();
    for (int p = 1; p <= n - 1; ++p) {
        const int phat = 2 * n + 1 - p;
        int left = 0, right = 0;
        for (const auto& [a1, a2] : arches) {
            if (a1 <= p && p < a2 && a2 < phat) ++left;
            if (p < a1 && a1 < phat && phat <= a2) ++right;
        }
        if ((left + right) % 2 != 0)
            throw std::logic_error("rule A: odd number of separating arches in " + pi.word());
        mv.values.push_back((left + right) / 2);
    }
    return mv;
}

Multiset rim_multiset(const std::vector<Box>& rim, int n) {
    if (rim.empty()) return {};
    auto label = [n](Box b) { return n + 1 - b.x - b.y; };
    Box bottom_left = rim.front(), top_right = rim.front();
    int k = label(rim.front());
    for (const auto& b : rim) {
        if (b.x > bottom_left.x || (b.x == bottom_left.x && b.y < bottom_left.y)) bottom_left = b;
        if (b.x < top_right.x || (b.x == top_right.x && b.y > top_right.y)) top_right = b;
        k = std::min(k, label(b));
    }
    const int i = label(bottom_left), j = label(top_right);
    Multiset ms;
    ms[k] += 1;
    for (int v = k + 1; v <= i; ++v) ms[v] += 1;
    for (int v = k + 1; v <= j; ++v) ms[v] += 1;
    return ms;
}

std::vector<Multiset> rim_multisets(const Matching& pi) {
    std::vector<Multiset> out;
    for (const auto& rim : diagram_stats(young_of(pi)).rims) out.push_back(rim_multiset(rim, pi.size()));
    return out;
}

MultiplicityVector m_rule_b(const Matching& pi) {
    const int n = pi.size();
    MultiplicityVector mv;
    mv.values.assign(std::max(0, n - 1), 0);
    for (const auto& ms : rim_multisets(pi))
        for (const auto& [value, count] : ms)
            if (value >= 1 && value <= n - 1) mv.values[value - 1] += count;
    return mv;
}

MultiplicityVector multiplicities(const Matching& pi) {
    auto a = m_rule_a(pi);
    auto b = m_rule_b(pi);
    if (!(a == b)) throw std::logic_error("rule A and rule B disagree on " + pi.word());
    return a;
}

RimRemoval remove_rim(const Matching& pi) {
    if (box_count(pi) == 0) throw std::invalid_argument("remove_rim: " + pi.word() + " has an empty diagram");
    std::string w = pi.word();
    const auto first_close = w.find(')');
    const auto last_open = w.rfind('(');
    w[first_close] = '(';
    w[last_open] = ')';
    auto rims = diagram_stats(young_of(pi)).rims;
    return {Matching::from_word(w), rim_multiset(rims.front(), pi.size())};
}

std::optional<std::pair<Matching, Matching>> decompose_at(const Matching& pi, int p) {
    const int n = pi.size();
    if (p < 1 || p > n - 1)
        throw std::out_of_range("decompose_at: cut " + std::to_string(p) + " outside 1.." + std::to_string(n - 1));
    const int len = pi.points();
    auto outer = [&](int k) { return k <= p || k > len - p; };
    for (int k = 1; k <= len; ++k)
        if (outer(k) != outer(pi.partner(k))) return std::nullopt;
    // Outer part: points 1..p and 2n-p+1..2n relabelled to 1..2p.
    std::vector<int> alpha(2 * p), beta(len - 2 * p);
    auto relabel_outer = [&](int k) { return k <= p ? k : k - (len - 2 * p); };
    for (int k = 1; k <= len; ++k) {
        if (outer(k))
            alpha[relabel_outer(k) - 1] = relabel_outer(pi.partner(k));
        else
            beta[k - p - 1] = pi.partner(k) - p;
    }
    return std::make_pair(Matching::from_partners(std::move(alpha)), Matching::from_partners(std::move(beta)));
}

}  // namespace looplab
