#include "looplab/fixtures.hpp"

namespace looplab::fixtures {

namespace {

RatPoly P(std::initializer_list<long> asc) {
    std::vector<mpq_class> v;
    for (long c : asc) v.emplace_back(c);
    return RatPoly(std::move(v));
}

RatPoly lin(long c) { return P({c, 1}); }

RatPoly frac(long num, long den) { return RatPoly(mpq_class(num, den)); }

}  // namespace

const std::vector<APolyEntry>& size4_polynomials() {
    static const std::vector<APolyEntry> table{
        {"(((())))", P({1})},
        {"((()()))", lin(3)},
        {"((())())", frac(1, 2) * lin(2) * lin(3)},
        {"((()))()", frac(1, 6) * lin(1) * lin(2) * lin(3)},
        {"(()()())", frac(1, 6) * lin(2) * P({21, 11, 2})},
        {"(()())()", frac(1, 24) * lin(1) * lin(2) * P({36, 17, 3})},
        {"(())(())", frac(1, 12) * lin(1) * lin(2) * lin(2) * lin(3)},
        {"(())()()", frac(1, 24) * lin(1) * lin(2) * lin(3) * P({12, 4, 1})},
        {"()(())()", frac(1, 60) * lin(1) * P({180, 192, 108, 27, 3})},
        {"()()()()", frac(1, 180) * lin(1) * lin(3) * P({420, 334, 155, 32, 4})},
    };
    return table;
}

const std::vector<GEntry>& size4_g_values() {
    static const std::vector<GEntry> table{
        {{}, 1},      {{1}, -1},     {{2}, 1},        {{2, 1}, -3},  {{3}, -1},
        {{2, 2}, 1},  {{3, 1}, 4},   {{3, 1, 1}, -9}, {{3, 2}, -3},  {{3, 2, 1}, 9},
    };
    return table;
}

const std::vector<GTauEntry>& size4_g_tau() {
    static const std::vector<GTauEntry> table{
        {{}, P({1})},
        {{1}, P({0, -1})},
        {{2}, P({0, 0, 1})},
        {{1, 1}, P({0, 0, 1})},
        {{2, 1}, P({0, -2, 0, -1})},
        {{3}, P({0, 0, 0, -1})},
        {{1, 1, 1}, P({0, 0, 0, -1})},
        {{2, 2}, P({0, 0, 0, 0, 1})},
        {{3, 1}, P({0, 0, 3, 0, 1})},
        {{2, 1, 1}, P({0, 0, 3, 0, 1})},
        {{3, 1, 1}, P({0, -3, 0, -5, 0, -1})},
        {{3, 2}, P({0, 0, 0, -2, 0, -1})},
        {{2, 2, 1}, P({0, 0, 0, -2, 0, -1})},
        {{3, 2, 1}, P({0, 0, 3, 0, 5, 0, 1})},
    };
    return table;
}

Matching pi0() { return Matching::from_word("(((())())(()()))"); }

RatPoly pi0_root_factor() {
    return frac(1, 145152000) * lin(2) * pow(lin(3), 2) * pow(lin(4), 2) * pow(lin(5), 2) * lin(6) * lin(7);
}

RatPoly pi0_sextic_printed() { return P({123120, 757456, 225436, 39660, 4355, 284, 9}); }

RatPoly pi0_sextic() { return P({1231200, 757456, 225436, 39660, 4355, 284, 9}); }

RatPoly pi0_a_poly() { return pi0_root_factor() * pi0_sextic(); }

TauTPoly pi0_tau_bracket() {
    // rows: tau^0, tau^2, tau^4, tau^6; entries ascending in t
    std::vector<std::vector<mpq_class>> rows(7);
    rows[0] = {84000};
    rows[2] = {440640, 151440, 13200};
    rows[4] = {523680, 394360, 110520, 13670, 630};
    rows[6] = {182880, 211656, 101716, 25990, 3725, 284, 9};
    return TauTPoly(std::move(rows));
}

TauTPoly pi0_psi_tau() {
    return TauTPoly::from_t(pi0_root_factor()) * TauTPoly::tau_power(9) * pi0_tau_bracket();
}

}  // namespace looplab::fixtures
