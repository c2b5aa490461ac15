#pragma once

// Noncrossing perfect matchings of 2n points and their Young diagrams.
//
// Points are numbered 1..2n from left to right. A matching can be read from
// or written to four equivalent forms: the parenthesis word, the Dyck path
// (same word), the increasing sequence a_1 < ... < a_n of opening positions,
// and the Young diagram cut out above the Dyck path.

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace looplab {

struct Arch {
    int open;   // 1-based, open < close
    int close;
    friend bool operator==(const Arch&, const Arch&) = default;
};

enum class ParseErrorKind { Unbalanced, BadSequence, CrossingArches, OverlappingArches, Syntax };

class ParseError : public std::invalid_argument {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

class Matching {
public:
    Matching() = default;

    // 1-based partner array of length 2n: partners[i-1] is the point linked to i.
    static Matching from_partners(std::vector<int> partners);
    static Matching from_word(std::string_view word);
    static Matching from_sequence(const std::vector<int>& a, int n = -1);
    static Matching from_arches(const std::vector<Arch>& arches);
    // ()_n : n nested arches.
    static Matching nested(int n);
    // ()^n : n consecutive small arches.
    static Matching chain(int n);

    int size() const noexcept { return static_cast<int>(partners_.size()) / 2; }
    int points() const noexcept { return static_cast<int>(partners_.size()); }
    int partner(int point) const { return partners_.at(point - 1); }
    bool is_opener(int point) const { return partner(point) > point; }

    std::string word() const;
    std::vector<int> sequence() const;
    std::vector<Arch> arches() const;
    const std::vector<int>& partners() const noexcept { return partners_; }

    // Lexicographic order on a-sequences, equivalently on words with '(' < ')'.
    friend std::strong_ordering operator<=>(const Matching& x, const Matching& y);
    friend bool operator==(const Matching& x, const Matching& y) = default;

private:
    explicit Matching(std::vector<int> partners) : partners_(std::move(partners)) {}
    std::vector<int> partners_;
};

struct Box {
    int x;  // row from the top, 1-based
    int y;  // column from the left, 1-based
    friend auto operator<=>(const Box&, const Box&) = default;
};

class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const noexcept { return rows_; }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int row(int x) const { return x >= 1 && x <= num_rows() ? rows_[x - 1] : 0; }
    int column(int y) const;
    int size() const noexcept;
    bool empty() const noexcept { return rows_.empty(); }
    bool contains(Box b) const { return b.x >= 1 && b.y >= 1 && b.y <= row(b.x); }
    std::vector<Box> boxes() const;

    YoungDiagram transpose() const;
    // Diagram with the given corner box removed.
    YoungDiagram without(Box corner) const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;  // strictly positive, weakly decreasing
};

struct DiagramStats {
    std::vector<std::pair<Box, int>> hooks;
    std::vector<std::pair<Box, int>> contents;
    mpz_class hook_product;  // H_Y
    std::vector<Box> corners;
    std::vector<std::vector<Box>> rims;  // outermost first
};

int hook_length(const YoungDiagram& y, Box b);
int content(Box b);
mpz_class hook_product(const YoungDiagram& y);
std::vector<Box> corners(const YoungDiagram& y);
// Boxes (x,y) with (x+1,y+1) outside the diagram.
std::vector<Box> outer_rim(const YoungDiagram& y);
DiagramStats diagram_stats(const YoungDiagram& y);
// All diagrams contained in the staircase (n-1, n-2, ..., 1).
std::vector<YoungDiagram> diagrams_in_staircase(int n);

Matching parse_matching(std::string_view text);
std::string render_word(const Matching& m);
std::string render_sequence(const Matching& m);
std::string render_arches(const Matching& m);

// Number of boxes of Y(pi), i.e. sum_i (a_i - i).
int box_count(const Matching& m);
YoungDiagram young_of(const Matching& m);
// Inverse of young_of for diagrams inside the size-n staircase.
Matching matching_of(const YoungDiagram& y, int n);

Matching conjugate(const Matching& m);
Matching rotate(const Matching& m);
Matching nest(const Matching& m, int p);
Matching compose(const Matching& outer, const Matching& inner);
// If m = (m')_p returns m'; otherwise nullopt.
std::optional<Matching> strip_nesting(const Matching& m, int p = 1);
bool leq(const Matching& sigma, const Matching& pi);

// Catalan(n) matchings, lexicographic on a-sequences.
std::vector<Matching> enumerate_matchings(int n);
mpz_class catalan(int n);

}  // namespace looplab
