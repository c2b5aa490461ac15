#include "looplab/matching.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace looplab {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

int parse_int(std::string_view s, const char* context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(ParseErrorKind::Syntax,
                         std::string("bad integer '") + std::string(s) + "' in " + context);
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

// ---------------------------------------------------------------- Matching

Matching Matching::from_partners(std::vector<int> partners) {
    const int m = static_cast<int>(partners.size());
    if (m == 0 || m % 2 != 0)
        throw ParseError(ParseErrorKind::OverlappingArches, "matching needs an even, positive number of points");
    for (int i = 1; i <= m; ++i) {
        int j = partners[i - 1];
        if (j < 1 || j > m || j == i || partners[j - 1] != i)
            throw ParseError(ParseErrorKind::OverlappingArches, "partner array is not an involution without fixed points");
    }
    for (int i = 1; i <= m; ++i) {
        int j = partners[i - 1];
        if (j < i) continue;
        for (int k = i + 1; k < j; ++k) {
            int l = partners[k - 1];
            if (l < i || l > j)
                throw ParseError(ParseErrorKind::CrossingArches,
                                 "arches (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") and (" + std::to_string(std::min(k, l)) + "," +
                                     std::to_string(std::max(k, l)) + ") cross");
        }
    }
    return Matching(std::move(partners));
}

Matching Matching::from_word(std::string_view word) {
    if (word.empty()) throw ParseError(ParseErrorKind::Syntax, "empty parenthesis word");
    std::vector<int> partners(word.size(), 0);
    std::vector<int> stack;
    for (std::size_t k = 0; k < word.size(); ++k) {
        const int pos = static_cast<int>(k) + 1;
        if (word[k] == '(') {
            stack.push_back(pos);
        } else if (word[k] == ')') {
            if (stack.empty())
                throw ParseError(ParseErrorKind::Unbalanced,
                                 "unbalanced word: ')' at position " + std::to_string(pos) + " has no opener");
            partners[k] = stack.back();
            partners[stack.back() - 1] = pos;
            stack.pop_back();
        } else {
            throw ParseError(ParseErrorKind::Syntax,
                             std::string("unexpected character '") + word[k] + "' in parenthesis word");
        }
    }
    if (!stack.empty())
        throw ParseError(ParseErrorKind::Unbalanced,
                         "unbalanced word: " + std::to_string(stack.size()) + " unclosed '('");
    return Matching(std::move(partners));
}

Matching Matching::from_sequence(const std::vector<int>& a, int n) {
    if (a.empty()) throw ParseError(ParseErrorKind::BadSequence, "empty sequence");
    if (n < 0) n = static_cast<int>(a.size());
    if (n != static_cast<int>(a.size()))
        throw ParseError(ParseErrorKind::BadSequence, "sequence length differs from matching size");
    for (int i = 1; i <= n; ++i) {
        const int ai = a[i - 1];
        if (ai < 1 || ai > 2 * i - 1)
            throw ParseError(ParseErrorKind::BadSequence,
                             "a_" + std::to_string(i) + " = " + std::to_string(ai) + " violates 1 <= a_i <= 2i-1");
        if (i > 1 && ai <= a[i - 2])
            throw ParseError(ParseErrorKind::BadSequence, "sequence is not strictly increasing");
    }
    std::string word(2 * n, ')');
    for (int ai : a) word[ai - 1] = '(';
    return from_word(word);
}

Matching Matching::from_arches(const std::vector<Arch>& arches) {
    const int m = 2 * static_cast<int>(arches.size());
    if (m == 0) throw ParseError(ParseErrorKind::Syntax, "empty arch list");
    std::vector<int> partners(m, 0);
    for (const auto& arch : arches) {
        int i = std::min(arch.open, arch.close);
        int j = std::max(arch.open, arch.close);
        if (i < 1 || j > m || i == j)
            throw ParseError(ParseErrorKind::OverlappingArches,
                             "arch (" + std::to_string(arch.open) + "," + std::to_string(arch.close) +
                                 ") does not fit on " + std::to_string(m) + " points");
        if (partners[i - 1] != 0 || partners[j - 1] != 0)
            throw ParseError(ParseErrorKind::OverlappingArches,
                             "point used by two arches near (" + std::to_string(i) + "," + std::to_string(j) + ")");
        partners[i - 1] = j;
        partners[j - 1] = i;
    }
    return from_partners(std::move(partners));
}

Matching Matching::nested(int n) {
    return from_word(std::string(n, '(') + std::string(n, ')'));
}

Matching Matching::chain(int n) {
    std::string w;
    for (int i = 0; i < n; ++i) w += "()";
    return from_word(w);
}

std::string Matching::word() const {
    std::string w(partners_.size(), ')');
    for (int i = 1; i <= points(); ++i)
        if (partners_[i - 1] > i) w[i - 1] = '(';
    return w;
}

std::vector<int> Matching::sequence() const {
    std::vector<int> a;
    a.reserve(size());
    for (int i = 1; i <= points(); ++i)
        if (partners_[i - 1] > i) a.push_back(i);
    return a;
}

std::vector<Arch> Matching::arches() const {
    std::vector<Arch> out;
    for (int i = 1; i <= points(); ++i)
        if (partners_[i - 1] > i) out.push_back({i, partners_[i - 1]});
    return out;
}

std::strong_ordering operator<=>(const Matching& x, const Matching& y) {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    for (int i = 1; i <= x.points(); ++i) {
        const bool ox = x.is_opener(i), oy = y.is_opener(i);
        if (ox != oy) return ox ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// ------------------------------------------------------------ YoungDiagram

YoungDiagram::YoungDiagram(std::vector<int> rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0) throw std::invalid_argument("negative row length");
        if (i > 0 && rows[i] > rows[i - 1]) throw std::invalid_argument("row lengths must weakly decrease");
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    rows_ = std::move(rows);
}

int YoungDiagram::column(int y) const {
    int c = 0;
    for (int r : rows_)
        if (r >= y) ++c;
    return c;
}

int YoungDiagram::size() const noexcept {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
}

std::vector<Box> YoungDiagram::boxes() const {
    std::vector<Box> out;
    for (int x = 1; x <= num_rows(); ++x)
        for (int y = 1; y <= rows_[x - 1]; ++y) out.push_back({x, y});
    return out;
}

YoungDiagram YoungDiagram::transpose() const {
    std::vector<int> cols;
    for (int y = 1; y <= row(1); ++y) cols.push_back(column(y));
    return YoungDiagram(std::move(cols));
}

YoungDiagram YoungDiagram::without(Box corner) const {
    if (!contains(corner) || row(corner.x) != corner.y || row(corner.x + 1) >= corner.y)
        throw std::invalid_argument("box is not a corner of the diagram");
    auto rows = rows_;
    rows[corner.x - 1] -= 1;
    return YoungDiagram(std::move(rows));
}

int hook_length(const YoungDiagram& y, Box b) {
    return (y.row(b.x) - b.y) + (y.column(b.y) - b.x) + 1;
}

int content(Box b) { return b.y - b.x; }

mpz_class hook_product(const YoungDiagram& y) {
    mpz_class h = 1;
    for (const auto& b : y.boxes()) h *= hook_length(y, b);
    return h;
}

std::vector<Box> corners(const YoungDiagram& y) {
    std::vector<Box> out;
    for (int x = 1; x <= y.num_rows(); ++x)
        if (y.row(x + 1) < y.row(x)) out.push_back({x, y.row(x)});
    return out;
}

std::vector<Box> outer_rim(const YoungDiagram& y) {
    std::vector<Box> out;
    for (const auto& b : y.boxes())
        if (!y.contains({b.x + 1, b.y + 1})) out.push_back(b);
    return out;
}

DiagramStats diagram_stats(const YoungDiagram& y) {
    DiagramStats s;
    s.hook_product = 1;
    for (const auto& b : y.boxes()) {
        const int h = hook_length(y, b);
        s.hooks.emplace_back(b, h);
        s.contents.emplace_back(b, content(b));
        s.hook_product *= h;
    }
    s.corners = corners(y);
    YoungDiagram rest = y;
    while (!rest.empty()) {
        s.rims.push_back(outer_rim(rest));
        std::vector<int> rows;
        for (int x = 1; x <= rest.num_rows(); ++x) rows.push_back(std::max(0, rest.row(x + 1) - 1));
        rest = YoungDiagram(std::move(rows));
    }
    return s;
}

std::vector<YoungDiagram> diagrams_in_staircase(int n) {
    std::vector<YoungDiagram> out;
    for (const auto& m : enumerate_matchings(n)) out.push_back(young_of(m));
    return out;
}

// ---------------------------------------------------------------- parsing

Matching parse_matching(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.rfind("a:", 0) == 0) {
        std::vector<int> a;
        for (auto part : split(std::string_view(s).substr(2), ','))
            a.push_back(parse_int(part, "a-sequence"));
        return Matching::from_sequence(a);
    }
    if (s.rfind("m:", 0) == 0) {
        std::vector<Arch> arches;
        for (auto part : split(std::string_view(s).substr(2), ';')) {
            auto ends = split(part, '-');
            if (ends.size() != 2)
                throw ParseError(ParseErrorKind::Syntax, "arch '" + std::string(part) + "' is not of the form i-j");
            arches.push_back({parse_int(ends[0], "arch list"), parse_int(ends[1], "arch list")});
        }
        return Matching::from_arches(arches);
    }
    if (s.size() % 2 != 0)
        throw ParseError(ParseErrorKind::Unbalanced, "unbalanced word: odd length " + std::to_string(s.size()));
    return Matching::from_word(s);
}

std::string render_word(const Matching& m) { return m.word(); }

std::string render_sequence(const Matching& m) {
    std::ostringstream os;
    os << "a:";
    auto a = m.sequence();
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    return os.str();
}

std::string render_arches(const Matching& m) {
    std::ostringstream os;
    os << "m:";
    auto arches = m.arches();
    for (std::size_t i = 0; i < arches.size(); ++i)
        os << (i ? ";" : "") << arches[i].open << "-" << arches[i].close;
    return os.str();
}

// ------------------------------------------------------------- statistics

int box_count(const Matching& m) {
    const auto a = m.sequence();
    int d = 0;
    for (int i = 1; i <= m.size(); ++i) d += a[i - 1] - i;
    return d;
}

YoungDiagram young_of(const Matching& m) {
    const auto a = m.sequence();
    const int n = m.size();
    std::vector<int> rows;
    // Row x from the top belongs to a_{n+1-x}.
    for (int x = 1; x <= n; ++x) rows.push_back(a[n - x] - (n + 1 - x));
    return YoungDiagram(std::move(rows));
}

Matching matching_of(const YoungDiagram& y, int n) {
    std::vector<int> a(n);
    for (int i = 1; i <= n; ++i) a[i - 1] = i + y.row(n + 1 - i);
    for (int x = 1; x <= y.num_rows(); ++x)
        if (y.row(x) > n - x) throw std::invalid_argument("diagram does not fit in the size-n staircase");
    return Matching::from_sequence(a, n);
}

Matching conjugate(const Matching& m) {
    const int len = m.points();
    std::vector<int> p(len);
    for (int i = 1; i <= len; ++i) p[i - 1] = len + 1 - m.partner(len + 1 - i);
    return Matching::from_partners(std::move(p));
}

Matching rotate(const Matching& m) {
    const int len = m.points();
    std::vector<int> p(len);
    for (int i = 1; i <= len; ++i) {
        const int src = i % len + 1;               // i+1 modulo 2n
        const int img = (m.partner(src) + len - 2) % len + 1;  // partner - 1 modulo 2n
        p[i - 1] = img;
    }
    return Matching::from_partners(std::move(p));
}

Matching nest(const Matching& m, int p) {
    if (p < 0) throw std::invalid_argument("nesting depth must be nonnegative");
    return Matching::from_word(std::string(p, '(') + m.word() + std::string(p, ')'));
}

Matching compose(const Matching& outer, const Matching& inner) {
    const int p = outer.size();
    const int len = 2 * (outer.size() + inner.size());
    std::vector<int> partners(len);
    auto place_outer = [&](int k) { return k <= p ? k : len - 2 * p + k; };
    for (int k = 1; k <= 2 * p; ++k) partners[place_outer(k) - 1] = place_outer(outer.partner(k));
    for (int k = 1; k <= inner.points(); ++k) partners[p + k - 1] = p + inner.partner(k);
    return Matching::from_partners(std::move(partners));
}

std::optional<Matching> strip_nesting(const Matching& m, int p) {
    if (p < 0 || p >= m.size()) return std::nullopt;
    for (int k = 1; k <= p; ++k)
        if (m.partner(k) != m.points() + 1 - k) return std::nullopt;
    auto w = m.word();
    return Matching::from_word(std::string_view(w).substr(p, w.size() - 2 * p));
}

bool leq(const Matching& sigma, const Matching& pi) {
    if (sigma.size() != pi.size()) throw std::invalid_argument("leq: matchings of different sizes");
    const auto a = sigma.sequence(), b = pi.sequence();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Matching> enumerate_matchings(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_matchings: n must be positive");
    std::vector<Matching> out;
    std::vector<int> a(n);
    auto rec = [&](auto&& self, int i, int prev) -> void {
        if (i > n) {
            out.push_back(Matching::from_sequence(a, n));
            return;
        }
        for (int v = prev + 1; v <= 2 * i - 1; ++v) {
            a[i - 1] = v;
            self(self, i + 1, v);
        }
    };
    a[0] = 1;
    rec(rec, 2, 1);
    return out;
}

mpz_class catalan(int n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    return c / (n + 1);
}

}  // namespace looplab
