#include "cdslab/permutation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "cdslab/errors.hpp"

namespace cdslab {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> elements) : a_(std::move(elements)) {
    const int n = static_cast<int>(a_.size());
    if (n < 1) throw ContractViolation("Permutation: need at least one element");
    pos_.assign(static_cast<std::size_t>(n) + 2, -1);
    pos_[0] = 0;
    pos_[static_cast<std::size_t>(n) + 1] = n + 1;
    for (int i = 0; i < n; ++i) {
        const int x = a_[static_cast<std::size_t>(i)];
        if (x < 1 || x > n) throw ContractViolation("Permutation: element " + std::to_string(x) + " outside 1.." + std::to_string(n));
        if (pos_[static_cast<std::size_t>(x)] != -1) throw ContractViolation("Permutation: element " + std::to_string(x) + " repeated");
        pos_[static_cast<std::size_t>(x)] = i + 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(a));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i) if (at(i) != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a_[i]);
    }
    return s + "]";
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size() && is_sep(text[i])) ++i;
    bool bracketed = i < text.size() && text[i] == '[';
    if (bracketed) ++i;
    while (i < text.size()) {
        const char c = text[i];
        if (is_sep(c)) { ++i; continue; }
        if (c == ']') {
            if (!bracketed) throw ContractViolation("permutation text: unmatched ']'");
            bracketed = false;
            ++i;
            while (i < text.size() && is_sep(text[i])) ++i;
            if (i != text.size()) throw ContractViolation("permutation text: trailing characters after ']'");
            break;
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + i)
            throw ContractViolation("permutation text: unexpected character '" + std::string(1, c) + "'");
        values.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    if (bracketed) throw ContractViolation("permutation text: missing ']'");
    return Permutation(std::move(values));
}

std::vector<int> StrategicPile::as_set() const {
    std::vector<int> s = ordered;
    std::sort(s.begin(), s.end());
    return s;
}

std::string StrategicPile::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ordered[i]);
    }
    return s + ")";
}

std::string CycleNotation::to_string() const {
    std::string s;
    for (const auto& cyc : cycles) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

// ---------------------------------------------------------------- pointers

namespace {

// Pointer (i,i+1) sits at the right of element i and the left of element i+1.
// Slot 2k is the left side of framed position k and slot 2k+1 its right side,
// so the gap between positions k and k+1 holds slots 2k+1 and 2k+2.
std::array<int, 2> occurrences(const Permutation& pi, int i) {
    const int right_of_i = 2 * pi.position(i) + 1;
    const int left_of_next = 2 * pi.position(i + 1);
    return {std::min(right_of_i, left_of_next), std::max(right_of_i, left_of_next)};
}

bool interleave(const std::array<int, 2>& x, const std::array<int, 2>& y) {
    return (x[0] < y[0] && y[0] < x[1] && x[1] < y[1]) || (y[0] < x[0] && x[0] < y[1] && y[1] < x[1]);
}

int gap_of(int slot) { return (slot - 1) / 2; }

std::string pointer_name(int i) { return "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")"; }

std::string pattern_of(const std::array<int, 2>& p, const std::array<int, 2>& q) {
    std::array<std::pair<int, char>, 4> occ{{{p[0], 'p'}, {p[1], 'p'}, {q[0], 'q'}, {q[1], 'q'}}};
    std::sort(occ.begin(), occ.end());
    std::string s;
    for (auto& [slot, name] : occ) {
        if (!s.empty()) s += ' ';
        s += name;
    }
    return s;
}

}  // namespace

Permutation block_interchange(const Permutation& pi, Interval first, Interval second) {
    const int n = pi.size();
    if (first.first < 1 || first.first > first.last || first.last >= second.first || second.first > second.last ||
        second.last > n)
        throw ContractViolation("block_interchange: need 1 <= a <= b < c <= d <= n for blocks [a,b] and [c,d]");
    const auto& a = pi.elements();
    auto it = [&](int pos) { return a.begin() + (pos - 1); };
    std::vector<int> out(a.begin(), it(first.first));
    out.insert(out.end(), it(second.first), it(second.last + 1));
    out.insert(out.end(), it(first.last + 1), it(second.first));
    out.insert(out.end(), it(first.first), it(first.last + 1));
    out.insert(out.end(), it(second.last + 1), a.end());
    return Permutation(std::move(out));
}

bool is_cds_context(const Permutation& pi, Pointer p, Pointer q) {
    const int n = pi.size();
    if (p.value < 1 || p.value > n - 1 || q.value < 1 || q.value > n - 1 || p.value == q.value) return false;
    return interleave(occurrences(pi, p.value), occurrences(pi, q.value));
}

std::vector<Context> cds_contexts(const Permutation& pi) {
    const int n = pi.size();
    std::vector<std::array<int, 2>> occ(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) occ[static_cast<std::size_t>(i)] = occurrences(pi, i);
    std::vector<Context> out;
    for (int p = 1; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (interleave(occ[static_cast<std::size_t>(p)], occ[static_cast<std::size_t>(q)]))
                out.push_back({Pointer{p}, Pointer{q}});
    return out;
}

Permutation apply_cds(const Permutation& pi, Pointer p, Pointer q) {
    const int n = pi.size();
    for (Pointer x : {p, q}) {
        if (x.value < 0 || x.value > n)
            throw InvalidMove("cds: pointer " + std::to_string(x.value) + " does not exist for n=" + std::to_string(n));
        if (x.value == 0 || x.value == n)
            throw InvalidMove("cds: root pointer " + pointer_name(x.value) + " cannot be used as context");
    }
    if (p.value == q.value) throw InvalidMove("cds: context needs two distinct pointers");
    const auto op = occurrences(pi, p.value);
    const auto oq = occurrences(pi, q.value);
    if (!interleave(op, oq))
        throw InvalidMove("cds: pointers " + pointer_name(p.value) + " and " + pointer_name(q.value) +
                          " do not interleave; occurrence pattern is '" + pattern_of(op, oq) +
                          "', expected 'p q p q'");

    std::array<int, 4> slots{op[0], op[1], oq[0], oq[1]};
    std::sort(slots.begin(), slots.end());
    const int g1 = gap_of(slots[0]), g2 = gap_of(slots[1]), g3 = gap_of(slots[2]), g4 = gap_of(slots[3]);

    // Framed positions: alpha2 = (g1, g2], alpha3 = (g2, g3], alpha4 = (g3, g4].
    std::vector<int> framed(static_cast<std::size_t>(n) + 2);
    framed[0] = 0;
    for (int i = 1; i <= n; ++i) framed[static_cast<std::size_t>(i)] = pi.at(i);
    framed[static_cast<std::size_t>(n) + 1] = n + 1;
    auto span = [&](int lo, int hi) {  // framed positions lo+1..hi
        return std::vector<int>(framed.begin() + lo + 1, framed.begin() + hi + 1);
    };
    std::vector<int> out = span(-1, g1);
    for (auto& block : {span(g3, g4), span(g2, g3), span(g1, g2), span(g4, n + 1)})
        out.insert(out.end(), block.begin(), block.end());
    return Permutation(std::vector<int>(out.begin() + 1, out.end() - 1));
}

// ---------------------------------------------------------------- cycles

CycleGraph cycle_graph(const Permutation& pi) {
    const int n = pi.size();
    CycleGraph g;
    g.n = n;
    for (int i = 0; i <= n; ++i) g.black_edges.emplace_back(i, i + 1);
    g.gray_edges.emplace_back(n + 1, pi.at(n));
    for (int i = n; i >= 2; --i) g.gray_edges.emplace_back(pi.at(i), pi.at(i - 1));
    g.gray_edges.emplace_back(pi.at(1), 0);
    return g;
}

CycleNotation cycle_notation(const Permutation& pi) {
    const int n = pi.size();
    // X = (0 1 ... n); Y = (a_n a_{n-1} ... a_1 0); C = Y o X.
    std::vector<int> y(static_cast<std::size_t>(n) + 1);
    y[0] = pi.at(n);
    y[static_cast<std::size_t>(pi.at(1))] = 0;
    for (int k = 2; k <= n; ++k) y[static_cast<std::size_t>(pi.at(k))] = pi.at(k - 1);

    CycleNotation out;
    out.map.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out.map[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>((i + 1) % (n + 1))];

    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int start = 0; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = out.map[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
        }
        out.cycles.push_back(std::move(cyc));  // ascending start => already rotated to its minimum
    }
    return out;
}

StrategicPile strategic_pile(const Permutation& pi) {
    const int n = pi.size();
    const auto c = cycle_notation(pi);
    StrategicPile pile;
    for (int x = c.map[static_cast<std::size_t>(n)]; x != n; x = c.map[static_cast<std::size_t>(x)]) {
        if (x == 0) return pile;
        pile.ordered.push_back(x);
    }
    return StrategicPile{};  // came back to n without meeting 0
}

bool is_cds_sortable(const Permutation& pi) { return strategic_pile(pi).empty(); }

std::optional<std::vector<Context>> cds_sort_sequence(const Permutation& pi) {
    if (!is_cds_sortable(pi)) return std::nullopt;
    std::vector<Context> moves;
    Permutation cur = pi;
    for (auto ctx = cds_contexts(cur); !ctx.empty(); ctx = cds_contexts(cur)) {
        moves.push_back(ctx.front());
        cur = apply_cds(cur, ctx.front().first, ctx.front().second);
    }
    if (!cur.is_identity())
        throw InvariantViolation("cds_sort_sequence: sortable permutation " + pi.to_string() + " got stuck at " +
                                 cur.to_string());
    return moves;
}

// ---------------------------------------------------------------- matrices

RootedGraph overlap_graph(const Permutation& pi) {
    const int n = pi.size();
    std::vector<std::array<int, 2>> occ(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) occ[static_cast<std::size_t>(i)] = occurrences(pi, i);
    F2Matrix adj(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (interleave(occ[static_cast<std::size_t>(i)], occ[static_cast<std::size_t>(j)])) {
                adj.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
                adj.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i), true);
            }
    return RootedGraph(std::move(adj));
}

std::vector<F2Vector> alternating_cycles(const Permutation& pi) {
    const auto c = cycle_notation(pi);
    std::vector<F2Vector> out;
    for (const auto& cyc : c.cycles) {
        F2Vector v(static_cast<std::size_t>(pi.size()) + 1);
        for (int x : cyc) v.set(static_cast<std::size_t>(x), true);
        out.push_back(std::move(v));
    }
    return out;
}

F2Vector strategic_pile_vector(const Permutation& pi) {
    F2Vector v(static_cast<std::size_t>(pi.size()) + 1);
    for (int x : strategic_pile(pi).ordered) v.set(static_cast<std::size_t>(x), true);
    return v;
}

F2Matrix precedence_matrix(const Permutation& pi) {
    const auto m = static_cast<std::size_t>(pi.size()) + 2;
    F2Matrix p(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (pi.position(static_cast<int>(i)) < pi.position(static_cast<int>(j))) p.set(i, j, true);
    return p;
}

}  // namespace cdslab
