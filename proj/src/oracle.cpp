#include "cdslab/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "cdslab/errors.hpp"

namespace cdslab::oracle {

namespace {

void require_size(std::size_t n, std::size_t limit, const char* who) {
    if (n > limit)
        throw SizeLimitExceeded(std::string(who) + ": size " + std::to_string(n) + " exceeds the brute-force limit " +
                                std::to_string(limit));
}

// ---------------------------------------------------------------- permutations as token strings

// Framed permutation with pointer tokens spliced in: each element x contributes
// [pointer x-1] x [pointer x], omitting the pointers that do not exist.
struct Token {
    bool pointer;
    int value;
};

std::vector<Token> tokenize(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> framed{0};
    framed.insert(framed.end(), a.begin(), a.end());
    framed.push_back(n + 1);
    std::vector<Token> out;
    for (int x : framed) {
        if (x >= 1) out.push_back({true, x - 1});
        out.push_back({false, x});
        if (x <= n) out.push_back({true, x});
    }
    return out;
}

// Token indices of each pointer's two occurrences, ascending.
std::vector<std::array<int, 2>> pointer_slots(const std::vector<Token>& toks, int n) {
    std::vector<std::array<int, 2>> slots(static_cast<std::size_t>(n) + 1, {-1, -1});
    for (int t = 0; t < static_cast<int>(toks.size()); ++t) {
        if (!toks[static_cast<std::size_t>(t)].pointer) continue;
        auto& s = slots[static_cast<std::size_t>(toks[static_cast<std::size_t>(t)].value)];
        (s[0] < 0 ? s[0] : s[1]) = t;
    }
    return slots;
}

bool crosses(const std::array<int, 2>& x, const std::array<int, 2>& y) {
    const bool y0_inside = x[0] < y[0] && y[0] < x[1];
    const bool y1_inside = x[0] < y[1] && y[1] < x[1];
    return y0_inside != y1_inside;
}

std::vector<std::vector<bool>> overlap_bits(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    const auto slots = pointer_slots(tokenize(a), n);
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j && crosses(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j)]))
                adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    return adj;
}

std::optional<std::vector<int>> cds_on(const std::vector<int>& a, int p, int q) {
    const int n = static_cast<int>(a.size());
    if (p <= 0 || q <= 0 || p >= n || q >= n || p == q) return std::nullopt;
    const auto toks = tokenize(a);
    const auto slots = pointer_slots(toks, n);
    const auto sp = slots[static_cast<std::size_t>(p)];
    const auto sq = slots[static_cast<std::size_t>(q)];
    if (!crosses(sp, sq)) return std::nullopt;
    std::array<int, 4> cut{sp[0], sp[1], sq[0], sq[1]};
    std::sort(cut.begin(), cut.end());
    // Elements between consecutive cut tokens form the blocks.
    std::array<std::vector<int>, 5> block;
    for (int t = 0; t < static_cast<int>(toks.size()); ++t) {
        const Token& tok = toks[static_cast<std::size_t>(t)];
        if (tok.pointer || tok.value == 0 || tok.value == n + 1) continue;
        const auto k = static_cast<std::size_t>(std::upper_bound(cut.begin(), cut.end(), t) - cut.begin());
        block[k].push_back(tok.value);
    }
    std::vector<int> out = block[0];
    for (std::size_t k : {3U, 2U, 1U, 4U}) out.insert(out.end(), block[k].begin(), block[k].end());
    return out;
}

std::string key_of(const std::vector<int>& a) { return std::string(a.begin(), a.end()); }

struct CdsEntry {
    bool done = false;
    std::size_t longest = 0;
    bool reaches = false;
};

void explore_cds(const std::vector<int>& a, std::unordered_map<std::string, CdsEntry>& memo) {
    CdsEntry& slot = memo[key_of(a)];
    if (slot.done) return;
    const int n = static_cast<int>(a.size());
    bool identity = true;
    for (int i = 0; i < n; ++i) identity = identity && a[static_cast<std::size_t>(i)] == i + 1;
    CdsEntry result;
    result.reaches = identity;
    for (int p = 1; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const auto next = cds_on(a, p, q);
            if (!next) continue;
            if (auto it = memo.find(key_of(*next)); it != memo.end() && !it->second.done)
                throw InvariantViolation("cds search: move graph has a cycle");
            explore_cds(*next, memo);
            const CdsEntry& child = memo[key_of(*next)];
            result.longest = std::max(result.longest, child.longest + 1);
            result.reaches = result.reaches || child.reaches;
        }
    }
    result.done = true;
    memo[key_of(a)] = result;
}

// ---------------------------------------------------------------- graphs as row bitmasks

using Rows = std::array<std::uint32_t, 16>;

Rows rows_of(const RootedGraph& g) {
    Rows r{};
    const F2Matrix& adj = g.adjacency();
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < g.size(); ++v)
            if (adj.get(u, v)) r[u] |= 1U << v;
    return r;
}

std::uint64_t pack(const Rows& r, std::size_t n) {
    std::uint64_t key = 0;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
            if (r[u] >> v & 1U) key |= std::uint64_t{1} << bit;
    return key;
}

Rows unpack(std::uint64_t key, std::size_t n) {
    Rows r{};
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
            if (key >> bit & 1U) {
                r[u] |= 1U << v;
                r[v] |= 1U << u;
            }
    return r;
}

bool edge(const Rows& r, std::size_t u, std::size_t v) { return r[u] >> v & 1U; }

// Edge {u,v} present afterwards iff f_p(u)f_q(v) + f_q(u)f_p(v) + f_u(v) is odd.
Rows gcds_rows(const Rows& r, std::size_t n, std::size_t p, std::size_t q) {
    Rows out{};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const int sum = (edge(r, p, u) && edge(r, q, v)) + (edge(r, q, u) && edge(r, p, v)) + edge(r, u, v);
            if (sum % 2 == 1) out[u] |= 1U << v;
        }
    return out;
}

struct Profile {
    bool done = false;
    std::size_t min_len = 0;
    std::size_t max_len = 0;
    bool all_edgeless = true;
    bool any_edgeless = false;
};

void explore_gcds(std::uint64_t key, std::size_t n, std::unordered_map<std::uint64_t, Profile>& memo) {
    if (memo[key].done) return;
    const Rows r = unpack(key, n);
    Profile out;
    bool any_move = false;
    for (std::size_t p = 1; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q + 1 < n; ++q) {
            if (!edge(r, p, q)) continue;
            const std::uint64_t child_key = pack(gcds_rows(r, n, p, q), n);
            if (auto it = memo.find(child_key); it != memo.end() && !it->second.done)
                throw InvariantViolation("gcds search: move graph has a cycle");
            explore_gcds(child_key, n, memo);
            const Profile& c = memo[child_key];
            if (!any_move) {
                out.min_len = c.min_len + 1;
                out.max_len = c.max_len + 1;
                out.all_edgeless = c.all_edgeless;
                out.any_edgeless = c.any_edgeless;
            } else {
                out.min_len = std::min(out.min_len, c.min_len + 1);
                out.max_len = std::max(out.max_len, c.max_len + 1);
                out.all_edgeless = out.all_edgeless && c.all_edgeless;
                out.any_edgeless = out.any_edgeless || c.any_edgeless;
            }
            any_move = true;
        }
    }
    if (!any_move) {
        out.all_edgeless = out.any_edgeless = key == 0;
    }
    out.done = true;
    memo[key] = out;
}

// Definitional sortability: some subset with x_first=0, x_last=1 and some with
// x_first=1, x_last=0 meet every vertex's neighbourhood evenly.
bool kernel_sortable(const Rows& r, std::size_t n) {
    bool found01 = false, found10 = false;
    const std::uint32_t first = 1U, last = 1U << (n - 1);
    for (std::uint32_t x = 0; x < (1U << n) && !(found01 && found10); ++x) {
        const bool has_first = x & first, has_last = x & last;
        if (has_first == has_last) continue;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) ok = std::popcount(r[v] & x) % 2 == 0;
        if (!ok) continue;
        (has_last ? found01 : found10) = true;
    }
    return found01 && found10;
}

void tally(std::uint64_t mask, std::size_t n, CensusCounts& acc) {
    const Rows r = unpack(mask, n);
    bool eulerian = true;
    for (std::size_t v = 0; v < n; ++v) eulerian = eulerian && std::popcount(r[v]) % 2 == 0;
    const bool sortable = kernel_sortable(r, n);
    acc.total += 1;
    acc.sortable += sortable;
    acc.eulerian += eulerian;
    acc.eulerian_sortable += eulerian && sortable;
}

// Rank by inserting rows into a basis keyed on highest set bit.
std::size_t xor_basis_rank(const std::vector<std::uint64_t>& rows) {
    std::array<std::uint64_t, 64> basis{};
    std::size_t r = 0;
    for (std::uint64_t x : rows) {
        for (int b = 63; b >= 0 && x; --b) {
            if (!(x >> b & 1U)) continue;
            if (!basis[static_cast<std::size_t>(b)]) {
                basis[static_cast<std::size_t>(b)] = x;
                ++r;
                x = 0;
            } else {
                x ^= basis[static_cast<std::size_t>(b)];
            }
        }
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------- public

SearchStats cds_search(const Permutation& pi) {
    require_size(static_cast<std::size_t>(pi.size()), kMaxSearchSize, "cds_search");
    std::unordered_map<std::string, CdsEntry> memo;
    explore_cds(pi.elements(), memo);
    const CdsEntry& root = memo[key_of(pi.elements())];
    return {memo.size(), root.longest, root.reaches};
}

bool cds_sortable_bruteforce(const Permutation& pi) { return cds_search(pi).result; }

SequenceProfile gcds_sequence_profile(const RootedGraph& g) {
    require_size(g.size(), kMaxSearchSize, "gcds_sequence_profile");
    std::unordered_map<std::uint64_t, Profile> memo;
    const std::uint64_t key = pack(rows_of(g), g.size());
    explore_gcds(key, g.size(), memo);
    const Profile& p = memo[key];
    return {p.min_len, p.max_len, p.all_edgeless, p.any_edgeless, memo.size()};
}

bool gcds_sortable_bruteforce(const RootedGraph& g) { return gcds_sequence_profile(g).any_end_edgeless; }

CensusCounts census_serial(std::size_t n) {
    require_size(n, kMaxCensusSize, "census");
    if (n < 2) throw ContractViolation("census: need at least 2 vertices");
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    CensusCounts acc;
    for (std::uint64_t mask = 0; mask < count; ++mask) tally(mask, n, acc);
    return acc;
}

CensusCounts census_parallel(std::size_t n) {
    require_size(n, kMaxCensusSize, "census");
    if (n < 2) throw ContractViolation("census: need at least 2 vertices");
    const auto count = static_cast<std::int64_t>(std::uint64_t{1} << (n * (n - 1) / 2));
    std::uint64_t total = 0, sortable = 0, eulerian = 0, eulerian_sortable = 0;
#pragma omp parallel for schedule(static) reduction(+ : total, sortable, eulerian, eulerian_sortable)
    for (std::int64_t mask = 0; mask < count; ++mask) {
        CensusCounts local;
        tally(static_cast<std::uint64_t>(mask), n, local);
        total += local.total;
        sortable += local.sortable;
        eulerian += local.eulerian;
        eulerian_sortable += local.eulerian_sortable;
    }
    return {total, sortable, eulerian, eulerian_sortable};
}

mpz_class census_bruteforce(std::size_t n, bool eulerian) {
    const CensusCounts c = census_parallel(n);
    return mpz_class(std::to_string(eulerian ? c.eulerian_sortable : c.sortable));
}

std::vector<F2Vector> parity_cuts_bruteforce(const RootedGraph& g, CutFlavor flavor) {
    const std::size_t n = g.size();
    require_size(n, kMaxCutScanSize, "parity_cuts_bruteforce");
    const Rows r = rows_of(g);
    std::vector<F2Vector> out;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            const int into = std::popcount(r[v] & s);
            const int across = (s >> v & 1U) ? std::popcount(r[v]) - into : into;
            switch (flavor) {
                case CutFlavor::generalized: ok = into % 2 == 0; break;
                case CutFlavor::two_sided_root_even: ok = across % 2 == 0; break;
                case CutFlavor::two_sided_general: ok = v == 0 || v == n - 1 || across % 2 == 0; break;
            }
        }
        if (!ok) continue;
        F2Vector cut(n);
        for (std::size_t v = 0; v < n; ++v) cut.set(v, s >> v & 1U);
        out.push_back(std::move(cut));
    }
    return out;
}

mpz_class n0_bruteforce(std::size_t t, std::size_t r) {
    require_size(t, kMaxN0Size, "n0_bruteforce");
    const std::size_t pairs = t * (t > 0 ? t - 1 : 0) / 2;
    std::uint64_t hits = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const Rows rows = unpack(mask, t);
        if (xor_basis_rank(std::vector<std::uint64_t>(rows.begin(), rows.begin() + static_cast<long>(t))) == r) ++hits;
    }
    return mpz_class(std::to_string(hits));
}

std::optional<Permutation> realizable_bruteforce(const MoveGraphInstance& m) {
    const int n = m.permutation_size();
    require_size(static_cast<std::size_t>(n), kMaxRealizeSize, "realizable_bruteforce");
    const F2Matrix& target = m.adjacency();
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    do {
        const auto adj = overlap_bits(a);
        bool same = true;
        for (int i = 1; i < n && same; ++i)
            for (int j = 1; j < n && same; ++j)
                same = adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                       target.get(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        if (same) return Permutation(a);
    } while (std::next_permutation(a.begin(), a.end()));
    return std::nullopt;
}

F2Matrix overlap_reference(const Permutation& pi) {
    const auto adj = overlap_bits(pi.elements());
    F2Matrix out(adj.size(), adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = 0; j < adj.size(); ++j)
            if (adj[i][j]) out.set(i, j, true);
    return out;
}

std::optional<Permutation> cds_reference(const Permutation& pi, int p, int q) {
    const auto out = cds_on(pi.elements(), p, q);
    if (!out) return std::nullopt;
    return Permutation(*out);
}

std::size_t rank_reference(const F2Matrix& m) {
    // Plain char-matrix elimination, pivoting from the last column leftwards.
    std::vector<std::vector<char>> a(m.rows(), std::vector<char>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.get(i, j) ? 1 : 0;
    std::size_t r = 0;
    for (std::size_t jj = m.cols(); jj-- > 0 && r < m.rows();) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (a[i][jj]) { pivot = i; break; }
        if (pivot == m.rows()) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && a[i][jj])
                for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

}  // namespace cdslab::oracle
