#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "msl/multisegment.hpp"

namespace msl {

// All results of one elementary operation on m: for an ordered pair of
// occurrences [s1, l1], [s2, l2] and each admissible shift t (congruent to
// the start difference, max(1, l1-l2+1) <= t <= l1), replace the pair by the
// union (s1, t+l2) and the intersection (s1+t, l1-t), dropping the
// intersection when it is empty.
inline std::vector<multisegment> elementary_ops(const multisegment& m) {
    if (m.lines().size() > 1)
        raise(errc::mixed_lines, "elementary operations act on a single line");
    std::set<multisegment> results;
    const auto& e = m.entries();
    for (auto it = e.begin(); it != e.end(); ++it) {
        for (auto jt = e.begin(); jt != e.end(); ++jt) {
            if (it == jt && it->second < 2) continue;
            const segment& a = it->first;
            const segment& b = jt->first;
            const auto& line = a.line();
            const int l1 = a.length(), l2 = b.length();
            const int lo = std::max(1, l1 - l2 + 1);
            std::vector<int> shifts;
            if (line.infinite()) {
                const int t = b.start() - a.start();
                if (lo <= t && t <= l1) shifts.push_back(t);
            } else {
                const int delta = line.canonical(b.start() - a.start());
                for (int t = lo + ((delta - lo) % line.order + line.order) % line.order; t <= l1;
                     t += line.order)
                    shifts.push_back(t);
            }
            for (int t : shifts) {
                multisegment n = m;
                n.remove(a);
                n.remove(b);
                n.add(segment(line, a.start(), t + l2));
                if (t < l1) n.add(segment(line, a.start() + t, l1 - t));
                results.insert(std::move(n));
            }
        }
    }
    return {results.begin(), results.end()};
}

namespace detail {

// Sum of squared lengths strictly increases under every elementary
// operation, which bounds the BFS below.
inline long length_square_sum(const multisegment& m) {
    long n = 0;
    for (const auto& [s, k] : m.entries()) n += long(k) * s.length() * s.length();
    return n;
}

}  // namespace detail

// All multisegments reachable from m by elementary operations, m included.
inline std::set<multisegment> closure_descendants(const multisegment& m) {
    std::set<multisegment> seen{m};
    std::deque<multisegment> queue{m};
    while (!queue.empty()) {
        multisegment cur = std::move(queue.front());
        queue.pop_front();
        for (auto& next : elementary_ops(cur))
            if (seen.insert(next).second) queue.push_back(next);
    }
    return seen;
}

// n precedes m in the closure order: the orbit of m lies in the closure of
// the orbit of n, i.e. n is reachable from m by elementary operations.
inline bool closure_leq(const multisegment& n, const multisegment& m) {
    if (n == m) return true;
    if (cusp_support_of(n) != cusp_support_of(m)) return false;
    return closure_descendants(m).count(n) > 0;
}

struct hasse_diagram {
    std::vector<multisegment> nodes;                 // canonical order
    std::vector<std::pair<int, int>> edges;          // (lower, upper) covers in the closure order
};

inline hasse_diagram hasse_poset(const cusp_support& s, int bound = 12) {
    hasse_diagram out;
    out.nodes = enumerate_by_support(s, /*aperiodic_only=*/false, bound);
    const int n = static_cast<int>(out.nodes.size());
    std::vector<std::set<multisegment>> desc(n);
    std::map<multisegment, int> index;
    for (int i = 0; i < n; ++i) {
        desc[i] = closure_descendants(out.nodes[i]);
        index[out.nodes[i]] = i;
    }
    auto strictly_below = [&](int lo, int hi) {
        return lo != hi && desc[hi].count(out.nodes[lo]) > 0;
    };
    for (int lo = 0; lo < n; ++lo) {
        for (int hi = 0; hi < n; ++hi) {
            if (!strictly_below(lo, hi)) continue;
            bool covering = true;
            for (const auto& mid : desc[hi]) {
                auto it = index.find(mid);
                if (it == index.end()) continue;
                if (it->second != lo && it->second != hi && strictly_below(lo, it->second)) {
                    covering = false;
                    break;
                }
            }
            if (covering) out.edges.emplace_back(lo, hi);
        }
    }
    return out;
}

// Open orbit <=> unlinked <=> no elementary operation applies; both routes
// are computed and must agree.
inline bool is_open_orbit(const multisegment& m) {
    const bool by_linking = unlinked(m);
    const bool by_ops = elementary_ops(m).empty();
    if (by_linking != by_ops)
        raise(errc::invalid_argument, "open-orbit cross-check failed on " + std::to_string(m.size()) +
                                          " segments");
    return by_linking;
}

// Number of unlinked multisegments with support d over a full finite-order
// line: with D = min d_i, it is #{i : d_i = D} when D > 0 and 1 when D = 0.
inline int count_unlinked_formula(const cuspidal_line& line, const std::vector<int>& d) {
    if (line.infinite()) raise(errc::infinite_line, "count formula needs a finite-order line");
    if (static_cast<int>(d.size()) != line.order)
        raise(errc::invalid_argument, "support vector must list every residue");
    int min = d[0];
    for (int x : d) min = std::min(min, x);
    if (min == 0) return 1;
    int count = 0;
    for (int x : d)
        if (x == min) ++count;
    return count;
}

inline int count_unlinked_brute(const cuspidal_line& line, const std::vector<int>& d, int bound = 12) {
    if (line.infinite()) raise(errc::infinite_line, "brute count needs a finite-order line");
    if (static_cast<int>(d.size()) != line.order)
        raise(errc::invalid_argument, "support vector must list every residue");
    cusp_support s;
    auto& res = s.points[line];
    for (int r = 0; r < line.order; ++r)
        if (d[r] > 0) res[r] = d[r];
    int count = 0;
    for (const auto& m : enumerate_by_support(s, /*aperiodic_only=*/false, bound))
        if (unlinked(m)) ++count;
    return count;
}

// Exact ranks of all path compositions of the graded nilpotent map with one
// Jordan chain per segment: vertex i carries the points of residue i, the
// arrow at i sends each chain cell to its successor (or to zero at the end
// of the chain).
struct rank_table {
    cuspidal_line line;
    std::map<int, int> dims;                    // vertex -> dimension
    std::map<std::pair<int, int>, int> ranks;   // (vertex, path length) -> rank

    int rank(int vertex, int k) const {
        auto it = ranks.find({vertex, k});
        return it == ranks.end() ? 0 : it->second;
    }

    bool operator==(const rank_table&) const = default;
};

namespace detail {

// Rank over the integers via fraction-free Gaussian elimination.
inline int integer_rank(std::vector<std::vector<long long>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const long long f = a[r][c], g = a[rank][c];
            for (int cc = c; cc < cols; ++cc) a[r][cc] = a[r][cc] * g - a[rank][cc] * f;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline rank_table make_rank_table(const multisegment& m) {
    auto lines = m.lines();
    if (lines.size() > 1) raise(errc::mixed_lines, "rank table acts on a single line");
    rank_table out;
    if (lines.empty()) return out;
    out.line = *lines.begin();
    const auto& line = out.line;

    // chain cells: (vertex, index within vertex); successor links follow the
    // segments
    std::map<int, int> next_slot;  // vertex -> next free index
    struct cell {
        int vertex;
        int index;
        int succ = -1;  // flat id of the successor cell, -1 at chain end
    };
    std::vector<cell> cells;
    for (const auto& [s, k] : m.entries()) {
        for (int copy = 0; copy < k; ++copy) {
            int prev = -1;
            for (int j = 0; j < s.length(); ++j) {
                const int v = line.canonical(s.start() + j);
                cells.push_back({v, next_slot[v]++, -1});
                if (prev >= 0) cells[prev].succ = static_cast<int>(cells.size()) - 1;
                prev = static_cast<int>(cells.size()) - 1;
            }
        }
    }
    out.dims = next_slot;

    std::vector<int> vertices;
    for (const auto& [v, dim] : out.dims) vertices.push_back(v);
    const int total = m.mass();
    for (int v : vertices) {
        for (int k = 1; k <= total; ++k) {
            // matrix of the k-step path map out of vertex v, rows = image
            // coordinates, columns = source cells
            std::map<int, std::vector<std::pair<int, int>>> images;  // target vertex -> (tgt idx, src idx)
            bool any = false;
            for (const auto& c : cells) {
                if (c.vertex != v) continue;
                int cur = static_cast<int>(&c - cells.data());
                for (int step = 0; step < k && cur >= 0; ++step) cur = cells[cur].succ;
                if (cur >= 0 && cells[cur].vertex == line.canonical(v + k)) {
                    images[cells[cur].vertex].emplace_back(cells[cur].index, c.index);
                    any = true;
                }
            }
            if (!any) continue;
            const int tv = line.canonical(v + k);
            std::vector<std::vector<long long>> a(out.dims[tv],
                                                  std::vector<long long>(out.dims[v], 0));
            for (const auto& [tgt, idx] : images[tv]) a[tgt][idx] = 1;
            const int r = detail::integer_rank(std::move(a));
            if (r > 0) out.ranks[{v, k}] = r;
        }
    }
    return out;
}

// Degenerations weakly drop every path rank: a dominates b when the graded
// dimensions agree and every rank of a is >= the matching rank of b.
inline bool rank_dominates(const rank_table& a, const rank_table& b) {
    if (a.line != b.line || a.dims != b.dims) return false;
    std::set<std::pair<int, int>> keys;
    for (const auto& [key, r] : a.ranks) keys.insert(key);
    for (const auto& [key, r] : b.ranks) keys.insert(key);
    for (const auto& [v, k] : keys)
        if (a.rank(v, k) < b.rank(v, k)) return false;
    return true;
}

}  // namespace msl
