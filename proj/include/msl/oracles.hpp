#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "msl/multisegment.hpp"
#include "msl/partitions.hpp"

namespace msl::oracle {

// Reference implementation of `precedes` by explicit representative search:
// scan start representatives of b over a window of width two orders around a.
inline bool precedes_brute(const segment& a, const segment& b) {
    if (!a.same_line(b)) raise(errc::different_lines, "precedes: segments live on different lines");
    const int sa = a.start(), ea = sa + a.length() - 1;
    auto fits = [&](int sb) {
        const int eb = sb + b.length() - 1;
        return sa + 1 <= sb && sb <= ea + 1 && ea + 1 <= eb;
    };
    if (a.line().infinite()) return fits(b.start());
    const int o = a.line().order;
    for (int j = -2 * o; j <= 2 * o; ++j)
        if (fits(b.start() + j * o)) return true;
    return false;
}

// Classical involution on infinite lines, computed by repeated extraction of
// a maximal descending chain of segment ends: start from a minimal-length
// segment with the maximal end e; repeatedly continue to a minimal-length
// segment ending one lower whose start is strictly smaller; the chain of
// length k contributes the dual segment [e-k+1, e], and every chain member
// is shortened on the right before the next round.
inline multisegment mw_dual(const multisegment& m) {
    for (const auto& line : m.lines())
        if (!line.infinite()) raise(errc::unsupported_line, "oracle is for infinite lines only");
    multisegment work = m;
    multisegment out;
    while (!work.empty()) {
        int e = 0;
        bool first = true;
        for (const auto& [s, k] : work.entries()) {
            if (first || s.end() > e) e = s.end();
            first = false;
        }
        std::vector<segment> chain;
        int at = e;
        const segment* cur = nullptr;
        for (;;) {
            const segment* best = nullptr;
            for (const auto& [s, k] : work.entries()) {
                if (s.end() != at) continue;
                if (cur && s.start() >= cur->start()) continue;
                if (!best || s.length() < best->length()) best = &s;
            }
            if (!best) break;
            chain.push_back(*best);
            cur = &chain.back();
            --at;
        }
        const int k = static_cast<int>(chain.size());
        out.add(segment(chain.front().line(), e - k + 1, k));
        for (const auto& s : chain) {
            work.remove(s);
            if (auto t = s.shifted(shift_kind::minus_right)) work.add(*t);
        }
    }
    return out;
}

// All partitions of n in weakly decreasing order.
inline std::vector<partition> all_partitions(int n) {
    std::vector<partition> out;
    partition cur;
    auto gen = [&](auto&& self, int left, int max) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, max); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    gen(gen, n, n);
    return out;
}

// Kostka number via the horizontal-strip recursion: peel the cells holding
// the last content entry, which must form a horizontal strip.
inline long kostka_strips(const partition& shape, const partition& content) {
    if (content.empty()) return shape.empty() ? 1 : 0;
    const int c = content.back();
    partition rest(content.begin(), content.end() - 1);
    long total = 0;
    partition inner(shape.size(), 0);
    auto recurse = [&](auto&& self, std::size_t row, int removed) -> void {
        if (row == shape.size()) {
            if (removed != c) return;
            partition nu;
            for (int x : inner)
                if (x > 0) nu.push_back(x);
            total += kostka_strips(nu, rest);
            return;
        }
        const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (int keep = shape[row]; keep >= below; --keep) {
            if (row > 0 && keep > inner[row - 1]) continue;  // keep inner a partition shape
            const int drop = shape[row] - keep;
            if (removed + drop > c) continue;
            inner[row] = keep;
            self(self, row + 1, removed + drop);
        }
    };
    recurse(recurse, 0, 0);
    return total;
}

inline long count_ell_regular(int n, int ell) {
    long c = 0;
    for (const auto& p : all_partitions(n)) {
        bool ok = true;
        int run = 0, prev = 0;
        for (int x : p) {
            run = x == prev ? run + 1 : 1;
            prev = x;
            if (run >= ell) ok = false;
        }
        if (ok) ++c;
    }
    return c;
}

inline long count_ell_class_regular(int n, int ell) {
    long c = 0;
    for (const auto& p : all_partitions(n)) {
        bool ok = true;
        for (int x : p)
            if (x % ell == 0) ok = false;
        if (ok) ++c;
    }
    return c;
}

}  // namespace msl::oracle
