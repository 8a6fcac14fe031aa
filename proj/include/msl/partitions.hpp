#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "msl/error.hpp"

namespace msl {

using partition = std::vector<int>;

namespace detail {

inline void check_parts(const partition& p) {
    for (int x : p)
        if (x <= 0) raise(errc::invalid_argument, "partition parts must be positive");
}

}  // namespace detail

inline int partition_sum(const partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline bool is_ordered(const partition& p) {
    return std::is_sorted(p.rbegin(), p.rend());
}

inline partition reverse_partition(const partition& p) {
    detail::check_parts(p);
    return partition(p.rbegin(), p.rend());
}

// Recursive refinement of two compositions with equal sums: chop off the
// smaller head from both sides and keep the remainder of the larger one.
inline partition intersect(const partition& a, const partition& b) {
    detail::check_parts(a);
    detail::check_parts(b);
    if (partition_sum(a) != partition_sum(b))
        raise(errc::unequal_sums, "intersection needs equal sums");
    partition out;
    std::size_t i = 0, j = 0;
    int ra = 0, rb = 0;  // remainders of the current heads
    while (i < a.size() || j < b.size()) {
        if (ra == 0) ra = a[i++];
        if (rb == 0) rb = b[j++];
        const int take = std::min(ra, rb);
        out.push_back(take);
        ra -= take;
        rb -= take;
    }
    return out;
}

inline bool dominance_leq(const partition& a, const partition& b) {
    detail::check_parts(a);
    detail::check_parts(b);
    if (!is_ordered(a) || !is_ordered(b))
        raise(errc::not_ordered, "dominance needs weakly decreasing partitions");
    if (partition_sum(a) != partition_sum(b))
        raise(errc::unequal_sums, "dominance needs equal sums");
    int pa = 0, pb = 0;
    const std::size_t t = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < t; ++i) {
        pa += a[i];
        pb += b[i];
        if (pa > pb) return false;
    }
    return true;
}

inline bool is_ell_regular(const partition& p, int ell) {
    detail::check_parts(p);
    if (!is_ordered(p)) raise(errc::not_ordered, "regularity test needs an ordered partition");
    if (ell < 2) raise(errc::invalid_argument, "ell must be >= 2");
    std::map<int, int> mult;
    for (int x : p)
        if (++mult[x] >= ell) return false;
    return true;
}

// Number of semistandard tableaux of shape lambda (ordered) and content mu
// (any composition): exhaustive row-weak / column-strict filling.
inline long kostka(const partition& lambda, const partition& mu) {
    detail::check_parts(lambda);
    detail::check_parts(mu);
    if (!is_ordered(lambda)) raise(errc::not_ordered, "shape must be weakly decreasing");
    if (partition_sum(lambda) != partition_sum(mu))
        raise(errc::unequal_sums, "shape and content must have equal sums");

    const int rows = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lambda[r], 0);
    partition budget = mu;
    long count = 0;

    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        if (c == lambda[r]) {
            self(self, r + 1, 0);
            return;
        }
        const int min_row = c > 0 ? tab[r][c - 1] : 1;                       // weak along rows
        const int min_col = r > 0 && c < lambda[r - 1] ? tab[r - 1][c] + 1 : 1;  // strict down columns
        for (int v = std::max(min_row, min_col); v <= static_cast<int>(mu.size()); ++v) {
            if (budget[v - 1] == 0) continue;
            --budget[v - 1];
            tab[r][c] = v;
            self(self, r, c + 1);
            ++budget[v - 1];
        }
    };
    fill(fill, 0, 0);
    return count;
}

}  // namespace msl
