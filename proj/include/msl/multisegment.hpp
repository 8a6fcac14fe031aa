#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <vector>

#include "msl/segment.hpp"

namespace msl {

// Multiset of canonical segments, possibly across several lines.  Canonical
// form: map ordered by (line, start, length), multiplicities >= 1.
class multisegment {
public:
    using entry_map = std::map<segment, int>;

    multisegment() = default;

    static multisegment of(std::initializer_list<segment> segs) {
        multisegment m;
        for (const auto& s : segs) m.add(s);
        return m;
    }

    const entry_map& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int size() const {
        int n = 0;
        for (const auto& [s, k] : entries_) n += k;
        return n;
    }

    int degree() const {
        int n = 0;
        for (const auto& [s, k] : entries_) n += k * s.degree();
        return n;
    }

    // Total number of line points covered, with multiplicity.
    int mass() const {
        int n = 0;
        for (const auto& [s, k] : entries_) n += k * s.length();
        return n;
    }

    int count(const segment& s) const {
        auto it = entries_.find(s);
        return it == entries_.end() ? 0 : it->second;
    }

    void add(const segment& s, int k = 1) {
        if (k < 0) raise(errc::invalid_argument, "negative multiplicity");
        if (k == 0) return;
        entries_[s] += k;
    }

    void remove(const segment& s, int k = 1) {
        auto it = entries_.find(s);
        if (it == entries_.end() || it->second < k)
            raise(errc::invalid_argument, "removing absent segment " + s.str());
        it->second -= k;
        if (it->second == 0) entries_.erase(it);
    }

    multisegment plus(const multisegment& other) const {
        multisegment out = *this;
        for (const auto& [s, k] : other.entries_) out.add(s, k);
        return out;
    }

    std::set<cuspidal_line> lines() const {
        std::set<cuspidal_line> out;
        for (const auto& [s, k] : entries_) out.insert(s.line());
        return out;
    }

    auto operator<=>(const multisegment&) const = default;

private:
    entry_map entries_;
};

inline multisegment dual_ms(const multisegment& m) {
    multisegment out;
    for (const auto& [s, k] : m.entries()) out.add(s.dual(), k);
    return out;
}

// No two segment occurrences (including two copies of one class) linked.
inline bool unlinked(const multisegment& m) {
    const auto& e = m.entries();
    for (auto it = e.begin(); it != e.end(); ++it) {
        if (it->second >= 2 && linked(it->first, it->first)) return false;
        for (auto jt = std::next(it); jt != e.end(); ++jt) {
            if (!it->first.same_line(jt->first)) continue;
            if (linked(it->first, jt->first)) return false;
        }
    }
    return true;
}

// Aperiodic: contains no full e-cycle [a,b]+[a+1,b+1]+...+[a+e-1,b+e-1].
// Infinite lines are always aperiodic.  For order > 1 the cycle consists of
// one copy of every residue class of some fixed length; for order = 1 the
// shifted classes coincide, so the cycle is ell copies of one class.
inline bool is_aperiodic(const multisegment& m) {
    std::map<cuspidal_line, std::map<int, std::set<int>>> seen;  // line -> length -> starts
    for (const auto& [s, k] : m.entries()) {
        const auto& line = s.line();
        if (line.infinite()) continue;
        if (line.order == 1) {
            if (k >= line.ell) return false;
            continue;
        }
        auto& starts = seen[line][s.length()];
        starts.insert(s.start());
        if (static_cast<int>(starts.size()) == line.order) return false;
    }
    return true;
}

inline multisegment ms_top(const multisegment& m) {
    multisegment out;
    for (const auto& [s, k] : m.entries())
        out.add(segment(s.line(), s.end(), 1), k);
    return out;
}

inline multisegment ms_minus(const multisegment& m) {
    multisegment out;
    for (const auto& [s, k] : m.entries())
        if (auto t = s.shifted(shift_kind::minus_right)) out.add(*t, k);
    return out;
}

inline multisegment ms_level(const multisegment& m, int s) {
    if (s < 1) raise(errc::invalid_argument, "level must be >= 1");
    multisegment cur = m;
    for (int i = 1; i < s; ++i) cur = ms_minus(cur);
    return ms_top(cur);
}

// (deg m^1, deg m^2, ...) down to the last nonempty level; sums to deg(m).
inline std::vector<int> mu_partition(const multisegment& m) {
    if (m.empty()) raise(errc::empty_multisegment, "mu of the empty multisegment");
    std::vector<int> out;
    multisegment cur = m;
    while (!cur.empty()) {
        out.push_back(ms_top(cur).degree());
        cur = ms_minus(cur);
    }
    return out;
}

struct cusp_support {
    // line -> residue -> multiplicity >= 1
    std::map<cuspidal_line, std::map<int, int>> points;

    int total_mass() const {
        int n = 0;
        for (const auto& [line, res] : points)
            for (const auto& [r, k] : res) n += k;
        return n;
    }

    bool operator==(const cusp_support&) const = default;
};

inline cusp_support cusp_support_of(const multisegment& m) {
    cusp_support out;
    for (const auto& [s, k] : m.entries()) {
        auto& res = out.points[s.line()];
        for (int i = 0; i < s.length(); ++i) res[s.line().canonical(s.start() + i)] += k;
    }
    return out;
}

// Right-derivative-compatible lift onto the companion infinite line: each end
// residue e lifts to the representative in {-1, 0, 1, ..., order-2}.
inline multisegment lift_right_compatible(const multisegment& m) {
    multisegment out;
    for (const auto& [s, k] : m.entries()) {
        const auto& line = s.line();
        cuspidal_line up = line.lifted();  // rejects order 1 and infinite lines
        const int e = s.end_residue();
        const int lifted_end = (e == line.order - 1) ? -1 : e;
        out.add(segment(up, lifted_end - s.length() + 1, s.length()), k);
    }
    return out;
}

// Reduce segments on the companion infinite line of `target` back mod its
// order; segments on other lines pass through untouched.
inline multisegment reduce_mod_ell(const multisegment& m, const cuspidal_line& target) {
    if (target.infinite())
        raise(errc::unsupported_line, "reduction target must have finite order");
    multisegment out;
    for (const auto& [s, k] : m.entries()) {
        if (s.line().infinite() && s.line().id == target.id && s.line().dualized == target.dualized)
            out.add(segment(target, s.start(), s.length()), k);
        else
            out.add(s, k);
    }
    return out;
}

namespace detail {

inline void enumerate_line_support(const cuspidal_line& line, const std::map<int, int>& support,
                                   std::vector<multisegment>& out) {
    // Candidate segments in canonical order, with per-copy coverage counts.
    struct candidate {
        segment seg;
        std::vector<std::pair<int, int>> cover;  // (residue index, count per copy)
    };
    std::vector<int> residues;
    std::map<int, int> index_of;
    for (const auto& [r, k] : support) {
        index_of[r] = static_cast<int>(residues.size());
        residues.push_back(r);
    }
    std::vector<int> remaining;
    for (const auto& [r, k] : support) remaining.push_back(k);
    const int mass = [&] {
        int n = 0;
        for (int k : remaining) n += k;
        return n;
    }();

    std::vector<candidate> cands;
    auto try_candidate = [&](int start, int length) {
        std::map<int, int> cover;
        for (int i = 0; i < length; ++i) {
            int r = line.canonical(start + i);
            auto it = index_of.find(r);
            if (it == index_of.end()) return;
            ++cover[it->second];
        }
        for (const auto& [idx, c] : cover)
            if (c > remaining[idx]) return;
        candidate cd{segment(line, start, length), {cover.begin(), cover.end()}};
        cands.push_back(std::move(cd));
    };
    for (int r : residues)
        for (int l = 1; l <= mass; ++l) try_candidate(r, l);

    // Residues reachable by candidates i..end, for dead-branch pruning.
    const int n = static_cast<int>(cands.size());
    std::vector<std::uint64_t> suffix_mask(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        suffix_mask[i] = suffix_mask[i + 1];
        for (const auto& [idx, c] : cands[i].cover) suffix_mask[i] |= std::uint64_t(1) << idx;
    }

    multisegment acc;
    auto dfs = [&](auto&& self, int i) -> void {
        bool exhausted = true;
        for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
            if (remaining[idx] == 0) continue;
            exhausted = false;
            if (i >= n || !(suffix_mask[i] >> idx & 1)) return;  // residue unreachable
        }
        if (exhausted) {
            out.push_back(acc);
            return;
        }
        const auto& cd = cands[i];
        int kmax = mass;
        for (const auto& [idx, c] : cd.cover) kmax = std::min(kmax, remaining[idx] / c);
        for (int k = kmax; k >= 0; --k) {
            if (k > 0)
                for (const auto& [idx, c] : cd.cover) remaining[idx] -= k * c;
            acc.add(cd.seg, k);
            self(self, i + 1);
            if (k > 0) {
                acc.remove(cd.seg, k);
                for (const auto& [idx, c] : cd.cover) remaining[idx] += k * c;
            }
        }
    };
    dfs(dfs, 0);
}

}  // namespace detail

// All multisegments with the given cuspidal support, canonically ordered.
inline std::vector<multisegment> enumerate_by_support(const cusp_support& s, bool aperiodic_only,
                                                      int bound = 12) {
    if (s.total_mass() > bound)
        raise(errc::too_large, "support mass " + std::to_string(s.total_mass()) +
                                   " exceeds bound " + std::to_string(bound));
    std::vector<multisegment> results{multisegment{}};
    for (const auto& [line, support] : s.points) {
        bool trivial = true;
        for (const auto& [r, k] : support)
            if (k > 0) trivial = false;
        if (trivial) continue;
        std::vector<multisegment> per_line;
        detail::enumerate_line_support(line, support, per_line);
        std::vector<multisegment> next;
        next.reserve(results.size() * per_line.size());
        for (const auto& a : results)
            for (const auto& b : per_line) next.push_back(a.plus(b));
        results = std::move(next);
    }
    if (aperiodic_only) {
        std::vector<multisegment> filtered;
        for (auto& m : results)
            if (is_aperiodic(m)) filtered.push_back(std::move(m));
        results = std::move(filtered);
    }
    std::sort(results.begin(), results.end());
    results.erase(std::unique(results.begin(), results.end()), results.end());
    return results;
}

}  // namespace msl
