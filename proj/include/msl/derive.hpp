#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msl/multisegment.hpp"

namespace msl {

// A point rho * v^residue on a cuspidal line; the base point of the
// derivative and socle operators.
struct line_point {
    cuspidal_line line;
    int residue = 0;

    line_point(cuspidal_line l, int r) : line(std::move(l)), residue(line.canonical(r)) {}

    line_point dual() const { return line_point(line.dual(), -residue); }
    line_point shifted(int by) const { return line_point(line, residue + by); }

    auto operator<=>(const line_point&) const = default;
};

// Maximal-pair decomposition at a point: `pairs` lists (segment ending at the
// point, partner ending at point-1) in extraction order; `f_part` is
// everything left over, including segments of other lines.
struct pairs_decomposition {
    std::vector<std::pair<segment, segment>> pairs;
    multisegment f_part;
    line_point point;
};

namespace detail {

inline bool longer(const segment& a, const segment& b) {
    return a.length() > b.length() || (a.length() == b.length() && a < b);
}
inline bool shorter(const segment& a, const segment& b) {
    return a.length() < b.length() || (a.length() == b.length() && a < b);
}

}  // namespace detail

// Recursively extract maximal pairs: Delta1 = the longest segment ending at p
// that has an eligible partner; Delta2 = the shortest segment ending at p-1
// with length >= len(Delta1).  Ties go to the canonically smallest segment.
inline pairs_decomposition pairs_right(const multisegment& m, const line_point& p) {
    // On an order-1 line the point and its predecessor coincide, so the
    // pairing (and every operator built on it) is not defined.
    if (p.line.order == 1)
        raise(errc::unsupported_line, "derivative operators need order > 1 on line " + p.line.id);
    pairs_decomposition out{{}, m, p};
    for (;;) {
        std::optional<segment> d1;
        for (const auto& [s, k] : out.f_part.entries()) {
            if (s.line() != p.line || !s.ends_at(p.residue)) continue;
            bool has_partner = false;
            for (const auto& [t, j] : out.f_part.entries()) {
                if (t.line() != p.line || !t.ends_at(p.residue - 1)) continue;
                if (t.length() >= s.length()) {
                    has_partner = true;
                    break;
                }
            }
            if (!has_partner) continue;
            if (!d1 || detail::longer(s, *d1)) d1 = s;
        }
        if (!d1) break;
        std::optional<segment> d2;
        for (const auto& [t, j] : out.f_part.entries()) {
            if (t.line() != p.line || !t.ends_at(p.residue - 1)) continue;
            if (t.length() < d1->length()) continue;
            if (!d2 || detail::shorter(t, *d2)) d2 = t;
        }
        out.f_part.remove(*d1);
        out.f_part.remove(*d2);
        out.pairs.emplace_back(*d1, *d2);
    }
    return out;
}

// Unpaired segments ending at p (free) and at p-1 (extendable), each listed
// with multiplicity, sorted by length ascending then canonically.
inline std::pair<std::vector<segment>, std::vector<segment>> free_and_extendable(
    const multisegment& m, const line_point& p) {
    auto dec = pairs_right(m, p);
    std::vector<segment> free, ext;
    for (const auto& [s, k] : dec.f_part.entries()) {
        if (s.line() != p.line) continue;
        if (s.ends_at(p.residue))
            free.insert(free.end(), k, s);
        else if (s.ends_at(p.residue - 1))
            ext.insert(ext.end(), k, s);
    }
    auto by_length = [](const segment& a, const segment& b) { return detail::shorter(a, b); };
    std::sort(free.begin(), free.end(), by_length);
    std::sort(ext.begin(), ext.end(), by_length);
    return {free, ext};
}

inline int d_right(const multisegment& m, const line_point& p) {
    return static_cast<int>(free_and_extendable(m, p).first.size());
}

// Shorten the k shortest free segments on the right; nullopt encodes the
// vanishing derivative (distinct from the empty multisegment).
inline std::optional<multisegment> derive_right_k(const multisegment& m, const line_point& p, int k) {
    if (k < 0) raise(errc::invalid_argument, "derivative count must be >= 0");
    auto free = free_and_extendable(m, p).first;
    if (k > static_cast<int>(free.size())) return std::nullopt;
    multisegment out = m;
    for (int i = 0; i < k; ++i) {
        out.remove(free[i]);
        if (auto t = free[i].shifted(shift_kind::minus_right)) out.add(*t);
    }
    return out;
}

inline std::optional<multisegment> derive_right(const multisegment& m, const line_point& p) {
    return derive_right_k(m, p, 1);
}

inline multisegment derive_right_max(const multisegment& m, const line_point& p) {
    auto free = free_and_extendable(m, p).first;
    return *derive_right_k(m, p, static_cast<int>(free.size()));
}

// Extend the longest extendable segment on the right; with none, adjoin the
// point segment [p, p].
inline multisegment soc_right(const multisegment& m, const line_point& p) {
    auto ext = free_and_extendable(m, p).second;
    multisegment out = m;
    if (ext.empty()) {
        out.add(segment(p.line, p.residue, 1));
        return out;
    }
    // longest, ties canonically smallest: the sort is (length asc, canonical
    // asc), so take the first element of the maximal-length block
    segment chosen = ext.back();
    for (auto it = ext.rbegin(); it != ext.rend() && it->length() == ext.back().length(); ++it)
        chosen = *it;
    out.remove(chosen);
    out.add(*chosen.shifted(shift_kind::plus_right));
    return out;
}

// Left operators: dualize, act on the right at the dual point, dualize back.
inline std::optional<multisegment> derive_left_k(const multisegment& m, const line_point& p, int k) {
    auto r = derive_right_k(dual_ms(m), p.dual(), k);
    if (!r) return std::nullopt;
    return dual_ms(*r);
}

inline std::optional<multisegment> derive_left(const multisegment& m, const line_point& p) {
    return derive_left_k(m, p, 1);
}

inline multisegment derive_left_max(const multisegment& m, const line_point& p) {
    return dual_ms(derive_right_max(dual_ms(m), p.dual()));
}

inline int d_left(const multisegment& m, const line_point& p) {
    return d_right(dual_ms(m), p.dual());
}

inline multisegment soc_left(const multisegment& m, const line_point& p) {
    return dual_ms(soc_right(dual_ms(m), p.dual()));
}

}  // namespace msl
