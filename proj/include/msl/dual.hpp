#pragma once

#include <set>

#include "msl/derive.hpp"

namespace msl {

// Canonically smallest point with a nonvanishing right derivative: lines in
// canonical order; residues scanned from 0 on finite lines, segment ends in
// increasing order on infinite ones.
inline line_point choose_derivative_point(const multisegment& m) {
    if (m.empty()) raise(errc::empty_multisegment, "no derivative point on the empty multisegment");
    for (const auto& line : m.lines()) {
        if (line.order == 1)
            raise(errc::unsupported_line, "derivative point search needs order > 1 on line " + line.id);
        if (line.finite_period()) {
            for (int r = 0; r < line.order; ++r) {
                line_point p(line, r);
                if (d_right(m, p) > 0) return p;
            }
        } else {
            std::set<int> ends;
            for (const auto& [s, k] : m.entries())
                if (s.line() == line) ends.insert(s.end());
            for (int e : ends) {
                line_point p(line, e);
                if (d_right(m, p) > 0) return p;
            }
        }
    }
    raise(errc::no_derivative_point, "no point with nonzero right derivative in " +
                                         std::to_string(m.size()) + " segment classes");
}

// Aubert-Zelevinsky dual of an aperiodic multisegment over lines of order > 1
// (infinite allowed): peel a right derivative, dualize recursively, and close
// with the left socle at the same point.
inline multisegment az_dual(const multisegment& m) {
    for (const auto& line : m.lines())
        if (line.order == 1)
            raise(errc::unsupported_line, "dual is not defined over order-1 line " + line.id);
    if (!is_aperiodic(m))
        raise(errc::not_aperiodic, "dual requires an aperiodic multisegment");
    if (m.empty()) return m;
    line_point p = choose_derivative_point(m);
    multisegment n = *derive_right(m, p);
    return soc_left(az_dual(n), p);
}

}  // namespace msl
