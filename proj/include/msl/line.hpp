#pragma once

#include <compare>
#include <string>

#include "msl/error.hpp"

namespace msl {

// A cuspidal line: the Z-orbit a supercuspidal support lives on.  `order` is
// the size of the twist orbit (0 encodes an infinite orbit), `ell` the residue
// characteristic used when the orbit is a fixed point, `cusp_degree` the degree
// of the underlying cuspidal, `algebra_degree` the degree of the associated
// division-algebra parameter.  `dualized` marks the contragredient line, which
// shares every numeric invariant but inverts the unit token.
struct cuspidal_line {
    static constexpr int infinite_order = 0;

    std::string id;
    int order = infinite_order;  // 0 means infinite
    int ell = 0;                 // only meaningful when order == 1
    int cusp_degree = 1;
    int algebra_degree = 1;
    bool unramified_char = false;
    std::string unit_token;      // only meaningful when unramified_char
    bool dualized = false;

    auto operator<=>(const cuspidal_line&) const = default;

    bool infinite() const { return order == infinite_order; }

    void validate() const {
        if (order < 0) raise(errc::invalid_argument, "line " + id + ": order must be positive or infinite");
        if (cusp_degree < 1) raise(errc::invalid_argument, "line " + id + ": deg must be positive");
        if (algebra_degree < 1) raise(errc::invalid_argument, "line " + id + ": d must be positive");
        if (order == 1 && ell < 2) raise(errc::invalid_argument, "line " + id + ": order 1 requires ell >= 2");
        if (unramified_char && unit_token.empty())
            raise(errc::invalid_argument, "line " + id + ": unramified line requires a unit token");
    }

    // Period of the line: orbit size for a moving orbit, ell for a fixed point.
    // Infinite lines have infinite period; callers must check first.
    int period() const {
        if (infinite()) raise(errc::infinite_line, "line " + id + ": period is infinite");
        return order > 1 ? order : ell;
    }

    bool finite_period() const { return !infinite(); }

    // Square-irreducible lines are exactly those with order > 1 (including
    // infinite order).
    bool square_irreducible() const { return order != 1; }

    cuspidal_line dual() const {
        cuspidal_line d = *this;
        d.dualized = !dualized;
        return d;
    }

    // Reduce an exponent to the canonical residue in [0, order); identity on
    // infinite lines.
    int canonical(int x) const {
        if (infinite()) return x;
        int r = x % order;
        return r < 0 ? r + order : r;
    }

    // True when x == y as points of the line.
    bool same_point(int x, int y) const {
        return infinite() ? x == y : canonical(x - y) == 0;
    }

    // The companion infinite line used to lift mod-ell segments.
    cuspidal_line lifted() const {
        if (infinite()) raise(errc::unsupported_line, "line " + id + " is already infinite");
        if (order < 2) raise(errc::unsupported_line, "line " + id + ": lifting requires order >= 2");
        cuspidal_line up = *this;
        up.order = infinite_order;
        up.ell = 0;
        return up;
    }

    std::string display_id() const { return dualized ? id + "^" : id; }
};

}  // namespace msl
