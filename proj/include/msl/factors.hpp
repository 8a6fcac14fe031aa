#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "msl/multisegment.hpp"

namespace msl {

// Product of symbolic unit tokens with integer exponents; empty = 1.
struct unit_monomial {
    std::map<std::string, int> exponents;

    static unit_monomial one() { return {}; }
    static unit_monomial token(const std::string& name, int exp = 1) {
        unit_monomial u;
        if (exp != 0) u.exponents[name] = exp;
        return u;
    }

    unit_monomial inverse() const {
        unit_monomial u;
        for (const auto& [t, e] : exponents) u.exponents[t] = -e;
        return u;
    }

    unit_monomial times(const unit_monomial& other) const {
        unit_monomial u = *this;
        for (const auto& [t, e] : other.exponents) {
            u.exponents[t] += e;
            if (u.exponents[t] == 0) u.exponents.erase(t);
        }
        return u;
    }

    auto operator<=>(const unit_monomial&) const = default;
};

// One factor (1 - unit * q^{q2exp/2} * T)^{-1}; exponents of q live in half
// integers and are stored doubled.
struct l_factor_term {
    unit_monomial unit;
    int q2exp = 0;

    auto operator<=>(const l_factor_term&) const = default;
};

// Formal product of such factors; the empty product is the constant 1.
struct formal_l_factor {
    std::vector<l_factor_term> terms;  // kept canonically sorted

    static formal_l_factor one() { return {}; }

    formal_l_factor times(const formal_l_factor& other) const {
        formal_l_factor out = *this;
        out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
        std::sort(out.terms.begin(), out.terms.end());
        return out;
    }

    bool trivial() const { return terms.empty(); }

    auto operator<=>(const formal_l_factor&) const = default;
};

inline formal_l_factor single_factor(unit_monomial unit, int q2exp) {
    formal_l_factor f;
    f.terms.push_back({std::move(unit), q2exp});
    return f;
}

namespace detail {

// The integer end used in the exponent formula: the canonical end on an
// infinite line, the right-derivative-compatible lifted end ({-1, 0, ...,
// order-2}) on a finite one.
inline int factor_end(const segment& s) {
    const auto& line = s.line();
    if (line.infinite()) return s.end();
    const int e = s.end_residue();
    return e == line.order - 1 ? -1 : e;
}

}  // namespace detail

// L-factor of a single segment: nontrivial exactly on unramified
// square-irreducible lines, where [a, b] contributes the factor with
// exponent -d*b + (1-d)/2.
inline formal_l_factor gj_L_segment(const segment& s) {
    const auto& line = s.line();
    if (!line.square_irreducible() || !line.unramified_char) return formal_l_factor::one();
    const int d = line.algebra_degree;
    const int b = detail::factor_end(s);
    const int q2 = -2 * d * b + (1 - d);
    unit_monomial u = unit_monomial::token(line.unit_token, line.dualized ? -1 : 1);
    return single_factor(std::move(u), q2);
}

inline formal_l_factor gj_L(const multisegment& m) {
    formal_l_factor out;
    for (const auto& [s, k] : m.entries())
        for (int i = 0; i < k; ++i) out = out.times(gj_L_segment(s));
    return out;
}

// Epsilon factor: formal product of opaque per-segment tokens; nothing about
// it is evaluated.
struct eps_factor {
    std::map<std::string, int> tokens;

    auto operator<=>(const eps_factor&) const = default;
};

inline eps_factor gj_eps(const multisegment& m) {
    eps_factor out;
    for (const auto& [s, k] : m.entries()) out.tokens["eps(" + s.str() + ")"] += k;
    return out;
}

// Gamma factor, kept as the unevaluated functional-equation shape
// eps * L(dual, q^{-1} T^{-1}) / L(m, T); the substitution in the numerator
// is a tag, never performed.
struct gamma_factor {
    eps_factor eps;
    formal_l_factor l_dual;  // to be read at q^{-1} T^{-1}
    formal_l_factor l;

    auto operator<=>(const gamma_factor&) const = default;
};

inline gamma_factor gj_gamma(const multisegment& m) {
    return {gj_eps(m), gj_L(dual_ms(m)), gj_L(m)};
}

// Combinatorial Weil-Deligne parameter: nilpotent blocks [0, r-1] (x) v^a Phi
// on square-irreducible lines, cyclic blocks [0, r-1] (x) C(Phi) on order-1
// lines.
struct deligne_summand {
    enum class kind_t { nilp, cyc };

    kind_t kind = kind_t::nilp;
    int size = 1;
    int twist = 0;  // canonical mod order; unused for cyc
    cuspidal_line line;

    auto operator<=>(const deligne_summand&) const = default;
};

struct deligne_parameter {
    std::vector<deligne_summand> summands;  // kept canonically sorted

    void add(deligne_summand s) {
        summands.push_back(std::move(s));
        std::sort(summands.begin(), summands.end());
    }

    auto operator<=>(const deligne_parameter&) const = default;
};

inline deligne_parameter c_parameter(const multisegment& m) {
    if (!is_aperiodic(m))
        raise(errc::not_aperiodic, "parameters are attached to aperiodic multisegments");
    deligne_parameter out;
    for (const auto& [s, k] : m.entries()) {
        const auto& line = s.line();
        for (int i = 0; i < k; ++i) {
            if (line.square_irreducible())
                out.add({deligne_summand::kind_t::nilp, s.length(), line.canonical(s.start()), line});
            else
                out.add({deligne_summand::kind_t::cyc, s.length(), 0, line});
        }
    }
    return out;
}

// Extract, size by size, the full-residue-cycle nilpotent families into
// cyclic blocks: with c_{i,k} copies of Nilp{i, k} and a_i = min_k c_{i,k},
// keep c_{i,k} - a_i nilpotent copies and add a_i copies of Cyc{i}.
// Existing cyclic summands pass through, which makes the map idempotent.
inline deligne_parameter cv_map(const deligne_parameter& p) {
    deligne_parameter out;
    const cuspidal_line* line = nullptr;
    std::map<int, std::map<int, int>> nilp;  // size -> twist -> count
    for (const auto& s : p.summands) {
        if (s.line.infinite()) raise(errc::infinite_line, "CV map needs a finite-order line");
        if (line && s.line != *line) raise(errc::mixed_lines, "CV map acts on a single line");
        line = &s.line;
        if (s.kind == deligne_summand::kind_t::cyc)
            out.add(s);
        else
            ++nilp[s.size][s.twist];
    }
    for (const auto& [size, by_twist] : nilp) {
        int a = 0;
        if (static_cast<int>(by_twist.size()) == line->order) {
            a = by_twist.begin()->second;
            for (const auto& [twist, c] : by_twist) a = std::min(a, c);
        }
        for (const auto& [twist, c] : by_twist)
            for (int i = 0; i < c - a; ++i)
                out.add({deligne_summand::kind_t::nilp, size, twist, *line});
        for (int i = 0; i < a; ++i) out.add({deligne_summand::kind_t::cyc, size, 0, *line});
    }
    return out;
}

// Galois-side L-factor: cyclic blocks and blocks on ramified or order-1
// lines contribute 1; a nilpotent block [0, r-1] (x) v^a Phi on an
// unramified square-irreducible line contributes the factor of its kernel
// top twist a + r - 1.
inline formal_l_factor galois_L(const deligne_parameter& p) {
    formal_l_factor out;
    for (const auto& s : p.summands) {
        if (s.kind == deligne_summand::kind_t::cyc) continue;
        const auto& line = s.line;
        if (!line.square_irreducible() || !line.unramified_char) continue;
        // same end-lift convention as the segment-side factor
        const int top = detail::factor_end(segment(line, s.twist, s.size));
        const int d = line.algebra_degree;
        unit_monomial u = unit_monomial::token(line.unit_token, line.dualized ? -1 : 1);
        out = out.times(single_factor(std::move(u), -2 * d * top + (1 - d)));
    }
    return out;
}

}  // namespace msl
