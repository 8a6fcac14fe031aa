#pragma once

#include <vector>

#include "msl/multisegment.hpp"

namespace testutil {

inline msl::cuspidal_line finite_line(int order, int ell = 5, int deg = 1, int d = 1) {
    msl::cuspidal_line line;
    line.id = "L";
    line.order = order;
    line.ell = ell;
    line.cusp_degree = deg;
    line.algebra_degree = d;
    line.validate();
    return line;
}

inline msl::cuspidal_line infinite_line(int deg = 1, int d = 1) {
    msl::cuspidal_line line;
    line.id = "L";
    line.order = msl::cuspidal_line::infinite_order;
    line.cusp_degree = deg;
    line.algebra_degree = d;
    line.validate();
    return line;
}

inline msl::cuspidal_line unramified_line(int order, int d = 1) {
    msl::cuspidal_line line;
    line.id = "L";
    line.order = order;
    line.ell = order == 1 ? 2 : 0;
    line.algebra_degree = d;
    line.unramified_char = true;
    line.unit_token = "u";
    line.validate();
    return line;
}

inline msl::segment seg(const msl::cuspidal_line& line, int a, int b) {
    return msl::segment::from_endpoints(line, a, b);
}

// All multisegments on a finite-order line with mass exactly `mass`.
inline std::vector<msl::multisegment> sweep_finite(const msl::cuspidal_line& line, int mass) {
    std::vector<msl::multisegment> out;
    std::vector<int> d(line.order, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == line.order) {
            if (left != 0) return;
            msl::cusp_support s;
            auto& res = s.points[line];
            for (int r = 0; r < line.order; ++r)
                if (d[r] > 0) res[r] = d[r];
            for (auto& m : msl::enumerate_by_support(s, false)) out.push_back(std::move(m));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            d[i] = v;
            self(self, i + 1, left - v);
        }
        d[i] = 0;
    };
    rec(rec, 0, mass);
    return out;
}

inline std::vector<msl::multisegment> sweep_finite_upto(const msl::cuspidal_line& line, int mass) {
    std::vector<msl::multisegment> out;
    for (int n = 1; n <= mass; ++n)
        for (auto& m : sweep_finite(line, n)) out.push_back(std::move(m));
    return out;
}

// All multisegments on an infinite line with mass exactly `mass`, supported
// in [0, mass) with the point 0 occupied (every multisegment is a shift of
// exactly one of these).
inline std::vector<msl::multisegment> sweep_infinite(const msl::cuspidal_line& line, int mass) {
    std::vector<msl::multisegment> out;
    std::vector<int> d(mass, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == mass) {
            if (left != 0 || (mass > 0 && d[0] == 0)) return;
            msl::cusp_support s;
            auto& res = s.points[line];
            for (int r = 0; r < mass; ++r)
                if (d[r] > 0) res[r] = d[r];
            for (auto& m : msl::enumerate_by_support(s, false)) out.push_back(std::move(m));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            d[i] = v;
            self(self, i + 1, left - v);
        }
        d[i] = 0;
    };
    rec(rec, 0, mass);
    return out;
}

inline std::vector<msl::multisegment> sweep_infinite_upto(const msl::cuspidal_line& line, int mass) {
    std::vector<msl::multisegment> out;
    for (int n = 1; n <= mass; ++n)
        for (auto& m : sweep_infinite(line, n)) out.push_back(std::move(m));
    return out;
}

inline std::vector<msl::multisegment> aperiodic_only(std::vector<msl::multisegment> in) {
    std::vector<msl::multisegment> out;
    for (auto& m : in)
        if (msl::is_aperiodic(m)) out.push_back(std::move(m));
    return out;
}

}  // namespace testutil
