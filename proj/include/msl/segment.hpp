#pragma once

#include <compare>
#include <optional>
#include <string>
#include <tuple>

#include "msl/line.hpp"

namespace msl {

enum class shift_kind { minus_right, minus_left, plus_right, plus_left };

// A segment [a, b] on a cuspidal line, stored as (start, length) with the
// start normalised to [0, order) on finite lines.  Length is always >= 1;
// shrinking a length-1 segment yields the empty segment (nullopt).
class segment {
public:
    segment(cuspidal_line line, int start, int length)
        : line_(std::move(line)), start_(line_.canonical(start)), length_(length) {
        if (length_ < 1) raise(errc::invalid_argument, "segment length must be >= 1");
    }

    static segment from_endpoints(cuspidal_line line, int start, int end) {
        if (end < start) raise(errc::invalid_argument, "segment end must be >= start");
        return segment(std::move(line), start, end - start + 1);
    }

    const cuspidal_line& line() const { return line_; }
    int start() const { return start_; }
    int length() const { return length_; }
    int end() const { return start_ + length_ - 1; }
    int end_residue() const { return line_.canonical(end()); }
    int degree() const { return line_.cusp_degree * length_; }

    bool ends_at(int point) const { return line_.same_point(end(), point); }
    bool starts_at(int point) const { return line_.same_point(start_, point); }

    std::optional<segment> shifted(shift_kind kind) const {
        switch (kind) {
            case shift_kind::minus_right:
                if (length_ == 1) return std::nullopt;
                return segment(line_, start_, length_ - 1);
            case shift_kind::minus_left:
                if (length_ == 1) return std::nullopt;
                return segment(line_, start_ + 1, length_ - 1);
            case shift_kind::plus_right:
                return segment(line_, start_, length_ + 1);
            case shift_kind::plus_left:
                return segment(line_, start_ - 1, length_ + 1);
        }
        raise(errc::invalid_argument, "bad shift kind");
    }

    // Contragredient: [a, b] becomes [-b, -a] on the dual line.
    segment dual() const { return segment(line_.dual(), -(start_ + length_ - 1), length_); }

    bool same_line(const segment& other) const { return line_ == other.line_; }

    auto operator<=>(const segment& other) const {
        return std::tie(line_, start_, length_) <=> std::tie(other.line_, other.start_, other.length_);
    }
    bool operator==(const segment& other) const = default;

    std::string str() const {
        return line_.display_id() + ":[" + std::to_string(start_) + "," + std::to_string(end()) + "]";
    }

private:
    cuspidal_line line_;
    int start_;
    int length_;
};

// a precedes b ("a links into b from the left"): some representative of a can
// be shifted so that the pair juxtaposes into a strictly longer segment.
// Closed form: an integer t with t == start(b) - start(a) on the line and
// max(1, len(a) - len(b) + 1) <= t <= len(a).
inline bool precedes(const segment& a, const segment& b) {
    if (!a.same_line(b))
        raise(errc::different_lines, "precedes: segments live on different lines");
    const int la = a.length(), lb = b.length();
    const int lo = la - lb + 1 > 1 ? la - lb + 1 : 1;
    const int hi = la;
    if (lo > hi) return false;
    if (a.line().infinite()) {
        const int t = b.start() - a.start();
        return lo <= t && t <= hi;
    }
    const int o = a.line().order;
    const int delta = a.line().canonical(b.start() - a.start());
    // smallest t >= lo congruent to delta mod o
    const int t = lo + ((delta - lo) % o + o) % o;
    return t <= hi;
}

inline bool linked(const segment& a, const segment& b) {
    return precedes(a, b) || precedes(b, a);
}

}  // namespace msl
