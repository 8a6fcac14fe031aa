#pragma once

#include <cctype>
#include <map>
#include <string>

#include "msl/multisegment.hpp"

namespace msl {

using line_registry = std::map<std::string, cuspidal_line>;

namespace detail {

class cursor {
public:
    explicit cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
            fail("expected integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }
    [[noreturn]] void fail(const std::string& what) {
        raise(errc::parse_error, what + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
    }
    std::size_t position() const { return pos_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// `line <id> { o: <int|inf>, ell: <int>, deg: <int>, d: <int>,
//              unramified: <bool>, chi: "<token>" }` — fields in any order,
// comma separated; ell is required when o = 1, chi when unramified.
inline cuspidal_line parse_line_decl(const std::string& text) {
    detail::cursor c(text);
    if (!c.accept_word("line")) c.fail("expected 'line'");
    cuspidal_line line;
    line.id = c.identifier();
    bool have_order = false;
    c.expect('{');
    while (!c.accept('}')) {
        std::string key = c.identifier();
        c.expect(':');
        if (key == "o") {
            if (c.accept_word("inf") || c.accept_word("INFINITY"))
                line.order = cuspidal_line::infinite_order;
            else
                line.order = c.integer();
            have_order = true;
        } else if (key == "ell") {
            line.ell = c.integer();
        } else if (key == "deg") {
            line.cusp_degree = c.integer();
        } else if (key == "d") {
            line.algebra_degree = c.integer();
        } else if (key == "unramified") {
            if (c.accept_word("true"))
                line.unramified_char = true;
            else if (c.accept_word("false"))
                line.unramified_char = false;
            else
                c.fail("expected boolean");
        } else if (key == "chi") {
            c.expect('"');
            line.unit_token = c.identifier();
            c.expect('"');
        } else {
            c.fail("unknown field '" + key + "'");
        }
        if (c.peek() != '}') c.expect(',');
    }
    if (!c.done()) c.fail("trailing input");
    if (!have_order) c.fail("missing field 'o'");
    line.validate();
    return line;
}

// Terms `<mult>*<id>:[<start>,<end>]` joined by `+`; multiplicity omitted
// when 1; `<id>^` names the dual of a registered line; "0" is the empty
// multisegment.
inline multisegment parse_ms(const std::string& text, const line_registry& lines) {
    detail::cursor c(text);
    multisegment m;
    if (c.accept('0')) {
        if (!c.done()) c.fail("trailing input after empty multisegment");
        return m;
    }
    do {
        int mult = 1;
        c.skip_ws();
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            mult = c.integer();
            if (mult < 1) c.fail("multiplicity must be >= 1");
            c.expect('*');
        }
        std::string id = c.identifier();
        bool dualized = c.accept('^');
        auto it = lines.find(id);
        if (it == lines.end())
            raise(errc::unknown_line, "unknown line id '" + id + "'");
        cuspidal_line line = dualized ? it->second.dual() : it->second;
        c.expect(':');
        c.expect('[');
        int start = c.integer();
        c.expect(',');
        int end = c.integer();
        c.expect(']');
        if (end < start) c.fail("segment end must be >= start");
        m.add(segment(line, start, end - start + 1), mult);
    } while (c.accept('+'));
    if (!c.done()) c.fail("trailing input");
    return m;
}

inline std::string format_ms(const multisegment& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [s, k] : m.entries()) {
        if (!out.empty()) out += " + ";
        if (k > 1) out += std::to_string(k) + "*";
        out += s.str();
    }
    return out;
}

}  // namespace msl
