// Command-line front end for the multisegment calculus: derivatives, socles,
// duals, orbit posets, formal L-factors, and partition utilities.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "msl/dual.hpp"
#include "msl/json_io.hpp"
#include "msl/oracles.hpp"
#include "msl/orbits.hpp"
#include "msl/partitions.hpp"

using nlohmann::json;

namespace {

struct session {
    msl::line_registry lines;
    std::string format = "json";
    int bound = 12;
    bool debug_crosscheck = false;
};

void register_lines(session& s, const std::vector<std::string>& decls) {
    for (const auto& text : decls) {
        auto line = msl::parse_line_decl(text);
        if (s.lines.count(line.id))
            msl::raise(msl::errc::invalid_argument, "duplicate line id '" + line.id + "'");
        s.lines[line.id] = line;
    }
}

const msl::cuspidal_line& single_line(const session& s) {
    if (s.lines.size() != 1)
        msl::raise(msl::errc::invalid_argument, "this verb needs exactly one --line");
    return s.lines.begin()->second;
}

// "<id>:<residue>", with "<id>^" naming the dual line
msl::line_point parse_point(const std::string& text, const msl::line_registry& lines) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos)
        msl::raise(msl::errc::parse_error, "point must look like L:0");
    std::string id = text.substr(0, colon);
    bool dualized = false;
    if (!id.empty() && id.back() == '^') {
        dualized = true;
        id.pop_back();
    }
    auto it = lines.find(id);
    if (it == lines.end()) msl::raise(msl::errc::unknown_line, "unknown line id '" + id + "'");
    int residue = 0;
    try {
        residue = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        msl::raise(msl::errc::parse_error, "point residue must be an integer");
    }
    return msl::line_point(dualized ? it->second.dual() : it->second, residue);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            out.push_back(std::stoi(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            msl::raise(msl::errc::parse_error, "expected a comma-separated integer list");
        }
        pos = comma + 1;
    }
    return out;
}

msl::cusp_support parse_support(const session& s, const std::string& text) {
    const auto& line = single_line(s);
    auto counts = parse_int_list(text);
    if (line.finite_period() && static_cast<int>(counts.size()) != line.order)
        msl::raise(msl::errc::invalid_argument, "support must list one count per residue");
    msl::cusp_support out;
    auto& res = out.points[line];
    for (std::size_t r = 0; r < counts.size(); ++r) {
        if (counts[r] < 0) msl::raise(msl::errc::invalid_argument, "support counts must be >= 0");
        if (counts[r] > 0) res[static_cast<int>(r)] = counts[r];
    }
    return out;
}

void emit(const session& s, const json& payload) {
    if (s.format == "text") {
        if (payload.is_object() && payload.contains("result") && payload["result"].is_string())
            std::cout << payload["result"].get<std::string>() << "\n";
        else
            std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << payload.dump() << "\n";
    }
}

json ms_result(const msl::multisegment& m) { return {{"result", msl::format_ms(m)}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multisegment calculus calculator"};
    app.require_subcommand(1);

    session s;
    std::vector<std::string> line_decls;
    std::string ms_text, point_text, support_text, lambda_text, mu_text, param_text;
    int k = 1, ell = 2;
    bool left = false, maximal = false, aperiodic = false;

    app.add_option("--line", line_decls, "line declaration, repeatable")->expected(-1);
    app.add_option("--format", s.format, "output format: json|text|dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--bound", s.bound, "enumeration mass bound")->check(CLI::PositiveNumber);
    app.add_flag("--debug-crosscheck", s.debug_crosscheck, "run paired oracles and fail on mismatch");

    auto add_ms = [&](CLI::App* cmd) {
        cmd->add_option("--ms", ms_text, "multisegment expression")->required();
    };
    auto add_point = [&](CLI::App* cmd) {
        cmd->add_option("--point", point_text, "line point, e.g. L:0")->required();
    };

    auto* derive = app.add_subcommand("derive", "right/left derivative at a point");
    add_ms(derive);
    add_point(derive);
    derive->add_flag("--left", left, "use the left derivative");
    derive->add_flag("--max", maximal, "shorten every free segment");
    derive->add_option("--k", k, "iterate the derivative k times");

    auto* soc = app.add_subcommand("soc", "socle at a point");
    add_ms(soc);
    add_point(soc);
    soc->add_flag("--left", left, "use the left socle");

    auto* pairs = app.add_subcommand("pairs", "maximal-pair decomposition at a point");
    add_ms(pairs);
    add_point(pairs);

    auto* dual = app.add_subcommand("dual", "Aubert-Zelevinsky dual");
    add_ms(dual);

    auto* poset = app.add_subcommand("poset", "orbit closure poset of a support");
    poset->add_option("--support", support_text, "per-residue multiplicities")->required();

    auto* count = app.add_subcommand("count", "unlinked count: formula vs brute force");
    count->add_option("--support", support_text, "per-residue multiplicities")->required();

    auto* ranks = app.add_subcommand("ranks", "rank table of the quiver representation");
    add_ms(ranks);

    auto* lfactor = app.add_subcommand("lfactor", "L-factor on both sides of the correspondence");
    add_ms(lfactor);

    auto* cparam = app.add_subcommand("cparam", "Weil-Deligne parameter of a multisegment");
    add_ms(cparam);

    auto* cv = app.add_subcommand("cv", "CV map on a nilpotent parameter");
    cv->add_option("--param", param_text, "parameter as JSON, or use --ms");
    cv->add_option("--ms", ms_text, "multisegment whose parameter is mapped");

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka number");
    kostka_cmd->add_option("--lambda", lambda_text, "shape, e.g. 2,1")->required();
    kostka_cmd->add_option("--mu", mu_text, "content, e.g. 1,1,1")->required();

    auto* ellregular = app.add_subcommand("ellregular", "ell-regularity of a partition");
    ellregular->add_option("--lambda", lambda_text, "partition")->required();
    ellregular->add_option("--ell", ell, "ell >= 2")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all multisegments with a support");
    enumerate->add_option("--support", support_text, "per-residue multiplicities")->required();
    enumerate->add_flag("--aperiodic-only", aperiodic, "keep only aperiodic multisegments");

    // let the global options (--line, --format, ...) appear after the verb
    for (CLI::App* sub : {derive, soc, pairs, dual, poset, count, ranks, lfactor, cparam, cv,
                          kostka_cmd, ellregular, enumerate})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        register_lines(s, line_decls);

        if (derive->parsed()) {
            auto m = msl::parse_ms(ms_text, s.lines);
            auto p = parse_point(point_text, s.lines);
            std::optional<msl::multisegment> result;
            if (maximal)
                result = left ? msl::derive_left_max(m, p) : msl::derive_right_max(m, p);
            else
                result = left ? msl::derive_left_k(m, p, k) : msl::derive_right_k(m, p, k);
            if (s.debug_crosscheck && result && k == 1 && !maximal) {
                auto back = left ? msl::soc_left(*result, p) : msl::soc_right(*result, p);
                if (back != m) msl::raise(msl::errc::invalid_argument, "socle failed to invert");
            }
            if (result)
                emit(s, ms_result(*result));
            else
                emit(s, {{"result", nullptr}, {"zero", true}});
        } else if (soc->parsed()) {
            auto m = msl::parse_ms(ms_text, s.lines);
            auto p = parse_point(point_text, s.lines);
            auto result = left ? msl::soc_left(m, p) : msl::soc_right(m, p);
            if (s.debug_crosscheck) {
                auto back = left ? msl::derive_left(result, p) : msl::derive_right(result, p);
                if (!back || *back != m)
                    msl::raise(msl::errc::invalid_argument, "derivative failed to invert");
            }
            emit(s, ms_result(result));
        } else if (pairs->parsed()) {
            auto m = msl::parse_ms(ms_text, s.lines);
            auto p = parse_point(point_text, s.lines);
            auto dec = msl::pairs_right(m, p);
            auto [free, ext] = msl::free_and_extendable(m, p);
            json jpairs = json::array();
            for (const auto& [d1, d2] : dec.pairs) jpairs.push_back({d1.str(), d2.str()});
            json jfree = json::array(), jext = json::array();
            for (const auto& f : free) jfree.push_back(f.str());
            for (const auto& x : ext) jext.push_back(x.str());
            emit(s, {{"point", p.line.display_id() + ":" + std::to_string(p.residue)},
                     {"pairs", jpairs},
                     {"f_part", msl::format_ms(dec.f_part)},
                     {"free", jfree},
                     {"extendable", jext}});
        } else if (dual->parsed()) {
            auto m = msl::parse_ms(ms_text, s.lines);
            auto result = msl::az_dual(m);
            if (s.debug_crosscheck) {
                bool all_infinite = true;
                for (const auto& line : m.lines())
                    if (!line.infinite()) all_infinite = false;
                if (all_infinite && msl::oracle::mw_dual(m) != result)
                    msl::raise(msl::errc::invalid_argument, "classical involution oracle disagrees");
                if (msl::az_dual(result) != m)
                    msl::raise(msl::errc::invalid_argument, "dual is not an involution here");
            }
            emit(s, ms_result(result));
        } else if (poset->parsed()) {
            auto h = msl::hasse_poset(parse_support(s, support_text), s.bound);
            if (s.debug_crosscheck) {
                for (const auto& a : h.nodes)
                    for (const auto& b : h.nodes)
                        if (msl::closure_leq(a, b) !=
                            msl::rank_dominates(msl::make_rank_table(a), msl::make_rank_table(b)))
                            msl::raise(msl::errc::invalid_argument, "rank oracle disagrees");
            }
            if (s.format == "json")
                emit(s, msl::hasse_to_json(h));
            else
                std::cout << msl::hasse_to_dot(h);
        } else if (count->parsed()) {
            const auto& line = single_line(s);
            auto counts = parse_int_list(support_text);
            const int formula = msl::count_unlinked_formula(line, counts);
            const int brute = msl::count_unlinked_brute(line, counts, s.bound);
            emit(s, {{"formula", formula}, {"brute", brute}, {"agree", formula == brute}});
        } else if (ranks->parsed()) {
            auto m = msl::parse_ms(ms_text, s.lines);
            emit(s, msl::rank_table_to_json(msl::make_rank_table(m)));
        } else if (lfactor->parsed()) {
            auto m = msl::parse_ms(ms_text, s.lines);
            auto gj = msl::gj_L(m);
            auto galois = msl::galois_L(msl::c_parameter(m));
            emit(s, {{"gj", msl::factor_to_json(gj)},
                     {"galois", msl::factor_to_json(galois)},
                     {"equal", gj == galois},
                     {"gamma", msl::gamma_to_json(msl::gj_gamma(m))}});
        } else if (cparam->parsed()) {
            auto m = msl::parse_ms(ms_text, s.lines);
            emit(s, msl::parameter_to_json(msl::c_parameter(m)));
        } else if (cv->parsed()) {
            msl::deligne_parameter p;
            if (!param_text.empty())
                p = msl::parameter_from_json(json::parse(param_text), s.lines);
            else if (!ms_text.empty())
                p = msl::c_parameter(msl::parse_ms(ms_text, s.lines));
            else
                msl::raise(msl::errc::invalid_argument, "cv needs --param or --ms");
            emit(s, msl::parameter_to_json(msl::cv_map(p)));
        } else if (kostka_cmd->parsed()) {
            emit(s, {{"kostka", msl::kostka(parse_int_list(lambda_text), parse_int_list(mu_text))}});
        } else if (ellregular->parsed()) {
            emit(s, {{"regular", msl::is_ell_regular(parse_int_list(lambda_text), ell)}});
        } else if (enumerate->parsed()) {
            auto all = msl::enumerate_by_support(parse_support(s, support_text), aperiodic, s.bound);
            json listing = json::array();
            for (const auto& m : all) listing.push_back(msl::format_ms(m));
            emit(s, {{"count", all.size()}, {"multisegments", listing}});
        }
        return 0;
    } catch (const msl::error& e) {
        json err = {{"error", e.code_name()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const json::exception& e) {
        json err = {{"error", "ParseError"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
