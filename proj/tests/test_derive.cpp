#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "msl/derive.hpp"

using namespace msl;
using testutil::finite_line;
using testutil::infinite_line;
using testutil::seg;

namespace {

std::multiset<std::pair<segment, segment>> pair_multiset(const pairs_decomposition& d) {
    return {d.pairs.begin(), d.pairs.end()};
}

std::vector<line_point> all_points(const cuspidal_line& line, const multisegment& m) {
    std::vector<line_point> pts;
    if (line.finite_period()) {
        for (int r = 0; r < line.order; ++r) pts.emplace_back(line, r);
    } else {
        std::set<int> interesting;
        for (const auto& [s, k] : m.entries()) {
            interesting.insert(s.end());
            interesting.insert(s.end() + 1);
        }
        for (int r : interesting) pts.emplace_back(line, r);
    }
    return pts;
}

}  // namespace

TEST_CASE("pairs extraction examples") {
    auto o3 = finite_line(3);
    auto o2 = finite_line(2);

    auto d = pairs_right(multisegment::of({seg(o3, 0, 0), seg(o3, 2, 2)}), line_point(o3, 0));
    REQUIRE(d.pairs.size() == 1);
    CHECK(d.pairs[0].first == seg(o3, 0, 0));
    CHECK(d.pairs[0].second == seg(o3, 2, 2));
    CHECK(d.f_part.empty());

    d = pairs_right(multisegment::of({seg(o2, 1, 2), seg(o2, 0, 0)}), line_point(o2, 0));
    CHECK(d.pairs.empty());
    CHECK(d.f_part == multisegment::of({seg(o2, 1, 2), seg(o2, 0, 0)}));

    d = pairs_right(multisegment::of({seg(o2, 1, 2), seg(o2, 0, 1)}), line_point(o2, 0));
    REQUIRE(d.pairs.size() == 1);
    CHECK(d.pairs[0].first == seg(o2, 1, 2));
    CHECK(d.pairs[0].second == seg(o2, 0, 1));
    CHECK(d.f_part.empty());
}

TEST_CASE("pairs reassembly and closure across a sweep") {
    for (int order : {2, 3}) {
        auto line = finite_line(order);
        for (const auto& m : testutil::sweep_finite_upto(line, 6)) {
            for (const auto& p : all_points(line, m)) {
                auto d = pairs_right(m, p);
                multisegment back = d.f_part;
                for (const auto& [d1, d2] : d.pairs) {
                    back.add(d1);
                    back.add(d2);
                    CHECK(d2.length() >= d1.length());
                }
                CHECK(back == m);
                // closure: no free segment in f_part still admits a partner
                for (const auto& [s, k] : d.f_part.entries()) {
                    if (!s.ends_at(p.residue)) continue;
                    for (const auto& [t, j] : d.f_part.entries()) {
                        if (!t.ends_at(p.residue - 1)) continue;
                        CHECK(t.length() < s.length());
                    }
                }
            }
        }
    }
}

TEST_CASE("free and extendable") {
    auto o2 = finite_line(2);
    auto o3 = finite_line(3);

    auto [free, ext] = free_and_extendable(multisegment::of({seg(o2, 1, 2), seg(o2, 0, 0)}),
                                           line_point(o2, 0));
    CHECK(free == std::vector<segment>{seg(o2, 0, 0), seg(o2, 1, 2)});
    CHECK(ext.empty());

    auto fe = free_and_extendable(multisegment::of({seg(o3, 0, 2)}), line_point(o3, 0));
    CHECK(fe.first.empty());
    CHECK(fe.second == std::vector<segment>{seg(o3, 0, 2)});

    fe = free_and_extendable(multisegment{}, line_point(o3, 0));
    CHECK(fe.first.empty());
    CHECK(fe.second.empty());
}

TEST_CASE("derivative counts") {
    auto o2 = finite_line(2);
    auto o3 = finite_line(3);
    CHECK(d_right(multisegment::of({seg(o2, 1, 2), seg(o2, 0, 0)}), line_point(o2, 0)) == 2);
    CHECK(d_right(multisegment::of({seg(o3, 0, 0), seg(o3, 2, 2)}), line_point(o3, 0)) == 0);
    auto periodic = multisegment::of({seg(o2, 0, 1), seg(o2, 1, 2)});
    CHECK(d_right(periodic, line_point(o2, 0)) == 0);
    CHECK(d_right(periodic, line_point(o2, 1)) == 0);
}

TEST_CASE("derive_right basics") {
    auto o3 = finite_line(3);
    CHECK(*derive_right(multisegment::of({seg(o3, 1, 3)}), line_point(o3, 0)) ==
          multisegment::of({seg(o3, 1, 2)}));
    CHECK_FALSE(derive_right(multisegment::of({seg(o3, 0, 0), seg(o3, 2, 2)}), line_point(o3, 0)));
    // zero vs empty: deriving a point gives the empty multisegment
    CHECK(*derive_right(multisegment::of({seg(o3, 0, 0)}), line_point(o3, 0)) == multisegment{});
    CHECK_FALSE(derive_right(multisegment::of({seg(o3, 1, 1)}), line_point(o3, 0)));
    // socle then derivative inverts
    auto soc = soc_right(multisegment::of({seg(o3, 0, 2)}), line_point(o3, 0));
    CHECK(soc == multisegment::of({seg(o3, 0, 3)}));
    CHECK(*derive_right(soc, line_point(o3, 0)) == multisegment::of({seg(o3, 0, 2)}));
}

TEST_CASE("derive_right_max and derive_right_k") {
    auto o2 = finite_line(2);
    auto m = multisegment::of({seg(o2, 1, 2), seg(o2, 0, 0)});
    CHECK(derive_right_max(m, line_point(o2, 0)) == multisegment::of({seg(o2, 1, 1)}));
    CHECK(*derive_right_k(m, line_point(o2, 0), 1) == multisegment::of({seg(o2, 1, 2)}));
    CHECK_FALSE(derive_right_k(m, line_point(o2, 0), 3));
    CHECK(*derive_right_k(m, line_point(o2, 0), 0) == m);
}

TEST_CASE("soc_right basics") {
    auto o3 = finite_line(3);
    CHECK(soc_right(multisegment{}, line_point(o3, 0)) == multisegment::of({seg(o3, 0, 0)}));
    CHECK(soc_right(multisegment::of({seg(o3, 0, 2)}), line_point(o3, 0)) ==
          multisegment::of({seg(o3, 0, 3)}));
    multisegment expect;
    expect.add(seg(o3, 0, 0), 2);
    expect.add(seg(o3, 2, 2));
    CHECK(soc_right(multisegment::of({seg(o3, 0, 0), seg(o3, 2, 2)}), line_point(o3, 0)) == expect);
}

TEST_CASE("left variants") {
    auto o3 = finite_line(3);
    CHECK(soc_left(multisegment{}, line_point(o3, 0)) == multisegment::of({seg(o3, 0, 0)}));
    CHECK(*derive_left(multisegment::of({seg(o3, 0, 1)}), line_point(o3, 0)) ==
          multisegment::of({seg(o3, 1, 1)}));
    for (const auto& m : testutil::sweep_finite_upto(o3, 5))
        for (int r = 0; r < 3; ++r)
            CHECK(d_left(m, line_point(o3, r)) == d_right(dual_ms(m), line_point(o3, r).dual()));
}

TEST_CASE("order-1 lines are rejected") {
    auto o1 = finite_line(1, 2);
    CHECK_THROWS_AS(pairs_right(multisegment::of({seg(o1, 0, 0)}), line_point(o1, 0)), error);
    CHECK_THROWS_AS(d_right(multisegment::of({seg(o1, 0, 0)}), line_point(o1, 0)), error);
}

TEST_CASE("inversion identities across sweeps") {
    for (int order : {2, 3}) {
        auto line = finite_line(order);
        for (const auto& m : testutil::aperiodic_only(testutil::sweep_finite_upto(line, 5))) {
            for (const auto& p : all_points(line, m)) {
                CHECK(*derive_right(soc_right(m, p), p) == m);
                if (auto d = derive_right(m, p)) CHECK(soc_right(*d, p) == m);
            }
        }
    }
}

TEST_CASE("pair stability under socle and derivative") {
    auto o3 = finite_line(3);
    for (const auto& m : testutil::aperiodic_only(testutil::sweep_finite_upto(o3, 5))) {
        for (const auto& p : all_points(o3, m)) {
            auto base = pair_multiset(pairs_right(m, p));
            CHECK(pair_multiset(pairs_right(soc_right(m, p), p)) == base);
            if (auto d = derive_right(m, p))
                CHECK(pair_multiset(pairs_right(*d, p)) == base);
        }
    }
}

TEST_CASE("pairs of the truncation") {
    for (int order : {2, 3}) {
        auto line = finite_line(order);
        for (const auto& m : testutil::sweep_finite_upto(line, 6)) {
            for (int r = 0; r < order; ++r) {
                line_point p(line, r);
                auto full = pairs_right(m, p);
                std::multiset<std::pair<segment, segment>> expect;
                for (const auto& [d1, d2] : full.pairs)
                    if (d1.length() > 1)
                        expect.emplace(*d1.shifted(shift_kind::minus_right),
                                       *d2.shifted(shift_kind::minus_right));
                auto trunc = pairs_right(ms_minus(m), line_point(line, r - 1));
                CHECK(pair_multiset(trunc) == expect);
            }
        }
    }
}

TEST_CASE("pair lengths sandwich free and extendable lengths") {
    auto o3 = finite_line(3);
    for (const auto& m : testutil::sweep_finite_upto(o3, 6)) {
        for (const auto& p : all_points(o3, m)) {
            auto d = pairs_right(m, p);
            auto [free, ext] = free_and_extendable(m, p);
            for (const auto& [d1, d2] : d.pairs) {
                for (const auto& f : free)
                    CHECK((f.length() >= d2.length() || f.length() <= d1.length()));
                for (const auto& x : ext)
                    CHECK((x.length() >= d2.length() || x.length() <= d1.length()));
            }
            for (const auto& f : free)
                for (const auto& x : ext) CHECK(x.length() < f.length());
        }
    }
}

TEST_CASE("lift compatibility with the right derivative") {
    for (int order : {2, 3}) {
        auto line = finite_line(order);
        auto up = line.lifted();
        for (const auto& m : testutil::aperiodic_only(testutil::sweep_finite_upto(line, 5))) {
            auto lifted = lift_right_compatible(m);
            auto dm = derive_right(m, line_point(line, 0));
            auto dl = derive_right(lifted, line_point(up, 0));
            CHECK(dm.has_value() == dl.has_value());
            if (dm && dl) CHECK(reduce_mod_ell(*dl, line) == *dm);
        }
    }
}

TEST_CASE("multi-line inputs pass through untouched") {
    auto o3 = finite_line(3);
    auto other = finite_line(2);
    other.id = "M";
    auto m = multisegment::of({seg(o3, 1, 3), seg(other, 0, 0)});
    auto d = *derive_right(m, line_point(o3, 0));
    CHECK(d == multisegment::of({seg(o3, 1, 2), seg(other, 0, 0)}));
}
