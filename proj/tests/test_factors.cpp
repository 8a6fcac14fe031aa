#include <doctest.h>

#include "helpers.hpp"
#include "msl/factors.hpp"

using namespace msl;
using testutil::finite_line;
using testutil::infinite_line;
using testutil::seg;
using testutil::unramified_line;

namespace {
const int kInf = cuspidal_line::infinite_order;
}

TEST_CASE("unit monomials") {
    auto u = unit_monomial::token("u");
    CHECK(u.times(u.inverse()) == unit_monomial::one());
    CHECK(u.times(u).exponents.at("u") == 2);
}

TEST_CASE("segment L-factors") {
    auto line = unramified_line(kInf, 1);
    auto f = gj_L_segment(seg(line, 0, 0));
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].unit == unit_monomial::token("u"));
    CHECK(f.terms[0].q2exp == 0);

    auto d2 = unramified_line(kInf, 2);
    f = gj_L_segment(seg(d2, 0, 1));
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].q2exp == -5);  // exponent -5/2

    auto o1 = unramified_line(1);
    CHECK(gj_L_segment(seg(o1, 0, 0)).trivial());
    auto ramified = infinite_line();
    CHECK(gj_L_segment(seg(ramified, 0, 0)).trivial());

    for (int b = 0; b <= 4; ++b) {
        auto g = gj_L_segment(seg(line, 0, b));
        REQUIRE(g.terms.size() == 1);
        CHECK(g.terms[0].q2exp == -2 * b);
    }
}

TEST_CASE("finite-order lines use the lifted end") {
    auto o3 = unramified_line(3);
    auto f = gj_L_segment(seg(o3, 0, 2));  // end residue 2 == -1 mod 3
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].q2exp == 2);  // b lifts to -1
    f = gj_L_segment(seg(o3, 0, 1));
    CHECK(f.terms[0].q2exp == -2);
}

TEST_CASE("multiplicativity") {
    auto line = unramified_line(kInf, 1);
    auto m = multisegment::of({seg(line, 0, 0), seg(line, 1, 1)});
    auto f = gj_L(m);
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms[0].q2exp == -2);
    CHECK(f.terms[1].q2exp == 0);
    CHECK(gj_L(multisegment{}).trivial());

    auto ram = infinite_line();
    ram.id = "R";
    auto mixed = multisegment::of({seg(line, 0, 0), seg(ram, 0, 0)});
    CHECK(gj_L(mixed) == gj_L_segment(seg(line, 0, 0)));

    for (const auto& a : testutil::sweep_infinite_upto(line, 3))
        for (const auto& b : testutil::sweep_infinite_upto(line, 3))
            CHECK(gj_L(a.plus(b)) == gj_L(a).times(gj_L(b)));
}

TEST_CASE("duality of factors") {
    auto line = unramified_line(kInf, 1);
    auto m = multisegment::of({seg(line, 0, 1)});
    auto f = gj_L(dual_ms(m));
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].unit == unit_monomial::token("u", -1));
    CHECK(gj_L(dual_ms(dual_ms(m))) == gj_L(m));
}

TEST_CASE("eps and gamma structure") {
    auto line = unramified_line(kInf, 1);
    auto m = multisegment::of({seg(line, 0, 0)});
    auto g = gj_gamma(m);
    CHECK(g.eps.tokens.size() == 1);
    CHECK(g.l == gj_L(m));
    CHECK(g.l_dual == gj_L(dual_ms(m)));
    CHECK(gj_eps(multisegment{}).tokens.empty());

    auto m2 = multisegment::of({seg(line, 1, 1)});
    auto both = gj_gamma(m.plus(m2));
    CHECK(both.eps.tokens.size() == 2);
    CHECK(both.l == gj_gamma(m).l.times(gj_gamma(m2).l));
    CHECK(both.l_dual == gj_gamma(m).l_dual.times(gj_gamma(m2).l_dual));
}

TEST_CASE("parameters") {
    auto o3 = unramified_line(3);
    auto p = c_parameter(multisegment::of({seg(o3, 0, 1), seg(o3, 2, 2)}));
    REQUIRE(p.summands.size() == 2);
    // canonical sort puts the size-1 block first
    CHECK(p.summands[0].kind == deligne_summand::kind_t::nilp);
    CHECK(p.summands[0].size == 1);
    CHECK(p.summands[0].twist == 2);
    CHECK(p.summands[1].size == 2);
    CHECK(p.summands[1].twist == 0);

    auto o1 = unramified_line(1);
    p = c_parameter(multisegment::of({seg(o1, 0, 1)}));
    REQUIRE(p.summands.size() == 1);
    CHECK(p.summands[0].kind == deligne_summand::kind_t::cyc);
    CHECK(p.summands[0].size == 2);

    CHECK(c_parameter(multisegment{}).summands.empty());
}

TEST_CASE("cv map") {
    auto o3 = unramified_line(3);
    auto nilp = [&](int size, int twist) {
        return deligne_summand{deligne_summand::kind_t::nilp, size, twist, o3};
    };
    deligne_parameter p;
    p.add(nilp(1, 0));
    p.add(nilp(1, 1));
    p.add(nilp(1, 2));
    auto q = cv_map(p);
    REQUIRE(q.summands.size() == 1);
    CHECK(q.summands[0].kind == deligne_summand::kind_t::cyc);
    CHECK(q.summands[0].size == 1);

    deligne_parameter partial;
    partial.add(nilp(1, 0));
    partial.add(nilp(1, 1));
    CHECK(cv_map(partial) == partial);

    auto o2 = unramified_line(2);
    deligne_parameter p2;
    p2.add({deligne_summand::kind_t::nilp, 2, 0, o2});
    p2.add({deligne_summand::kind_t::nilp, 2, 0, o2});
    p2.add({deligne_summand::kind_t::nilp, 2, 1, o2});
    auto q2 = cv_map(p2);
    deligne_parameter expect;
    expect.add({deligne_summand::kind_t::nilp, 2, 0, o2});
    expect.add({deligne_summand::kind_t::cyc, 2, 0, o2});
    CHECK(q2 == expect);

    CHECK(cv_map(q) == q);
    CHECK(cv_map(q2) == q2);

    auto inf = unramified_line(kInf);
    deligne_parameter bad;
    bad.add({deligne_summand::kind_t::nilp, 1, 0, inf});
    CHECK_THROWS_AS(cv_map(bad), error);
}

TEST_CASE("galois L-factors") {
    auto o1 = unramified_line(1);
    deligne_parameter p;
    p.add({deligne_summand::kind_t::cyc, 2, 0, o1});
    CHECK(galois_L(p).trivial());

    auto line = unramified_line(kInf, 1);
    deligne_parameter nilp;
    nilp.add({deligne_summand::kind_t::nilp, 1, 0, line});
    auto f = galois_L(nilp);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].q2exp == 0);

    auto fromseg = galois_L(c_parameter(multisegment::of({seg(line, 0, 1)})));
    REQUIRE(fromseg.terms.size() == 1);
    CHECK(fromseg.terms[0].q2exp == -2);  // top twist 1
}

TEST_CASE("correspondence equality across configurations") {
    std::vector<cuspidal_line> lines = {unramified_line(kInf, 1), unramified_line(kInf, 2),
                                        infinite_line(), unramified_line(1)};
    for (const auto& line : lines) {
        std::vector<multisegment> family;
        if (line.infinite())
            family = testutil::sweep_infinite_upto(line, 5);
        else {
            for (int len = 1; len <= 5; ++len) {
                multisegment m;
                m.add(segment(line, 0, len));
                family.push_back(m);
            }
        }
        for (const auto& m : family) {
            if (!is_aperiodic(m)) continue;
            CHECK(galois_L(c_parameter(m)) == gj_L(m));
        }
    }
    auto o3 = unramified_line(3);
    for (const auto& m : testutil::aperiodic_only(testutil::sweep_finite_upto(o3, 5)))
        CHECK(galois_L(c_parameter(m)) == gj_L(m));
}
