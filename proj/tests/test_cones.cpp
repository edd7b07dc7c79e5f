#include "plueckerfan/parallel.hpp"

#include <doctest.h>

using namespace pf;

namespace {

LinearInequality form(const PluckerLattice& l, std::initializer_list<std::pair<const char*, int>> terms)
{
    LinearInequality q;
    for (auto [name, c] : terms) q.form[l.element(name)] = c;
    return q;
}

}  // namespace

TEST_CASE("target names")
{
    CHECK(parse_target("toric-gt") == ConeTarget::ToricGt);
    CHECK(target_name(parse_target("PBW_REDUNDANT")) == "PBW_REDUNDANT");
    CHECK_THROWS_AS(parse_target("FOO"), InvalidArgument);
}

TEST_CASE("minimal descriptions at small n")
{
    PluckerSetting s3(3, false);
    auto hibi = cone_hrep(ConeTarget::Hibi, s3);
    REQUIRE(hibi.inequalities.size() == 1);
    CHECK(hibi.inequalities[0].form == form(s3.m, {{"1", 1}, {"2,3", 1}, {"1,3", -1}, {"2", -1}}).form);

    auto ssyt = cone_hrep(ConeTarget::Ssyt, s3);
    REQUIRE(ssyt.inequalities.size() == 2);
    CHECK(ssyt.inequalities[1].form == form(s3.m, {{"1", 1}, {"2,3", 1}, {"1,2", -1}, {"3", -1}}).form);
    CHECK(ssyt.provenance[1].kind == "special");
    CHECK_FALSE(contains(ssyt, WeightVector(s3.m.size())));
    CHECK(contains(ssyt, interior_witness(s3.m.lattice)));

    PluckerSetting s4(4, false);
    CHECK(cone_hrep(ConeTarget::Pbw, s4).inequalities.size() == 8);
    CHECK(cone_hrep(ConeTarget::Ssyt, s4).inequalities.size() == 8);
    CHECK_THROWS_AS(cone_hrep(ConeTarget::ToricGt, s4), InvalidArgument);
}

TEST_CASE("facet counts")
{
    auto check_n = [](int n, std::uint64_t total, std::uint64_t diamond, std::uint64_t special) {
        auto f = facet_count(n);
        CHECK(f.ssyt_total == total);
        CHECK(f.diamond == diamond);
        CHECK(f.special == special);
        CHECK(f.pbw_total == total);
    };
    check_n(3, 2, 1, 1);
    check_n(4, 8, 5, 3);
    check_n(5, 26, 18, 8);
    for (int n = 3; n <= 7; ++n) {
        auto f = facet_count(n), g = facet_count_formula(n);
        CHECK(f.ssyt_total == g.ssyt_total);
        CHECK(f.diamond == g.diamond);
        CHECK(f.pbw_special == g.special);
    }
}

TEST_CASE("interior witnesses")
{
    for (int n = 3; n <= 6; ++n) {
        PluckerSetting s(n, false);
        CHECK(contains(cone_hrep(ConeTarget::Hibi, s), interior_witness(s.m.lattice)));
        CHECK(contains(cone_hrep(ConeTarget::Ssyt, s), interior_witness(s.m.lattice)));
        CHECK(contains(cone_hrep(ConeTarget::GenHibi, s), exponential_witness(s.nl.lattice)));
        CHECK(contains(cone_hrep(ConeTarget::Pbw, s), exponential_witness(s.nl.lattice)));
    }
    // |a|^2 is not enough once a odot b drops two grades below the pair.
    PluckerSetting s3(3, false), s4(4, false);
    CHECK(contains(cone_hrep(ConeTarget::GenHibi, s3), interior_witness(s3.nl.lattice)));
    auto g4 = cone_hrep(ConeTarget::GenHibi, s4);
    auto w4 = interior_witness(s4.nl.lattice);
    int violated = 0;
    for (const auto& q : g4.inequalities) violated += !satisfied(q, w4);
    CHECK(violated == 2);
}

TEST_CASE("facet witnesses")
{
    for (int n = 3; n <= 5; ++n) {
        PluckerSetting s(n, false);
        for (auto t : {ConeTarget::Hibi, ConeTarget::GenHibi, ConeTarget::Ssyt, ConeTarget::Pbw}) {
            auto h = cone_hrep(t, s);
            for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
                INFO(target_name(t), " n=", n, " facet ", i);
                auto v = facet_witness(h, i, s);
                CHECK(certify_witness(h, i, v));
                CHECK_FALSE(contains(h, v));
            }
        }
    }
    PluckerSetting s3(3, true);
    CHECK_THROWS_AS(facet_witness(cone_hrep(ConeTarget::SsytRedundant, s3), 0, s3), InvalidArgument);
}

TEST_CASE("redundant and toric descriptions")
{
    PluckerSetting s(4, true);
    auto ssyt = cone_hrep(ConeTarget::Ssyt, s);
    auto red = cone_hrep(ConeTarget::SsytRedundant, s);
    auto pbw = cone_hrep(ConeTarget::Pbw, s);
    auto pbw_red = cone_hrep(ConeTarget::PbwRedundant, s);
    CHECK(red.inequalities.size() >= ssyt.inequalities.size());
    auto sample = sample_cone(ssyt, interior_witness(s.m.lattice), 50, 1);
    for (const auto& w : sample.points) CHECK(contains(red, w));
    auto psample = sample_cone(pbw, exponential_witness(s.nl.lattice), 50, 2);
    for (const auto& w : psample.points) CHECK(contains(pbw_red, w));

    auto gt = cone_hrep(ConeTarget::ToricGt, s);
    bool has_equality = false;
    for (const auto& q : gt.inequalities) has_equality = has_equality || q.rel == Relation::Equality;
    CHECK(has_equality);
    CHECK_FALSE(contains(gt, interior_witness(s.m.lattice)));
}

TEST_CASE("initial forms")
{
    auto m4 = build_M(4);
    auto st = straighten_pair(m4, m4.element("1,4"), m4.element("2,3"));
    CHECK(initial_form(st.relation, m4, WeightVector(m4.size(), 3)) == st.relation);
    auto in = initial_form(st.relation, m4, interior_witness(m4.lattice));
    REQUIRE(in.size() == 1);
    CHECK(in.terms().begin()->first == lattice_monomial(m4, st.a, st.b));
    CHECK_THROWS_AS(initial_form(st.relation, m4, WeightVector(3)), InvalidArgument);
}

TEST_CASE("the cone K and the maps sigma and rho")
{
    XiPoint xi(4);
    for (int s = 1; s <= 4; ++s)
        for (int t = s; t <= 4; ++t) xi.zat(s, t) = (t - s) * (t - s);
    CHECK(in_K(xi));
    xi.zat(1, 1) = 1;
    CHECK_FALSE(in_K(xi));
    xi.zat(1, 1) = 0;
    xi.zat(1, 3) = 10;
    CHECK_FALSE(in_K(xi));

    for (int n = 3; n <= 5; ++n) {
        PluckerSetting s(n, true);
        auto gt = cone_hrep(ConeTarget::ToricGt, s);
        auto fflv = cone_hrep(ConeTarget::ToricFflv, s);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto p = random_k_point(n, seed);
            REQUIRE(in_K(p));
            CHECK(contains(gt, sigma_map(s.m, p)));
            CHECK(contains(fflv, rho_map(s.nl, p)));
        }
    }
    PluckerSetting s3(3, false);
    CHECK_THROWS_AS(sigma_map(s3.m, XiPoint(4)), InvalidArgument);
    CHECK_THROWS_AS(rho_map(s3.m, XiPoint(3)), InvalidArgument);
}

TEST_CASE("facets against the subcone")
{
    for (int n = 4; n <= 6; ++n) {
        PluckerSetting s(n, false);
        for (auto t : {ConeTarget::Ssyt, ConeTarget::Pbw}) {
            auto h = cone_hrep(t, s);
            for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
                INFO(target_name(t), " n=", n, " facet ", i);
                SubconeClass c;
                REQUIRE_NOTHROW(c = classify_facet_vs_subcone(h, i, s));
                CHECK(c.contains_subcone == (h.provenance[i].kind == "diamond"));
            }
        }
    }
    CHECK(k_facet_form(1, 2) == ZForm{{{1, 2}, 1}, {{1, 3}, -1}, {{2, 3}, 1}});
}
