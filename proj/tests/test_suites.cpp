#include "plueckerfan/suites.hpp"

#include <doctest.h>

using namespace pf;

TEST_CASE("JSON round trips")
{
    auto m4 = build_M(4);
    auto st = straighten_pair(m4, m4.element("1,4"), m4.element("2,3"));
    CHECK(polynomial_from_json(polynomial_json(st.relation)) == st.relation);
    auto j = straightening_json(m4, st);
    CHECK(j["a"] == "1,4");
    CHECK(j["lattice_terms"][0]["p"] == "1,3");
    CHECK(j["terms"][0]["coeff"].get<std::string>() == "1");
    CHECK_THROWS_AS(polynomial_from_json(Json{{"terms", {{{"coeff", "1"}, {"factors", {{0}}}}}}}), InvalidArgument);
    CHECK_THROWS_AS(polynomial_from_json(Json::object()), InvalidArgument);

    auto w = interior_witness(m4.lattice);
    w[3] = Rational(5, 7);
    CHECK(weights_from_json(m4, weights_json(m4, w)) == w);
    auto partial = weights_json(m4, w);
    partial.erase("1");
    CHECK_THROWS_AS(weights_from_json(m4, partial), InvalidArgument);

    auto xi = random_k_point(5, 3);
    auto back = xi_from_json(5, xi_json(xi));
    CHECK(back.z == xi.z);
    CHECK(back.c == xi.c);
    CHECK(xi_json(xi)["z"].contains("2,4"));
    CHECK_THROWS_AS(xi_from_json(5, Json{{"z", {{"4,2", "1"}}}}), InvalidArgument);

    PluckerSetting s3(3, false);
    auto h = hrep_json(cone_hrep(ConeTarget::Ssyt, s3), s3.m);
    CHECK(h["inequalities"].size() == 2);
    CHECK(h["inequalities"][0]["rel"] == "<");
    CHECK(h["inequalities"][0]["terms"]["1"] == 1);
    CHECK(h["provenance"][1]["kind"] == "special");

    auto p = build_M(4).ji_poset;
    auto q = poset_from_json(poset_json(p));
    CHECK(q.size() == p.size());
    CHECK(q.covers().size() == p.covers().size());
    CHECK_THROWS_AS(poset_from_json(Json{{"elements", {"a"}}}), InvalidArgument);
}

TEST_CASE("suites")
{
    SuiteOptions opt;
    opt.n = 6;
    auto counts = run_suite("counts", opt);
    CHECK(counts.ok());
    CHECK(counts.checks == 6);
    opt.n = 5;
    CHECK(run_suite("tau", opt).ok());
    CHECK_THROWS_AS(run_suite("nosuch", opt), InvalidArgument);
    CHECK_THROWS_AS(default_n("nosuch"), InvalidArgument);
    CHECK(suite_names().size() == 12);

    std::vector<std::string> ids;
    for (int i = 0; i < 9; ++i) ids.push_back("p" + std::to_string(i));
    opt.poset = Poset::from_covers(ids, {});
    CHECK_THROWS_AS(run_suite("ehrhart", opt), CapacityError);
    opt.poset.reset();
    opt.n = 5;
    CHECK_THROWS_AS(run_suite("ehrhart", opt), CapacityError);
    opt.n = 3;
    opt.random_posets = 2;
    auto e = run_suite("ehrhart", opt);
    CHECK(e.ok());
    CHECK(e.notes["posets"] == 3);

    auto pbw = straightening_laws(LatticeKind::N, 5, kDefaultTrials, 9, Exec::Serial);
    CHECK(pbw.ok());
    // Too few trials cannot reach the aggregate bound.
    auto weak = straightening_laws(LatticeKind::N, 4, 4, 9, Exec::Serial);
    REQUIRE(weak.failures.size() == 1);
    CHECK(weak.failures[0].check == "aggregate failure bound below 2^-1000");
    CHECK(pbw.notes["rho_pairs"].get<int>() > 0);
    CHECK(pbw.notes.contains("m_of_plain_diamond_pairs"));

    auto j = report_json(counts, false);
    CHECK_FALSE(j.contains("wall_seconds"));
    CHECK(report_json(counts, true).contains("wall_seconds"));
    CHECK(j["failures"].empty());

    SuiteReport r;
    r.suite = "x";
    r.expect(false, "broken", {{"n", 1}}, "1", "2");
    CHECK_FALSE(r.ok());
    CHECK(report_text(r).find("FAIL broken") != std::string::npos);
}

TEST_CASE("random posets are seeded")
{
    auto a = poset_corpus({3}, 4, 10);
    auto b = poset_corpus({3}, 4, 10);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second.covers() == b[i].second.covers());
        CHECK(a[i].second.size() <= kMaxEhrhartPoset);
    }
}
