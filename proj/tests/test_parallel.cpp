#include "plueckerfan/parallel.hpp"

#include <doctest.h>

using namespace pf;

namespace {

bool same(const std::vector<Straightening>& x, const std::vector<Straightening>& y)
{
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].a != y[i].a || x[i].b != y[i].b || !(x[i].relation == y[i].relation)) return false;
        if (x[i].terms.size() != y[i].terms.size()) return false;
        for (std::size_t j = 0; j < x[i].terms.size(); ++j)
            if (x[i].terms[j].p != y[i].terms[j].p || x[i].terms[j].q != y[i].terms[j].q ||
                x[i].terms[j].coeff != y[i].terms[j].coeff)
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference")
{
    for (auto build : {build_M, build_N}) {
        auto lat = build(4);
        auto serial = straighten_all(lat, Exec::Serial);
        CHECK(serial.size() == incomparable_pairs(lat).size());
        CHECK(same(serial, straighten_all(lat, Exec::Parallel)));

        std::vector<Polynomial> ps;
        for (const auto& st : serial) ps.push_back(st.relation);
        auto a = membership_all(ps, 4, 5, 11, Exec::Serial);
        auto b = membership_all(ps, 4, 5, 11, Exec::Parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].member);
            CHECK(a[i].member == b[i].member);
            CHECK(a[i].failure_bound == b[i].failure_bound);
        }
    }

    PluckerSetting s(4, true);
    auto h = cone_hrep(ConeTarget::Ssyt, s);
    auto red = cone_hrep(ConeTarget::SsytRedundant, s);
    CHECK(certify_all(h, s, Exec::Serial) == certify_all(h, s, Exec::Parallel));
    auto pts = sample_cone(h, interior_witness(s.m.lattice), 30, 4).points;
    std::vector<const ConeHRep*> hs{&h, &red};
    CHECK(contained_all(pts, hs, Exec::Serial) == contained_all(pts, hs, Exec::Parallel));
    CHECK(initial_forms_all(pts, s.m, s.m_rel, Exec::Serial) == initial_forms_all(pts, s.m, s.m_rel, Exec::Parallel));
    CHECK(initial_forms_all(pts, s.m, s.m_rel, Exec::Serial) == std::vector<char>(pts.size(), 1));
}

TEST_CASE("parallel kernels propagate errors")
{
    std::vector<Polynomial> bad(3);
    bad[1].add_tuples({make_entries({1}), make_entries({1}), make_entries({1}), make_entries({1})}, 1);
    CHECK_NOTHROW(membership_all(bad, 4, 2, 0, Exec::Parallel));
    CHECK(item_seed(1, 2) != item_seed(1, 3));
    CHECK_THROWS_AS(sigma_map(build_M(3), XiPoint(5)), InvalidArgument);
}
