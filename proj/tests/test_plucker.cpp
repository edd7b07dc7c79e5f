#include "plueckerfan/plucker.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace pf;

namespace {

std::set<std::pair<std::string, std::string>> hasse(const PluckerLattice& lat)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto [lo, hi] : lat.lattice.poset().covers()) out.emplace(lat.name(lo), lat.name(hi));
    return out;
}

std::set<std::string> ji_names(const PluckerLattice& lat)
{
    std::set<std::string> out;
    for (Elem e : lat.ji) out.insert(lat.name(e));
    return out;
}

OrderIdeal ideal_of(const PluckerLattice& lat, const std::vector<Coord>& coords)
{
    OrderIdeal j(lat.ji.size());
    for (auto c : coords) j.insert(static_cast<Elem>(lat.ji_index(c)));
    return j;
}

}  // namespace

TEST_CASE("M(3) and N(3)")
{
    auto m = build_M(3);
    CHECK(m.size() == 6);
    std::set<std::pair<std::string, std::string>> expect{{"1,2", "1,3"}, {"1,3", "1"}, {"1,3", "2,3"},
                                                         {"1", "2"},     {"2,3", "2"}, {"2", "3"}};
    CHECK(hasse(m) == expect);

    auto nl = build_N(3);
    std::set<std::pair<std::string, std::string>> expect_n{{"1", "2"},   {"2", "1,2"}, {"2", "3"},
                                                           {"1,2", "3,2"}, {"3", "3,2"}, {"3,2", "1,3"}};
    CHECK(hasse(nl) == expect_n);
    CHECK(tau(m, nl, m.element("1,2")) == nl.element("1"));
    CHECK(nl.name(tau(m, nl, m.element("2"))) == "3,2");
}

TEST_CASE("M(4) and N(4) Hasse diagrams")
{
    auto m = build_M(4);
    CHECK(m.name(m.lattice.meet(m.element("1,4"), m.element("2,3"))) == "1,3");
    CHECK(m.name(m.lattice.join(m.element("1,4"), m.element("2,3"))) == "2,4");

    std::set<std::pair<std::string, std::string>> left{
        {"1,2,3", "1,2,4"}, {"1,2,4", "1,2"}, {"1,2,4", "1,3,4"}, {"1,2", "1,3"}, {"1,3,4", "1,3"},
        {"1,3,4", "2,3,4"}, {"1,3", "1,4"},   {"1,3", "2,3"},     {"2,3,4", "2,3"}, {"1,4", "1"},
        {"1,4", "2,4"},     {"2,3", "2,4"},   {"1", "2"},         {"2,4", "2"},     {"2,4", "3,4"},
        {"2", "3"},         {"3,4", "3"},     {"3", "4"}};
    CHECK(hasse(m) == left);
    CHECK(ji_names(m) == std::set<std::string>{"4", "3,4", "1", "1,4", "2,3,4", "1,2", "1,3,4", "1,2,4"});

    auto nl = build_N(4);
    std::set<std::pair<std::string, std::string>> right{
        {"1", "2"},       {"2", "1,2"},     {"2", "3"},       {"1,2", "3,2"},   {"3", "3,2"},
        {"3", "4"},       {"3,2", "1,3"},   {"3,2", "4,2"},   {"4", "4,2"},     {"1,3", "1,2,3"},
        {"1,3", "4,3"},   {"4,2", "4,3"},   {"1,2,3", "4,2,3"}, {"4,3", "4,2,3"}, {"4,3", "1,4"},
        {"4,2,3", "1,4,3"}, {"1,4", "1,4,3"}, {"1,4,3", "1,2,4"}};
    CHECK(hasse(nl) == right);
    CHECK(ji_names(nl) == std::set<std::string>{"1,2,4", "1,4", "1,2,3", "1,3", "4", "1,2", "3", "2"});
    CHECK(nl.name(tau(m, nl, m.element("4"))) == "1,2,4");
    CHECK(nl.size() == 14);
}

TEST_CASE("nu on the documented ideals")
{
    CHECK(nu_from_coords({{1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 4}}, 4) == make_entries({4, 3}));
    CHECK(nu_from_coords({}, 4) == make_entries({1}));
    CHECK(nu_from_coords({{1, 2}, {2, 2}, {1, 3}}, 4) == make_entries({3, 2}));
    // Larger n without building the lattice.
    auto ideal = m_ideal_coords(make_entries({2, 5, 9}), 14);
    CHECK(is_pbw_column(nu_from_coords(ideal, 14), 14));
}

TEST_CASE("PBW two-column condition")
{
    CHECK(pbw_two_column_leq(make_entries({3, 2}), make_entries({3, 2})));
    CHECK(pbw_two_column_leq(make_entries({1, 3}), make_entries({3, 2})));
    CHECK_FALSE(pbw_two_column_leq(make_entries({1, 2}), make_entries({3})));
    CHECK_FALSE(pbw_two_column_leq(make_entries({3}), make_entries({1, 2})));
    CHECK(is_pbw_column(make_entries({7, 2, 6, 5}), 7));
    CHECK_FALSE(is_pbw_column(make_entries({2, 1}), 3));
}

TEST_CASE("lattice sizes and range guards")
{
    for (int n = 2; n <= 7; ++n) {
        CHECK(build_M(n).size() == (std::size_t{1} << n) - 2);
        CHECK(build_N(n).size() == (std::size_t{1} << n) - 2);
    }
    CHECK_THROWS_AS(build_M(1), InvalidArgument);
    CHECK_THROWS_AS(build_N(13), CapacityError);
}

TEST_CASE("tableau from ideal")
{
    auto n3 = build_N(3);
    CHECK(tableau_from_ideal(n3, OrderIdeal(n3.ji.size())) == make_entries({1}));
    CHECK(tableau_from_ideal(n3, n3.iota[n3.element("3,2")]) == make_entries({3, 2}));

    auto n7 = build_N(7);
    auto red = ideal_of(n7, {{2, 2}, {3, 3}, {4, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {2, 4},
                             {3, 5}, {1, 4}, {2, 5}, {3, 6}, {1, 5}, {2, 6}, {1, 6}, {1, 7}});
    CHECK(tableau_from_ideal(n7, red) == make_entries({7, 2, 6, 5}));
    Elem c = n7.from_ideal(red);
    CHECK(n7.name(c) == "7,2,6,5");
    CHECK(n7.lattice.poset().upper_covers(c).size() == 3);

    auto n5 = build_N(5);
    for (Elem b = 0; b < n5.size(); ++b) CHECK(tableau_from_ideal(n5, n5.iota[b]) == n5.labels[b]);
}

TEST_CASE("tau is an isomorphism for n <= 7")
{
    for (int n = 2; n <= 7; ++n) {
        auto rep = verify_tau(build_M(n), build_N(n));
        CHECK(rep.failures.empty());
        CHECK(rep.pairs_checked == ((std::size_t{1} << n) - 2) * ((std::size_t{1} << n) - 2));
    }
}

TEST_CASE("classification of the documented pairs")
{
    auto m4 = build_M(4);
    auto c = classify_pair(m4, m4.element("1,4"), m4.element("2,3"));
    CHECK(c.kind == PairKind::DiamondSpecial);
    CHECK(m4.name(*c.data.below) == "1,2");
    CHECK(m4.name(*c.data.above) == "3,4");

    auto m3 = build_M(3);
    auto c3 = classify_pair(m3, m3.element("2,3"), m3.element("1"));
    CHECK(c3.kind == PairKind::DiamondSpecial);
    CHECK(m3.name(*c3.data.below) == "1,2");
    CHECK(m3.name(*c3.data.above) == "3");

    auto n3 = build_N(3);
    auto cn = classify_pair(n3, n3.element("1,2"), n3.element("3"));
    CHECK(cn.kind == PairKind::DiamondSpecial);
    CHECK(n3.name(*cn.data.below) == "1");
    CHECK(n3.name(*cn.data.companion) == "2");
    CHECK(n3.name(*cn.data.above) == "1,3");

    CHECK_THROWS_AS(classify_pair(m4, m4.element("1,2"), m4.element("3")), ComparablePair);
    CHECK(classify_pair(m4, m4.element("1,2"), m4.element("2,3,4")).kind == PairKind::NotDiamond);
}

TEST_CASE("cover and diamond patterns in M")
{
    for (int n = 3; n <= 6; ++n) {
        auto m = build_M(n);
        for (auto [lo, hi] : m.lattice.poset().covers()) {
            const auto& j = m.labels[lo];
            const auto& i = m.labels[hi];
            bool same = false, drop = false;
            if (i.size() == j.size()) {
                int diff = 0;
                bool plus_one = true;
                for (std::size_t r = 0; r < i.size(); ++r)
                    if (i[r] != j[r]) {
                        ++diff;
                        plus_one &= i[r] == j[r] + 1;
                    }
                same = diff == 1 && plus_one;
            } else if (j.size() == i.size() + 1) {
                drop = j.back() == n && std::equal(i.begin(), i.end(), j.begin());
            }
            CHECK((same || drop));
        }
        // classify_pair asserts the diamond patterns internally.
        for (auto [a, b] : diamond_pairs(m.lattice)) CHECK(classify_pair(m, a, b).kind != PairKind::NotDiamond);
    }
}

TEST_CASE("special pairs: four elements between p1 and q1, and between-witnesses")
{
    for (int n = 3; n <= 6; ++n) {
        auto m = build_M(n);
        for (auto [a, b] : diamond_pairs(m.lattice)) {
            auto c = classify_pair(m, a, b);
            Elem p1 = *c.data.below, q1 = *c.data.above;
            std::vector<Elem> between;
            for (Elem e = 0; e < m.size(); ++e)
                if (m.lattice.poset().less(p1, e) && m.lattice.poset().less(e, q1)) between.push_back(e);
            bool special = c.kind == PairKind::DiamondSpecial;
            CHECK(special == (between.size() == 4));
            if (!special) {
                bool found = false;
                for (Elem e : between)
                    if (e != a && e != b && (!m.lattice.comparable(e, a) || !m.lattice.comparable(e, b))) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("odot on N diamond pairs")
{
    for (int n = 3; n <= 6; ++n) {
        auto nl = build_N(n);
        for (auto [a, b] : diamond_pairs(nl.lattice)) {
            auto c = classify_pair(nl, a, b);
            if (c.kind == PairKind::DiamondPlain) CHECK(*c.data.below == c.data.meet);
            else CHECK(*c.data.below != c.data.meet);
        }
    }
}

TEST_CASE("diamond and special pair counts for 3 <= n <= 9")
{
    for (int n = 3; n <= 9; ++n) {
        auto m = build_M(n);
        std::size_t diamond = 0, special = 0;
        for (auto [a, b] : diamond_pairs(m.lattice)) {
            ++diamond;
            special += classify_pair(m, a, b).kind == PairKind::DiamondSpecial;
        }
        // 2^{n-5}(n^2-n-2) and 2^{n-4}(n-3) + 2^{n-3}, scaled by 32.
        CHECK(diamond * 32 == (std::size_t{1} << n) * (n * n - n - 2));
        CHECK(special * 16 == (std::size_t{1} << n) * (n - 3) + (std::size_t{1} << (n + 1)));
    }
}
