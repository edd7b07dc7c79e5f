#include "helpers.hpp"
#include "plueckerfan/plucker.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace pf;
using namespace testing_helpers;

TEST_CASE("order ideals of small posets")
{
    CHECK(enumerate_order_ideals(antichain(2)).size() == 4);
    CHECK(enumerate_order_ideals(chain(3)).size() == 4);
    auto m3 = build_M(3);
    CHECK(enumerate_order_ideals(m3.ji_poset).size() == 6);
    CHECK(count_ideals_brute(m3.ji_poset) == 6);

    auto ideals = enumerate_order_ideals(antichain(2));
    CHECK(ideals[0].count() == 0);
    CHECK(ideals[3].count() == 2);
    CHECK(ideals[1].contains(0));
    CHECK(ideals[2].contains(1));
}

TEST_CASE("order ideal enumeration agrees with brute force on random posets")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poset(1 + trial % 9, 0.3, rng);
        auto ideals = enumerate_order_ideals(p);
        CHECK(ideals.size() == count_ideals_brute(p));
        for (const auto& j : ideals) CHECK(p.is_ideal(j));
        for (std::size_t i = 1; i < ideals.size(); ++i) CHECK(ideals[i - 1] < ideals[i]);
    }
}

TEST_CASE("capacity guard on ideal enumeration")
{
    CHECK_THROWS_AS(enumerate_order_ideals(antichain(63)), CapacityError);
}

TEST_CASE("poset construction validates input")
{
    CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidArgument);
    CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "z"}}), InvalidArgument);
    auto p = Poset::from_covers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
    CHECK(p.covers().size() == 2);
    CHECK(p.leq(p.index_of("x"), p.index_of("z")));
}

TEST_CASE("lattice of ideals")
{
    auto empty = lattice_of_ideals(Poset::from_covers({}, {}));
    CHECK(empty.size() == 1);

    auto boolean = lattice_of_ideals(antichain(2));
    CHECK(boolean.size() == 4);
    CHECK(join_irreducible_elements(boolean).size() == 2);
    CHECK(diamond_pairs(boolean).size() == 1);

    auto m3 = build_M(3);
    auto l = lattice_of_ideals(m3.ji_poset);
    REQUIRE(l.size() == m3.size());
    // Isomorphism: a -> the ideal element named by the members of iota(a).
    std::vector<Elem> f(m3.size());
    for (Elem a = 0; a < m3.size(); ++a) {
        std::string id = "{";
        bool first = true;
        for (Elem p : birkhoff_iso(m3.lattice, a).members()) {
            id += (first ? "" : ",") + m3.ji_poset.id(p);
            first = false;
        }
        f[a] = l.poset().index_of(id + "}");
    }
    for (Elem a = 0; a < m3.size(); ++a)
        for (Elem b = 0; b < m3.size(); ++b) CHECK(m3.lattice.leq(a, b) == l.leq(f[a], f[b]));
    for (Elem a = 0; a < m3.size(); ++a)
        for (Elem b = 0; b < m3.size(); ++b) {
            auto ja = birkhoff_iso(m3.lattice, a), jb = birkhoff_iso(m3.lattice, b);
            CHECK(birkhoff_iso(m3.lattice, m3.lattice.join(a, b)) == (ja | jb));
            CHECK(birkhoff_iso(m3.lattice, m3.lattice.meet(a, b)) == (ja & jb));
        }
}

TEST_CASE("non-distributive inputs are rejected")
{
    // The pentagon.
    auto pentagon = Poset::from_covers({"0", "a", "b", "c", "1"},
                                       {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
    CHECK_THROWS_AS(DistributiveLattice::from_poset(pentagon), InvalidArgument);
    // The diamond with three atoms.
    auto m3 = Poset::from_covers({"0", "a", "b", "c", "1"},
                                 {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    CHECK_THROWS_AS(DistributiveLattice::from_poset(m3), InvalidArgument);
    // Not a lattice.
    auto bowtie = Poset::from_covers({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    CHECK_THROWS_AS(DistributiveLattice::from_poset(bowtie), InvalidArgument);
}

TEST_CASE("join-irreducibles, Birkhoff map and grading on M(3)")
{
    auto chain_lattice = lattice_of_ideals(chain(4));
    CHECK(join_irreducible_elements(chain_lattice).size() == 4);

    auto m3 = build_M(3);
    auto ji = join_irreducibles(m3.lattice);
    std::vector<std::string> names(ji.ids().begin(), ji.ids().end());
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"1", "1,3", "2,3", "3"});

    Elem bottom = m3.element("1,2"), top = m3.element("3");
    CHECK(birkhoff_iso(m3.lattice, bottom).count() == 0);
    CHECK(birkhoff_iso(m3.lattice, top).count() == 4);

    auto j = birkhoff_iso(m3.lattice, m3.element("2"));
    std::vector<Coord> coords;
    for (Elem p : j.members()) coords.push_back(m3.ji_coords[p]);
    std::sort(coords.begin(), coords.end());
    CHECK(coords == std::vector<Coord>{{1, 2}, {1, 3}, {2, 2}});

    auto g = grading_of(m3.lattice);
    CHECK(g[bottom] == 0);
    CHECK(g[m3.element("1,3")] == 1);
    CHECK(g[top] == 4);
}

TEST_CASE("diamond pairs")
{
    CHECK(diamond_pairs(lattice_of_ideals(chain(5))).empty());
    auto m3 = build_M(3);
    auto d3 = diamond_pairs(m3.lattice);
    REQUIRE(d3.size() == 1);
    std::set<std::string> pair{m3.name(d3[0].first), m3.name(d3[0].second)};
    CHECK(pair == std::set<std::string>{"1", "2,3"});
    CHECK(diamond_pairs(build_M(4).lattice).size() == 5);
}

TEST_CASE("Birkhoff invariants on lattices up to 64 elements")
{
    std::mt19937_64 rng(11);
    std::vector<DistributiveLattice> lattices;
    for (int trial = 0; trial < 15; ++trial) lattices.push_back(lattice_of_ideals(random_poset(2 + trial % 5, 0.35, rng)));
    lattices.push_back(build_M(3).lattice);
    lattices.push_back(build_M(4).lattice);
    lattices.push_back(build_M(5).lattice);
    lattices.push_back(build_N(4).lattice);
    lattices.push_back(build_N(5).lattice);

    for (const auto& l : lattices) {
        if (l.size() > 64) continue;
        auto ji = join_irreducibles(l);
        auto ideals = enumerate_order_ideals(ji);
        std::set<OrderIdeal> images;
        for (Elem a = 0; a < l.size(); ++a) images.insert(birkhoff_iso(l, a));
        CHECK(images.size() == l.size());
        CHECK(std::set<OrderIdeal>(ideals.begin(), ideals.end()) == images);
        for (Elem a = 0; a < l.size(); ++a)
            for (Elem b = 0; b < l.size(); ++b) {
                CHECK(birkhoff_iso(l, l.join(a, b)) == (birkhoff_iso(l, a) | birkhoff_iso(l, b)));
                CHECK(birkhoff_iso(l, l.meet(a, b)) == (birkhoff_iso(l, a) & birkhoff_iso(l, b)));
            }

        auto g = grading_of(l);
        for (Elem a = 0; a < l.size(); ++a) CHECK(g[a] == l.grade(a));

        auto round = lattice_of_ideals(ji);
        CHECK(round.size() == l.size());
        CHECK(round.poset().covers().size() == l.poset().covers().size());

        for (auto [a, b] : diamond_pairs(l)) {
            CHECK(is_diamond(l, b, a));
            CHECK(l.poset().covers(l.join(a, b), a));
            CHECK(l.poset().covers(a, l.meet(a, b)));
            CHECK(g[a] == g[b]);
            CHECK(g[a] == g[l.meet(a, b)] + 1);
            CHECK(g[a] == g[l.join(a, b)] - 1);
        }
    }
}
