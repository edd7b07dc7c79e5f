#include "helpers.hpp"
#include "plueckerfan/plucker.hpp"
#include "plueckerfan/polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace pf;
using namespace testing_helpers;

namespace {

ChainOrderPartition all_order(const Poset& p) { return make_partition(p, p.full_set()); }
ChainOrderPartition all_chain(const Poset& p) { return make_partition(p, p.empty_set()); }

std::set<std::pair<std::vector<std::pair<Elem, int>>, Rational>> as_set(const PolytopeHRep& h)
{
    std::set<std::pair<std::vector<std::pair<Elem, int>>, Rational>> s;
    for (const auto& i : h.inequalities) s.emplace(i.form, i.bound);
    return s;
}

}  // namespace

TEST_CASE("interpolating inequalities: order and chain polytope")
{
    auto p = chain(2);  // c0 < c1
    auto order = as_set(interpolating_hrep(p, all_order(p)));
    // 0 <= x1 <= x0 <= 1
    decltype(order) expect_order{{{{0, -1}}, 0}, {{{1, -1}}, 0}, {{{0, -1}, {1, 1}}, 0}, {{{0, 1}}, 1}, {{{1, 1}}, 1}};
    CHECK(order == expect_order);

    auto ch = as_set(interpolating_hrep(p, all_chain(p)));
    decltype(ch) expect_chain{{{{0, -1}}, 0}, {{{1, -1}}, 0}, {{{0, 1}, {1, 1}}, 1}};
    CHECK(ch == expect_chain);

    CHECK(interpolating_hrep(Poset::from_covers({}, {}), all_order(Poset::from_covers({}, {}))).inequalities.empty());
}

TEST_CASE("interpolating inequalities define the same integer points as the unreduced system")
{
    // Unreduced system: every chain, not only maximal ones.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_poset(2 + trial % 5, 0.4, rng);
        ElementSet uo(p.size());
        for (Elem a = 0; a < p.size(); ++a)
            if (rng() % 2) uo.insert(a);
        auto part = make_partition(p, uo);
        auto h = interpolating_hrep(p, part);
        for (int t = 1; t <= 2; ++t) {
            auto pts = enumerate_lattice_points(h, t);
            std::size_t brute = 0;
            std::vector<std::int64_t> x(p.size(), 0);
            std::size_t total = 1;
            for (std::size_t i = 0; i < p.size(); ++i) total *= t + 1;
            for (std::size_t code = 0; code < total; ++code) {
                std::size_t c = code;
                for (auto& v : x) {
                    v = c % (t + 1);
                    c /= t + 1;
                }
                bool ok = true;
                for (Elem a = 0; a < p.size(); ++a)
                    for (Elem b = 0; b < p.size(); ++b)
                        if (p.less(a, b) && part.in_order(a) && part.in_order(b) && x[b] > x[a]) ok = false;
                // all chains a_1 < ... < a_k with a_1..a_{k-1} in U_c, via subsets
                for (std::uint32_t sub = 1; sub < (1u << p.size()) && ok; ++sub) {
                    std::vector<Elem> el;
                    for (Elem a = 0; a < p.size(); ++a)
                        if (sub >> a & 1) el.push_back(a);
                    std::sort(el.begin(), el.end(), [&](Elem u, Elem v) { return p.down(u).count() < p.down(v).count(); });
                    bool is_chain = true;
                    for (std::size_t i = 1; i < el.size(); ++i) is_chain &= p.less(el[i - 1], el[i]);
                    if (!is_chain) continue;
                    bool admissible = true;
                    for (std::size_t i = 0; i + 1 < el.size(); ++i) admissible &= part.in_chain(el[i]);
                    if (!admissible) continue;
                    std::int64_t sum = 0;
                    for (Elem a : el) sum += x[a];
                    if (sum > t) ok = false;
                    for (Elem q = 0; q < p.size(); ++q)
                        if (part.in_order(q) && p.less(q, el.front()) && sum > x[q]) ok = false;
                }
                brute += ok;
            }
            CHECK(pts.size() == brute);
        }
    }
}

TEST_CASE("transfer maps on a 2-chain")
{
    auto p = chain(2);
    auto part = all_chain(p);
    CHECK(zeta(p, part, RationalPoint{1, 1}) == RationalPoint{0, 1});
    CHECK(zeta_prime(p, part, RationalPoint{0, 1}) == RationalPoint{1, 1});
    CHECK(zeta(p, part, RationalPoint{0, 0}) == RationalPoint{0, 0});
    CHECK(zeta_prime(p, part, RationalPoint{0, 0}) == RationalPoint{0, 0});
    auto op = all_order(p);
    CHECK(zeta(p, op, RationalPoint{Rational(1, 3), 2}) == RationalPoint{Rational(1, 3), 2});
    CHECK(zeta_prime(p, op, RationalPoint{Rational(1, 3), 2}) == RationalPoint{Rational(1, 3), 2});
}

TEST_CASE("K-sets and the odot operation")
{
    auto p = chain(3);
    auto ideals = enumerate_order_ideals(p);
    for (const auto& j : ideals) {
        CHECK(k_set(p, all_order(p), j) == j);
        CHECK(k_set(p, all_chain(p), j) == p.maximal_elements(j));
    }
    CHECK(k_set(p, all_chain(p), p.empty_set()).empty());

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto q = random_poset(2 + trial % 7, 0.35, rng);
        ElementSet uo(q.size());
        for (Elem a = 0; a < q.size(); ++a)
            if (rng() % 2) uo.insert(a);
        auto part = make_partition(q, uo);
        auto js = enumerate_order_ideals(q);
        for (const auto& j1 : js)
            for (const auto& j2 : js) {
                auto k1 = k_set(q, part, j1), k2 = k_set(q, part, j2), ku = k_set(q, part, j1 | j2);
                CHECK((k1 & k2).subset_of(ku));
                CHECK(ku.subset_of(k1 | k2));
                auto od = odot_ideals(q, part, j1, j2);
                CHECK(od.subset_of(j1 & j2));
                CHECK(k_set(q, part, od).subset_of(k_set(q, part, j1 & j2)));
                if (j1.subset_of(j2)) CHECK(od == j1);
                CHECK(odot_ideals(q, all_order(q), j1, j2) == (j1 & j2));
                // zeta of the indicator has support K(J)
                auto z = zeta(q, part, indicator(j1));
                CHECK(z == indicator(k1));
            }
    }
}

TEST_CASE("odot in N(3)")
{
    auto n3 = build_N(3);
    Elem a = n3.element("1,2"), b = n3.element("3");
    auto j = odot_ideals(n3.ji_poset, n3.partition, n3.iota[a], n3.iota[b]);
    CHECK(j == n3.iota[n3.element("1")]);
}

TEST_CASE("dilation points")
{
    auto p = chain(2);
    auto pts = dilation_points(p, all_chain(p), 1);
    CHECK(pts == std::vector<IntPoint>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(dilation_points(p, all_order(p), 1).size() == 3);
    CHECK(dilation_points(p, all_chain(p), 0) == std::vector<IntPoint>{{0, 0}});
    auto anti = antichain(4);
    CHECK(dilation_points(anti, all_chain(anti), 1).size() == 16);
    CHECK(dilation_points(anti, all_order(anti), 1).size() == 16);
}

TEST_CASE("Minkowski decomposition")
{
    auto p = chain(2);
    auto part = all_chain(p);
    auto parts = minkowski_decompose(p, part, {1, 1}, 2);
    std::sort(parts.begin(), parts.end());
    CHECK(parts == std::vector<IntPoint>{{0, 1}, {1, 0}});
    CHECK(minkowski_decompose(p, part, {0, 1}, 1) == std::vector<IntPoint>{{0, 1}});
    CHECK_THROWS_AS(minkowski_decompose(p, part, {2, 1}, 2), InvalidArgument);

    auto q = build_M(3).ji_poset;
    ElementSet uo = build_M(3).partition.order_part;
    auto qp = make_partition(q, uo);
    for (const auto& j : enumerate_order_ideals(q)) {
        auto k = indicator(k_set(q, qp, j));
        IntPoint twice = k;
        for (auto& v : twice) v *= 2;
        CHECK(minkowski_decompose(q, qp, twice, 2) == std::vector<IntPoint>{k, k});
    }
}
