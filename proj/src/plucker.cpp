#include "plueckerfan/plucker.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pf {

std::string kind_name(LatticeKind k)
{
    return k == LatticeKind::M ? "M" : "N";
}

LatticeKind parse_kind(const std::string& s)
{
    if (s == "M" || s == "m") return LatticeKind::M;
    if (s == "N" || s == "n") return LatticeKind::N;
    throw InvalidArgument("unknown lattice kind '" + s + "' (expected M or N)");
}

std::string pair_kind_name(PairKind k)
{
    switch (k) {
    case PairKind::NotDiamond: return "not_diamond";
    case PairKind::DiamondPlain: return "diamond_plain";
    case PairKind::DiamondSpecial: return "diamond_special";
    }
    return "?";
}

Elem PluckerLattice::of_mask(SetMask m) const
{
    if (m >= by_mask.size() || by_mask[m] == Elem(-1))
        throw InvalidArgument("no element of " + kind_name(kind) + "(" + std::to_string(n) + ") with index set " +
                              format_entries(column_from_mask(m)));
    return by_mask[m];
}

Elem PluckerLattice::element(const Entries& e) const
{
    auto c = canonicalize(e, n);
    if (!c) throw InvalidArgument("repeated index in '" + format_entries(e) + "'");
    return of_mask(mask_of(e));
}

Elem PluckerLattice::of_m_column(const Entries& c) const
{
    SetMask m = mask_of(c);
    if (m >= by_m_mask.size() || by_m_mask[m] == Elem(-1)) throw InvalidArgument("not a column: " + format_entries(c));
    return by_m_mask[m];
}

std::size_t PluckerLattice::ji_index(Coord c) const
{
    auto it = std::find(ji_coords.begin(), ji_coords.end(), c);
    if (it == ji_coords.end()) throw InvalidArgument("no join-irreducible with coordinates (" +
                                                     std::to_string(c.first) + "," + std::to_string(c.second) + ")");
    return static_cast<std::size_t>(it - ji_coords.begin());
}

Elem PluckerLattice::from_ideal(const OrderIdeal& j) const
{
    if (!ji_poset.is_ideal(j)) throw InvalidArgument("not an order ideal of the join-irreducibles");
    Elem out = lattice.bottom();
    for (Elem p : j.members()) out = lattice.join(out, ji[p]);
    return out;
}

int PluckerLattice::label_sign(Elem a) const
{
    return canonicalize(labels.at(a))->sign;
}

namespace {

void check_n(int n)
{
    if (n < 2) throw InvalidArgument("n must be at least 2");
    if (n > 12) throw CapacityError("full lattice construction is limited to n <= 12");
}

// Fills ji, coordinates, partition and ideals once lattice, labels and
// m_labels are in place.
void finish(PluckerLattice& lat)
{
    const int n = lat.n;
    std::map<SetMask, Coord> coord_of;
    for (auto c : ji_coordinates(n)) coord_of[mask_of(y_column(c.first, c.second, n))] = c;

    lat.ji = join_irreducible_elements(lat.lattice);
    check(lat.ji.size() == coord_of.size(), "number of join-irreducibles differs from (n^2+n-4)/2");
    lat.ji_coords.clear();
    for (Elem e : lat.ji) {
        auto it = coord_of.find(mask_of(lat.m_labels[e]));
        check(it != coord_of.end(), "join-irreducible " + lat.name(e) + " is not of the form [1,n]\\[r,s]");
        lat.ji_coords.push_back(it->second);
    }
    lat.ji_poset = lat.lattice.poset().induced(lat.ji);
    for (std::size_t p = 0; p < lat.ji.size(); ++p)
        for (std::size_t q = 0; q < lat.ji.size(); ++q)
            check(lat.ji_poset.leq(p, q) == coord_leq(lat.ji_coords[p], lat.ji_coords[q]),
                  "order of join-irreducibles differs from the coordinate order");

    ElementSet diag(lat.ji.size());
    for (std::size_t p = 0; p < lat.ji.size(); ++p)
        if (lat.ji_coords[p].first == lat.ji_coords[p].second) diag.insert(p);
    lat.partition = make_partition(lat.ji_poset, diag);

    lat.iota.assign(lat.size(), OrderIdeal(lat.ji.size()));
    for (Elem a = 0; a < lat.size(); ++a)
        for (std::size_t p = 0; p < lat.ji.size(); ++p)
            if (lat.lattice.leq(lat.ji[p], a)) lat.iota[a].insert(p);
}

std::vector<std::string> names(const std::vector<Entries>& labels)
{
    std::vector<std::string> out;
    for (const auto& l : labels) out.push_back(format_entries(l));
    return out;
}

}  // namespace

PluckerLattice build_M(int n)
{
    check_n(n);
    PluckerLattice lat;
    lat.kind = LatticeKind::M;
    lat.n = n;
    const SetMask full = (SetMask{1} << n) - 1;
    for (SetMask m = 1; m < full; ++m) lat.labels.push_back(column_from_mask(m));
    std::sort(lat.labels.begin(), lat.labels.end(), [n](const Entries& x, const Entries& y) {
        int gx = m_grade(x, n), gy = m_grade(y, n);
        return gx != gy ? gx < gy : x < y;
    });
    lat.m_labels = lat.labels;
    const std::size_t size = lat.labels.size();
    lat.by_mask.assign(std::size_t{1} << n, Elem(-1));
    for (Elem a = 0; a < size; ++a) lat.by_mask[mask_of(lat.labels[a])] = a;
    lat.by_m_mask = lat.by_mask;

    std::vector<ElementSet> down(size, ElementSet(size));
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            if (m_leq(lat.labels[b], lat.labels[a])) down[a].insert(b);
    std::vector<std::uint16_t> join(size * size), meet(size * size);
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b) {
            join[a * size + b] = static_cast<std::uint16_t>(lat.by_mask[mask_of(m_join(lat.labels[a], lat.labels[b]))]);
            meet[a * size + b] = static_cast<std::uint16_t>(lat.by_mask[mask_of(m_meet(lat.labels[a], lat.labels[b]))]);
        }
    lat.lattice = DistributiveLattice(Poset(names(lat.labels), std::move(down)), std::move(join), std::move(meet));
    for (Elem a = 0; a < size; ++a)
        check(lat.lattice.grade(a) == m_grade(lat.labels[a], n), "grading formula disagrees at " + lat.name(a));
    finish(lat);
    return lat;
}

Entries nu(const PluckerLattice& m, Elem a)
{
    if (m.kind != LatticeKind::M) throw InvalidArgument("nu is defined on M");
    std::vector<Coord> coords;
    for (Elem p : m.iota.at(a).members()) coords.push_back(m.ji_coords[p]);
    return nu_from_coords(coords, m.n);
}

PluckerLattice build_N(int n)
{
    check_n(n);
    PluckerLattice m = build_M(n);
    const std::size_t size = m.size();

    std::vector<Entries> images(size);
    std::vector<char> hit(std::size_t{1} << n, 0);
    for (Elem a = 0; a < size; ++a) {
        images[a] = nu(m, a);
        SetMask mk = mask_of(images[a]);
        check(images[a] == pbw_from_mask(mk), "nu image is not the PBW arrangement of its set");
        check(!hit[mk], "nu is not injective");
        hit[mk] = 1;
    }

    std::vector<Elem> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Elem x, Elem y) {
        int gx = m.grade(x), gy = m.grade(y);
        return gx != gy ? gx < gy : images[x] < images[y];
    });

    PluckerLattice lat;
    lat.kind = LatticeKind::N;
    lat.n = n;
    lat.by_mask.assign(std::size_t{1} << n, Elem(-1));
    lat.by_m_mask.assign(std::size_t{1} << n, Elem(-1));
    for (Elem i = 0; i < size; ++i) {
        lat.labels.push_back(images[perm[i]]);
        lat.m_labels.push_back(m.labels[perm[i]]);
        lat.by_mask[mask_of(lat.labels[i])] = i;
        lat.by_m_mask[mask_of(lat.m_labels[i])] = i;
    }

    std::vector<ElementSet> down(size, ElementSet(size));
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b)
            if (pbw_two_column_leq(lat.labels[a], lat.labels[b])) down[a].insert(b);
    std::vector<std::uint16_t> join(size * size), meet(size * size);
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b) {
            const auto& x = lat.m_labels[a];
            const auto& y = lat.m_labels[b];
            join[a * size + b] = static_cast<std::uint16_t>(lat.by_m_mask[mask_of(m_join(x, y))]);
            meet[a * size + b] = static_cast<std::uint16_t>(lat.by_m_mask[mask_of(m_meet(x, y))]);
        }
    lat.lattice = DistributiveLattice(Poset(names(lat.labels), std::move(down)), std::move(join), std::move(meet));
    finish(lat);

    auto report = verify_tau(m, lat);
    check(report.failures.empty(), "tau is not an isomorphism: " +
                                       (report.failures.empty() ? std::string() : report.failures.front()));
    return lat;
}

Elem tau(const PluckerLattice& m, const PluckerLattice& nlat, Elem a)
{
    if (m.kind != LatticeKind::M || nlat.kind != LatticeKind::N || m.n != nlat.n)
        throw InvalidArgument("tau needs M(n) and N(n)");
    Entries b = nu(m, a);
    Elem e = nlat.of_mask(mask_of(b));
    check(nlat.labels[e] == b, "tau image is not a PBW column of N");
    return e;
}

Elem tau_inverse(const PluckerLattice& m, const PluckerLattice& nlat, Elem b)
{
    return m.of_mask(mask_of(nlat.m_labels.at(b)));
}

TauReport verify_tau(const PluckerLattice& m, const PluckerLattice& nlat)
{
    TauReport rep;
    const std::size_t size = m.size();
    if (nlat.size() != size) {
        rep.failures.push_back("M and N have different sizes");
        return rep;
    }
    std::vector<Elem> img(size);
    std::vector<char> seen(size, 0);
    for (Elem a = 0; a < size; ++a) {
        Entries b = nu(m, a);
        SetMask mk = mask_of(b);
        if (mk >= nlat.by_mask.size() || nlat.by_mask[mk] == Elem(-1) || nlat.labels[nlat.by_mask[mk]] != b) {
            rep.failures.push_back("nu(" + m.name(a) + ") = " + format_entries(b) + " is not an element of N");
            return rep;
        }
        img[a] = nlat.by_mask[mk];
        if (seen[img[a]]) rep.failures.push_back("tau not injective at " + m.name(a));
        seen[img[a]] = 1;
    }
    for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size; ++b) {
            ++rep.pairs_checked;
            bool lm = m_leq(m.labels[a], m.labels[b]);
            bool ln = pbw_two_column_leq(nlat.labels[img[b]], nlat.labels[img[a]]);
            if (lm != ln)
                rep.failures.push_back(m.name(a) + (lm ? " <= " : " !<= ") + m.name(b) + " but images " +
                                       nlat.name(img[a]) + (ln ? " <= " : " !<= ") + nlat.name(img[b]));
        }
    return rep;
}

Entries tableau_from_ideal(const PluckerLattice& nlat, const OrderIdeal& j)
{
    if (!nlat.ji_poset.is_ideal(j)) throw InvalidArgument("tableau_from_ideal: not an order ideal");
    int k = 1;
    for (Elem p : j.members())
        if (nlat.ji_coords[p].first == nlat.ji_coords[p].second) k = std::max(k, nlat.ji_coords[p].first);
    Entries out;
    for (int r = 1; r <= k; ++r) out.push_back(static_cast<std::uint8_t>(r));
    for (Elem p : nlat.ji_poset.maximal_elements(j).members()) {
        auto [s, t] = nlat.ji_coords[p];
        check(s <= k, "maximal element outside the tableau");
        out[s - 1] = static_cast<std::uint8_t>(t);
    }
    return out;
}

namespace {

std::vector<Coord> ideal_difference(const PluckerLattice& lat, Elem a, Elem base)
{
    std::vector<Coord> out;
    for (Elem p : (lat.iota[a] - lat.iota[base]).members()) out.push_back(lat.ji_coords[p]);
    return out;
}

}  // namespace

PairClassification classify_pair(const PluckerLattice& lat, Elem a, Elem b)
{
    if (a >= lat.size() || b >= lat.size()) throw InvalidArgument("classify_pair: unknown element");
    if (a == b || lat.lattice.comparable(a, b))
        throw ComparablePair(lat.name(a) + " and " + lat.name(b) + " are comparable");

    PairClassification out;
    MPairInfo info = classify_m_columns(lat.m_labels[a], lat.m_labels[b], lat.n);
    check(!info.comparable, "M columns comparable although the lattice elements are not");
    check(info.diamond == is_diamond(lat.lattice, a, b), "column diamond test disagrees with the lattice");

    auto& d = out.data;
    d.meet = lat.lattice.meet(a, b);
    d.join = lat.lattice.join(a, b);
    check(d.meet == lat.of_m_column(info.meet) && d.join == lat.of_m_column(info.join),
          "meet/join formulas disagree with the lattice tables");
    d.a = a;
    d.b = b;
    if (!info.diamond) return out;

    out.kind = info.special ? PairKind::DiamondSpecial : PairKind::DiamondPlain;
    d.a = lat.of_m_column(info.a);
    d.b = lat.of_m_column(info.b);
    d.possibility = info.possibility;

    if (lat.kind == LatticeKind::M) {
        d.below = lat.of_m_column(info.p1);
        d.above = lat.of_m_column(info.q1);
        return out;
    }

    Elem odot = lat.from_ideal(odot_ideals(lat.ji_poset, lat.partition, lat.iota[a], lat.iota[b]));
    d.below = odot;

    auto da = ideal_difference(lat, a, d.meet);
    auto db = ideal_difference(lat, b, d.meet);
    check(da.size() == 1 && db.size() == 1, "diamond pair ideals differ from the meet by more than one element");
    Coord st = da[0], uv = db[0];
    if (st.first < uv.first) std::swap(st, uv);
    bool diagonal_neighbours = uv.first == st.first - 1 && uv.second == st.second + 1;
    check(diagonal_neighbours == info.special, "diagonal-neighbour criterion disagrees with the special-pair test");

    if (info.special) {
        Elem p1 = lat.of_m_column(info.p1);
        check(odot == p1, "a odot b differs from tau(p_1) for a special pair");
        check(odot != d.meet, "a odot b equals the meet for a special pair");
        d.companion = d.meet;
        d.above = lat.of_m_column(info.q1);
    }
    return out;
}

}  // namespace pf
