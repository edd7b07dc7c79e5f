#include "plueckerfan/cones.hpp"

#include "plueckerfan/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pf {

std::string target_name(ConeTarget t)
{
    switch (t) {
    case ConeTarget::Hibi: return "HIBI";
    case ConeTarget::GenHibi: return "GENHIBI";
    case ConeTarget::Ssyt: return "SSYT";
    case ConeTarget::Pbw: return "PBW";
    case ConeTarget::HibiRedundant: return "HIBI_REDUNDANT";
    case ConeTarget::GenHibiRedundant: return "GENHIBI_REDUNDANT";
    case ConeTarget::SsytRedundant: return "SSYT_REDUNDANT";
    case ConeTarget::PbwRedundant: return "PBW_REDUNDANT";
    case ConeTarget::ToricGt: return "TORIC_GT";
    case ConeTarget::ToricFflv: return "TORIC_FFLV";
    }
    return "?";
}

ConeTarget parse_target(const std::string& s)
{
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return c == '-' ? '_' : std::toupper(c); });
    for (auto t : {ConeTarget::Hibi, ConeTarget::GenHibi, ConeTarget::Ssyt, ConeTarget::Pbw, ConeTarget::HibiRedundant,
                   ConeTarget::GenHibiRedundant, ConeTarget::SsytRedundant, ConeTarget::PbwRedundant,
                   ConeTarget::ToricGt, ConeTarget::ToricFflv})
        if (target_name(t) == u) return t;
    throw InvalidArgument("unknown cone target '" + s + "'");
}

bool on_n(ConeTarget t)
{
    return t == ConeTarget::GenHibi || t == ConeTarget::Pbw || t == ConeTarget::GenHibiRedundant ||
           t == ConeTarget::PbwRedundant || t == ConeTarget::ToricFflv;
}

PluckerSetting::PluckerSetting(int n_, bool relations) : n(n_), m(build_M(n_)), nl(build_N(n_))
{
    if (relations) {
        m_rel = straighten_all(m, Exec::Parallel);
        n_rel = straighten_all(nl, Exec::Parallel);
    }
}

const std::vector<Straightening>& PluckerSetting::relations(LatticeKind k) const
{
    const auto& r = k == LatticeKind::M ? m_rel : n_rel;
    const auto& lat = k == LatticeKind::M ? m : nl;
    if (r.empty() && !incomparable_pairs(lat).empty())
        throw InvalidArgument("straightening relations were not computed for this setting");
    return r;
}

namespace {

LinearInequality quad_form(Elem a, Elem b, Elem p, Elem q, Relation rel)
{
    LinearInequality out;
    out.rel = rel;
    out.form[a] += 1;
    out.form[b] += 1;
    out.form[p] -= 1;
    out.form[q] -= 1;
    for (auto it = out.form.begin(); it != out.form.end();) it = it->second == 0 ? out.form.erase(it) : std::next(it);
    return out;
}

class Builder {
public:
    explicit Builder(ConeHRep& h) : h_(h) {}
    void add(LinearInequality q, Provenance p)
    {
        check(!q.form.empty(), "empty inequality form");
        auto key = std::pair(q.form, static_cast<int>(q.rel));
        if (!seen_.insert(key).second) return;
        h_.inequalities.push_back(std::move(q));
        h_.provenance.push_back(std::move(p));
    }

private:
    ConeHRep& h_;
    std::set<std::pair<std::map<Elem, Rational>, int>> seen_;
};

template <class F>
void for_incomparable(const DistributiveLattice& l, F&& f)
{
    for (Elem a = 0; a < l.size(); ++a)
        for (Elem b = a + 1; b < l.size(); ++b)
            if (!l.comparable(a, b)) f(a, b);
}

void relation_inequalities(Builder& b, const std::vector<Straightening>& rels, bool toric)
{
    for (const auto& st : rels)
        for (std::size_t i = 0; i < st.terms.size(); ++i) {
            Relation rel = toric && i == 0 ? Relation::Equality : Relation::StrictNeg;
            b.add(quad_form(st.a, st.b, st.terms[i].p, st.terms[i].q, rel),
                  {st.a, st.b, static_cast<int>(i), "pair"});
        }
}

}  // namespace

ConeHRep hibi_hrep(const DistributiveLattice& l, bool redundant)
{
    ConeHRep h;
    h.target = redundant ? ConeTarget::HibiRedundant : ConeTarget::Hibi;
    Builder b(h);
    auto add = [&](Elem x, Elem y, const char* kind) {
        b.add(quad_form(x, y, l.meet(x, y), l.join(x, y), Relation::StrictNeg), {x, y, 0, kind});
    };
    if (redundant) for_incomparable(l, [&](Elem x, Elem y) { add(x, y, "pair"); });
    else
        for (auto [x, y] : diamond_pairs(l)) add(x, y, "diamond");
    return h;
}

ConeHRep genhibi_hrep(const DistributiveLattice& l, const BirkhoffData& bd, const ChainOrderPartition& part,
                      bool redundant)
{
    ConeHRep h;
    h.target = redundant ? ConeTarget::GenHibiRedundant : ConeTarget::GenHibi;
    Builder b(h);
    auto add = [&](Elem x, Elem y, const char* kind) {
        b.add(quad_form(x, y, odot_element(bd, part, x, y), l.join(x, y), Relation::StrictNeg), {x, y, 0, kind});
    };
    if (redundant) for_incomparable(l, [&](Elem x, Elem y) { add(x, y, "pair"); });
    else
        for (auto [x, y] : diamond_pairs(l)) add(x, y, "diamond");
    return h;
}

ConeHRep cone_hrep(ConeTarget target, const PluckerSetting& s)
{
    ConeHRep h;
    switch (target) {
    case ConeTarget::Hibi: h = hibi_hrep(s.m.lattice); break;
    case ConeTarget::HibiRedundant: h = hibi_hrep(s.m.lattice, true); break;
    case ConeTarget::GenHibi: h = genhibi_hrep(s.nl.lattice, birkhoff_data(s.nl), s.nl.partition); break;
    case ConeTarget::GenHibiRedundant:
        h = genhibi_hrep(s.nl.lattice, birkhoff_data(s.nl), s.nl.partition, true);
        break;
    case ConeTarget::Ssyt:
    case ConeTarget::Pbw: {
        const auto& lat = s.lattice(target);
        Builder b(h);
        std::vector<PairClassification> special;
        for (auto [x, y] : diamond_pairs(lat.lattice)) {
            auto c = classify_pair(lat, x, y);
            Elem lower = target == ConeTarget::Ssyt ? c.data.meet : *c.data.below;
            b.add(quad_form(x, y, lower, c.data.join, Relation::StrictNeg), {x, y, 0, "diamond"});
            if (c.kind == PairKind::DiamondSpecial) special.push_back(c);
        }
        for (const auto& c : special) {
            Elem lower = target == ConeTarget::Ssyt ? *c.data.below : *c.data.companion;
            b.add(quad_form(c.data.a, c.data.b, lower, *c.data.above, Relation::StrictNeg),
                  {c.data.a, c.data.b, 1, "special"});
        }
        break;
    }
    case ConeTarget::SsytRedundant:
    case ConeTarget::PbwRedundant:
    case ConeTarget::ToricGt:
    case ConeTarget::ToricFflv: {
        Builder b(h);
        relation_inequalities(b, s.relations(on_n(target) ? LatticeKind::N : LatticeKind::M),
                              target == ConeTarget::ToricGt || target == ConeTarget::ToricFflv);
        break;
    }
    }
    h.target = target;
    h.n = s.n;
    return h;
}

Rational evaluate(const LinearInequality& q, const WeightVector& w)
{
    Rational v = 0;
    for (const auto& [e, c] : q.form) {
        if (e >= w.size()) throw InvalidArgument("weight vector does not cover the lattice");
        v += c * w[e];
    }
    return v;
}

bool satisfied(const LinearInequality& q, const WeightVector& w)
{
    Rational v = evaluate(q, w);
    switch (q.rel) {
    case Relation::StrictNeg: return v < 0;
    case Relation::NonstrictNeg: return v <= 0;
    case Relation::Equality: return v == 0;
    }
    return false;
}

bool contains(const ConeHRep& h, const WeightVector& w)
{
    for (const auto& q : h.inequalities)
        if (!satisfied(q, w)) return false;
    return true;
}

WeightVector interior_witness(const DistributiveLattice& l)
{
    WeightVector w(l.size());
    for (Elem a = 0; a < l.size(); ++a) w[a] = l.grade(a) * l.grade(a);
    return w;
}

WeightVector exponential_witness(const DistributiveLattice& l)
{
    WeightVector w(l.size());
    for (Elem a = 0; a < l.size(); ++a) w[a] = Rational(mpz_class(1) << l.grade(a));
    return w;
}

WeightVector hibi_facet_witness(const DistributiveLattice& l, Elem a, Elem b)
{
    WeightVector v(l.size());
    const int g = l.grade(a);
    for (Elem c = 0; c < l.size(); ++c) v[c] = (l.grade(c) - g) * (l.grade(c) - g);
    v[a] = v[b] = 1;
    return v;
}

WeightVector genhibi_facet_witness(const DistributiveLattice& l, const BirkhoffData& bd,
                                   const ChainOrderPartition& part, Elem a, Elem b)
{
    const int g = l.grade(a);
    const int drop = g - l.grade(odot_element(bd, part, a, b));
    check(drop > 0, "odot of an incomparable pair must lie below the pair");
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, static_cast<unsigned long>(drop));
    WeightVector v(l.size());
    for (Elem c = 0; c < l.size(); ++c) {
        const int gc = l.grade(c);
        mpz_class x;
        if (c == a || c == b) x = big;
        else if (gc >= g) mpz_pow_ui(x.get_mpz_t(), big.get_mpz_t(), static_cast<unsigned long>(gc - g));
        else mpz_ui_pow_ui(x.get_mpz_t(), 3, static_cast<unsigned long>(g - gc));
        v[c] = Rational(x);
    }
    return v;
}

WeightVector ssyt_special_witness(const PluckerLattice& m, Elem a, Elem b)
{
    auto cl = classify_pair(m, a, b);
    if (cl.kind != PairKind::DiamondSpecial) throw InvalidArgument("not a special diamond pair");
    const auto& l = m.lattice;
    const Elem p1 = *cl.data.below, q1 = *cl.data.above, join = cl.data.join;
    const int ga = l.grade(a);
    WeightVector v(m.size());
    for (Elem c = 0; c < m.size(); ++c) {
        const int g = l.grade(c);
        int x;
        if (g == ga + 2) x = c == q1 ? 0 : 2;
        else if (g == ga + 1) x = c == join ? 1 : (l.poset().less(c, q1) ? 0 : 1);
        else if (g == ga) x = l.poset().less(c, join) ? 1 : (l.poset().less(c, q1) ? 0 : 1);
        else if (g == ga - 1) x = 1;
        else if (g == ga - 2) x = c == p1 ? 1 : 2;
        else x = 1 << std::abs(g - ga);
        v[c] = x;
    }
    return v;
}

WeightVector pbw_special_witness(const PluckerSetting& s, Elem a, Elem b)
{
    auto hat = ssyt_special_witness(s.m, tau_inverse(s.m, s.nl, a), tau_inverse(s.m, s.nl, b));
    WeightVector v(s.nl.size());
    for (Elem c = 0; c < s.nl.size(); ++c) v[c] = hat[tau_inverse(s.m, s.nl, c)];
    return v;
}

WeightVector facet_witness(const ConeHRep& h, std::size_t i, const PluckerSetting& s)
{
    if (i >= h.inequalities.size()) throw InvalidArgument("unknown facet " + std::to_string(i));
    const auto& p = h.provenance[i];
    switch (h.target) {
    case ConeTarget::Hibi: return hibi_facet_witness(s.m.lattice, p.a, p.b);
    case ConeTarget::GenHibi:
        return genhibi_facet_witness(s.nl.lattice, birkhoff_data(s.nl), s.nl.partition, p.a, p.b);
    case ConeTarget::Ssyt:
        return p.kind == "special" ? ssyt_special_witness(s.m, p.a, p.b) : hibi_facet_witness(s.m.lattice, p.a, p.b);
    case ConeTarget::Pbw:
        return p.kind == "special"
                   ? pbw_special_witness(s, p.a, p.b)
                   : genhibi_facet_witness(s.nl.lattice, birkhoff_data(s.nl), s.nl.partition, p.a, p.b);
    default: throw InvalidArgument("facet witnesses exist only for minimal descriptions");
    }
}

bool certify_witness(const ConeHRep& h, std::size_t i, const WeightVector& v)
{
    Rational own = evaluate(h.inequalities.at(i), v);
    bool others_nonstrict = true, others_strict = true;
    for (std::size_t j = 0; j < h.inequalities.size(); ++j) {
        if (j == i) continue;
        Rational x = evaluate(h.inequalities[j], v);
        others_nonstrict = others_nonstrict && x <= 0;
        others_strict = others_strict && x < 0;
    }
    return (own > 0 && others_nonstrict) || (own >= 0 && others_strict);
}

FacetCount facet_count(int n)
{
    FacetCount f;
    if (n < 3) return f;
    auto m = build_M(n);
    for (auto [a, b] : diamond_pairs(m.lattice)) {
        ++f.diamond;
        f.special += classify_pair(m, a, b).kind == PairKind::DiamondSpecial;
    }
    auto nl = build_N(n);
    for (auto [a, b] : diamond_pairs(nl.lattice)) {
        ++f.pbw_diamond;
        f.pbw_special += classify_pair(nl, a, b).kind == PairKind::DiamondSpecial;
    }
    f.ssyt_total = f.diamond + f.special;
    f.pbw_total = f.pbw_diamond + f.pbw_special;
    return f;
}

FacetCount facet_count_formula(int n)
{
    FacetCount f;
    if (n < 3) return f;
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    f.ssyt_total = ((un * un + un - 4) << un) >> 5;
    f.diamond = ((un * un - un - 2) << un) >> 5;
    f.special = f.ssyt_total - f.diamond;
    f.pbw_total = f.ssyt_total;
    f.pbw_diamond = f.diamond;
    f.pbw_special = f.special;
    return f;
}

Polynomial initial_form(const Polynomial& p, const PluckerLattice& lat, const WeightVector& w)
{
    if (w.size() != lat.size()) throw InvalidArgument("weight vector does not match the lattice");
    std::optional<Rational> best;
    std::vector<std::pair<const Monomial*, Rational>> values;
    for (const auto& [m, c] : p.terms()) {
        Rational v = 0;
        for (const auto& f : m) v += w[lat.of_mask(mask_of(f))];
        if (!best || v < *best) best = v;
        values.emplace_back(&m, v);
    }
    Polynomial out;
    for (const auto& [m, v] : values)
        if (v == *best) out.add(*m, p.coeff(*m));
    return out;
}

XiPoint::XiPoint(int n_) : n(n_), z(static_cast<std::size_t>((n_ + 1) * (n_ + 1))), c(static_cast<std::size_t>(n_ + 1))
{
}

namespace {

void check_xi(const XiPoint& xi, int n)
{
    if (xi.n != n) throw InvalidArgument("point of Xi has the wrong size");
}

}  // namespace

WeightVector sigma_map(const PluckerLattice& m, const XiPoint& xi)
{
    check_xi(xi, m.n);
    WeightVector w(m.size());
    for (Elem e = 0; e < m.size(); ++e) {
        const auto& col = m.kind == LatticeKind::M ? m.labels[e] : m.m_labels[e];
        Rational v = xi.cat(static_cast<int>(col.size()));
        for (std::size_t r = 0; r < col.size(); ++r) v += xi.zat(static_cast<int>(r + 1), col[r]);
        w[e] = v;
    }
    return w;
}

WeightVector rho_map(const PluckerLattice& nl, const XiPoint& xi)
{
    check_xi(xi, nl.n);
    if (nl.kind != LatticeKind::N) throw InvalidArgument("rho_map is indexed by PBW columns");
    WeightVector w(nl.size());
    for (Elem e = 0; e < nl.size(); ++e) {
        const auto& col = nl.labels[e];
        Rational v = xi.cat(static_cast<int>(col.size()));
        for (std::size_t r = 0; r < col.size(); ++r) v -= xi.zat(static_cast<int>(r + 1), col[r]);
        w[e] = v;
    }
    return w;
}

bool in_K(const XiPoint& xi)
{
    const int n = xi.n;
    for (int s = 1; s <= n; ++s)
        if (xi.zat(s, s) != 0) return false;
    for (int s = 1; s <= n - 1; ++s)
        for (int t = s + 1; t <= n - 1; ++t)
            if (!(xi.zat(s, t) + xi.zat(s + 1, t + 1) < xi.zat(s, t + 1) + xi.zat(s + 1, t))) return false;
    return true;
}

XiPoint random_k_point(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> base(-5, 5), gap(1, 6);
    XiPoint xi(n);
    for (int s = 1; s < n; ++s) xi.zat(s, s + 1) = base(rng);
    for (int d = 2; d < n; ++d)
        for (int s = 1; s + d <= n; ++s) {
            int t = s + d;
            xi.zat(s, t) = gap(rng) + xi.zat(s, t - 1) + xi.zat(s + 1, t) - xi.zat(s + 1, t - 1);
        }
    for (int k = 1; k < n; ++k) xi.cat(k) = base(rng);
    return xi;
}

ZForm k_facet_form(int s, int t)
{
    ZForm f;
    auto add = [&](int x, int y, int c) {
        if (x == y) return;
        f[{x, y}] += c;
        if (f[{x, y}] == 0) f.erase({x, y});
    };
    add(s, t, 1);
    add(s + 1, t + 1, 1);
    add(s, t + 1, -1);
    add(s + 1, t, -1);
    return f;
}

namespace {

ZForm scaled(const ZForm& f, int c)
{
    ZForm out;
    for (const auto& [k, v] : f) out[k] = v * c;
    return out;
}

// Checks the closed-form pullback of a special facet.
void check_special_formula(const ConeHRep& h, std::size_t i, const PluckerSetting& s, const ZForm& q)
{
    const auto& p = h.provenance[i];
    ZForm expect;
    auto add = [&](int x, int y, int c) {
        if (x == y) return;
        expect[{x, y}] += c;
        if (expect[{x, y}] == 0) expect.erase({x, y});
    };
    const int n = s.n;
    if (h.target == ConeTarget::Ssyt) {
        auto info = classify_m_columns(s.m.labels[p.a], s.m.labels[p.b], n);
        check(info.special, "special facet without a special pair");
        if (info.possibility == 1) {
            std::size_t r = 0;
            while (info.a[r] == info.b[r]) ++r;
            const int st = static_cast<int>(r + 1), is = info.a[r];
            add(st, is + 1, 1);
            add(st, is + 2, -1);
            add(st + 1, is + 2, 1);
            add(st + 1, is + 1, -1);
        } else {
            const int k = static_cast<int>(info.a.size());
            add(k - 1, n - 1, 1);
            add(k - 1, n, -1);
            add(k, n, 1);
            add(k, n - 1, -1);
        }
    } else {
        Elem meet = s.nl.lattice.meet(p.a, p.b);
        auto da = (s.nl.iota[p.a] - s.nl.iota[meet]).members();
        auto db = (s.nl.iota[p.b] - s.nl.iota[meet]).members();
        check(da.size() == 1 && db.size() == 1, "diamond pair ideals must differ by one element");
        Coord x = s.nl.ji_coords[da[0]], y = s.nl.ji_coords[db[0]];
        auto [st, t] = x.first > y.first ? x : y;
        add(st - 1, t + 1, -1);
        add(st, t, -1);
        add(st - 1, t, 1);
        add(st, t + 1, 1);
    }
    check(q == expect || q == scaled(expect, -1), "pulled-back form differs from the explicit formula");
}

}  // namespace

SubconeClass classify_facet_vs_subcone(const ConeHRep& h, std::size_t i, const PluckerSetting& s)
{
    if (h.target != ConeTarget::Ssyt && h.target != ConeTarget::Pbw)
        throw InvalidArgument("classification applies to the SSYT and PBW cones");
    if (i >= h.inequalities.size()) throw InvalidArgument("unknown facet " + std::to_string(i));
    const bool pbw = h.target == ConeTarget::Pbw;
    const auto& lat = pbw ? s.nl : s.m;
    SubconeClass out;
    std::map<int, Rational> cpart;
    for (const auto& [e, coef] : h.inequalities[i].form) {
        const auto& col = lat.labels[e];
        cpart[static_cast<int>(col.size())] += coef;
        for (std::size_t r = 0; r < col.size(); ++r) {
            int row = static_cast<int>(r + 1), column = col[r];
            if (row == column) continue;
            out.q[{row, column}] += pbw ? -coef : coef;
        }
    }
    for (auto it = out.q.begin(); it != out.q.end();) it = it->second == 0 ? out.q.erase(it) : std::next(it);
    for (const auto& [k, v] : cpart) check(v == 0, "facet form does not cancel the c-coordinates");

    if (out.q.empty()) {
        out.contains_subcone = true;
        return out;
    }
    int matches = 0;
    for (int st = 1; st <= s.n - 1; ++st)
        for (int t = st + 1; t <= s.n - 1; ++t) {
            ZForm f = k_facet_form(st, t);
            int sign = 0;
            if (out.q == f) sign = 1;
            else if (out.q == scaled(f, -1)) sign = -1;
            if (!sign) continue;
            ++matches;
            out.facet = {st, t};
            out.sign = sign;
        }
    check(matches == 1, "facet meets the subcone neither in a facet nor contains it");
    if (h.provenance[i].kind == "special") check_special_formula(h, i, s, out.q);
    return out;
}

ConeSample sample_cone(const ConeHRep& h, const WeightVector& base, std::size_t count, std::uint64_t seed, int spread)
{
    check(contains(h, base), "sample_cone: the base point is not in the cone");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> noise(-spread, spread), denom(1, 7);
    ConeSample out;
    const std::size_t limit = 1000 * count + 1000;
    while (out.points.size() < count) {
        check(out.points.size() + out.rejected < limit, "sample_cone: acceptance rate too low");
        WeightVector w(base.size());
        const int d = denom(rng);
        for (std::size_t a = 0; a < base.size(); ++a) w[a] = (8 * base[a] + noise(rng)) / d;
        if (contains(h, w)) out.points.push_back(std::move(w));
        else ++out.rejected;
    }
    return out;
}

}  // namespace pf
