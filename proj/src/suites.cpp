#include "plueckerfan/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace pf {

void SuiteReport::expect(bool ok, const std::string& check, Json reproducer, const std::string& expected,
                         const std::string& actual)
{
    ++checks;
    if (!ok) failures.push_back({check, std::move(reproducer), expected, actual});
}

void SuiteReport::merge(const SuiteReport& o)
{
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    skipped.insert(skipped.end(), o.skipped.begin(), o.skipped.end());
    for (const auto& [k, v] : o.notes.items()) notes[o.suite.empty() ? k : o.suite + "." + k] = v;
    wall_seconds += o.wall_seconds;
}

Json report_json(const SuiteReport& r, bool timing)
{
    Json j;
    j["suite"] = r.suite;
    if (!r.poset.empty()) j["poset"] = r.poset;
    else j["n"] = r.n;
    j["seed"] = r.seed;
    j["checks"] = r.checks;
    Json fs = Json::array();
    for (const auto& f : r.failures)
        fs.push_back({{"check", f.check}, {"reproducer", f.reproducer}, {"expected", f.expected}, {"actual", f.actual}});
    j["failures"] = fs;
    j["skipped"] = r.skipped;
    j["notes"] = r.notes;
    if (timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

std::string report_text(const SuiteReport& r)
{
    std::ostringstream out;
    out << r.suite << " " << (r.poset.empty() ? "n=" + std::to_string(r.n) : "poset=" + r.poset) << " seed=" << r.seed
        << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
    for (const auto& f : r.failures)
        out << "  FAIL " << f.check << " " << f.reproducer.dump() << " expected " << f.expected << " got " << f.actual
            << "\n";
    for (const auto& s : r.skipped) out << "  skipped: " << s << "\n";
    if (!r.notes.empty()) out << "  notes: " << r.notes.dump() << "\n";
    return out.str();
}

namespace {

Json pair_json(const PluckerLattice& lat, Elem a, Elem b)
{
    return {{"kind", kind_name(lat.kind)}, {"n", lat.n}, {"pair", {lat.name(a), lat.name(b)}}};
}

std::string term_text(const PluckerLattice& lat, const LatticeTerm& t)
{
    return to_string(t.coeff) + "*X[" + lat.name(t.p) + "]X[" + lat.name(t.q) + "]";
}

template <class F>
SuiteReport timed(const std::string& name, int n, std::uint64_t seed, F&& body)
{
    auto start = std::chrono::steady_clock::now();
    SuiteReport r;
    r.suite = name;
    r.n = n;
    r.seed = seed;
    body(r);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void check_n(int n, int lo, int hi, const std::string& what)
{
    if (n < lo) throw InvalidArgument(what + " needs n >= " + std::to_string(lo));
    if (n > hi) throw CapacityError(what + " is limited to n <= " + std::to_string(hi));
}

// The block permutation moving a pair with column lengths k > l into the
// range of the direct argument, as a map on indices 0..n.
std::vector<int> block_permutation(int n, int k, int l)
{
    std::vector<int> perm(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        if (j <= l) perm[j] = j;
        else if (j <= n - k + l) perm[j] = j + k - l;
        else perm[j] = j - n + k;
    }
    return perm;
}

void rho_equivariance(SuiteReport& r, const PluckerLattice& nl, const std::vector<Straightening>& rels)
{
    std::uint64_t applicable = 0;
    for (const auto& st : rels) {
        Elem a = st.a, b = st.b;
        if (nl.labels[a].size() < nl.labels[b].size()) std::swap(a, b);
        const int k = static_cast<int>(nl.labels[a].size()), l = static_cast<int>(nl.labels[b].size());
        if (k == l) continue;
        bool small = true;
        for (Elem e : {a, b})
            for (auto x : nl.labels[e]) small = small && x <= nl.n - k + l;
        if (!small) continue;
        ++applicable;
        auto perm = block_permutation(nl.n, k, l);
        auto image = [&](Elem e) {
            Entries out;
            for (auto x : nl.labels[e]) out.push_back(static_cast<std::uint8_t>(perm[x]));
            return nl.element(out);
        };
        Elem ra = image(a), rb = image(b);
        Json rep = pair_json(nl, a, b);
        bool incomparable = !nl.lattice.comparable(ra, rb);
        r.expect(incomparable, "rho keeps the pair incomparable", rep);
        if (!incomparable) continue;
        auto moved = apply_index_permutation(st.relation, perm, nl.n);
        auto direct = straighten_pair(nl, ra, rb);
        r.expect(moved == direct.relation || moved == direct.relation.scaled(-1), "rho(e(a,b)) = +-e(rho a, rho b)",
                 rep, format_polynomial(direct.relation), format_polynomial(moved));
        r.expect(direct.m() == st.m(), "m(rho a, rho b) = m(a, b)", rep, std::to_string(st.m()),
                 std::to_string(direct.m()));
    }
    r.notes["rho_pairs"] = applicable;
}

}  // namespace

SuiteReport straightening_laws(LatticeKind kind, int n, int trials, std::uint64_t seed, Exec exec)
{
    const std::string name = kind == LatticeKind::M ? "strlaws" : "pbwstrlaws";
    check_n(n, 2, 8, name);
    return timed(name, n, seed, [&](SuiteReport& r) {
        auto lat = kind == LatticeKind::M ? build_M(n) : build_N(n);
        auto bd = birkhoff_data(lat);
        auto rels = straighten_all(lat, exec);
        r.expect(rels.size() == incomparable_pairs(lat).size(), "one relation per incomparable pair", {{"n", n}});
        std::map<int, std::uint64_t> m_hist;
        for (const auto& st : rels) {
            const Elem meet = lat.lattice.meet(st.a, st.b), join = lat.lattice.join(st.a, st.b);
            const Elem lower = kind == LatticeKind::M ? meet : odot_element(bd, lat.partition, st.a, st.b);
            Json rep = pair_json(lat, st.a, st.b);
            bool has_lead = !st.terms.empty();
            r.expect(has_lead, "leading term present", rep);
            if (!has_lead) continue;
            const auto& t0 = st.terms[0];
            r.expect(t0.p == lower && t0.q == join && t0.coeff == 1, "(b) leading standard term", rep,
                     "1*X[" + lat.name(lower) + "]X[" + lat.name(join) + "]", term_text(lat, t0));
            for (std::size_t i = 1; i < st.terms.size(); ++i) {
                const auto& t = st.terms[i];
                bool low = kind == LatticeKind::M ? lat.lattice.poset().less(t.p, meet) : lat.lattice.leq(t.p, meet);
                bool high = lat.lattice.poset().less(join, t.q);
                r.expect(low && high, "(c) later terms outside the interval", rep,
                         kind == LatticeKind::M ? "p < meet, q > join" : "g <= meet, h > join", term_text(lat, t));
            }
            for (const auto& t : st.terms)
                r.expect(lat.lattice.leq(t.p, t.q), "terms are standard monomials", rep, "p <= q", term_text(lat, t));
            if (kind == LatticeKind::N && is_diamond(lat.lattice, st.a, st.b) &&
                classify_pair(lat, st.a, st.b).kind == PairKind::DiamondPlain)
                ++m_hist[st.m()];
        }

        std::vector<Polynomial> ps;
        for (const auto& st : rels) ps.push_back(st.relation);
        auto verdicts = membership_all(ps, n, trials, seed, exec);
        Rational bound = 0;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            r.expect(verdicts[i].member, "relation lies in the Plucker ideal", pair_json(lat, rels[i].a, rels[i].b));
            bound += verdicts[i].failure_bound;
        }
        long exp2 = 0;
        if (bound > 0)
            exp2 = static_cast<long>(mpz_sizeinbase(bound.get_num_mpz_t(), 2)) -
                   static_cast<long>(mpz_sizeinbase(bound.get_den_mpz_t(), 2));
        const Rational limit(1, mpz_class(1) << 1000);
        r.expect(rels.empty() || bound < limit, "aggregate failure bound below 2^-1000", {{"n", n}}, "< 2^-1000",
                 "about 2^" + std::to_string(exp2));
        r.notes["pairs"] = rels.size();
        r.notes["trials"] = trials;
        r.notes["log2_failure_bound_approx"] = exp2;
        if (kind == LatticeKind::N) {
            Json h = Json::object();
            for (auto [m, c] : m_hist) h[std::to_string(m)] = c;
            r.notes["m_of_plain_diamond_pairs"] = h;
            rho_equivariance(r, lat, rels);
        }
    });
}

SuiteReport tau_suite(int n)
{
    check_n(n, 2, 10, "tau");
    return timed("tau", n, 0, [&](SuiteReport& r) {
        auto m = build_M(n);
        auto nl = build_N(n);
        auto rep = verify_tau(m, nl);
        r.checks += rep.pairs_checked;
        for (const auto& f : rep.failures) r.failures.push_back({"tau is an order isomorphism", {{"n", n}}, "", f});
        r.notes["pairs_checked"] = rep.pairs_checked;
    });
}

namespace {

void guard_poset(const Poset& p)
{
    if (p.size() > kMaxEhrhartPoset)
        throw CapacityError("poset has " + std::to_string(p.size()) + " elements; the lattice-point checks allow at most " +
                            std::to_string(kMaxEhrhartPoset));
}

std::vector<ChainOrderPartition> suite_partitions(const Poset& p, std::uint64_t seed)
{
    std::vector<ChainOrderPartition> out;
    const std::size_t m = p.size();
    if (m <= 5) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            ElementSet s(m);
            for (Elem e = 0; e < m; ++e)
                if (mask >> e & 1) s.insert(e);
            out.push_back(make_partition(p, s));
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    out.push_back(make_partition(p, p.full_set()));
    out.push_back(make_partition(p, p.empty_set()));
    while (out.size() < 20) {
        ElementSet s(m);
        for (Elem e = 0; e < m; ++e)
            if (coin(rng)) s.insert(e);
        out.push_back(make_partition(p, s));
    }
    return out;
}

Json partition_rep(const Poset& p, const std::string& id, const ChainOrderPartition& part, int t)
{
    return {{"poset", id}, {"partition", partition_json(p, part)}, {"t", t}};
}

}  // namespace

SuiteReport ehrhart_suite(const Poset& p, const std::string& id, std::uint64_t seed)
{
    guard_poset(p);
    auto r = timed("ehrhart", 0, seed, [&](SuiteReport& r) {
        auto order = make_partition(p, p.full_set());
        auto order_h = interpolating_hrep(p, order);
        auto parts = suite_partitions(p, seed);
        r.notes["partitions"] = parts.size();
        for (int t = 0; t <= 3; ++t) {
            auto order_pts = enumerate_lattice_points(order_h, t);
            for (const auto& part : parts) {
                auto h = interpolating_hrep(p, part);
                auto pts = enumerate_lattice_points(h, t);
                Json rep = partition_rep(p, id, part, t);
                r.expect(pts.size() == order_pts.size(), "point count independent of the partition", rep,
                         std::to_string(order_pts.size()), std::to_string(pts.size()));
                for (const auto& x : order_pts) {
                    auto y = zeta(p, part, x);
                    bool ok = satisfies(h, y, t) && zeta_prime(p, part, y) == x;
                    r.expect(ok, "zeta' inverts zeta on the order polytope", Json{rep, {"point", int_point_json(p, x)}});
                }
                for (const auto& y : pts) {
                    auto x = zeta_prime(p, part, y);
                    bool ok = satisfies(order_h, x, t) && zeta(p, part, x) == y;
                    r.expect(ok, "zeta inverts zeta' on the interpolating polytope",
                             Json{rep, {"point", int_point_json(p, y)}});
                }
            }
        }
    });
    r.poset = id;
    return r;
}

SuiteReport minkowski_suite(const Poset& p, const std::string& id, std::uint64_t seed)
{
    guard_poset(p);
    auto r = timed("minkowski", 0, seed, [&](SuiteReport& r) {
        for (const auto& part : suite_partitions(p, seed)) {
            auto h = interpolating_hrep(p, part);
            for (int t = 1; t <= 3; ++t) {
                Json rep = partition_rep(p, id, part, t);
                auto pts = enumerate_lattice_points(h, t);
                auto sums = dilation_points(p, part, t);
                std::sort(pts.begin(), pts.end());
                r.expect(sums == pts, "t-fold sums of K-set indicators are the lattice points", rep,
                         std::to_string(pts.size()), std::to_string(sums.size()));
                for (const auto& x : pts) {
                    auto summands = minkowski_decompose(p, part, h, x, t);
                    IntPoint total(p.size(), 0);
                    bool ok = summands.size() == static_cast<std::size_t>(t);
                    for (const auto& s : summands) {
                        ok = ok && satisfies(h, s, 1);
                        for (Elem e = 0; e < p.size(); ++e) {
                            ok = ok && (s[e] == 0 || s[e] == 1);
                            total[e] += s[e];
                        }
                    }
                    r.expect(ok && total == x, "Minkowski decomposition into vertices",
                             Json{rep, {"point", int_point_json(p, x)}});
                }
            }
        }
    });
    r.poset = id;
    return r;
}

namespace {

WeightVector base_point(ConeTarget t, const PluckerSetting& s)
{
    return on_n(t) ? exponential_witness(s.nl.lattice) : interior_witness(s.m.lattice);
}

ConeTarget redundant_of(ConeTarget t)
{
    switch (t) {
    case ConeTarget::Hibi: return ConeTarget::HibiRedundant;
    case ConeTarget::GenHibi: return ConeTarget::GenHibiRedundant;
    case ConeTarget::Ssyt: return ConeTarget::SsytRedundant;
    case ConeTarget::Pbw: return ConeTarget::PbwRedundant;
    default: throw InvalidArgument("not a minimal target: " + target_name(t));
    }
}

const char* suite_of(ConeTarget t)
{
    switch (t) {
    case ConeTarget::Hibi: return "hibi-cone";
    case ConeTarget::GenHibi: return "genhibi-cone";
    case ConeTarget::Ssyt: return "ssyt-cone";
    case ConeTarget::Pbw: return "pbw-cone";
    default: return "cone";
    }
}

// Lattice monomials of least weight.
LatticeMonomial lattice_initial(const LatticePolynomial& p, const WeightVector& w, bool& unique)
{
    std::optional<Rational> best;
    LatticeMonomial arg;
    unique = false;
    for (const auto& [m, c] : p) {
        Rational v = 0;
        for (Elem e : m) v += w[e];
        if (!best || v < *best) {
            best = v;
            arg = m;
            unique = true;
        } else if (v == *best) {
            unique = false;
        }
    }
    return arg;
}

}  // namespace

SuiteReport cone_witnesses(ConeTarget target, int n, Exec exec)
{
    check_n(n, 3, 8, suite_of(target));
    return timed(suite_of(target), n, 0, [&](SuiteReport& r) {
        PluckerSetting s(n, false);
        auto h = cone_hrep(target, s);
        const auto& lat = s.lattice(target);
        auto ok = certify_all(h, s, exec);
        for (std::size_t i = 0; i < ok.size(); ++i)
            r.expect(ok[i], "facet witness violates only its own inequality",
                     {{"target", target_name(target)}, {"facet", i}, {"pair", {lat.name(h.provenance[i].a),
                                                                               lat.name(h.provenance[i].b)}},
                      {"kind", h.provenance[i].kind}});
        r.expect(contains(h, base_point(target, s)), "interior point lies in the cone", {{"target", target_name(target)}});
        r.expect(!contains(h, WeightVector(lat.size())), "zero vector is not in the open cone",
                 {{"target", target_name(target)}});
        r.notes["facets"] = h.inequalities.size();
    });
}

SuiteReport cone_soundness(ConeTarget target, int n, std::size_t samples, std::uint64_t seed, Exec exec)
{
    check_n(n, 3, 7, suite_of(target));
    return timed(suite_of(target), n, seed, [&](SuiteReport& r) {
        const bool plucker = target == ConeTarget::Ssyt || target == ConeTarget::Pbw;
        PluckerSetting s(n, plucker);
        const auto& lat = s.lattice(target);
        auto h = cone_hrep(target, s);
        auto red = cone_hrep(redundant_of(target), s);
        auto sample = sample_cone(h, base_point(target, s), samples, seed, 4);
        r.notes["samples"] = sample.points.size();
        r.notes["rejected"] = sample.rejected;
        std::vector<const ConeHRep*> hs{&red};
        auto inside = contained_all(sample.points, hs, exec);
        for (std::size_t i = 0; i < inside.size(); ++i)
            r.expect(inside[i], "sampled point satisfies the redundant description",
                     {{"target", target_name(target)}, {"point", weights_json(lat, sample.points[i])}});

        if (plucker) {
            const auto& rels = s.relations(lat.kind);
            auto init = initial_forms_all(sample.points, lat, rels, exec);
            for (std::size_t i = 0; i < init.size(); ++i)
                r.expect(init[i], "initial form of every straightening relation is X_a X_b",
                         {{"target", target_name(target)}, {"point", weights_json(lat, sample.points[i])}});
            return;
        }
        auto bd = birkhoff_data(lat);
        for (std::size_t i = 0; i < sample.points.size(); ++i) {
            bool all = true;
            for (auto [a, b] : incomparable_pairs(lat)) {
                auto d = target == ConeTarget::Hibi ? hibi_generator(lat.lattice, a, b)
                                                    : hibi_generator(lat.lattice, a, b, &bd, &lat.partition);
                bool unique = false;
                auto in = lattice_initial(d, sample.points[i], unique);
                all = all && unique && in == LatticeMonomial{a, b};
            }
            r.expect(all, "initial form of every Hibi generator is X_a X_b",
                     {{"target", target_name(target)}, {"point", weights_json(lat, sample.points[i])}});
        }
    });
}

SuiteReport theta_kernel(int n, std::uint64_t seed)
{
    check_n(n, 2, 7, "theta kernel");
    return timed("genhibi-cone", n, seed, [&](SuiteReport& r) {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(0.5);
        for (auto kind : {LatticeKind::M, LatticeKind::N}) {
            auto lat = kind == LatticeKind::M ? build_M(n) : build_N(n);
            auto bd = birkhoff_data(lat);
            std::vector<ChainOrderPartition> parts{lat.partition, make_partition(bd.ji, bd.ji.full_set()),
                                                   make_partition(bd.ji, bd.ji.empty_set())};
            for (int k = 0; k < 5; ++k) {
                ElementSet u(bd.ji.size());
                for (Elem e = 0; e < bd.ji.size(); ++e)
                    if (coin(rng)) u.insert(e);
                parts.push_back(make_partition(bd.ji, u));
            }
            for (const auto& part : parts)
                for (auto [a, b] : incomparable_pairs(lat)) {
                    Elem o = odot_element(bd, part, a, b);
                    LatticeMonomial lhs{std::min(a, b), std::max(a, b)};
                    LatticeMonomial rhs{std::min(o, lat.lattice.join(a, b)), std::max(o, lat.lattice.join(a, b))};
                    r.expect(theta_exponent(bd, part, lhs) == theta_exponent(bd, part, rhs),
                             "theta exponents agree on both monomials of d(a,b)",
                             Json{pair_json(lat, a, b), {"partition", partition_json(bd.ji, part)}});
                }
        }
        auto nl = build_N(n);
        for (Elem b = 0; b < nl.size(); ++b)
            r.expect(theta_substituted(nl, {b}) == psi_exponent(nl.labels[b], n), "psi equals substituted theta",
                     {{"n", n}, {"element", nl.name(b)}});
        auto nbd = birkhoff_data(nl);
        for (auto [a, b] : incomparable_pairs(nl)) {
            Elem o = odot_element(nbd, nl.partition, a, b), j = nl.lattice.join(a, b);
            auto lhs = theta_substituted(nl, {std::min(a, b), std::max(a, b)});
            auto rhs = theta_substituted(nl, {std::min(o, j), std::max(o, j)});
            r.expect(lhs == rhs, "psi agrees on both monomials of d(a,b)", pair_json(nl, a, b));
        }
    });
}

SuiteReport convex_suite(int n, std::uint64_t seed)
{
    check_n(n, 3, 8, "convex");
    return timed("convex", n, seed, [&](SuiteReport& r) {
        PluckerSetting s(n, true);
        for (auto t : {ConeTarget::Ssyt, ConeTarget::Pbw}) {
            auto h = cone_hrep(t, s);
            const auto& lat = s.lattice(t);
            for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
                const auto& p = h.provenance[i];
                Json rep{{"target", target_name(t)}, {"facet", i}, {"pair", {lat.name(p.a), lat.name(p.b)}}, {"kind", p.kind}};
                try {
                    auto c = classify_facet_vs_subcone(h, i, s);
                    bool expected = p.kind == "diamond" ? c.contains_subcone : !c.contains_subcone && c.sign != 0;
                    r.expect(expected, "diamond facets contain the subcone, special facets meet it in a facet", rep,
                             p.kind == "diamond" ? "contains" : "meets in a facet",
                             c.contains_subcone ? "contains" : "meets in a facet");
                } catch (const InternalError& e) {
                    r.expect(false, "classification of the facet", rep, "", e.what());
                }
            }
        }
        auto gt = cone_hrep(ConeTarget::ToricGt, s);
        auto fflv = cone_hrep(ConeTarget::ToricFflv, s);
        auto ssyt = cone_hrep(ConeTarget::Ssyt, s);
        auto pbw = cone_hrep(ConeTarget::Pbw, s);
        auto closed = [](const ConeHRep& h, const WeightVector& w) {
            for (const auto& q : h.inequalities)
                if (evaluate(q, w) > 0) return false;
            return true;
        };
        for (std::uint64_t k = 0; k < 20; ++k) {
            auto xi = random_k_point(n, item_seed(seed, k));
            Json rep = xi_json(xi);
            r.expect(in_K(xi), "random point lies in K", rep);
            auto w = sigma_map(s.m, xi);
            r.expect(contains(gt, w), "sigma(K) lies in the toric GT cone", rep);
            r.expect(closed(ssyt, w), "sigma(K) lies in the closed SSYT cone", rep);
            auto v = rho_map(s.nl, xi);
            r.expect(contains(fflv, v), "rho(K) lies in the toric FFLV cone", rep);
            r.expect(closed(pbw, v), "rho(K) lies in the closed PBW cone", rep);
        }
    });
}

SuiteReport counts_suite(int n)
{
    check_n(n, 3, 10, "counts");
    return timed("counts", n, 0, [&](SuiteReport& r) {
        auto f = facet_count(n), g = facet_count_formula(n);
        Json rep{{"n", n}};
        auto cmp = [&](std::uint64_t actual, std::uint64_t expected, const std::string& what) {
            r.expect(actual == expected, what, rep, std::to_string(expected), std::to_string(actual));
        };
        cmp(f.ssyt_total, g.ssyt_total, "SSYT facets");
        cmp(f.diamond, g.diamond, "SSYT diamond facets");
        cmp(f.special, g.special, "SSYT special facets");
        cmp(f.pbw_total, f.ssyt_total, "PBW facets equal SSYT facets");
        cmp(f.pbw_diamond, g.diamond, "PBW diamond facets");
        cmp(f.pbw_special, g.special, "PBW special facets");
        r.notes["ssyt"] = {f.ssyt_total, f.diamond, f.special};
        r.notes["pbw"] = {f.pbw_total, f.pbw_diamond, f.pbw_special};
    });
}

SuiteReport asl_suite(int n)
{
    check_n(n, 2, 4, "asl");
    return timed("asl", n, 0, [&](SuiteReport& r) {
        for (auto kind : {LatticeKind::M, LatticeKind::N}) {
            auto lat = kind == LatticeKind::M ? build_M(n) : build_N(n);
            for (const auto& lambda : multidegrees(n, 3)) {
                auto rep = standard_basis_check(lat, lambda);
                r.expect(rep.ok(), "standard monomials form a basis", {{"kind", kind_name(kind)}, {"n", n}, {"lambda", lambda}},
                         std::to_string(rep.standard), std::to_string(rep.rank_all) + "/" + std::to_string(rep.rank_standard));
            }
        }
    });
}

Poset random_poset(int m, double prob, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(prob);
    std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) rel[i][j] = coin(rng);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = 1;
    std::vector<std::string> ids;
    for (int i = 0; i < m; ++i) ids.push_back("p" + std::to_string(i));
    return Poset::from_relation(ids, [&](Elem a, Elem b) { return a == b || rel[a][b]; });
}

std::vector<std::pair<std::string, Poset>> poset_corpus(const std::vector<int>& ns, int random_count,
                                                        std::uint64_t seed)
{
    std::vector<std::pair<std::string, Poset>> out;
    for (int n : ns) out.emplace_back("P(M(" + std::to_string(n) + "))", build_M(n).ji_poset);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(3, static_cast<int>(kMaxEhrhartPoset));
    std::uniform_real_distribution<double> prob(0.15, 0.6);
    for (int i = 0; i < random_count; ++i) {
        int m = size(rng);
        double pr = prob(rng);
        out.emplace_back("random-" + std::to_string(i), random_poset(m, pr, rng));
    }
    return out;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"strlaws",  "pbwstrlaws", "tau",     "ehrhart", "minkowski", "hibi-cone",
                                                "genhibi-cone", "ssyt-cone", "pbw-cone", "convex", "counts", "asl"};
    return names;
}

int default_n(const std::string& suite)
{
    // Largest n finishing in under 60 s on one core.
    static const std::map<std::string, int> d{{"strlaws", 8},   {"pbwstrlaws", 8}, {"tau", 10},      {"ehrhart", 4},
                                              {"minkowski", 4}, {"hibi-cone", 7},  {"genhibi-cone", 7},
                                              {"ssyt-cone", 7}, {"pbw-cone", 7},   {"convex", 8},    {"counts", 10},
                                              {"asl", 4}};
    auto it = d.find(suite);
    if (it == d.end()) throw InvalidArgument("unknown suite '" + suite + "'");
    return it->second;
}

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt)
{
    const int n = opt.n ? opt.n : default_n(suite);
    auto cone = [&](ConeTarget t) {
        auto r = cone_witnesses(t, n, opt.exec);
        r.merge(cone_soundness(t, n, opt.samples, opt.seed, opt.exec));
        if (t == ConeTarget::GenHibi) r.merge(theta_kernel(n, opt.seed));
        r.n = n;
        r.seed = opt.seed;
        return r;
    };
    if (suite == "strlaws") return straightening_laws(LatticeKind::M, n, opt.trials, opt.seed, opt.exec);
    if (suite == "pbwstrlaws") return straightening_laws(LatticeKind::N, n, opt.trials, opt.seed, opt.exec);
    if (suite == "tau") return tau_suite(n);
    if (suite == "ehrhart" || suite == "minkowski") {
        std::vector<std::pair<std::string, Poset>> posets;
        if (opt.poset) posets.emplace_back("input", *opt.poset);
        else posets = poset_corpus({n}, opt.random_posets, opt.seed);
        if (opt.poset && opt.random_posets) {
            auto extra = poset_corpus({}, opt.random_posets, opt.seed);
            posets.insert(posets.end(), extra.begin(), extra.end());
        }
        SuiteReport all;
        all.suite = suite;
        all.n = opt.poset ? 0 : n;
        all.seed = opt.seed;
        all.poset = opt.poset ? "input" : "";
        for (const auto& [id, p] : posets) {
            auto r = suite == "ehrhart" ? ehrhart_suite(p, id, opt.seed) : minkowski_suite(p, id, opt.seed);
            r.suite.clear();
            r.notes = Json::object();
            all.merge(r);
        }
        all.notes["posets"] = posets.size();
        return all;
    }
    if (suite == "hibi-cone") return cone(ConeTarget::Hibi);
    if (suite == "genhibi-cone") return cone(ConeTarget::GenHibi);
    if (suite == "ssyt-cone") return cone(ConeTarget::Ssyt);
    if (suite == "pbw-cone") return cone(ConeTarget::Pbw);
    if (suite == "convex") return convex_suite(n, opt.seed);
    if (suite == "counts") return counts_suite(n);
    if (suite == "asl") return asl_suite(n);
    throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace pf
