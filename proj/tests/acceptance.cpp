#include "plueckerfan/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace pf;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome from_reports(const std::vector<SuiteReport>& rs)
{
    Outcome o;
    std::uint64_t checks = 0, failures = 0;
    for (const auto& r : rs) {
        checks += r.checks;
        failures += r.failures.size();
        for (const auto& f : r.failures)
            if (o.detail.size() < 2000) o.detail += "\n    " + r.suite + ": " + f.check + " " + f.reproducer.dump();
        for (const auto& s : r.skipped) o.detail += "\n    skipped: " + s;
    }
    o.ok = failures == 0 && checks > 0;
    o.detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures" + o.detail;
    return o;
}

Polynomial relation(std::initializer_list<std::pair<int, std::vector<Entries>>> terms)
{
    Polynomial p;
    for (const auto& [c, fs] : terms) p.add_tuples(fs, c);
    return p;
}

Outcome counts()
{
    std::vector<SuiteReport> rs;
    for (int n = 3; n <= 9; ++n) rs.push_back(counts_suite(n));
    return from_reports(rs);
}

Outcome ground_truth()
{
    SuiteReport r;
    r.suite = "ground truth";
    auto m4 = build_M(4);
    auto s1 = straighten_pair(m4, m4.element("1,4"), m4.element("2,3"));
    auto ex1 = relation({{1, {make_entries({1, 4}), make_entries({2, 3})}},
                         {-1, {make_entries({1, 3}), make_entries({2, 4})}},
                         {1, {make_entries({1, 2}), make_entries({3, 4})}}});
    r.expect(s1.relation == ex1, "Gr(2,4) relation", {}, format_polynomial(ex1), format_polynomial(s1.relation));
    r.expect(s1.terms.size() == 2 && m4.name(s1.terms[0].p) == "1,3" && m4.name(s1.terms[0].q) == "2,4" &&
                 s1.terms[0].coeff == 1 && m4.name(s1.terms[1].p) == "1,2" && m4.name(s1.terms[1].q) == "3,4" &&
                 s1.terms[1].coeff == -1,
             "Gr(2,4) lattice terms", {});

    auto m3 = build_M(3);
    auto s2 = straighten_pair(m3, m3.element("2,3"), m3.element("1"));
    auto ex2 = relation({{1, {make_entries({2, 3}), make_entries({1})}},
                         {-1, {make_entries({1, 3}), make_entries({2})}},
                         {1, {make_entries({1, 2}), make_entries({3})}}});
    r.expect(s2.relation == ex2, "Fl(3) relation", {}, format_polynomial(ex2), format_polynomial(s2.relation));
    r.expect(s2.terms.size() == 2 && m3.name(s2.terms[0].p) == "1,3" && m3.name(s2.terms[0].q) == "2" &&
                 s2.terms[0].coeff == 1 && m3.name(s2.terms[1].p) == "1,2" && m3.name(s2.terms[1].q) == "3" &&
                 s2.terms[1].coeff == -1,
             "Fl(3) lattice terms", {});
    return from_reports({r});
}

Outcome straightening_laws_all()
{
    std::vector<SuiteReport> rs;
    for (int n = 3; n <= 5; ++n)
        for (auto kind : {LatticeKind::M, LatticeKind::N})
            rs.push_back(straightening_laws(kind, n, kDefaultTrials, 2024, Exec::Parallel));
    auto o = from_reports(rs);
    long worst = -1000000;
    for (const auto& r : rs) worst = std::max(worst, r.notes.value("log2_failure_bound_approx", 0L));
    o.detail += "; largest aggregate failure bound about 2^" + std::to_string(worst);
    return o;
}

Outcome oracle_equivalence()
{
    SuiteReport r;
    r.suite = "oracle";
    for (int n = 3; n <= 4; ++n)
        for (auto kind : {LatticeKind::M, LatticeKind::N}) {
            auto lat = kind == LatticeKind::M ? build_M(n) : build_N(n);
            auto rels = straighten_all(lat, Exec::Parallel);
            for (const auto& st : rels) {
                auto ex = standard_expansion(lat, st.a, st.b, 7);
                std::map<std::pair<Elem, Elem>, Rational> x, y;
                for (const auto& t : st.terms) x[{t.p, t.q}] = t.coeff;
                for (const auto& t : ex.terms) y[{t.p, t.q}] = t.coeff;
                r.expect(ex.reconstructed && x == y, "straightening equals the linear-algebra expansion",
                         {{"kind", kind_name(kind)}, {"n", n}, {"pair", {lat.name(st.a), lat.name(st.b)}}});
            }
        }
    return from_reports({r});
}

Outcome tau_all()
{
    std::vector<SuiteReport> rs;
    for (int n = 2; n <= 7; ++n) rs.push_back(tau_suite(n));
    return from_reports(rs);
}

Outcome ehrhart_all()
{
    std::vector<SuiteReport> rs;
    auto corpus = poset_corpus({3, 4}, 50, 77);
    for (const auto& [id, p] : corpus) {
        rs.push_back(ehrhart_suite(p, id, 5));
        rs.push_back(minkowski_suite(p, id, 5));
    }
    auto o = from_reports(rs);
    o.detail += "; " + std::to_string(corpus.size()) + " posets";
    return o;
}

const std::vector<ConeTarget> kMinimal{ConeTarget::Hibi, ConeTarget::GenHibi, ConeTarget::Ssyt, ConeTarget::Pbw};

Outcome soundness()
{
    std::vector<SuiteReport> rs;
    for (int n = 3; n <= 5; ++n)
        for (auto t : kMinimal) rs.push_back(cone_soundness(t, n, 1000, 31 + n, Exec::Parallel));
    return from_reports(rs);
}

Outcome witnesses()
{
    std::vector<SuiteReport> rs;
    for (int n = 3; n <= 5; ++n)
        for (auto t : kMinimal) rs.push_back(cone_witnesses(t, n, Exec::Parallel));
    return from_reports(rs);
}

Outcome convex()
{
    std::vector<SuiteReport> rs;
    for (int n = 4; n <= 6; ++n) rs.push_back(convex_suite(n, 9));
    return from_reports(rs);
}

Outcome asl()
{
    return from_reports({asl_suite(3), asl_suite(4)});
}

Outcome theta()
{
    std::vector<SuiteReport> rs;
    for (int n = 3; n <= 5; ++n) rs.push_back(theta_kernel(n, 13));
    return from_reports(rs);
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;  // 0: no time bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "facet counts n=3..9", 10, counts},
        {2, "straightening ground truth (Gr(2,4) and Fl(3) relations)", 0, ground_truth},
        {3, "straightening laws and membership n=3..5", 300, straightening_laws_all},
        {4, "oracle equivalence n=3,4", 0, oracle_equivalence},
        {5, "tau isomorphism n<=7", 10, tau_all},
        {6, "Ehrhart transfer and Minkowski decomposition", 120, ehrhart_all},
        {7, "cone soundness, 1000 points per cone and n=3..5", 0, soundness},
        {8, "irredundancy witnesses n=3..5", 0, witnesses},
        {9, "facets against the subcone n=4..6", 30, convex},
        {10, "standard monomial bases, total degree <= 3", 0, asl},
        {11, "generalized Hibi kernel and theta/psi", 0, theta},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.ok = false;
            o.detail += "; time limit exceeded";
        }
        failed += !o.ok;
        char time[32];
        std::snprintf(time, sizeof time, "%.2fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << o.detail << ", "
                  << time << ")" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
