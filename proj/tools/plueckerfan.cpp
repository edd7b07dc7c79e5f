#include "plueckerfan/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pf;

namespace {

enum Exit { kOk = 0, kFailures = 1, kUsage = 2, kCapacity = 3 };

struct Common {
    int n = 0;
    std::string kind = "M";
    std::string target = "SSYT";
    std::uint64_t seed = 1;
    std::string oracle = "probabilistic";
    int trials = kDefaultTrials;
    std::string format = "json";
    std::string out;
};

void emit(const Common& c, const Json& j, const std::string& text)
{
    std::string body = c.format == "text" ? text : j.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw InvalidArgument("cannot write " + c.out);
    f << body;
}

PluckerLattice lattice_of(const Common& c)
{
    if (c.n < 2) throw InvalidArgument("--n must be at least 2");
    return parse_kind(c.kind) == LatticeKind::M ? build_M(c.n) : build_N(c.n);
}

std::pair<Elem, Elem> parse_pair(const PluckerLattice& lat, const std::vector<std::string>& words)
{
    std::vector<std::string> parts;
    for (const auto& w : words) {
        std::istringstream in(w);
        std::string tok;
        while (in >> tok) parts.push_back(tok);
    }
    if (parts.size() != 2) throw InvalidArgument("expected a pair of elements such as \"1,4 2,3\"");
    return {lat.element(parts[0]), lat.element(parts[1])};
}

int cmd_lattice(const Common& c)
{
    auto lat = lattice_of(c);
    emit(c, lattice_json(lat), lattice_text(lat));
    return kOk;
}

int cmd_pairs(const Common& c)
{
    auto lat = lattice_of(c);
    Json arr = Json::array();
    std::ostringstream text;
    for (auto [a, b] : incomparable_pairs(lat)) {
        auto cl = classify_pair(lat, a, b);
        arr.push_back({{"a", lat.name(a)}, {"b", lat.name(b)}, {"class", pair_kind_name(cl.kind)}});
        text << lat.name(a) << " " << lat.name(b) << " " << pair_kind_name(cl.kind) << "\n";
    }
    emit(c, {{"kind", kind_name(lat.kind)}, {"n", lat.n}, {"pairs", arr}}, text.str());
    return kOk;
}

int cmd_straighten(const Common& c, const std::vector<std::string>& pair, bool check)
{
    auto lat = lattice_of(c);
    auto [a, b] = parse_pair(lat, pair);
    auto st = straighten_pair(lat, a, b);
    Json j = straightening_json(lat, st);
    std::string text = format_polynomial(st.relation) + "\n";
    if (check) {
        auto v = ideal_membership(st.relation, lat.n, parse_mode(c.oracle), c.trials, c.seed);
        j["membership"] = {{"member", v.member}, {"method", v.method}, {"failure_bound", to_string(v.failure_bound)}};
        text += std::string("member: ") + (v.member ? "yes" : "no") + "\n";
        emit(c, j, text);
        return v.member ? kOk : kFailures;
    }
    emit(c, j, text);
    return kOk;
}

int cmd_cone(const Common& c)
{
    auto t = parse_target(c.target);
    if (c.n < 3) throw InvalidArgument("--n must be at least 3 for cones");
    bool rel = t == ConeTarget::SsytRedundant || t == ConeTarget::PbwRedundant || t == ConeTarget::ToricGt ||
               t == ConeTarget::ToricFflv;
    PluckerSetting s(c.n, rel);
    auto h = cone_hrep(t, s);
    const auto& lat = s.lattice(t);
    std::ostringstream text;
    text << target_name(t) << "(" << c.n << "): " << h.inequalities.size() << " inequalities\n";
    for (const auto& q : h.inequalities) {
        for (const auto& [e, coef] : q.form) text << (coef > 0 ? " +" : " ") << to_string(coef) << "*w[" << lat.name(e) << "]";
        text << " " << relation_symbol(q.rel) << " 0\n";
    }
    emit(c, hrep_json(h, lat), text.str());
    return kOk;
}

int cmd_check_point(const Common& c, const std::string& weights)
{
    auto t = parse_target(c.target);
    if (c.n < 3) throw InvalidArgument("--n must be at least 3 for cones");
    bool rel = t == ConeTarget::SsytRedundant || t == ConeTarget::PbwRedundant || t == ConeTarget::ToricGt ||
               t == ConeTarget::ToricFflv;
    PluckerSetting s(c.n, rel);
    const auto& lat = s.lattice(t);
    WeightVector w;
    if (weights == "interior") w = interior_witness(lat.lattice);
    else if (weights == "exponential") w = exponential_witness(lat.lattice);
    else if (weights == "zero") w = WeightVector(lat.size());
    else w = weights_from_json(lat, read_json_file(weights));
    auto h = cone_hrep(t, s);
    Json violated = Json::array();
    for (std::size_t i = 0; i < h.inequalities.size(); ++i)
        if (!satisfied(h.inequalities[i], w)) violated.push_back(i);
    bool member = violated.empty();
    Json j{{"target", target_name(t)}, {"n", c.n}, {"member", member}, {"violated", violated},
           {"weights", weights_json(lat, w)}};
    emit(c, j, std::string(member ? "member" : "non-member") + " (" + std::to_string(violated.size()) +
                   " violated)\n");
    return kOk;
}

ChainOrderPartition partition_of(const Poset& p, const std::string& order, const std::string& chain)
{
    if (!order.empty() && !chain.empty()) throw InvalidArgument("give --order or --chain, not both");
    auto ids = [&](const std::string& s) {
        ElementSet out(p.size());
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) out.insert(p.index_of(tok));
        return out;
    };
    if (!chain.empty()) {
        if (chain == "all") return make_partition(p, p.empty_set());
        return make_partition(p, p.full_set() - ids(chain));
    }
    if (order.empty() || order == "all") return make_partition(p, p.full_set());
    if (order == "none") return make_partition(p, p.empty_set());
    return make_partition(p, ids(order));
}

int cmd_polytope(const Common& c, const std::string& poset_file, const std::string& order, const std::string& chain,
                 int t, const std::string& action, const std::string& point)
{
    Poset p = poset_from_json(read_json_file(poset_file));
    if (p.size() > 62) throw CapacityError("poset too large");
    auto part = partition_of(p, order, chain);
    if (t < 0) throw InvalidArgument("--t must be non-negative");
    auto h = interpolating_hrep(p, part);
    Json j{{"poset", poset_json(p)}, {"partition", partition_json(p, part)}, {"t", t}};
    std::ostringstream text;
    if (action == "hrep") {
        j["hrep"] = polytope_json(p, h);
        text << h.inequalities.size() << " inequalities in dimension " << h.dim << "\n";
    } else if (action == "points") {
        if (p.size() > kMaxEhrhartPoset + 4) throw CapacityError("exhaustive point enumeration is limited to 12 elements");
        auto pts = enumerate_lattice_points(h, t);
        Json arr = Json::array();
        for (const auto& x : pts) {
            arr.push_back(int_point_json(p, x));
            for (auto v : x) text << v << " ";
            text << "\n";
        }
        j["points"] = arr;
        j["count"] = pts.size();
    } else if (action == "decompose") {
        if (point.empty()) throw InvalidArgument("decompose needs --point");
        Json pj = Json::parse(point, nullptr, false);
        if (pj.is_discarded() || !pj.is_object()) throw InvalidArgument("--point must be a JSON object {id: value}");
        IntPoint x(p.size(), 0);
        for (const auto& [k, v] : pj.items()) x[p.index_of(k)] = v.is_string() ? std::stoll(v.get<std::string>()) : v.get<long long>();
        auto parts = minkowski_decompose(p, part, x, t);
        Json arr = Json::array();
        for (const auto& s : parts) arr.push_back(int_point_json(p, s));
        j["summands"] = arr;
        text << parts.size() << " summands\n";
    } else {
        throw InvalidArgument("unknown action '" + action + "'");
    }
    emit(c, j, text.str());
    return kOk;
}

int cmd_facets(const Common& c, bool witnesses)
{
    if (c.n < 3) throw InvalidArgument("--n must be at least 3");
    if (c.n > 10) throw CapacityError("facet enumeration is limited to n <= 10");
    auto f = facet_count(c.n), g = facet_count_formula(c.n);
    Json j{{"n", c.n},
           {"ssyt", {{"total", f.ssyt_total}, {"diamond", f.diamond}, {"special", f.special}}},
           {"pbw", {{"total", f.pbw_total}, {"diamond", f.pbw_diamond}, {"special", f.pbw_special}}},
           {"formula", {{"total", g.ssyt_total}, {"diamond", g.diamond}, {"special", g.special}}}};
    bool ok = f.ssyt_total == g.ssyt_total && f.diamond == g.diamond && f.pbw_total == g.ssyt_total;
    std::ostringstream text;
    text << "SSYT " << f.ssyt_total << " (" << f.diamond << " diamond, " << f.special << " special); PBW "
         << f.pbw_total << "; formula " << g.ssyt_total << "\n";
    if (witnesses) {
        if (c.n > 7) throw CapacityError("witness certification is limited to n <= 7");
        PluckerSetting s(c.n, false);
        Json w;
        for (auto t : {ConeTarget::Hibi, ConeTarget::GenHibi, ConeTarget::Ssyt, ConeTarget::Pbw}) {
            auto h = cone_hrep(t, s);
            auto res = certify_all(h, s, Exec::Parallel);
            std::size_t good = std::count(res.begin(), res.end(), 1);
            ok = ok && good == res.size();
            w[target_name(t)] = {{"facets", res.size()}, {"certified", good}};
            text << target_name(t) << ": " << good << "/" << res.size() << " facets certified\n";
        }
        j["witnesses"] = w;
    }
    emit(c, j, text.str());
    return ok ? kOk : kFailures;
}

int cmd_verify(const Common& c, const std::string& suite, std::size_t samples, const std::string& poset_file,
               int random_posets, bool timing, bool serial)
{
    SuiteOptions opt;
    opt.n = c.n;
    opt.seed = c.seed;
    opt.trials = c.trials;
    opt.samples = samples;
    opt.random_posets = random_posets;
    opt.exec = serial ? Exec::Serial : Exec::Parallel;
    if (!poset_file.empty()) opt.poset = poset_from_json(read_json_file(poset_file));
    auto r = run_suite(suite, opt);
    emit(c, report_json(r, timing), report_text(r));
    if (timing) std::cerr << suite << ": " << r.wall_seconds << " s\n";
    return r.ok() ? kOk : kFailures;
}

void add_common(CLI::App* app, Common& c, bool kind, bool target)
{
    app->add_option("--n", c.n, "Number of indices / lattice parameter");
    if (kind) app->add_option("--kind", c.kind, "Lattice kind: M or N");
    if (target) app->add_option("--target", c.target, "Cone target, e.g. SSYT, PBW, HIBI, TORIC_GT");
    app->add_option("--seed", c.seed, "Random seed");
    app->add_option("--oracle", c.oracle, "Membership oracle: probabilistic or symbolic");
    app->add_option("--trials", c.trials, "Probabilistic oracle trials");
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app->add_option("--out", c.out, "Write output to FILE");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Straightening relations, interpolating polytopes and maximal Groebner cones of flag varieties"};
    app.require_subcommand(1);
    Common c;

    auto* lat = app.add_subcommand("lattice", "Hasse diagram of M(n) or N(n)");
    add_common(lat, c, true, false);
    auto* pairs = app.add_subcommand("pairs", "Incomparable pairs with their diamond classification");
    add_common(pairs, c, true, false);

    auto* st = app.add_subcommand("straighten", "Straightening relation of an incomparable pair");
    add_common(st, c, true, false);
    std::vector<std::string> pair;
    bool check = false;
    st->add_option("pair", pair, "Pair of elements, e.g. \"1,4 2,3\"")->required();
    st->add_flag("--check", check, "Also run the ideal membership oracle");

    auto* cone = app.add_subcommand("cone", "H-description of a cone");
    add_common(cone, c, false, true);

    auto* cp = app.add_subcommand("check-point", "Membership of a weight vector in a cone");
    add_common(cp, c, false, true);
    std::string weights = "interior";
    cp->add_option("--weights", weights, "interior, exponential, zero or a JSON file {element: value}");

    auto* poly = app.add_subcommand("polytope", "Interpolating chain-order polytope of a poset");
    add_common(poly, c, false, false);
    std::string poset_file, order, chain, action = "hrep", point;
    int t = 1;
    poly->add_option("--poset", poset_file, "Poset JSON file")->required();
    poly->add_option("--order", order, "Comma-separated order part, 'all' or 'none' (default all)");
    poly->add_option("--chain", chain, "Comma-separated chain part or 'all'");
    poly->add_option("--t", t, "Dilation factor");
    poly->add_option("--action", action, "hrep, points or decompose")
        ->check(CLI::IsMember({"hrep", "points", "decompose"}));
    poly->add_option("--point", point, "Point for decompose, JSON {id: value}");

    auto* facets = app.add_subcommand("facets", "Facet counts of the SSYT and PBW cones");
    add_common(facets, c, false, false);
    bool witnesses = false;
    facets->add_flag("--witnesses", witnesses, "Certify every facet with its witness");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    add_common(verify, c, false, false);
    std::string suite;
    std::size_t samples = 1000;
    std::string vposet;
    int random_posets = 0;
    bool timing = false, serial = false;
    verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--samples", samples, "Sampled cone points");
    verify->add_option("--poset", vposet, "Poset JSON file (ehrhart, minkowski)");
    verify->add_option("--random-posets", random_posets, "Extra seeded random posets (ehrhart, minkowski)");
    verify->add_flag("--timing", timing, "Include wall time in the report");
    verify->add_flag("--serial", serial, "Use the serial reference kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*lat) return cmd_lattice(c);
        if (*pairs) return cmd_pairs(c);
        if (*st) return cmd_straighten(c, pair, check);
        if (*cone) return cmd_cone(c);
        if (*cp) return cmd_check_point(c, weights);
        if (*poly) return cmd_polytope(c, poset_file, order, chain, t, action, point);
        if (*facets) return cmd_facets(c, witnesses);
        if (*verify) return cmd_verify(c, suite, samples, vposet, random_posets, timing, serial);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kCapacity;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kFailures;
    }
    return kUsage;
}
