#include "plueckerfan/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pf {

namespace {

Json entries_json(const Entries& e)
{
    Json a = Json::array();
    for (auto x : e) a.push_back(static_cast<int>(x));
    return a;
}

}  // namespace

Json lattice_json(const PluckerLattice& lat)
{
    Json j;
    j["n"] = lat.n;
    j["kind"] = kind_name(lat.kind);
    Json elems = Json::array();
    for (Elem a = 0; a < lat.size(); ++a) elems.push_back({{"name", lat.name(a)}, {"grade", lat.grade(a)}});
    j["elements"] = elems;
    Json covers = Json::array();
    for (auto [lo, hi] : lat.lattice.poset().covers()) covers.push_back({lat.name(lo), lat.name(hi)});
    j["covers"] = covers;
    Json ji = Json::array();
    for (std::size_t i = 0; i < lat.ji.size(); ++i)
        ji.push_back({{"name", lat.name(lat.ji[i])}, {"coord", {lat.ji_coords[i].first, lat.ji_coords[i].second}}});
    j["join_irreducibles"] = ji;
    return j;
}

std::string lattice_text(const PluckerLattice& lat)
{
    std::ostringstream out;
    out << kind_name(lat.kind) << "(" << lat.n << "): " << lat.size() << " elements\n";
    int top = lat.grade(lat.lattice.top());
    for (int g = top; g >= 0; --g) {
        out << g << ":";
        for (Elem a = 0; a < lat.size(); ++a)
            if (lat.grade(a) == g) out << " " << lat.name(a);
        out << "\n";
    }
    out << "covers:";
    for (auto [lo, hi] : lat.lattice.poset().covers()) out << " " << lat.name(lo) << "<" << lat.name(hi);
    out << "\n";
    return out.str();
}

Json polynomial_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json factors = Json::array();
        for (const auto& f : m) factors.push_back(entries_json(f));
        terms.push_back({{"coeff", to_string(c)}, {"factors", factors}});
    }
    return {{"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j)
{
    Polynomial p;
    try {
        for (const auto& t : j.at("terms")) {
            std::vector<Entries> fs;
            for (const auto& f : t.at("factors")) {
                Entries e;
                for (int x : f) {
                    if (x < 1 || x > kMaxN) throw InvalidArgument("index out of range in relation JSON");
                    e.push_back(static_cast<std::uint8_t>(x));
                }
                fs.push_back(e);
            }
            p.add_tuples(fs, parse_rational(t.at("coeff").get<std::string>()));
        }
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed relation JSON: ") + e.what());
    }
    return p;
}

Json straightening_json(const PluckerLattice& lat, const Straightening& s)
{
    Json j = polynomial_json(s.relation);
    j["kind"] = kind_name(lat.kind);
    j["n"] = lat.n;
    j["a"] = lat.name(s.a);
    j["b"] = lat.name(s.b);
    Json terms = Json::array();
    for (const auto& t : s.terms) terms.push_back({{"coeff", to_string(t.coeff)}, {"p", lat.name(t.p)}, {"q", lat.name(t.q)}});
    j["lattice_terms"] = terms;
    j["m"] = s.m();
    j["steps"] = s.steps;
    return j;
}

std::string relation_symbol(Relation r)
{
    switch (r) {
    case Relation::StrictNeg: return "<";
    case Relation::NonstrictNeg: return "<=";
    case Relation::Equality: return "=";
    }
    return "?";
}

Json hrep_json(const ConeHRep& h, const PluckerLattice& lat)
{
    Json j;
    j["target"] = target_name(h.target);
    j["n"] = h.n;
    Json ineqs = Json::array();
    for (const auto& q : h.inequalities) {
        Json terms = Json::object();
        for (const auto& [e, c] : q.form) terms[lat.name(e)] = c.get_den() == 1 ? Json(c.get_num().get_si()) : Json(to_string(c));
        ineqs.push_back({{"terms", terms}, {"rel", relation_symbol(q.rel)}});
    }
    j["inequalities"] = ineqs;
    Json prov = Json::array();
    for (const auto& p : h.provenance)
        prov.push_back({{"a", lat.name(p.a)}, {"b", lat.name(p.b)}, {"index", p.index}, {"kind", p.kind}});
    j["provenance"] = prov;
    return j;
}

Json weights_json(const PluckerLattice& lat, const WeightVector& w)
{
    Json j = Json::object();
    for (Elem a = 0; a < lat.size(); ++a) j[lat.name(a)] = to_string(w.at(a));
    return j;
}

WeightVector weights_from_json(const PluckerLattice& lat, const Json& j)
{
    if (!j.is_object()) throw InvalidArgument("weights must be a JSON object keyed by element name");
    WeightVector w(lat.size());
    std::vector<char> seen(lat.size(), 0);
    for (const auto& [key, value] : j.items()) {
        Elem a = lat.element(key);
        if (seen[a]) throw InvalidArgument("duplicate weight for " + key);
        seen[a] = 1;
        w[a] = value.is_string() ? parse_rational(value.get<std::string>()) : Rational(value.get<long>());
    }
    for (Elem a = 0; a < lat.size(); ++a)
        if (!seen[a]) throw InvalidArgument("missing weight for " + lat.name(a));
    return w;
}

Json xi_json(const XiPoint& xi)
{
    Json z = Json::object();
    for (int s = 1; s <= xi.n; ++s)
        for (int t = s; t <= xi.n; ++t) z[std::to_string(s) + "," + std::to_string(t)] = to_string(xi.zat(s, t));
    Json c = Json::object();
    for (int k = 1; k < xi.n; ++k) c[std::to_string(k)] = to_string(xi.cat(k));
    return {{"n", xi.n}, {"z", z}, {"c", c}};
}

XiPoint xi_from_json(int n, const Json& j)
{
    XiPoint xi(n);
    try {
        for (const auto& [key, value] : j.at("z").items()) {
            auto e = parse_entries(key);
            if (e.size() != 2 || e[0] < 1 || e[0] > e[1] || e[1] > n) throw InvalidArgument("bad Xi key " + key);
            xi.zat(e[0], e[1]) = parse_rational(value.get<std::string>());
        }
        if (j.contains("c"))
            for (const auto& [key, value] : j.at("c").items()) {
                int k = std::stoi(key);
                if (k < 1 || k >= n) throw InvalidArgument("bad Xi key " + key);
                xi.cat(k) = parse_rational(value.get<std::string>());
            }
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed Xi JSON: ") + e.what());
    }
    return xi;
}

Poset poset_from_json(const Json& j)
{
    try {
        auto ids = j.at("elements").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> covers;
        for (const auto& c : j.at("covers")) {
            if (c.size() != 2) throw InvalidArgument("cover edges are [lo, hi] pairs");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
        return Poset::from_covers(std::move(ids), covers);
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed poset JSON: ") + e.what());
    }
}

Json poset_json(const Poset& p)
{
    Json covers = Json::array();
    for (auto [lo, hi] : p.covers()) covers.push_back({p.id(lo), p.id(hi)});
    return {{"elements", p.ids()}, {"covers", covers}};
}

Json partition_json(const Poset& p, const ChainOrderPartition& part)
{
    Json o = Json::array(), c = Json::array();
    for (Elem e = 0; e < p.size(); ++e) (part.in_order(e) ? o : c).push_back(p.id(e));
    return {{"order", o}, {"chain", c}};
}

Json polytope_json(const Poset& p, const PolytopeHRep& h)
{
    static const char* names[] = {"box", "order", "chain", "dominated"};
    Json ineqs = Json::array();
    for (const auto& q : h.inequalities) {
        Json terms = Json::object();
        for (auto [e, c] : q.form) terms[p.id(e)] = c;
        ineqs.push_back({{"terms", terms}, {"bound", to_string(q.bound)}, {"source", names[static_cast<int>(q.source)]}});
    }
    return {{"dim", h.dim}, {"inequalities", ineqs}};
}

Json int_point_json(const Poset& p, const IntPoint& x)
{
    Json j = Json::object();
    for (Elem e = 0; e < p.size(); ++e) j[p.id(e)] = std::to_string(x.at(e));
    return j;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidArgument("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace pf
