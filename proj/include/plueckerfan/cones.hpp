#pragma once

#include "plueckerfan/straighten.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pf {

// Indexed by lattice element.
using WeightVector = std::vector<Rational>;

enum class Relation { StrictNeg, NonstrictNeg, Equality };

// form(w) < 0, <= 0 or = 0.
struct LinearInequality {
    std::map<Elem, Rational> form;
    Relation rel = Relation::StrictNeg;
};

// The pair and index i of the relation an inequality comes from.
struct Provenance {
    Elem a = 0, b = 0;
    int index = 0;
    std::string kind;  // "diamond", "special" or "pair"
};

enum class ConeTarget {
    Hibi,
    GenHibi,
    Ssyt,
    Pbw,
    HibiRedundant,
    GenHibiRedundant,
    SsytRedundant,
    PbwRedundant,
    ToricGt,
    ToricFflv
};

std::string target_name(ConeTarget t);
ConeTarget parse_target(const std::string& s);
// Targets living on N(n); the others live on M(n).
bool on_n(ConeTarget t);

struct ConeHRep {
    ConeTarget target = ConeTarget::Hibi;
    int n = 0;
    std::vector<LinearInequality> inequalities;
    std::vector<Provenance> provenance;
};

// M(n), N(n) and, on request, the straightening of every incomparable pair.
struct PluckerSetting {
    int n = 0;
    PluckerLattice m, nl;
    std::vector<Straightening> m_rel, n_rel;

    PluckerSetting(int n, bool relations);
    const PluckerLattice& lattice(ConeTarget t) const { return on_n(t) ? nl : m; }
    const std::vector<Straightening>& relations(LatticeKind k) const;
};

// Hibi cone of an arbitrary distributive lattice (all incomparable pairs if redundant).
ConeHRep hibi_hrep(const DistributiveLattice& l, bool redundant = false);
ConeHRep genhibi_hrep(const DistributiveLattice& l, const BirkhoffData& bd, const ChainOrderPartition& part,
                      bool redundant = false);
ConeHRep cone_hrep(ConeTarget target, const PluckerSetting& s);

Rational evaluate(const LinearInequality& q, const WeightVector& w);
bool satisfied(const LinearInequality& q, const WeightVector& w);
bool contains(const ConeHRep& h, const WeightVector& w);

// w_a = |a|^2.
WeightVector interior_witness(const DistributiveLattice& l);
// w_a = 2^{|a|}.
WeightVector exponential_witness(const DistributiveLattice& l);

WeightVector hibi_facet_witness(const DistributiveLattice& l, Elem a, Elem b);
WeightVector genhibi_facet_witness(const DistributiveLattice& l, const BirkhoffData& bd,
                                   const ChainOrderPartition& part, Elem a, Elem b);
WeightVector ssyt_special_witness(const PluckerLattice& m, Elem a, Elem b);
WeightVector pbw_special_witness(const PluckerSetting& s, Elem a, Elem b);
// Witness for inequality i of a minimal description of a Plücker target.
WeightVector facet_witness(const ConeHRep& h, std::size_t i, const PluckerSetting& s);
// The witness violates inequality i and no other, in the sense that either
// (own > 0 and others <= 0) or (own >= 0 and others < 0).
bool certify_witness(const ConeHRep& h, std::size_t i, const WeightVector& v);

struct FacetCount {
    std::uint64_t ssyt_total = 0, diamond = 0, special = 0;
    std::uint64_t pbw_total = 0, pbw_diamond = 0, pbw_special = 0;
};
FacetCount facet_count(int n);
// 2^{n-5}(n^2+n-4), 2^{n-5}(n^2-n-2) and their difference, for n >= 3.
FacetCount facet_count_formula(int n);

// Terms of p of least w-value; variables are the lattice elements.
Polynomial initial_form(const Polynomial& p, const PluckerLattice& lat, const WeightVector& w);

struct XiPoint {
    int n = 0;
    std::vector<Rational> z;  // (n+1)^2, z(s,t) for 1 <= s <= t <= n
    std::vector<Rational> c;  // c(k) for 1 <= k <= n-1

    explicit XiPoint(int n_ = 0);
    Rational& zat(int s, int t) { return z.at(static_cast<std::size_t>(s * (n + 1) + t)); }
    const Rational& zat(int s, int t) const { return z.at(static_cast<std::size_t>(s * (n + 1) + t)); }
    Rational& cat(int k) { return c.at(static_cast<std::size_t>(k)); }
    const Rational& cat(int k) const { return c.at(static_cast<std::size_t>(k)); }
};

WeightVector sigma_map(const PluckerLattice& m, const XiPoint& xi);
WeightVector rho_map(const PluckerLattice& nl, const XiPoint& xi);
bool in_K(const XiPoint& xi);
// z_{s,s} = 0, first off-diagonal from base, second differences from the
// given positive values; the result lies in K.
XiPoint random_k_point(int n, std::uint64_t seed);

// Linear form in the z_{s,t} (diagonal dropped).
using ZForm = std::map<Coord, Rational>;
// z_{s,t} + z_{s+1,t+1} - z_{s,t+1} - z_{s+1,t} modulo the diagonal.
ZForm k_facet_form(int s, int t);

struct SubconeClass {
    bool contains_subcone = false;
    Coord facet{0, 0};  // (s,t) of the facet of K met, if any
    int sign = 0;       // Q = sign * k_facet_form(s,t)
    ZForm q;
};
// Throws InternalError if the pulled-back form is neither zero nor a facet of K.
SubconeClass classify_facet_vs_subcone(const ConeHRep& h, std::size_t i, const PluckerSetting& s);

// Seeded points of h around base: (8 base + integer noise in [-spread, spread]) / d
// with a random d in [1,7].
struct ConeSample {
    std::vector<WeightVector> points;
    std::size_t rejected = 0;
};
ConeSample sample_cone(const ConeHRep& h, const WeightVector& base, std::size_t count, std::uint64_t seed,
                       int spread = 24);

}  // namespace pf
