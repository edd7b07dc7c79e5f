#pragma once

#include "plueckerfan/columns.hpp"
#include "plueckerfan/order.hpp"
#include "plueckerfan/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pf {

enum class LatticeKind { M, N };

std::string kind_name(LatticeKind k);
LatticeKind parse_kind(const std::string& s);

struct PluckerLattice {
    LatticeKind kind = LatticeKind::M;
    int n = 0;
    DistributiveLattice lattice;
    // Column (kind M) or PBW column (kind N) of every element.
    std::vector<Entries> labels;
    // For kind N: the column of tau^{-1}(b). For kind M: same as labels.
    std::vector<Entries> m_labels;
    // Element with a given index set, and element whose M column has a
    // given index set (the identity for kind M).
    std::vector<Elem> by_mask;
    std::vector<Elem> by_m_mask;

    // Join-irreducibles in lattice order with their (r,s) coordinates.
    std::vector<Elem> ji;
    std::vector<Coord> ji_coords;
    Poset ji_poset;
    ChainOrderPartition partition;
    std::vector<OrderIdeal> iota;

    std::size_t size() const { return labels.size(); }
    int grade(Elem a) const { return lattice.grade(a); }
    std::string name(Elem a) const { return format_entries(labels.at(a)); }
    // Accepts the exact label, or for kind N any arrangement of the index set.
    Elem element(const Entries& e) const;
    Elem element(const std::string& s) const { return element(parse_entries(s)); }
    Elem of_mask(SetMask m) const;
    Elem of_m_column(const Entries& c) const;
    std::size_t ji_index(Coord c) const;
    Elem from_ideal(const OrderIdeal& j) const;
    bool standard(Elem a, Elem b) const { return lattice.comparable(a, b); }
    // X_{label} = sign * X_{sorted label}.
    int label_sign(Elem a) const;
};

PluckerLattice build_M(int n);
PluckerLattice build_N(int n);

Entries nu(const PluckerLattice& m, Elem a);
Elem tau(const PluckerLattice& m, const PluckerLattice& nlat, Elem a);
Elem tau_inverse(const PluckerLattice& m, const PluckerLattice& nlat, Elem b);

struct TauReport {
    std::size_t pairs_checked = 0;
    std::vector<std::string> failures;
};
// Exhaustive bijectivity and order-preservation check.
TauReport verify_tau(const PluckerLattice& m, const PluckerLattice& nlat);

Entries tableau_from_ideal(const PluckerLattice& nlat, const OrderIdeal& j);

enum class PairKind { NotDiamond, DiamondPlain, DiamondSpecial };
std::string pair_kind_name(PairKind k);

struct SpecialPairData {
    Elem a = 0, b = 0;
    Elem meet = 0, join = 0;
    // M: p_1 and q_1 (filled for every diamond pair). N: below = a odot b,
    // above = h_1 and companion = g_1 for special pairs.
    std::optional<Elem> below, above, companion;
    int possibility = 0;
};

struct PairClassification {
    PairKind kind = PairKind::NotDiamond;
    SpecialPairData data;
};

// Throws ComparablePair if a and b are comparable.
PairClassification classify_pair(const PluckerLattice& lat, Elem a, Elem b);

}  // namespace pf
