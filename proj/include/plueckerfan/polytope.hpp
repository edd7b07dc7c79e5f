#pragma once

#include "plueckerfan/order.hpp"

#include <cstdint>
#include <vector>

namespace pf {

struct ChainOrderPartition {
    ElementSet order_part;
    ElementSet chain_part;

    bool in_order(Elem p) const { return order_part.contains(p); }
    bool in_chain(Elem p) const { return chain_part.contains(p); }
};

// U_o given, U_c its complement.
ChainOrderPartition make_partition(const Poset& p, const ElementSet& order_part);
void validate_partition(const Poset& p, const ChainOrderPartition& part);

using RationalPoint = std::vector<Rational>;
using IntPoint = std::vector<std::int64_t>;

enum class Condition { Box, Order, Chain, Dominated };

// sum(coeff * x) <= bound * t for the t-th dilation.
struct PolytopeInequality {
    std::vector<std::pair<Elem, int>> form;
    Rational bound;
    Condition source;
};

struct PolytopeHRep {
    std::size_t dim = 0;
    std::vector<PolytopeInequality> inequalities;
};

PolytopeHRep interpolating_hrep(const Poset& p, const ChainOrderPartition& part);
bool satisfies(const PolytopeHRep& h, const RationalPoint& x, std::int64_t t = 1);
bool satisfies(const PolytopeHRep& h, const IntPoint& x, std::int64_t t = 1);

RationalPoint zeta(const Poset& p, const ChainOrderPartition& part, const RationalPoint& x);
IntPoint zeta(const Poset& p, const ChainOrderPartition& part, const IntPoint& x);
RationalPoint zeta_prime(const Poset& p, const ChainOrderPartition& part, const RationalPoint& x);
IntPoint zeta_prime(const Poset& p, const ChainOrderPartition& part, const IntPoint& x);

ElementSet k_set(const Poset& p, const ChainOrderPartition& part, const OrderIdeal& j);
OrderIdeal odot_ideals(const Poset& p, const ChainOrderPartition& part,
                       const OrderIdeal& j1, const OrderIdeal& j2);

IntPoint indicator(const ElementSet& s);

// Sums of K-sets over decreasing chains of t ideals; sorted, duplicates removed.
std::vector<IntPoint> dilation_points(const Poset& p, const ChainOrderPartition& part, int t);
std::vector<IntPoint> minkowski_decompose(const Poset& p, const ChainOrderPartition& part,
                                          const IntPoint& x, int t);
// Same, with h = interpolating_hrep(p, part) precomputed.
std::vector<IntPoint> minkowski_decompose(const Poset& p, const ChainOrderPartition& part, const PolytopeHRep& h,
                                          const IntPoint& x, int t);

// Integer points of t * h by exhaustive search over [0,t]^dim.
std::vector<IntPoint> enumerate_lattice_points(const PolytopeHRep& h, int t);

}  // namespace pf
