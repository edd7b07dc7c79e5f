#pragma once

#include "plueckerfan/cones.hpp"
#include "plueckerfan/oracle.hpp"

#include <cstdint>
#include <vector>

namespace pf {

// Serial loops are the reference; the OpenMP variants must give identical output.
enum class Exec { Serial, Parallel };

// Unordered incomparable pairs (a < b by index), sorted.
std::vector<std::pair<Elem, Elem>> incomparable_pairs(const PluckerLattice& lat);

std::vector<Straightening> straighten_all(const PluckerLattice& lat, Exec exec);

// Item i uses seed mix(seed, i), so results do not depend on scheduling.
std::vector<MembershipVerdict> membership_all(const std::vector<Polynomial>& ps, int n, int trials,
                                              std::uint64_t seed, Exec exec);
std::uint64_t item_seed(std::uint64_t seed, std::uint64_t i);

// certify_witness(facet_witness(h, i)) for every inequality.
std::vector<char> certify_all(const ConeHRep& h, const PluckerSetting& s, Exec exec);

// For every point: contained in each of the given descriptions.
std::vector<char> contained_all(const std::vector<WeightVector>& points, const std::vector<const ConeHRep*>& hs,
                                Exec exec);

// For every point: initial_form of every relation is its leading X_a X_b.
std::vector<char> initial_forms_all(const std::vector<WeightVector>& points, const PluckerLattice& lat,
                                    const std::vector<Straightening>& rels, Exec exec);

}  // namespace pf
