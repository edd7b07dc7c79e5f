#pragma once

#include "plueckerfan/cones.hpp"

#include <json.hpp>

#include <string>

namespace pf {

using Json = nlohmann::ordered_json;

Json lattice_json(const PluckerLattice& lat);
std::string lattice_text(const PluckerLattice& lat);

// {"terms": [{"coeff": "p/q", "factors": [[1,4],[2,3]]}, ...]}
Json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Json straightening_json(const PluckerLattice& lat, const Straightening& s);

std::string relation_symbol(Relation r);
Json hrep_json(const ConeHRep& h, const PluckerLattice& lat);

// {element name: "p/q"}
Json weights_json(const PluckerLattice& lat, const WeightVector& w);
WeightVector weights_from_json(const PluckerLattice& lat, const Json& j);

Json xi_json(const XiPoint& xi);
XiPoint xi_from_json(int n, const Json& j);

// {"elements": [ids], "covers": [[lo, hi], ...]}
Poset poset_from_json(const Json& j);
Json poset_json(const Poset& p);
Json partition_json(const Poset& p, const ChainOrderPartition& part);
Json polytope_json(const Poset& p, const PolytopeHRep& h);
Json int_point_json(const Poset& p, const IntPoint& x);

Json read_json_file(const std::string& path);

}  // namespace pf
