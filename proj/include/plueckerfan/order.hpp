#pragma once

#include "plueckerfan/common.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pf {

// Subset of a poset's elements, indexed by the poset's element order.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_(universe) {}

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(Elem e) const { return e < bits_.size() && bits_.test(e); }
    void insert(Elem e) { bits_.set(e); }
    void erase(Elem e) { bits_.reset(e); }

    bool subset_of(const ElementSet& o) const { return bits_.is_subset_of(o.bits_); }
    std::vector<Elem> members() const;

    ElementSet operator|(const ElementSet& o) const { return ElementSet(bits_ | o.bits_); }
    ElementSet operator&(const ElementSet& o) const { return ElementSet(bits_ & o.bits_); }
    ElementSet operator-(const ElementSet& o) const { return ElementSet(bits_ - o.bits_); }
    ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }

    bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const ElementSet& o) const { return bits_ != o.bits_; }
    // Cardinality first, then bit pattern (lowest element most significant).
    bool operator<(const ElementSet& o) const;

    const boost::dynamic_bitset<std::uint64_t>& bits() const { return bits_; }

private:
    explicit ElementSet(boost::dynamic_bitset<std::uint64_t> b) : bits_(std::move(b)) {}
    boost::dynamic_bitset<std::uint64_t> bits_;
};

using OrderIdeal = ElementSet;

class Poset {
public:
    Poset() = default;
    // down[a] = {b | b <= a}. The element order is kept as given.
    Poset(std::vector<std::string> ids, std::vector<ElementSet> down);

    static Poset from_relation(std::vector<std::string> ids,
                               const std::function<bool(Elem, Elem)>& leq);
    // Reflexive-transitive closure of the cover edges; elements are sorted
    // by (height, id).
    static Poset from_covers(std::vector<std::string> ids,
                             const std::vector<std::pair<std::string, std::string>>& covers);

    std::size_t size() const { return ids_.size(); }
    const std::string& id(Elem e) const { return ids_.at(e); }
    const std::vector<std::string>& ids() const { return ids_; }
    Elem index_of(const std::string& id) const;

    bool leq(Elem a, Elem b) const { return down_[b].contains(a); }
    bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
    bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
    const ElementSet& down(Elem a) const { return down_[a]; }
    const ElementSet& up(Elem a) const { return up_[a]; }

    const std::vector<std::pair<Elem, Elem>>& covers() const { return covers_; }
    const std::vector<Elem>& upper_covers(Elem a) const { return upper_[a]; }
    const std::vector<Elem>& lower_covers(Elem a) const { return lower_[a]; }
    bool covers(Elem hi, Elem lo) const;

    // Longest chain length below a.
    int height(Elem a) const { return height_[a]; }
    // Elements sorted so that b < a implies b comes first.
    const std::vector<Elem>& linear_extension() const { return linext_; }

    bool is_maximal(Elem a) const { return upper_[a].empty(); }
    bool is_ideal(const ElementSet& s) const;
    ElementSet down_closure(const ElementSet& s) const;
    ElementSet maximal_elements(const ElementSet& s) const;
    ElementSet empty_set() const { return ElementSet(size()); }
    ElementSet full_set() const;

    Poset induced(const std::vector<Elem>& elems) const;

private:
    std::vector<std::string> ids_;
    std::vector<ElementSet> down_, up_;
    std::vector<std::pair<Elem, Elem>> covers_;
    std::vector<std::vector<Elem>> upper_, lower_;
    std::vector<int> height_;
    std::vector<Elem> linext_;
};

class DistributiveLattice {
public:
    DistributiveLattice() = default;
    // Tables are row-major size()*size(). Verified against the order and
    // for distributivity (all triples up to 64 elements, 1000 sampled above).
    DistributiveLattice(Poset order, std::vector<std::uint16_t> join,
                        std::vector<std::uint16_t> meet, std::uint64_t seed = 0);

    // Computes join and meet by search; intended for small inputs.
    static DistributiveLattice from_poset(Poset order);

    const Poset& poset() const { return order_; }
    std::size_t size() const { return order_.size(); }
    Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
    Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
    bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
    bool comparable(Elem a, Elem b) const { return order_.comparable(a, b); }
    Elem bottom() const { return bottom_; }
    Elem top() const { return top_; }
    int grade(Elem a) const { return order_.height(a); }

private:
    Poset order_;
    std::vector<std::uint16_t> join_, meet_;
    Elem bottom_ = 0, top_ = 0;
};

using Grading = std::vector<int>;

std::vector<OrderIdeal> enumerate_order_ideals(const Poset& p);
DistributiveLattice lattice_of_ideals(const Poset& p);

// Join-irreducible elements of l, in l's element order.
std::vector<Elem> join_irreducible_elements(const DistributiveLattice& l);
// Sub-poset on join_irreducible_elements(l), same order, ids kept.
Poset join_irreducibles(const DistributiveLattice& l);
// Ideal of join_irreducibles(l) below a.
OrderIdeal birkhoff_iso(const DistributiveLattice& l, Elem a);
Grading grading_of(const DistributiveLattice& l);
// Unordered pairs (first < second by index), sorted.
std::vector<std::pair<Elem, Elem>> diamond_pairs(const DistributiveLattice& l);
bool is_diamond(const DistributiveLattice& l, Elem a, Elem b);

}  // namespace pf
