#include "plueckerfan/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

namespace pf {

std::vector<Elem> ElementSet::members() const
{
    std::vector<Elem> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i))
        out.push_back(static_cast<Elem>(i));
    return out;
}

bool ElementSet::operator<(const ElementSet& o) const
{
    auto c1 = count(), c2 = o.count();
    if (c1 != c2) return c1 < c2;
    if (bits_.size() != o.bits_.size()) return bits_.size() < o.bits_.size();
    auto diff = bits_ ^ o.bits_;
    auto i = diff.find_first();
    if (i == diff.npos) return false;
    return bits_.test(i);
}

namespace {

std::vector<ElementSet> transpose(const std::vector<ElementSet>& down)
{
    std::vector<ElementSet> up(down.size(), ElementSet(down.size()));
    for (Elem a = 0; a < down.size(); ++a)
        for (Elem b : down[a].members()) up[b].insert(a);
    return up;
}

}  // namespace

Poset::Poset(std::vector<std::string> ids, std::vector<ElementSet> down)
    : ids_(std::move(ids)), down_(std::move(down))
{
    const std::size_t n = ids_.size();
    if (down_.size() != n) throw InvalidArgument("poset: relation size mismatch");
    for (auto& d : down_)
        if (d.universe() != n) throw InvalidArgument("poset: relation size mismatch");

    for (Elem a = 0; a < n; ++a) {
        if (!down_[a].contains(a)) throw InvalidArgument("poset: relation not reflexive at " + ids_[a]);
        for (Elem b : down_[a].members()) {
            if (b != a && down_[b].contains(a))
                throw InvalidArgument("poset: relation not antisymmetric at " + ids_[a] + ", " + ids_[b]);
            if (!down_[b].subset_of(down_[a]))
                throw InvalidArgument("poset: relation not transitive at " + ids_[a]);
        }
    }
    up_ = transpose(down_);

    // |down(a)| strictly increases along the order, so sorting by it gives a
    // linear extension.
    linext_.resize(n);
    std::iota(linext_.begin(), linext_.end(), 0);
    std::stable_sort(linext_.begin(), linext_.end(),
                     [&](Elem x, Elem y) { return down_[x].count() < down_[y].count(); });

    upper_.assign(n, {});
    lower_.assign(n, {});
    height_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        ElementSet strict = down_[a];
        strict.erase(a);
        ElementSet reach(n);
        for (Elem c : strict.members()) {
            ElementSet below_c = down_[c];
            below_c.erase(c);
            reach |= below_c;
        }
        for (Elem b : (strict - reach).members()) {
            covers_.emplace_back(b, a);
            lower_[a].push_back(b);
            upper_[b].push_back(a);
        }
    }
    std::sort(covers_.begin(), covers_.end());
    for (auto& u : upper_) std::sort(u.begin(), u.end());
    for (Elem a : linext_)
        for (Elem b : lower_[a]) height_[a] = std::max(height_[a], height_[b] + 1);
}

Poset Poset::from_relation(std::vector<std::string> ids, const std::function<bool(Elem, Elem)>& leq)
{
    const std::size_t n = ids.size();
    std::vector<ElementSet> down(n, ElementSet(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (leq(b, a)) down[a].insert(b);
    return Poset(std::move(ids), std::move(down));
}

Poset Poset::from_covers(std::vector<std::string> ids,
                         const std::vector<std::pair<std::string, std::string>>& covers)
{
    const std::size_t n = ids.size();
    std::unordered_map<std::string, Elem> index;
    for (Elem i = 0; i < n; ++i)
        if (!index.emplace(ids[i], i).second) throw InvalidArgument("poset: duplicate element id " + ids[i]);

    std::vector<std::vector<Elem>> below(n);
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<Elem>> above(n);
    for (const auto& [lo, hi] : covers) {
        auto l = index.find(lo), h = index.find(hi);
        if (l == index.end() || h == index.end()) throw InvalidArgument("poset: unknown element in cover " + lo + " < " + hi);
        if (l->second == h->second) throw InvalidArgument("poset: cover edge is a loop at " + lo);
        below[h->second].push_back(l->second);
        above[l->second].push_back(h->second);
        ++indeg[h->second];
    }

    std::vector<Elem> order;
    std::vector<Elem> ready;
    for (Elem i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        Elem a = ready.back();
        ready.pop_back();
        order.push_back(a);
        for (Elem b : above[a])
            if (--indeg[b] == 0) ready.push_back(b);
    }
    if (order.size() != n) throw InvalidArgument("poset: cover edges contain a cycle");

    std::vector<ElementSet> down(n, ElementSet(n));
    std::vector<int> height(n, 0);
    for (Elem a : order) {
        down[a].insert(a);
        for (Elem b : below[a]) {
            down[a] |= down[b];
            height[a] = std::max(height[a], height[b] + 1);
        }
    }

    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Elem x, Elem y) {
        return std::tie(height[x], ids[x]) < std::tie(height[y], ids[y]);
    });
    std::vector<Elem> pos(n);
    for (Elem i = 0; i < n; ++i) pos[perm[i]] = i;

    std::vector<std::string> sorted_ids(n);
    std::vector<ElementSet> sorted_down(n, ElementSet(n));
    for (Elem i = 0; i < n; ++i) {
        sorted_ids[i] = ids[perm[i]];
        for (Elem b : down[perm[i]].members()) sorted_down[i].insert(pos[b]);
    }
    return Poset(std::move(sorted_ids), std::move(sorted_down));
}

Elem Poset::index_of(const std::string& id) const
{
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw InvalidArgument("unknown element '" + id + "'");
    return static_cast<Elem>(it - ids_.begin());
}

bool Poset::covers(Elem hi, Elem lo) const
{
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(lo, hi));
}

bool Poset::is_ideal(const ElementSet& s) const
{
    if (s.universe() != size()) return false;
    for (Elem a : s.members())
        if (!down_[a].subset_of(s)) return false;
    return true;
}

ElementSet Poset::down_closure(const ElementSet& s) const
{
    ElementSet out(size());
    for (Elem a : s.members()) out |= down_[a];
    return out;
}

ElementSet Poset::maximal_elements(const ElementSet& s) const
{
    ElementSet out(size());
    for (Elem a : s.members()) {
        ElementSet above = up_[a] & s;
        if (above.count() == 1) out.insert(a);
    }
    return out;
}

ElementSet Poset::full_set() const
{
    ElementSet s(size());
    for (Elem a = 0; a < size(); ++a) s.insert(a);
    return s;
}

Poset Poset::induced(const std::vector<Elem>& elems) const
{
    std::vector<std::string> ids;
    for (Elem e : elems) ids.push_back(ids_.at(e));
    return from_relation(std::move(ids), [&](Elem a, Elem b) { return leq(elems[a], elems[b]); });
}

DistributiveLattice::DistributiveLattice(Poset order, std::vector<std::uint16_t> join,
                                         std::vector<std::uint16_t> meet, std::uint64_t seed)
    : order_(std::move(order)), join_(std::move(join)), meet_(std::move(meet))
{
    const std::size_t n = order_.size();
    if (n == 0) throw InvalidArgument("lattice: no elements");
    if (n > 65535) throw CapacityError("lattice: more than 65535 elements");
    if (join_.size() != n * n || meet_.size() != n * n) throw InvalidArgument("lattice: table size mismatch");

    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            Elem j = this->join(a, b), m = this->meet(a, b);
            if (j >= n || m >= n) throw InvalidArgument("lattice: table entry out of range");
            if (j != this->join(b, a) || m != this->meet(b, a))
                throw InvalidArgument("lattice: operations not commutative");
            if (!leq(a, j) || !leq(b, j) || !leq(m, a) || !leq(m, b))
                throw InvalidArgument("lattice: join/meet not bounds for " + order_.id(a) + ", " + order_.id(b));
            bool le = leq(a, b);
            if ((j == b) != le || (m == a) != le)
                throw InvalidArgument("lattice: operations disagree with order at " + order_.id(a) + ", " + order_.id(b));
        }
    }

    auto check_triple = [&](Elem a, Elem b, Elem c) {
        if (this->meet(a, this->join(b, c)) != this->join(this->meet(a, b), this->meet(a, c)))
            throw InvalidArgument("lattice: not distributive at " + order_.id(a) + ", " + order_.id(b) + ", " + order_.id(c));
        if (this->join(a, this->join(b, c)) != this->join(this->join(a, b), c) ||
            this->meet(a, this->meet(b, c)) != this->meet(this->meet(a, b), c))
            throw InvalidArgument("lattice: operations not associative");
        if (this->join(a, this->meet(a, b)) != a || this->meet(a, this->join(a, b)) != a)
            throw InvalidArgument("lattice: absorption fails");
    };
    if (n <= 64) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                for (Elem c = 0; c < n; ++c) {
                    check_triple(a, b, c);
                    if (leq(a, c) && leq(b, c) && !leq(this->join(a, b), c))
                        throw InvalidArgument("lattice: join is not least upper bound");
                }
            }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        for (int i = 0; i < 1000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
    }

    bottom_ = top_ = 0;
    for (Elem a = 1; a < n; ++a) {
        bottom_ = this->meet(bottom_, a);
        top_ = this->join(top_, a);
    }
}

DistributiveLattice DistributiveLattice::from_poset(Poset order)
{
    const std::size_t n = order.size();
    if (n > 4096) throw CapacityError("lattice search limited to 4096 elements");
    std::vector<std::uint16_t> join(n * n), meet(n * n);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = a; b < n; ++b) {
            ElementSet ub = order.up(a) & order.up(b);
            ElementSet lb = order.down(a) & order.down(b);
            auto least = [&](const ElementSet& s, bool upward) -> Elem {
                for (Elem c : s.members()) {
                    const ElementSet& reach = upward ? order.up(c) : order.down(c);
                    if (s.subset_of(reach)) return c;
                }
                throw InvalidArgument("lattice: " + order.id(a) + " and " + order.id(b) +
                                      (upward ? " have no join" : " have no meet"));
            };
            Elem j = least(ub, true), m = least(lb, false);
            join[a * n + b] = join[b * n + a] = static_cast<std::uint16_t>(j);
            meet[a * n + b] = meet[b * n + a] = static_cast<std::uint16_t>(m);
        }
    }
    return DistributiveLattice(std::move(order), std::move(join), std::move(meet));
}

std::vector<OrderIdeal> enumerate_order_ideals(const Poset& p)
{
    const std::size_t n = p.size();
    if (n > 62) throw CapacityError("order ideal enumeration is limited to 62 elements");

    const auto& ext = p.linear_extension();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[ext[i]] = i;
    std::vector<std::uint64_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (Elem b : p.lower_covers(ext[i])) below[i] |= std::uint64_t{1} << pos[b];
    }

    std::vector<std::uint64_t> masks;
    std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [i, mask] = stack.back();
        stack.pop_back();
        if (i == n) {
            masks.push_back(mask);
            continue;
        }
        stack.emplace_back(i + 1, mask);
        if ((below[i] & mask) == below[i]) stack.emplace_back(i + 1, mask | (std::uint64_t{1} << i));
    }

    std::vector<OrderIdeal> out;
    out.reserve(masks.size());
    for (auto mask : masks) {
        OrderIdeal j(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) j.insert(ext[i]);
        out.push_back(std::move(j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string ideal_id(const Poset& p, const OrderIdeal& j)
{
    std::string s = "{";
    bool first = true;
    for (Elem e : j.members()) {
        if (!first) s += ",";
        s += p.id(e);
        first = false;
    }
    return s + "}";
}

}  // namespace

DistributiveLattice lattice_of_ideals(const Poset& p)
{
    auto ideals = enumerate_order_ideals(p);
    if (ideals.size() > 65535) throw CapacityError("lattice of ideals exceeds 65535 elements");
    std::vector<std::string> ids;
    ids.reserve(ideals.size());
    for (const auto& j : ideals) ids.push_back(ideal_id(p, j));

    std::vector<Elem> perm(ideals.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](Elem x, Elem y) {
        auto cx = ideals[x].count(), cy = ideals[y].count();
        return std::tie(cx, ids[x]) < std::tie(cy, ids[y]);
    });
    std::vector<OrderIdeal> sorted;
    std::vector<std::string> sorted_ids;
    for (Elem i : perm) {
        sorted.push_back(ideals[i]);
        sorted_ids.push_back(ids[i]);
    }

    std::map<OrderIdeal, Elem> index;
    for (Elem i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);
    const std::size_t n = sorted.size();
    std::vector<std::uint16_t> join(n * n), meet(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            join[a * n + b] = static_cast<std::uint16_t>(index.at(sorted[a] | sorted[b]));
            meet[a * n + b] = static_cast<std::uint16_t>(index.at(sorted[a] & sorted[b]));
        }
    Poset order = Poset::from_relation(sorted_ids, [&](Elem a, Elem b) { return sorted[a].subset_of(sorted[b]); });
    return DistributiveLattice(std::move(order), std::move(join), std::move(meet));
}

std::vector<Elem> join_irreducible_elements(const DistributiveLattice& l)
{
    std::vector<Elem> out;
    for (Elem a = 0; a < l.size(); ++a)
        if (l.poset().lower_covers(a).size() == 1) out.push_back(a);
    return out;
}

Poset join_irreducibles(const DistributiveLattice& l)
{
    return l.poset().induced(join_irreducible_elements(l));
}

OrderIdeal birkhoff_iso(const DistributiveLattice& l, Elem a)
{
    if (a >= l.size()) throw InvalidArgument("birkhoff_iso: unknown element");
    auto ji = join_irreducible_elements(l);
    OrderIdeal j(ji.size());
    for (Elem i = 0; i < ji.size(); ++i)
        if (l.leq(ji[i], a)) j.insert(i);
    return j;
}

Grading grading_of(const DistributiveLattice& l)
{
    auto ji = join_irreducible_elements(l);
    Grading g(l.size(), 0);
    for (Elem a = 0; a < l.size(); ++a)
        for (Elem p : ji)
            if (l.leq(p, a)) ++g[a];
    return g;
}

bool is_diamond(const DistributiveLattice& l, Elem a, Elem b)
{
    if (a == b || l.comparable(a, b)) return false;
    const auto& p = l.poset();
    Elem j = l.join(a, b), m = l.meet(a, b);
    return p.covers(j, a) && p.covers(j, b) && p.covers(a, m) && p.covers(b, m);
}

std::vector<std::pair<Elem, Elem>> diamond_pairs(const DistributiveLattice& l)
{
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem c = 0; c < l.size(); ++c) {
        const auto& up = l.poset().upper_covers(c);
        for (std::size_t i = 0; i < up.size(); ++i)
            for (std::size_t k = i + 1; k < up.size(); ++k)
                if (is_diamond(l, up[i], up[k])) out.emplace_back(std::min(up[i], up[k]), std::max(up[i], up[k]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace pf
