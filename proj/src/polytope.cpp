#include "plueckerfan/polytope.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace pf {

ChainOrderPartition make_partition(const Poset& p, const ElementSet& order_part)
{
    if (order_part.universe() != p.size()) throw InvalidArgument("partition: size mismatch");
    return {order_part, p.full_set() - order_part};
}

void validate_partition(const Poset& p, const ChainOrderPartition& part)
{
    if (part.order_part.universe() != p.size() || part.chain_part.universe() != p.size())
        throw InvalidArgument("partition: element set mismatch");
    if (!(part.order_part & part.chain_part).empty()) throw InvalidArgument("partition: parts overlap");
    if ((part.order_part | part.chain_part) != p.full_set()) throw InvalidArgument("partition: parts do not cover P");
}

namespace {

// Extends chain upward to every maximal chain whose elements, except the
// last, lie in U_c.
void extend_chains(const Poset& p, const ChainOrderPartition& part, std::vector<Elem>& chain,
                   std::vector<std::vector<Elem>>& out)
{
    Elem cur = chain.back();
    if (!part.in_chain(cur) || p.is_maximal(cur)) {
        out.push_back(chain);
        return;
    }
    ElementSet above = p.up(cur);
    above.erase(cur);
    for (Elem q : above.members()) {
        // No U_c element strictly between cur and q.
        ElementSet between = above & p.down(q) & part.chain_part;
        between.erase(q);
        if (!between.empty()) continue;
        chain.push_back(q);
        extend_chains(p, part, chain, out);
        chain.pop_back();
    }
}

// With a bottom element q, chains must start above q and nothing from U_c
// may fit between q and the first element.
std::vector<std::vector<Elem>> maximal_chains(const Poset& p, const ChainOrderPartition& part,
                                              std::optional<Elem> q)
{
    std::vector<std::vector<Elem>> out;
    for (Elem s = 0; s < p.size(); ++s) {
        ElementSet below = p.down(s);
        below.erase(s);
        if (q) {
            if (!p.less(*q, s)) continue;
            ElementSet above_q = p.up(*q);
            above_q.erase(*q);
            below = below & above_q;
        }
        if (!(below & part.chain_part).empty()) continue;
        std::vector<Elem> chain{s};
        extend_chains(p, part, chain, out);
    }
    return out;
}

template <class T>
std::vector<T> zeta_impl(const Poset& p, const ChainOrderPartition& part, const std::vector<T>& x)
{
    if (x.size() != p.size()) throw InvalidArgument("point has wrong dimension");
    std::vector<T> y = x;
    for (Elem a = 0; a < p.size(); ++a) {
        if (part.in_order(a) || p.is_maximal(a)) continue;
        bool first = true;
        T best{};
        for (Elem q : p.up(a).members()) {
            if (q == a) continue;
            T d = x[a] - x[q];
            if (first || d < best) best = d;
            first = false;
        }
        y[a] = best;
    }
    return y;
}

template <class T>
std::vector<T> zeta_prime_impl(const Poset& p, const ChainOrderPartition& part, const std::vector<T>& x)
{
    if (x.size() != p.size()) throw InvalidArgument("point has wrong dimension");
    std::vector<T> best = x;
    const auto& ext = p.linear_extension();
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
        Elem a = *it;
        if (!part.in_chain(a)) continue;
        T tail = 0;
        for (Elem q : p.up(a).members()) {
            if (q == a) continue;
            T v = part.in_chain(q) ? best[q] : x[q];
            if (v > tail) tail = v;
        }
        best[a] = x[a] + tail;
    }
    std::vector<T> y = x;
    for (Elem a = 0; a < p.size(); ++a)
        if (part.in_chain(a)) y[a] = best[a];
    return y;
}

// lhs > bound * t, in machine integers when the bound is integral.
bool exceeds(std::int64_t lhs, const Rational& bound, std::int64_t t)
{
    if (bound.get_den() == 1 && bound.get_num().fits_slong_p()) {
        const std::int64_t b = bound.get_num().get_si();
        if (b == 0 || (t <= (std::int64_t{1} << 31) && b > -(std::int64_t{1} << 31) && b < (std::int64_t{1} << 31)))
            return lhs > b * t;
    }
    return Rational(static_cast<long>(lhs)) > bound * Rational(static_cast<long>(t));
}

template <class T>
bool satisfies_impl(const PolytopeHRep& h, const std::vector<T>& x, std::int64_t t)
{
    if (x.size() != h.dim) throw InvalidArgument("point has wrong dimension");
    for (const auto& ineq : h.inequalities) {
        T lhs = 0;
        for (auto [e, c] : ineq.form) lhs += T(c) * x[e];
        if (Rational(lhs) > ineq.bound * Rational(static_cast<long>(t))) return false;
    }
    return true;
}

}  // namespace

PolytopeHRep interpolating_hrep(const Poset& p, const ChainOrderPartition& part)
{
    validate_partition(p, part);
    PolytopeHRep h;
    h.dim = p.size();
    std::set<std::pair<std::vector<std::pair<Elem, int>>, Rational>> seen;
    auto emit = [&](std::vector<std::pair<Elem, int>> form, Rational bound, Condition c) {
        std::sort(form.begin(), form.end());
        if (seen.emplace(form, bound).second) h.inequalities.push_back({std::move(form), std::move(bound), c});
    };

    for (Elem a = 0; a < p.size(); ++a) emit({{a, -1}}, 0, Condition::Box);

    for (Elem a = 0; a < p.size(); ++a)
        for (Elem b = 0; b < p.size(); ++b)
            if (p.less(a, b) && part.in_order(a) && part.in_order(b)) emit({{a, -1}, {b, 1}}, 0, Condition::Order);

    for (const auto& chain : maximal_chains(p, part, std::nullopt)) {
        std::vector<std::pair<Elem, int>> form;
        for (Elem e : chain) form.emplace_back(e, 1);
        emit(std::move(form), 1, Condition::Chain);
    }

    for (Elem q = 0; q < p.size(); ++q) {
        if (!part.in_order(q)) continue;
        for (const auto& chain : maximal_chains(p, part, q)) {
            std::vector<std::pair<Elem, int>> form{{q, -1}};
            for (Elem e : chain) form.emplace_back(e, 1);
            emit(std::move(form), 0, Condition::Dominated);
        }
    }
    return h;
}

bool satisfies(const PolytopeHRep& h, const RationalPoint& x, std::int64_t t)
{
    return satisfies_impl(h, x, t);
}

bool satisfies(const PolytopeHRep& h, const IntPoint& x, std::int64_t t)
{
    if (x.size() != h.dim) throw InvalidArgument("point has wrong dimension");
    for (const auto& ineq : h.inequalities) {
        std::int64_t lhs = 0;
        for (auto [e, c] : ineq.form) lhs += c * x[e];
        if (exceeds(lhs, ineq.bound, t)) return false;
    }
    return true;
}

RationalPoint zeta(const Poset& p, const ChainOrderPartition& part, const RationalPoint& x)
{
    return zeta_impl(p, part, x);
}

IntPoint zeta(const Poset& p, const ChainOrderPartition& part, const IntPoint& x)
{
    return zeta_impl(p, part, x);
}

RationalPoint zeta_prime(const Poset& p, const ChainOrderPartition& part, const RationalPoint& x)
{
    return zeta_prime_impl(p, part, x);
}

IntPoint zeta_prime(const Poset& p, const ChainOrderPartition& part, const IntPoint& x)
{
    return zeta_prime_impl(p, part, x);
}

ElementSet k_set(const Poset& p, const ChainOrderPartition& part, const OrderIdeal& j)
{
    if (!p.is_ideal(j)) throw InvalidArgument("k_set: input is not an order ideal");
    return (j & part.order_part) | (p.maximal_elements(j) & part.chain_part);
}

IntPoint indicator(const ElementSet& s)
{
    IntPoint x(s.universe(), 0);
    for (Elem e : s.members()) x[e] = 1;
    return x;
}

OrderIdeal odot_ideals(const Poset& p, const ChainOrderPartition& part, const OrderIdeal& j1,
                       const OrderIdeal& j2)
{
    if (!p.is_ideal(j1) || !p.is_ideal(j2)) throw InvalidArgument("odot_ideals: input is not an order ideal");
    IntPoint k1 = indicator(k_set(p, part, j1));
    IntPoint k2 = indicator(k_set(p, part, j2));
    IntPoint ku = indicator(k_set(p, part, j1 | j2));
    ElementSet d(p.size());
    for (Elem a = 0; a < p.size(); ++a) {
        auto v = k1[a] + k2[a] - ku[a];
        check(v == 0 || v == 1, "odot_ideals: indicator combination is not 0/1 at " + p.id(a));
        if (v == 1) d.insert(a);
    }
    OrderIdeal out = p.down_closure(d);
    check(k_set(p, part, out) == d, "odot_ideals: K-set of the closure differs from D");
    return out;
}

std::vector<IntPoint> dilation_points(const Poset& p, const ChainOrderPartition& part, int t)
{
    validate_partition(p, part);
    if (t < 0) throw InvalidArgument("dilation factor must be nonnegative");
    if (p.size() > 62) throw CapacityError("dilation_points is limited to 62 elements");
    PolytopeHRep h = interpolating_hrep(p, part);

    // y = number of chain members containing each element; order-reversing
    // maps P -> {0..t} correspond to decreasing chains J_1 >= ... >= J_t.
    const auto& ext = p.linear_extension();
    std::vector<IntPoint> out;
    IntPoint y(p.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ext.size()) {
            IntPoint x(p.size(), 0);
            for (int level = 1; level <= t; ++level) {
                OrderIdeal j(p.size());
                for (Elem a = 0; a < p.size(); ++a)
                    if (y[a] >= level) j.insert(a);
                for (Elem a : k_set(p, part, j).members()) ++x[a];
            }
            check(satisfies(h, x, t), "dilation point violates the scaled inequalities");
            out.push_back(std::move(x));
            return;
        }
        Elem a = ext[i];
        std::int64_t hi = t;
        for (Elem b : p.lower_covers(a)) hi = std::min(hi, y[b]);
        for (std::int64_t v = 0; v <= hi; ++v) {
            y[a] = v;
            rec(i + 1);
        }
        y[a] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntPoint> minkowski_decompose(const Poset& p, const ChainOrderPartition& part, const IntPoint& x, int t)
{
    validate_partition(p, part);
    return minkowski_decompose(p, part, interpolating_hrep(p, part), x, t);
}

std::vector<IntPoint> minkowski_decompose(const Poset& p, const ChainOrderPartition& part, const PolytopeHRep& h,
                                          const IntPoint& x, int t)
{
    if (t < 1) throw InvalidArgument("minkowski_decompose needs t >= 1");
    if (x.size() != p.size() || !satisfies(h, x, t)) throw InvalidArgument("point is not in the dilated polytope");

    IntPoint y = zeta_prime(p, part, x);
    std::vector<IntPoint> parts;
    IntPoint sum(p.size(), 0);
    for (int level = 1; level <= t; ++level) {
        OrderIdeal j(p.size());
        for (Elem a = 0; a < p.size(); ++a)
            if (y[a] >= level) j.insert(a);
        check(p.is_ideal(j), "level set of the transfer image is not an order ideal");
        IntPoint xi = indicator(k_set(p, part, j));
        for (Elem a = 0; a < p.size(); ++a) sum[a] += xi[a];
        parts.push_back(std::move(xi));
    }
    check(sum == x, "Minkowski summands do not add up to the input");
    return parts;
}

std::vector<IntPoint> enumerate_lattice_points(const PolytopeHRep& h, int t)
{
    const std::size_t n = h.dim;
    std::vector<std::vector<const PolytopeInequality*>> due(n + 1);
    for (const auto& ineq : h.inequalities) {
        std::size_t last = 0;
        for (auto [e, c] : ineq.form) last = std::max<std::size_t>(last, e + 1);
        due[last].push_back(&ineq);
    }
    auto ok = [&](const IntPoint& x, std::size_t k) {
        for (const auto* ineq : due[k]) {
            std::int64_t lhs = 0;
            for (auto [e, c] : ineq->form) lhs += c * x[e];
            if (exceeds(lhs, ineq->bound, t)) return false;
        }
        return true;
    };

    std::vector<IntPoint> out;
    IntPoint x(n, 0);
    if (!ok(x, 0)) return out;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.push_back(x);
            return;
        }
        for (int v = 0; v <= t; ++v) {
            x[i] = v;
            if (ok(x, i + 1)) rec(i + 1);
        }
        x[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace pf
