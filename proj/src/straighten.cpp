#include "plueckerfan/straighten.hpp"

#include <algorithm>
#include <sstream>

namespace pf {

Monomial make_monomial(std::vector<Entries> factors)
{
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<int> monomial_deg(const Monomial& m, int n)
{
    std::vector<int> d(static_cast<std::size_t>(std::max(n - 1, 1)), 0);
    for (const auto& f : m) {
        check(!f.empty() && static_cast<int>(f.size()) <= n, "factor length out of range");
        ++d.at(f.size() - 1);
    }
    return d;
}

std::vector<int> monomial_wt(const Monomial& m, int n)
{
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (const auto& f : m)
        for (auto i : f) ++w.at(i - 1);
    return w;
}

Rational Polynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::add_tuples(const std::vector<Entries>& factors, const Rational& c)
{
    Monomial m;
    int sign = 1;
    for (const auto& f : factors) {
        auto sc = canonicalize(f);
        if (!sc) return;
        sign *= sc->sign;
        m.push_back(sc->column);
    }
    add(make_monomial(std::move(m)), sign * c);
}

void Polynomial::add_scaled(const Polynomial& p, const Rational& c)
{
    if (c == 0) return;
    for (const auto& [m, x] : p.terms_) add(m, c * x);
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial out;
    out.add_scaled(*this, c);
    return out;
}

std::size_t Polynomial::max_degree() const
{
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
}

bool Polynomial::deg_homogeneous(int n) const
{
    return deg_components(n).size() <= 1;
}

bool Polynomial::wt_homogeneous(int n) const
{
    std::optional<std::vector<int>> w;
    for (const auto& [m, c] : terms_) {
        auto x = monomial_wt(m, n);
        if (w && *w != x) return false;
        w = x;
    }
    return true;
}

std::map<std::vector<int>, Polynomial> Polynomial::deg_components(int n) const
{
    std::map<std::vector<int>, Polynomial> out;
    for (const auto& [m, c] : terms_) out[monomial_deg(m, n)].add(m, c);
    return out;
}

std::string format_polynomial(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1) os << to_string(a) << "*";
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "*" : "") << "X[" << format_entries(m[i]) << "]";
        first = false;
    }
    return os.str();
}

namespace {

void check_tuple(const Entries& e, int n, const char* what)
{
    if (e.empty()) throw InvalidArgument(std::string(what) + ": empty column");
    for (auto i : e)
        if (i < 1 || i > n) throw InvalidArgument(std::string(what) + ": index out of range in " + format_entries(e));
}

void check_shape(const Entries& a, const Entries& b, int r, int n, const char* what)
{
    check_tuple(a, n, what);
    check_tuple(b, n, what);
    if (a.size() < b.size()) throw InvalidArgument(std::string(what) + ": the first column must be at least as long");
    if (r < 1 || r > static_cast<int>(b.size())) throw InvalidArgument(std::string(what) + ": position out of range");
}

// Lattice coefficient of X_a X_b equal to 1.
void normalize_tuple_product(Polynomial& p, const Entries& a, const Entries& b)
{
    auto sa = canonicalize(a), sb = canonicalize(b);
    if (!sa || !sb) return;
    Monomial m = make_monomial({sa->column, sb->column});
    Rational c = p.coeff(m);
    if (c == 0) return;
    p = p.scaled(Rational(sa->sign * sb->sign) / c);
}

}  // namespace

Polynomial exchange_relation(const Entries& a, const Entries& b, int r, int n)
{
    check_shape(a, b, r, n, "exchange_relation");
    Polynomial p;
    p.add_tuples({a, b}, 1);
    for (std::size_t s = 0; s < a.size(); ++s) {
        Entries a2 = a, b2 = b;
        std::swap(a2[s], b2[r - 1]);
        p.add_tuples({a2, b2}, -1);
    }
    return p;
}

Polynomial shuffle_relation(const Entries& a, const Entries& b, int r, int n)
{
    check_shape(a, b, r, n, "shuffle_relation");
    const int k = static_cast<int>(a.size());
    Entries z;
    for (int i = 0; i < r; ++i) z.push_back(b[i]);
    for (int i = r - 1; i < k; ++i) z.push_back(a[i]);
    const int size = k + 1;

    Polynomial p;
    // Subsets T of size r of the symbol positions; T goes to the second factor.
    std::vector<int> t(r);
    for (int i = 0; i < r; ++i) t[i] = i;
    while (true) {
        Entries first(a.begin(), a.begin() + (r - 1)), second;
        int sum = 0;
        std::size_t ti = 0;
        for (int i = 0; i < size; ++i) {
            if (ti < t.size() && t[ti] == i) {
                second.push_back(z[i]);
                sum += i;
                ++ti;
            } else {
                first.push_back(z[i]);
            }
        }
        for (std::size_t i = r; i < b.size(); ++i) second.push_back(b[i]);
        int sign = ((sum - r * (r - 1) / 2) % 2 == 0) ? 1 : -1;
        p.add_tuples({first, second}, sign);

        int i = r - 1;
        while (i >= 0 && t[i] == size - r + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < r; ++j) t[j] = t[j - 1] + 1;
    }
    normalize_tuple_product(p, a, b);
    return p;
}

Polynomial append_columns(const Polynomial& rel, const Entries& extra, int n)
{
    Polynomial out;
    for (const auto& [m, c] : rel.terms()) {
        if (m.size() != 2) throw InvalidArgument("append_columns: relation is not quadratic");
        const Entries& x = m[0].size() <= m[1].size() ? m[0] : m[1];
        const Entries& y = m[0].size() <= m[1].size() ? m[1] : m[0];
        if (y.size() - x.size() != extra.size()) throw InvalidArgument("append_columns: shape mismatch");
        Entries longer = x;
        for (auto e : extra) {
            if (e < 1 || e > n) throw InvalidArgument("append_columns: index out of range");
            longer.push_back(e);
        }
        out.add_tuples({y, longer}, c);
    }
    return out;
}

Polynomial apply_index_permutation(const Polynomial& p, const std::vector<int>& perm, int n)
{
    if (static_cast<int>(perm.size()) != n + 1) throw InvalidArgument("permutation has the wrong size");
    std::vector<bool> seen(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (perm[i] < 1 || perm[i] > n || seen[perm[i]]) throw InvalidArgument("not a permutation");
        seen[perm[i]] = true;
    }
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Entries> fs;
        for (const auto& f : m) {
            Entries g;
            for (auto i : f) g.push_back(static_cast<std::uint8_t>(perm[i]));
            fs.push_back(g);
        }
        out.add_tuples(fs, c);
    }
    return out;
}

std::pair<Elem, Elem> orient_pair(const PluckerLattice& lat, Elem x, Elem y)
{
    const auto lx = lat.labels[x].size(), ly = lat.labels[y].size();
    if (lx != ly) return lx > ly ? std::pair{x, y} : std::pair{y, x};
    // Equal lengths: kind M moves the first factor down and kind N moves it
    // up, so the grade of the first factor is a potential for termination.
    const int gx = lat.grade(x), gy = lat.grade(y);
    bool x_first = lat.kind == LatticeKind::M ? (gx < gy || (gx == gy && x < y))
                                              : (gx > gy || (gx == gy && x < y));
    return x_first ? std::pair{x, y} : std::pair{y, x};
}

int pivot_position(const PluckerLattice& lat, Elem first, Elem second)
{
    const Entries& a = lat.labels[first];
    const Entries& b = lat.labels[second];
    const int l = static_cast<int>(b.size()), k = static_cast<int>(a.size());
    if (lat.kind == LatticeKind::M) {
        for (int r = 1; r <= l; ++r)
            if (a[r - 1] > b[r - 1]) return r;
        return 0;
    }
    for (int r = 1; r <= l; ++r) {
        bool all_less = true;
        for (int j = r; j <= k && all_less; ++j) all_less = a[j - 1] < b[r - 1];
        if (all_less) return r;
    }
    return 0;
}

Monomial lattice_monomial(const PluckerLattice& lat, Elem a, Elem b)
{
    return make_monomial({column_from_mask(mask_of(lat.labels[a])), column_from_mask(mask_of(lat.labels[b]))});
}

int lattice_sign(const PluckerLattice& lat, Elem a, Elem b)
{
    return lat.label_sign(a) * lat.label_sign(b);
}

std::vector<LatticeTerm> lattice_terms(const PluckerLattice& lat, const Polynomial& p)
{
    std::vector<LatticeTerm> out;
    for (const auto& [m, c] : p.terms()) {
        check(m.size() == 2, "lattice_terms: relation is not quadratic");
        Elem x = lat.of_mask(mask_of(m[0])), y = lat.of_mask(mask_of(m[1]));
        if (lat.lattice.leq(y, x) && x != y) std::swap(x, y);
        if (!lat.lattice.leq(x, y) && x > y) std::swap(x, y);
        out.push_back({c * lattice_sign(lat, x, y), x, y});
    }
    return out;
}

Straightening straighten_pair(const PluckerLattice& lat, Elem a, Elem b)
{
    if (a >= lat.size() || b >= lat.size()) throw InvalidArgument("straighten_pair: unknown element");
    if (lat.lattice.comparable(a, b))
        throw ComparablePair(lat.name(a) + " and " + lat.name(b) + " are comparable; the monomial is standard");

    Straightening st;
    st.a = a;
    st.b = b;
    const Monomial lead = lattice_monomial(lat, a, b);

    auto shuffle_for = [&](Elem x, Elem y) {
        auto [first, second] = orient_pair(lat, x, y);
        int r = pivot_position(lat, first, second);
        check(r > 0, "no shuffle position for an incomparable pair");
        return shuffle_relation(lat.labels[first], lat.labels[second], r, lat.n);
    };

    Polynomial p = shuffle_for(a, b);
    const std::size_t cap = 1000000;
    while (true) {
        const Monomial* pick = nullptr;
        Elem x = 0, y = 0;
        for (const auto& [m, c] : p.terms()) {
            if (m == lead) continue;
            Elem u = lat.of_mask(mask_of(m[0])), v = lat.of_mask(mask_of(m[1]));
            if (!lat.lattice.comparable(u, v)) {
                pick = &m;
                x = u;
                y = v;
                break;
            }
        }
        if (!pick) break;
        check(++st.steps < cap, "straightening did not terminate");
        Monomial m = *pick;
        Polynomial rel = shuffle_for(x, y);
        Rational k = rel.coeff(m);
        check(k != 0, "shuffle relation lost its leading monomial");
        p.add_scaled(rel, -p.coeff(m) / k);
    }

    Rational lc = p.coeff(lead) * lattice_sign(lat, a, b);
    check(lc != 0, "the leading monomial cancelled during straightening");
    if (lc != 1) p = p.scaled(1 / lc);
    st.relation = p;

    // s(a,b) = X_a X_b - sum c_i X_p X_q.
    for (auto t : lattice_terms(lat, p)) {
        if (lattice_monomial(lat, t.p, t.q) == lead) continue;
        st.terms.push_back({-t.coeff, t.p, t.q});
    }
    Elem join = lat.lattice.join(a, b);
    std::stable_sort(st.terms.begin(), st.terms.end(), [&](const LatticeTerm& u, const LatticeTerm& v) {
        bool uj = u.q == join, vj = v.q == join;
        if (uj != vj) return uj;
        return std::pair(u.q, u.p) < std::pair(v.q, v.p);
    });
    return st;
}

Elem BirkhoffData::element_of(const OrderIdeal& j) const
{
    for (Elem e = 0; e < iota.size(); ++e)
        if (iota[e] == j) return e;
    throw InvalidArgument("not the ideal of any lattice element");
}

BirkhoffData birkhoff_data(const DistributiveLattice& l)
{
    BirkhoffData bd;
    bd.ji = join_irreducibles(l);
    for (Elem a = 0; a < l.size(); ++a) bd.iota.push_back(birkhoff_iso(l, a));
    return bd;
}

BirkhoffData birkhoff_data(const PluckerLattice& lat)
{
    return BirkhoffData{lat.ji_poset, lat.iota};
}

Elem odot_element(const BirkhoffData& bd, const ChainOrderPartition& part, Elem a, Elem b)
{
    return bd.element_of(odot_ideals(bd.ji, part, bd.iota.at(a), bd.iota.at(b)));
}

LatticePolynomial hibi_generator(const DistributiveLattice& l, Elem a, Elem b, const BirkhoffData* bd,
                                 const ChainOrderPartition* part)
{
    if (l.comparable(a, b)) throw ComparablePair("hibi_generator: the elements are comparable");
    Elem lower = l.meet(a, b);
    if (part) {
        check(bd != nullptr, "hibi_generator: a partition needs the Birkhoff data");
        lower = odot_element(*bd, *part, a, b);
    }
    LatticePolynomial p;
    LatticeMonomial x{std::min(a, b), std::max(a, b)};
    LatticeMonomial y{std::min(lower, l.join(a, b)), std::max(lower, l.join(a, b))};
    p[x] += 1;
    p[y] -= 1;
    if (part) {
        auto tx = theta_exponent(*bd, *part, x), ty = theta_exponent(*bd, *part, y);
        check(tx == ty, "generalized binomial is not in the kernel of theta");
    }
    return p;
}

std::vector<long> theta_exponent(const BirkhoffData& bd, const ChainOrderPartition& part, const LatticeMonomial& m)
{
    std::vector<long> e(bd.ji.size() + 1, 0);
    for (Elem a : m) {
        for (Elem p : k_set(bd.ji, part, bd.iota.at(a)).members()) ++e[p];
        ++e.back();
    }
    return e;
}

PsiExponent psi_exponent(const Entries& pbw, int n)
{
    if (!is_pbw_column(pbw, n)) throw InvalidArgument("psi_exponent: not a PBW column: " + format_entries(pbw));
    const int k = static_cast<int>(pbw.size());
    PsiExponent e;
    ++e[{0, k}];
    for (int j = 1; j <= k; ++j)
        if (pbw[j - 1] > k) ++e[{j, pbw[j - 1]}];
    return e;
}

PsiExponent theta_substituted(const PluckerLattice& nlat, const LatticeMonomial& m)
{
    auto bd = birkhoff_data(nlat);
    auto raw = theta_exponent(bd, nlat.partition, m);
    PsiExponent e;
    for (std::size_t p = 0; p + 1 < raw.size(); ++p) {
        if (!raw[p]) continue;
        auto [r, s] = nlat.ji_coords[p];
        if (r == s) {
            e[{0, r}] += raw[p];
            e[{0, r - 1}] -= raw[p];
        } else {
            e[{r, s}] += raw[p];
        }
    }
    e[{0, 1}] += raw.back();
    for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
    return e;
}

bool grevlex_less(const LatticeMonomial& x, const LatticeMonomial& y, const std::vector<std::size_t>& rank)
{
    if (x.size() != y.size()) return x.size() < y.size();
    auto sorted = [&](LatticeMonomial m) {
        std::sort(m.begin(), m.end(), [&](Elem u, Elem v) { return rank[u] < rank[v]; });
        return m;
    };
    auto sx = sorted(x), sy = sorted(y);
    for (std::size_t i = sx.size(); i-- > 0;)
        if (sx[i] != sy[i]) return rank[sx[i]] < rank[sy[i]];
    return false;
}

std::vector<std::size_t> grade_linearization(const DistributiveLattice& l)
{
    std::vector<Elem> order(l.size());
    for (Elem e = 0; e < l.size(); ++e) order[e] = e;
    std::stable_sort(order.begin(), order.end(), [&](Elem u, Elem v) { return l.grade(u) < l.grade(v); });
    std::vector<std::size_t> rank(l.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    return rank;
}

LatticeMonomial grevlex_initial(const LatticePolynomial& p, const std::vector<std::size_t>& rank)
{
    check(!p.empty(), "grevlex_initial of zero");
    const LatticeMonomial* best = nullptr;
    for (const auto& [m, c] : p) {
        if (c == 0) continue;
        if (!best || grevlex_less(m, *best, rank)) best = &m;
    }
    check(best != nullptr, "grevlex_initial of zero");
    return *best;
}

}  // namespace pf
