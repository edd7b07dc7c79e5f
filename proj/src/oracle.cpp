#include "plueckerfan/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace pf {

namespace fp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
        if (e & 1) r = mul(r, a);
    return r;
}

std::uint64_t inv(std::uint64_t a)
{
    check(a % kPrime != 0, "inverse of zero in the prime field");
    return pow(a, kPrime - 2);
}

std::uint64_t from_rational(const Rational& q)
{
    mpz_class p(std::to_string(kPrime));
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw InvalidArgument("coefficient denominator divisible by the field characteristic");
    return mul(std::stoull(num.get_str()), inv(std::stoull(den.get_str())));
}

std::optional<Rational> reconstruct(std::uint64_t x)
{
    // Extended Euclid on (p, x) stopped at r < sqrt(p/2).
    mpz_class p(std::to_string(kPrime)), bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(p / 2).get_mpz_t());
    mpz_class r0 = p, r1 = mpz_class(std::to_string(x)), t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational out(r1, t1);
    out.canonicalize();
    return out;
}

namespace {

// Gaussian elimination to row echelon form; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::uint64_t>& m, std::size_t cols, std::size_t eliminate_cols)
{
    const std::size_t rows = cols ? m.size() / cols : 0;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < eliminate_cols && row < rows; ++c) {
        std::size_t piv = row;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[row * cols + j]);
        std::uint64_t iv = inv(m[row * cols + c]);
        for (std::size_t j = c; j < cols; ++j) m[row * cols + j] = mul(m[row * cols + j], iv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i * cols + c] == 0) continue;
            std::uint64_t f = m[i * cols + c];
            for (std::size_t j = c; j < cols; ++j) m[i * cols + j] = sub(m[i * cols + j], mul(f, m[row * cols + j]));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(std::vector<std::uint64_t>& m, std::size_t cols)
{
    return eliminate(m, cols, cols).size();
}

std::optional<std::vector<std::uint64_t>> solve(std::vector<std::uint64_t> m, std::vector<std::uint64_t> rhs,
                                                std::size_t cols)
{
    const std::size_t rows = cols ? m.size() / cols : rhs.size();
    check(rhs.size() == rows, "solve: shape mismatch");
    std::vector<std::uint64_t> aug(rows * (cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i * (cols + 1) + j] = m[i * cols + j];
        aug[i * (cols + 1) + cols] = rhs[i];
    }
    auto pivots = eliminate(aug, cols + 1, cols);
    if (pivots.size() != cols) return std::nullopt;
    for (std::size_t i = cols; i < rows; ++i)
        if (aug[i * (cols + 1) + cols] != 0) return std::nullopt;
    std::vector<std::uint64_t> x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[i] = aug[i * (cols + 1) + cols];
    return x;
}

}  // namespace fp

FieldMatrix random_matrix(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, fp::kPrime - 1);
    FieldMatrix m{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n * n))};
    for (auto& x : m.z) x = dist(rng);
    return m;
}

FieldMatrix identity_matrix(int n)
{
    FieldMatrix m{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n * n), 0)};
    for (int i = 0; i < n; ++i) m.z[static_cast<std::size_t>(i * n + i)] = 1;
    return m;
}

std::uint64_t plucker_minor(const FieldMatrix& z, const Entries& cols)
{
    const std::size_t k = cols.size();
    std::vector<std::uint64_t> a(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (cols[j] < 1 || cols[j] > z.n) throw InvalidArgument("plucker_eval: index out of range");
            a[i * k + j] = z.at(static_cast<int>(i + 1), cols[j]);
        }
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && a[piv * k + c] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a[piv * k + j], a[c * k + j]);
            det = fp::sub(0, det);
        }
        det = fp::mul(det, a[c * k + c]);
        std::uint64_t iv = fp::inv(a[c * k + c]);
        for (std::size_t i = c + 1; i < k; ++i) {
            std::uint64_t f = fp::mul(a[i * k + c], iv);
            if (!f) continue;
            for (std::size_t j = c; j < k; ++j) a[i * k + j] = fp::sub(a[i * k + j], fp::mul(f, a[c * k + j]));
        }
    }
    return det;
}

std::uint64_t plucker_eval(const Polynomial& p, const FieldMatrix& z)
{
    std::map<Entries, std::uint64_t> cache;
    auto minor = [&](const Entries& c) {
        auto it = cache.find(c);
        if (it != cache.end()) return it->second;
        return cache[c] = plucker_minor(z, c);
    };
    std::uint64_t total = 0;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t v = fp::from_rational(c);
        for (const auto& f : m) v = fp::mul(v, minor(f));
        total = fp::add(total, v);
    }
    return total;
}

std::string mode_name(OracleMode m)
{
    return m == OracleMode::Symbolic ? "symbolic" : "probabilistic";
}

OracleMode parse_mode(const std::string& s)
{
    if (s == "symbolic") return OracleMode::Symbolic;
    if (s == "probabilistic") return OracleMode::Probabilistic;
    throw InvalidArgument("unknown oracle mode '" + s + "'");
}

namespace {

// Polynomials in z_{i,j}: a monomial is the sorted list of variable indices.
using ZMonomial = std::vector<std::uint8_t>;
using ZPoly = std::map<ZMonomial, mpz_class>;

ZPoly symbolic_minor(const Entries& cols, int n)
{
    const int k = static_cast<int>(cols.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    ZPoly out;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
        ZMonomial m;
        for (int i = 0; i < k; ++i) m.push_back(static_cast<std::uint8_t>(i * n + (cols[perm[i]] - 1)));
        std::sort(m.begin(), m.end());
        out[m] += inversions % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ZPoly multiply(const ZPoly& x, const ZPoly& y)
{
    ZPoly out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            ZMonomial m;
            std::merge(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(m));
            out[m] += cx * cy;
        }
    return out;
}

bool symbolic_zero(const Polynomial& p, int n)
{
    // Clear denominators, then expand with integer coefficients.
    mpz_class l = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::map<Entries, ZPoly> minors;
    ZPoly total;
    for (const auto& [m, c] : p.terms()) {
        ZPoly prod{{ZMonomial{}, mpz_class(c * l)}};
        for (const auto& f : m) {
            auto it = minors.find(f);
            if (it == minors.end()) it = minors.emplace(f, symbolic_minor(f, n)).first;
            prod = multiply(prod, it->second);
        }
        for (auto& [zm, zc] : prod) total[zm] += zc;
    }
    for (const auto& [zm, zc] : total)
        if (zc != 0) return false;
    return true;
}

}  // namespace

MembershipVerdict ideal_membership(const Polynomial& p, int n, OracleMode mode, int trials, std::uint64_t seed)
{
    MembershipVerdict v;
    v.method = mode;
    if (mode == OracleMode::Symbolic) {
        if (p.max_degree() > 3 || n > 6) throw CapacityError("symbolic membership is limited to degree 3 and n <= 6");
        v.member = true;
        for (const auto& [d, comp] : p.deg_components(n)) v.member = v.member && symbolic_zero(comp, n);
        return v;
    }
    if (trials < 1) throw InvalidArgument("at least one trial is needed");
    std::mt19937_64 rng(seed);
    v.member = true;
    std::size_t degree = 0;
    for (const auto& [m, c] : p.terms()) {
        std::size_t d = 0;
        for (const auto& f : m) d += f.size();
        degree = std::max(degree, d);
    }
    auto comps = p.deg_components(n);
    for (int t = 0; t < trials && v.member; ++t) {
        auto z = random_matrix(n, rng);
        for (const auto& [d, comp] : comps)
            if (plucker_eval(comp, z) != 0) v.member = false;
    }
    if (v.member) {
        mpz_class num = static_cast<unsigned long>(degree), den(std::to_string(fp::kPrime));
        mpz_pow_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(trials));
        mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(trials));
        v.failure_bound = Rational(num, den);
        v.failure_bound.canonicalize();
    }
    return v;
}

namespace {

// Multisets of size count from the given columns.
void multisets(const std::vector<Entries>& cols, int count, std::size_t start, std::vector<Entries>& cur,
               std::vector<std::vector<Entries>>& out)
{
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < cols.size(); ++i) {
        cur.push_back(cols[i]);
        multisets(cols, count - 1, i, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> monomials_of_degree(int n, const std::vector<int>& lambda)
{
    std::vector<Monomial> out{Monomial{}};
    for (int k = 1; k < n; ++k) {
        if (!lambda[k - 1]) continue;
        std::vector<Entries> cols;
        for (SetMask m = 1; m < (SetMask{1} << n); ++m)
            if (__builtin_popcount(m) == k) cols.push_back(column_from_mask(m));
        std::sort(cols.begin(), cols.end());
        std::vector<std::vector<Entries>> choices;
        std::vector<Entries> cur;
        multisets(cols, lambda[k - 1], 0, cur, choices);
        std::vector<Monomial> next;
        for (const auto& base : out)
            for (const auto& c : choices) {
                Monomial m = base;
                m.insert(m.end(), c.begin(), c.end());
                next.push_back(make_monomial(m));
            }
        out = std::move(next);
    }
    return out;
}

bool is_standard(const PluckerLattice& lat, const Monomial& m)
{
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!lat.lattice.comparable(lat.of_mask(mask_of(m[i])), lat.of_mask(mask_of(m[j])))) return false;
    return true;
}

std::vector<std::uint64_t> evaluation_matrix(const std::vector<Monomial>& ms, int n, std::size_t rows,
                                             std::mt19937_64& rng)
{
    std::vector<std::uint64_t> out(rows * ms.size());
    for (std::size_t r = 0; r < rows; ++r) {
        auto z = random_matrix(n, rng);
        std::map<Entries, std::uint64_t> cache;
        for (std::size_t c = 0; c < ms.size(); ++c) {
            std::uint64_t v = 1;
            for (const auto& f : ms[c]) {
                auto it = cache.find(f);
                if (it == cache.end()) it = cache.emplace(f, plucker_minor(z, f)).first;
                v = fp::mul(v, it->second);
            }
            out[r * ms.size() + c] = v;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> multidegrees(int n, int max_total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n - 1), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            if (left != max_total) out.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[pos] = c;
            self(self, pos + 1, left - c);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, max_total);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int sx = std::accumulate(x.begin(), x.end(), 0), sy = std::accumulate(y.begin(), y.end(), 0);
        return sx != sy ? sx < sy : x > y;
    });
    return out;
}

StandardBasisReport standard_basis_check(const PluckerLattice& lat, const std::vector<int>& lambda,
                                         std::uint64_t seed)
{
    const int n = lat.n;
    if (static_cast<int>(lambda.size()) != n - 1) throw InvalidArgument("multidegree has the wrong length");
    int total = 0;
    for (int x : lambda) {
        if (x < 0) throw InvalidArgument("negative multidegree");
        total += x;
    }
    if (total > 3 || n > 5) throw CapacityError("standard_basis_check is limited to degree 3 and n <= 5");

    StandardBasisReport rep;
    auto all = monomials_of_degree(n, lambda);
    std::vector<Monomial> standard;
    for (const auto& m : all)
        if (is_standard(lat, m)) standard.push_back(m);
    rep.monomials = all.size();
    rep.standard = standard.size();
    // Take the largest rank over three seeds so that an unlucky point set
    // cannot lower the count.
    for (std::uint64_t s = 0; s < 3; ++s) {
        std::mt19937_64 rng(seed * 3 + s);
        const std::size_t rows = all.size() + 8;
        auto ma = evaluation_matrix(all, n, rows, rng);
        rep.rank_all = std::max(rep.rank_all, fp::rank(ma, all.size()));
        auto ms = evaluation_matrix(standard, n, rows, rng);
        rep.rank_standard = std::max(rep.rank_standard, fp::rank(ms, standard.size()));
    }
    return rep;
}

StandardExpansion standard_expansion(const PluckerLattice& lat, Elem a, Elem b, std::uint64_t seed)
{
    const int n = lat.n;
    Monomial target = lattice_monomial(lat, a, b);
    auto deg = monomial_deg(target, n);
    auto wt = monomial_wt(target, n);
    std::vector<std::pair<Elem, Elem>> basis;
    std::vector<Monomial> ms;
    for (Elem p = 0; p < lat.size(); ++p)
        for (Elem q = 0; q < lat.size(); ++q) {
            if (!lat.lattice.leq(p, q)) continue;
            Monomial m = lattice_monomial(lat, p, q);
            if (monomial_deg(m, n) != deg || monomial_wt(m, n) != wt) continue;
            basis.emplace_back(p, q);
            ms.push_back(m);
        }
    std::mt19937_64 rng(seed);
    const std::size_t rows = ms.size() + 8;
    std::vector<Monomial> cols = ms;
    cols.push_back(target);
    auto full = evaluation_matrix(cols, n, rows, rng);
    std::vector<std::uint64_t> m(rows * ms.size()), rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < ms.size(); ++c)
            m[r * ms.size() + c] = fp::mul(full[r * cols.size() + c], fp::from_rational(lattice_sign(lat, basis[c].first, basis[c].second)));
        rhs[r] = fp::mul(full[r * cols.size() + ms.size()], fp::from_rational(lattice_sign(lat, a, b)));
    }
    auto x = fp::solve(m, rhs, ms.size());
    check(x.has_value(), "standard expansion: no unique solution");
    StandardExpansion out;
    for (std::size_t c = 0; c < ms.size(); ++c) {
        if ((*x)[c] == 0) continue;
        auto q = fp::reconstruct((*x)[c]);
        if (!q) out.reconstructed = false;
        out.terms.push_back({q.value_or(0), basis[c].first, basis[c].second});
        out.residues.push_back((*x)[c]);
    }
    return out;
}

}  // namespace pf
