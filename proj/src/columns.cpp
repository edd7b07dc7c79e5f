#include "plueckerfan/columns.hpp"

#include <algorithm>
#include <sstream>

namespace pf {

std::optional<SignedColumn> canonicalize(const Entries& indices, int n)
{
    SignedColumn out;
    out.column = indices;
    for (auto i : indices)
        if (i < 1 || (n > 0 && i > n))
            throw InvalidArgument("index " + std::to_string(i) + " out of range");
    // Insertion sort, counting transpositions.
    auto& c = out.column;
    for (std::size_t i = 1; i < c.size(); ++i)
        for (std::size_t j = i; j > 0 && c[j - 1] > c[j]; --j) {
            std::swap(c[j - 1], c[j]);
            out.sign = -out.sign;
        }
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] == c[i]) return std::nullopt;
    return out;
}

Entries make_entries(std::initializer_list<int> xs)
{
    Entries e;
    for (int x : xs) e.push_back(static_cast<std::uint8_t>(x));
    return e;
}

std::string format_entries(const Entries& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s;
}

Entries parse_entries(const std::string& s)
{
    Entries e;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw InvalidArgument("malformed index tuple '" + s + "'");
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("malformed index tuple '" + s + "'");
        }
        if (v < 1 || v > kMaxN || e.size() == e.capacity()) throw InvalidArgument("index out of range in '" + s + "'");
        e.push_back(static_cast<std::uint8_t>(v));
    }
    if (e.empty()) throw InvalidArgument("empty index tuple");
    return e;
}

bool is_column(const Entries& e, int n)
{
    if (e.empty() || static_cast<int>(e.size()) > n - 1) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n) return false;
        if (i && e[i - 1] >= e[i]) return false;
    }
    return true;
}

bool is_pbw_column(const Entries& e, int n)
{
    const int k = static_cast<int>(e.size());
    if (k == 0 || k > n - 1) return false;
    if (!canonicalize(e)) return false;
    int last_big = n + 1;
    for (int r = 1; r <= k; ++r) {
        int v = e[r - 1];
        if (v < 1 || v > n) return false;
        if (v <= k) {
            if (v != r) return false;
        } else {
            if (v >= last_big) return false;
            last_big = v;
        }
    }
    return true;
}

SetMask mask_of(const Entries& e)
{
    SetMask m = 0;
    for (auto i : e) m |= SetMask{1} << (i - 1);
    return m;
}

Entries column_from_mask(SetMask m)
{
    Entries e;
    for (int i = 0; i < kMaxN; ++i)
        if (m >> i & 1) e.push_back(static_cast<std::uint8_t>(i + 1));
    return e;
}

Entries pbw_from_mask(SetMask m)
{
    Entries sorted = column_from_mask(m);
    const int k = static_cast<int>(sorted.size());
    Entries out(k, 0);
    std::vector<std::uint8_t> big;
    for (auto v : sorted) {
        if (v <= k) out[v - 1] = v;
        else big.push_back(v);
    }
    std::sort(big.rbegin(), big.rend());
    std::size_t next = 0;
    for (int r = 0; r < k; ++r)
        if (out[r] == 0) out[r] = big[next++];
    return out;
}

bool m_leq(const Entries& a, const Entries& b)
{
    if (a.size() < b.size()) return false;
    for (std::size_t r = 0; r < b.size(); ++r)
        if (a[r] > b[r]) return false;
    return true;
}

Entries m_meet(const Entries& a, const Entries& b)
{
    const Entries& lng = a.size() >= b.size() ? a : b;
    const Entries& sht = a.size() >= b.size() ? b : a;
    Entries out = lng;
    for (std::size_t r = 0; r < sht.size(); ++r) out[r] = std::min(lng[r], sht[r]);
    return out;
}

Entries m_join(const Entries& a, const Entries& b)
{
    const Entries& lng = a.size() >= b.size() ? a : b;
    const Entries& sht = a.size() >= b.size() ? b : a;
    Entries out = sht;
    for (std::size_t r = 0; r < sht.size(); ++r) out[r] = std::max(lng[r], sht[r]);
    return out;
}

int m_grade(const Entries& a, int n)
{
    const int k = static_cast<int>(a.size());
    int sum = 0;
    for (auto i : a) sum += i;
    return sum - k * (k + 1) / 2 + (n - k) * (n - k + 1) / 2 - 1;
}

bool pbw_two_column_leq(const Entries& alpha, const Entries& beta)
{
    const std::size_t k = alpha.size(), l = beta.size();
    if (k < l) return false;
    for (std::size_t r = 0; r < l; ++r) {
        if (beta[r] <= l) continue;
        bool found = false;
        for (std::size_t s = r; s < k && !found; ++s) found = alpha[s] >= beta[r];
        if (!found) return false;
    }
    return true;
}

Entries y_column(int r, int s, int n)
{
    if (r < 1 || r > s || s > n || (r == 1 && s == 1) || (r == n && s == n))
        throw InvalidArgument("no join-irreducible y_{" + std::to_string(r) + "," + std::to_string(s) + "}");
    Entries e;
    for (int i = 1; i <= n; ++i)
        if (i < n - s + 1 || i > n + r - s) e.push_back(static_cast<std::uint8_t>(i));
    return e;
}

std::vector<Coord> ji_coordinates(int n)
{
    std::vector<Coord> out;
    for (int r = 1; r <= n; ++r)
        for (int s = r; s <= n; ++s)
            if (!(r == 1 && s == 1) && !(r == n && s == n)) out.emplace_back(r, s);
    return out;
}

std::vector<Coord> m_ideal_coords(const Entries& a, int n)
{
    std::vector<Coord> out;
    for (auto c : ji_coordinates(n))
        if (m_leq(y_column(c.first, c.second, n), a)) out.push_back(c);
    return out;
}

Entries m_column_of_coords(const std::vector<Coord>& ideal, int n)
{
    Entries out;
    for (int i = 1; i < n; ++i) out.push_back(static_cast<std::uint8_t>(i));
    for (auto c : ideal) out = m_join(out, y_column(c.first, c.second, n));
    auto check_ideal = m_ideal_coords(out, n);
    auto sorted = ideal;
    std::sort(sorted.begin(), sorted.end());
    check(check_ideal == sorted, "coordinate set is not an order ideal of join-irreducibles");
    return out;
}

Entries nu_from_coords(const std::vector<Coord>& ideal, int n)
{
    int k = 1;
    for (auto [r, s] : ideal)
        if (r == s) k = std::max(k, r);
    Entries out;
    for (int i = 1; i <= k; ++i) out.push_back(static_cast<std::uint8_t>(i));
    for (auto c : ideal) {
        if (c.first == c.second) continue;
        bool maximal = true;
        for (auto d : ideal)
            if (d != c && coord_leq(c, d)) maximal = false;
        if (!maximal) continue;
        auto [r, s] = c;
        check(r <= k && s > k, "maximal off-diagonal element outside the expected range");
        out[r - 1] = static_cast<std::uint8_t>(s);
    }
    check(is_pbw_column(out, n), "nu produced an invalid PBW column " + format_entries(out));
    return out;
}

namespace {

std::vector<std::size_t> differing_positions(const Entries& a, const Entries& b)
{
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < std::min(a.size(), b.size()); ++r)
        if (a[r] != b[r]) out.push_back(r);
    return out;
}

std::vector<Coord> minus(std::vector<Coord> a, const std::vector<Coord>& b)
{
    std::vector<Coord> out;
    for (auto c : a)
        if (std::find(b.begin(), b.end(), c) == b.end()) out.push_back(c);
    return out;
}

}  // namespace

MPairInfo classify_m_columns(const Entries& x, const Entries& y, int n)
{
    if (!is_column(x, n) || !is_column(y, n)) throw InvalidArgument("not a column of M(" + std::to_string(n) + ")");
    MPairInfo info;
    info.a = x;
    info.b = y;
    if (m_leq(x, y) || m_leq(y, x)) {
        info.comparable = true;
        return info;
    }
    info.meet = m_meet(x, y);
    info.join = m_join(x, y);
    const int gx = m_grade(x, n), gy = m_grade(y, n);
    info.diamond = gx == gy && m_grade(info.meet, n) == gx - 1 && m_grade(info.join, n) == gx + 1;
    if (!info.diamond) return info;

    // Orientation per the two diamond patterns; i = info.a, j = info.b.
    Entries i = x, j = y;
    if (x.size() == y.size()) {
        auto d = differing_positions(x, y);
        check(d.size() == 2, "equal-length diamond pair differs in " + std::to_string(d.size()) + " positions");
        if (x[d[0]] > y[d[0]]) std::swap(i, j);
        const std::size_t r1 = d[0], r2 = d[1];
        check(i[r1] + 1 == j[r1] && i[r2] == j[r2] + 1, "equal-length diamond pair does not match its pattern");
        info.possibility = 1;

        Entries g = i, h = j;
        g[r1] = i[r1];
        g[r1 + 1] = j[r1];
        for (std::size_t r = r1 + 2; r <= r2; ++r) g[r] = i[r - 1];
        for (std::size_t r = r1; r + 2 <= r2; ++r) h[r] = j[r + 1];
        h[r2 - 1] = j[r2];
        h[r2] = i[r2];
        info.p1 = g;
        info.q1 = h;
        info.special = r1 + 1 == r2 && j[r1] + 1 == j[r2];
    } else {
        if (x.size() < y.size()) std::swap(i, j);
        const std::size_t k = i.size(), l = j.size();
        check(k == l + 1 && i[k - 1] == n, "unequal-length diamond pair does not match its pattern");
        auto d = differing_positions(i, j);
        check(d.size() == 1 && i[d[0]] == j[d[0]] + 1, "unequal-length diamond pair does not match its pattern");
        const std::size_t r1 = d[0];
        info.possibility = 2;

        Entries g = i, h = j;
        g[r1] = j[r1];
        g[r1 + 1] = i[r1];
        for (std::size_t r = r1 + 2; r < k; ++r) g[r] = i[r - 1];
        for (std::size_t r = r1; r + 1 < l; ++r) h[r] = j[r + 1];
        h[l - 1] = static_cast<std::uint8_t>(n);
        info.p1 = g;
        info.q1 = h;
        info.special = r1 + 1 == l && j[r1] == n - 2;
    }
    info.a = i;
    info.b = j;
    check(is_column(info.p1, n) && is_column(info.q1, n), "p1/q1 formulas produced an invalid column");

    const int gm = gx - 1, gj = gx + 1;
    bool q1_covers = m_leq(info.join, info.q1) && m_grade(info.q1, n) == gj + 1;
    bool p1_covered = m_leq(info.p1, info.meet) && m_grade(info.p1, n) == gm - 1;
    check(q1_covers == p1_covered, "q1 covers the join but the meet does not cover p1 (or vice versa)");
    check(q1_covers == info.special, "structural special-pair test disagrees with the cover criterion");

    if (info.special) {
        auto im = m_ideal_coords(info.meet, n);
        auto da = minus(m_ideal_coords(info.a, n), im);
        auto db = minus(m_ideal_coords(info.b, n), im);
        check(da.size() == 1 && db.size() == 1, "diamond pair ideals differ from the meet by more than one element");
        Coord st = da[0], uv = db[0];
        if (st.first < uv.first) std::swap(st, uv);
        auto [s, t] = st;
        check(uv.first == s - 1 && uv.second == t + 1, "special pair ideal differences are not diagonal neighbours");

        auto p1_ideal = minus(im, {{s - 1, t}});
        check(p1_ideal.size() + 1 == im.size(), "y_{s-1,t} is not in the meet's ideal");
        auto q1_ideal = m_ideal_coords(info.join, n);
        check(std::find(q1_ideal.begin(), q1_ideal.end(), Coord{s, t + 1}) == q1_ideal.end(),
              "y_{s,t+1} already below the join");
        q1_ideal.emplace_back(s, t + 1);
        check(m_column_of_coords(p1_ideal, n) == info.p1, "p1 from ideals disagrees with the tuple formula");
        check(m_column_of_coords(q1_ideal, n) == info.q1, "q1 from ideals disagrees with the tuple formula");
    }
    return info;
}

}  // namespace pf
