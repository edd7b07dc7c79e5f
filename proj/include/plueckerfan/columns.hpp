#pragma once

#include "plueckerfan/common.hpp"

#include <boost/container/static_vector.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pf {

inline constexpr int kMaxN = 31;

// Index tuple of a Plücker variable, 1-based entries.
using Entries = boost::container::static_vector<std::uint8_t, kMaxN>;
using SetMask = std::uint32_t;

struct SignedColumn {
    Entries column;
    int sign = 1;
};

// Sorts indices with the permutation sign; nullopt on a repeated index.
// n > 0 enables the range check 1 <= i <= n.
std::optional<SignedColumn> canonicalize(const Entries& indices, int n = 0);

Entries make_entries(std::initializer_list<int> xs);
std::string format_entries(const Entries& e);
Entries parse_entries(const std::string& s);

bool is_column(const Entries& e, int n);
bool is_pbw_column(const Entries& e, int n);

SetMask mask_of(const Entries& e);
Entries column_from_mask(SetMask m);
Entries pbw_from_mask(SetMask m);

// Semistandard order on columns: a <= b iff len(a) >= len(b) and a_r <= b_r.
bool m_leq(const Entries& a, const Entries& b);
Entries m_meet(const Entries& a, const Entries& b);
Entries m_join(const Entries& a, const Entries& b);
int m_grade(const Entries& a, int n);

// True iff (alpha, beta) is a PBW-semistandard two-column tableau, i.e.
// b_beta <= b_alpha.
bool pbw_two_column_leq(const Entries& alpha, const Entries& beta);

// Join-irreducible y_{r,s} of M(n): the column [1,n] \ [n-s+1, n+r-s].
using Coord = std::pair<int, int>;
Entries y_column(int r, int s, int n);
// All valid (r,s) in lexicographic order.
std::vector<Coord> ji_coordinates(int n);
inline bool coord_leq(Coord a, Coord b) { return a.first <= b.first && a.second <= b.second; }

// Ideal of M(n) join-irreducibles below a column, by coordinates.
std::vector<Coord> m_ideal_coords(const Entries& a, int n);
// Column whose ideal has the given coordinates.
Entries m_column_of_coords(const std::vector<Coord>& ideal, int n);
// nu from the ideal coordinates (works for any n up to kMaxN).
Entries nu_from_coords(const std::vector<Coord>& ideal, int n);

// Data of a diamond pair in M(n) computed from the columns alone.
struct MPairInfo {
    bool comparable = false;
    bool diamond = false;
    bool special = false;
    int possibility = 0;  // 1: equal lengths, 2: lengths differ by one
    Entries a, b;         // oriented as in the diamond-pair patterns
    Entries meet, join, p1, q1;
};

MPairInfo classify_m_columns(const Entries& x, const Entries& y, int n);

}  // namespace pf
