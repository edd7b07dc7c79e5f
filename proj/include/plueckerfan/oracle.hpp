#pragma once

#include "plueckerfan/straighten.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace pf {

// Arithmetic modulo the prime 2^62 - 57.
namespace fp {

inline constexpr std::uint64_t kPrime = 4611686018427387847ULL;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
// Throws InvalidArgument if the denominator vanishes modulo the prime.
std::uint64_t from_rational(const Rational& q);
// Smallest |num| / den with num / den = x, |num|, den <= sqrt(p/2).
std::optional<Rational> reconstruct(std::uint64_t x);

// Rank of a row-major matrix with the given column count (destroys it).
std::size_t rank(std::vector<std::uint64_t>& m, std::size_t cols);
// Solves m x = rhs for a consistent system with full column rank.
std::optional<std::vector<std::uint64_t>> solve(std::vector<std::uint64_t> m, std::vector<std::uint64_t> rhs,
                                                std::size_t cols);

}  // namespace fp

// Square matrix over the prime field, row-major.
struct FieldMatrix {
    int n = 0;
    std::vector<std::uint64_t> z;
    std::uint64_t at(int i, int j) const { return z[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
};

FieldMatrix random_matrix(int n, std::mt19937_64& rng);
FieldMatrix identity_matrix(int n);
// det(z_{r, c_j}) for rows 1..k and columns c_1..c_k.
std::uint64_t plucker_minor(const FieldMatrix& z, const Entries& cols);
std::uint64_t plucker_eval(const Polynomial& p, const FieldMatrix& z);

enum class OracleMode { Symbolic, Probabilistic };
std::string mode_name(OracleMode m);
OracleMode parse_mode(const std::string& s);

struct MembershipVerdict {
    bool member = false;
    OracleMode method = OracleMode::Probabilistic;
    // Probability bound of a false "member" verdict (probabilistic only).
    Rational failure_bound = 0;
};

inline constexpr int kDefaultTrials = 20;

MembershipVerdict ideal_membership(const Polynomial& p, int n, OracleMode mode = OracleMode::Probabilistic,
                                   int trials = kDefaultTrials, std::uint64_t seed = 0);

struct StandardBasisReport {
    std::size_t monomials = 0;
    std::size_t standard = 0;
    std::size_t rank_all = 0;
    std::size_t rank_standard = 0;
    bool ok() const { return rank_all == standard && rank_standard == standard; }
};

// lambda[k-1] = number of factors with k subscripts; total degree <= 3, n <= 5.
StandardBasisReport standard_basis_check(const PluckerLattice& lat, const std::vector<int>& lambda,
                                         std::uint64_t seed = 0);
// All lambda with total degree between 1 and max_total.
std::vector<std::vector<int>> multidegrees(int n, int max_total);

// X_a X_b = sum coeff X_p X_q modulo I with standard monomials on the right,
// computed by solving at random points and reconstructing rationals.
struct StandardExpansion {
    std::vector<LatticeTerm> terms;
    // Coefficients as field elements, in the order of terms.
    std::vector<std::uint64_t> residues;
    bool reconstructed = true;
};
StandardExpansion standard_expansion(const PluckerLattice& lat, Elem a, Elem b, std::uint64_t seed = 0);

}  // namespace pf
