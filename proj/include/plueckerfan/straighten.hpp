#pragma once

#include "plueckerfan/plucker.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pf {

// Product of Plücker variables; factors are increasing tuples kept sorted.
using Monomial = std::vector<Entries>;

Monomial make_monomial(std::vector<Entries> factors);
// Count of factors per length (index k-1) and subscript multiplicities.
std::vector<int> monomial_deg(const Monomial& m, int n);
std::vector<int> monomial_wt(const Monomial& m, int n);

// Polynomial in Plücker variables with the permutation signs absorbed into
// the coefficients.
class Polynomial {
public:
    Polynomial() = default;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;

    void add(const Monomial& m, const Rational& c);
    // Adds c times the product of the tuples, canonicalizing each factor.
    void add_tuples(const std::vector<Entries>& factors, const Rational& c);
    void add_scaled(const Polynomial& p, const Rational& c);
    Polynomial scaled(const Rational& c) const;

    std::size_t max_degree() const;
    bool deg_homogeneous(int n) const;
    bool wt_homogeneous(int n) const;
    // Components by deg vector.
    std::map<std::vector<int>, Polynomial> deg_components(int n) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    std::map<Monomial, Rational> terms_;
};

std::string format_polynomial(const Polynomial& p);

// X_A X_B - sum over s of the exchange of B_r with A_s (positions 1-based).
Polynomial exchange_relation(const Entries& a, const Entries& b, int r, int n);
// Alternating sum over the k+1 symbols (B_1..B_r, A_r..A_k), one term per
// coset, scaled so the coefficient of the tuple product X_A X_B is 1.
Polynomial shuffle_relation(const Entries& a, const Entries& b, int r, int n);
// Appends extra to the shorter factor of every term.
Polynomial append_columns(const Polynomial& rel, const Entries& extra, int n);
// perm[i] is the image of i (perm[0] unused).
Polynomial apply_index_permutation(const Polynomial& p, const std::vector<int>& perm, int n);

// c X_p X_q in lattice variables with p <= q.
struct LatticeTerm {
    Rational coeff;
    Elem p = 0, q = 0;
};

struct Straightening {
    Elem a = 0, b = 0;
    // In canonical variables; the lattice coefficient of X_a X_b is 1.
    Polynomial relation;
    // The c_i, p_i, q_i of X_a X_b - sum c_i X_{p_i} X_{q_i}: the term with
    // q equal to the join comes first, the rest follow in lattice order.
    std::vector<LatticeTerm> terms;
    std::size_t steps = 0;
    int m() const { return static_cast<int>(terms.size()) - 1; }
};

// The ordered pair (first, second) the engine works with.
std::pair<Elem, Elem> orient_pair(const PluckerLattice& lat, Elem x, Elem y);
// Shuffle position for an ordered incomparable pair (1-based); 0 if standard.
int pivot_position(const PluckerLattice& lat, Elem first, Elem second);

// s(a,b) for kind M and e(a,b) for kind N. Throws ComparablePair.
Straightening straighten_pair(const PluckerLattice& lat, Elem a, Elem b);
// Terms of a canonical polynomial in lattice variables (quadratic only).
std::vector<LatticeTerm> lattice_terms(const PluckerLattice& lat, const Polynomial& p);
Monomial lattice_monomial(const PluckerLattice& lat, Elem a, Elem b);
// Sign relating X_a X_b in lattice variables to the canonical monomial.
int lattice_sign(const PluckerLattice& lat, Elem a, Elem b);

// Polynomials in abstract lattice variables.
using LatticeMonomial = std::vector<Elem>;
using LatticePolynomial = std::map<LatticeMonomial, Rational>;

// Join-irreducible poset and the ideal of every element.
struct BirkhoffData {
    Poset ji;
    std::vector<OrderIdeal> iota;
    Elem element_of(const OrderIdeal& j) const;
};
BirkhoffData birkhoff_data(const DistributiveLattice& l);
BirkhoffData birkhoff_data(const PluckerLattice& lat);

Elem odot_element(const BirkhoffData& bd, const ChainOrderPartition& part, Elem a, Elem b);

// X_a X_b - X_{a v b} X_{a ^ b}, or with a partition X_a X_b - X_{a v b} X_{a odot b}.
LatticePolynomial hibi_generator(const DistributiveLattice& l, Elem a, Elem b,
                                 const BirkhoffData* bd = nullptr, const ChainOrderPartition* part = nullptr);

// Exponents of z_p (p in the join-irreducibles) followed by the t exponent.
std::vector<long> theta_exponent(const BirkhoffData& bd, const ChainOrderPartition& part, const LatticeMonomial& m);

// Exponents keyed (i,j) for z_{i,j} and (0,k) for z_k.
using PsiExponent = std::map<Coord, long>;
PsiExponent psi_exponent(const Entries& pbw, int n);
// theta on N after z_{tau(y_{r,s})} = z_{r,s}, z_{tau(y_{k,k})} = z_k / z_{k-1}, t = z_1.
PsiExponent theta_substituted(const PluckerLattice& nlat, const LatticeMonomial& m);

// Graded reverse lexicographic order from a linearization (rank[e] = position).
bool grevlex_less(const LatticeMonomial& x, const LatticeMonomial& y, const std::vector<std::size_t>& rank);
// Linearization by (grade, element index).
std::vector<std::size_t> grade_linearization(const DistributiveLattice& l);
// The least term of p under grevlex_less.
LatticeMonomial grevlex_initial(const LatticePolynomial& p, const std::vector<std::size_t>& rank);

}  // namespace pf
