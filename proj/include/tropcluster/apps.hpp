#ifndef TROPCLUSTER_APPS_HPP
#define TROPCLUSTER_APPS_HPP

// Plücker ideals of flag varieties Flag_n (3 <= n <= 5), the S_n action on
// Plücker coordinates, the Flag_3 and Flag_4 cone censuses, the extended
// Flag_4 ideal, and the FFLV valuation with its S_n-orbit positivity check.

#include <string>
#include <utility>
#include <vector>

#include "tropcluster/poly.hpp"
#include "tropcluster/trop.hpp"

namespace tropcluster {

struct PluckerVar {
  std::vector<int> J;  // sorted, nonempty, proper subset of 1..n

  /// Variable name: "p" followed by the digits, e.g. p134.
  std::string name() const;
};

/// All proper nonempty subsets of 1..n, ordered by (cardinality, lex).
std::vector<PluckerVar> plucker_vars(unsigned n);

/// Polynomial ring on plucker_vars(n), graded by cardinality (n-1 blocks).
RingPtr plucker_ring(unsigned n);

/// Degree-2 relations among the minors p_J = det X[J, 1..|J|] of a generic
/// n x n matrix, by exact linear algebra in each bidegree. Throws UnsupportedN.
Ideal flag_plucker_ideal(unsigned n);

/// p_{iJ} p_{jkJ} - p_{jJ} p_{ikJ} + p_{kJ} p_{ijJ}. Requires i < j < k, all
/// outside J (IndexClash), and every index set proper, i.e. |J| <= n - 3
/// (InvalidArgument).
Polynomial three_term_relation(unsigned n, const std::vector<int>& J, int i, int j, int k);

/// Every admissible three-term relation, ordered by (|J|, J, i, j, k).
std::vector<Polynomial> three_term_relations(unsigned n);

/// One-line notation: sigma[i - 1] = sigma(i).
using Permutation = std::vector<int>;

/// Accepts one-line "2,3,1" or cycle notation "(1342)" / "(12)(34)".
Permutation parse_permutation(const std::string& text, unsigned n);
std::string cycle_string(const Permutation& sigma);
/// (a*b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& sigma);
/// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(unsigned n);

/// sigma(p_J) = (-1)^s p_{sigma(J)}, s the number of inversions of
/// (sigma(j_1), ..., sigma(j_k)); applied termwise.
Polynomial sn_action(const Permutation& sigma, const Polynomial& f);
Ideal sn_action(const Permutation& sigma, const Ideal& ideal);

/// Positive roots eps_i - eps_j of sl_n in the good ordering: larger j - i
/// first, then i ascending.
std::vector<std::pair<int, int>> root_sequence(unsigned n);

/// FFLV valuation vector of p_L, indexed by root_sequence(n), closed form:
/// with l_1 < ... < l_s <= k < l_{s+1} < ... < l_k and q_1 < ... < q_{k-s}
/// the indices of 1..k missing from L, it is 1 exactly at the roots
/// eps_{q_{k-s+1-t}} - eps_{l_{s+t}}.
std::vector<int> fflv_m_vector(unsigned n, const std::vector<int>& L);

/// The same vector found by search: the minimal exponent with
/// f^a(e_1 ^ ... ^ e_k) a nonzero multiple of e_L, over total degree <= k.
/// Exponents are compared by total degree, then at the last differing
/// position, where the larger entry is the smaller exponent.
std::vector<int> fflv_m_vector_search(unsigned n, const std::vector<int>& L);

/// deg(eps_i - eps_j) = (j - i + 1)(n - j + i).
long fflv_root_degree(unsigned n, int i, int j);

/// M with rows the roots and columns m_J for the Plücker variables.
QMatrix fflv_weighting_matrix(unsigned n);
/// Degree contraction of the columns of M.
QVector fflv_weight_vector(unsigned n);

/// Weighting rows for the MAX engine that select the terms of least value in
/// the order used by fflv_m_vector_search: minus the column sums of M, then
/// the rows of M from last to first.
std::vector<QVector> fflv_order_rows(unsigned n);

/// init_M(I_n), initial forms of minimal M-weight. Throws UnsupportedN.
Ideal fflv_initial_ideal(unsigned n);

/// Minimal-weight initial form of f under the FFLV weight vector.
Polynomial fflv_initial_form(unsigned n, const Polynomial& f);

struct Flag3Ray {
  std::string name;
  std::vector<std::string> printed_weight;  // verbatim, before correction
  QVector weight;
  bool corrected = false;
  std::vector<std::string> initial_ideal;
  bool matches_printed = false;
  bool tropical = false;
  std::string verdict;
  std::string witness;
};

struct Flag3Report {
  std::vector<std::string> ideal;
  bool ideal_matches = false;
  std::vector<Flag3Ray> rays;
  /// The three rays give the three distinct binomial initial ideals of the
  /// trinomial, so they represent every ray class of trop(J_3)/L.
  bool all_classes = false;
  /// Failure descriptions; empty when every check passed.
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

Flag3Report flag3_census();

struct CensusCone {
  std::string name;
  std::vector<std::string> rays;
  bool listed_prime = true;  // false for the cones marked with a dagger
  bool monomial_free = false;
  bool binomial = false;
  bool prime = false;
  std::string verdict;
  std::vector<std::string> initial_ideal;
  std::vector<std::string> neighbours;
};

struct CensusReport {
  std::vector<std::string> variables;
  std::vector<CensusCone> cones;
  std::vector<std::pair<std::string, std::string>> edges;
  bool three_regular = false;
  /// Extended census only.
  bool elimination_matches = false;
  bool homogeneous = false;
  std::vector<std::pair<std::string, std::string>> bijection;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// The 14 listed cones of trop+(Flag_4) under the Plücker ideal J_4.
CensusReport flag4_census(unsigned jobs = 1);

/// I^ex in x and the Plücker variables, deg x = 2.
Ideal flag4_extended_ideal();

/// The 14 listed cones of trop+(I^ex), the elimination check against J_4
/// and the ray/cluster-variable table.
CensusReport flag4_extended_census(unsigned jobs = 1);

struct OrbitRow {
  Permutation sigma;
  std::string verdict;        // positive, not_positive or inconclusive
  std::string witness_class;  // three_term, groebner or certificate
  std::string witness;
};

struct OrbitReport {
  unsigned n = 0;
  std::vector<OrbitRow> rows;
  std::size_t positive() const;
  std::size_t not_positive() const;
  std::size_t inconclusive() const;
  /// Throws MissingWitness naming the first inconclusive permutation.
  void require_complete() const;
};

/// sigma(I_FFLV) for each sigma in `perms` (all of S_n when empty):
/// one-signed sigma-images of three-term initial forms first, then a search
/// of the reduced basis, then a positivity certificate.
OrbitReport verify_fflv_not_positive(unsigned n, const std::vector<Permutation>& perms = {}, unsigned jobs = 1);

struct FflvReport {
  unsigned n = 0;
  std::vector<std::string> variables;
  std::vector<std::pair<int, int>> roots;
  QMatrix M;
  QVector weight;
  bool oracle_matches = false;
  bool matrix_equals_weight = false;
  std::vector<std::string> initial_ideal;
  bool matches_printed = false;  // n = 4 only
  bool tropical = false;
  bool prime = false;
  std::string verdict;
  std::string witness;
  /// n = 4: the printed permutation image. The printed image substitutes
  /// p_J -> p_{sigma^{-1}(J)}, i.e. it is sn_action(inverse(sigma), I_FFLV).
  std::string sigma;
  std::vector<std::string> sigma_ideal;
  bool sigma_matches_printed = false;
  std::string sigma_verdict;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

FflvReport fflv_report(unsigned n);

/// Cones spanned by listed ray names, in the ring of a census.
Cone census_cone(const std::vector<std::string>& rays, bool extended);

}  // namespace tropcluster

#endif  // TROPCLUSTER_APPS_HPP
