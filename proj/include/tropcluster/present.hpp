#ifndef TROPCLUSTER_PRESENT_HPP
#define TROPCLUSTER_PRESENT_HPP

// Presentation ideals of cluster algebras from a list of cluster variables,
// ray matrices -B^{-T} G, and the verification pipeline that checks the rays
// span adjacent maximal prime cones of the totally positive tropicalization.

#include <map>
#include <string>
#include <vector>

#include "tropcluster/cluster.hpp"
#include "tropcluster/poly.hpp"
#include "tropcluster/trop.hpp"

namespace tropcluster {

struct KhovanskiiSpec {
  SeedData seed;
  std::vector<BasisElement> basis;

  /// Basis names must be distinct and usable as variable names.
  void validate() const;
};

struct Presentation {
  RingPtr ring;  // one variable per basis element, standard grading
  Ideal ideal;
  std::vector<LaurentPoly> images;
  /// One weight per frozen direction: that row of -B^{-T} G. J_B is
  /// homogeneous for each of them. Empty when B is singular.
  std::vector<QVector> grading;
};

/// Kernel of x_j -> Laurent_j(A) by elimination: adjoin a_1..a_{n+m} and u
/// with u*a_1*...*a_{n+m} = 1, impose x_j * a^{d_j} = numerator_j, eliminate.
Presentation presentation_ideal(const KhovanskiiSpec& spec);

/// -B_f^{-T} G_f for the frame seed f = mu_frame(seed). Rows are directions,
/// columns basis elements. Throws SingularMatrix.
QMatrix ray_matrix(const KhovanskiiSpec& spec, const MutationWord& frame);

/// Weighting rows for the MAX engine that select dominance-minimal g-vector
/// values in the frame seed: -phi^T G, then the rows of -G.
std::vector<QVector> gvector_weighting(const KhovanskiiSpec& spec, const MutationWord& frame);

/// The g-weighting initial ideal of J_B is binomial and prime.
bool verify_khovanskii(const KhovanskiiSpec& spec, const MutationWord& frame);
bool verify_khovanskii(const KhovanskiiSpec& spec, const Presentation& p, const MutationWord& frame);

/// The cone spanned by the ray-matrix rows, with signs flipped for the MAX
/// engine (g-vectors follow the MIN convention).
Cone ray_cone(const QMatrix& rays);

struct Clause {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct TheoremReport {
  std::vector<std::string> labels;
  std::vector<Clause> clauses;
  QMatrix frame_rays;
  std::vector<std::string> frame_ideal;
  std::map<std::size_t, QMatrix> mutated_rays;
  std::map<std::size_t, std::vector<std::string>> mutated_ideals;

  bool passed() const;
  /// Name of the first failed clause, or empty.
  std::string first_failure() const;
};

/// Runs the checks for the seed and each one-step mutation mu_k:
/// cone ideals monomial-free, binomial, prime and totally positive; frozen rows
/// in the lineality space; ray matrices differing exactly in row k; adjacent
/// cones with distinct ideals.
TheoremReport verify_main_theorem(const KhovanskiiSpec& spec);

/// Reduced grevlex basis rendered as strings; a canonical form for reports.
std::vector<std::string> canonical_generators(const Ideal& ideal);

}  // namespace tropcluster

#endif  // TROPCLUSTER_PRESENT_HPP
