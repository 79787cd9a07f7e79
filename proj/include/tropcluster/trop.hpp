#ifndef TROPCLUSTER_TROP_HPP
#define TROPCLUSTER_TROP_HPP

// Tropical membership, cone initial ideals, binomial primality and total
// positivity certificates. Weights follow the MAX convention of poly.hpp.

#include <string>
#include <vector>

#include "tropcluster/poly.hpp"

namespace tropcluster {

struct Cone {
  std::vector<QVector> rays;
  std::vector<QVector> lineality;

  /// Throws InvalidArgument on a dimension mismatch or a zero ray.
  void validate(std::size_t nvars) const;
};

/// True iff init_w(I) contains no monomial.
bool in_tropicalization(const Ideal& ideal, const QVector& w);

/// One weight per grading component; entry i is the degree of variable i in
/// that component. A standard-graded ring gives the all-ones vector.
std::vector<QVector> lineality_vectors(const PolyRing& ring);

/// init_{u_r}(... init_{u_1}(I)) over the lineality vectors and then the rays.
/// Throws NotACone if the result contains a monomial.
Ideal cone_initial_ideal(const Ideal& ideal, const Cone& cone);

/// Every element of the reduced grevlex basis has at most two terms.
bool is_binomial(const Ideal& ideal);

/// Primality over the algebraic closure: monomial-free, saturated at the
/// product of all variables, and the exponent-difference lattice of the
/// reduced basis is saturated. Throws NotBinomial.
bool is_prime_binomial(const Ideal& ideal);

struct PositivityCertificate {
  enum class Verdict { Positive, NotPositive, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  /// Exact positive zero, set when every binomial has coefficient ratio one.
  QVector point;
  /// Approximate positive zero, set when the ratios differ.
  std::vector<double> approx_point;
  /// One-signed element of the ideal, set for NotPositive.
  Polynomial witness;

  bool exact() const { return verdict == Verdict::Positive && !point.empty(); }
};

const char* verdict_name(PositivityCertificate::Verdict v);

PositivityCertificate is_totally_positive(const Ideal& ideal);

/// All coefficients nonzero and of one sign.
bool is_one_signed(const Polynomial& f);

struct ConeReport {
  bool monomial_free = false;
  bool binomial = false;
  bool prime = false;
  PositivityCertificate certificate;
  Ideal initial_ideal;  // set when monomial_free

  bool passed() const {
    return monomial_free && binomial && prime && certificate.verdict == PositivityCertificate::Verdict::Positive;
  }
};

/// Runs the maximal-prime-cone checks on init_c(I); later checks are skipped
/// once one fails.
ConeReport certify_cone(const Ideal& ideal, const Cone& cone);

/// init_v(I) == init_w(I).
bool same_groebner_cone(const Ideal& ideal, const QVector& v, const QVector& w);

/// Both cone ideals must be binomial prime (else NotCertified). True iff the
/// ray sets differ in exactly one ray, up to lineality and positive scaling,
/// and the two cone initial ideals differ.
bool cones_adjacent(const Ideal& ideal, const Cone& a, const Cone& b);

/// Rays of `a` and `b` compared up to the joint lineality span and positive
/// scaling: the number of rays of `a` not matched in `b`.
std::size_t unmatched_rays(const Cone& a, const Cone& b);

}  // namespace tropcluster

#endif  // TROPCLUSTER_TROP_HPP
