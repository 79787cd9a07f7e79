#ifndef TROPCLUSTER_CLUSTER_HPP
#define TROPCLUSTER_CLUSTER_HPP

// Seeds given by a fully extended exchange matrix, mutation of matrices and
// tropical points, Laurent expansion of cluster variables, and g-vectors.
//
// Indices in mutation words are 1-based; everything else is 0-based.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropcluster/exactmath.hpp"

namespace tropcluster {

using IVector = std::vector<long>;
using MutationWord = std::vector<std::size_t>;

struct SeedData {
  std::size_t n = 0;  // mutable directions
  std::size_t m = 0;  // frozen directions
  IntMatrix B;        // (n+m) x (n+m); column k (k < n) drives the exchange at k
  IVector d;          // skew-symmetrizers, length n+m
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return n + m; }
  /// Checks shapes, positivity of d and skew-symmetrizability of the
  /// principal mutable block; throws InvalidArgument.
  void validate() const;
  bool operator==(const SeedData& o) const {
    return n == o.n && m == o.m && B == o.B && d == o.d && labels == o.labels;
  }
};

enum class Sign { Plus, Minus };

struct MuMatrices {
  QMatrix A;
  QMatrix X;
};

MuMatrices mu_matrices(const SeedData& seed, std::size_t k, Sign sign);

/// k is 1-based. Implemented as B'^T = MuX * B^T * MuA (plus sign; the minus
/// pair is checked to agree).
SeedData mutate_matrix(const SeedData& seed, std::size_t k);
SeedData mutate_along(const SeedData& seed, const MutationWord& word);

IVector mutate_gvector(const IVector& g, const SeedData& seed, std::size_t k);
IVector gvector_of_exchanged_variable(const SeedData& seed, std::size_t k);

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);
  static LaurentPoly monomial(Exponent e, const Rational& c = 1);
  static LaurentPoly variable(std::size_t nvars, std::size_t i);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly pow(unsigned k) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Exact quotient; throws Internal when den does not divide num.
  static LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

  bool has_positive_integer_coefficients() const;
  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  Terms terms_;
};

/// The variable at 1-based position i of mu_word(seed), expanded in the
/// initial cluster of `seed`. Every coefficient is checked to be a positive
/// integer.
LaurentPoly laurent_expand(const SeedData& seed, const MutationWord& word, std::size_t i);

enum class Dominance { Less, Greater, Equal, Incomparable };

/// m1 < m2 iff m2 - m1 lies in the cone spanned by the mutable columns.
Dominance dominance_less(const IVector& m1, const IVector& m2, const SeedData& seed);

/// A linear form phi with phi . b_k = 1 for every mutable column b_k; it
/// strictly increases along the dominance order. False if none exists.
bool dominance_functional(const SeedData& seed, QVector& phi);

/// Dominance-minimal exponent. `functional`, when given, is a linear form
/// that strictly increases along every mutable column and orders candidates
/// first; by default one is solved for. Throws AmbiguousMinimum.
IVector gvector_from_laurent(const LaurentPoly& p, const SeedData& seed, const QVector* functional = nullptr);

struct BasisElement {
  MutationWord word;
  std::size_t index = 0;  // 1-based
  std::string name;
};

/// Columns are g-vectors of the basis elements in the frame seed
/// mu_frame(seed), computed by Laurent expansion and by transport of unit
/// vectors; throws OracleMismatch if they differ.
QMatrix gmatrix(const SeedData& seed, const std::vector<BasisElement>& basis, const MutationWord& frame);

/// Exact test whether b = A c for some c >= 0 (Fourier-Motzkin on the
/// solution space of A c = b).
bool in_cone(const QMatrix& A, const QVector& b);

}  // namespace tropcluster

#endif  // TROPCLUSTER_CLUSTER_HPP
