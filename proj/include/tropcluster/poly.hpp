#ifndef TROPCLUSTER_POLY_HPP
#define TROPCLUSTER_POLY_HPP

// Polynomials over Q with dense exponent vectors, monomial orders given by
// integer weight rows, and a Buchberger engine. All orders use the MAX
// convention: the initial form keeps the terms of largest weight.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tropcluster/exactmath.hpp"

namespace tropcluster {

class PolyRing {
 public:
  /// degrees[i] is the multidegree of variable i; empty means the standard
  /// grading (every variable has degree 1).
  PolyRing(std::vector<std::string> names, std::vector<std::vector<long>> degrees = {});

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names,
                                              std::vector<std::vector<long>> degrees = {});

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;

  const std::vector<std::vector<long>>& degrees() const noexcept { return degrees_; }
  std::size_t grading_rank() const noexcept { return degrees_.empty() ? 0 : degrees_[0].size(); }

  /// Sum of the grading components of each variable. Every entry is positive.
  const std::vector<long>& total_degree_weights() const noexcept { return total_; }

  bool operator==(const PolyRing& o) const { return names_ == o.names_ && degrees_ == o.degrees_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<long>> degrees_;
  std::vector<long> total_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Adds variables at the end; new variables get degree 1 in every component.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);

/// Orders exponents by descending degree-reverse-lexicographic order.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, Exponent e, const Rational& c = 1);

  /// Grammar: `3*p_12*p_34^2 - 1/2*x`; `*` is required between factors.
  static Polynomial parse(RingPtr ring, const std::string& text);

  const RingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const;

  /// Largest total degree of a term.
  long degree() const;
  /// True if every term has the same w-weight.
  bool is_homogeneous(const std::vector<long>& w) const;
  bool is_homogeneous(const QVector& w) const;

  /// Terms printed in descending grevlex order.
  std::string to_string() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Substitutes images[i] for variable i; all images live in one ring.
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;
  /// Re-expresses the polynomial in a ring that has the same variable names
  /// (possibly more of them, in any order).
  Polynomial in_ring(const RingPtr& target) const;

  Rational evaluate(const QVector& point) const;

  /// Divides by the coefficient of the grevlex-largest term.
  Polynomial monic() const;

 private:
  RingPtr ring_;
  TermMap terms_;
};

enum class TermOrder { Lex, GRevLex, GLex };

const char* term_order_name(TermOrder t);

/// A term order, a weight vector refined by a term order, or a weighting
/// matrix whose rows are compared lexicographically and then refined.
struct OrderSpec {
  enum class Kind { Term, Weight, Matrix };
  Kind kind = Kind::Term;
  TermOrder tiebreak = TermOrder::GRevLex;
  std::vector<QVector> rows;

  static OrderSpec term(TermOrder t);
  static OrderSpec weight(QVector w, TermOrder tiebreak = TermOrder::GRevLex);
  static OrderSpec matrix(std::vector<QVector> rows, TermOrder tiebreak = TermOrder::GRevLex);

  std::string key() const;
};

/// Sum of the terms whose weight is maximal (lexicographically for matrices;
/// the leading term for a plain term order). Throws ZeroPolynomial.
Polynomial initial_form(const Polynomial& f, const OrderSpec& spec);

/// Leading term under the full refined order.
Polynomial leading_term(const Polynomial& f, const OrderSpec& spec);

/// f^{h;w} = sum c_a x^a t^(max w.b - w.a) in the ring extended by `t`.
/// Rational w is scaled to a primitive integer vector first.
Polynomial homogenize(const Polynomial& f, const QVector& w, const std::string& t = "t");

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced monic Groebner basis, computed once per order and cached. For a
  /// weight or matrix order on an ideal that is not homogeneous for a positive
  /// grading, the basis of the homogenized ideal is dehomogenized; its initial
  /// forms under `spec` still generate the initial ideal.
  const std::vector<Polynomial>& groebner_basis(const OrderSpec& spec) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  /// Homogeneous for every component of the ring grading.
  bool is_graded_homogeneous() const;
  bool is_homogeneous(const std::vector<long>& w) const;
  bool is_homogeneous(const QVector& w) const;

  std::vector<std::string> to_strings() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

std::vector<Polynomial> buchberger(const Ideal& ideal, const OrderSpec& spec);

/// Remainder of f modulo a Groebner basis for a term order spec.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const OrderSpec& spec);

Ideal initial_ideal(const Ideal& ideal, const OrderSpec& spec);

bool ideal_equal(const Ideal& a, const Ideal& b);

/// Intersection with the subring on `keep`; the result lives in a ring with
/// just those variables (original order preserved).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep);

/// I : f^infinity.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

bool contains_monomial(const Ideal& ideal);

/// Monomials outside the leading-term ideal up to total degree `bound`.
std::vector<Exponent> standard_monomials(const Ideal& ideal, TermOrder order, unsigned bound);

/// Caps the number of reduction steps per Groebner computation; 0 disables
/// the cap. The initial value comes from TROPCLUSTER_BUDGET.
void set_groebner_budget(std::uint64_t steps);
std::uint64_t groebner_budget();

}  // namespace tropcluster

#endif  // TROPCLUSTER_POLY_HPP
