#include "tropcluster/trop.hpp"

#include <cmath>
#include <map>

namespace tropcluster {

void Cone::validate(std::size_t nvars) const {
  for (const auto& r : rays) {
    if (r.size() != nvars) throw Error(ErrorCode::InvalidArgument, "ray dimension differs from the variable count");
    bool zero = true;
    for (const auto& x : r) zero = zero && x == 0;
    if (zero) throw Error(ErrorCode::InvalidArgument, "zero ray");
  }
  for (const auto& l : lineality)
    if (l.size() != nvars) throw Error(ErrorCode::InvalidArgument, "lineality dimension differs from the variable count");
}

bool in_tropicalization(const Ideal& ideal, const QVector& w) {
  return !contains_monomial(initial_ideal(ideal, OrderSpec::weight(w)));
}

std::vector<QVector> lineality_vectors(const PolyRing& ring) {
  std::vector<QVector> out(ring.grading_rank(), QVector(ring.nvars()));
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    for (std::size_t c = 0; c < out.size(); ++c) out[c][i] = ring.degrees()[i][c];
  return out;
}

Ideal cone_initial_ideal(const Ideal& ideal, const Cone& cone) {
  cone.validate(ideal.ring()->nvars());
  Ideal cur = ideal;
  for (const auto& v : cone.lineality) cur = initial_ideal(cur, OrderSpec::weight(v));
  for (const auto& v : cone.rays) cur = initial_ideal(cur, OrderSpec::weight(v));
  // A monomial at any intermediate step survives every later initial ideal,
  // so testing the end result covers all steps.
  if (contains_monomial(cur)) throw Error(ErrorCode::NotACone, "cone initial ideal contains a monomial");
  return cur;
}

bool is_binomial(const Ideal& ideal) {
  for (const auto& g : ideal.groebner_basis(OrderSpec::term(TermOrder::GRevLex)))
    if (g.size() > 2) return false;
  return true;
}

bool is_prime_binomial(const Ideal& ideal) {
  if (!is_binomial(ideal)) throw Error(ErrorCode::NotBinomial, "ideal is not binomial");
  if (ideal.is_unit()) return false;
  if (contains_monomial(ideal)) return false;
  const std::size_t n = ideal.ring()->nvars();
  Polynomial prod = Polynomial::monomial(ideal.ring(), Exponent(n, 1));
  if (!ideal_equal(saturate(ideal, prod), ideal)) return false;
  IntLattice lat;
  for (const auto& g : ideal.groebner_basis(OrderSpec::term(TermOrder::GRevLex))) {
    auto it = g.terms().begin();
    const Exponent& a = it->first;
    const Exponent& b = std::next(it)->first;
    ZVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a[i] - b[i];
    lat.generators.push_back(std::move(v));
  }
  return is_saturated(lat, n);
}

const char* verdict_name(PositivityCertificate::Verdict v) {
  switch (v) {
    case PositivityCertificate::Verdict::Positive:
      return "positive";
    case PositivityCertificate::Verdict::NotPositive:
      return "not_positive";
    case PositivityCertificate::Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

bool is_one_signed(const Polynomial& f) {
  if (f.is_zero()) return false;
  int s = sgn(f.terms().begin()->second);
  for (const auto& [e, c] : f.terms())
    if (sgn(c) != s) return false;
  return true;
}

namespace {

// Rational power with an integer exponent.
Rational qpow(const Rational& c, long k) {
  Rational r = 1, b = k < 0 ? Rational(1) / c : c;
  for (long i = 0, e = std::labs(k); i < e; ++i) r *= b;
  return r;
}

}  // namespace

PositivityCertificate is_totally_positive(const Ideal& ideal) {
  PositivityCertificate cert;
  const std::size_t n = ideal.ring()->nvars();
  for (const auto& g : ideal.generators())
    if (is_one_signed(g)) {
      cert.verdict = PositivityCertificate::Verdict::NotPositive;
      cert.witness = g;
      return cert;
    }
  const auto& gb = ideal.groebner_basis(OrderSpec::term(TermOrder::GRevLex));
  for (const auto& g : gb)
    if (is_one_signed(g)) {
      cert.verdict = PositivityCertificate::Verdict::NotPositive;
      cert.witness = g;
      return cert;
    }
  // Remaining elements have terms of both signs. Only binomials are decided.
  std::vector<ZVector> diffs;
  std::vector<Rational> ratios;  // x^a = ratio * x^b at the sought point
  for (const auto& g : gb) {
    if (g.size() != 2) return cert;
    auto it = g.terms().begin();
    const auto& [a, ca] = *it;
    const auto& [b, cb] = *std::next(it);
    ZVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a[i] - b[i];
    diffs.push_back(std::move(v));
    ratios.push_back(-cb / ca);
  }
  bool all_one = true;
  for (const auto& r : ratios) all_one = all_one && r == 1;
  if (all_one) {
    cert.verdict = PositivityCertificate::Verdict::Positive;
    cert.point = QVector(n, Rational(1));
    return cert;
  }
  // Solve diffs * y = log(ratios). Consistency is exact: every integer
  // relation among the rows must multiply the ratios to one.
  QMatrix D(diffs.size(), n);
  for (std::size_t r = 0; r < diffs.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) D(r, i) = diffs[r][i];
  for (const auto& rel : kernel_basis(D.transpose())) {
    ZVector k = primitive_integer_vector(rel);
    Rational prod = 1;
    for (std::size_t r = 0; r < k.size(); ++r) prod *= qpow(ratios[r], k[r].get_si());
    if (prod != 1) return cert;
  }
  // Particular solution by Gaussian elimination in doubles.
  const std::size_t rows = diffs.size();
  std::vector<std::vector<double>> A(rows, std::vector<double>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < n; ++i) A[r][i] = diffs[r][i].get_d();
    A[r][n] = std::log(ratios[r].get_d());
  }
  std::size_t pr = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < n && pr < rows; ++c) {
    std::size_t best = pr;
    for (std::size_t r = pr + 1; r < rows; ++r)
      if (std::fabs(A[r][c]) > std::fabs(A[best][c])) best = r;
    if (std::fabs(A[best][c]) < 1e-12) continue;
    std::swap(A[pr], A[best]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      double f = A[r][c] / A[pr][c];
      for (std::size_t j = c; j <= n; ++j) A[r][j] -= f * A[pr][j];
    }
    pivcol.push_back(c);
    ++pr;
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t r = 0; r < pivcol.size(); ++r) y[pivcol[r]] = A[r][n] / A[r][pivcol[r]];
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(y[i]);
  // Residual check on the basis elements themselves.
  for (const auto& g : gb) {
    double val = 0, scale = 0;
    for (const auto& [e, c] : g.terms()) {
      double t = c.get_d();
      for (std::size_t i = 0; i < n; ++i) t *= std::pow(x[i], e[i]);
      val += t;
      scale += std::fabs(t);
    }
    if (std::fabs(val) > 1e-9 * std::max(1.0, scale)) return cert;
  }
  cert.verdict = PositivityCertificate::Verdict::Positive;
  cert.approx_point = std::move(x);
  return cert;
}

bool same_groebner_cone(const Ideal& ideal, const QVector& v, const QVector& w) {
  return ideal_equal(initial_ideal(ideal, OrderSpec::weight(v)), initial_ideal(ideal, OrderSpec::weight(w)));
}

namespace {

// Projection onto the orthogonal complement of span(L), then scaled so the
// first nonzero entry is +-1. Two rays agree up to lineality and positive
// scaling iff their normal forms agree.
class RayNormalizer {
 public:
  RayNormalizer(const std::vector<QVector>& lineality, std::size_t dim) {
    for (const auto& l : lineality) {
      QVector v = l;
      for (const auto& b : basis_) {
        Rational c = dot(v, b) / dot(b, b);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= c * b[i];
      }
      bool zero = true;
      for (const auto& x : v) zero = zero && x == 0;
      if (!zero) basis_.push_back(std::move(v));
    }
  }

  QVector operator()(const QVector& r) const {
    QVector v = r;
    for (const auto& b : basis_) {
      Rational c = dot(v, b) / dot(b, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    for (const auto& x : v)
      if (x != 0) {
        Rational s = abs(x);
        for (auto& y : v) y /= s;
        break;
      }
    return v;
  }

 private:
  static Rational dot(const QVector& a, const QVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }
  std::vector<QVector> basis_;
};

}  // namespace

std::size_t unmatched_rays(const Cone& a, const Cone& b) {
  std::vector<QVector> lin = a.lineality;
  lin.insert(lin.end(), b.lineality.begin(), b.lineality.end());
  std::size_t dim = !a.rays.empty() ? a.rays[0].size() : (!b.rays.empty() ? b.rays[0].size() : 0);
  RayNormalizer norm(lin, dim);
  std::map<QVector, int> pool;
  for (const auto& r : b.rays) ++pool[norm(r)];
  std::size_t unmatched = 0;
  for (const auto& r : a.rays) {
    auto it = pool.find(norm(r));
    if (it == pool.end() || it->second == 0)
      ++unmatched;
    else
      --it->second;
  }
  return unmatched;
}

bool cones_adjacent(const Ideal& ideal, const Cone& a, const Cone& b) {
  Ideal ia = cone_initial_ideal(ideal, a);
  Ideal ib = cone_initial_ideal(ideal, b);
  for (const Ideal* c : {&ia, &ib})
    if (!is_binomial(*c) || !is_prime_binomial(*c))
      throw Error(ErrorCode::NotCertified, "cone initial ideal is not binomial prime");
  if (a.rays.size() != b.rays.size()) return false;
  if (unmatched_rays(a, b) != 1 || unmatched_rays(b, a) != 1) return false;
  return !ideal_equal(ia, ib);
}

ConeReport certify_cone(const Ideal& ideal, const Cone& cone) {
  ConeReport r;
  try {
    r.initial_ideal = cone_initial_ideal(ideal, cone);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotACone) throw;
    return r;
  }
  r.monomial_free = true;
  r.binomial = is_binomial(r.initial_ideal);
  if (!r.binomial) return r;
  r.prime = is_prime_binomial(r.initial_ideal);
  r.certificate = is_totally_positive(r.initial_ideal);
  return r;
}

}  // namespace tropcluster
