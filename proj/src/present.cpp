#include "tropcluster/present.hpp"

#include <set>

namespace tropcluster {

void KhovanskiiSpec::validate() const {
  seed.validate();
  std::set<std::string> seen;
  for (const auto& b : basis) {
    if (b.name.empty()) throw Error(ErrorCode::InvalidArgument, "basis element without a name");
    if (!seen.insert(b.name).second) throw Error(ErrorCode::InvalidArgument, "duplicate basis name " + b.name);
    if (b.index == 0 || b.index > seed.size())
      throw Error(ErrorCode::InvalidArgument, "basis element " + b.name + " has an index out of range");
    for (auto k : b.word)
      if (k == 0 || k > seed.n) throw Error(ErrorCode::InvalidArgument, "basis element " + b.name + " has a bad word");
  }
}

std::vector<std::string> canonical_generators(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner_basis(OrderSpec::term(TermOrder::GRevLex))) out.push_back(g.to_string());
  return out;
}

Presentation presentation_ideal(const KhovanskiiSpec& spec) {
  spec.validate();
  const SeedData& seed = spec.seed;
  const std::size_t N = seed.size(), K = spec.basis.size();

  Presentation p;
  std::vector<std::string> xs, names;
  for (const auto& b : spec.basis) {
    xs.push_back(b.name);
    p.images.push_back(laurent_expand(seed, b.word, b.index));
  }
  names = xs;
  for (std::size_t i = 0; i < N; ++i) names.push_back("_a" + std::to_string(i + 1));
  names.push_back("_u");
  RingPtr big = PolyRing::make(names);

  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < K; ++j) {
    // Shift by a^d so that every exponent of the image is nonnegative.
    Exponent shift(N, 0);
    for (const auto& [e, c] : p.images[j].terms())
      for (std::size_t i = 0; i < N; ++i) shift[i] = std::max(shift[i], -e[i]);
    Exponent lhs(names.size(), 0);
    lhs[j] = 1;
    for (std::size_t i = 0; i < N; ++i) lhs[K + i] = shift[i];
    Polynomial g = Polynomial::monomial(big, lhs);
    for (const auto& [e, c] : p.images[j].terms()) {
      Exponent t(names.size(), 0);
      for (std::size_t i = 0; i < N; ++i) t[K + i] = e[i] + shift[i];
      g = g - Polynomial::monomial(big, t, c);
    }
    gens.push_back(std::move(g));
  }
  Exponent ua(names.size(), 0);
  for (std::size_t i = 0; i < N; ++i) ua[K + i] = 1;
  ua.back() = 1;
  gens.push_back(Polynomial::monomial(big, ua) - Polynomial::constant(big, 1));

  p.ideal = eliminate(Ideal(big, gens), xs);
  p.ring = p.ideal.ring();
  if (K > 0) {
    Polynomial prod = Polynomial::monomial(p.ring, Exponent(K, 1));
    if (!ideal_equal(saturate(p.ideal, prod), p.ideal))
      throw Error(ErrorCode::Internal, "eliminated kernel is not saturated");
  }

  // Without a full-rank exchange matrix there is no ray matrix; the grading
  // stays empty.
  if (K > 0 && rank(to_rational(seed.B)) == N) {
    QMatrix R = ray_matrix(spec, {});
    for (std::size_t r = seed.n; r < N; ++r) p.grading.push_back(R.row(r));
  }
  return p;
}

QMatrix ray_matrix(const KhovanskiiSpec& spec, const MutationWord& frame) {
  spec.validate();
  QMatrix G = gmatrix(spec.seed, spec.basis, frame);
  SeedData f = mutate_along(spec.seed, frame);
  return -invert(to_rational(f.B)).transpose() * G;
}

std::vector<QVector> gvector_weighting(const KhovanskiiSpec& spec, const MutationWord& frame) {
  spec.validate();
  QMatrix G = gmatrix(spec.seed, spec.basis, frame);
  SeedData f = mutate_along(spec.seed, frame);
  QVector phi;
  if (!dominance_functional(f, phi))
    throw Error(ErrorCode::SingularMatrix, "mutable columns of the exchange matrix are dependent");
  const std::size_t N = f.size(), K = G.cols();
  std::vector<QVector> rows;
  QVector top(K);
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t i = 0; i < N; ++i) top[j] -= phi[i] * G(i, j);
  rows.push_back(std::move(top));
  for (std::size_t i = 0; i < N; ++i) rows.push_back(negated(G.row(i)));
  return rows;
}

bool verify_khovanskii(const KhovanskiiSpec& spec, const Presentation& p, const MutationWord& frame) {
  Ideal in = initial_ideal(p.ideal, OrderSpec::matrix(gvector_weighting(spec, frame)));
  return !contains_monomial(in) && is_binomial(in) && is_prime_binomial(in);
}

bool verify_khovanskii(const KhovanskiiSpec& spec, const MutationWord& frame) {
  return verify_khovanskii(spec, presentation_ideal(spec), frame);
}

Cone ray_cone(const QMatrix& rays) {
  Cone c;
  for (std::size_t i = 0; i < rays.rows(); ++i) c.rays.push_back(negated(rays.row(i)));
  return c;
}

bool TheoremReport::passed() const { return first_failure().empty(); }

std::string TheoremReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.passed) return c.name;
  return {};
}

namespace {

struct ConeCheck {
  bool tropical = false;
  Ideal ideal;
  PositivityCertificate cert;
  bool prime = false;
};

ConeCheck check_cone(const Ideal& j, const Cone& cone, const std::string& tag, std::vector<Clause>& out) {
  ConeCheck r;
  try {
    r.ideal = cone_initial_ideal(j, cone);
    r.tropical = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotACone) throw;
  }
  out.push_back({tag + ".monomial_free", r.tropical, r.tropical ? "" : "initial ideal contains a monomial"});
  if (!r.tropical) {
    for (const char* name : {".binomial", ".prime", ".totally_positive"}) out.push_back({tag + name, false, "skipped"});
    return r;
  }
  bool bin = is_binomial(r.ideal);
  out.push_back({tag + ".binomial", bin, ""});
  r.prime = bin && is_prime_binomial(r.ideal);
  out.push_back({tag + ".prime", r.prime, ""});
  r.cert = is_totally_positive(r.ideal);
  bool pos = r.cert.verdict == PositivityCertificate::Verdict::Positive;
  out.push_back({tag + ".totally_positive", pos,
                 r.cert.verdict == PositivityCertificate::Verdict::NotPositive ? r.cert.witness.to_string()
                                                                             : verdict_name(r.cert.verdict)});
  return r;
}

}  // namespace

TheoremReport verify_main_theorem(const KhovanskiiSpec& spec) {
  spec.validate();
  const SeedData& seed = spec.seed;
  const std::size_t n = seed.n, N = seed.size();
  TheoremReport rep;
  for (const auto& b : spec.basis) rep.labels.push_back(b.name);

  Presentation p = presentation_ideal(spec);

  // Hypothesis: the basis holds every variable of the seed and of each mu_k(seed).
  {
    std::vector<std::string> missing;
    auto present = [&](const LaurentPoly& f) {
      for (const auto& g : p.images)
        if (g == f) return true;
      return false;
    };
    for (std::size_t i = 1; i <= N; ++i)
      if (!present(laurent_expand(seed, {}, i))) missing.push_back(seed.labels[i - 1]);
    for (std::size_t k = 1; k <= n; ++k)
      if (!present(laurent_expand(seed, {k}, k))) missing.push_back("mu_" + std::to_string(k) + "(" + seed.labels[k - 1] + ")");
    std::string w;
    for (const auto& m : missing) w += (w.empty() ? "" : ", ") + m;
    rep.clauses.push_back({"hypothesis.contains_adjacent_clusters", missing.empty(), w});
  }

  rep.frame_rays = ray_matrix(spec, {});
  ConeCheck base = check_cone(p.ideal, ray_cone(rep.frame_rays), "s", rep.clauses);
  if (base.tropical) rep.frame_ideal = canonical_generators(base.ideal);

  for (std::size_t r = n; r < N; ++r) {
    Ideal in = initial_ideal(p.ideal, OrderSpec::weight(negated(rep.frame_rays.row(r))));
    rep.clauses.push_back({"s.frozen_row_" + std::to_string(r + 1) + "_lineality", ideal_equal(in, p.ideal), ""});
  }

  for (std::size_t k = 1; k <= n; ++k) {
    const std::string tag = "mu_" + std::to_string(k);
    QMatrix R = ray_matrix(spec, {k});
    rep.mutated_rays[k] = R;
    ConeCheck mc = check_cone(p.ideal, ray_cone(R), tag, rep.clauses);
    if (mc.tropical) rep.mutated_ideals[k] = canonical_generators(mc.ideal);

    std::string diff;
    bool row_k_differs = false, others_agree = true;
    for (std::size_t r = 0; r < N; ++r) {
      bool same = R.row(r) == rep.frame_rays.row(r);
      if (r + 1 == k)
        row_k_differs = !same;
      else if (!same) {
        others_agree = false;
        diff += (diff.empty() ? "rows " : ",") + std::to_string(r + 1);
      }
    }
    rep.clauses.push_back({tag + ".single_row_difference", row_k_differs && others_agree,
                           row_k_differs ? diff : "row " + std::to_string(k) + " unchanged"});

    bool adjacent = false;
    std::string why;
    if (base.tropical && mc.tropical && base.prime && mc.prime) {
      bool both_positive = base.cert.verdict == PositivityCertificate::Verdict::Positive &&
                           mc.cert.verdict == PositivityCertificate::Verdict::Positive;
      adjacent = both_positive && cones_adjacent(p.ideal, ray_cone(rep.frame_rays), ray_cone(R));
      if (!both_positive) why = "missing positivity certificate";
      else if (!adjacent) why = "cones do not share a facet or ideals coincide";
    } else {
      why = "cone ideals not certified binomial prime";
    }
    rep.clauses.push_back({tag + ".adjacent", adjacent, why});
  }
  return rep;
}

}  // namespace tropcluster
