#include "properties.hpp"

#include <functional>
#include <numeric>

#include "tropcluster/apps.hpp"

namespace tropcluster::props {

namespace {

void expect(Result& r, bool ok, const std::string& what) {
  ++r.checked;
  if (!ok && r.failures.size() < 10) r.failures.push_back(what);
}

std::string word_string(const MutationWord& w) {
  std::string s;
  for (auto k : w) s += std::to_string(k);
  return s.empty() ? "()" : s;
}

// Interior point of a cone: the sum of its rays.
QVector interior(const Cone& c, std::size_t n) {
  QVector w(n);
  for (const auto& r : c.rays)
    for (std::size_t i = 0; i < n; ++i) w[i] += r[i];
  return w;
}

void check_weight(Result& r, const Ideal& J, const QVector& w, const std::vector<QVector>& lin, const std::string& tag) {
  Ideal in = initial_ideal(J, OrderSpec::weight(w));
  expect(r, ideal_equal(initial_ideal(in, OrderSpec::weight(w)), in), tag + ": init is not idempotent");
  for (std::size_t l = 0; l < lin.size(); ++l)
    for (int t : {1, -2}) {
      QVector s = w;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += t * lin[l][i];
      expect(r, ideal_equal(initial_ideal(J, OrderSpec::weight(s)), in),
             tag + ": lineality vector " + std::to_string(l + 1) + " changes init");
    }
}

}  // namespace

SeedData random_rank3_seed(std::mt19937& rng, std::size_t m) {
  std::uniform_int_distribution<int> e(-1, 1);
  for (;;) {
    SeedData s;
    s.n = 3;
    s.m = m;
    const std::size_t N = 3 + m;
    s.B = IntMatrix(N, N);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        s.B(i, j) = e(rng);
        s.B(j, i) = -s.B(i, j);
      }
    for (std::size_t i = 3; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) s.B(i, j) = e(rng);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < N; ++j) s.B(i, j) = -s.B(j, i);
    s.d.assign(N, 1);
    for (std::size_t i = 0; i < N; ++i) s.labels.push_back("A" + std::to_string(i + 1));
    QMatrix cols(N, 3);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < 3; ++j) cols(i, j) = s.B(i, j);
    if (rank(cols) == 3) return s;
  }
}

MutationWord random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), dir(1, 3);
  MutationWord w;
  std::size_t L = len(rng);
  while (w.size() < L) {
    std::size_t k = dir(rng);
    if (w.empty() || w.back() != k) w.push_back(k);
  }
  return w;
}

Result mutation_involution(unsigned trials) {
  Result r{"mutation involution on random rank-3 seeds", 0, {}};
  std::mt19937 rng(11);
  for (unsigned t = 0; t < trials; ++t) {
    SeedData s = mutate_along(random_rank3_seed(rng, 1 + t % 2), random_word(rng, 4));
    for (std::size_t k = 1; k <= 3; ++k)
      expect(r, mutate_matrix(mutate_matrix(s, k), k) == s, "trial " + std::to_string(t) + " k=" + std::to_string(k));
  }
  return r;
}

Result mutation_sign_consistency(unsigned trials) {
  Result r{"matrix mutation agrees for both sign choices", 0, {}};
  std::mt19937 rng(12);
  for (unsigned t = 0; t < trials; ++t) {
    SeedData s = mutate_along(random_rank3_seed(rng, 2), random_word(rng, 4));
    QMatrix bt = to_rational(s.B).transpose();
    for (std::size_t k = 1; k <= 3; ++k) {
      auto p = mu_matrices(s, k, Sign::Plus);
      auto q = mu_matrices(s, k, Sign::Minus);
      QMatrix expected = to_rational(mutate_matrix(s, k).B).transpose();
      expect(r, p.X * bt * p.A == q.X * bt * q.A && p.X * bt * p.A == expected,
             "trial " + std::to_string(t) + " k=" + std::to_string(k));
    }
  }
  return r;
}

Result gvector_oracle_agreement(unsigned trials) {
  Result r{"g-vectors by Laurent expansion and by transport agree", 0, {}};
  std::mt19937 rng(13);
  for (unsigned t = 0; t < trials; ++t) {
    SeedData s = random_rank3_seed(rng, 1 + t % 2);
    MutationWord w = random_word(rng, 6);
    std::vector<BasisElement> basis;
    for (std::size_t i = 1; i <= 3; ++i) basis.push_back({w, i, ""});
    bool ok = true;
    try {
      gmatrix(s, basis, {});
    } catch (const Error&) {
      ok = false;
    }
    expect(r, ok, "trial " + std::to_string(t) + " word " + word_string(w));
  }
  return r;
}

Result census_initial_ideals() {
  Result r{"init idempotence and lineality invariance on census cones", 0, {}};
  {
    const Ideal J3 = flag_plucker_ideal(3);
    const auto lin = lineality_vectors(*plucker_ring(3));
    for (const auto& ray : flag3_census().rays) check_weight(r, J3, ray.weight, lin, "Flag_3 " + ray.name);
  }
  for (bool extended : {false, true}) {
    const Ideal J = extended ? flag4_extended_ideal() : flag_plucker_ideal(4);
    const auto lin = lineality_vectors(*J.ring());
    const CensusReport rep = extended ? flag4_extended_census() : flag4_census();
    for (const auto& c : rep.cones) {
      Cone cone = census_cone(c.rays, extended);
      check_weight(r, J, interior(cone, J.ring()->nvars()), lin, (extended ? "I^ex " : "J_4 ") + c.name);
    }
  }
  return r;
}

Result contains_monomial_enumeration(unsigned trials) {
  Result r{"contains_monomial agrees with enumeration", 0, {}};
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> nv(2, 3), coef(-2, 2), ex(0, 2), nterms(1, 3), ngens(1, 3);
  while (r.checked < trials) {
    std::size_t n = static_cast<std::size_t>(nv(rng));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto ring = PolyRing::make(names);
    std::vector<Polynomial> gens;
    int g = ngens(rng);
    for (int k = 0; k < g; ++k) {
      Polynomial f(ring);
      int t = nterms(rng);
      for (int s = 0; s < t; ++s) {
        Exponent e(n);
        for (auto& v : e) v = ex(rng);
        f = f + Polynomial::monomial(ring, e, coef(rng));
      }
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    Ideal id(ring, gens);
    bool brute = false;
    Exponent e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (brute) return;
      if (i == n) {
        brute = id.contains(Polynomial::monomial(ring, e));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
      e[i] = 0;
    };
    rec(0, 6);
    std::string gs;
    for (const auto& s : id.to_strings()) gs += (gs.empty() ? "" : ", ") + s;
    expect(r, contains_monomial(id) == brute, "(" + gs + ")");
  }
  return r;
}

Result prime_binomial_factoring(unsigned trials) {
  // x^a - c x^b factors iff the monomials share a variable or a - b is a
  // proper multiple d*v (then it splits over the d-th roots of c).
  Result r{"is_prime_binomial agrees with the factoring criterion", 0, {}};
  auto ring = PolyRing::make({"x", "y", "z"});
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> ex(0, 3);
  const long coefs[] = {1, -1, 2, -4};
  while (r.checked < trials) {
    Exponent a(3), b(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = ex(rng);
      b[i] = ex(rng);
    }
    if (a == b) continue;
    long c = coefs[rng() % 4];
    Polynomial f = Polynomial::monomial(ring, a) - Polynomial::monomial(ring, b, c);
    bool share = false;
    long g = 0;
    for (int i = 0; i < 3; ++i) {
      share = share || (a[i] > 0 && b[i] > 0);
      g = std::gcd(g, static_cast<long>(a[i] - b[i]));
    }
    expect(r, is_prime_binomial(Ideal(ring, {f})) == (!share && g == 1), f.to_string());
  }
  return r;
}

std::vector<Result> all() {
  return {mutation_involution(),           mutation_sign_consistency(),     gvector_oracle_agreement(),
          census_initial_ideals(),         contains_monomial_enumeration(), prime_binomial_factoring()};
}

}  // namespace tropcluster::props
