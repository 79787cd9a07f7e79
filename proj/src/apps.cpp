#include "tropcluster/apps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "embedded_data.hpp"
#include "parallel.hpp"
#include "tropcluster/present.hpp"

namespace tropcluster {

namespace {

using json = nlohmann::json;

void check_n(unsigned n, unsigned lo, unsigned hi) {
  if (n < lo || n > hi)
    throw Error(ErrorCode::UnsupportedN,
                "n = " + std::to_string(n) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
}

std::string subset_name(const std::vector<int>& J) {
  std::string s = "p";
  for (int j : J) s += std::to_string(j);
  return s;
}

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    combinations(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  combinations(n, k, 1, cur, out);
  return out;
}

unsigned n_of_ring(const PolyRing& ring) {
  for (unsigned n = 2; n <= 9; ++n)
    if ((1u << n) - 2 == ring.nvars()) return n;
  throw Error(ErrorCode::InvalidArgument, "ring is not a Plücker ring");
}

// Sorts `seq` in place and returns the parity of the sorting permutation.
int sort_sign(std::vector<int>& seq) {
  int s = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) s = -s;
  std::sort(seq.begin(), seq.end());
  return s;
}

json load(std::string_view name) { return json::parse(embedded_data(name)); }

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

// Same names as the Plücker ring; generators are moved over.
Ideal into_ring(const Ideal& ideal, const RingPtr& ring) {
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators()) g.push_back(p.in_ring(ring));
  return Ideal(ring, std::move(g));
}

}  // namespace

std::string PluckerVar::name() const { return subset_name(J); }

std::vector<PluckerVar> plucker_vars(unsigned n) {
  std::vector<PluckerVar> out;
  for (unsigned k = 1; k < n; ++k)
    for (auto& J : subsets_of_size(static_cast<int>(n), static_cast<int>(k))) out.push_back({std::move(J)});
  return out;
}

RingPtr plucker_ring(unsigned n) {
  check_n(n, 2, 6);
  static std::mutex mu;
  static std::map<unsigned, RingPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::string> names;
  std::vector<std::vector<long>> deg;
  for (const auto& v : plucker_vars(n)) {
    names.push_back(v.name());
    std::vector<long> d(n - 1, 0);
    d[v.J.size() - 1] = 1;
    deg.push_back(std::move(d));
  }
  return cache[n] = PolyRing::make(std::move(names), std::move(deg));
}

namespace {

// Minors det X[J, 1..|J|] of a generic n x n matrix, memoized by row mask.
class GenericMinors {
 public:
  explicit GenericMinors(unsigned n) : n_(n) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
    ring_ = PolyRing::make(std::move(names));
  }

  const RingPtr& ring() const { return ring_; }

  const Polynomial& minor(const std::vector<int>& rows) {
    unsigned mask = 0;
    for (int r : rows) mask |= 1u << (r - 1);
    return get(mask);
  }

 private:
  const Polynomial& get(unsigned mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const unsigned k = static_cast<unsigned>(__builtin_popcount(mask));
    Polynomial out(ring_);
    if (k == 0) {
      out = Polynomial::constant(ring_, 1);
    } else {
      // Expansion along column k.
      int sign = (k % 2 == 1) ? 1 : -1;
      for (unsigned r = 0; r < n_; ++r) {
        if (!(mask & (1u << r))) continue;
        Polynomial x = Polynomial::variable(ring_, r * n_ + (k - 1));
        Polynomial term = x * get(mask & ~(1u << r));
        out = sign > 0 ? out + term : out - term;
        sign = -sign;
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

  unsigned n_;
  RingPtr ring_;
  std::map<unsigned, Polynomial> memo_;
};

Rational integer_minor(const std::vector<std::vector<long>>& X, const std::vector<int>& rows) {
  const std::size_t k = rows.size();
  QMatrix m(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m(a, b) = X[static_cast<std::size_t>(rows[a] - 1)][b];
  return determinant(m);
}

Ideal compute_flag_ideal(unsigned n) {
  RingPtr ring = plucker_ring(n);
  const auto vars = plucker_vars(n);
  GenericMinors minors(n);
  std::mt19937_64 rng(20240611u + n);
  std::uniform_int_distribution<long> entry(-9, 9);

  std::vector<Polynomial> gens;
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = a; b < n; ++b) {
      std::vector<std::pair<std::size_t, std::size_t>> prods;
      for (std::size_t u = 0; u < vars.size(); ++u)
        for (std::size_t v = u; v < vars.size(); ++v)
          if (vars[u].J.size() == a && vars[v].J.size() == b) prods.emplace_back(u, v);
      // Relations vanish at every point; evaluating at more random integer
      // matrices than there are products cuts the kernel down to the true
      // one with overwhelming probability, and each kernel vector is then
      // checked symbolically, so the result is exact.
      const std::size_t pts = prods.size() + 12;
      QMatrix E(pts, prods.size());
      for (std::size_t p = 0; p < pts; ++p) {
        std::vector<std::vector<long>> X(n, std::vector<long>(n));
        for (auto& row : X)
          for (auto& x : row) x = entry(rng);
        std::vector<Rational> val(vars.size());
        for (std::size_t u = 0; u < vars.size(); ++u) val[u] = integer_minor(X, vars[u].J);
        for (std::size_t c = 0; c < prods.size(); ++c) E(p, c) = val[prods[c].first] * val[prods[c].second];
      }
      for (const auto& kv : kernel_basis(E)) {
        ZVector coeffs = primitive_integer_vector(kv);
        Polynomial rel(ring), check(minors.ring());
        for (std::size_t c = 0; c < prods.size(); ++c) {
          if (coeffs[c] == 0) continue;
          Rational q(coeffs[c]);
          auto [u, v] = prods[c];
          rel = rel + Polynomial::variable(ring, u) * Polynomial::variable(ring, v) * q;
          check = check + minors.minor(vars[u].J) * minors.minor(vars[v].J) * q;
        }
        if (!check.is_zero()) throw Error(ErrorCode::Internal, "numerical kernel vector is not a Plücker relation");
        gens.push_back(std::move(rel));
      }
    }
  // The degree-2 part is the span of the generators, so a three-term
  // relation lies in the ideal iff it vanishes on the minors.
  std::vector<Polynomial> images;
  for (const auto& v : vars) images.push_back(minors.minor(v.J));
  for (const auto& r : three_term_relations(n))
    if (!r.substitute(images, minors.ring()).is_zero())
      throw Error(ErrorCode::Internal, "three-term relation " + r.to_string() + " does not vanish on the minors");
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal flag_plucker_ideal(unsigned n) {
  check_n(n, 3, 5);
  static std::mutex mu;
  static std::map<unsigned, Ideal> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Ideal I = compute_flag_ideal(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(I)).first->second;
}

Polynomial three_term_relation(unsigned n, const std::vector<int>& J, int i, int j, int k) {
  check_n(n, 3, 6);
  if (!(i < j && j < k)) throw Error(ErrorCode::IndexClash, "indices must satisfy i < j < k");
  std::set<int> seen;
  for (int v : J) {
    if (v < 1 || v > static_cast<int>(n)) throw Error(ErrorCode::InvalidArgument, "index outside 1..n");
    if (!seen.insert(v).second) throw Error(ErrorCode::IndexClash, "repeated index in J");
  }
  for (int v : {i, j, k}) {
    if (v < 1 || v > static_cast<int>(n)) throw Error(ErrorCode::InvalidArgument, "index outside 1..n");
    if (seen.count(v)) throw Error(ErrorCode::IndexClash, "index " + std::to_string(v) + " lies in J");
  }
  if (J.size() + 2 >= n) throw Error(ErrorCode::InvalidArgument, "|J| must be at most n - 3");
  RingPtr ring = plucker_ring(n);
  auto var = [&](std::initializer_list<int> extra) {
    std::vector<int> s(J.begin(), J.end());
    s.insert(s.end(), extra);
    std::sort(s.begin(), s.end());
    return Polynomial::variable(ring, subset_name(s));
  };
  return var({i}) * var({j, k}) - var({j}) * var({i, k}) + var({k}) * var({i, j});
}

std::vector<Polynomial> three_term_relations(unsigned n) {
  std::vector<Polynomial> out;
  for (unsigned s = 0; s + 3 <= n; ++s)
    for (const auto& J : subsets_of_size(static_cast<int>(n), static_cast<int>(s))) {
      std::vector<int> rest;
      for (int v = 1; v <= static_cast<int>(n); ++v)
        if (std::find(J.begin(), J.end(), v) == J.end()) rest.push_back(v);
      for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b)
          for (std::size_t c = b + 1; c < rest.size(); ++c)
            out.push_back(three_term_relation(n, J, rest[a], rest[b], rest[c]));
    }
  return out;
}

Permutation parse_permutation(const std::string& text, unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  auto digit = [&](char c) {
    int v = c - '0';
    if (v < 1 || v > static_cast<int>(n)) throw Error(ErrorCode::Parse, "bad permutation entry in " + text);
    return v;
  };
  if (text.find('(') != std::string::npos) {
    std::vector<int> cycle;
    bool open = false;
    std::vector<bool> used(n + 1, false);
    for (char c : text) {
      if (c == ' ') continue;
      if (c == '(') {
        if (open) throw Error(ErrorCode::Parse, "nested cycle in " + text);
        open = true;
        cycle.clear();
      } else if (c == ')') {
        if (!open) throw Error(ErrorCode::Parse, "unbalanced cycle in " + text);
        open = false;
        for (std::size_t t = 0; t < cycle.size(); ++t) p[cycle[t] - 1] = cycle[(t + 1) % cycle.size()];
      } else {
        if (!open) throw Error(ErrorCode::Parse, "entry outside a cycle in " + text);
        int v = digit(c);
        if (used[v]) throw Error(ErrorCode::Parse, "repeated entry in " + text);
        used[v] = true;
        cycle.push_back(v);
      }
    }
    if (open) throw Error(ErrorCode::Parse, "unterminated cycle in " + text);
    return p;
  }
  std::vector<int> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad permutation entry in " + text);
    }
  }
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != p) throw Error(ErrorCode::Parse, "not a permutation of 1.." + std::to_string(n) + ": " + text);
  return vals;
}

std::string cycle_string(const Permutation& sigma) {
  std::string out;
  std::vector<bool> done(sigma.size() + 1, false);
  for (int i = 1; i <= static_cast<int>(sigma.size()); ++i) {
    if (done[i] || sigma[i - 1] == i) continue;
    out += '(';
    for (int v = i; !done[v]; v = sigma[v - 1]) {
      done[v] = true;
      out += std::to_string(v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "permutations of different degree");
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return c;
}

std::vector<Permutation> all_permutations(unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i + 1);
  return inv;
}

Polynomial sn_action(const Permutation& sigma, const Polynomial& f) {
  const RingPtr& ring = f.ring();
  const unsigned n = n_of_ring(*ring);
  if (sigma.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation degree differs from the ring");
  std::vector<Polynomial> images;
  for (const auto& v : plucker_vars(n)) {
    std::vector<int> img;
    for (int j : v.J) img.push_back(sigma[static_cast<std::size_t>(j - 1)]);
    int s = sort_sign(img);
    Polynomial p = Polynomial::variable(ring, subset_name(img));
    images.push_back(s > 0 ? p : -p);
  }
  return f.substitute(images, ring);
}

Ideal sn_action(const Permutation& sigma, const Ideal& ideal) {
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators()) g.push_back(sn_action(sigma, p));
  return Ideal(ideal.ring(), std::move(g));
}

std::vector<std::pair<int, int>> root_sequence(unsigned n) {
  std::vector<std::pair<int, int>> out;
  for (int d = static_cast<int>(n) - 1; d >= 1; --d)
    for (int i = 1; i + d <= static_cast<int>(n); ++i) out.emplace_back(i, i + d);
  return out;
}

namespace {

void check_subset(unsigned n, const std::vector<int>& L) {
  if (L.empty() || L.size() >= n) throw Error(ErrorCode::InvalidArgument, "Plücker index set must be proper and nonempty");
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (L[a] < 1 || L[a] > static_cast<int>(n)) throw Error(ErrorCode::InvalidArgument, "index outside 1..n");
    if (a > 0 && L[a - 1] >= L[a]) throw Error(ErrorCode::InvalidArgument, "index set must be strictly increasing");
  }
}

// Wedge of basis vectors as a map from increasing tuples to coefficients.
using Wedge = std::map<std::vector<int>, long>;

Wedge apply_root(const Wedge& w, int i, int j) {
  Wedge out;
  for (const auto& [t, c] : w)
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (t[p] != i || std::find(t.begin(), t.end(), j) != t.end()) continue;
      std::vector<int> u = t;
      u[p] = j;
      int s = sort_sign(u);
      long& slot = out[u];
      slot += s * c;
      if (slot == 0) out.erase(u);
    }
  return out;
}

void compositions(std::size_t parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(parts, total - v, cur, out);
    cur.pop_back();
  }
}

// a < b in the right-lexicographic order on exponents of equal degree: at
// the last differing entry a is larger.
bool right_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t r = a.size(); r-- > 0;)
    if (a[r] != b[r]) return a[r] > b[r];
  return false;
}

}  // namespace

std::vector<int> fflv_m_vector(unsigned n, const std::vector<int>& L) {
  check_subset(n, L);
  const int k = static_cast<int>(L.size());
  const auto roots = root_sequence(n);
  std::vector<int> low, high;
  for (int l : L) (l <= k ? low : high).push_back(l);
  std::vector<int> comp;
  for (int v = 1; v <= k; ++v)
    if (std::find(low.begin(), low.end(), v) == low.end()) comp.push_back(v);
  // The t-th smallest index above k comes from the t-th largest free slot
  // in 1..k (nested pairs).
  std::vector<int> m(roots.size(), 0);
  for (std::size_t t = 0; t < high.size(); ++t) {
    auto it = std::find(roots.begin(), roots.end(), std::make_pair(comp[comp.size() - 1 - t], high[t]));
    m[static_cast<std::size_t>(it - roots.begin())] = 1;
  }
  return m;
}

std::vector<int> fflv_m_vector_search(unsigned n, const std::vector<int>& L) {
  check_subset(n, L);
  const int k = static_cast<int>(L.size());
  const auto roots = root_sequence(n);
  std::vector<int> start(static_cast<std::size_t>(k));
  std::iota(start.begin(), start.end(), 1);
  for (int d = 0; d <= k; ++d) {
    std::vector<std::vector<int>> cands;
    std::vector<int> cur;
    compositions(roots.size(), d, cur, cands);
    std::vector<int> best;
    for (const auto& a : cands) {
      Wedge w{{start, 1}};
      // f^a = f_1^{a_1} ... f_N^{a_N}; the rightmost factor acts first.
      for (std::size_t r = roots.size(); r-- > 0 && !w.empty();)
        for (int e = 0; e < a[r] && !w.empty(); ++e) w = apply_root(w, roots[r].first, roots[r].second);
      if (w.size() == 1 && w.begin()->first == L && (best.empty() || right_lex_less(a, best))) best = a;
    }
    if (!best.empty()) return best;
  }
  throw Error(ErrorCode::Internal, "no exponent reaches " + subset_name(L));
}

long fflv_root_degree(unsigned n, int i, int j) { return static_cast<long>(j - i + 1) * (static_cast<long>(n) - j + i); }

QMatrix fflv_weighting_matrix(unsigned n) {
  check_n(n, 3, 5);
  const auto roots = root_sequence(n);
  const auto vars = plucker_vars(n);
  QMatrix M(roots.size(), vars.size());
  for (std::size_t c = 0; c < vars.size(); ++c) {
    auto m = fflv_m_vector(n, vars[c].J);
    for (std::size_t r = 0; r < roots.size(); ++r) M(r, c) = m[r];
  }
  return M;
}

QVector fflv_weight_vector(unsigned n) {
  QMatrix M = fflv_weighting_matrix(n);
  const auto roots = root_sequence(n);
  QVector w(M.cols());
  for (std::size_t c = 0; c < M.cols(); ++c)
    for (std::size_t r = 0; r < M.rows(); ++r) w[c] += fflv_root_degree(n, roots[r].first, roots[r].second) * M(r, c);
  return w;
}

std::vector<QVector> fflv_order_rows(unsigned n) {
  QMatrix M = fflv_weighting_matrix(n);
  std::vector<QVector> rows;
  QVector total(M.cols());
  for (std::size_t c = 0; c < M.cols(); ++c)
    for (std::size_t r = 0; r < M.rows(); ++r) total[c] -= M(r, c);
  rows.push_back(std::move(total));
  for (std::size_t r = M.rows(); r-- > 0;) rows.push_back(M.row(r));
  return rows;
}

Polynomial fflv_initial_form(unsigned n, const Polynomial& f) {
  return initial_form(f, OrderSpec::weight(negated(fflv_weight_vector(n))));
}

Ideal fflv_initial_ideal(unsigned n) {
  check_n(n, 3, 5);
  static std::mutex mu;
  static std::map<unsigned, Ideal> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // The MAX engine keeps the largest weight; the valuation keeps the least.
  Ideal I = initial_ideal(flag_plucker_ideal(n), OrderSpec::weight(negated(fflv_weight_vector(n))));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(I)).first->second;
}

Flag3Report flag3_census() {
  const json data = load("flag3");
  Flag3Report rep;
  RingPtr ring = plucker_ring(3);
  Ideal J3 = flag_plucker_ideal(3);
  rep.ideal = canonical_generators(J3);
  rep.ideal_matches = ideal_equal(J3, Ideal::parse(ring, strings(data["ideal"])));
  if (!rep.ideal_matches) rep.failures.push_back("J_3 differs from the printed generator");
  const Polynomial tri = Polynomial::parse(ring, strings(data["ideal"]).at(0));

  std::set<std::set<Exponent>> supports;
  for (const auto& r : data["rays"]) {
    Flag3Ray ray;
    ray.name = r["name"].get<std::string>();
    ray.printed_weight = strings(r["printed"]);
    for (const auto& s : strings(r["weight"])) ray.weight.push_back(parse_rational(s));
    ray.corrected = r["corrected"].get<bool>();
    Ideal in = initial_ideal(J3, OrderSpec::weight(ray.weight));
    ray.initial_ideal = canonical_generators(in);
    ray.matches_printed = ideal_equal(in, Ideal::parse(ring, strings(r["initial"])));
    ray.tropical = !contains_monomial(in);
    PositivityCertificate cert = is_totally_positive(in);
    ray.verdict = verdict_name(cert.verdict);
    if (cert.verdict == PositivityCertificate::Verdict::NotPositive) ray.witness = cert.witness.to_string();

    const bool want_pos = r["positive"].get<bool>();
    if (!ray.matches_printed) rep.failures.push_back(ray.name + ": initial ideal differs from the printed one");
    if (!ray.tropical) rep.failures.push_back(ray.name + ": initial ideal contains a monomial");
    if (want_pos && cert.verdict != PositivityCertificate::Verdict::Positive)
      rep.failures.push_back(ray.name + ": expected a positive certificate, got " + ray.verdict);
    if (!want_pos) {
      const Polynomial expected = Polynomial::parse(ring, strings(r["initial"]).at(0));
      if (cert.verdict != PositivityCertificate::Verdict::NotPositive || cert.witness.monic() != expected.monic())
        rep.failures.push_back(ray.name + ": expected the printed generator as a not_positive witness");
    }
    std::set<Exponent> supp;
    const Polynomial lead = initial_form(tri, OrderSpec::weight(ray.weight));
    for (const auto& [e, c] : lead.terms()) supp.insert(e);
    if (supp.size() == 2) supports.insert(supp);
    rep.rays.push_back(std::move(ray));
  }
  // A trinomial has exactly three ray classes, one per pair of its terms.
  rep.all_classes = tri.size() == 3 && supports.size() == 3;
  if (!rep.all_classes) rep.failures.push_back("the rays do not cover the three term pairs of J_3");
  return rep;
}

namespace {

struct CensusSetup {
  RingPtr ring;
  Ideal ideal;
  std::map<std::string, QVector> rays;
};

CensusSetup census_setup(bool extended) {
  const json data = load("flag4");
  CensusSetup s;
  RingPtr base = plucker_ring(4);
  const std::size_t off = extended ? 1 : 0;
  if (extended) {
    std::vector<std::string> names{"x"};
    std::vector<std::vector<long>> deg{{1, 0, 1}};
    names.insert(names.end(), base->names().begin(), base->names().end());
    deg.insert(deg.end(), base->degrees().begin(), base->degrees().end());
    s.ring = PolyRing::make(std::move(names), std::move(deg));
    std::vector<Polynomial> g;
    const Ideal J4 = flag_plucker_ideal(4);
    for (const auto& p : J4.generators()) g.push_back(p.in_ring(s.ring));
    for (const auto& t : strings(data["extended"]["relations"])) g.push_back(Polynomial::parse(s.ring, t));
    s.ideal = Ideal(s.ring, std::move(g));
  } else {
    s.ring = base;
    s.ideal = flag_plucker_ideal(4);
  }
  std::set<std::string> with_x;
  if (extended)
    for (const auto& r : strings(data["extended"]["x_rays"])) with_x.insert(r);
  for (const auto& [name, parts] : data["rays"].items()) {
    QVector v(s.ring->nvars());
    for (const auto& e : strings(parts)) {
      int idx = base->index_of("p" + e.substr(1));
      if (idx < 0) throw Error(ErrorCode::Internal, "unknown basis vector " + e);
      v[static_cast<std::size_t>(idx) + off] -= 1;
    }
    // Listed rays are in the MIN convention; the engine maximizes.
    if (with_x.count(name)) v[0] -= 1;
    s.rays.emplace(name, std::move(v));
  }
  return s;
}

}  // namespace

Cone census_cone(const std::vector<std::string>& rays, bool extended) {
  CensusSetup s = census_setup(extended);
  Cone c;
  c.lineality = lineality_vectors(*s.ring);
  for (const auto& r : rays) {
    auto it = s.rays.find(r);
    if (it == s.rays.end()) throw Error(ErrorCode::InvalidArgument, "unknown ray " + r);
    c.rays.push_back(it->second);
  }
  return c;
}

namespace {

void run_census(CensusReport& rep, const CensusSetup& s, const json& cones, bool extended, unsigned jobs) {
  rep.variables = s.ring->names();
  for (const auto& c : cones) {
    CensusCone cc;
    cc.name = c["name"].get<std::string>();
    cc.rays = strings(c["rays"]);
    cc.listed_prime = !c.value("dagger", false);
    rep.cones.push_back(std::move(cc));
  }
  const auto lin = lineality_vectors(*s.ring);
  parallel_for(rep.cones.size(), jobs, [&](std::size_t i) {
    CensusCone& cc = rep.cones[i];
    Cone cone;
    cone.lineality = lin;
    for (const auto& r : cc.rays) cone.rays.push_back(s.rays.at(r));
    Ideal in;
    try {
      in = cone_initial_ideal(s.ideal, cone);
      cc.monomial_free = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotACone) throw;
      return;
    }
    cc.initial_ideal = canonical_generators(in);
    cc.binomial = is_binomial(in);
    cc.prime = cc.binomial && is_prime_binomial(in);
    cc.verdict = verdict_name(is_totally_positive(in).verdict);
  });

  for (const auto& cc : rep.cones) {
    if (!cc.monomial_free) rep.failures.push_back(cc.name + ": initial ideal contains a monomial");
    if (!cc.binomial) rep.failures.push_back(cc.name + ": initial ideal is not binomial");
    if (cc.prime != cc.listed_prime)
      rep.failures.push_back(cc.name + (cc.prime ? ": prime but listed as non-prime" : ": not prime"));
    if (cc.verdict != "positive") rep.failures.push_back(cc.name + ": positivity verdict " + cc.verdict);
  }

  // Two maximal cones of the simplicial fan are adjacent iff they share two rays.
  for (std::size_t a = 0; a < rep.cones.size(); ++a)
    for (std::size_t b = a + 1; b < rep.cones.size(); ++b) {
      std::vector<std::string> shared;
      for (const auto& r : rep.cones[a].rays)
        if (std::find(rep.cones[b].rays.begin(), rep.cones[b].rays.end(), r) != rep.cones[b].rays.end())
          shared.push_back(r);
      if (shared.size() != 2) continue;
      rep.edges.emplace_back(rep.cones[a].name, rep.cones[b].name);
      rep.cones[a].neighbours.push_back(rep.cones[b].name);
      rep.cones[b].neighbours.push_back(rep.cones[a].name);
      QVector mid = s.rays.at(shared[0]);
      for (std::size_t i = 0; i < mid.size(); ++i) mid[i] += s.rays.at(shared[1])[i];
      if (!in_tropicalization(s.ideal, mid))
        rep.failures.push_back(rep.cones[a].name + "/" + rep.cones[b].name + ": shared facet is not tropical");
    }
  rep.three_regular = std::all_of(rep.cones.begin(), rep.cones.end(), [](const CensusCone& c) { return c.neighbours.size() == 3; });
  if (!rep.three_regular) rep.failures.push_back("adjacency graph is not 3-regular");
  if (rep.cones.size() != 14 || rep.edges.size() != 21)
    rep.failures.push_back("expected 14 cones and 21 edges, found " + std::to_string(rep.cones.size()) + " and " +
                           std::to_string(rep.edges.size()));
  (void)extended;
}

}  // namespace

CensusReport flag4_census(unsigned jobs) {
  const json data = load("flag4");
  CensusReport rep;
  run_census(rep, census_setup(false), data["cones"], false, jobs);
  return rep;
}

Ideal flag4_extended_ideal() { return census_setup(true).ideal; }

CensusReport flag4_extended_census(unsigned jobs) {
  const json data = load("flag4");
  CensusSetup s = census_setup(true);
  CensusReport rep;

  rep.homogeneous = s.ideal.is_graded_homogeneous() &&
                    s.ideal.is_homogeneous(std::vector<long>(s.ring->total_degree_weights()));
  if (s.ring->total_degree_weights()[0] != 2) rep.homogeneous = false;
  if (!rep.homogeneous) rep.failures.push_back("I^ex is not homogeneous with deg x = 2");

  std::vector<std::string> pnames(s.ring->names().begin() + 1, s.ring->names().end());
  Ideal elim = into_ring(eliminate(s.ideal, pnames), plucker_ring(4));
  rep.elimination_matches = ideal_equal(elim, flag_plucker_ideal(4));
  if (!rep.elimination_matches) rep.failures.push_back("eliminating x from I^ex does not give J_4");

  run_census(rep, s, data["extended"]["cones"], true, jobs);

  for (const auto& pair : data["extended"]["bijection"]) {
    auto var = pair[0].get<std::string>(), ray = pair[1].get<std::string>();
    if (s.ring->index_of(var) < 0 || !s.rays.count(ray))
      rep.failures.push_back("bijection entry (" + var + ", " + ray + ") names an unknown variable or ray");
    rep.bijection.emplace_back(var, ray);
  }
  std::set<std::string> rays_used;
  for (const auto& [v, r] : rep.bijection) rays_used.insert(r);
  if (rays_used.size() != s.rays.size()) rep.failures.push_back("bijection does not cover every ray once");
  return rep;
}

std::size_t OrbitReport::positive() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const OrbitRow& r) { return r.verdict == "positive"; }));
}

std::size_t OrbitReport::not_positive() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const OrbitRow& r) { return r.verdict == "not_positive"; }));
}

std::size_t OrbitReport::inconclusive() const { return rows.size() - positive() - not_positive(); }

void OrbitReport::require_complete() const {
  for (const auto& r : rows)
    if (r.verdict != "positive" && r.verdict != "not_positive")
      throw Error(ErrorCode::MissingWitness, "no certificate for sigma = " + cycle_string(r.sigma));
}

OrbitReport verify_fflv_not_positive(unsigned n, const std::vector<Permutation>& perms, unsigned jobs) {
  check_n(n, 3, 5);
  OrbitReport rep;
  rep.n = n;
  std::vector<Polynomial> forms;
  for (const auto& r : three_term_relations(n)) forms.push_back(fflv_initial_form(n, r));
  for (const auto& sigma : perms.empty() ? all_permutations(n) : perms) {
    if (sigma.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation degree differs from n");
    rep.rows.push_back({sigma, "", "", ""});
  }
  std::once_flag once;
  Ideal fflv;
  parallel_for(rep.rows.size(), jobs, [&](std::size_t i) {
    OrbitRow& row = rep.rows[i];
    for (const auto& f : forms) {
      Polynomial g = sn_action(row.sigma, f);
      if (is_one_signed(g)) {
        row.verdict = "not_positive";
        row.witness_class = "three_term";
        row.witness = g.to_string();
        return;
      }
    }
    std::call_once(once, [&] { fflv = fflv_initial_ideal(n); });
    PositivityCertificate cert = is_totally_positive(sn_action(row.sigma, fflv));
    row.verdict = verdict_name(cert.verdict);
    if (cert.verdict == PositivityCertificate::Verdict::NotPositive) {
      row.witness_class = "groebner";
      row.witness = cert.witness.to_string();
    } else if (cert.verdict == PositivityCertificate::Verdict::Positive) {
      row.witness_class = "certificate";
    }
  });
  return rep;
}

FflvReport fflv_report(unsigned n) {
  check_n(n, 3, 5);
  FflvReport rep;
  rep.n = n;
  for (const auto& v : plucker_vars(n)) rep.variables.push_back(v.name());
  rep.roots = root_sequence(n);
  rep.M = fflv_weighting_matrix(n);
  rep.weight = fflv_weight_vector(n);

  rep.oracle_matches = true;
  for (const auto& v : plucker_vars(n))
    if (fflv_m_vector(n, v.J) != fflv_m_vector_search(n, v.J)) {
      rep.oracle_matches = false;
      rep.failures.push_back("m vector of " + v.name() + " differs from the search");
    }

  Ideal J = flag_plucker_ideal(n);
  Ideal in = fflv_initial_ideal(n);
  rep.matrix_equals_weight = ideal_equal(initial_ideal(J, OrderSpec::matrix(fflv_order_rows(n))), in);
  if (!rep.matrix_equals_weight) rep.failures.push_back("init_M differs from init_w");

  rep.initial_ideal = canonical_generators(in);
  rep.tropical = !contains_monomial(in);
  if (!rep.tropical) rep.failures.push_back("I_FFLV contains a monomial");
  rep.prime = is_binomial(in) && is_prime_binomial(in);
  if (!rep.prime) rep.failures.push_back("I_FFLV is not binomial prime");
  PositivityCertificate cert = is_totally_positive(in);
  rep.verdict = verdict_name(cert.verdict);
  if (cert.verdict == PositivityCertificate::Verdict::NotPositive) rep.witness = cert.witness.to_string();
  if (cert.verdict != PositivityCertificate::Verdict::NotPositive) rep.failures.push_back("I_FFLV is not certified not_positive");

  if (n == 4) {
    const json data = load("fflv4");
    RingPtr ring = plucker_ring(4);
    rep.matches_printed = ideal_equal(in, Ideal::parse(ring, strings(data["initial"])));
    if (!rep.matches_printed) rep.failures.push_back("I_FFLV differs from the printed generators");
    rep.sigma = data["sigma"].get<std::string>();
    Ideal img = sn_action(inverse(parse_permutation(rep.sigma, 4)), in);
    rep.sigma_ideal = canonical_generators(img);
    rep.sigma_matches_printed = ideal_equal(img, Ideal::parse(ring, strings(data["image"])));
    if (!rep.sigma_matches_printed) rep.failures.push_back("sigma(I_FFLV) differs from the printed ideal");
    rep.sigma_verdict = verdict_name(is_totally_positive(img).verdict);
    if (rep.sigma_verdict != "positive") rep.failures.push_back("sigma(I_FFLV) is not certified positive");
  }
  return rep;
}

}  // namespace tropcluster
