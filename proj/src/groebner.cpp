#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "tropcluster/poly.hpp"

namespace tropcluster {

namespace {

std::uint64_t budget_from_env() {
  const char* v = std::getenv("TROPCLUSTER_BUDGET");
  if (!v || !*v) return 0;
  try {
    return std::stoull(v);
  } catch (...) {
    return 0;
  }
}

std::atomic<std::uint64_t> g_budget{budget_from_env()};

using Row = std::vector<std::int64_t>;

Row scale_row(const QVector& r, std::size_t n) {
  if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "weight row length does not match ring");
  ZVector z = primitive_integer_vector(r);
  Row out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!z[i].fits_sint_p()) throw Error(ErrorCode::InvalidArgument, "weight entry too large");
    out[i] = z[i].get_si();
  }
  return out;
}

std::vector<Row> tiebreak_rows(TermOrder t, std::size_t n) {
  std::vector<Row> rows;
  auto unit = [n](std::size_t i, std::int64_t v) {
    Row r(n, 0);
    r[i] = v;
    return r;
  };
  switch (t) {
    case TermOrder::Lex:
      for (std::size_t i = 0; i < n; ++i) rows.push_back(unit(i, 1));
      break;
    case TermOrder::GRevLex:
      rows.emplace_back(n, 1);
      for (std::size_t i = n; i-- > 1;) rows.push_back(unit(i, -1));
      break;
    case TermOrder::GLex:
      rows.emplace_back(n, 1);
      for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(unit(i, 1));
      break;
  }
  return rows;
}

std::vector<Row> spec_rows(const OrderSpec& spec, std::size_t n) {
  std::vector<Row> rows;
  if (spec.kind == OrderSpec::Kind::Term) return rows;
  for (const auto& r : spec.rows) rows.push_back(scale_row(r, n));
  return rows;
}

// True when the rows, refined by any term order, give a well-order: the first
// nonzero entry of every column is positive.
bool is_term_order_prefix(const std::vector<Row>& rows, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& r : rows) {
      if (r[j] == 0) continue;
      if (r[j] < 0) return false;
      break;
    }
  return true;
}

Row weight_key(const std::vector<Row>& rows, const Exponent& e) {
  Row k(rows.size(), 0);
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t i = 0; i < e.size(); ++i) k[t] += rows[t][i] * e[i];
  return k;
}

struct EPoly {
  std::vector<int> e;
  std::vector<std::int64_t> k;
  std::vector<Rational> c;
  long sugar = 0;
  std::size_t size() const { return c.size(); }
};

std::uint64_t support_mask(const int* e, std::size_t n) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (e[i] > 0) m |= (std::uint64_t{1} << (i % 64));
  return m;
}

class Engine {
 public:
  Engine(std::size_t n, std::vector<Row> rows) : n_(n), r_(rows.size()), rows_(std::move(rows)), budget_(g_budget.load()) {}

  EPoly make(const Polynomial& p) const {
    std::vector<std::pair<Row, const std::pair<const Exponent, Rational>*>> items;
    for (const auto& t : p.terms()) items.emplace_back(weight_key(rows_, t.first), &t);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    EPoly out;
    for (const auto& [key, term] : items) {
      out.e.insert(out.e.end(), term->first.begin(), term->first.end());
      out.k.insert(out.k.end(), key.begin(), key.end());
      out.c.push_back(term->second);
    }
    out.sugar = p.degree();
    return out;
  }

  Polynomial back(const EPoly& p, const RingPtr& ring) const {
    Polynomial::TermMap t;
    for (std::size_t i = 0; i < p.size(); ++i)
      t.emplace(Exponent(p.e.begin() + static_cast<std::ptrdiff_t>(i * n_),
                         p.e.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)),
                p.c[i]);
    return Polynomial(ring, std::move(t));
  }

  std::vector<EPoly> groebner(std::vector<EPoly> input) {
    polys_.clear();
    active_.clear();
    masks_.clear();
    pairs_.clear();
    for (auto& f : input) make_monic(f);
    std::sort(input.begin(), input.end(), [this](const EPoly& a, const EPoly& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return cmp(a.k.data(), b.k.data()) < 0;
    });
    for (auto& f : input) {
      if (f.size() == 0) continue;
      EPoly h = reduce(std::move(f), true);
      if (h.size() == 0) continue;
      make_monic(h);
      insert(std::move(h));
      if (has_unit()) return {unit()};
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t p = 1; p < pairs_.size(); ++p)
        if (pair_less(pairs_[p], pairs_[best])) best = p;
      Pair pr = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      EPoly s = spoly(pr);
      if (s.size() == 0) continue;
      EPoly h = reduce(std::move(s), true);
      if (h.size() == 0) continue;
      make_monic(h);
      insert(std::move(h));
      if (has_unit()) return {unit()};
    }
    return interreduce();
  }

  // Full reduction of f against an external basis (leading terms first).
  EPoly reduce_against(EPoly f, const std::vector<EPoly>& basis) {
    polys_ = basis;
    masks_.clear();
    active_.assign(basis.size(), true);
    for (auto& g : polys_) make_monic(g);
    return reduce(std::move(f), true);
  }

 private:
  struct Pair {
    std::size_t i, j;
    std::vector<int> lcm;
    Row key;
    long sugar;
  };

  int cmp(const std::int64_t* a, const std::int64_t* b) const {
    for (std::size_t t = 0; t < r_; ++t)
      if (a[t] != b[t]) return a[t] > b[t] ? 1 : -1;
    return 0;
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    // Normal strategy: smallest lcm first; sugar only breaks ties.
    int c = cmp(a.key.data(), b.key.data());
    if (c != 0) return c < 0;
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  void tick() {
    ++steps_;
    if (budget_ != 0 && steps_ > budget_)
      throw Error(ErrorCode::ResourceBudget, "Groebner step budget of " + std::to_string(budget_) + " exceeded");
  }

  void make_monic(EPoly& f) const {
    if (f.size() == 0 || f.c[0] == 1) return;
    Rational inv = 1 / f.c[0];
    for (auto& c : f.c) c *= inv;
  }

  bool has_unit() const {
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i] && std::all_of(polys_[i].e.begin(), polys_[i].e.begin() + static_cast<std::ptrdiff_t>(n_),
                                    [](int x) { return x == 0; }))
        return true;
    return false;
  }

  EPoly unit() const {
    EPoly u;
    u.e.assign(n_, 0);
    u.k.assign(r_, 0);
    u.c.push_back(1);
    return u;
  }

  // ca * x^sa * A[ai:] + cb * x^sb * B[bi:]
  EPoly lincomb(const EPoly& A, std::size_t ai, const Rational& ca, const int* sa, const std::int64_t* ska,
                const EPoly& B, std::size_t bi, const Rational& cb, const int* sb, const std::int64_t* skb) const {
    EPoly out;
    out.e.reserve((A.size() - ai + B.size() - bi) * n_);
    out.k.reserve((A.size() - ai + B.size() - bi) * r_);
    out.c.reserve(A.size() - ai + B.size() - bi);
    Row ka(r_), kb(r_);
    auto shifted_key = [&](const EPoly& P, std::size_t idx, const std::int64_t* s, Row& dst) {
      for (std::size_t t = 0; t < r_; ++t) dst[t] = P.k[idx * r_ + t] + (s ? s[t] : 0);
    };
    auto push = [&](const EPoly& P, std::size_t idx, const int* s, const Row& key, Rational coef) {
      for (std::size_t v = 0; v < n_; ++v) out.e.push_back(P.e[idx * n_ + v] + (s ? s[v] : 0));
      out.k.insert(out.k.end(), key.begin(), key.end());
      out.c.push_back(std::move(coef));
    };
    while (ai < A.size() || bi < B.size()) {
      int which;
      if (ai == A.size()) {
        which = -1;
        shifted_key(B, bi, skb, kb);
      } else if (bi == B.size()) {
        which = 1;
        shifted_key(A, ai, ska, ka);
      } else {
        shifted_key(A, ai, ska, ka);
        shifted_key(B, bi, skb, kb);
        which = cmp(ka.data(), kb.data());
      }
      if (which > 0) {
        push(A, ai, sa, ka, ca * A.c[ai]);
        ++ai;
      } else if (which < 0) {
        push(B, bi, sb, kb, cb * B.c[bi]);
        ++bi;
      } else {
        Rational c = ca * A.c[ai] + cb * B.c[bi];
        if (c != 0) push(A, ai, sa, ka, std::move(c));
        ++ai;
        ++bi;
      }
    }
    return out;
  }

  long shift_degree(const int* s) const {
    long d = 0;
    for (std::size_t v = 0; v < n_; ++v) d += s[v];
    return d;
  }

  // Index of an active basis element whose leading monomial divides term t of f.
  long find_divisor(const EPoly& f, std::size_t t) const {
    const int* e = f.e.data() + t * n_;
    std::uint64_t m = support_mask(e, n_);
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i]) continue;
      if ((masks_[i] & ~m) != 0) continue;
      const int* g = polys_[i].e.data();
      bool ok = true;
      for (std::size_t v = 0; v < n_ && ok; ++v) ok = g[v] <= e[v];
      if (ok) return static_cast<long>(i);
    }
    return -1;
  }

  EPoly reduce(EPoly h, bool full) {
    if (masks_.size() != polys_.size()) {
      masks_.clear();
      for (const auto& p : polys_) masks_.push_back(support_mask(p.e.data(), n_));
    }
    EPoly rem;
    std::size_t pos = 0;
    std::vector<int> s(n_);
    Row sk(r_);
    while (pos < h.size()) {
      long gi = find_divisor(h, pos);
      if (gi < 0) {
        if (!full) break;
        rem.e.insert(rem.e.end(), h.e.begin() + static_cast<std::ptrdiff_t>(pos * n_),
                     h.e.begin() + static_cast<std::ptrdiff_t>((pos + 1) * n_));
        rem.k.insert(rem.k.end(), h.k.begin() + static_cast<std::ptrdiff_t>(pos * r_),
                     h.k.begin() + static_cast<std::ptrdiff_t>((pos + 1) * r_));
        rem.c.push_back(h.c[pos]);
        ++pos;
        continue;
      }
      tick();
      const EPoly& g = polys_[static_cast<std::size_t>(gi)];
      for (std::size_t v = 0; v < n_; ++v) s[v] = h.e[pos * n_ + v] - g.e[v];
      for (std::size_t t = 0; t < r_; ++t) sk[t] = h.k[pos * r_ + t] - g.k[t];
      Rational coef = -h.c[pos];
      long sugar = std::max(h.sugar, g.sugar + shift_degree(s.data()));
      h = lincomb(h, pos + 1, 1, nullptr, nullptr, g, 1, coef, s.data(), sk.data());
      h.sugar = sugar;
      pos = 0;
    }
    if (!full) return h;
    rem.sugar = h.sugar;
    return rem;
  }

  EPoly spoly(const Pair& p) {
    tick();
    const EPoly& f = polys_[p.i];
    const EPoly& g = polys_[p.j];
    std::vector<int> sf(n_), sg(n_);
    Row kf(r_), kg(r_);
    for (std::size_t v = 0; v < n_; ++v) {
      sf[v] = p.lcm[v] - f.e[v];
      sg[v] = p.lcm[v] - g.e[v];
    }
    for (std::size_t t = 0; t < r_; ++t) {
      kf[t] = p.key[t] - f.k[t];
      kg[t] = p.key[t] - g.k[t];
    }
    EPoly s = lincomb(f, 1, 1, sf.data(), kf.data(), g, 1, -1, sg.data(), kg.data());
    s.sugar = p.sugar;
    return s;
  }

  std::vector<int> lcm_of(const int* a, const int* b) const {
    std::vector<int> l(n_);
    for (std::size_t v = 0; v < n_; ++v) l[v] = std::max(a[v], b[v]);
    return l;
  }

  bool divides(const int* a, const int* b) const {
    for (std::size_t v = 0; v < n_; ++v)
      if (a[v] > b[v]) return false;
    return true;
  }

  bool coprime(const int* a, const int* b) const {
    for (std::size_t v = 0; v < n_; ++v)
      if (a[v] > 0 && b[v] > 0) return false;
    return true;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Pair p;
    p.i = i;
    p.j = j;
    p.lcm = lcm_of(polys_[i].e.data(), polys_[j].e.data());
    p.key = weight_key_raw(p.lcm);
    long di = polys_[i].sugar + (std::accumulate(p.lcm.begin(), p.lcm.end(), 0L) -
                                 std::accumulate(polys_[i].e.begin(), polys_[i].e.begin() + static_cast<std::ptrdiff_t>(n_), 0L));
    long dj = polys_[j].sugar + (std::accumulate(p.lcm.begin(), p.lcm.end(), 0L) -
                                 std::accumulate(polys_[j].e.begin(), polys_[j].e.begin() + static_cast<std::ptrdiff_t>(n_), 0L));
    p.sugar = std::max(di, dj);
    return p;
  }

  Row weight_key_raw(const std::vector<int>& e) const {
    Row k(r_, 0);
    for (std::size_t t = 0; t < r_; ++t)
      for (std::size_t v = 0; v < n_; ++v) k[t] += rows_[t][v] * e[v];
    return k;
  }

  // Gebauer-Moeller update.
  void insert(EPoly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(false);
    masks_.push_back(support_mask(polys_[hi].e.data(), n_));
    const int* lh = polys_[hi].e.data();

    std::vector<std::size_t> C;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) C.push_back(g);
    std::vector<std::size_t> D;
    for (std::size_t idx = 0; idx < C.size(); ++idx) {
      std::size_t g1 = C[idx];
      const int* l1 = polys_[g1].e.data();
      bool keep = coprime(lh, l1);
      if (!keep) {
        std::vector<int> L1 = lcm_of(lh, l1);
        keep = true;
        for (std::size_t r = idx + 1; r < C.size() && keep; ++r)
          if (divides(lcm_of(lh, polys_[C[r]].e.data()).data(), L1.data())) keep = false;
        for (std::size_t r = 0; r < D.size() && keep; ++r)
          if (divides(lcm_of(lh, polys_[D[r]].e.data()).data(), L1.data())) keep = false;
      }
      if (keep) D.push_back(g1);
    }
    std::vector<std::size_t> E;
    for (auto g : D)
      if (!coprime(lh, polys_[g].e.data())) E.push_back(g);

    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm.data()) &&
                  lcm_of(polys_[p.i].e.data(), lh) != p.lcm &&
                  lcm_of(polys_[p.j].e.data(), lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto g : E) pairs_.push_back(make_pair(g, hi));

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && divides(lh, polys_[g].e.data())) active_[g] = false;
    active_[hi] = true;
  }

  std::vector<EPoly> interreduce() {
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) act.push_back(i);
    std::vector<EPoly> out;
    for (auto i : act) {
      EPoly g = polys_[i];
      EPoly lead;
      lead.e.assign(g.e.begin(), g.e.begin() + static_cast<std::ptrdiff_t>(n_));
      lead.k.assign(g.k.begin(), g.k.begin() + static_cast<std::ptrdiff_t>(r_));
      lead.c.push_back(g.c[0]);
      EPoly tail;
      tail.e.assign(g.e.begin() + static_cast<std::ptrdiff_t>(n_), g.e.end());
      tail.k.assign(g.k.begin() + static_cast<std::ptrdiff_t>(r_), g.k.end());
      tail.c.assign(g.c.begin() + 1, g.c.end());
      active_[i] = false;
      EPoly red = reduce(std::move(tail), true);
      active_[i] = true;
      lead.e.insert(lead.e.end(), red.e.begin(), red.e.end());
      lead.k.insert(lead.k.end(), red.k.begin(), red.k.end());
      lead.c.insert(lead.c.end(), red.c.begin(), red.c.end());
      out.push_back(std::move(lead));
    }
    std::sort(out.begin(), out.end(), [this](const EPoly& a, const EPoly& b) { return cmp(a.k.data(), b.k.data()) < 0; });
    return out;
  }

  std::size_t n_, r_;
  std::vector<Row> rows_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<EPoly> polys_;
  std::vector<bool> active_;
  std::vector<std::uint64_t> masks_;
  std::vector<Pair> pairs_;
};

std::vector<Polynomial> run_gb(const RingPtr& ring, const std::vector<Polynomial>& gens, std::vector<Row> rows) {
  Engine eng(ring->nvars(), std::move(rows));
  std::vector<EPoly> in;
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(eng.make(g));
  std::vector<Polynomial> out;
  for (const auto& p : eng.groebner(std::move(in))) out.push_back(eng.back(p, ring));
  return out;
}

std::vector<Row> concat(std::vector<Row> a, const std::vector<Row>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string fresh_name(const RingPtr& ring, std::string base) {
  while (ring->index_of(base) >= 0) base += "_";
  return base;
}

bool all_homogeneous(const std::vector<Polynomial>& gens, const std::vector<long>& w) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.is_homogeneous(w); });
}

// Chooses the integer rows that realize `spec` as a term order on the ideal.
// Returns false when only the homogenization route works.
bool direct_rows(const RingPtr& ring, const std::vector<Polynomial>& gens, const OrderSpec& spec,
                 std::vector<Row>& rows) {
  const std::size_t n = ring->nvars();
  auto tb = tiebreak_rows(spec.tiebreak, n);
  auto sr = spec_rows(spec, n);
  if (is_term_order_prefix(sr, n)) {
    rows = concat(sr, tb);
    return true;
  }
  std::vector<long> d = ring->total_degree_weights();
  std::vector<long> ones(n, 1);
  for (const auto* w : {&d, &ones}) {
    if (all_homogeneous(gens, *w)) {
      rows = concat(concat({Row(w->begin(), w->end())}, sr), tb);
      return true;
    }
  }
  return false;
}

}  // namespace

void set_groebner_budget(std::uint64_t steps) { g_budget.store(steps); }
std::uint64_t groebner_budget() { return g_budget.load(); }

Polynomial initial_form(const Polynomial& f, const OrderSpec& spec) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "initial form of the zero polynomial");
  const std::size_t n = f.ring()->nvars();
  std::vector<Row> rows = spec.kind == OrderSpec::Kind::Term ? tiebreak_rows(spec.tiebreak, n) : spec_rows(spec, n);
  Row best;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Row k = weight_key(rows, e);
    if (first || k > best) best = k;
    first = false;
  }
  Polynomial::TermMap t;
  for (const auto& [e, c] : f.terms())
    if (weight_key(rows, e) == best) t.emplace(e, c);
  return Polynomial(f.ring(), std::move(t));
}

Polynomial leading_term(const Polynomial& f, const OrderSpec& spec) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
  const std::size_t n = f.ring()->nvars();
  auto rows = concat(spec_rows(spec, n), tiebreak_rows(spec.tiebreak, n));
  const std::pair<const Exponent, Rational>* best = nullptr;
  Row bk;
  for (const auto& t : f.terms()) {
    Row k = weight_key(rows, t.first);
    if (!best || k > bk) {
      best = &t;
      bk = k;
    }
  }
  return Polynomial::monomial(f.ring(), best->first, best->second);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.ring()->names() != ring_->names()) g = g.in_ring(ring_);
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::parse(RingPtr ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> g;
  for (const auto& s : generators) g.push_back(Polynomial::parse(ring, s));
  return Ideal(std::move(ring), std::move(g));
}

const std::vector<Polynomial>& Ideal::groebner_basis(const OrderSpec& spec) const {
  const std::string key = spec.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  std::vector<Polynomial> gb;
  std::vector<Row> rows;
  if (gens_.empty()) {
    // zero ideal
  } else if (direct_rows(ring_, gens_, spec, rows)) {
    gb = run_gb(ring_, gens_, std::move(rows));
  } else {
    // init_M(I) = init_{(M,0)}(I^h) at h = 1, with I^h from a degree-compatible basis.
    const auto& base = groebner_basis(OrderSpec::term(TermOrder::GRevLex));
    const std::size_t n = ring_->nvars();
    std::string h = fresh_name(ring_, "_h");
    RingPtr rh = extend_ring(ring_, {h});
    std::vector<Polynomial> hom;
    for (const auto& g : base) hom.push_back(homogenize(g, QVector(n, Rational(1)), h).in_ring(rh));
    std::vector<Row> hrows{Row(n + 1, 1)};
    for (auto r : spec_rows(spec, n)) {
      r.push_back(0);
      hrows.push_back(std::move(r));
    }
    hrows = concat(hrows, tiebreak_rows(spec.tiebreak, n + 1));
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(ring_, i));
    images.push_back(Polynomial::constant(ring_, 1));
    std::set<std::string> seen;
    for (const auto& g : run_gb(rh, hom, std::move(hrows))) {
      Polynomial d = g.substitute(images, ring_).monic();
      if (seen.insert(d.to_string()).second) gb.push_back(std::move(d));
    }
  }
  auto stored = std::make_shared<const std::vector<Polynomial>>(std::move(gb));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(key, stored);
  return *it->second;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis(OrderSpec::term(TermOrder::GRevLex));
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::contains(const Polynomial& f) const {
  OrderSpec spec = OrderSpec::term(TermOrder::GRevLex);
  return normal_form(f.in_ring(ring_), groebner_basis(spec), spec).is_zero();
}

bool Ideal::is_graded_homogeneous() const {
  for (std::size_t c = 0; c < ring_->grading_rank(); ++c) {
    std::vector<long> w(ring_->nvars());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ring_->degrees()[i][c];
    if (!is_homogeneous(w)) return false;
  }
  return true;
}

bool Ideal::is_homogeneous(const std::vector<long>& w) const { return all_homogeneous(gens_, w); }

bool Ideal::is_homogeneous(const QVector& w) const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const Polynomial& g) { return g.is_homogeneous(w); });
}

std::vector<std::string> Ideal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string());
  return out;
}

std::vector<Polynomial> buchberger(const Ideal& ideal, const OrderSpec& spec) { return ideal.groebner_basis(spec); }

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const OrderSpec& spec) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  std::vector<Row> rows;
  std::vector<Polynomial> all = basis;
  all.push_back(f);
  if (!direct_rows(ring, all, spec, rows))
    throw Error(ErrorCode::NotHomogeneous, "normal form needs a term order or homogeneous input");
  Engine eng(ring->nvars(), std::move(rows));
  std::vector<EPoly> b;
  for (const auto& g : basis) b.push_back(eng.make(g.in_ring(ring)));
  return eng.back(eng.reduce_against(eng.make(f), b), ring);
}

Ideal initial_ideal(const Ideal& ideal, const OrderSpec& spec) {
  std::vector<Polynomial> init;
  for (const auto& g : ideal.groebner_basis(spec)) init.push_back(initial_form(g, spec));
  return Ideal(ideal.ring(), std::move(init));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.ring()->names() != b.ring()->names()) return false;
  OrderSpec spec = OrderSpec::term(TermOrder::GRevLex);
  const auto& ga = a.groebner_basis(spec);
  const auto& gb = b.groebner_basis(spec);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i].terms() != gb[i].terms()) return false;
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep) {
  const RingPtr& ring = ideal.ring();
  std::set<std::string> keep_set(keep.begin(), keep.end());
  for (const auto& k : keep)
    if (ring->index_of(k) < 0) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + k + "'");
  QVector ind(ring->nvars(), Rational(0));
  std::vector<std::string> names;
  std::vector<std::vector<long>> degrees;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (keep_set.count(ring->name(i))) {
      names.push_back(ring->name(i));
      degrees.push_back(ring->degrees()[i]);
    } else {
      ind[i] = 1;
    }
  }
  RingPtr sub = PolyRing::make(names, degrees);
  std::vector<Polynomial> out;
  for (const auto& g : ideal.groebner_basis(OrderSpec::matrix({ind}))) {
    bool inside = true;
    for (const auto& [e, c] : g.terms())
      for (std::size_t i = 0; i < e.size() && inside; ++i)
        if (e[i] != 0 && ind[i] != 0) inside = false;
    if (inside) out.push_back(g.in_ring(sub));
  }
  return Ideal(sub, std::move(out));
}

namespace {

// For an ideal homogeneous under the ring's positive grading, I : x_i^infinity
// is generated by the basis elements for [deg, -x_i] divided by their
// largest power of x_i (the leading term carries the least power of x_i).
Ideal saturate_variable(const Ideal& ideal, std::size_t i, const QVector& deg) {
  const RingPtr& ring = ideal.ring();
  QVector low(ring->nvars());
  low[i] = -1;
  std::vector<Polynomial> out;
  for (const auto& g : ideal.groebner_basis(OrderSpec::matrix({deg, low}))) {
    int k = std::numeric_limits<int>::max();
    for (const auto& [e, c] : g.terms()) k = std::min(k, e[i]);
    Polynomial::TermMap t;
    for (const auto& [e, c] : g.terms()) {
      Exponent d = e;
      d[i] -= k;
      t.emplace(std::move(d), c);
    }
    out.emplace_back(ring, std::move(t));
  }
  return Ideal(ring, std::move(out));
}

bool positively_graded(const Ideal& ideal, QVector& deg) {
  const auto& w = ideal.ring()->total_degree_weights();
  deg.assign(w.begin(), w.end());
  return ideal.is_homogeneous(deg);
}

// I : (x^a)^infinity one variable at a time. Requires positively_graded.
Ideal saturate_monomial(const Ideal& ideal, const Exponent& a, const QVector& deg) {
  Ideal cur = ideal;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) {
      if (cur.is_unit()) break;
      cur = saturate_variable(cur, i, deg);
    }
  return cur;
}

}  // namespace

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "saturation by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  QVector deg;
  if (f.is_monomial() && positively_graded(ideal, deg))
    return saturate_monomial(ideal, f.in_ring(ring).terms().begin()->first, deg);
  std::string y = fresh_name(ring, "_y");
  RingPtr ry = extend_ring(ring, {y});
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ry));
  gens.push_back(Polynomial::variable(ry, y) * f.in_ring(ry) - Polynomial::constant(ry, 1));
  Ideal big(ry, std::move(gens));
  Ideal r = eliminate(big, ring->names());
  std::vector<Polynomial> back;
  for (const auto& g : r.generators()) back.push_back(g.in_ring(ring));
  return Ideal(ring, std::move(back));
}

bool contains_monomial(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  const RingPtr& ring = ideal.ring();
  QVector deg;
  if (positively_graded(ideal, deg)) return saturate_monomial(ideal, Exponent(ring->nvars(), 1), deg).is_unit();
  std::string y = fresh_name(ring, "_y");
  RingPtr ry = extend_ring(ring, {y});
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ry));
  Exponent e(ry->nvars(), 1);
  gens.push_back(Polynomial::monomial(ry, e) - Polynomial::constant(ry, 1));
  return Ideal(ry, std::move(gens)).is_unit();
}

std::vector<Exponent> standard_monomials(const Ideal& ideal, TermOrder order, unsigned bound) {
  OrderSpec spec = OrderSpec::term(order);
  std::vector<Exponent> leads;
  for (const auto& g : ideal.groebner_basis(spec)) leads.push_back(leading_term(g, spec).terms().begin()->first);
  const std::size_t n = ideal.ring()->nvars();
  std::vector<Exponent> out;
  Exponent e(n, 0);
  // Enumerate exponents of total degree <= bound.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      for (const auto& l : leads) {
        bool div = true;
        for (std::size_t v = 0; v < n && div; ++v) div = l[v] <= e[v];
        if (div) return;
      }
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = static_cast<int>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, bound);
  GrevlexGreater gt;
  std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return gt(b, a); });
  return out;
}

}  // namespace tropcluster
