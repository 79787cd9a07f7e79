#include "tropcluster/cluster.hpp"

#include <algorithm>
#include <sstream>

namespace tropcluster {

namespace {

long pos(long x) { return x > 0 ? x : 0; }

std::size_t check_direction(const SeedData& seed, std::size_t k) {
  if (k == 0 || k > seed.size()) throw Error(ErrorCode::InvalidArgument, "direction " + std::to_string(k) + " out of range");
  if (k > seed.n) throw Error(ErrorCode::FrozenDirection, "direction " + std::to_string(k) + " is frozen");
  return k - 1;
}

}  // namespace

void SeedData::validate() const {
  const std::size_t N = n + m;
  if (B.rows() != N || B.cols() != N) throw Error(ErrorCode::InvalidArgument, "exchange matrix must be (n+m)-square");
  if (d.size() != N) throw Error(ErrorCode::InvalidArgument, "need one skew-symmetrizer per direction");
  for (long x : d)
    if (x <= 0) throw Error(ErrorCode::InvalidArgument, "skew-symmetrizers must be positive");
  if (labels.size() != N) throw Error(ErrorCode::InvalidArgument, "need one label per direction");
  // Mutable rows are fixed by the mutable columns: d_j b_ij = -d_i b_ji.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (d[j] * B(i, j) != -d[i] * B(j, i))
        throw Error(ErrorCode::InvalidArgument, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                    ") breaks skew-symmetrizability by d");
}

MuMatrices mu_matrices(const SeedData& seed, std::size_t k, Sign sign) {
  const std::size_t kk = check_direction(seed, k);
  const std::size_t N = seed.size();
  const long s = sign == Sign::Plus ? 1 : -1;
  QMatrix A = QMatrix::identity(N), X = QMatrix::identity(N);
  A(kk, kk) = -1;
  X(kk, kk) = -1;
  for (std::size_t j = 0; j < N; ++j) {
    if (j == kk) continue;
    A(kk, j) = pos(s * seed.B(j, kk));
    X(j, kk) = pos(-s * seed.B(kk, j));
  }
  return {A, X};
}

SeedData mutate_matrix(const SeedData& seed, std::size_t k) {
  QMatrix bt = to_rational(seed.B).transpose();
  MuMatrices plus = mu_matrices(seed, k, Sign::Plus);
  MuMatrices minus = mu_matrices(seed, k, Sign::Minus);
  QMatrix p = plus.X * bt * plus.A;
  QMatrix q = minus.X * bt * minus.A;
  if (!(p == q)) throw Error(ErrorCode::Internal, "sign choices of matrix mutation disagree");
  SeedData out = seed;
  out.B = to_int(p.transpose());
  return out;
}

SeedData mutate_along(const SeedData& seed, const MutationWord& word) {
  SeedData s = seed;
  for (auto k : word) s = mutate_matrix(s, k);
  return s;
}

IVector mutate_gvector(const IVector& g, const SeedData& seed, std::size_t k) {
  const std::size_t kk = check_direction(seed, k);
  if (g.size() != seed.size()) throw Error(ErrorCode::InvalidArgument, "g-vector has wrong length");
  Sign sign = g[kk] >= 0 ? Sign::Plus : Sign::Minus;
  QMatrix X = mu_matrices(seed, k, sign).X;
  QVector gq(g.begin(), g.end());
  QVector r = X * gq;
  IVector out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].get_num().get_si();
  return out;
}

IVector gvector_of_exchanged_variable(const SeedData& seed, std::size_t k) {
  const std::size_t kk = check_direction(seed, k);
  IVector g(seed.size(), 0);
  g[kk] = -1;
  for (std::size_t i = 0; i < seed.size(); ++i) {
    long b = seed.B(i, kk);
    if (b < 0) g[i] -= b;
  }
  return g;
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Rational& c) {
  Terms t;
  if (c != 0) t.emplace(std::move(e), c);
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  Terms t = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto [it, ins] = t.emplace(e, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  Terms neg = o.terms_;
  for (auto& [e, c] : neg) c = -c;
  return *this + LaurentPoly(std::move(neg));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  Terms t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      Rational c = c1 * c2;
      auto [it, ins] = t.emplace(std::move(e), c);
      if (!ins) {
        it->second += c;
        if (it->second == 0) t.erase(it);
      }
    }
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  if (terms_.empty()) return *this;
  LaurentPoly r = monomial(Exponent(terms_.begin()->first.size(), 0));
  LaurentPoly b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::Internal, "division by the zero Laurent polynomial");
  // Peel lex-leading terms. When den divides num every step removes one term
  // of the quotient, so more steps than terms of num means failure.
  LaurentPoly r = num;
  Terms q;
  const auto& [de, dc] = *den.terms_.rbegin();
  std::size_t steps = 0;
  const std::size_t cap = num.size() * std::max<std::size_t>(1, den.size()) + 1;
  while (!r.is_zero()) {
    if (++steps > cap) throw Error(ErrorCode::Internal, "exchange polynomial is not divisible (non-Laurent intermediate)");
    const auto& [re, rc] = *r.terms_.rbegin();
    Exponent e(re.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = re[i] - de[i];
    Rational c = rc / dc;
    LaurentPoly t = monomial(e, c);
    q.emplace(e, c);
    r = r - t * den;
  }
  return LaurentPoly(std::move(q));
}

bool LaurentPoly::has_positive_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second > 0 && t.second.get_den() == 1; });
}

std::string LaurentPoly::to_string(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    Rational a = abs(c);
    bool wrote = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (a != 1 || constant) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << labels.at(i);
      if (e[i] != 1) os << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
      wrote = true;
    }
  }
  return os.str();
}

LaurentPoly laurent_expand(const SeedData& seed, const MutationWord& word, std::size_t i) {
  const std::size_t N = seed.size();
  if (i == 0 || i > N) throw Error(ErrorCode::InvalidArgument, "cluster position out of range");
  std::vector<LaurentPoly> cluster;
  for (std::size_t j = 0; j < N; ++j) cluster.push_back(LaurentPoly::variable(N, j));
  SeedData s = seed;
  const LaurentPoly one = LaurentPoly::monomial(Exponent(N, 0));
  for (auto k : word) {
    const std::size_t kk = check_direction(s, k);
    LaurentPoly plus = one, minus = one;
    for (std::size_t j = 0; j < N; ++j) {
      long b = s.B(j, kk);
      if (b > 0) plus = plus * cluster[j].pow(static_cast<unsigned>(b));
      if (b < 0) minus = minus * cluster[j].pow(static_cast<unsigned>(-b));
    }
    LaurentPoly next = LaurentPoly::divide_exact(plus + minus, cluster[kk]);
    if (!next.has_positive_integer_coefficients())
      throw Error(ErrorCode::Internal, "cluster variable with a non-positive coefficient");
    cluster[kk] = std::move(next);
    s = mutate_matrix(s, k);
  }
  return cluster[i - 1];
}

bool in_cone(const QMatrix& A, const QVector& b) {
  QVector c0;
  if (!solve(A, b, c0)) return false;
  std::vector<QVector> K = kernel_basis(A);
  const std::size_t q = K.size();
  // Inequalities a . t >= beta with a in Q^q: c0_i + sum_j K_j[i] t_j >= 0.
  std::vector<std::pair<QVector, Rational>> sys;
  for (std::size_t i = 0; i < c0.size(); ++i) {
    QVector a(q);
    for (std::size_t j = 0; j < q; ++j) a[j] = K[j][i];
    sys.emplace_back(std::move(a), -c0[i]);
  }
  for (std::size_t v = 0; v < q; ++v) {
    std::vector<std::pair<QVector, Rational>> P, Nn, next;
    for (auto& row : sys) {
      if (row.first[v] > 0)
        P.push_back(row);
      else if (row.first[v] < 0)
        Nn.push_back(row);
      else
        next.push_back(row);
    }
    for (const auto& p : P)
      for (const auto& n : Nn) {
        Rational sp = -n.first[v], sn = p.first[v];
        QVector a(q);
        for (std::size_t j = 0; j < q; ++j) a[j] = sp * p.first[j] + sn * n.first[j];
        next.emplace_back(std::move(a), sp * p.second + sn * n.second);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sys = std::move(next);
  }
  for (const auto& row : sys)
    if (row.second > 0) return false;
  return true;
}

namespace {

QMatrix mutable_columns(const SeedData& seed) {
  QMatrix A(seed.size(), seed.n);
  for (std::size_t i = 0; i < seed.size(); ++i)
    for (std::size_t j = 0; j < seed.n; ++j) A(i, j) = seed.B(i, j);
  return A;
}

bool below(const QMatrix& A, const IVector& m1, const IVector& m2) {
  QVector diff(m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) diff[i] = m2[i] - m1[i];
  return in_cone(A, diff);
}

}  // namespace

bool dominance_functional(const SeedData& seed, QVector& phi) {
  return solve(mutable_columns(seed).transpose(), QVector(seed.n, Rational(1)), phi);
}

Dominance dominance_less(const IVector& m1, const IVector& m2, const SeedData& seed) {
  if (m1.size() != seed.size() || m2.size() != seed.size())
    throw Error(ErrorCode::InvalidArgument, "exponent vectors must have length n+m");
  if (m1 == m2) return Dominance::Equal;
  QMatrix A = mutable_columns(seed);
  if (below(A, m1, m2)) return Dominance::Less;
  if (below(A, m2, m1)) return Dominance::Greater;
  return Dominance::Incomparable;
}

IVector gvector_from_laurent(const LaurentPoly& p, const SeedData& seed, const QVector* functional) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "g-vector of the zero Laurent polynomial");
  std::vector<IVector> exps;
  for (const auto& [e, c] : p.terms()) exps.emplace_back(e.begin(), e.end());
  if (exps.size() == 1) return exps[0];
  QMatrix A = mutable_columns(seed);

  QVector phi;
  bool have_phi = false;
  if (functional) {
    phi = *functional;
    have_phi = true;
  } else {
    have_phi = dominance_functional(seed, phi);
  }
  if (have_phi) {
    auto key = [&](const IVector& e) {
      Rational v = 0;
      for (std::size_t i = 0; i < e.size(); ++i) v += phi[i] * e[i];
      return v;
    };
    std::size_t best = 0;
    Rational bk = key(exps[0]);
    for (std::size_t i = 1; i < exps.size(); ++i) {
      Rational k = key(exps[i]);
      if (k < bk || (k == bk && exps[i] < exps[best])) {
        best = i;
        bk = k;
      }
    }
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (i != best && !below(A, exps[best], exps[i]))
        throw Error(ErrorCode::AmbiguousMinimum, "no dominance-minimum among the exponents");
    return exps[best];
  }
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < exps.size() && is_min; ++j)
      if (j != i && exps[j] != exps[i] && below(A, exps[j], exps[i])) is_min = false;
    if (is_min) minimal.push_back(i);
  }
  if (minimal.size() != 1) throw Error(ErrorCode::AmbiguousMinimum, "several dominance-minimal exponents");
  return exps[minimal[0]];
}

QMatrix gmatrix(const SeedData& seed, const std::vector<BasisElement>& basis, const MutationWord& frame) {
  const std::size_t N = seed.size();
  SeedData framed = mutate_along(seed, frame);
  QMatrix G(N, basis.size());
  MutationWord back(frame.rbegin(), frame.rend());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& b = basis[col];
    if (b.index == 0 || b.index > N) throw Error(ErrorCode::InvalidArgument, "basis index out of range");

    MutationWord w = back;
    w.insert(w.end(), b.word.begin(), b.word.end());
    IVector via_laurent = gvector_from_laurent(laurent_expand(framed, w, b.index), framed);

    // Transport the unit vector from mu_word(seed) back to seed, then along the frame.
    std::vector<SeedData> path{seed};
    for (auto k : b.word) path.push_back(mutate_matrix(path.back(), k));
    IVector g(N, 0);
    g[b.index - 1] = 1;
    for (std::size_t j = b.word.size(); j-- > 0;) g = mutate_gvector(g, path[j + 1], b.word[j]);
    SeedData cur = seed;
    for (auto k : frame) {
      g = mutate_gvector(g, cur, k);
      cur = mutate_matrix(cur, k);
    }
    if (g != via_laurent) {
      std::ostringstream os;
      os << "g-vector routes disagree for basis element " << (b.name.empty() ? std::to_string(col + 1) : b.name);
      throw Error(ErrorCode::OracleMismatch, os.str());
    }
    for (std::size_t i = 0; i < N; ++i) G(i, col) = g[i];
  }
  return G;
}

}  // namespace tropcluster
