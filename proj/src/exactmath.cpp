#include "tropcluster/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tropcluster {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::FrozenDirection: return "FrozenDirection";
    case ErrorCode::AmbiguousMinimum: return "AmbiguousMinimum";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ResourceBudget: return "ResourceBudget";
    case ErrorCode::NotACone: return "NotACone";
    case ErrorCode::NotBinomial: return "NotBinomial";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::IndexClash: return "IndexClash";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::MissingWitness: return "MissingWitness";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::Parse, "malformed rational '" + text + "'");
  Integer d(den);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(static_cast<long>(m(i, j)));
  return q;
}

QMatrix to_rational(const ZMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

IntMatrix to_int(const QMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw Error(ErrorCode::InvalidArgument, "matrix entry is not a machine integer");
      z(i, j) = q.get_num().get_si();
    }
  return z;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  QMatrix a(m);
  return rref(a).size();
}

Rational determinant(const QMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  QMatrix a(m);
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix invert(const QMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::SingularMatrix, "cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1)
    throw Error(ErrorCode::SingularMatrix, "matrix has zero determinant");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  QMatrix a(m);
  auto piv = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const QMatrix& m, const QVector& b, QVector& x) {
  if (b.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "solve: rhs size mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
  return true;
}

SmithForm smith_normal_form(const ZMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  ZMatrix D(m);
  ZMatrix U = ZMatrix::identity(R);
  ZMatrix V = ZMatrix::identity(C);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < C; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < R; ++j) std::swap(U(a, j), U(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < R; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < C; ++i) std::swap(V(i, a), V(i, b));
  };
  // row_a -= q * row_b
  auto add_row = [&](std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t j = 0; j < C; ++j) D(a, j) -= q * D(b, j);
    for (std::size_t j = 0; j < R; ++j) U(a, j) -= q * U(b, j);
  };
  auto add_col = [&](std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t i = 0; i < R; ++i) D(i, a) -= q * D(i, b);
    for (std::size_t i = 0; i < C; ++i) V(i, a) -= q * V(i, b);
  };

  const std::size_t steps = std::min(R, C);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (D(i, j) == 0) continue;
          Integer a = abs(D(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row(i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col(j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold any offending row into the pivot row.
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < R; ++j) U(t, j) = -U(t, j);
    }
  }
  return SmithForm{std::move(U), std::move(D), std::move(V)};
}

bool is_saturated(const IntLattice& lattice, std::size_t ambient_dim) {
  if (lattice.generators.empty()) return true;
  ZMatrix m(lattice.generators.size(), ambient_dim);
  for (std::size_t i = 0; i < lattice.generators.size(); ++i) {
    if (lattice.generators[i].size() != ambient_dim)
      throw Error(ErrorCode::InvalidArgument, "lattice generator has wrong dimension");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = lattice.generators[i][j];
  }
  SmithForm snf = smith_normal_form(m);
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    const Integer& d = snf.D(t, t);
    if (d != 0 && d != 1) return false;
  }
  return true;
}

ZVector primitive_integer_vector(const QVector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  ZVector z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    z[i] = s.get_num();
    g = gcd(g, z[i]);
  }
  if (g > 1)
    for (auto& x : z) x /= g;
  return z;
}

QVector negated(QVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace tropcluster
