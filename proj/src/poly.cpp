#include "tropcluster/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace tropcluster {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

long total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

}  // namespace

PolyRing::PolyRing(std::vector<std::string> names, std::vector<std::vector<long>> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + n + "'");
  }
  if (degrees_.empty()) degrees_.assign(names_.size(), std::vector<long>{1});
  if (degrees_.size() != names_.size())
    throw Error(ErrorCode::InvalidArgument, "one degree vector per variable is required");
  const std::size_t g = degrees_.empty() ? 0 : degrees_[0].size();
  total_.assign(names_.size(), 0);
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i].size() != g) throw Error(ErrorCode::InvalidArgument, "ragged degree vectors");
    for (long d : degrees_[i]) {
      if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative degree for " + names_[i]);
      total_[i] += d;
    }
    if (total_[i] == 0) throw Error(ErrorCode::InvalidArgument, "zero degree for " + names_[i]);
  }
}

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> names,
                                               std::vector<std::vector<long>> degrees) {
  return std::make_shared<const PolyRing>(std::move(names), std::move(degrees));
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  auto names = ring->names();
  auto degrees = ring->degrees();
  const std::size_t g = std::max<std::size_t>(1, ring->grading_rank());
  for (const auto& e : extra) {
    names.push_back(e);
    degrees.emplace_back(g, 1);
  }
  return PolyRing::make(std::move(names), std::move(degrees));
}

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  long da = total(a), db = total(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->nvars())
      throw Error(ErrorCode::InvalidArgument, "exponent length does not match ring");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Exponent zero(ring->nvars(), 0);
  return monomial(std::move(ring), std::move(zero), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponent e(ring->nvars(), 0);
  e[i] = 1;
  return monomial(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  int i = ring->index_of(name);
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + name + "'");
  return variable(std::move(ring), static_cast<std::size_t>(i));
}

Polynomial Polynomial::monomial(RingPtr ring, Exponent e, const Rational& c) {
  TermMap t;
  if (c != 0) t.emplace(std::move(e), c);
  return Polynomial(std::move(ring), std::move(t));
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Polynomial run() {
    Polynomial acc(ring_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc = acc + term() * sign;
      first = false;
      skip();
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial t = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      skip();
      t = t * factor();
      skip();
    }
    return t;
  }

  Polynomial factor() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        std::string den = digits();
        return Polynomial::constant(ring_, parse_rational(num + "/" + den));
      }
      return Polynomial::constant(ring_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      Polynomial v = Polynomial::variable(ring_, static_cast<std::size_t>(idx));
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        std::string e = digits();
        return v.pow(static_cast<unsigned>(std::stoul(e)));
      }
      return v;
    }
    fail("unexpected character");
    return Polynomial(ring_);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  const RingPtr& ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) { return Parser(ring, text).run(); }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

long Polynomial::degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

bool Polynomial::is_homogeneous(const std::vector<long>& w) const {
  bool first = true;
  long ref = 0;
  for (const auto& [e, c] : terms_) {
    long v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
    if (first) {
      ref = v;
      first = false;
    } else if (v != ref) {
      return false;
    }
  }
  return true;
}

bool Polynomial::is_homogeneous(const QVector& w) const {
  bool first = true;
  Rational ref;
  for (const auto& [e, c] : terms_) {
    Rational v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
    if (first) {
      ref = v;
      first = false;
    } else if (v != ref) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || total(e) == 0) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  TermMap t = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = t.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  return Polynomial(ring_ ? ring_ : o.ring_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  TermMap t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      Rational c = c1 * c2;
      auto [it, inserted] = t.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
      }
    }
  return Polynomial(ring_ ? ring_ : o.ring_, std::move(t));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  TermMap t = terms_;
  for (auto& [e, v] : t) v *= c;
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const RingPtr& target) const {
  if (images.size() != ring_->nvars())
    throw Error(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  Polynomial acc(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * images[i].pow(static_cast<unsigned>(e[i]));
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  std::vector<int> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    map[i] = target->index_of(ring_->name(i));
    if (map[i] < 0) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] != 0; });
      if (used) throw Error(ErrorCode::InvalidArgument, "variable " + ring_->name(i) + " missing in target ring");
    }
  }
  TermMap t;
  for (const auto& [e, c] : terms_) {
    Exponent f(target->nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) f[static_cast<std::size_t>(map[i])] = e[i];
    t.emplace(std::move(f), c);
  }
  return Polynomial(target, std::move(t));
}

Rational Polynomial::evaluate(const QVector& point) const {
  if (point.size() != ring_->nvars()) throw Error(ErrorCode::InvalidArgument, "evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (1 / terms_.begin()->second);
}

const char* term_order_name(TermOrder t) {
  switch (t) {
    case TermOrder::Lex: return "lex";
    case TermOrder::GRevLex: return "grevlex";
    case TermOrder::GLex: return "glex";
  }
  return "?";
}

OrderSpec OrderSpec::term(TermOrder t) {
  OrderSpec s;
  s.kind = Kind::Term;
  s.tiebreak = t;
  return s;
}

OrderSpec OrderSpec::weight(QVector w, TermOrder tiebreak) {
  OrderSpec s;
  s.kind = Kind::Weight;
  s.tiebreak = tiebreak;
  s.rows.push_back(std::move(w));
  return s;
}

OrderSpec OrderSpec::matrix(std::vector<QVector> rows, TermOrder tiebreak) {
  OrderSpec s;
  s.kind = Kind::Matrix;
  s.tiebreak = tiebreak;
  s.rows = std::move(rows);
  return s;
}

std::string OrderSpec::key() const {
  std::ostringstream os;
  os << term_order_name(tiebreak);
  for (const auto& r : rows) {
    os << "|";
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].get_str();
  }
  return os.str();
}

Polynomial homogenize(const Polynomial& f, const QVector& w, const std::string& t) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot homogenize the zero polynomial");
  const RingPtr& ring = f.ring();
  if (w.size() != ring->nvars()) throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
  ZVector wz = primitive_integer_vector(w);
  RingPtr target = extend_ring(ring, {t});
  std::vector<Integer> weights;
  Integer top;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Integer v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += wz[i] * e[i];
    weights.push_back(v);
    if (first || v > top) top = v;
    first = false;
  }
  Polynomial::TermMap out;
  std::size_t k = 0;
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    Integer gap = top - weights[k++];
    if (!gap.fits_sint_p()) throw Error(ErrorCode::InvalidArgument, "homogenizing exponent too large");
    g.push_back(static_cast<int>(gap.get_si()));
    out.emplace(std::move(g), c);
  }
  return Polynomial(target, std::move(out));
}

}  // namespace tropcluster
