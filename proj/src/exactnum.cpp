// exactnum.cpp - Laurent polynomials, Q(q) and dense linear algebra
#include "qcoalg/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qcoalg {

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(const Rational& c, int e) {
  if (c != 0) t_.push_back({e, c});
}

Laurent Laurent::from_terms(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
  Laurent r;
  for (auto& t : raw) {
    if (!r.t_.empty() && r.t_.back().e == t.e)
      r.t_.back().c += t.c;
    else
      r.t_.push_back(std::move(t));
  }
  std::erase_if(r.t_, [](const Term& t) { return t.c == 0; });
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r;
  r.t_.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].e < o.t_[j].e)) {
      r.t_.push_back(t_[i++]);
    } else if (i == t_.size() || o.t_[j].e < t_[i].e) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Rational s = t_[i].c + o.t_[j].c;
      if (s != 0) r.t_.push_back({t_[i].e, s});
      ++i, ++j;
    }
  }
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.t_.size() == 1) return scaled(o.t_[0].c).shifted(o.t_[0].e);
  if (t_.size() == 1) return o.scaled(t_[0].c).shifted(t_[0].e);
  std::vector<Term> raw;
  raw.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) raw.push_back({a.e + b.e, a.c * b.c});
  return from_terms(std::move(raw));
}

Laurent Laurent::scaled(const Rational& c) const {
  if (c == 0) return {};
  Laurent r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& t : r.t_) t.e += k;
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
  return true;
}

static Rational rpow(const Rational& x, int e) {
  Rational r = 1, b = x;
  bool neg = e < 0;
  unsigned long k = neg ? -(long)e : e;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  if (neg) r = 1 / r;
  return r;
}

Rational Laurent::evaluate(const Rational& q0) const {
  Rational s = 0;
  for (const auto& t : t_) {
    if (q0 == 0 && t.e < 0) throw MalformedScalar("pole at q = 0");
    s += t.c * rpow(q0, t.e);
  }
  return s;
}

static std::string coef_str(const Rational& c) {
  Rational a = abs(c);
  return a.get_str();
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    bool neg = t.c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    Rational a = abs(t.c);
    if (t.e == 0) {
      os << coef_str(a);
      continue;
    }
    if (a != 1) os << coef_str(a) << "*";
    os << "q";
    if (t.e != 1) os << "^" << t.e;
  }
  return os.str();
}

// ------------------------------------------------- dense polynomial helpers

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Coefficients of q^{-low} * a, lowest exponent becomes 0.
Dense to_dense(const Laurent& a) {
  Dense d;
  if (a.is_zero()) return d;
  int lo = a.low();
  d.assign(a.high() - lo + 1, Rational(0));
  for (const auto& t : a.terms()) d[t.e - lo] = t.c;
  return d;
}

Laurent from_dense(const Dense& d, int shift = 0) {
  std::vector<Laurent::Term> raw;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) raw.push_back({int(i) + shift, d[i]});
  return Laurent::from_terms(std::move(raw));
}

// a = quo * b + rem
void divmod(const Dense& a, const Dense& b, Dense& quo, Dense& rem) {
  rem = a;
  trim(rem);
  quo.clear();
  if (rem.size() < b.size()) return;
  quo.assign(rem.size() - b.size() + 1, Rational(0));
  Rational inv = 1 / b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    std::size_t k = rem.size() - b.size();
    Rational f = rem.back() * inv;
    quo[k] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= f * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quo);
}

Dense monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  Rational l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

}  // namespace

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return from_dense(monic(to_dense(b)));
  if (b.is_zero()) return from_dense(monic(to_dense(a)));
  return from_dense(dense_gcd(to_dense(a), to_dense(b)));
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Rational& v) : num_(v), den_(Rational(1)) {}

RationalFunction::RationalFunction(Laurent n) : num_(std::move(n)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Laurent n, Laurent d) { *this = normalize(n, d); }

RationalFunction RationalFunction::q(int e) { return RationalFunction(Laurent(Rational(1), e)); }

RationalFunction normalize(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw MalformedScalar("zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;
  int a = num.low(), b = den.low();
  Dense N = to_dense(num), D = to_dense(den);
  Laurent n, d;
  if (D.size() == 1) {
    n = num.scaled(1 / D[0]).shifted(-b);
    d = Laurent(Rational(1));
  } else {
    if (N.size() > 1) {
      Dense g = dense_gcd(N, D);
      if (g.size() > 1) {
        Dense q, rem;
        divmod(N, g, q, rem);
        N = q;
        divmod(D, g, q, rem);
        D = q;
      }
    }
    Rational l = D.back();
    for (auto& c : N) c /= l;
    for (auto& c : D) c /= l;
    n = from_dense(N, a - b);
    d = from_dense(D, 0);
  }
  return RationalFunction::from_reduced(std::move(n), std::move(d));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ + o.num_);
  if (den_ == o.den_) return normalize(num_ + o.num_, den_);
  return normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  return from_reduced(-num_, den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ * o.num_);
  return normalize(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MalformedScalar("division by zero");
  return normalize(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw MalformedScalar("division by zero");
  if (is_zero()) return {};
  return normalize(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(long k) const {
  RationalFunction base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -k : k;
  RationalFunction r(1);
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Rational RationalFunction::evaluate(const Rational& q0) const {
  Rational d = den_.evaluate(q0);
  if (d == 0) throw MalformedScalar("pole at evaluation point");
  return num_.evaluate(q0) / d;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ------------------------------------------------------------ scalar parser

namespace {

struct ScalarParser {
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw MalformedScalar("scalar '" + s + "' col " + std::to_string(i + 1) + ": " + what);
  }
  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  RF expr() {
    RF v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  RF term() {
    RF v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        RF d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  RF unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  long integer() {
    ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    ws();
    std::size_t st = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (st == i) fail("expected integer exponent");
    long v = std::stol(s.substr(st, i - st));
    return neg ? -v : v;
  }
  RF power() {
    RF b = primary();
    if (eat('^')) {
      long e;
      if (eat('(')) {
        e = integer();
        if (!eat(')')) fail("expected ')'");
      } else {
        e = integer();
      }
      if (b.is_zero() && e < 0) fail("zero to a negative power");
      b = b.pow(e);
    }
    return b;
  }
  RF primary() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      RF v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++i;
      return RF::q(1);
    }
    if (std::isdigit((unsigned char)c)) {
      std::size_t st = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      return RF(Rational(mpz_class(s.substr(st, i - st))));
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

RationalFunction parse_scalar(const std::string& text) {
  ScalarParser p{text};
  RF v = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

// ------------------------------------------------------------------ Matrix

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RF(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<RF>& d) {
  Matrix m(int(d.size()), int(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
  return m;
}

Matrix Matrix::column(const std::vector<RF>& v) {
  Matrix m(int(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(int(i), 0) = v[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const RF& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const RF& b = o(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in sum");
  Matrix m = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(RF(-1)); }

Matrix Matrix::scaled(const RF& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool Matrix::is_identity() const { return r_ == c_ && *this == identity(r_); }

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<RF> Matrix::apply(const std::vector<RF>& v) const {
  if (int(v.size()) != c_) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<RF> out(r_);
  for (int j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < r_; ++i)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

std::vector<RF> Matrix::col(int j) const {
  std::vector<RF> v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

namespace {

// Reduced row echelon form in place on the first ncols columns; the
// remaining columns ride along. Returns pivot columns.
std::vector<int> rref(Matrix& m, int ncols) {
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < ncols && row < m.rows(); ++c) {
    int best = -1;
    std::size_t bw = 0;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      std::size_t w = m(r, c).weight();
      if (best < 0 || w < bw) best = r, bw = w;
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    RF inv = m(row, c).inverse();
    for (int j = c; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      RF f = m(r, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

}  // namespace

std::optional<Matrix> Matrix::inverse() const {
  if (r_ != c_) return std::nullopt;
  int n = r_;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = RF(1);
  }
  auto piv = rref(aug, n);
  if (int(piv.size()) != n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Matrix Matrix::pow(long k) const {
  if (r_ != c_) throw std::invalid_argument("power of a non-square matrix");
  Matrix base = *this;
  if (k < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("negative power of a singular matrix");
    base = *inv;
    k = -k;
  }
  Matrix r = identity(r_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

int Matrix::rank() const {
  Matrix m = *this;
  return int(rref(m, c_).size());
}

Matrix Matrix::nullspace() const {
  Matrix m = *this;
  auto piv = rref(m, c_);
  std::vector<bool> is_piv(c_, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < c_; ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix N(c_, int(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    int f = free[k];
    N(f, int(k)) = RF(1);
    for (std::size_t r = 0; r < piv.size(); ++r) N(piv[r], int(k)) = -m(int(r), f);
  }
  return N;
}

Matrix Matrix::colspace() const {
  Matrix m = transpose();
  auto piv = rref(m, m.cols());
  Matrix B(r_, int(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (int i = 0; i < r_; ++i) B(i, int(k)) = m(int(k), i);
  return B;
}

SolveResult solve(const Matrix& A, const std::vector<RF>& y) {
  if (A.rows() != A.cols()) throw std::invalid_argument("solve needs a square matrix");
  if (int(y.size()) != A.rows()) throw std::invalid_argument("solve: right side length");
  int n = A.rows();
  Matrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = y[i];
  }
  auto piv = rref(aug, n);
  for (int r = int(piv.size()); r < n; ++r)
    if (!aug(r, n).is_zero()) return {SolveResult::Kind::no_solution, {}, n - int(piv.size())};
  std::vector<RF> x(n);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(int(r), n);
  if (int(piv.size()) < n) return {SolveResult::Kind::non_unique, x, n - int(piv.size())};
  return {SolveResult::Kind::unique, x, 0};
}

Matrix kron(const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      if (A(i, j).is_zero()) continue;
      for (int k = 0; k < B.rows(); ++k)
        for (int l = 0; l < B.cols(); ++l)
          if (!B(k, l).is_zero()) K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
    }
  return K;
}

}  // namespace qcoalg
