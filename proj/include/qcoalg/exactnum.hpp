// exactnum.hpp - exact scalars in Q(q) and dense matrices over them
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcoalg {

using Rational = mpq_class;

struct MalformedScalar : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse Laurent polynomial, terms sorted by exponent, no zero coefficients.
class Laurent {
 public:
  struct Term {
    int e;
    Rational c;
  };

  Laurent() = default;
  explicit Laurent(const Rational& c, int e = 0);
  static Laurent monomial(const Rational& c, int e) { return Laurent(c, e); }

  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  int low() const { return t_.front().e; }
  int high() const { return t_.back().e; }
  const Rational& lead() const { return t_.back().c; }
  bool is_one() const { return t_.size() == 1 && t_[0].e == 0 && t_[0].c == 1; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent scaled(const Rational& c) const;
  Laurent shifted(int k) const;
  bool operator==(const Laurent& o) const;

  Rational evaluate(const Rational& q0) const;
  std::string str() const;

  static Laurent from_terms(std::vector<Term> raw);

 private:
  std::vector<Term> t_;
};

// Element of Q(q) kept in lowest terms: num / den with den monic,
// den(0) != 0 and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long v) : num_(Rational(v)), den_(Rational(1)) {
    if (v == 0) num_ = Laurent();
  }
  RationalFunction(const Rational& v);
  explicit RationalFunction(Laurent n);
  RationalFunction(Laurent n, Laurent d);  // normalizes

  static RationalFunction q(int e = 1);
  // Caller guarantees the pair is already in lowest terms.
  static RationalFunction from_reduced(Laurent n, Laurent d) {
    RationalFunction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction inverse() const;
  RationalFunction pow(long k) const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // Exact value at a rational point; throws on a pole.
  Rational evaluate(const Rational& q0) const;
  std::string str() const;
  // Rough size measure, used for pivot choice.
  std::size_t weight() const { return num_.terms().size() + den_.terms().size(); }

 private:
  Laurent num_;
  Laurent den_{Rational(1)};
};

using RF = RationalFunction;

RationalFunction normalize(const Laurent& num, const Laurent& den);
RationalFunction parse_scalar(const std::string& text);

// Polynomial gcd over Q of two Laurent polynomials viewed in Q[q, 1/q];
// result is monic with nonzero constant term.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<RF>& d);
  static Matrix column(const std::vector<RF>& v);

  int rows() const { return r_; }
  int cols() const { return c_; }
  RF& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
  const RF& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const RF& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_zero() const;

  std::vector<RF> apply(const std::vector<RF>& v) const;
  std::vector<RF> col(int j) const;

  std::optional<Matrix> inverse() const;
  Matrix pow(long k) const;  // negative k needs an invertible matrix
  int rank() const;
  // Columns form a basis of {x : A x = 0}.
  Matrix nullspace() const;
  // Columns form a basis of the column space.
  Matrix colspace() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<RF> a_;
};

struct SolveResult {
  enum class Kind { unique, no_solution, non_unique };
  Kind kind;
  std::vector<RF> x;  // a particular solution when one exists
  int nullity = 0;
};

SolveResult solve(const Matrix& A, const std::vector<RF>& y);

// Kronecker product, (A (x) B)[(i,k)][(j,l)] = A[i][j] B[k][l].
Matrix kron(const Matrix& A, const Matrix& B);

}  // namespace qcoalg
