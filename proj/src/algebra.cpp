// algebra.cpp - the matrix-algebra side: quantum and oriented quantum algebras
#include "qcoalg/structures.hpp"

#include <array>
#include <map>

namespace qcoalg {

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (int a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b].is_zero()) continue;
      for (const auto& [c, v] : mult[a][b]) out[c] += x[a] * y[b] * v;
    }
  }
  return out;
}

Algebra matrix_algebra(int n) {
  if (n < 1) throw InvalidParameter("matrix algebra needs n >= 1");
  Algebra A;
  A.dim = n * n;
  A.mult.assign(A.dim, std::vector<std::vector<std::pair<int, RF>>>(A.dim));
  A.unit.assign(A.dim, RF(0));
  A.labels.resize(A.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      A.labels[cm(n, i, j)] = "E^" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      for (int m = 0; m < n; ++m) A.mult[cm(n, i, j)][cm(n, j, m)].push_back({cm(n, i, m), RF(1)});
    }
  for (int i = 0; i < n; ++i) A.unit[cm(n, i, i)] = RF(1);
  return A;
}

Algebra opposite_algebra(const Algebra& A) {
  Algebra B = A;
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) B.mult[a][b] = A.mult[b][a];
  return B;
}

Algebra direct_product(const Algebra& A, const Algebra& B) {
  Algebra P;
  P.dim = A.dim + B.dim;
  P.mult.assign(P.dim, std::vector<std::vector<std::pair<int, RF>>>(P.dim));
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) P.mult[a][b] = A.mult[a][b];
  for (int a = 0; a < B.dim; ++a)
    for (int b = 0; b < B.dim; ++b)
      for (const auto& [c, v] : B.mult[a][b]) P.mult[A.dim + a][A.dim + b].push_back({A.dim + c, v});
  P.unit = A.unit;
  P.unit.insert(P.unit.end(), B.unit.begin(), B.unit.end());
  for (int a = 0; a < A.dim; ++a) P.labels.push_back(a < int(A.labels.size()) ? A.labels[a] : "x" + std::to_string(a + 1));
  for (int b = 0; b < B.dim; ++b)
    P.labels.push_back("~" + (b < int(B.labels.size()) ? B.labels[b] : "x" + std::to_string(b + 1)));
  return P;
}

Coalgebra dual_coalgebra(const Algebra& A) {
  Coalgebra C;
  C.dim = A.dim;
  C.delta.resize(C.dim);
  C.counit = A.unit;
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b)
      for (const auto& [c, v] : A.mult[a][b]) C.delta[c].push_back({a, b, v});
  for (int a = 0; a < A.dim; ++a) {
    std::string l = a < int(A.labels.size()) ? A.labels[a] : "";
    if (!l.empty() && l[0] == 'E') l[0] = 'e';
    C.labels.push_back(l);
  }
  return C;
}

Matrix tensor_mul(const Algebra& A, const Matrix& X, const Matrix& Y, bool op_second) {
  int n = A.dim;
  Matrix Z(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (X(a, b).is_zero()) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (Y(c, d).is_zero()) continue;
          const auto& first = A.mult[a][c];
          const auto& second = op_second ? A.mult[d][b] : A.mult[b][d];
          if (first.empty() || second.empty()) continue;
          RF w = X(a, b) * Y(c, d);
          for (const auto& [e, u] : first)
            for (const auto& [f, v] : second) Z(e, f) += w * u * v;
        }
    }
  return Z;
}

Matrix tensor_unit(const Algebra& A) {
  Matrix U(A.dim, A.dim);
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) U(a, b) = A.unit[a] * A.unit[b];
  return U;
}

Matrix tensor_map(const Matrix& X, const Matrix& f, const Matrix& g) {
  return f * X * g.transpose();
}

std::optional<Matrix> tensor_inverse(const Algebra& A, const Matrix& X) {
  int n = A.dim, N = n * n;
  Matrix L(N, N);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (X(a, b).is_zero()) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (const auto& [e, u] : A.mult[a][c])
            for (const auto& [f, v] : A.mult[b][d]) L(e * n + f, c * n + d) += X(a, b) * u * v;
    }
  Matrix U = tensor_unit(A);
  std::vector<RF> rhs(N);
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f) rhs[e * n + f] = U(e, f);
  auto r = solve(L, rhs);
  if (r.kind != SolveResult::Kind::unique) return std::nullopt;
  Matrix Y(n, n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) Y(c, d) = r.x[c * n + d];
  if (tensor_mul(A, Y, X) != U) return std::nullopt;
  return Y;
}

bool is_algebra_automorphism(const Algebra& A, const Matrix& t, bool anti) {
  if (!t.inverse()) return false;
  if (t.apply(A.unit) != A.unit) return false;
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) {
      Vec xy = A.mul(basis_vector(A.dim, a), basis_vector(A.dim, b));
      Vec lhs = t.apply(xy);
      Vec rhs = anti ? A.mul(t.col(b), t.col(a)) : A.mul(t.col(a), t.col(b));
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

using T3 = std::map<std::array<int, 3>, RF>;

T3 embed(const Algebra& A, const Matrix& R, int p, int q) {
  T3 t;
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) {
      if (R(a, b).is_zero()) continue;
      for (int u = 0; u < A.dim; ++u) {
        if (A.unit[u].is_zero()) continue;
        std::array<int, 3> k{u, u, u};
        k[p] = a;
        k[q] = b;
        t[k] += R(a, b) * A.unit[u];
      }
    }
  return t;
}

T3 mul3(const Algebra& A, const T3& X, const T3& Y) {
  T3 Z;
  for (const auto& [k1, v1] : X)
    for (const auto& [k2, v2] : Y) {
      const auto& m0 = A.mult[k1[0]][k2[0]];
      const auto& m1 = A.mult[k1[1]][k2[1]];
      const auto& m2 = A.mult[k1[2]][k2[2]];
      if (m0.empty() || m1.empty() || m2.empty()) continue;
      RF w = v1 * v2;
      for (const auto& [a, x] : m0)
        for (const auto& [b, y] : m1)
          for (const auto& [c, z] : m2) Z[{a, b, c}] += w * x * y * z;
    }
  std::erase_if(Z, [](const auto& kv) { return kv.second.is_zero(); });
  return Z;
}

AxiomResult ybe(const Algebra& A, const Matrix& R, const std::string& name) {
  AxiomResult r;
  r.name = name;
  T3 r12 = embed(A, R, 0, 1), r13 = embed(A, R, 0, 2), r23 = embed(A, R, 1, 2);
  T3 lhs = mul3(A, mul3(A, r12, r13), r23);
  T3 rhs = mul3(A, mul3(A, r23, r13), r12);
  if (lhs != rhs) {
    r.pass = false;
    for (const auto& [k, v] : lhs) {
      auto it = rhs.find(k);
      RF w = it == rhs.end() ? RF(0) : it->second;
      if (w != v && int(r.witnesses.size()) < kMaxWitnesses)
        r.witnesses.push_back("coefficient at (" + A.labels[k[0]] + ", " + A.labels[k[1]] + ", " +
                              A.labels[k[2]] + "): " + v.str() + " != " + w.str());
    }
    if (r.witnesses.empty()) r.witnesses.push_back("extra terms on the right side");
  }
  return r;
}

AxiomResult simple(const std::string& name, bool ok, const std::string& why) {
  AxiomResult r;
  r.name = name;
  r.pass = ok;
  if (!ok) r.witnesses.push_back(why);
  return r;
}

}  // namespace

Report check_qa(const QA& S) {
  const Algebra& A = S.A;
  Report rep;
  Matrix U = tensor_unit(A);
  rep.items.push_back(simple("inverse", tensor_mul(A, S.rho, S.rho_inv) == U && tensor_mul(A, S.rho_inv, S.rho) == U,
                             "rho_inv is not a two-sided inverse"));
  rep.items.push_back(simple("s", is_algebra_automorphism(A, S.s, true), "s is not an algebra isomorphism A -> A^op"));
  Matrix I = Matrix::identity(A.dim);
  Matrix s1 = tensor_map(S.rho, S.s, I);
  bool q1 = tensor_mul(A, S.rho, s1) == U && tensor_mul(A, s1, S.rho) == U;
  rep.items.push_back(simple("QA.1", q1, "(s (x) 1)(rho) is not the inverse of rho"));
  rep.items.push_back(simple("QA.2", tensor_map(S.rho, S.s, S.s) == S.rho, "(s (x) s)(rho) != rho"));
  rep.items.push_back(ybe(A, S.rho, "QA.3"));
  return rep;
}

Report check_oqa(const OQA& S) {
  const Algebra& A = S.A;
  Report rep;
  Matrix U = tensor_unit(A);
  Matrix I = Matrix::identity(A.dim);
  rep.items.push_back(simple("inverse", tensor_mul(A, S.rho, S.rho_inv) == U && tensor_mul(A, S.rho_inv, S.rho) == U,
                             "rho_inv is not a two-sided inverse"));
  rep.items.push_back(simple("td", is_algebra_automorphism(A, S.td), "td is not an algebra automorphism"));
  rep.items.push_back(simple("tu", is_algebra_automorphism(A, S.tu), "tu is not an algebra automorphism"));
  rep.items.push_back(simple("commute", S.td * S.tu == S.tu * S.td, "td tu != tu td"));
  Matrix X = tensor_map(S.rho_inv, S.td, I);
  Matrix Y = tensor_map(S.rho, I, S.tu);
  rep.items.push_back(simple("qa.1a", tensor_mul(A, X, Y, true) == U, "XY != 1 in A (x) A^op"));
  rep.items.push_back(simple("qa.1b", tensor_mul(A, Y, X, true) == U, "YX != 1 in A (x) A^op"));
  bool q2 = tensor_map(S.rho, S.td, S.td) == S.rho && tensor_map(S.rho, S.tu, S.tu) == S.rho;
  rep.items.push_back(simple("qa.2", q2, "rho not invariant under td (x) td or tu (x) tu"));
  rep.items.push_back(ybe(A, S.rho, "qa.3"));
  return rep;
}

QA make_qa(Algebra A, Matrix rho, Matrix s) {
  auto inv = tensor_inverse(A, rho);
  if (!inv) throw InvalidParameter("rho is not invertible");
  return QA{std::move(A), std::move(rho), *inv, std::move(s)};
}

OQA make_oqa(Algebra A, Matrix rho, Matrix td, Matrix tu) {
  auto inv = tensor_inverse(A, rho);
  if (!inv) throw InvalidParameter("rho is not invertible");
  return OQA{std::move(A), std::move(rho), *inv, std::move(td), std::move(tu)};
}

QA jones_algebra() {
  Algebra A = matrix_algebra(2);
  Matrix rho(4, 4);
  RF qi = RF::q(-1), q = RF::q(1);
  rho(cm(2, 0, 0), cm(2, 0, 0)) = qi;
  rho(cm(2, 1, 1), cm(2, 1, 1)) = qi;
  rho(cm(2, 0, 0), cm(2, 1, 1)) = q;
  rho(cm(2, 1, 1), cm(2, 0, 0)) = q;
  rho(cm(2, 0, 1), cm(2, 1, 0)) = qi - RF::q(3);
  Matrix M(2, 2);
  M(0, 1) = q;
  M(1, 0) = -qi;
  Matrix N = M.transpose();
  Matrix Ni = *N.inverse();
  // s(x) = N x^t N^-1 with N = M^t, M = [[0, q], [-q^-1, 0]]; conjugating by M itself
  // gives s^-1, which fails QA.1 against this rho
  Matrix s(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix x(2, 2);
      x(i, j) = RF(1);
      Matrix y = N * x.transpose() * Ni;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s(cm(2, a, b), cm(2, i, j)) = y(a, b);
    }
  return make_qa(A, rho, s);
}

OQA oriented_from_quantum_algebra(const QA& S) {
  auto si = S.s.inverse();
  if (!si) throw InvalidParameter("s is not invertible");
  return OQA{S.A, S.rho, S.rho_inv, Matrix::identity(S.A.dim), *si * *si};
}

OQA homfly_algebra(const HomflyParams& p) {
  validate_homfly(p);
  int n = p.n;
  Matrix t(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(cm(n, i, j), cm(n, i, j)) = p.omega[i] / p.omega[j];
  return make_oqa(matrix_algebra(n), p.rho, t, t);
}

OQC dual_oqc(const OQA& S) {
  Report r = check_oqa(S);
  if (!r.ok()) throw AxiomViolation("dual_oqc: input fails the oriented quantum algebra axioms", r);
  return OQC{dual_coalgebra(S.A), S.rho, S.rho_inv, S.td.transpose(), S.tu.transpose(), true};
}

QC dual_qc(const QA& S) {
  Report r = check_qa(S);
  if (!r.ok()) throw AxiomViolation("dual_qc: input fails the quantum algebra axioms", r);
  return QC{dual_coalgebra(S.A), S.rho, S.rho_inv, S.s.transpose(), true};
}

namespace {

Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  int n = a.rows();
  Matrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, n + j) = b(i, j);
      m(n + i, j) = c(i, j);
      m(n + i, n + j) = d(i, j);
    }
  return m;
}

}  // namespace

AlgebraDouble double_algebra(const OQA& S) {
  Report r = check_oqa(S);
  if (!r.ok()) throw AxiomViolation("double_algebra: input fails the axioms", r);
  int n = S.A.dim;
  Algebra D = direct_product(S.A, opposite_algebra(S.A));
  auto tinv = (S.td * S.tu).inverse();
  if (!tinv) throw InvalidParameter("td tu is not invertible");
  Matrix Z(n, n), I = Matrix::identity(n);
  Matrix rho = block2(S.rho, S.rho_inv * tinv->transpose(), S.rho_inv, S.rho);
  Matrix s = block2(Z, I, *tinv, Z);
  QA q = make_qa(D, rho, s);
  OQA o{D, rho, q.rho_inv, block2(S.td, Z, Z, S.td), block2(S.tu, Z, Z, S.tu)};
  Matrix pi(n, 2 * n);
  for (int i = 0; i < n; ++i) pi(i, i) = RF(1);
  return {std::move(q), std::move(o), std::move(pi)};
}

namespace {

bool is_algebra_map(const Matrix& f, const Algebra& A, const Algebra& B) {
  if (f.apply(A.unit) != B.unit) return false;
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b)
      if (f.apply(A.mul(basis_vector(A.dim, a), basis_vector(A.dim, b))) != B.mul(f.col(a), f.col(b)))
        return false;
  return true;
}

}  // namespace

bool is_oqa_morphism(const Matrix& f, const OQA& S, const OQA& S2, std::string* why) {
  auto say = [&](const char* w) {
    if (why) *why = w;
    return false;
  };
  if (f.rows() != S2.A.dim || f.cols() != S.A.dim) return say("shape");
  if (!is_algebra_map(f, S.A, S2.A)) return say("not an algebra map");
  if (tensor_map(S.rho, f, f) != S2.rho) return say("rho not carried to rho'");
  if (S2.td * f != f * S.td) return say("td not intertwined");
  if (S2.tu * f != f * S.tu) return say("tu not intertwined");
  return true;
}

bool is_qa_morphism(const Matrix& f, const QA& S, const QA& S2, std::string* why) {
  auto say = [&](const char* w) {
    if (why) *why = w;
    return false;
  };
  if (f.rows() != S2.A.dim || f.cols() != S.A.dim) return say("shape");
  if (!is_algebra_map(f, S.A, S2.A)) return say("not an algebra map");
  if (tensor_map(S.rho, f, f) != S2.rho) return say("rho not carried to rho'");
  if (S2.s * f != f * S.s) return say("s not intertwined");
  return true;
}

}  // namespace qcoalg
