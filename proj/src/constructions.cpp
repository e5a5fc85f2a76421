// constructions.cpp - builders and derived oriented quantum coalgebras
#include "qcoalg/structures.hpp"

namespace qcoalg {

TwistOQC trivial_structure(const RF& beta) {
  if (beta.is_zero()) throw InvalidParameter("trivial structure needs beta != 0");
  Coalgebra C = comatrix(1);
  Matrix b(1, 1);
  b(0, 0) = beta;
  OQC base = make_oqc(C, b, Matrix::identity(1), Matrix::identity(1));
  return make_twist(std::move(base), Vec{RF(1)});
}

namespace {

Matrix jones_form() {
  Coalgebra C = comatrix(2);
  Matrix b(4, 4);
  RF qi = RF::q(-1), q = RF::q(1);
  b(cm(2, 0, 0), cm(2, 0, 0)) = qi;
  b(cm(2, 1, 1), cm(2, 1, 1)) = qi;
  b(cm(2, 0, 0), cm(2, 1, 1)) = q;
  b(cm(2, 1, 1), cm(2, 0, 0)) = q;
  b(cm(2, 0, 1), cm(2, 1, 0)) = qi - RF::q(3);
  return b;
}

// T(e^i_j) = (w_i / w_j) e^i_j
Matrix diagonal_twist_map(const std::vector<RF>& w) {
  int n = int(w.size());
  Matrix T(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T(cm(n, i, j), cm(n, i, j)) = w[i] / w[j];
  return T;
}

Vec diagonal_functional(const std::vector<RF>& g) {
  int n = int(g.size());
  Vec G(n * n);
  for (int i = 0; i < n; ++i) G[cm(n, i, i)] = g[i];
  return G;
}

}  // namespace

QC jones_quantum() {
  Matrix S(4, 4);
  S(cm(2, 1, 1), cm(2, 0, 0)) = RF(1);
  S(cm(2, 0, 0), cm(2, 1, 1)) = RF(1);
  // e^1_2 -> -q^-2 e^1_2, e^2_1 -> -q^2 e^2_1; this is the orientation compatible with b
  S(cm(2, 0, 1), cm(2, 0, 1)) = -RF::q(-2);
  S(cm(2, 1, 0), cm(2, 1, 0)) = -RF::q(2);
  return make_qc(comatrix(2), jones_form(), S);
}

TwistOQC jones_structure() {
  std::vector<RF> w{RF::q(1), -RF::q(-1)};
  Matrix T = diagonal_twist_map(w);
  OQC base = make_oqc(comatrix(2), jones_form(), T, T);
  return make_twist(std::move(base), diagonal_functional({w[0] * w[0], w[1] * w[1]}));
}

// ------------------------------------------------------------------ HOMFLY

namespace {
int gi(int n, int i, int j) { return cm(n, i, j); }
// rho^{il}_{jm}
const RF& R(const HomflyParams& p, int i, int l, int j, int m) {
  return p.rho(gi(p.n, i, j), gi(p.n, l, m));
}
}  // namespace

HomflyParams homfly_specialization(int n, std::optional<RF> off, std::optional<std::vector<RF>> omega) {
  if (n < 2) throw InvalidParameter("homfly needs n >= 2");
  HomflyParams p;
  p.n = n;
  p.bc = RF::q(2);
  RF d = RF::q(-1);
  p.x = d - p.bc / d;
  RF o = off ? *off : RF::q(1);
  p.rho = Matrix(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        p.rho(gi(n, i, i), gi(n, i, i)) = d;
      } else {
        p.rho(gi(n, i, i), gi(n, j, j)) = o;
        if (i < j) p.rho(gi(n, i, j), gi(n, j, i)) = p.x;
      }
    }
  if (omega) {
    p.omega = *omega;
  } else {
    // w_1 = q, w_{i+1} = -q^-2 w_i
    RF w = RF::q(1);
    for (int i = 0; i < n; ++i) {
      p.omega.push_back(w);
      w = -RF::q(-2) * w;
    }
  }
  return p;
}

RF homfly_omega_square_ratio(const HomflyParams& p, int i) {
  RF r = R(p, 0, 0, 0, 0) * R(p, i, i, i, i) / p.bc;
  for (int j = 1; j < i; ++j) r *= R(p, j, j, j, j) * R(p, j, j, j, j) / p.bc;
  return r;
}

void validate_homfly(const HomflyParams& p) {
  int n = p.n;
  if (n < 2) throw InvalidParameter("homfly: n >= 2 required");
  if (p.bc.is_zero() || p.x.is_zero()) throw InvalidParameter("homfly: bc and x must be nonzero");
  if (p.rho.rows() != n * n || p.rho.cols() != n * n) throw InvalidParameter("homfly: rho table shape");
  if (int(p.omega.size()) != n) throw InvalidParameter("homfly: need n omega values");
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) {
          bool same = (i == j && l == m) || (i == m && l == j);
          if (!same && !R(p, i, l, j, m).is_zero()) throw InvalidParameter("homfly: clause a) violated");
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (R(p, i, j, i, j).is_zero()) throw InvalidParameter("homfly: clause b) violated");
  for (int i = 0; i < n; ++i) {
    const RF& d = R(p, i, i, i, i);
    if (p.x != d - p.bc / d) throw InvalidParameter("homfly: clause c) violated");
    for (int j = i + 1; j < n; ++j) {
      if (R(p, i, j, j, i) != p.x || !R(p, j, i, i, j).is_zero())
        throw InvalidParameter("homfly: clause c) violated");
      if (R(p, i, j, i, j) * R(p, j, i, j, i) != p.bc) throw InvalidParameter("homfly: clause d) violated");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RF& a = R(p, i, i, i, i);
      const RF& b = R(p, j, j, j, j);
      if (a != b && a * b != -p.bc) throw InvalidParameter("homfly: clause e) violated");
    }
  for (int i = 0; i < n; ++i)
    if (p.omega[i].is_zero()) throw InvalidParameter("homfly: omega values must be nonzero");
  for (int i = 1; i < n; ++i)
    if (p.omega[i] * p.omega[i] != homfly_omega_square_ratio(p, i) * p.omega[0] * p.omega[0])
      throw InvalidParameter("homfly: omega-square condition violated at i=" + std::to_string(i + 1));
}

TwistOQC homfly_structure(const HomflyParams& p) {
  validate_homfly(p);
  Matrix T = diagonal_twist_map(p.omega);
  std::vector<RF> g;
  for (const auto& w : p.omega) g.push_back(w * w);
  OQC base = make_oqc(comatrix(p.n), p.rho, T, T);
  return make_twist(std::move(base), diagonal_functional(g));
}

// ---------------------------------------------------- derived structures

OQC standardize(const OQC& S) {
  OQC r = S;
  r.Tu = S.Td * S.Tu;
  r.Td = Matrix::identity(S.C.dim);
  return r;
}

OQC from_quantum(const QC& S) {
  auto inv = S.S.inverse();
  if (!inv) throw InvalidParameter("S is not invertible");
  return OQC{S.C, S.b, S.b_inv, Matrix::identity(S.C.dim), *inv * *inv, S.strict};
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

CoalgebraDouble double_coalgebra(const OQC& S) {
  int n = S.C.dim;
  Coalgebra D = direct_sum(S.C, opposite(S.C));
  auto tinv = (S.Td * S.Tu).inverse();
  if (!tinv) throw InvalidParameter("Td Tu is not invertible");
  Matrix Z(n, n), I = Matrix::identity(n);
  // beta(c, d) = b(c, d) = beta(c-, d-), beta(c-, d) = b^-1(c, d),
  // beta(c, d-) = b^-1(c, (Td Tu)^-1 d)
  Matrix beta = block2(S.b, S.b_inv * *tinv, S.b_inv, S.b);
  Matrix Sb = block2(Z, *tinv, I, Z);
  QC q = make_qc(D, beta, Sb, S.strict);
  OQC o{D, beta, q.b_inv, block2(S.Td, Z, Z, S.Td), block2(S.Tu, Z, Z, S.Tu), S.strict};
  Matrix iota(2 * n, n);
  for (int i = 0; i < n; ++i) iota(i, i) = RF(1);
  return {std::move(q), std::move(o), std::move(iota)};
}

OQC tensor_oqc(const OQC& S, const OQC& S2) {
  OQC r;
  r.C = tensor_coalgebra(S.C, S2.C);
  r.b = kron(S.b, S2.b);
  r.b_inv = kron(S.b_inv, S2.b_inv);
  r.Td = kron(S.Td, S2.Td);
  r.Tu = kron(S.Tu, S2.Tu);
  r.strict = S.strict && S2.strict;
  if (!is_convolution_inverse(r.C, r.b, r.b_inv))
    throw InvalidParameter("tensor product form inverse failed verification");
  return r;
}

OppositeVariants opposite_variants(const OQC& S) {
  OppositeVariants v;
  v.cop = OQC{opposite(S.C), S.b, S.b_inv, S.Td, S.Tu, S.strict};
  v.inv = OQC{S.C, S.b_inv, S.b, *S.Td.inverse(), *S.Tu.inverse(), S.strict};
  // b^op needs the inverse maps: b^op(c1, X d2) b^-op(Y c2, d1) unwinds to qc.1b for X^-1, Y^-1
  v.op = OQC{S.C, S.b.transpose(), S.b_inv.transpose(), *S.Tu.inverse(), *S.Td.inverse(), S.strict};
  return v;
}

Quotient minimal_quotient(const OQC& S) {
  const Coalgebra& C = S.C;
  int n = C.dim;
  Subspace left = S.b.transpose().nullspace();  // b(x, C) = 0
  Subspace right = S.b.nullspace();             // b(C, x) = 0
  Subspace I = max_stable_coideal(C, {left, right}, {S.Td, S.Tu});
  Matrix P = I.transpose().nullspace().transpose();
  if (I.cols() == 0) P = Matrix::identity(n);
  int m = P.rows();
  // pick columns s with P[:, s] independent, then normalize P[:, s] = 1
  std::vector<int> cols;
  for (int j = 0; j < n && int(cols.size()) < m; ++j) {
    Matrix t(m, int(cols.size()) + 1);
    for (std::size_t k = 0; k <= cols.size(); ++k)
      for (int i = 0; i < m; ++i) t(i, int(k)) = P(i, k < cols.size() ? cols[k] : j);
    if (t.rank() == int(cols.size()) + 1) cols.push_back(j);
  }
  Matrix Ps(m, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) Ps(i, k) = P(i, cols[k]);
  P = *Ps.inverse() * P;

  Coalgebra Q;
  Q.dim = m;
  Q.delta.resize(m);
  Q.counit.resize(m);
  Q.labels.resize(m);
  for (int s = 0; s < m; ++s) {
    int src = cols[s];
    Q.counit[s] = C.counit[src];
    Q.labels[s] = C.label(src);
    Matrix D(m, m);
    for (const auto& t : C.delta[src])
      for (int a = 0; a < m; ++a) {
        if (P(a, t.j).is_zero()) continue;
        for (int b = 0; b < m; ++b)
          if (!P(b, t.k).is_zero()) D(a, b) += t.c * P(a, t.j) * P(b, t.k);
      }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (!D(a, b).is_zero()) Q.delta[s].push_back({a, b, D(a, b)});
  }
  Matrix b(m, m), Td(m, m), Tu(m, m);
  Matrix PTd = P * S.Td, PTu = P * S.Tu;
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m; ++t) b(s, t) = S.b(cols[s], cols[t]);
    for (int a = 0; a < m; ++a) {
      Td(a, s) = PTd(a, cols[s]);
      Tu(a, s) = PTu(a, cols[s]);
    }
  }
  Quotient out;
  out.structure = make_oqc(Q, b, Td, Tu, S.strict);
  out.projection = P;
  out.ideal = I;
  return out;
}

bool is_oqc_morphism(const Matrix& f, const OQC& S, const OQC& S2, std::string* why) {
  auto say = [&](const char* w) {
    if (why) *why = w;
    return false;
  };
  if (f.rows() != S2.C.dim || f.cols() != S.C.dim) return say("shape");
  if (!is_coalgebra_map(f, S.C, S2.C)) return say("not a coalgebra map");
  if (f.transpose() * S2.b * f != S.b) return say("form not preserved");
  if (S2.Td * f != f * S.Td) return say("Td not intertwined");
  if (S2.Tu * f != f * S.Tu) return say("Tu not intertwined");
  return true;
}

bool is_qc_morphism(const Matrix& f, const QC& S, const QC& S2, std::string* why) {
  auto say = [&](const char* w) {
    if (why) *why = w;
    return false;
  };
  if (f.rows() != S2.C.dim || f.cols() != S.C.dim) return say("shape");
  if (!is_coalgebra_map(f, S.C, S2.C)) return say("not a coalgebra map");
  if (f.transpose() * S2.b * f != S.b) return say("form not preserved");
  if (S2.S * f != f * S.S) return say("S not intertwined");
  return true;
}

}  // namespace qcoalg
