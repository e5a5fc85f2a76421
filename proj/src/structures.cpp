// structures.cpp - forms, convolution inverses and axiom checkers
#include "qcoalg/structures.hpp"

#include <sstream>

namespace qcoalg {

bool Report::ok() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

const AxiomResult* Report::find(const std::string& name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  auto p = find(name);
  return p && p->pass;
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.pass ? "PASS " : "FAIL ") << i.name << "\n";
    for (const auto& w : i.witnesses) os << "     witness " << w << "\n";
  }
  return os.str();
}

void Report::merge(const Report& o, const std::string& prefix) {
  for (auto i : o.items) {
    i.name = prefix + i.name;
    items.push_back(std::move(i));
  }
}

namespace {

struct Recorder {
  AxiomResult r;
  explicit Recorder(std::string name) { r.name = std::move(name); }
  void fail(const std::string& w) {
    r.pass = false;
    if (int(r.witnesses.size()) < kMaxWitnesses) r.witnesses.push_back(w);
  }
};

std::string tuple_str(const Coalgebra& C, std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ", ";
    first = false;
    s += C.label(i);
  }
  return s + ")";
}

}  // namespace

// ------------------------------------------------------------------ forms

Matrix convolve(const Coalgebra& C, const Matrix& b1, const Matrix& b2) {
  Matrix r(C.dim, C.dim);
  for (int c = 0; c < C.dim; ++c)
    for (int d = 0; d < C.dim; ++d) {
      RF s;
      for (const auto& x : C.delta[c])
        for (const auto& y : C.delta[d]) {
          const RF& u = b1(x.j, y.j);
          if (u.is_zero()) continue;
          const RF& v = b2(x.k, y.k);
          if (!v.is_zero()) s += x.c * y.c * u * v;
        }
      r(c, d) = s;
    }
  return r;
}

Matrix counit_form(const Coalgebra& C) {
  Matrix e(C.dim, C.dim);
  for (int i = 0; i < C.dim; ++i)
    for (int j = 0; j < C.dim; ++j) e(i, j) = C.counit[i] * C.counit[j];
  return e;
}

std::optional<Matrix> convolution_inverse(const Coalgebra& C, const Matrix& b) {
  int n = C.dim, N = n * n;
  // unknown X(a, e) at index a * n + e; equation (c, d) at c * n + d
  Matrix L(N, N);
  std::vector<RF> rhs(N);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      int row = c * n + d;
      rhs[row] = C.counit[c] * C.counit[d];
      for (const auto& x : C.delta[c])
        for (const auto& y : C.delta[d]) {
          const RF& v = b(x.k, y.k);
          if (!v.is_zero()) L(row, x.j * n + y.j) += x.c * y.c * v;
        }
    }
  auto r = solve(L, rhs);
  if (r.kind != SolveResult::Kind::unique) return std::nullopt;
  Matrix X(n, n);
  for (int a = 0; a < n; ++a)
    for (int e = 0; e < n; ++e) X(a, e) = r.x[a * n + e];
  if (!is_convolution_inverse(C, b, X)) return std::nullopt;
  return X;
}

bool is_convolution_inverse(const Coalgebra& C, const Matrix& b, const Matrix& binv) {
  Matrix e = counit_form(C);
  return convolve(C, binv, b) == e && convolve(C, b, binv) == e;
}

Matrix convolution_power(const Coalgebra& C, const Matrix& b, const Matrix& binv, int w) {
  Matrix r = counit_form(C);
  const Matrix& f = w < 0 ? binv : b;
  for (int k = 0; k < (w < 0 ? -w : w); ++k) r = convolve(C, r, f);
  return r;
}

Matrix require_inverse(const Coalgebra& C, const Matrix& b) {
  auto inv = convolution_inverse(C, b);
  if (!inv) throw InvalidParameter("bilinear form is not convolution invertible");
  return *inv;
}

OQC make_oqc(Coalgebra C, Matrix b, Matrix Td, Matrix Tu, bool strict) {
  Matrix bi = require_inverse(C, b);
  return OQC{std::move(C), std::move(b), std::move(bi), std::move(Td), std::move(Tu), strict};
}

QC make_qc(Coalgebra C, Matrix b, Matrix S, bool strict) {
  Matrix bi = require_inverse(C, b);
  return QC{std::move(C), std::move(b), std::move(bi), std::move(S), strict};
}

TwistOQC make_twist(OQC base, Vec G) {
  const Coalgebra& C = base.C;
  Matrix L(C.dim, C.dim);
  for (int c = 0; c < C.dim; ++c)
    for (const auto& t : C.delta[c])
      if (!G[t.j].is_zero()) L(c, t.k) += t.c * G[t.j];
  auto r = solve(L, C.counit);
  if (r.kind != SolveResult::Kind::unique) throw InvalidParameter("twist functional is not invertible");
  return TwistOQC{std::move(base), std::move(G), r.x};
}

// ----------------------------------------------------------- automorphisms

namespace {

// D = (T (x) T) Delta(c) - Delta(T c), or against the flipped coproduct
Matrix automorphism_defect(const Coalgebra& C, const Matrix& T, int c, bool anti) {
  int n = C.dim;
  Matrix D(n, n);
  for (const auto& t : C.delta[c])
    for (int a = 0; a < n; ++a) {
      if (T(a, t.j).is_zero()) continue;
      for (int b = 0; b < n; ++b)
        if (!T(b, t.k).is_zero()) D(a, b) += t.c * T(a, t.j) * T(b, t.k);
    }
  for (int x = 0; x < n; ++x) {
    if (T(x, c).is_zero()) continue;
    for (const auto& t : C.delta[x]) {
      int a = anti ? t.k : t.j, b = anti ? t.j : t.k;
      D(a, b) -= T(x, c) * t.c;
    }
  }
  return D;
}

bool defect_vanishes_on_forms(const Matrix& D, const std::vector<Matrix>& forms) {
  if (D.is_zero()) return true;
  for (const auto& f : forms)
    for (const auto& g : forms) {
      if (!(f.transpose() * D * g).is_zero()) return false;
      if (!(f * D * g.transpose()).is_zero()) return false;
    }
  return true;
}

bool wrt_forms(const Coalgebra& C, const Matrix& T, const std::vector<Matrix>& forms, bool anti,
               std::string* witness) {
  for (int c = 0; c < C.dim; ++c) {
    if (!defect_vanishes_on_forms(automorphism_defect(C, T, c, anti), forms)) {
      if (witness) *witness = "c = " + C.label(c);
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_automorphism_wrt(const Coalgebra& C, const Matrix& T, const std::vector<Matrix>& forms,
                         std::string* witness) {
  if (!T.inverse()) {
    if (witness) *witness = "not invertible";
    return false;
  }
  return wrt_forms(C, T, forms, false, witness);
}

namespace {

AxiomResult check_map(const std::string& name, const Coalgebra& C, const Matrix& T,
                      const std::vector<Matrix>& forms, bool strict, bool anti) {
  Recorder r(name);
  if (T.rows() != C.dim || T.cols() != C.dim) {
    r.fail("wrong shape");
    return r.r;
  }
  if (!T.inverse()) r.fail("not invertible");
  for (int c = 0; c < C.dim; ++c)
    if (evaluate(C.counit, T.col(c)) != C.counit[c])
      r.fail("counit not preserved at " + C.label(c));
  for (int c = 0; c < C.dim; ++c) {
    Matrix D = automorphism_defect(C, T, c, anti);
    bool good = strict ? D.is_zero() : defect_vanishes_on_forms(D, forms);
    if (!good) r.fail(std::string(strict ? "coproduct" : "form equations") + " at " + C.label(c));
  }
  return r.r;
}

}  // namespace

// ------------------------------------------------------------- checkers

Report check_oqc(const OQC& S) {
  const Coalgebra& C = S.C;
  int n = C.dim;
  Report rep;
  {
    Recorder r("inverse");
    if (!is_convolution_inverse(C, S.b, S.b_inv)) r.fail("b_inv is not a two-sided convolution inverse of b");
    rep.items.push_back(r.r);
  }
  {
    Recorder r("commute");
    if (S.Td * S.Tu != S.Tu * S.Td) r.fail("Td Tu != Tu Td");
    rep.items.push_back(r.r);
  }
  std::vector<Matrix> forms{S.b, S.b_inv};
  rep.items.push_back(check_map("Td", C, S.Td, forms, S.strict, false));
  rep.items.push_back(check_map("Tu", C, S.Tu, forms, S.strict, false));

  Matrix X = S.b * S.Tu;                  // X(x, y) = b(x, Tu y)
  Matrix Y = S.Td.transpose() * S.b_inv;  // Y(x, y) = b^-1(Td x, y)
  Recorder q1a("qc.1a"), q1b("qc.1b");
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      RF va, vb;
      for (const auto& x : C.delta[c])
        for (const auto& y : C.delta[d]) {
          RF w = x.c * y.c;
          if (!X(x.j, y.k).is_zero() && !Y(x.k, y.j).is_zero()) va += w * X(x.j, y.k) * Y(x.k, y.j);
          if (!Y(x.j, y.k).is_zero() && !X(x.k, y.j).is_zero()) vb += w * Y(x.j, y.k) * X(x.k, y.j);
        }
      RF e = C.counit[c] * C.counit[d];
      if (va != e) q1a.fail(tuple_str(C, {c, d}) + ": " + va.str() + " != " + e.str());
      if (vb != e) q1b.fail(tuple_str(C, {c, d}) + ": " + vb.str() + " != " + e.str());
    }
  rep.items.push_back(q1a.r);
  rep.items.push_back(q1b.r);

  Recorder q2("qc.2");
  Matrix bd = S.Td.transpose() * S.b * S.Td, bu = S.Tu.transpose() * S.b * S.Tu;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      if (bd(c, d) != S.b(c, d)) q2.fail(tuple_str(C, {c, d}) + " under Td");
      if (bu(c, d) != S.b(c, d)) q2.fail(tuple_str(C, {c, d}) + " under Tu");
    }
  rep.items.push_back(q2.r);

  Recorder q3("qc.3");
  const Matrix& b = S.b;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e) {
        RF l, r;
        for (const auto& x : C.delta[c])
          for (const auto& y : C.delta[d]) {
            const RF& bl = b(x.j, y.j);
            const RF& br = b(x.k, y.k);
            if (bl.is_zero() && br.is_zero()) continue;
            for (const auto& z : C.delta[e]) {
              RF w = x.c * y.c * z.c;
              if (!bl.is_zero()) {
                const RF& u = b(x.k, z.j);
                const RF& v = b(y.k, z.k);
                if (!u.is_zero() && !v.is_zero()) l += w * bl * u * v;
              }
              if (!br.is_zero()) {
                const RF& u = b(x.j, z.k);
                const RF& v = b(y.j, z.j);
                if (!u.is_zero() && !v.is_zero()) r += w * br * u * v;
              }
            }
          }
        if (l != r) q3.fail(tuple_str(C, {c, d, e}) + ": " + l.str() + " != " + r.str());
      }
  rep.items.push_back(q3.r);
  return rep;
}

Report check_qc(const QC& S) {
  const Coalgebra& C = S.C;
  int n = C.dim;
  Report rep;
  {
    Recorder r("inverse");
    if (!is_convolution_inverse(C, S.b, S.b_inv)) r.fail("b_inv is not a two-sided convolution inverse of b");
    rep.items.push_back(r.r);
  }
  rep.items.push_back(check_map("S", C, S.S, {S.b}, S.strict, true));
  Recorder q1("QC.1"), q2("QC.2");
  Matrix sb = S.S.transpose() * S.b, ssb = S.S.transpose() * S.b * S.S;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      if (sb(c, d) != S.b_inv(c, d)) q1.fail(tuple_str(C, {c, d}) + ": " + sb(c, d).str() + " != " + S.b_inv(c, d).str());
      if (ssb(c, d) != S.b(c, d)) q2.fail(tuple_str(C, {c, d}));
    }
  rep.items.push_back(q1.r);
  rep.items.push_back(q2.r);
  // QC.3 is the same braid identity as qc.3
  OQC tmp{C, S.b, S.b_inv, Matrix::identity(n), Matrix::identity(n), true};
  auto r3 = *check_oqc(tmp).find("qc.3");
  r3.name = "QC.3";
  rep.items.push_back(r3);
  return rep;
}

Matrix twist_conjugation(const Coalgebra& C, const Vec& G, const Vec& Ginv) {
  return hit_left_matrix(C, Ginv) * hit_right_matrix(C, G);
}

Report check_twist(const TwistOQC& S) {
  const OQC& B = S.base;
  const Coalgebra& C = B.C;
  Report rep = check_oqc(B);
  {
    Recorder r("strict");
    if (!B.strict) r.fail("twist structures need a strict base");
    rep.items.push_back(r.r);
  }
  {
    Recorder r("G invertible");
    if (dual_product(C, S.G, S.G_inv) != C.counit || dual_product(C, S.G_inv, S.G) != C.counit)
      r.fail("G G_inv != counit");
    rep.items.push_back(r.r);
  }
  {
    Recorder r("G T-invariant");
    Vec gd = B.Td.transpose().apply(S.G), gu = B.Tu.transpose().apply(S.G);
    if (gd != S.G) r.fail("G o Td != G");
    if (gu != S.G) r.fail("G o Tu != G");
    rep.items.push_back(r.r);
  }
  {
    Recorder r("TdTu conjugation");
    Matrix conj = twist_conjugation(C, S.G, S.G_inv);
    Matrix t = B.Td * B.Tu;
    for (int c = 0; c < C.dim; ++c)
      if (conj.col(c) != t.col(c)) r.fail("c = " + C.label(c));
    rep.items.push_back(r.r);
  }
  return rep;
}

// ------------------------------------------------------ closure of G(C, S)

namespace {

// (A (x) B) applied to the coproduct of x, as a grid
Matrix mapped_coproduct(const Coalgebra& C, const Matrix& A, const Matrix& B, const Vec& x) {
  int n = C.dim;
  Matrix D(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : C.delta[i])
      for (int a = 0; a < n; ++a) {
        if (A(a, t.j).is_zero()) continue;
        for (int b = 0; b < n; ++b)
          if (!B(b, t.k).is_zero()) D(a, b) += x[i] * t.c * A(a, t.j) * B(b, t.k);
      }
  }
  return D;
}

bool preserves_forms(const Matrix& T, const std::vector<Matrix>& forms) {
  for (const auto& f : forms)
    if (T.transpose() * f * T != f) return false;
  return true;
}

}  // namespace

Report automorphism_group_closure_check(const Coalgebra& C, const std::vector<Matrix>& forms,
                                        const std::vector<Matrix>& maps, int window) {
  Report rep;
  Recorder pre("precondition");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    std::string w;
    if (!preserves_forms(maps[k], forms)) pre.fail("map " + std::to_string(k) + " violates qc.2");
    else if (!is_automorphism_wrt(C, maps[k], forms, &w))
      pre.fail("map " + std::to_string(k) + " is not an automorphism with respect to the forms: " + w);
  }
  rep.items.push_back(pre.r);
  if (!pre.r.pass) return rep;

  Recorder a("closure");
  std::vector<Matrix> inv;
  for (const auto& T : maps) inv.push_back(*T.inverse());
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j) {
      for (const Matrix& M : {Matrix(inv[i] * maps[j]), Matrix(maps[i] * maps[j])}) {
        std::string w;
        if (!preserves_forms(M, forms) || !is_automorphism_wrt(C, M, forms, &w))
          a.fail("composite of maps " + std::to_string(i) + ", " + std::to_string(j) + " " + w);
      }
    }
  rep.items.push_back(a.r);

  Recorder b("shifted exponents");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    std::vector<Matrix> pw;  // T^e for e in [-2w, 2w]
    for (int e = -2 * window; e <= 2 * window; ++e) pw.push_back(maps[k].pow(e));
    auto P = [&](int e) -> const Matrix& { return pw[e + 2 * window]; };
    for (int u = -window; u <= window; ++u)
      for (int v = -window; v <= window; ++v)
        for (int l = -window; l <= window; ++l)
          for (int c = 0; c < C.dim; ++c) {
            Vec e = basis_vector(C.dim, c);
            Matrix D = mapped_coproduct(C, P(u + l), P(v + l), e) -
                       mapped_coproduct(C, P(u), P(v), P(l).apply(e));
            if (!defect_vanishes_on_forms(D, forms))
              b.fail("map " + std::to_string(k) + " u=" + std::to_string(u) + " v=" + std::to_string(v) +
                     " l=" + std::to_string(l) + " c=" + C.label(c));
          }
  }
  rep.items.push_back(b.r);
  return rep;
}

}  // namespace qcoalg
