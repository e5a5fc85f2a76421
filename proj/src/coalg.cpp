// coalg.cpp - coalgebras, dual algebra, coideals
#include "qcoalg/coalg.hpp"

#include <sstream>

namespace qcoalg {

std::string Coalgebra::label(int i) const {
  if (i < int(labels.size()) && !labels[i].empty()) return labels[i];
  return "e" + std::to_string(i + 1);
}

int Coalgebra::index_of(const std::string& l) const {
  for (int i = 0; i < dim; ++i)
    if (label(i) == l) return i;
  return -1;
}

bool Coalgebra::operator==(const Coalgebra& o) const {
  if (dim != o.dim || counit != o.counit) return false;
  for (int i = 0; i < dim; ++i)
    if (coproduct(*this, basis_vector(dim, i)) != coproduct(o, basis_vector(dim, i)))
      return false;
  return true;
}

Vec basis_vector(int dim, int i) {
  Vec v(dim);
  v[i] = RF(1);
  return v;
}

static void add_to(Tensor& t, std::vector<int> key, const RF& v) {
  if (v.is_zero()) return;
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) t.erase(it);
}

Tensor coproduct(const Coalgebra& C, const Vec& c) { return iterated_coproduct(C, c, 2); }

Tensor iterated_coproduct(const Coalgebra& C, const Vec& c, int m) {
  if (m < 1) throw InvalidParameter("iterated_coproduct needs m >= 1");
  Tensor cur;
  for (int i = 0; i < C.dim; ++i) add_to(cur, {i}, c[i]);
  for (int step = 1; step < m; ++step) {
    Tensor next;
    for (const auto& [key, v] : cur) {
      int last = key.back();
      for (const auto& t : C.delta[last]) {
        auto k2 = key;
        k2.back() = t.j;
        k2.push_back(t.k);
        add_to(next, std::move(k2), v * t.c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

bool Coalgebra::is_coassociative() const {
  for (int i = 0; i < dim; ++i) {
    // split the first slot instead of the last and compare
    Tensor left;
    for (const auto& t : delta[i])
      for (const auto& u : delta[t.j]) add_to(left, {u.j, u.k, t.k}, t.c * u.c);
    if (left != iterated_coproduct(*this, basis_vector(dim, i), 3)) return false;
  }
  return true;
}

bool Coalgebra::satisfies_counit() const {
  for (int i = 0; i < dim; ++i) {
    Vec l(dim), r(dim);
    for (const auto& t : delta[i]) {
      l[t.k] += counit[t.j] * t.c;
      r[t.j] += counit[t.k] * t.c;
    }
    if (l != basis_vector(dim, i) || r != basis_vector(dim, i)) return false;
  }
  return true;
}

Coalgebra comatrix(int n) {
  if (n < 1) throw InvalidParameter("comatrix needs n >= 1");
  Coalgebra C;
  C.dim = n * n;
  C.delta.resize(C.dim);
  C.counit.assign(C.dim, RF(0));
  C.labels.resize(C.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = cm(n, i, j);
      for (int l = 0; l < n; ++l) C.delta[a].push_back({cm(n, i, l), cm(n, l, j), RF(1)});
      if (i == j) C.counit[a] = RF(1);
      C.labels[a] = n == 1 ? "g" : "e^" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    }
  return C;
}

RF evaluate(const Vec& f, const Vec& c) {
  RF s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero() && !c[i].is_zero()) s += f[i] * c[i];
  return s;
}

Vec dual_product(const Coalgebra& C, const Vec& f, const Vec& g) {
  Vec out(C.dim);
  for (int i = 0; i < C.dim; ++i)
    for (const auto& t : C.delta[i])
      if (!f[t.j].is_zero() && !g[t.k].is_zero()) out[i] += t.c * f[t.j] * g[t.k];
  return out;
}

Vec dual_unit(const Coalgebra& C) { return C.counit; }

Matrix hit_left_matrix(const Coalgebra& C, const Vec& f) {
  Matrix M(C.dim, C.dim);
  for (int i = 0; i < C.dim; ++i)
    for (const auto& t : C.delta[i])
      if (!f[t.k].is_zero()) M(t.j, i) += t.c * f[t.k];
  return M;
}

Matrix hit_right_matrix(const Coalgebra& C, const Vec& f) {
  Matrix M(C.dim, C.dim);
  for (int i = 0; i < C.dim; ++i)
    for (const auto& t : C.delta[i])
      if (!f[t.j].is_zero()) M(t.k, i) += t.c * f[t.j];
  return M;
}

Vec hit_left(const Coalgebra& C, const Vec& f, const Vec& c) {
  return hit_left_matrix(C, f).apply(c);
}

Vec hit_right(const Coalgebra& C, const Vec& c, const Vec& f) {
  return hit_right_matrix(C, f).apply(c);
}

Coalgebra opposite(const Coalgebra& C) {
  Coalgebra D = C;
  for (auto& row : D.delta)
    for (auto& t : row) std::swap(t.j, t.k);
  return D;
}

bool is_cocommutative_element(const Coalgebra& C, const Vec& c) {
  Tensor t = coproduct(C, c);
  for (const auto& [k, v] : t) {
    auto it = t.find({k[1], k[0]});
    if (it == t.end() || it->second != v) return false;
  }
  return true;
}

bool is_cocommutative(const Coalgebra& C) {
  for (int i = 0; i < C.dim; ++i)
    if (!is_cocommutative_element(C, basis_vector(C.dim, i))) return false;
  return true;
}

Coalgebra direct_sum(const Coalgebra& C, const Coalgebra& D) {
  Coalgebra S;
  S.dim = C.dim + D.dim;
  S.delta = C.delta;
  S.counit = C.counit;
  for (int i = 0; i < C.dim; ++i) S.labels.push_back(C.label(i) + "+0");
  for (int i = 0; i < D.dim; ++i) {
    auto row = D.delta[i];
    for (auto& t : row) t.j += C.dim, t.k += C.dim;
    S.delta.push_back(row);
    S.counit.push_back(D.counit[i]);
    S.labels.push_back("0+" + D.label(i));
  }
  return S;
}

Coalgebra tensor_coalgebra(const Coalgebra& C, const Coalgebra& D) {
  Coalgebra T;
  T.dim = C.dim * D.dim;
  T.delta.resize(T.dim);
  T.counit.resize(T.dim);
  T.labels.resize(T.dim);
  for (int i = 0; i < C.dim; ++i)
    for (int j = 0; j < D.dim; ++j) {
      int a = i * D.dim + j;
      for (const auto& s : C.delta[i])
        for (const auto& t : D.delta[j])
          T.delta[a].push_back({s.j * D.dim + t.j, s.k * D.dim + t.k, s.c * t.c});
      T.counit[a] = C.counit[i] * D.counit[j];
      T.labels[a] = C.label(i) + "(x)" + D.label(j);
    }
  return T;
}

Subspace intersect(const Subspace& A, const Subspace& B) {
  int n = A.rows();
  if (A.cols() == 0 || B.cols() == 0) return Matrix(n, 0);
  Matrix J(n, A.cols() + B.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < A.cols(); ++j) J(i, j) = A(i, j);
    for (int j = 0; j < B.cols(); ++j) J(i, A.cols() + j) = -B(i, j);
  }
  Matrix N = J.nullspace();
  Matrix Y(A.cols(), N.cols());
  for (int i = 0; i < A.cols(); ++i)
    for (int j = 0; j < N.cols(); ++j) Y(i, j) = N(i, j);
  Matrix S = A * Y;
  return S.colspace();
}

Subspace max_stable_coideal(const Coalgebra& C, const std::vector<Subspace>& kernels,
                            const std::vector<Matrix>& stabilizers) {
  int n = C.dim;
  // start from ker(counit)
  Matrix eps(1, n);
  for (int i = 0; i < n; ++i) eps(0, i) = C.counit[i];
  Subspace W = eps.nullspace();
  for (const auto& K : kernels) W = intersect(W, K);
  for (;;) {
    int r = W.cols();
    if (r == 0) return W;
    // rows of P annihilate W
    Matrix P = W.transpose().nullspace().transpose();
    int m = P.rows();
    std::vector<std::vector<RF>> rows;
    // (pi (x) pi) Delta(x) = 0
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        std::vector<RF> row(n);
        bool any = false;
        for (int i = 0; i < n; ++i)
          for (const auto& t : C.delta[i]) {
            if (P(a, t.j).is_zero() || P(b, t.k).is_zero()) continue;
            row[i] += t.c * P(a, t.j) * P(b, t.k);
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
    for (const auto& T : stabilizers) {
      Matrix PT = P * T;
      for (int a = 0; a < m; ++a) {
        std::vector<RF> row(n);
        for (int i = 0; i < n; ++i) row[i] = PT(a, i);
        rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) return W;
    Matrix M(int(rows.size()), n);
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (int i = 0; i < n; ++i) M(int(a), i) = rows[a][i];
    Matrix Ny = (M * W).nullspace();
    if (Ny.cols() == r) return W;
    W = (W * Ny).colspace();
  }
}

bool is_coalgebra_map(const Matrix& f, const Coalgebra& C, const Coalgebra& D) {
  for (int i = 0; i < C.dim; ++i) {
    Vec img = f.col(i);
    // counit
    if (evaluate(D.counit, img) != C.counit[i]) return false;
    Tensor lhs = coproduct(D, img);
    Tensor rhs;
    for (const auto& t : C.delta[i])
      for (int a = 0; a < D.dim; ++a) {
        if (f(a, t.j).is_zero()) continue;
        for (int b = 0; b < D.dim; ++b)
          if (!f(b, t.k).is_zero()) add_to(rhs, {a, b}, t.c * f(a, t.j) * f(b, t.k));
      }
    if (lhs != rhs) return false;
  }
  return true;
}

std::string serialize(const Coalgebra& C) {
  std::ostringstream os;
  os << "coalgebra dim=" << C.dim << "\n";
  for (int i = 0; i < C.dim; ++i)
    if (i < int(C.labels.size()) && !C.labels[i].empty())
      os << "label " << i + 1 << " " << C.labels[i] << "\n";
  for (int i = 0; i < C.dim; ++i)
    for (const auto& t : C.delta[i])
      os << "delta " << i + 1 << " " << t.j + 1 << " " << t.k + 1 << " " << t.c.str() << "\n";
  for (int i = 0; i < C.dim; ++i)
    if (!C.counit[i].is_zero()) os << "counit " << i + 1 << " " << C.counit[i].str() << "\n";
  return os.str();
}

Coalgebra parse_coalgebra(const std::string& text, std::vector<std::pair<int, std::string>>* rest) {
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  Coalgebra C;
  bool have_header = false;
  auto index = [&](std::istringstream& ls, const char* what) {
    int i;
    if (!(ls >> i)) throw ParseError(ln, std::string("expected ") + what + " index");
    if (i < 1 || i > C.dim) throw ParseError(ln, std::string(what) + " index out of range");
    return i - 1;
  };
  auto scalar = [&](std::istringstream& ls) {
    std::string s;
    std::getline(ls, s);
    try {
      return parse_scalar(s);
    } catch (const MalformedScalar& e) {
      throw ParseError(ln, e.what());
    }
  };
  while (std::getline(in, line)) {
    ++ln;
    auto h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (!have_header) {
      std::string d;
      if (kw != "coalgebra" || !(ls >> d) || d.rfind("dim=", 0) != 0)
        throw ParseError(ln, "expected 'coalgebra dim=<n>'");
      try {
        C.dim = std::stoi(d.substr(4));
      } catch (...) {
        throw ParseError(ln, "bad dimension");
      }
      if (C.dim < 0) throw ParseError(ln, "bad dimension");
      C.delta.assign(C.dim, {});
      C.counit.assign(C.dim, RF(0));
      C.labels.assign(C.dim, "");
      have_header = true;
      continue;
    }
    if (kw == "delta") {
      int i = index(ls, "delta"), j = index(ls, "delta"), k = index(ls, "delta");
      RF v = scalar(ls);
      if (!v.is_zero()) C.delta[i].push_back({j, k, v});
    } else if (kw == "counit") {
      int i = index(ls, "counit");
      C.counit[i] = scalar(ls);
    } else if (kw == "label") {
      int i = index(ls, "label");
      std::string name;
      if (!(ls >> name)) throw ParseError(ln, "expected label name");
      C.labels[i] = name;
    } else if (rest) {
      rest->push_back({ln, line});
    } else {
      throw ParseError(ln, "unknown directive '" + kw + "'");
    }
  }
  if (!have_header) throw ParseError(ln, "missing coalgebra header");
  return C;
}

}  // namespace qcoalg
