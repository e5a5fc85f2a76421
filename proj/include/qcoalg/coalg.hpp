// coalg.hpp - finite-dimensional coalgebras by structure constants
#pragma once

#include "qcoalg/exactnum.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcoalg {

using Vec = std::vector<RF>;  // element or functional, coordinates on the basis

struct CoproductTerm {
  int j, k;
  RF c;
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Coalgebra {
  int dim = 0;
  // delta[i] lists the nonzero d_i^{jk}: Delta(e_i) = sum d_i^{jk} e_j (x) e_k
  std::vector<std::vector<CoproductTerm>> delta;
  Vec counit;
  std::vector<std::string> labels;

  std::string label(int i) const;
  int index_of(const std::string& label) const;  // -1 when absent
  bool operator==(const Coalgebra& o) const;

  // exhaustive checks on basis elements
  bool is_coassociative() const;
  bool satisfies_counit() const;
};

// Rank-m sparse tensor keyed by basis index tuples.
using Tensor = std::map<std::vector<int>, RF>;

Coalgebra comatrix(int n);
// index of e^i_j (0-based i, j) in comatrix(n)
inline int cm(int n, int i, int j) { return i * n + j; }

Tensor coproduct(const Coalgebra& C, const Vec& c);
Tensor iterated_coproduct(const Coalgebra& C, const Vec& c, int m);
Vec basis_vector(int dim, int i);

RF evaluate(const Vec& f, const Vec& c);
Vec dual_product(const Coalgebra& C, const Vec& f, const Vec& g);
Vec dual_unit(const Coalgebra& C);
// f -> c = c_(1) f(c_(2));  c <- f = f(c_(1)) c_(2)
Vec hit_left(const Coalgebra& C, const Vec& f, const Vec& c);
Vec hit_right(const Coalgebra& C, const Vec& c, const Vec& f);
// matrices of c |-> f -> c and c |-> c <- f
Matrix hit_left_matrix(const Coalgebra& C, const Vec& f);
Matrix hit_right_matrix(const Coalgebra& C, const Vec& f);

Coalgebra opposite(const Coalgebra& C);
bool is_cocommutative_element(const Coalgebra& C, const Vec& c);
bool is_cocommutative(const Coalgebra& C);
Coalgebra direct_sum(const Coalgebra& C, const Coalgebra& D);
// basis e_i (x) f_j has index i * D.dim + j
Coalgebra tensor_coalgebra(const Coalgebra& C, const Coalgebra& D);

// Columns span the subspace.
using Subspace = Matrix;

Subspace intersect(const Subspace& A, const Subspace& B);
// Largest coideal inside every kernel and ker(counit), stable under each map.
Subspace max_stable_coideal(const Coalgebra& C, const std::vector<Subspace>& kernels,
                            const std::vector<Matrix>& stabilizers);
// Is f a coalgebra map C -> D (f given as D.dim x C.dim)?
bool is_coalgebra_map(const Matrix& f, const Coalgebra& C, const Coalgebra& D);

std::string serialize(const Coalgebra& C);
// Parses the text block; unknown directives are left to the caller via
// the rest vector (line number, line).
Coalgebra parse_coalgebra(const std::string& text,
                          std::vector<std::pair<int, std::string>>* rest = nullptr);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int l, const std::string& m)
      : std::runtime_error("line " + std::to_string(l) + ": " + m), line(l) {}
};

}  // namespace qcoalg
