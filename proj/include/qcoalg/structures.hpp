// structures.hpp - bilinear forms, oriented quantum (co)algebras, builders
#pragma once

#include "qcoalg/coalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcoalg {

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;  // at most kMaxWitnesses
};

struct Report {
  std::vector<AxiomResult> items;
  bool ok() const;
  bool passed(const std::string& name) const;
  const AxiomResult* find(const std::string& name) const;
  std::string str() const;
  void merge(const Report& o, const std::string& prefix = "");
};

constexpr int kMaxWitnesses = 8;

struct AxiomViolation : std::runtime_error {
  Report report;
  AxiomViolation(const std::string& what, Report r)
      : std::runtime_error(what + "\n" + r.str()), report(std::move(r)) {}
};

// ---------------------------------------------------------------- forms

// (b1 * b2)(c, d) = b1(c_(1), d_(1)) b2(c_(2), d_(2))
Matrix convolve(const Coalgebra& C, const Matrix& b1, const Matrix& b2);
Matrix counit_form(const Coalgebra& C);
std::optional<Matrix> convolution_inverse(const Coalgebra& C, const Matrix& b);
bool is_convolution_inverse(const Coalgebra& C, const Matrix& b, const Matrix& binv);
// b^w, w < 0 through binv, w = 0 gives counit (x) counit
Matrix convolution_power(const Coalgebra& C, const Matrix& b, const Matrix& binv, int w);

// ------------------------------------------------------- coalgebra side

struct OQC {
  Coalgebra C;
  Matrix b;
  Matrix b_inv;
  Matrix Td, Tu;
  bool strict = true;
};

struct QC {
  Coalgebra C;
  Matrix b;
  Matrix b_inv;
  Matrix S;
  bool strict = true;
};

struct TwistOQC {
  OQC base;
  Vec G, G_inv;
};

// Builds the inverse of b or throws InvalidParameter.
Matrix require_inverse(const Coalgebra& C, const Matrix& b);
OQC make_oqc(Coalgebra C, Matrix b, Matrix Td, Matrix Tu, bool strict = true);
QC make_qc(Coalgebra C, Matrix b, Matrix S, bool strict = true);
TwistOQC make_twist(OQC base, Vec G);

Report check_oqc(const OQC& S);
Report check_qc(const QC& S);
Report check_twist(const TwistOQC& S);

// Is T an automorphism of C with respect to the given forms?
bool is_automorphism_wrt(const Coalgebra& C, const Matrix& T, const std::vector<Matrix>& forms,
                         std::string* witness = nullptr);
// Matrix of c |-> Ginv -> c <- G.
Matrix twist_conjugation(const Coalgebra& C, const Vec& G, const Vec& Ginv);

TwistOQC trivial_structure(const RF& beta);
QC jones_quantum();
TwistOQC jones_structure();

struct HomflyParams {
  int n = 2;
  RF bc, x;
  Matrix rho;  // n^2 x n^2 grid, rho((i,j),(l,m)) = rho^{il}_{jm}
  std::vector<RF> omega;
};
// The HOMFLY specialization table: diagonal entries d, off-diagonal
// rho^{ij}_{ij} = off, x = d - bc/d.
HomflyParams homfly_specialization(int n, std::optional<RF> off = std::nullopt,
                                   std::optional<std::vector<RF>> omega = std::nullopt);
// Throws InvalidParameter naming the violated clause.
void validate_homfly(const HomflyParams& p);
// omega_i^2 / omega_1^2 as prescribed by the closed-form product.
RF homfly_omega_square_ratio(const HomflyParams& p, int i);
TwistOQC homfly_structure(const HomflyParams& p);

OQC standardize(const OQC& S);
OQC from_quantum(const QC& S);

struct CoalgebraDouble {
  QC quantum;
  OQC oriented;
  Matrix iota;  // C -> C (+) C^cop
};
CoalgebraDouble double_coalgebra(const OQC& S);

OQC tensor_oqc(const OQC& S, const OQC& S2);

struct OppositeVariants {
  OQC cop, inv, op;
};
OppositeVariants opposite_variants(const OQC& S);

struct Quotient {
  OQC structure;
  Matrix projection;  // dim(C/I) x dim(C)
  Subspace ideal;
};
Quotient minimal_quotient(const OQC& S);

bool is_oqc_morphism(const Matrix& f, const OQC& S, const OQC& S2, std::string* why = nullptr);
bool is_qc_morphism(const Matrix& f, const QC& S, const QC& S2, std::string* why = nullptr);

Report automorphism_group_closure_check(const Coalgebra& C, const std::vector<Matrix>& forms,
                                        const std::vector<Matrix>& maps, int window = 2);

// --------------------------------------------------------- algebra side

struct Algebra {
  int dim = 0;
  // mult[a][b] lists (c, coefficient) with x_a x_b = sum coefficient x_c
  std::vector<std::vector<std::vector<std::pair<int, RF>>>> mult;
  Vec unit;
  std::vector<std::string> labels;

  Vec mul(const Vec& x, const Vec& y) const;
};

Algebra matrix_algebra(int n);
Algebra opposite_algebra(const Algebra& A);
Algebra direct_product(const Algebra& A, const Algebra& B);
Coalgebra dual_coalgebra(const Algebra& A);

// Elements of A (x) A are dim x dim grids of coefficients.
Matrix tensor_mul(const Algebra& A, const Matrix& X, const Matrix& Y, bool op_second = false);
Matrix tensor_unit(const Algebra& A);
// (f (x) g)(X)
Matrix tensor_map(const Matrix& X, const Matrix& f, const Matrix& g);
std::optional<Matrix> tensor_inverse(const Algebra& A, const Matrix& X);

bool is_algebra_automorphism(const Algebra& A, const Matrix& t, bool anti = false);

struct QA {
  Algebra A;
  Matrix rho;
  Matrix rho_inv;
  Matrix s;
};

struct OQA {
  Algebra A;
  Matrix rho;
  Matrix rho_inv;
  Matrix td, tu;
};

Report check_qa(const QA& S);
Report check_oqa(const OQA& S);

QA make_qa(Algebra A, Matrix rho, Matrix s);
OQA make_oqa(Algebra A, Matrix rho, Matrix td, Matrix tu);

QA jones_algebra();
// (A, rho, 1, s^-2)
OQA oriented_from_quantum_algebra(const QA& S);
OQA homfly_algebra(const HomflyParams& p);

OQC dual_oqc(const OQA& A);
QC dual_qc(const QA& A);

struct AlgebraDouble {
  QA quantum;
  OQA oriented;
  Matrix pi;  // A (+) A^op -> A
};
AlgebraDouble double_algebra(const OQA& S);

bool is_oqa_morphism(const Matrix& f, const OQA& S, const OQA& S2, std::string* why = nullptr);
bool is_qa_morphism(const Matrix& f, const QA& S, const QA& S2, std::string* why = nullptr);

// Structure text format: a coalgebra block followed by b/Td/Tu/G lines.
std::string serialize(const OQC& S, const Vec* G = nullptr);
struct LoadedStructure {
  OQC oqc;
  std::optional<Vec> G;
};
LoadedStructure parse_structure(const std::string& text);

// Named structures: "jones", "homfly:n=<n>[,off=<s>][,w1=<s>]", "trivial:beta=<s>".
struct Preset {
  std::string name;
  OQC oqc;
  std::optional<Vec> G;
  std::optional<QC> quantum;  // quantum-coalgebra face when there is one
};
Preset load_preset(const std::string& spec);

}  // namespace qcoalg
