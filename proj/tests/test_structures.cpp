#include "doctest.h"
#include "qcoalg/structures.hpp"

using namespace qcoalg;

namespace {

RF q(int e) { return RF::q(e); }

Matrix diag_map(const std::vector<RF>& w) {
  int n = int(w.size());
  Matrix T(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T(cm(n, i, j), cm(n, i, j)) = w[i] / w[j];
  return T;
}

std::string failures(const Report& r) {
  std::string s;
  for (const auto& it : r.items)
    if (!it.pass) s += it.name + " ";
  return s;
}

}  // namespace

TEST_CASE("jones structure satisfies every axiom") {
  auto J = jones_structure();
  auto Q = jones_quantum();
  CHECK_MESSAGE(check_oqc(J.base).ok(), check_oqc(J.base).str());
  CHECK_MESSAGE(check_twist(J).ok(), check_twist(J).str());
  CHECK_MESSAGE(check_qc(Q).ok(), check_qc(Q).str());
  CHECK(J.base.b(cm(2, 0, 0), cm(2, 0, 0)) == q(-1));
  CHECK(J.base.b(cm(2, 0, 1), cm(2, 1, 0)) == q(-1) - q(3));
  CHECK(J.G[cm(2, 0, 0)] == q(2));
  CHECK(J.G[cm(2, 1, 1)] == q(-2));
}

TEST_CASE("jones operator relations") {
  auto J = jones_structure();
  auto Q = jones_quantum();
  const Matrix& T = J.base.Td;
  Matrix Si = *Q.S.inverse();
  CHECK(T * T == Si * Si);
  CHECK(Q.S * T == T * Q.S);
  CHECK(T * T == twist_conjugation(J.base.C, J.G, J.G_inv));
}

TEST_CASE("mutating one entry of the jones form breaks an axiom") {
  auto J = jones_structure();
  std::vector<std::pair<int, int>> spots{{0, 0}, {3, 3}, {0, 3}, {3, 0}, {1, 2}, {2, 1}, {0, 1}, {1, 1}};
  for (auto [i, j] : spots) {
    Matrix b = J.base.b;
    b(i, j) = b(i, j).is_zero() ? RF(1) : b(i, j) * RF(2);
    auto inv = convolution_inverse(J.base.C, b);
    REQUIRE(inv);
    OQC m{J.base.C, b, *inv, J.base.Td, J.base.Tu, true};
    Report r = check_oqc(m);
    CHECK_FALSE(r.ok());
    bool witnessed = false;
    for (const auto& it : r.items) witnessed |= !it.pass && !it.witnesses.empty();
    CHECK(witnessed);
  }
}

TEST_CASE("convolution inverse is unique and powers compose") {
  auto J = jones_structure();
  const auto& C = J.base.C;
  CHECK(is_convolution_inverse(C, J.base.b, J.base.b_inv));
  CHECK(*convolution_inverse(C, J.base.b_inv) == J.base.b);
  Matrix b2 = convolution_power(C, J.base.b, J.base.b_inv, 2);
  CHECK(b2 == convolve(C, J.base.b, J.base.b));
  CHECK(convolution_power(C, J.base.b, J.base.b_inv, -1) == J.base.b_inv);
  CHECK(convolution_power(C, J.base.b, J.base.b_inv, 0) == counit_form(C));
  CHECK(convolve(C, b2, convolution_power(C, J.base.b, J.base.b_inv, -2)) == counit_form(C));
}

TEST_CASE("homfly presets") {
  for (int n : {2, 3, 4}) {
    auto p = homfly_specialization(n);
    auto H = homfly_structure(p);
    CHECK_MESSAGE(check_oqc(H.base).ok(), n);
    CHECK_MESSAGE(check_twist(H).ok(), n);
  }
  auto H2 = homfly_structure(homfly_specialization(2));
  auto J = jones_structure();
  CHECK(H2.base.b == J.base.b);
  CHECK(H2.base.Td == J.base.Td);
  CHECK(H2.G == J.G);
}

TEST_CASE("homfly clause validation") {
  auto expect_clause = [](const HomflyParams& p, const std::string& tag) {
    try {
      validate_homfly(p);
      FAIL("accepted");
    } catch (const InvalidParameter& e) {
      CHECK_MESSAGE(std::string(e.what()).find(tag) != std::string::npos, e.what());
    }
  };
  // off-diagonal q^2 gives q^4 != bc
  expect_clause(homfly_specialization(2, q(2)), "d)");
  // omega ratio q^4 fails qc.1; the axioms force q^-4
  expect_clause(homfly_specialization(2, std::nullopt, std::vector<RF>{q(-1), -q(1)}), "omega");
  expect_clause(homfly_specialization(2, std::nullopt, std::vector<RF>{q(-1), q(2)}), "omega");
  CHECK_NOTHROW(validate_homfly(homfly_specialization(2, std::nullopt, std::vector<RF>{q(1), -q(-1)})));
  CHECK_NOTHROW(validate_homfly(homfly_specialization(2, std::nullopt, std::vector<RF>{q(-1), q(-3)})));

  auto p = homfly_specialization(2);
  p.rho(cm(2, 0, 0), cm(2, 0, 1)) = RF(1);
  expect_clause(p, "a)");
  p = homfly_specialization(2);
  p.rho(cm(2, 1, 0), cm(2, 0, 1)) = RF(1);
  expect_clause(p, "c)");
  p = homfly_specialization(3);
  p.rho(cm(3, 2, 2), cm(3, 2, 2)) = RF(5);
  CHECK_THROWS_AS(validate_homfly(p), InvalidParameter);
}

TEST_CASE("the printed jones omegas fail qc.1 against the jones form") {
  auto J = jones_structure();
  Matrix T = diag_map({q(-1), -q(1)});
  OQC bad{J.base.C, J.base.b, J.base.b_inv, T, T, true};
  Report r = check_oqc(bad);
  CHECK_FALSE(r.passed("qc.1a"));
  CHECK_FALSE(r.passed("qc.1b"));
  CHECK(r.passed("qc.2"));
  CHECK(r.passed("qc.3"));
}

TEST_CASE("algebra side and duality") {
  QA JA = jones_algebra();
  CHECK_MESSAGE(check_qa(JA).ok(), check_qa(JA).str());
  QC dq = dual_qc(JA);
  QC Q = jones_quantum();
  CHECK(dq.b == Q.b);
  CHECK(dq.S == Q.S);
  CHECK(dq.C == Q.C);

  for (int n : {2, 3}) {
    auto p = homfly_specialization(n);
    OQA A = homfly_algebra(p);
    CHECK(check_oqa(A).ok());
    OQC d = dual_oqc(A);
    auto H = homfly_structure(p);
    CHECK(d.C == H.base.C);
    CHECK(d.b == H.base.b);
    CHECK(d.b_inv == H.base.b_inv);
    CHECK(d.Td == H.base.Td);
    CHECK(d.Tu == H.base.Tu);
  }
}

TEST_CASE("tensor inverse in M2 (x) M2") {
  Algebra A = matrix_algebra(2);
  QA JA = jones_algebra();
  auto inv = tensor_inverse(A, JA.rho);
  REQUIRE(inv);
  CHECK(tensor_mul(A, *inv, JA.rho) == tensor_unit(A));
  CHECK((*inv)(cm(2, 0, 1), cm(2, 1, 0)) == q(1) - q(-3));
  Matrix zero(4, 4);
  CHECK_FALSE(tensor_inverse(A, zero));
}

TEST_CASE("double coalgebra") {
  auto J = jones_structure();
  auto D = double_coalgebra(J.base);
  CHECK_MESSAGE(check_qc(D.quantum).ok(), check_qc(D.quantum).str());
  CHECK_MESSAGE(check_oqc(D.oriented).ok(), check_oqc(D.oriented).str());
  std::string why;
  CHECK_MESSAGE(is_oqc_morphism(D.iota, J.base, D.oriented, &why), why);
  Matrix Si = *D.quantum.S.inverse();
  CHECK(D.oriented.Td * D.oriented.Tu == Si * Si);
}

TEST_CASE("double algebra and its universal map") {
  QA JA = jones_algebra();
  OQA OA = oriented_from_quantum_algebra(JA);
  CHECK(check_oqa(OA).ok());
  auto D = double_algebra(OA);
  CHECK_MESSAGE(check_qa(D.quantum).ok(), check_qa(D.quantum).str());
  CHECK_MESSAGE(check_oqa(D.oriented).ok(), check_oqa(D.oriented).str());
  std::string why;
  CHECK_MESSAGE(is_oqa_morphism(D.pi, D.oriented, OA, &why), why);
  Matrix si = *D.quantum.s.inverse();
  CHECK(D.oriented.td * D.oriented.tu == si * si);

  // F(x) = x (+) s(x) for the quantum algebra itself
  int n = JA.A.dim;
  Matrix F(2 * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      F(i, j) = i == j ? RF(1) : RF(0);
      F(n + i, j) = JA.s(i, j);
    }
  CHECK_MESSAGE(is_qa_morphism(F, JA, D.quantum, &why), why);
  CHECK_MESSAGE(is_oqa_morphism(F, OA, D.oriented, &why), why);
  CHECK(D.pi * F == Matrix::identity(n));
}

TEST_CASE("derived oriented structures") {
  auto J = jones_structure();
  auto Q = jones_quantum();
  CHECK(check_oqc(standardize(J.base)).ok());
  CHECK(check_oqc(from_quantum(Q)).ok());
  CHECK(from_quantum(Q).Tu == J.base.Td * J.base.Tu);
  auto Tn = tensor_oqc(J.base, J.base);
  CHECK_MESSAGE(check_oqc(Tn).ok(), failures(check_oqc(Tn)));
  auto V = opposite_variants(J.base);
  CHECK(check_oqc(V.cop).ok());
  CHECK(check_oqc(V.inv).ok());
  CHECK(check_oqc(V.op).ok());
  CHECK(V.op.b == J.base.b.transpose());
  auto Sd = standardize(J.base);
  auto W = opposite_variants(Sd);
  CHECK(check_oqc(W.cop).ok());
  CHECK(check_oqc(W.inv).ok());
  CHECK(check_oqc(W.op).ok());
  CHECK(opposite_variants(W.inv).inv.b == Sd.b);
  CHECK(opposite_variants(W.inv).inv.Tu == Sd.Tu);
  auto mq = minimal_quotient(J.base);
  CHECK(mq.projection == Matrix::identity(4));
  CHECK(mq.ideal.cols() == 0);
}

TEST_CASE("minimal quotient collapses a degenerate form") {
  // two grouplikes with a constant form: the radical is spanned by g1 - g2
  Coalgebra C = direct_sum(comatrix(1), comatrix(1));
  Matrix b(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b(i, j) = q(1);
  auto S = make_oqc(C, b, Matrix::identity(2), Matrix::identity(2));
  REQUIRE(check_oqc(S).ok());
  auto mq = minimal_quotient(S);
  CHECK(mq.projection.rows() == 1);
  CHECK(mq.ideal.cols() == 1);
  CHECK(mq.structure.b(0, 0) == q(1));
  CHECK(check_oqc(mq.structure).ok());
  // the quotient has nothing left to collapse
  CHECK(minimal_quotient(mq.structure).ideal.cols() == 0);
}

TEST_CASE("minimal quotient of the counit form is one dimensional") {
  Coalgebra C = comatrix(2);
  auto S = make_oqc(C, counit_form(C), Matrix::identity(4), Matrix::identity(4));
  REQUIRE(check_oqc(S).ok());
  auto mq = minimal_quotient(S);
  CHECK(mq.ideal.cols() == 3);
  CHECK(mq.structure.C.dim == 1);
  CHECK(check_oqc(mq.structure).ok());
}

TEST_CASE("automorphism closure window") {
  auto J = jones_structure();
  auto Q = jones_quantum();
  Report r = automorphism_group_closure_check(J.base.C, {J.base.b, J.base.b_inv}, {J.base.Td, Q.S * Q.S});
  CHECK_MESSAGE(r.ok(), r.str());
  Matrix bad = Matrix::identity(4);
  bad(0, 0) = RF(2);
  Report r2 = automorphism_group_closure_check(J.base.C, {J.base.b, J.base.b_inv}, {bad});
  CHECK_FALSE(r2.passed("precondition"));
}

TEST_CASE("structure text round trip and presets") {
  auto J = jones_structure();
  std::string text = serialize(J.base, &J.G);
  auto L = parse_structure(text);
  CHECK(L.oqc.b == J.base.b);
  CHECK(L.oqc.Td == J.base.Td);
  CHECK(L.oqc.Tu == J.base.Tu);
  REQUIRE(L.G);
  CHECK(*L.G == J.G);
  CHECK(serialize(L.oqc, &*L.G) == text);

  CHECK_THROWS_AS(parse_structure("coalgebra dim=1\ndelta 1 1 1 1\ncounit 1 1\nb 1 1 q +\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("coalgebra dim=1\nbogus 1\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("coalgebra dim=1\ndelta 1 1 1 1\ncounit 1 1\nb 2 1 q\n"), ParseError);

  auto p = load_preset("jones");
  CHECK(p.quantum);
  CHECK(p.oqc.b == J.base.b);
  CHECK(check_oqc(load_preset("homfly:n=3").oqc).ok());
  auto t = load_preset("trivial:beta=q");
  CHECK(t.oqc.b(0, 0) == q(1));
  CHECK(check_twist(TwistOQC{t.oqc, *t.G, *t.G}).ok());
  auto w = load_preset("homfly:n=2,w1=q^3");
  CHECK(w.oqc.Td == J.base.Td);
  CHECK_THROWS_AS(load_preset("homfly:n=2,off=q^2"), InvalidParameter);
  CHECK_THROWS_AS(load_preset("nonesuch"), InvalidParameter);
  CHECK_THROWS_AS(load_preset("jones:x=1"), InvalidParameter);
}
