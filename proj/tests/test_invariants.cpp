#include "doctest.h"
#include "formula.hpp"
#include "qcoalg/invariants.hpp"
#include "random_tangles.hpp"

using namespace qcoalg;
using namespace qcoalg::testing;

namespace {

RF q(int e) { return RF::q(e); }

std::vector<RF> basis_values(const OQC& S, int slots, const std::vector<Factor>& fs) {
  std::vector<RF> out;
  for (int a = 0; a < S.C.dim; ++a) out.push_back(evaluate_formula(S, {basis_vector(S.C.dim, a)}, {slots}, fs));
  return out;
}

OQC two_grouplikes() {
  Coalgebra C = direct_sum(comatrix(1), comatrix(1));
  Matrix b(2, 2);
  b(0, 0) = q(1);
  b(0, 1) = q(2);
  b(1, 0) = q(-1);
  b(1, 1) = RF(3);
  return make_oqc(C, b, Matrix::identity(2), Matrix::identity(2));
}

}  // namespace

TEST_CASE("tangle invariant on small diagrams") {
  auto J = jones_structure();
  const OQC& S = J.base;
  CHECK(inv_tangle(S, builtin("strand")) == S.C.counit);
  CHECK(inv_tangle(S, reverse(builtin("strand"))) == S.C.counit);
  // curl: b(c1, TdTu c2)
  CHECK(inv_tangle(S, builtin("curl")) == basis_values(S, 2, {{false, {0, 1}, {0, 2, 1, 1}}}));
  CHECK(inv_tangle(S, builtin("curl")) == Vec{q(-5), RF(0), RF(0), q(-1)});
  CHECK(inv_tangle(S, builtin("curl-op")) == basis_values(S, 2, {{false, {0, 2}, {0, 1, 1, 1}}}));
  // trefoil
  auto tref = basis_values(S, 6, {{false, {0, 4}, {0, 1, 1, 1}}, {false, {0, 2, 1, 1}, {0, 5}}, {false, {0, 6, -1, 0}, {0, 3, 0, 1}}});
  CHECK(inv_tangle(S, builtin("trefoil-tangle")) == tref);
  CHECK(tref == Vec{q(-3) + q(5) - q(9), RF(0), RF(0), q(-7) + q(1) - q(5)});
}

TEST_CASE("tangle invariant agrees with the contraction oracle") {
  for (const auto& S : {jones_structure().base, homfly_structure(homfly_specialization(3)).base}) {
    for (std::uint64_t s = 0; s < 12; ++s) {
      Diagram T = random_tangle(s, s % 2 == 0, 8);
      CHECK(inv_tangle(S, T, false) == oracle_tangle(S, T));
    }
  }
}

TEST_CASE("knot and link values") {
  auto J = jones_structure();
  Vec tr = trace_element(2);
  CHECK(inv_link(J, tr, builtin("circle")) == q(-2) + q(2));
  CHECK(inv_knot(J, tr, builtin("circle")) == evaluate(twist_power(J, 1), tr));
  CHECK(inv_knot(J, tr, builtin("strand")) == q(-2) + q(2));
  CHECK(inv_link(J, tr, builtin("unlink")) == (q(-2) + q(2)) * (q(-2) + q(2)));
  RF t = inv_knot(J, tr, builtin("trefoil"));
  CHECK(t == q(-7) + q(-3) + q(1) - q(9));
  CHECK(inv_knot(J, tr, builtin("trefoil-tangle")) == t);
  CHECK(inv_knot(J, tr, builtin("trefoil-mirror")) != t);
  CHECK(inv_knot(J, tr, builtin("figure-eight")) == q(-10) + q(10));
  CHECK(inv_link(J, tr, builtin("hopf")) == q(-6) + q(-2) + q(2) + q(6));
  CHECK_THROWS_AS(inv_knot(J, tr, builtin("hopf")), DiagramError);
}

TEST_CASE("hopf link matches the two-factor display") {
  auto J = jones_structure();
  Vec tr = trace_element(2);
  Vec d = hit_right(J.base.C, tr, twist_power(J, -1));
  Vec e = hit_right(J.base.C, tr, twist_power(J, 1));
  RF want = evaluate_formula(J.base, {d, e}, {2, 2}, {{false, {0, 1}, {1, 1}}, {false, {1, 2}, {0, 2}}});
  CHECK(inv_link(J, tr, builtin("hopf")) == want);
}

TEST_CASE("oracle equivalence on builtins") {
  auto J = jones_structure();
  auto H = homfly_structure(homfly_specialization(3));
  for (const auto& [name, src] : builtin_sources()) {
    Diagram D = builtin(name);
    if (D.kind == DiagramKind::tangle) {
      CHECK_MESSAGE(inv_knot(J, trace_element(2), D) == oracle_contract(J, trace_element(2), D), name);
      continue;
    }
    CHECK_MESSAGE(inv_link(J, trace_element(2), D) == oracle_contract(J, trace_element(2), D), name);
    CHECK_MESSAGE(inv_link(H, trace_element(3), D, {}, false) == oracle_contract(H, trace_element(3), D), name);
  }
  // multiples of the trace
  Vec t3 = trace_element(2);
  for (auto& x : t3) x *= RF(3);
  CHECK(inv_link(J, t3, builtin("hopf")) == oracle_contract(J, t3, builtin("hopf")));
}

TEST_CASE("regular isotopy invariance under perturbation") {
  auto J = jones_structure();
  Vec tr = trace_element(2);
  for (const auto& name : {"trefoil", "figure-eight", "hopf", "borromean"}) {
    Diagram D = builtin(name);
    RF ref = inv_link(J, tr, D);
    for (int s = 0; s < 8; ++s) {
      Diagram E = perturb(D, s, 10);
      CHECK_MESSAGE(inv_link(J, tr, E, {}, false) == ref, render(E));
    }
  }
  for (const auto& name : {"curl", "curl-op", "trefoil-tangle"}) {
    Diagram D = builtin(name);
    Vec ref = inv_tangle(J.base, D);
    for (int s = 0; s < 8; ++s) CHECK(inv_tangle(J.base, perturb(D, s, 10), false) == ref);
  }
}

TEST_CASE("star multiplicativity") {
  auto J = jones_structure();
  const OQC& S = J.base;
  for (std::uint64_t s = 0; s < 10; ++s) {
    bool up = s % 3 != 0;
    Diagram A = random_tangle(2 * s, up, 4), B = random_tangle(2 * s + 1, up, 4);
    CHECK(inv_tangle(S, star(A, B), false) == dual_product(S.C, inv_tangle(S, A, false), inv_tangle(S, B, false)));
  }
}

TEST_CASE("orientation reversal is the opposite coalgebra") {
  auto J = jones_structure();
  auto V = opposite_variants(J.base);
  for (const auto& name : {"curl", "curl-op", "trefoil-tangle", "strand"}) {
    Diagram T = builtin(name);
    CHECK_MESSAGE(inv_tangle(J.base, reverse(T)) == inv_tangle(V.cop, T), name);
  }
  // knots: the opposite coalgebra carries the inverse twist
  TwistOQC Jc = make_twist(V.cop, J.G_inv);
  REQUIRE(check_twist(Jc).ok());
  Vec tr = trace_element(2);
  for (const auto& name : {"trefoil", "figure-eight", "trefoil-tangle", "curl"}) {
    Diagram K = builtin(name);
    CHECK_MESSAGE(inv_knot(J, tr, reverse(K)) == inv_knot(Jc, tr, K), name);
  }
}

TEST_CASE("standardization neutrality on upright tangles") {
  auto J = jones_structure();
  std::vector<OQC> structures = {J.base, from_quantum(jones_quantum()), opposite_variants(J.base).op};
  for (const auto& S : structures) {
    OQC Sd = standardize(S);
    CHECK(inv_tangle(S, builtin("curl")) == inv_tangle(Sd, builtin("curl")));
    for (std::uint64_t s = 0; s < 8; ++s) {
      Diagram T = star(random_upright_tangle(s), random_upright_tangle(s + 100));
      CHECK(inv_tangle(S, T) == inv_tangle(Sd, T));
    }
  }
}

TEST_CASE("cocommutative collapse") {
  auto triv = trivial_structure(q(1));
  Vec g = basis_vector(1, 0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Diagram T = random_tangle(s, s % 2 == 0, 6);
    int w = writhe(T);
    RF want = q(w);
    CHECK(inv_tangle(triv.base, T, false)[0] == want);
    CHECK(cocommutative_fast(triv.base, g, T) == want);
  }
  OQC G2 = two_grouplikes();
  REQUIRE(check_oqc(G2).ok());
  for (std::uint64_t s = 0; s < 10; ++s) {
    Diagram T = random_tangle(s + 50, true, 6);
    Vec f = inv_tangle(G2, T, false);
    for (int a = 0; a < 2; ++a) CHECK(f[a] == cocommutative_fast(G2, basis_vector(2, a), T));
  }
  // equal writhe, equal invariant
  CHECK(inv_tangle(G2, star(builtin("curl"), mirror(builtin("curl")))) == inv_tangle(G2, builtin("strand")));
  CHECK(cocommutative_fast(G2, basis_vector(2, 1), builtin("strand")) == RF(1));
  CHECK_THROWS_AS(cocommutative_fast(jones_structure().base, trace_element(2), builtin("curl")),
                  PreconditionViolation);
}

TEST_CASE("starting points do not matter") {
  auto J = jones_structure();
  Vec tr = trace_element(2);
  for (const auto& name : {"trefoil", "figure-eight", "trefoil-mirror"}) {
    Diagram K = builtin(name);
    RF ref = inv_knot(J, tr, K);
    int n = int(traverse(K).components[0].passages.size());
    for (int r = 0; r < n; ++r) CHECK(inv_knot(J, tr, K, {r}, false) == ref);
  }
  for (const auto& name : {"hopf", "borromean"}) {
    Diagram L = builtin(name);
    RF ref = inv_link(J, tr, L);
    Traversal t = traverse(L);
    for (std::size_t l = 0; l < t.components.size(); ++l)
      for (int r = 0; r < int(t.components[l].passages.size()); ++r) {
        std::vector<int> rot(t.components.size(), 0);
        rot[l] = r;
        CHECK(inv_link(J, tr, L, rot, false) == ref);
      }
  }
}

TEST_CASE("preconditions and axiom failures") {
  auto J = jones_structure();
  Vec e12 = basis_vector(4, cm(2, 0, 1));
  CHECK_THROWS_AS(inv_knot(J, e12, builtin("trefoil")), PreconditionViolation);
  CHECK_THROWS_AS(inv_link(J, Vec{RF(1)}, builtin("hopf")), PreconditionViolation);
  try {
    inv_knot(J, e12, builtin("trefoil"));
  } catch (const PreconditionViolation& e) {
    CHECK(std::string(e.what()).find("cocommutative") != std::string::npos);
  }
  TwistOQC bad = J;
  bad.base.b(0, 0) = RF(2);
  bad.base.b_inv = *convolution_inverse(bad.base.C, bad.base.b);
  CHECK_THROWS_AS(inv_tangle(bad.base, builtin("curl")), AxiomViolation);
  CHECK_THROWS_AS(inv_link(bad, trace_element(2), builtin("hopf")), AxiomViolation);
  // the oracle refuses elements it cannot represent
  Vec diag = trace_element(2);
  diag[cm(2, 0, 0)] = RF(2);
  CHECK_THROWS_AS(oracle_contract(J, diag, builtin("hopf")), PreconditionViolation);
}
