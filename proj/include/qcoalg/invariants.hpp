// invariants.hpp - tangle, knot and link invariants from oriented quantum coalgebras
#pragma once

#include "qcoalg/diagrams.hpp"
#include "qcoalg/structures.hpp"

namespace qcoalg {

struct PreconditionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sum of the diagonal basis elements of comatrix(n).
Vec trace_element(int n);
// G^d in the dual algebra; negative powers through G^-1.
Vec twist_power(const TwistOQC& S, int d);

// Throws PreconditionViolation naming the failed check.
void require_knot_element(const TwistOQC& S, const Vec& c);

// Inv_C(T) as coordinates on the basis. check runs check_oqc first.
Vec inv_tangle(const OQC& S, const Diagram& T, bool check = true);

// K is a tangle (closed on the right) or a one-component link.
RF inv_knot(const TwistOQC& S, const Vec& c, const Diagram& K, const std::vector<int>& rotations = {},
            bool check = true);
RF inv_link(const TwistOQC& S, const Vec& c, const Diagram& L, const std::vector<int>& rotations = {},
            bool check = true);

// b^w(c_(1), c_(2)) with w the writhe of T; needs a cocommutative carrier.
RF cocommutative_fast(const OQC& S, const Vec& c, const Diagram& T);

// Slice-by-slice contraction over comatrix indices. Needs a comatrix carrier
// whose Td, Tu and G are diagonal; c must be a multiple of the trace.
RF oracle_contract(const TwistOQC& S, const Vec& c, const Diagram& D);
// Tangle functional by the same contraction.
Vec oracle_tangle(const OQC& S, const Diagram& T);

}  // namespace qcoalg
