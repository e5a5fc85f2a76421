// invariants.cpp - coproduct-expansion engine and slice contraction oracle
#include "qcoalg/invariants.hpp"

#include <future>
#include <map>
#include <numeric>

namespace qcoalg {

Vec trace_element(int n) {
  Vec t(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) t[cm(n, i, i)] = RF(1);
  return t;
}

Vec twist_power(const TwistOQC& S, int d) {
  const Coalgebra& C = S.base.C;
  Vec r = dual_unit(C);
  const Vec& g = d < 0 ? S.G_inv : S.G;
  for (int k = 0; k < std::abs(d); ++k) r = dual_product(C, r, g);
  return r;
}

void require_knot_element(const TwistOQC& S, const Vec& c) {
  const Coalgebra& C = S.base.C;
  if (int(c.size()) != C.dim) throw PreconditionViolation("element has the wrong dimension");
  if (!is_cocommutative_element(C, c)) throw PreconditionViolation("element is not cocommutative");
  Vec tc = (S.base.Td * S.base.Tu).apply(c);
  if (tc != c) throw PreconditionViolation("element is not Td Tu-invariant");
}

namespace {

void require_oqc(const OQC& S) {
  Report r = check_oqc(S);
  if (!r.ok()) throw AxiomViolation("structure fails the oriented quantum coalgebra axioms", r);
}

void require_twist(const TwistOQC& S) {
  Report r = check_twist(S);
  if (!r.ok()) throw AxiomViolation("structure fails the twist axioms", r);
}

// Td^a Tu^b with negative powers through inverses.
class PowerCache {
 public:
  explicit PowerCache(const OQC& S) : S_(S) {}
  const Matrix& get(int a, int b) {
    auto key = std::pair{a, b};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Matrix m = S_.Td.pow(a) * S_.Tu.pow(b);
    return cache_.emplace(key, std::move(m)).first->second;
  }

 private:
  const OQC& S_;
  std::map<std::pair<int, int>, Matrix> cache_;
};

// M[x][y] = form(P e_x, Q e_y) = (P^t B Q)[x][y]
Matrix decorated_form(const Matrix& B, const Matrix& P, const Matrix& Q) {
  return P.transpose() * B * Q;
}

struct Slot {
  int partner;   // global slot id of the other line at the crossing
  int crossing;  // index into Problem::mats
  bool over;
};

struct Problem {
  const Coalgebra* C = nullptr;
  std::vector<Vec> elements;            // per component
  std::vector<std::vector<int>> order;  // per component: slot ids in traversal order
  std::vector<Slot> slots;
  std::vector<Matrix> mats;  // per crossing, rows over basis, cols under basis
};

Problem build_problem(const OQC& S, const Traversal& T) {
  Problem P;
  P.C = &S.C;
  PowerCache pc(S);
  P.slots.resize(T.labels.size());
  for (std::size_t x = 0; x < T.crossings.size(); ++x) {
    const CrossingInfo& X = T.crossings[x];
    const CrossingRule& rule = crossing_rules()[X.rule - 1];
    const LabelInfo& o = T.labels[X.over_label];
    const LabelInfo& u = T.labels[X.under_label];
    int oa = o.ud + (rule.shift == Shift::over_d), ob = o.uu + (rule.shift == Shift::over_u);
    int ua = u.ud + (rule.shift == Shift::under_d), ub = u.uu + (rule.shift == Shift::under_u);
    const Matrix& B = rule.inverse ? S.b_inv : S.b;
    P.mats.push_back(decorated_form(B, pc.get(oa, ob), pc.get(ua, ub)));
    P.slots[X.over_label] = {X.under_label, int(x), true};
    P.slots[X.under_label] = {X.over_label, int(x), false};
  }
  for (const auto& comp : T.components) P.order.push_back(comp.labels);
  return P;
}

// Expands the iterated coproduct of each component element slot by slot;
// a crossing factor is multiplied in as soon as both of its lines are
// assigned. States are keyed by the current tail and the open slot values.
RF contract(const Problem& P) {
  const Coalgebra& C = *P.C;
  using Key = std::vector<int>;
  std::map<Key, RF> states;
  states[{}] = RF(1);
  std::vector<int> open;  // slot ids with assigned value and unassigned partner
  std::vector<char> done(P.slots.size(), 0);
  for (std::size_t l = 0; l < P.order.size(); ++l) {
    const Vec& x = P.elements[l];
    const auto& ord = P.order[l];
    if (ord.empty()) {
      RF e = evaluate(C.counit, x);
      if (e.is_zero()) return RF(0);
      for (auto& [k, v] : states) v *= e;
      continue;
    }
    // key layout during a component: [tail, open values...]
    std::map<Key, RF> next;
    for (const auto& [k, v] : states)
      for (int i = 0; i < C.dim; ++i) {
        if (x[i].is_zero()) continue;
        Key nk;
        nk.reserve(k.size() + 1);
        nk.push_back(i);
        nk.insert(nk.end(), k.begin(), k.end());
        next[nk] += v * x[i];
      }
    states.swap(next);
    for (std::size_t j = 0; j < ord.size(); ++j) {
      const int s = ord[j];
      const Slot& sl = P.slots[s];
      const bool last = j + 1 == ord.size();
      int pidx = -1;
      if (done[sl.partner]) pidx = int(std::find(open.begin(), open.end(), sl.partner) - open.begin());
      const Matrix& M = P.mats[sl.crossing];
      next.clear();
      auto emit = [&](const Key& k, int a, int tail, const RF& w) {
        Key nk;
        nk.reserve(k.size() + 1);
        if (!last) nk.push_back(tail);
        RF f = w;
        if (pidx >= 0) {
          int b = k[1 + pidx];
          const RF& m = sl.over ? M(a, b) : M(b, a);
          if (m.is_zero()) return;
          f *= m;
          for (std::size_t t = 1; t < k.size(); ++t)
            if (int(t) != 1 + pidx) nk.push_back(k[t]);
        } else {
          nk.insert(nk.end(), k.begin() + 1, k.end());
          nk.push_back(a);
        }
        next[nk] += f;
      };
      for (const auto& [k, v] : states) {
        if (v.is_zero()) continue;
        int t = k[0];
        if (last) emit(k, t, -1, v);
        else
          for (const auto& term : C.delta[t]) emit(k, term.j, term.k, v * term.c);
      }
      done[s] = 1;
      if (pidx >= 0) open.erase(open.begin() + pidx);
      else open.push_back(s);
      states.swap(next);
    }
    // after the last slot the tail is gone and keys hold open values only
  }
  RF total(0);
  for (const auto& [k, v] : states) total += v;
  return total;
}

}  // namespace

Vec inv_tangle(const OQC& S, const Diagram& T, bool check) {
  if (T.kind != DiagramKind::tangle) throw DiagramError("inv_tangle needs a tangle diagram");
  if (check) require_oqc(S);
  Traversal tr = traverse(T);
  Problem base = build_problem(S, tr);
  const int dim = S.C.dim;
  std::vector<std::future<RF>> parts;
  for (int a = 0; a < dim; ++a)
    parts.push_back(std::async(std::launch::async, [&base, a, dim] {
      Problem P = base;
      P.elements = {basis_vector(dim, a)};
      return contract(P);
    }));
  Vec out(dim);
  for (int a = 0; a < dim; ++a) out[a] = parts[a].get();
  return out;
}

RF inv_link(const TwistOQC& S, const Vec& c, const Diagram& L, const std::vector<int>& rotations,
            bool check) {
  if (L.kind != DiagramKind::link) throw DiagramError("inv_link needs a link diagram");
  if (check) require_twist(S);
  require_knot_element(S, c);
  Traversal tr = traverse(L, rotations);
  Problem P = build_problem(S.base, tr);
  for (const auto& comp : tr.components)
    P.elements.push_back(hit_right(S.base.C, c, twist_power(S, comp.whitney())));
  return contract(P);
}

RF inv_knot(const TwistOQC& S, const Vec& c, const Diagram& K, const std::vector<int>& rotations,
            bool check) {
  if (K.kind == DiagramKind::link) {
    validate(K);
    if (traverse(K).components.size() != 1)
      throw DiagramError("inv_knot needs a one-component diagram");
    return inv_link(S, c, K, rotations, check);
  }
  if (check) require_twist(S);
  require_knot_element(S, c);
  int d = whitney_degrees(closure(K))[0];
  Vec f = inv_tangle(S.base, K, false);
  return evaluate(f, hit_right(S.base.C, c, twist_power(S, d)));
}

RF cocommutative_fast(const OQC& S, const Vec& c, const Diagram& T) {
  if (!is_cocommutative(S.C)) throw PreconditionViolation("carrier coalgebra is not cocommutative");
  Matrix bw = convolution_power(S.C, S.b, S.b_inv, writhe(T));
  RF out(0);
  for (int i = 0; i < S.C.dim; ++i) {
    if (c[i].is_zero()) continue;
    for (const auto& t : S.C.delta[i]) out += c[i] * t.c * bw(t.j, t.k);
  }
  return out;
}

// ------------------------------------------------------------------ oracle

namespace {

struct Diag {
  int n = 0;
  std::vector<RF> d, u;  // Td(e^i_j) = d_i/d_j e^i_j, likewise Tu
};

int comatrix_order(const Coalgebra& C) {
  int n = 0;
  while (n * n < C.dim) ++n;
  if (n * n != C.dim || !(C == comatrix(n)))
    throw PreconditionViolation("oracle needs a comatrix carrier");
  return n;
}

std::vector<RF> diagonal_ratios(const Matrix& T, int n, const char* what) {
  std::vector<RF> r(n);
  for (int i = 0; i < n; ++i) r[i] = T(cm(n, i, 0), cm(n, i, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n * n; ++a) {
        RF want = a == cm(n, i, j) ? r[i] / r[j] : RF(0);
        if (T(a, cm(n, i, j)) != want)
          throw PreconditionViolation(std::string("oracle needs a diagonal ") + what);
      }
  return r;
}

Diag diagonal_data(const OQC& S) {
  Diag g;
  g.n = comatrix_order(S.C);
  g.d = diagonal_ratios(S.Td, g.n, "Td");
  g.u = diagonal_ratios(S.Tu, g.n, "Tu");
  return g;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Dense amplitude over index assignments of the register, low position first.
struct Slicer {
  const OQC& S;
  Diag g;
  std::map<int, Matrix> forms;  // per rule id

  Slicer(const OQC& s) : S(s), g(diagonal_data(s)) {
    const int n2 = g.n * g.n;
    const Matrix I = Matrix::identity(n2);
    for (const auto& r : crossing_rules()) {
      const Matrix& B = r.inverse ? S.b_inv : S.b;
      const Matrix& P = r.shift == Shift::over_u ? S.Tu : r.shift == Shift::over_d ? S.Td : I;
      const Matrix& Q = r.shift == Shift::under_u ? S.Tu : r.shift == Shift::under_d ? S.Td : I;
      forms.emplace(r.id, P.transpose() * B * Q);
    }
  }

  RF ex_weight(Extremum e, int k) const {
    switch (e) {
      case Extremum::d_plus: return g.d[k].inverse();
      case Extremum::d_minus: return g.d[k];
      case Extremum::u_plus: return g.u[k].inverse();
      case Extremum::u_minus: return g.u[k];
    }
    return RF(1);
  }

  // Runs the slices; orient holds the strand directions at the bottom.
  // Returns amplitudes at the top, indexed like the input.
  std::vector<RF> run(const Diagram& D, std::vector<RF> amp, std::vector<bool> orient, int& D_total,
                      int& U_total) const {
    const int n = g.n;
    D_total = U_total = 0;
    for (const auto& e : D.events) {
      const int w = int(orient.size());
      const int q = e.pos;
      const long lo = ipow(n, q);
      if (e.kind == EventKind::cup) {
        Extremum ex = e.leg == Leg::left ? Extremum::u_plus : Extremum::d_minus;
        (ex == Extremum::u_plus ? U_total : D_total) += ex == Extremum::u_plus ? 1 : -1;
        std::vector<RF> out(std::size_t(ipow(n, w + 2)));
        for (long s = 0; s < long(amp.size()); ++s) {
          if (amp[s].is_zero()) continue;
          long low = s % lo, high = s / lo;
          for (int k = 0; k < n; ++k)
            out[low + lo * (k + n * k) + lo * n * n * high] += amp[s] * ex_weight(ex, k);
        }
        amp.swap(out);
        bool left_up = e.leg == Leg::right;
        orient.insert(orient.begin() + q, {left_up, !left_up});
      } else if (e.kind == EventKind::cap) {
        Extremum ex = e.leg == Leg::left ? Extremum::u_minus : Extremum::d_plus;
        (ex == Extremum::u_minus ? U_total : D_total) += -1 + 2 * (ex == Extremum::d_plus);
        std::vector<RF> out(std::size_t(ipow(n, w - 2)));
        for (long s = 0; s < long(amp.size()); ++s) {
          if (amp[s].is_zero()) continue;
          long low = s % lo, mid = (s / lo) % (n * n), high = s / lo / (n * n);
          int a = int(mid % n), b = int(mid / n);
          if (a != b) continue;
          out[low + lo * high] += amp[s] * ex_weight(ex, a);
        }
        amp.swap(out);
        orient.erase(orient.begin() + q, orient.begin() + q + 2);
      } else {
        // sw diagonal: bottom q -> top q+1; se diagonal: bottom q+1 -> top q
        bool sw_up = orient[q], se_up = orient[q + 1];
        bool sw_over = e.over == Over::sw_ne;
        const CrossingRule& rule =
            find_rule(e.over, sw_over ? sw_up : se_up, sw_over ? se_up : sw_up);
        const Matrix& M = forms.at(rule.id);
        std::vector<RF> out(amp.size());
        for (long s = 0; s < long(amp.size()); ++s) {
          if (amp[s].is_zero()) continue;
          long low = s % lo, mid = (s / lo) % (n * n), high = s / lo / (n * n);
          int bl = int(mid % n), br = int(mid / n);  // bottom left (sw), bottom right (se)
          for (int tl = 0; tl < n; ++tl)
            for (int tr = 0; tr < n; ++tr) {
              // sw strand: bottom bl, top tr; se strand: bottom br, top tl
              int sw_in = sw_up ? bl : tr, sw_out = sw_up ? tr : bl;
              int se_in = se_up ? br : tl, se_out = se_up ? tl : br;
              int ov = sw_over ? cm(n, sw_in, sw_out) : cm(n, se_in, se_out);
              int un = sw_over ? cm(n, se_in, se_out) : cm(n, sw_in, sw_out);
              const RF& m = M(ov, un);
              if (m.is_zero()) continue;
              out[low + lo * (tl + n * tr) + lo * n * n * high] += amp[s] * m;
            }
        }
        amp.swap(out);
        std::swap(orient[q], orient[q + 1]);
      }
    }
    return amp;
  }
};

int count_components(const Diagram& D) {
  // union-find over (level, position) segments
  std::vector<int> base{0};
  int w = D.kind == DiagramKind::tangle ? 1 : 0;
  std::vector<int> widths{w};
  for (const auto& e : D.events) {
    w += e.kind == EventKind::cup ? 2 : e.kind == EventKind::cap ? -2 : 0;
    widths.push_back(w);
  }
  for (std::size_t k = 0; k + 1 < widths.size(); ++k) base.push_back(base.back() + widths[k]);
  std::vector<int> parent(base.back() + widths.back() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (std::size_t k = 0; k < D.events.size(); ++k) {
    const Event& e = D.events[k];
    int q = e.pos, wb = widths[k];
    int lo = int(base[k]), hi = int(base[k + 1]);
    for (int p = 0; p < wb; ++p) {
      int above = p;
      if (e.kind == EventKind::cup) above = p >= q ? p + 2 : p;
      else if (e.kind == EventKind::cap) {
        if (p == q || p == q + 1) continue;
        above = p > q + 1 ? p - 2 : p;
      } else if (p == q) above = q + 1;
      else if (p == q + 1) above = q;
      unite(lo + p, hi + above);
    }
    if (e.kind == EventKind::cup) unite(hi + q, hi + q + 1);
    if (e.kind == EventKind::cap) unite(lo + q, lo + q + 1);
  }
  int total = base.back() + widths.back();
  int r = 0;
  for (int x = 0; x < total; ++x) r += find(x) == x;
  return r;
}

}  // namespace

Vec oracle_tangle(const OQC& S, const Diagram& T) {
  if (T.kind != DiagramKind::tangle) throw DiagramError("oracle_tangle needs a tangle diagram");
  validate(T);
  Slicer sl(S);
  const int n = sl.g.n;
  Vec out(std::size_t(n) * n);
  for (int b = 0; b < n; ++b) {
    std::vector<RF> amp(n);
    amp[b] = RF(1);
    int Dt = 0, Ut = 0;
    auto top = sl.run(T, amp, {T.up}, Dt, Ut);
    for (int t = 0; t < n; ++t) {
      int i = T.up ? b : t, j = T.up ? t : b;
      RF f = sl.g.d[i].pow(Dt) * sl.g.u[i].pow(Ut);
      out[cm(n, i, j)] += top[t] * f;
    }
  }
  return out;
}

RF oracle_contract(const TwistOQC& S, const Vec& c, const Diagram& Din) {
  Diagram D = Din.kind == DiagramKind::tangle ? closure(Din) : Din;
  validate(D);
  Slicer sl(S.base);
  const int n = sl.g.n;
  // c = alpha Tr
  RF alpha = c[cm(n, 0, 0)];
  Vec tr = trace_element(n);
  for (int a = 0; a < n * n; ++a)
    if (c[a] != alpha * tr[a]) throw PreconditionViolation("oracle needs a multiple of the trace");
  // G(e^i_j) = delta_ij lambda d_i u_i
  RF lambda = S.G[cm(n, 0, 0)] / (sl.g.d[0] * sl.g.u[0]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RF want = i == j ? lambda * sl.g.d[i] * sl.g.u[i] : RF(0);
      if (S.G[cm(n, i, j)] != want) throw PreconditionViolation("oracle needs G = lambda Td Tu on the diagonal");
    }
  int Dt = 0, Ut = 0;
  auto top = sl.run(D, {RF(1)}, {}, Dt, Ut);
  // per component lambda^d, with sum of d = -(Dt + Ut) / 2
  int r = count_components(D);
  int dsum = -(Dt + Ut) / 2;
  return top[0] * alpha.pow(r) * lambda.pow(dsum);
}

}  // namespace qcoalg
