// diagrams.cpp - Morse diagrams: parsing, wiring, traversal, moves, builtins
#include "qcoalg/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace qcoalg {

DiagramError::DiagramError(const std::string& msg, int line_, int column_, int event_)
    : std::runtime_error([&] {
        std::string w;
        if (line_ >= 0) w += "line " + std::to_string(line_) + ":" + std::to_string(column_) + ": ";
        if (event_ >= 0) w += "event " + std::to_string(event_ + 1) + ": ";
        return w + msg;
      }()),
      line(line_),
      column(column_),
      event(event_) {}

static int delta_width(EventKind k) { return k == EventKind::cup ? 2 : k == EventKind::cap ? -2 : 0; }

int Diagram::crossings() const {
  return int(std::count_if(events.begin(), events.end(),
                           [](const Event& e) { return e.kind == EventKind::cross; }));
}

int Diagram::width_at(int k) const {
  int w = kind == DiagramKind::tangle ? 1 : 0;
  for (int i = 0; i < k; ++i) w += delta_width(events[i].kind);
  return w;
}

// ------------------------------------------------------------------ text

namespace {

std::vector<std::string> split_words(const std::string& s, std::vector<int>& cols) {
  std::vector<std::string> out;
  cols.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace((unsigned char)s[j])) ++j;
    out.push_back(s.substr(i, j - i));
    cols.push_back(int(i) + 1);
    i = j;
  }
  return out;
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  Diagram D;
  bool have_header = false;
  std::vector<int> event_line;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::vector<int> cols;
    auto w = split_words(s, cols);
    if (w.empty()) continue;
    if (!have_header) {
      if (w[0] == "link" && w.size() == 1) {
        D.kind = DiagramKind::link;
      } else if (w[0] == "tangle" && w.size() == 2 && (w[1] == "up" || w[1] == "down")) {
        D.kind = DiagramKind::tangle;
        D.up = w[1] == "up";
      } else if (w[0] == "tangle") {
        throw DiagramError("expected 'tangle up' or 'tangle down'", lineno,
                           w.size() > 1 ? cols[1] : cols[0] + int(w[0].size()));
      } else {
        throw DiagramError("expected header 'tangle up|down' or 'link'", lineno, cols[0]);
      }
      have_header = true;
      continue;
    }
    Event e;
    if (w[0] == "cup") e.kind = EventKind::cup;
    else if (w[0] == "cap") e.kind = EventKind::cap;
    else if (w[0] == "cross") e.kind = EventKind::cross;
    else throw DiagramError("unknown event '" + w[0] + "'", lineno, cols[0]);
    if (w.size() < 3) throw DiagramError("missing argument", lineno, cols.back() + int(w.back().size()));
    if (w.size() > 3) throw DiagramError("unexpected token '" + w[3] + "'", lineno, cols[3]);
    long pos = 0;
    try {
      std::size_t used = 0;
      pos = std::stol(w[1], &used);
      if (used != w[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw DiagramError("position must be an integer", lineno, cols[1]);
    }
    if (pos < 1 || pos > 1000000) throw DiagramError("position out of range", lineno, cols[1]);
    e.pos = int(pos) - 1;
    if (e.kind == EventKind::cross) {
      if (w[2] == "sw_ne") e.over = Over::sw_ne;
      else if (w[2] == "se_nw") e.over = Over::se_nw;
      else throw DiagramError("expected sw_ne or se_nw", lineno, cols[2]);
    } else {
      if (w[2] == "left") e.leg = Leg::left;
      else if (w[2] == "right") e.leg = Leg::right;
      else throw DiagramError("expected left or right", lineno, cols[2]);
    }
    D.events.push_back(e);
    event_line.push_back(lineno);
  }
  if (!have_header) throw DiagramError("empty diagram: missing header", lineno, 1);
  try {
    validate(D);
  } catch (const DiagramError& err) {
    if (err.event >= 0 && err.event < int(event_line.size()))
      throw DiagramError(std::string(err.what()), event_line[err.event], 1, err.event);
    throw;
  }
  return D;
}

std::string render(const Diagram& D) {
  std::ostringstream o;
  if (D.kind == DiagramKind::link) o << "link\n";
  else o << "tangle " << (D.up ? "up" : "down") << "\n";
  for (const auto& e : D.events) {
    switch (e.kind) {
      case EventKind::cup: o << "cup "; break;
      case EventKind::cap: o << "cap "; break;
      case EventKind::cross: o << "cross "; break;
    }
    o << e.pos + 1 << ' ';
    if (e.kind == EventKind::cross) o << (e.over == Over::sw_ne ? "sw_ne" : "se_nw");
    else o << (e.leg == Leg::left ? "left" : e.leg == Leg::right ? "right" : "?");
    o << '\n';
  }
  return o.str();
}

// ---------------------------------------------------------------- walking

namespace {

// A point on segment (level k, register position p) moving up or down.
struct Cursor {
  int k, p;
  bool up;
  bool operator==(const Cursor&) const = default;
};

struct StepResult {
  Cursor next;
  bool boundary = false;
  std::optional<Passage> passage;
  Leg entered = Leg::unset;  // extremum passages: the leg used to enter
};

StepResult step(const Diagram& D, const Cursor& c) {
  StepResult r;
  const int E = int(D.events.size());
  if (c.up) {
    if (c.k == E) {
      r.boundary = true;
      return r;
    }
    const Event& e = D.events[c.k];
    const int q = e.pos;
    r.next = {c.k + 1, c.p, true};
    switch (e.kind) {
      case EventKind::cross:
        if (c.p == q || c.p == q + 1) {
          bool sw = c.p == q;
          r.next.p = sw ? q + 1 : q;
          Passage pa;
          pa.is_crossing = true;
          pa.event = c.k;
          pa.strand_up = true;
          pa.over = (e.over == Over::sw_ne) == sw;
          r.passage = pa;
        }
        break;
      case EventKind::cup:
        if (c.p >= q) r.next.p = c.p + 2;
        break;
      case EventKind::cap:
        if (c.p == q || c.p == q + 1) {
          bool left = c.p == q;
          r.next = {c.k, left ? q + 1 : q, false};
          Passage pa;
          pa.is_crossing = false;
          pa.event = c.k;
          pa.ex = left ? Extremum::u_minus : Extremum::d_plus;
          r.passage = pa;
          r.entered = left ? Leg::left : Leg::right;
        } else if (c.p > q + 1) {
          r.next.p = c.p - 2;
        }
        break;
    }
  } else {
    if (c.k == 0) {
      r.boundary = true;
      return r;
    }
    const Event& e = D.events[c.k - 1];
    const int q = e.pos;
    r.next = {c.k - 1, c.p, false};
    switch (e.kind) {
      case EventKind::cross:
        if (c.p == q || c.p == q + 1) {
          // the top end at q belongs to the se_nw diagonal
          bool sw = c.p == q + 1;
          r.next.p = sw ? q : q + 1;
          Passage pa;
          pa.is_crossing = true;
          pa.event = c.k - 1;
          pa.strand_up = false;
          pa.over = (e.over == Over::sw_ne) == sw;
          r.passage = pa;
        }
        break;
      case EventKind::cap:
        if (c.p >= q) r.next.p = c.p + 2;
        break;
      case EventKind::cup:
        if (c.p == q || c.p == q + 1) {
          bool left = c.p == q;
          r.next = {c.k, left ? q + 1 : q, true};
          Passage pa;
          pa.is_crossing = false;
          pa.event = c.k - 1;
          pa.ex = left ? Extremum::u_plus : Extremum::d_minus;
          r.passage = pa;
          r.entered = left ? Leg::left : Leg::right;
        } else if (c.p > q + 1) {
          r.next.p = c.p - 2;
        }
        break;
    }
  }
  return r;
}

void check_widths(const Diagram& D) {
  int w = D.kind == DiagramKind::tangle ? 1 : 0;
  for (int i = 0; i < int(D.events.size()); ++i) {
    const Event& e = D.events[i];
    bool ok = e.kind == EventKind::cup ? (e.pos >= 0 && e.pos <= w) : (e.pos >= 0 && e.pos + 1 < w);
    if (!ok)
      throw DiagramError("position " + std::to_string(e.pos + 1) + " out of range for width " +
                             std::to_string(w),
                         -1, -1, i);
    w += delta_width(e.kind);
  }
  int want = D.kind == DiagramKind::tangle ? 1 : 0;
  if (w != want)
    throw DiagramError("top width " + std::to_string(w) + ", expected " + std::to_string(want), -1,
                       -1, std::max(0, int(D.events.size()) - 1));
}

// Follows a strand, collecting passages; legs are checked, or filled in
// when fill is set.
void walk(Diagram& D, Cursor start, bool closed, bool fill, std::vector<char>& seen,
          std::vector<Passage>& out) {
  Cursor c = start;
  const std::size_t limit = 4 * (D.events.size() + 2) * (D.events.size() + 2) + 16;
  for (std::size_t n = 0;; ++n) {
    if (n > limit) throw DiagramError("wiring does not close", -1, -1, 0);
    StepResult r = step(D, c);
    if (r.boundary) {
      if (closed) throw DiagramError("component reaches the boundary", -1, -1, 0);
      return;
    }
    if (r.passage) {
      const Passage& pa = *r.passage;
      Event& e = D.events[pa.event];
      if (!pa.is_crossing) {
        if (e.leg == Leg::unset || fill) {
          if (e.leg != Leg::unset && e.leg != r.entered)
            throw DiagramError("orientation clash", -1, -1, pa.event);
          e.leg = r.entered;
        } else if (e.leg != r.entered) {
          throw DiagramError("orientation clash: strand enters through the " +
                                 std::string(r.entered == Leg::left ? "left" : "right") + " leg",
                             -1, -1, pa.event);
        }
      }
      seen[pa.event] = 1;
      out.push_back(pa);
    }
    c = r.next;
    if (closed && c == start) return;
  }
}

Cursor cup_out_leg(const Diagram& D, int k) {
  const Event& e = D.events[k];
  return {k + 1, e.leg == Leg::left ? e.pos + 1 : e.pos, true};
}

Cursor cap_in_leg(const Diagram& D, int k) {
  const Event& e = D.events[k];
  return {k, e.leg == Leg::left ? e.pos : e.pos + 1, true};
}

struct Wiring {
  // per component: passages from its canonical start
  std::vector<std::vector<Passage>> comps;
  std::vector<int> start_event;
};

// Tangle: the open strand from its base. Link: each component starts on the
// in-leg just below its topmost cap; components are ordered by that cap.
Wiring wire(const Diagram& Din) {
  check_widths(Din);
  Diagram D = Din;
  Wiring W;
  const int E = int(D.events.size());
  std::vector<char> seen(E, 0);
  for (const auto& e : D.events)
    if (e.kind != EventKind::cross && e.leg == Leg::unset)
      throw DiagramError("unset leg", -1, -1, int(&e - &D.events[0]));
  if (D.kind == DiagramKind::tangle) {
    std::vector<Passage> ps;
    Cursor start = D.up ? Cursor{0, 0, true} : Cursor{E, 0, false};
    walk(D, start, false, false, seen, ps);
    W.comps.push_back(std::move(ps));
    W.start_event.push_back(0);
    for (int i = 0; i < E; ++i)
      if (!seen[i] && D.events[i].kind == EventKind::cup)
        throw DiagramError("closed component inside a tangle", -1, -1, i);
    return W;
  }
  // first pass with seen flags to find components, from their top caps
  std::vector<int> comp_of(E, -1);
  for (int i = E - 1; i >= 0; --i) {
    if (D.events[i].kind != EventKind::cap || seen[i]) continue;
    std::vector<Passage> ps;
    walk(D, cap_in_leg(D, i), true, false, seen, ps);
    W.comps.push_back(std::move(ps));
    W.start_event.push_back(i);
  }
  // order by the start cap in the event list
  std::vector<int> order(W.comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return W.start_event[a] < W.start_event[b]; });
  Wiring S;
  for (int i : order) {
    S.comps.push_back(std::move(W.comps[i]));
    S.start_event.push_back(W.start_event[i]);
  }
  for (int i = 0; i < E; ++i)
    if (!seen[i]) throw DiagramError("event not on any component", -1, -1, i);
  return S;
}

}  // namespace

void validate(const Diagram& D) { (void)wire(D); }

bool resolve_legs(Diagram& D) {
  try {
    check_widths(D);
    const int E = int(D.events.size());
    std::vector<char> seen(E, 0);
    std::vector<Passage> ps;
    if (D.kind == DiagramKind::tangle) {
      Cursor start = D.up ? Cursor{0, 0, true} : Cursor{E, 0, false};
      walk(D, start, false, true, seen, ps);
    }
    for (int i = 0; i < E; ++i) {
      const Event& e = D.events[i];
      if (seen[i] || e.kind == EventKind::cross || e.leg == Leg::unset) continue;
      Cursor c = e.kind == EventKind::cup ? cup_out_leg(D, i) : cap_in_leg(D, i);
      walk(D, c, true, true, seen, ps);
    }
    for (int i = 0; i < E; ++i)
      if (!seen[i]) return false;
    validate(D);
    return true;
  } catch (const DiagramError&) {
    return false;
  }
}

// ------------------------------------------------------------- traversal

const char* extremum_name(Extremum e) {
  switch (e) {
    case Extremum::u_minus: return "u-";
    case Extremum::u_plus: return "u+";
    case Extremum::d_plus: return "d+";
    case Extremum::d_minus: return "d-";
  }
  return "?";
}

int ComponentInfo::whitney() const {
  int cw = census[int(Extremum::u_minus)] + census[int(Extremum::d_minus)];
  int ccw = census[int(Extremum::u_plus)] + census[int(Extremum::d_plus)];
  return (cw - ccw) / 2;
}

const std::array<CrossingRule, 8>& crossing_rules() {
  static const std::array<CrossingRule, 8> rules = {{
      {1, Over::sw_ne, true, true, false, Shift::none},
      {2, Over::sw_ne, false, false, false, Shift::none},
      {3, Over::sw_ne, true, false, true, Shift::over_u},
      {4, Over::sw_ne, false, true, true, Shift::over_d},
      {5, Over::se_nw, true, true, true, Shift::none},
      {6, Over::se_nw, false, false, true, Shift::none},
      {7, Over::se_nw, false, true, false, Shift::under_u},
      {8, Over::se_nw, true, false, false, Shift::under_d},
  }};
  return rules;
}

const CrossingRule& find_rule(Over over, bool over_up, bool under_up) {
  for (const auto& r : crossing_rules())
    if (r.over == over && r.over_up == over_up && r.under_up == under_up) return r;
  throw std::logic_error("no crossing rule");
}

int crossing_sign(Over over, bool over_up, bool under_up) {
  // direction vectors of the sw_ne and se_nw diagonals when traversed upward
  auto dir = [](bool sw, bool up) {
    std::pair<int, int> v = sw ? std::pair{1, 1} : std::pair{-1, 1};
    if (!up) v = {-v.first, -v.second};
    return v;
  };
  bool over_sw = over == Over::sw_ne;
  auto o = dir(over_sw, over_up);
  auto u = dir(!over_sw, under_up);
  int z = o.first * u.second - o.second * u.first;
  return z > 0 ? 1 : -1;
}

Traversal traverse(const Diagram& D, const std::vector<int>& rotations) {
  Wiring W = wire(D);
  Traversal T;
  const int E = int(D.events.size());
  std::vector<int> over_label(E, -1), under_label(E, -1);
  for (std::size_t ci = 0; ci < W.comps.size(); ++ci) {
    auto ps = W.comps[ci];
    if (D.kind == DiagramKind::link && ci < rotations.size() && !ps.empty()) {
      int r = ((rotations[ci] % int(ps.size())) + int(ps.size())) % int(ps.size());
      std::rotate(ps.begin(), ps.begin() + r, ps.end());
    }
    ComponentInfo comp;
    comp.start_event = W.start_event[ci];
    int idx = 0;
    for (const auto& pa : ps) {
      if (pa.is_crossing) {
        LabelInfo L;
        L.component = int(ci);
        L.index = ++idx;
        L.crossing = pa.event;
        L.over = pa.over;
        L.up = pa.strand_up;
        comp.labels.push_back(int(T.labels.size()));
        (pa.over ? over_label : under_label)[pa.event] = int(T.labels.size());
        T.labels.push_back(L);
      } else {
        comp.census[int(pa.ex)]++;
      }
    }
    // suffix counts
    int ud = 0, uu = 0;
    for (int i = int(ps.size()) - 1, li = int(comp.labels.size()) - 1; i >= 0; --i) {
      const auto& pa = ps[i];
      if (pa.is_crossing) {
        T.labels[comp.labels[li]].ud = ud;
        T.labels[comp.labels[li]].uu = uu;
        --li;
      } else {
        switch (pa.ex) {
          case Extremum::d_plus: ++ud; break;
          case Extremum::d_minus: --ud; break;
          case Extremum::u_plus: ++uu; break;
          case Extremum::u_minus: --uu; break;
        }
      }
    }
    comp.passages = std::move(ps);
    T.components.push_back(std::move(comp));
  }
  for (int k = 0; k < E; ++k) {
    if (D.events[k].kind != EventKind::cross) continue;
    CrossingInfo X;
    X.event = k;
    X.over_label = over_label[k];
    X.under_label = under_label[k];
    bool ou = T.labels[X.over_label].up, uu = T.labels[X.under_label].up;
    X.rule = find_rule(D.events[k].over, ou, uu).id;
    X.sign = crossing_sign(D.events[k].over, ou, uu);
    T.crossings.push_back(X);
  }
  return T;
}

int writhe(const Diagram& D) {
  int w = 0;
  for (const auto& x : traverse(D).crossings) w += x.sign;
  return w;
}

std::vector<int> whitney_degrees(const Diagram& D) {
  if (D.kind != DiagramKind::link) throw DiagramError("Whitney degree needs a link diagram");
  std::vector<int> out;
  for (const auto& c : traverse(D).components) out.push_back(c.whitney());
  return out;
}

Diagram star(const Diagram& T1, const Diagram& T2) {
  if (T1.kind != DiagramKind::tangle || T2.kind != DiagramKind::tangle)
    throw DiagramError("star product needs two tangles");
  if (T1.up != T2.up) throw DiagramError("star product: orientation mismatch at the junction");
  Diagram D = T1;
  D.events.insert(D.events.end(), T2.events.begin(), T2.events.end());
  return D;
}

static Leg flip(Leg l) { return l == Leg::left ? Leg::right : l == Leg::right ? Leg::left : l; }
static Over flip(Over o) { return o == Over::sw_ne ? Over::se_nw : Over::sw_ne; }

Diagram reverse(const Diagram& D) {
  Diagram R = D;
  R.up = !D.up;
  for (auto& e : R.events)
    if (e.kind != EventKind::cross) e.leg = flip(e.leg);
  return R;
}

Diagram mirror(const Diagram& D) {
  Diagram R = D;
  for (auto& e : R.events)
    if (e.kind == EventKind::cross) e.over = flip(e.over);
  return R;
}

Diagram closure(const Diagram& T) {
  if (T.kind != DiagramKind::tangle) throw DiagramError("closure needs a tangle");
  Diagram L;
  L.kind = DiagramKind::link;
  L.events.push_back({EventKind::cup, 0, T.up ? Leg::right : Leg::left, Over::sw_ne});
  L.events.insert(L.events.end(), T.events.begin(), T.events.end());
  L.events.push_back({EventKind::cap, 0, T.up ? Leg::left : Leg::right, Over::sw_ne});
  return L;
}

// ------------------------------------------------------------------ moves

const std::vector<MoveType>& all_move_types() {
  static const std::vector<MoveType> v = {
      MoveType::zigzag_insert, MoveType::zigzag_remove, MoveType::pair_insert,
      MoveType::pair_remove,   MoveType::triple_slide,  MoveType::extremum_slide,
      MoveType::twist_expand,  MoveType::twist_contract, MoveType::commute,
  };
  return v;
}

const char* move_name(MoveType m) {
  switch (m) {
    case MoveType::zigzag_insert: return "zigzag_insert";
    case MoveType::zigzag_remove: return "zigzag_remove";
    case MoveType::pair_insert: return "pair_insert";
    case MoveType::pair_remove: return "pair_remove";
    case MoveType::triple_slide: return "triple_slide";
    case MoveType::extremum_slide: return "extremum_slide";
    case MoveType::twist_expand: return "twist_expand";
    case MoveType::twist_contract: return "twist_contract";
    case MoveType::commute: return "commute";
  }
  return "?";
}

namespace {

Event cup(int p) { return {EventKind::cup, p, Leg::unset, Over::sw_ne}; }
Event cap(int p) { return {EventKind::cap, p, Leg::unset, Over::sw_ne}; }
Event cross(int p, Over o) { return {EventKind::cross, p, Leg::left, o}; }

// Replaces events [i, i + n) by repl.
Diagram splice(const Diagram& D, int i, int n, const std::vector<Event>& repl) {
  Diagram R = D;
  R.events.erase(R.events.begin() + i, R.events.begin() + i + n);
  R.events.insert(R.events.begin() + i, repl.begin(), repl.end());
  return R;
}

// Strands meeting an event: input count below, output count above.
int n_in(const Event& e) { return e.kind == EventKind::cup ? 0 : 2; }
int n_out(const Event& e) { return e.kind == EventKind::cap ? 0 : 2; }

// R3: the three crossings of a triangle with a consistent height order are
// re-stacked on the other side.
std::optional<std::vector<Event>> slide_triple(const Event& a, const Event& b, const Event& c) {
  if (a.kind != EventKind::cross || b.kind != EventKind::cross || c.kind != EventKind::cross)
    return std::nullopt;
  int lo = std::min({a.pos, b.pos, c.pos});
  bool lmr = a.pos == lo && b.pos == lo + 1 && c.pos == lo;
  bool rml = a.pos == lo + 1 && b.pos == lo && c.pos == lo + 1;
  if (!lmr && !rml) return std::nullopt;
  // above[x][y]: strand x passes over strand y
  int above[3][3] = {};
  std::array<int, 3> reg = {0, 1, 2};
  for (const Event* e : {&a, &b, &c}) {
    int l = e->pos - lo;
    int sw = reg[l], se = reg[l + 1];
    if (e->over == Over::sw_ne) above[sw][se] = 1;
    else above[se][sw] = 1;
    std::swap(reg[l], reg[l + 1]);
  }
  // reject cyclic configurations
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        if (x != y && y != z && x != z && above[x][y] && above[y][z] && above[z][x])
          return std::nullopt;
  std::vector<Event> out;
  reg = {0, 1, 2};
  for (int l : lmr ? std::array<int, 3>{1, 0, 1} : std::array<int, 3>{0, 1, 0}) {
    int sw = reg[l], se = reg[l + 1];
    out.push_back(cross(lo + l, above[sw][se] ? Over::sw_ne : Over::se_nw));
    std::swap(reg[l], reg[l + 1]);
  }
  return out;
}

// Candidate rewrites for one move type at every applicable site.
std::vector<Diagram> candidates(const Diagram& D, MoveType t) {
  std::vector<Diagram> out;
  const int E = int(D.events.size());
  std::vector<int> width(E + 1);
  width[0] = D.kind == DiagramKind::tangle ? 1 : 0;
  for (int i = 0; i < E; ++i) width[i + 1] = width[i] + delta_width(D.events[i].kind);
  auto ev = [&](int i) -> const Event& { return D.events[i]; };
  switch (t) {
    case MoveType::zigzag_insert:
      for (int k = 0; k <= E; ++k)
        for (int p = 0; p < width[k]; ++p) {
          out.push_back(splice(D, k, 0, {cup(p + 1), cap(p)}));
          out.push_back(splice(D, k, 0, {cup(p), cap(p + 1)}));
        }
      break;
    case MoveType::zigzag_remove:
      for (int i = 0; i + 1 < E; ++i)
        if (ev(i).kind == EventKind::cup && ev(i + 1).kind == EventKind::cap &&
            std::abs(ev(i).pos - ev(i + 1).pos) == 1)
          out.push_back(splice(D, i, 2, {}));
      break;
    case MoveType::pair_insert:
      for (int k = 0; k <= E; ++k)
        for (int p = 0; p + 1 < width[k]; ++p)
          for (Over o : {Over::sw_ne, Over::se_nw})
            out.push_back(splice(D, k, 0, {cross(p, o), cross(p, flip(o))}));
      break;
    case MoveType::pair_remove:
      for (int i = 0; i + 1 < E; ++i)
        if (ev(i).kind == EventKind::cross && ev(i + 1).kind == EventKind::cross &&
            ev(i).pos == ev(i + 1).pos && ev(i).over != ev(i + 1).over)
          out.push_back(splice(D, i, 2, {}));
      break;
    case MoveType::triple_slide:
      for (int i = 0; i + 2 < E; ++i)
        if (auto r = slide_triple(ev(i), ev(i + 1), ev(i + 2))) out.push_back(splice(D, i, 3, *r));
      break;
    case MoveType::extremum_slide:
      for (int i = 0; i + 1 < E; ++i) {
        const Event& a = ev(i);
        const Event& b = ev(i + 1);
        if (a.kind == EventKind::cross && b.kind == EventKind::cap) {
          // a strand crossing one leg just below a maximum moves to the other leg
          if (a.pos == b.pos + 1)
            out.push_back(splice(D, i, 2, {cross(b.pos, flip(a.over)), {EventKind::cap, b.pos + 1, b.leg, Over::sw_ne}}));
          else if (a.pos == b.pos - 1)
            out.push_back(splice(D, i, 2, {cross(b.pos, flip(a.over)), {EventKind::cap, b.pos - 1, b.leg, Over::sw_ne}}));
        } else if (a.kind == EventKind::cup && b.kind == EventKind::cross) {
          if (b.pos == a.pos + 1)
            out.push_back(splice(D, i, 2, {{EventKind::cup, a.pos + 1, a.leg, Over::sw_ne}, cross(a.pos, flip(b.over))}));
          else if (b.pos == a.pos - 1)
            out.push_back(splice(D, i, 2, {{EventKind::cup, a.pos - 1, a.leg, Over::sw_ne}, cross(a.pos, flip(b.over))}));
        }
      }
      break;
    case MoveType::twist_expand:
      for (int i = 0; i < E; ++i)
        if (ev(i).kind == EventKind::cross) {
          int p = ev(i).pos;
          Over m = flip(ev(i).over);
          out.push_back(splice(D, i, 1, {cup(p + 2), cross(p + 1, m), cap(p)}));
          out.push_back(splice(D, i, 1, {cup(p), cross(p + 1, m), cap(p + 2)}));
        }
      break;
    case MoveType::twist_contract:
      for (int i = 0; i + 2 < E; ++i) {
        const Event& a = ev(i);
        const Event& b = ev(i + 1);
        const Event& c = ev(i + 2);
        if (a.kind != EventKind::cup || b.kind != EventKind::cross || c.kind != EventKind::cap) continue;
        int p = c.pos;
        if (a.pos == p + 2 && b.pos == p + 1) out.push_back(splice(D, i, 3, {cross(p, flip(b.over))}));
        p = a.pos;
        if (c.pos == p + 2 && b.pos == p + 1) out.push_back(splice(D, i, 3, {cross(p, flip(b.over))}));
      }
      break;
    case MoveType::commute:
      for (int i = 0; i + 1 < E; ++i) {
        Event a = ev(i), b = ev(i + 1);
        if (b.pos + n_in(b) <= a.pos) {
          a.pos += n_out(b) - n_in(b);
          out.push_back(splice(D, i, 2, {b, a}));
        } else if (b.pos >= a.pos + n_out(a)) {
          b.pos -= n_out(a) - n_in(a);
          out.push_back(splice(D, i, 2, {b, a}));
        }
      }
      break;
  }
  return out;
}

}  // namespace

bool apply_move(Diagram& D, MoveType type, std::mt19937_64& rng) {
  auto cands = candidates(D, type);
  std::shuffle(cands.begin(), cands.end(), rng);
  for (auto& c : cands) {
    if (resolve_legs(c)) {
      D = std::move(c);
      return true;
    }
  }
  return false;
}

Diagram perturb(const Diagram& D, std::uint64_t seed, int n_moves, std::vector<int>* applied) {
  std::mt19937_64 rng(seed);
  Diagram cur = D;
  const auto& types = all_move_types();
  if (applied) applied->resize(types.size(), 0);
  for (int m = 0; m < n_moves; ++m) {
    bool done = false;
    for (int tries = 0; tries < 64 && !done; ++tries) {
      MoveType t = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
      done = apply_move(cur, t, rng);
      if (done && applied) ++(*applied)[std::size_t(t)];
    }
    if (!done) break;
  }
  return cur;
}

// --------------------------------------------------------------- builtins

const std::map<std::string, std::string>& builtin_sources() {
  static const std::map<std::string, std::string> src = {
      {"strand", "tangle up\n"},
      {"curl", "tangle up\ncup 2 right\ncross 1 sw_ne\ncap 2 left\n"},
      {"curl-op", "tangle down\ncup 2 left\ncross 1 sw_ne\ncap 2 right\n"},
      {"trefoil-tangle",
       "tangle up\ncup 1 right\ncup 3 left\ncross 2 sw_ne\ncross 4 sw_ne\ncross 3 se_nw\n"
       "cap 4 right\ncap 2 right\n"},
      {"trefoil",
       "link\ncup 1 right\ncup 1 right\ncup 3 left\ncross 2 sw_ne\ncross 4 sw_ne\n"
       "cross 3 se_nw\ncap 4 right\ncap 2 right\ncap 1 left\n"},
      {"trefoil-mirror",
       "link\ncup 1 right\ncup 1 right\ncup 3 left\ncross 2 se_nw\ncross 4 se_nw\n"
       "cross 3 sw_ne\ncap 4 right\ncap 2 right\ncap 1 left\n"},
      // closure of the 3-braid s1 s2^-1 s1 s2^-1
      {"figure-eight",
       "link\ncup 1 left\ncup 2 left\ncup 3 left\ncross 4 sw_ne\ncross 5 se_nw\n"
       "cross 4 sw_ne\ncross 5 se_nw\ncap 3 right\ncap 2 right\ncap 1 right\n"},
      {"hopf",
       "link\ncup 1 left\ncup 3 right\ncross 2 sw_ne\ncross 2 sw_ne\ncap 1 right\ncap 1 left\n"},
      {"borromean",
       "link\n"
       "cup 1 left\n"     // component 1, x 0..60
       "cup 3 right\n"    // component 3, x 90..150
       "cross 2 se_nw\n"  // (75,15)
       "cup 3 right\n"    // component 2, x 60..90
       "cross 2 se_nw\n"  // (45,75)
       "cross 4 se_nw\n"  // (105,75)
       "cross 3 sw_ne\n"  // (75,105)
       "cross 2 se_nw\n"  // (45,135)
       "cross 4 se_nw\n"  // (105,135)
       "cap 1 right\n"
       "cap 1 left\n"
       "cap 1 left\n"},
      {"circle", "link\ncup 1 right\ncap 1 left\n"},
      {"unlink", "link\ncup 1 right\ncup 3 left\ncap 3 right\ncap 1 left\n"},
  };
  return src;
}

Diagram builtin(const std::string& name) {
  auto it = builtin_sources().find(name);
  if (it == builtin_sources().end()) throw DiagramError("unknown builtin '" + name + "'");
  return parse_diagram(it->second);
}

}  // namespace qcoalg
