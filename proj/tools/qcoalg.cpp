// qcoalg - command line front end
//
//   qcoalg check     --preset jones
//   qcoalg invariant --preset jones --diagram hopf --element trace [--oracle]
//   qcoalg perturb   --preset jones --diagram trefoil --moves 50 --seed 1
//   qcoalg render    --diagram borromean [--moves 10 --seed 3]
//
// Exit status: 0 success, 1 domain failure (axiom, precondition, mismatch),
// 2 input error. --format record prints one JSON object per result.

#include "CLI11.hpp"
#include "json.hpp"
#include "qcoalg/invariants.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qcoalg;
using json = nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string preset, file;
  std::string diagram;
  std::string element = "trace";
  bool element_given = false;
  std::uint64_t seed = 1;
  int moves = -1;
  bool oracle = false;
  bool close = false;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedInput {
  std::string name;
  OQC oqc;
  std::optional<Vec> G;
  std::optional<QC> quantum;
};

LoadedInput load_structure(const RunConfig& cfg) {
  if (!cfg.preset.empty()) {
    Preset p = load_preset(cfg.preset);
    return {cfg.preset, p.oqc, p.G, p.quantum};
  }
  auto L = parse_structure(read_file(cfg.file));
  return {cfg.file, L.oqc, L.G, std::nullopt};
}

TwistOQC need_twist(const LoadedInput& S) {
  if (!S.G) throw InputError("structure '" + S.name + "' has no twist G");
  return make_twist(S.oqc, *S.G);
}

Diagram load_diagram(const std::string& src) {
  if (builtin_sources().count(src)) return builtin(src);
  return parse_diagram(read_file(src));
}

Vec load_element(const Coalgebra& C, const std::string& sel) {
  if (sel == "trace") {
    int n = int(std::lround(std::sqrt(double(C.dim))));
    if (n * n != C.dim || !(C == comatrix(n))) throw InputError("trace needs a comatrix carrier");
    return trace_element(n);
  }
  if (sel.rfind("basis:", 0) == 0) {
    int i = C.index_of(sel.substr(6));
    if (i < 0) throw InputError("no basis element '" + sel.substr(6) + "'");
    return basis_vector(C.dim, i);
  }
  // file: lines "<label> <scalar>"
  Vec c(C.dim);
  std::istringstream in(read_file(sel));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string label, rest;
    if (!(ls >> label)) continue;
    std::getline(ls, rest);
    int i = C.index_of(label);
    if (i < 0) throw InputError(sel + ":" + std::to_string(lineno) + ": no basis element '" + label + "'");
    c[i] += parse_scalar(rest);
  }
  return c;
}

std::string fnv_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json census(const Diagram& D) {
  Traversal t = traverse(D);
  json comps = json::array();
  for (const auto& c : t.components) {
    json j = {{"crossing_lines", c.labels.size()},
              {"u-", c.census[int(Extremum::u_minus)]},
              {"u+", c.census[int(Extremum::u_plus)]},
              {"d+", c.census[int(Extremum::d_plus)]},
              {"d-", c.census[int(Extremum::d_minus)]}};
    if (D.kind == DiagramKind::link) j["whitney"] = c.whitney();
    comps.push_back(j);
  }
  return {{"crossings", D.crossings()}, {"writhe", writhe(D)}, {"components", comps}};
}

json diagram_record(const std::string& name, const Diagram& D) {
  return {{"name", name},
          {"hash", fnv_hash(render(D))},
          {"kind", D.kind == DiagramKind::link ? "link" : (D.up ? "tangle up" : "tangle down")},
          {"census", census(D)}};
}

// the invariant of D as text plus its record fields
struct Value {
  std::string text;
  json field;
  bool operator==(const Value& o) const { return text == o.text; }
};

Value functional_value(const Coalgebra& C, const Vec& f) {
  Value v;
  json arr = json::array();
  for (int i = 0; i < C.dim; ++i) {
    arr.push_back({{"label", C.label(i)}, {"value", f[i].str()}});
    v.text += C.label(i) + ": " + f[i].str() + "\n";
  }
  v.field = {{"functional", arr}};
  return v;
}

Value scalar_value(const RF& x) { return {x.str() + "\n", {{"value", x.str()}}}; }

// tangle without element: functional; tangle with element: Inv(T)(c), or the
// knot value when closing; link: the link value
Value tangle_value(const RunConfig& cfg, const LoadedInput& S, const Vec& f) {
  if (!cfg.element_given) return functional_value(S.oqc.C, f);
  return scalar_value(evaluate(f, load_element(S.oqc.C, cfg.element)));
}

Value compute(const RunConfig& cfg, const LoadedInput& S, const Diagram& D, bool check) {
  if (D.kind == DiagramKind::tangle && !cfg.close) return tangle_value(cfg, S, inv_tangle(S.oqc, D, check));
  TwistOQC T = need_twist(S);
  Vec c = load_element(S.oqc.C, cfg.element);
  if (D.kind == DiagramKind::tangle) return scalar_value(inv_knot(T, c, D, {}, check));
  return scalar_value(inv_link(T, c, D, {}, check));
}

Value compute_oracle(const RunConfig& cfg, const LoadedInput& S, const Diagram& D) {
  if (D.kind == DiagramKind::tangle && !cfg.close) return tangle_value(cfg, S, oracle_tangle(S.oqc, D));
  return scalar_value(oracle_contract(need_twist(S), load_element(S.oqc.C, cfg.element), D));
}

void emit(const RunConfig& cfg, const json& rec, const std::string& text) {
  if (cfg.format == "record") std::cout << rec.dump() << "\n";
  else std::cout << text;
}

int cmd_check(const RunConfig& cfg) {
  LoadedInput S = load_structure(cfg);
  Report r = check_oqc(S.oqc);
  if (S.quantum) r.merge(check_qc(*S.quantum), "quantum ");
  if (S.G) {
    // check_twist repeats the base axioms; keep only what it adds
    for (const auto& it : check_twist(make_twist(S.oqc, *S.G)).items)
      if (!r.find(it.name)) r.items.push_back(it);
  }
  json items = json::array();
  std::string text;
  for (const auto& it : r.items) {
    items.push_back({{"axiom", it.name}, {"pass", it.pass}, {"witnesses", it.witnesses}});
    text += std::string(it.pass ? "PASS " : "FAIL ") + it.name + "\n";
    for (const auto& w : it.witnesses) text += "     " + w + "\n";
  }
  text += r.ok() ? "all axioms pass\n" : "axiom failure\n";
  emit(cfg, {{"command", "check"}, {"structure", S.name}, {"axioms", items}, {"ok", r.ok()}}, text);
  return r.ok() ? 0 : 1;
}

int cmd_invariant(const RunConfig& cfg) {
  LoadedInput S = load_structure(cfg);
  Diagram D = load_diagram(cfg.diagram);
  Value v = compute(cfg, S, D, true);
  bool functional = D.kind == DiagramKind::tangle && !cfg.close && !cfg.element_given;
  json rec = {{"command", "invariant"}, {"structure", S.name}, {"element", functional ? json() : json(cfg.element)},
              {"diagram", diagram_record(cfg.diagram, D)}};
  rec.update(v.field);
  std::string text = v.text;
  bool agree = true;
  if (cfg.oracle) {
    Value o = compute_oracle(cfg, S, D);
    agree = o == v;
    json of = o.field;
    of["agrees"] = agree;
    rec["oracle"] = of;
    text += agree ? "oracle agrees\n" : "oracle DISAGREES:\n" + o.text;
  }
  emit(cfg, rec, text);
  return agree ? 0 : 1;
}

int cmd_perturb(const RunConfig& cfg) {
  LoadedInput S = load_structure(cfg);
  Diagram D = load_diagram(cfg.diagram);
  int n = cfg.moves < 0 ? 50 : cfg.moves;
  Value ref = compute(cfg, S, D, true);
  // the chain of variants is generated serially, evaluated in parallel
  std::vector<Diagram> chain;
  std::vector<int> applied(all_move_types().size(), 0);
  std::mt19937_64 rng(cfg.seed);
  Diagram cur = D;
  for (int k = 0; k < n; ++k) {
    std::vector<int> a;
    cur = perturb(cur, rng(), 1, &a);
    for (std::size_t i = 0; i < a.size(); ++i) applied[i] += a[i];
    chain.push_back(cur);
  }
  std::vector<std::future<Value>> jobs;
  for (const auto& E : chain)
    jobs.push_back(std::async(std::launch::async, [&cfg, &S, &E] { return compute(cfg, S, E, false); }));
  int mismatch = -1;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    Value v = jobs[k].get();
    if (mismatch < 0 && !(v == ref)) mismatch = int(k);
  }
  json moves = json::object();
  std::string text = ref.text;
  for (std::size_t i = 0; i < applied.size(); ++i) moves[move_name(all_move_types()[i])] = applied[i];
  text += std::to_string(n) + " variants, moves " + moves.dump() + "\n";
  json rec = {{"command", "perturb"}, {"structure", S.name}, {"element", cfg.element}, {"seed", cfg.seed},
              {"variants", n}, {"moves", moves}, {"diagram", diagram_record(cfg.diagram, D)}};
  rec.update(ref.field);
  if (mismatch < 0) {
    rec["all_equal"] = true;
    text += "all equal\n";
  } else {
    rec["all_equal"] = false;
    rec["first_mismatch"] = {{"index", mismatch}, {"diagram", render(chain[mismatch])}};
    text += "MISMATCH at variant " + std::to_string(mismatch) + "\n" + render(chain[mismatch]);
  }
  emit(cfg, rec, text);
  return mismatch < 0 ? 0 : 1;
}

int cmd_render(const RunConfig& cfg) {
  Diagram D = load_diagram(cfg.diagram);
  if (cfg.moves > 0) D = perturb(D, cfg.seed, cfg.moves);
  std::string text = render(D);
  emit(cfg, {{"command", "render"}, {"diagram", diagram_record(cfg.diagram, D)}, {"text", text}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented quantum coalgebra invariants of tangles, knots and links"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_structure = [&](CLI::App* sub) {
    auto* p = sub->add_option("--preset", cfg.preset, "jones | homfly:n=<n>[,off=<s>][,w1=<s>] | trivial:beta=<s>");
    auto* f = sub->add_option("--file", cfg.file, "structure file");
    p->excludes(f);
    f->excludes(p);
  };
  auto add_diagram = [&](CLI::App* sub) {
    sub->add_option("--diagram", cfg.diagram, "builtin name or diagram file")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text | record")->check(CLI::IsMember({"text", "record"}));
  };

  auto* check = app.add_subcommand("check", "run the axiom checks on a structure");
  add_structure(check);
  add_common(check);

  auto* inv = app.add_subcommand("invariant", "compute the invariant of a diagram");
  add_structure(inv);
  add_diagram(inv);
  add_common(inv);
  inv->add_option("--element", cfg.element, "trace | basis:<label> | element file");
  inv->add_flag("--oracle", cfg.oracle, "also run the contraction oracle and compare");
  inv->add_flag("--close", cfg.close, "treat a tangle as the knot it closes to");

  auto* per = app.add_subcommand("perturb", "check invariance along a seeded chain of moves");
  add_structure(per);
  add_diagram(per);
  add_common(per);
  per->add_option("--element", cfg.element, "trace | basis:<label> | element file");
  per->add_option("--seed", cfg.seed, "random seed");
  per->add_option("--moves", cfg.moves, "number of moves (default 50)");
  per->add_flag("--close", cfg.close, "treat a tangle as the knot it closes to");

  auto* ren = app.add_subcommand("render", "print a diagram in canonical form");
  add_diagram(ren);
  add_common(ren);
  ren->add_option("--seed", cfg.seed, "random seed");
  ren->add_option("--moves", cfg.moves, "perturb by this many moves first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (auto* o = sub->get_option_no_throw("--element")) cfg.element_given = o->count() > 0;
    if (cfg.command != "render" && cfg.preset.empty() && cfg.file.empty())
      throw InputError("one of --preset or --file is required");
    if (cfg.command == "check") return cmd_check(cfg);
    if (cfg.command == "invariant") return cmd_invariant(cfg);
    if (cfg.command == "perturb") return cmd_perturb(cfg);
    return cmd_render(cfg);
  } catch (const DiagramError& e) {
    std::cerr << "diagram error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const MalformedScalar& e) {
    std::cerr << "malformed scalar: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolation& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const AxiomViolation& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return 1;
  }
}
