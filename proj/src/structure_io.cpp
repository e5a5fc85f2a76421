// structure_io.cpp - text format and named presets
#include "qcoalg/structures.hpp"

#include <map>
#include <sstream>

namespace qcoalg {

std::string serialize(const OQC& S, const Vec* G) {
  std::ostringstream out;
  out << serialize(S.C);
  int n = S.C.dim;
  auto grid = [&](const char* kw, const Matrix& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!m(i, j).is_zero()) out << kw << ' ' << i + 1 << ' ' << j + 1 << ' ' << m(i, j).str() << '\n';
  };
  grid("b", S.b);
  grid("Td", S.Td);
  grid("Tu", S.Tu);
  if (!S.strict) out << "strict 0\n";
  if (G)
    for (int i = 0; i < n; ++i)
      if (!(*G)[i].is_zero()) out << "G " << i + 1 << ' ' << (*G)[i].str() << '\n';
  return out.str();
}

LoadedStructure parse_structure(const std::string& text) {
  std::vector<std::pair<int, std::string>> rest;
  Coalgebra C = parse_coalgebra(text, &rest);
  int n = C.dim;
  Matrix b(n, n), Td(n, n), Tu(n, n);
  bool have_td = false, have_tu = false, strict = true;
  std::optional<Vec> G;
  for (const auto& [ln, line] : rest) {
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    auto index = [&, ln = ln]() {
      int i;
      if (!(ls >> i)) throw ParseError(ln, "expected index after '" + kw + "'");
      if (i < 1 || i > n) throw ParseError(ln, "index out of range");
      return i - 1;
    };
    auto scalar = [&, ln = ln]() {
      std::string s;
      std::getline(ls, s);
      try {
        return parse_scalar(s);
      } catch (const MalformedScalar& e) {
        throw ParseError(ln, e.what());
      }
    };
    if (kw == "b" || kw == "Td" || kw == "Tu") {
      int i = index(), j = index();
      RF v = scalar();
      (kw == "b" ? b : kw == "Td" ? Td : Tu)(i, j) = v;
      have_td |= kw == "Td";
      have_tu |= kw == "Tu";
    } else if (kw == "G") {
      int i = index();
      if (!G) G = Vec(n);
      (*G)[i] = scalar();
    } else if (kw == "strict") {
      int f;
      if (!(ls >> f) || (f != 0 && f != 1)) throw ParseError(ln, "strict expects 0 or 1");
      strict = f == 1;
    } else {
      throw ParseError(ln, "unknown directive '" + kw + "'");
    }
  }
  // maps left out entirely default to the identity
  if (!have_td) Td = Matrix::identity(n);
  if (!have_tu) Tu = Matrix::identity(n);
  return {make_oqc(std::move(C), std::move(b), std::move(Td), std::move(Tu), strict), std::move(G)};
}

namespace {

std::map<std::string, std::string> options(const std::string& s, const std::string& where) {
  std::map<std::string, std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidParameter(where + ": expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

}  // namespace

Preset load_preset(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  auto opts = options(colon == std::string::npos ? "" : spec.substr(colon + 1), name);
  auto take = [&](const std::string& k) -> std::optional<std::string> {
    auto it = opts.find(k);
    if (it == opts.end()) return std::nullopt;
    std::string v = it->second;
    opts.erase(it);
    return v;
  };
  auto finish = [&](Preset p) {
    if (!opts.empty()) throw InvalidParameter(name + ": unknown option '" + opts.begin()->first + "'");
    p.name = spec;
    return p;
  };
  if (name == "jones") {
    TwistOQC t = jones_structure();
    return finish(Preset{"", t.base, t.G, jones_quantum()});
  }
  if (name == "trivial") {
    auto beta = take("beta");
    TwistOQC t = trivial_structure(beta ? parse_scalar(*beta) : RF(1));
    return finish(Preset{"", t.base, t.G, std::nullopt});
  }
  if (name == "homfly") {
    int n = 2;
    if (auto v = take("n")) {
      try {
        n = std::stoi(*v);
      } catch (...) {
        throw InvalidParameter("homfly: bad n '" + *v + "'");
      }
    }
    std::optional<RF> off;
    if (auto v = take("off")) off = parse_scalar(*v);
    HomflyParams p = homfly_specialization(n, off);
    if (auto v = take("w1")) {
      RF w1 = parse_scalar(*v);
      if (w1.is_zero()) throw InvalidParameter("homfly: w1 must be nonzero");
      RF r = w1 / p.omega[0];
      for (auto& w : p.omega) w *= r;
    }
    TwistOQC t = homfly_structure(p);
    return finish(Preset{"", t.base, t.G, std::nullopt});
  }
  throw InvalidParameter("unknown preset '" + name + "'");
}

}  // namespace qcoalg
