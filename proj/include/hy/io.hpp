#pragma once

// JSON and DOT formats for systems, Laurent polynomials, modules, W-graphs,
// p/mu tables and cell partitions. Integer coefficients only. Output uses
// insertion-ordered objects so that files are byte-stable.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <limits>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hy/cells.hpp"
#include "hy/coxeter.hpp"
#include "hy/induction.hpp"
#include "hy/laurent.hpp"
#include "hy/wgraph.hpp"

namespace hy {

using Json = nlohmann::ordered_json;

/// Malformed input: wrong JSON syntax or a schema violation, with location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t skip_ws(const std::string& t, std::size_t p) {
  while (p < t.size() && (t[p] == ' ' || t[p] == '\n' || t[p] == '\r' || t[p] == '\t')) ++p;
  return p;
}

inline std::size_t scan_string(const std::string& t, std::size_t p, std::string* out) {
  ++p;  // opening quote
  while (p < t.size() && t[p] != '"') {
    if (t[p] == '\\' && p + 1 < t.size()) ++p;
    if (out) out->push_back(t[p]);
    ++p;
  }
  return p + 1;
}

inline std::size_t skip_value(const std::string& t, std::size_t p) {
  p = skip_ws(t, p);
  if (p >= t.size()) return p;
  if (t[p] == '"') return scan_string(t, p, nullptr);
  if (t[p] == '{' || t[p] == '[') {
    int depth = 0;
    while (p < t.size()) {
      if (t[p] == '"') {
        p = scan_string(t, p, nullptr);
        continue;
      }
      if (t[p] == '{' || t[p] == '[') ++depth;
      if (t[p] == '}' || t[p] == ']') {
        if (--depth == 0) return p + 1;
      }
      ++p;
    }
    return p;
  }
  while (p < t.size() && t[p] != ',' && t[p] != '}' && t[p] != ']') ++p;
  return p;
}

/// Offset of the value addressed by a JSON pointer in well-formed text
/// (best effort: stops at the deepest existing ancestor).
inline std::size_t locate(const std::string& t, const std::string& pointer) {
  std::vector<std::string> tokens;
  for (std::size_t i = 1; i <= pointer.size() && !pointer.empty();) {
    std::size_t j = pointer.find('/', i);
    if (j == std::string::npos) j = pointer.size();
    std::string tok = pointer.substr(i, j - i);
    for (std::size_t k; (k = tok.find("~1")) != std::string::npos;) tok.replace(k, 2, "/");
    for (std::size_t k; (k = tok.find("~0")) != std::string::npos;) tok.replace(k, 2, "~");
    tokens.push_back(tok);
    i = j + 1;
  }
  std::size_t p = skip_ws(t, 0);
  for (const auto& tok : tokens) {
    if (p >= t.size()) return p;
    if (t[p] == '{') {
      p = skip_ws(t, p + 1);
      bool found = false;
      while (p < t.size() && t[p] == '"') {
        std::string key;
        p = skip_ws(t, scan_string(t, p, &key));
        p = skip_ws(t, p + 1);  // ':'
        if (key == tok) {
          found = true;
          break;
        }
        p = skip_ws(t, skip_value(t, p));
        if (p < t.size() && t[p] == ',') p = skip_ws(t, p + 1);
      }
      if (!found) return p;
    } else if (t[p] == '[') {
      std::size_t idx = 0;
      try {
        idx = std::stoul(tok);
      } catch (const std::exception&) {
        return p;
      }
      p = skip_ws(t, p + 1);
      for (std::size_t k = 0; k < idx && p < t.size() && t[p] != ']'; ++k) {
        p = skip_ws(t, skip_value(t, p));
        if (p < t.size() && t[p] == ',') p = skip_ws(t, p + 1);
      }
    } else {
      return p;
    }
  }
  return p;
}

}  // namespace detail

/// Parsed JSON text plus what is needed to point at a line in it.
class JsonSource {
 public:
  JsonSource(std::string text, std::string name) : text_(std::move(text)), name_(std::move(name)) {
    try {
      root_ = Json::parse(text_);
    } catch (const Json::parse_error& e) {
      throw FormatError(name_ + ": " + e.what());
    }
  }
  static JsonSource from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return JsonSource(ss.str(), path);
  }
  const Json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    const std::size_t off = detail::locate(text_, pointer);
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < off && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError(name_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": at " +
                      (pointer.empty() ? std::string("/") : pointer) + ": " + message);
  }

 private:
  std::string text_;
  std::string name_;
  Json root_;
};

/// Typed access to a JSON node with its pointer, for schema errors.
class Node {
 public:
  Node(const JsonSource& src, const Json& j, std::string ptr) : src_(&src), j_(&j), ptr_(std::move(ptr)) {}
  explicit Node(const JsonSource& src) : Node(src, src.root(), "") {}

  const Json& json() const { return *j_; }
  const std::string& pointer() const { return ptr_; }
  [[noreturn]] void fail(const std::string& msg) const { src_->fail(ptr_, msg); }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }
  Node operator[](const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) fail("missing key \"" + key + "\"");
    return Node(*src_, *it, ptr_ + "/" + escape(key));
  }
  Node operator[](std::size_t i) const { return Node(*src_, j_->at(i), ptr_ + "/" + std::to_string(i)); }

  std::size_t array_size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }
  std::vector<std::pair<std::string, Node>> object_items() const {
    if (!j_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j_->begin(); it != j_->end(); ++it) out.emplace_back(it.key(), Node(*src_, it.value(), ptr_ + "/" + escape(it.key())));
    return out;
  }
  long long integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<long long>();
  }
  std::string string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

 private:
  static std::string escape(const std::string& k) {
    std::string out;
    for (char c : k) out += c == '~' ? std::string("~0") : c == '/' ? std::string("~1") : std::string(1, c);
    return out;
  }
  const JsonSource* src_;
  const Json* j_;
  std::string ptr_;
};

// ---------------------------------------------------------------- generators

inline Json generators_to_json(GeneratorSet J) {
  Json a = Json::array();
  for (Generator s : J.to_vector()) a.push_back(s + 1);
  return a;
}

inline GeneratorSet generators_from_json(const Node& n, int rank) {
  GeneratorSet J;
  for (std::size_t i = 0; i < n.array_size(); ++i) {
    const long long g = n[i].integer();
    if (g < 1 || g > rank) n[i].fail("generator label out of range 1.." + std::to_string(rank));
    J.insert(static_cast<Generator>(g - 1));
  }
  return J;
}

/// "1,2" or "" -> generator set (1-based labels).
inline GeneratorSet parse_generator_list(const std::string& text, int rank) {
  GeneratorSet J;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    int g = 0;
    try {
      std::size_t used = 0;
      g = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed generator label '" + tok + "'");
    }
    if (g < 1 || g > rank) throw std::invalid_argument("generator label " + tok + " out of range 1.." + std::to_string(rank));
    J.insert(g - 1);
  }
  return J;
}

// ---------------------------------------------------------------- systems

inline Json system_to_json(const CoxeterSystem& sys) {
  Json j;
  j["rank"] = sys.rank();
  j["matrix"] = sys.matrix();
  j["weights"] = sys.weights();
  return j;
}

inline CoxeterSystem system_from_json(const Node& n) {
  const long long rank = n["rank"].integer();
  if (rank < 1 || rank > GeneratorSet::kMaxRank) n["rank"].fail("rank must be between 1 and 64");
  const Node mat = n["matrix"];
  if (mat.array_size() != static_cast<std::size_t>(rank)) mat.fail("expected " + std::to_string(rank) + " rows");
  std::vector<std::vector<int>> m(rank);
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
    const Node row = mat[i];
    if (row.array_size() != static_cast<std::size_t>(rank)) row.fail("expected " + std::to_string(rank) + " entries");
    for (std::size_t k = 0; k < static_cast<std::size_t>(rank); ++k) {
      const long long e = row[k].integer();
      if (i == k && e != 1) row[k].fail("diagonal entry must be 1");
      if (i != k && (e < 0 || e == 1 || e > std::numeric_limits<int>::max()))
        row[k].fail("off-diagonal entry must be >= 2 or 0 (infinity)");
      if (k < i && e != m[k][i]) row[k].fail("Coxeter matrix is not symmetric");
      m[i].push_back(static_cast<int>(e));
    }
  }
  std::vector<int> w(rank, 1);
  if (n.has("weights")) {
    const Node wn = n["weights"];
    if (wn.array_size() != static_cast<std::size_t>(rank)) wn.fail("expected " + std::to_string(rank) + " weights");
    for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
      const long long e = wn[i].integer();
      if (e < 1 || e > std::numeric_limits<int>::max()) wn[i].fail("weight must be a positive integer");
      w[i] = static_cast<int>(e);
    }
  }
  try {
    return CoxeterSystem::create(std::move(m), std::move(w));
  } catch (const std::invalid_argument& e) {
    (n.has("weights") ? n["weights"] : n).fail(e.what());
  }
}

inline CoxeterSystem load_system(const std::string& path) {
  const auto src = JsonSource::from_file(path);
  return system_from_json(Node(src));
}

// ---------------------------------------------------------------- Laurent

inline Json coeffs_to_json(const Laurent& p) {
  Json c = Json::object();
  for (const auto& [e, k] : p.terms()) c[std::to_string(e)] = k;
  return c;
}

inline Json laurent_to_json(const Laurent& p) {
  Json j;
  j["coeffs"] = coeffs_to_json(p);
  return j;
}

/// Exponent keys are canonical decimal integers: "0", "7", "-3".
inline int parse_exponent(const std::string& key, const Node& where) {
  const std::size_t digits = key.size() > 0 && key[0] == '-' ? 1 : 0;
  bool ok = key.size() > digits && std::all_of(key.begin() + digits, key.end(), [](char c) { return c >= '0' && c <= '9'; });
  ok = ok && (key[digits] != '0' || key == "0");
  int e = 0;
  if (ok) {
    const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    ok = ec == std::errc() && end == key.data() + key.size();
  }
  if (!ok) where.fail("malformed exponent key \"" + key + "\"");
  return e;
}

/// A single 1-based generator label such as "2".
inline Generator parse_generator_key(const std::string& key, int rank, const Node& where) {
  int g = 0;
  const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), g);
  if (ec != std::errc() || end != key.data() + key.size() || key[0] == '0' || g < 1 || g > rank)
    where.fail("malformed generator \"" + key + "\"");
  return static_cast<Generator>(g - 1);
}

inline Laurent coeffs_from_json(const Node& n) {
  Laurent p;
  for (const auto& [key, val] : n.object_items()) {
    const int e = parse_exponent(key, val);
    const long long c = val.integer();
    if (c == 0) val.fail("zero coefficients are not stored");
    p.add_term(e, c);
  }
  return p;
}

inline Laurent laurent_from_json(const Node& n) { return coeffs_from_json(n["coeffs"]); }

// ---------------------------------------------------------------- matrices

inline Json int_matrix_to_json(const SparseMatrix<Integer>& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    a.push_back(std::move(row));
  }
  return a;
}

inline SparseMatrix<Integer> int_matrix_from_json(const Node& n, std::size_t rows, std::size_t cols) {
  if (n.array_size() != rows) n.fail("expected " + std::to_string(rows) + " rows");
  SparseMatrix<Integer> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Node row = n[i];
    if (row.array_size() != cols) row.fail("expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, row[j].integer());
  }
  return m;
}

inline Json laurent_matrix_to_json(const LaurentMatrix<Integer>& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(laurent_to_json(m.at(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

inline LaurentMatrix<Integer> laurent_matrix_from_json(const Node& n, std::size_t rows, std::size_t cols) {
  if (n.array_size() != rows) n.fail("expected " + std::to_string(rows) + " rows");
  LaurentMatrix<Integer> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Node row = n[i];
    if (row.array_size() != cols) row.fail("expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, laurent_from_json(row[j]));
  }
  return m;
}

// ---------------------------------------------------------------- modules

/// General Omega_J-module: {"J", "rank", "E": {"s": matrix}, "X": {"s": {"gamma": matrix}}}.
/// Only nonzero X_{s,gamma} are written.
inline Json module_to_json(const OmegaModule<Integer>& m) {
  Json j;
  j["J"] = generators_to_json(m.J());
  j["rank"] = m.rank();
  Json E = Json::object(), X = Json::object();
  for (Generator s : m.J().to_vector()) {
    const std::string sl = generator_label(s);
    E[sl] = int_matrix_to_json(m.E(s));
    Json xs = Json::object();
    for (int g = -m.weight(s) + 1; g < m.weight(s); ++g)
      if (!m.X(s, g).is_zero()) xs[std::to_string(g)] = int_matrix_to_json(m.X(s, g));
    X[sl] = std::move(xs);
  }
  j["E"] = std::move(E);
  j["X"] = std::move(X);
  return j;
}

inline Json wgraph_to_json(const WGraph<Integer>& g) {
  Json j;
  j["J"] = generators_to_json(g.J);
  j["vertices"] = g.vertices;
  Json labels = Json::array();
  for (const auto& l : g.labels) labels.push_back(generators_to_json(l));
  j["labels"] = std::move(labels);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json ej;
    ej["s"] = e.s + 1;
    ej["from"] = g.vertices[e.from];
    ej["to"] = g.vertices[e.to];
    Json w = Json::object();
    for (const auto& [gamma, c] : e.weights) w[std::to_string(gamma)] = c;
    ej["weights"] = std::move(w);
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline WGraph<Integer> wgraph_from_json(const Node& n, const CoxeterSystem& sys) {
  WGraph<Integer> g{sys, generators_from_json(n["J"], sys.rank()), {}, {}, {}};
  const Node vs = n["vertices"];
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vs.array_size(); ++i) {
    g.vertices.push_back(vs[i].string());
    if (!index.emplace(g.vertices.back(), i).second) vs[i].fail("duplicate vertex name");
  }
  const Node ls = n["labels"];
  if (ls.array_size() != g.vertices.size()) ls.fail("expected one label set per vertex");
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const GeneratorSet l = generators_from_json(ls[i], sys.rank());
    if (!l.is_subset_of(g.J)) ls[i].fail("label is not a subset of J");
    g.labels.push_back(l);
  }
  const Node es = n["edges"];
  auto vertex = [&](const Node& v) -> std::size_t {
    if (v.json().is_number_integer()) {
      const long long k = v.integer();
      if (k < 0 || static_cast<std::size_t>(k) >= g.vertices.size()) v.fail("vertex index out of range");
      return static_cast<std::size_t>(k);
    }
    auto it = index.find(v.string());
    if (it == index.end()) v.fail("unknown vertex \"" + v.string() + "\"");
    return it->second;
  };
  for (std::size_t i = 0; i < es.array_size(); ++i) {
    const Node e = es[i];
    const long long s = e["s"].integer();
    if (s < 1 || s > sys.rank() || !g.J.contains(static_cast<Generator>(s - 1))) e["s"].fail("generator not in J");
    WGraph<Integer>::Edge edge{static_cast<Generator>(s - 1), vertex(e["from"]), vertex(e["to"]), {}};
    const int L = sys.weight(edge.s);
    for (const auto& [key, val] : e["weights"].object_items()) {
      const int gamma = parse_exponent(key, val);
      if (gamma <= -L || gamma >= L) val.fail("edge degree outside (-L(s), L(s))");
      const long long c = val.integer();
      if (c == 0) val.fail("zero weights are not stored");
      edge.weights[gamma] = c;
    }
    g.edges.push_back(std::move(edge));
  }
  return g;
}

inline OmegaModule<Integer> module_from_json(const Node& n, const CoxeterSystem& sys) {
  if (n.has("vertices")) return to_module(wgraph_from_json(n, sys));
  const GeneratorSet J = generators_from_json(n["J"], sys.rank());
  const long long rank = n["rank"].integer();
  if (rank < 1) n["rank"].fail("rank must be positive");
  const auto r = static_cast<std::size_t>(rank);
  OmegaModule<Integer> m(sys, J, r);
  const Node E = n["E"];
  for (Generator s : J.to_vector()) m.set_E(s, int_matrix_from_json(E[generator_label(s)], r, r));
  const Node X = n["X"];
  for (const auto& [key, val] : X.object_items()) {
    const Generator s = parse_generator_key(key, sys.rank(), val);
    if (!J.contains(s)) val.fail("generator " + key + " is not in J");
    for (const auto& [gk, mat] : val.object_items()) {
      const int gamma = parse_exponent(gk, mat);
      if (gamma <= -sys.weight(s) || gamma >= sys.weight(s)) mat.fail("edge degree outside (-L(s), L(s))");
      m.set_X(s, gamma, int_matrix_from_json(mat, r, r));
    }
  }
  return m;
}

// ---------------------------------------------------------------- tables

inline Json mu_to_json(const PMuTable<Integer>& t) {
  Json mu = Json::object();
  const ParabolicCosets& c = t.cosets();
  for (std::size_t z = 0; z < t.size(); ++z)
    for (const auto& [key, m] : t.mu_column(z)) {
      const auto [s, x] = key;
      Json byg = Json::object();
      for (int g = -t.module().weight(s) + 1; g < t.module().weight(s); ++g) {
        const auto coeff = coefficient(m, g);
        if (!coeff.is_zero()) byg[std::to_string(g)] = int_matrix_to_json(coeff);
      }
      mu[c.name(x) + "|" + c.name(z) + "|" + generator_label(s)] = std::move(byg);
    }
  return mu;
}

inline Json table_to_json(const PMuTable<Integer>& t) {
  Json j;
  j["J"] = generators_to_json(t.J());
  if (t.has_p()) {
    Json p = Json::object();
    const ParabolicCosets& c = t.cosets();
    for (std::size_t z = 0; z < t.size(); ++z)
      for (std::size_t x = 0; x <= z; ++x)
        if (c.leq(x, z)) p[c.name(x) + "|" + c.name(z)] = laurent_matrix_to_json(t.p(x, z));
    j["p"] = std::move(p);
  }
  j["mu"] = mu_to_json(t);
  return j;
}

/// Rebuilds a table for (J, S) on m from its JSON form.
inline PMuTable<Integer> table_from_json(const Node& n, std::shared_ptr<const CoxeterGroup> g,
                                         const OmegaModule<Integer>& m) {
  const CoxeterSystem& sys = g->system();
  const GeneratorSet J = generators_from_json(n["J"], sys.rank());
  if (J != m.J()) n["J"].fail("J does not match the module");
  auto cosets = std::make_shared<const ParabolicCosets>(g, J, sys.generators());
  PMuTable<Integer> t(cosets, m, n.has("p"));
  const std::size_t r = m.rank();
  auto pos = [&](const std::string& name, const Node& where) {
    std::size_t p = ParabolicCosets::kNone;
    try {
      p = cosets->position(g->id_of_word(parse_word(name, sys.rank())));
    } catch (const std::exception& e) {
      where.fail(e.what());
    }
    if (p == ParabolicCosets::kNone) where.fail("'" + name + "' is not a minimal coset representative");
    return p;
  };
  auto split_key = [](const std::string& key) {
    std::vector<std::string> parts;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, '|')) parts.push_back(part);
    return parts;
  };
  if (n.has("p"))
    for (const auto& [key, val] : n["p"].object_items()) {
      const auto parts = split_key(key);
      if (parts.size() != 2) n["p"].fail("malformed key \"" + key + "\"");
      const std::size_t x = pos(parts[0], val), z = pos(parts[1], val);
      auto mat = laurent_matrix_from_json(val, r, r);
      if (x == z) {
        if (!(mat == LaurentMatrix<Integer>::identity(r))) val.fail("diagonal entry is not the identity");
        continue;
      }
      if (x > z || !cosets->leq(x, z)) val.fail("entry outside the Bruhat order");
      t.set_p(x, z, std::move(mat));
    }
  for (const auto& [key, val] : n["mu"].object_items()) {
    const auto parts = split_key(key);
    if (parts.size() != 3) n["mu"].fail("malformed key \"" + key + "\"");
    const std::size_t x = pos(parts[0], val), z = pos(parts[1], val);
    const Generator s = parse_generator_key(parts[2], sys.rank(), val);
    LaurentMatrix<Integer> mu(r, r);
    for (const auto& [gk, mat] : val.object_items()) {
      const int gamma = parse_exponent(gk, mat);
      if (gamma <= -sys.weight(s) || gamma >= sys.weight(s)) mat.fail("degree outside (-L(s), L(s))");
      const auto c = int_matrix_from_json(mat, r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (const auto& [jj, v] : c.row(i)) mu.add(i, jj, Laurent::monomial(gamma, v));
    }
    t.set_mu(x, z, s, std::move(mu));
  }
  return t;
}

// ---------------------------------------------------------------- cells

inline Json cells_to_json(const CellPartition& cp, const std::vector<std::string>& names) {
  Json j;
  Json cells = Json::array();
  for (const auto& b : cp.blocks) {
    Json cell = Json::array();
    for (std::size_t v : b) cell.push_back(names.at(v));
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  Json order = Json::array();
  for (const auto& [i, k] : cp.order) order.push_back(Json::array({i, k}));
  j["order"] = std::move(order);
  return j;
}

// ---------------------------------------------------------------- DOT

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}
inline std::string label_set(GeneratorSet l) {
  std::string s = "{";
  bool first = true;
  for (Generator g : l.to_vector()) {
    s += (first ? "" : ",") + generator_label(g);
    first = false;
  }
  return s + "}";
}
inline std::string edge_label(const WGraph<Integer>::Edge& e) {
  std::string s = generator_label(e.s) + ":";
  bool first = true;
  for (const auto& [g, c] : e.weights) {
    s += (first ? "" : ",") + std::string("(") + std::to_string(g) + ":" + std::to_string(c) + ")";
    first = false;
  }
  return s;
}
}  // namespace detail

inline std::string wgraph_to_dot(const WGraph<Integer>& g) {
  std::ostringstream os;
  os << "digraph wgraph {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  " << detail::dot_quote(g.vertices[i]) << " [label="
       << detail::dot_quote(g.vertices[i] + "\\n" + detail::label_set(g.labels[i])) << "];\n";
  for (const auto& e : g.edges)
    os << "  " << detail::dot_quote(g.vertices[e.from]) << " -> " << detail::dot_quote(g.vertices[e.to])
       << " [label=" << detail::dot_quote(detail::edge_label(e)) << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string cells_to_dot(const WGraph<Integer>& g, const CellPartition& cp) {
  std::ostringstream os;
  os << "digraph cells {\n";
  for (std::size_t b = 0; b < cp.blocks.size(); ++b) {
    os << "  subgraph cluster_" << b << " {\n    label=\"cell " << b << "\";\n";
    for (std::size_t v : cp.blocks[b])
      os << "    " << detail::dot_quote(g.vertices[v]) << " [label="
         << detail::dot_quote(g.vertices[v] + "\\n" + detail::label_set(g.labels[v])) << "];\n";
    os << "  }\n";
  }
  for (const auto& e : g.edges)
    os << "  " << detail::dot_quote(g.vertices[e.from]) << " -> " << detail::dot_quote(g.vertices[e.to]) << ";\n";
  os << "}\n";
  return os.str();
}

/// Pretty-printed JSON with a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hy
