#pragma once

// Finite-rank matrix modules of the W-graph algebra Omega_J (idempotents E_s,
// edge operators X_{s,gamma}), their W-graph form, and the Hecke action.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hy/coxeter.hpp"
#include "hy/matrix.hpp"
#include "hy/report.hpp"

namespace hy {

template <class K = Integer>
class OmegaModule {
 public:
  using Matrix = SparseMatrix<K>;
  using LMatrix = LaurentMatrix<K>;

  /// The zero module structure (all E_s and X_{s,gamma} zero) of the given rank.
  OmegaModule(CoxeterSystem system, GeneratorSet J, std::size_t rank)
      : system_(std::move(system)), J_(J), rank_(rank), E_(system_.rank()), X_(system_.rank()) {
    if (!J.is_subset_of(system_.generators())) throw std::out_of_range("J exceeds the rank of the system");
    for (Generator s : J.to_vector()) {
      E_[s] = Matrix(rank, rank);
      X_[s].assign(2 * system_.weight(s) - 1, Matrix(rank, rank));
    }
  }

  const CoxeterSystem& system() const { return system_; }
  GeneratorSet J() const { return J_; }
  std::size_t rank() const { return rank_; }
  int weight(Generator s) const { return system_.weight(s); }

  const Matrix& E(Generator s) const { return E_.at(checked(s)); }
  /// X_{s,gamma} for -L(s) < gamma < L(s).
  const Matrix& X(Generator s, int gamma) const { return X_.at(checked(s)).at(gamma_index(s, gamma)); }

  void set_E(Generator s, Matrix m) { E_.at(checked(s)) = checked_shape(std::move(m)); }
  void set_X(Generator s, int gamma, Matrix m) { X_.at(checked(s)).at(gamma_index(s, gamma)) = checked_shape(std::move(m)); }
  /// Sets X_{s,gamma} and X_{s,-gamma} together.
  void set_X_symmetric(Generator s, int gamma, const Matrix& m) {
    set_X(s, gamma, m);
    set_X(s, -gamma, m);
  }

  /// x_s = sum_gamma v^gamma X_{s,gamma}.
  LMatrix x_matrix(Generator s) const {
    LMatrix x(rank_, rank_);
    const int L = weight(s);
    for (int g = -L + 1; g < L; ++g) {
      const Matrix& Xg = X(s, g);
      for (std::size_t i = 0; i < rank_; ++i)
        for (const auto& [j, c] : Xg.row(i)) x.add(i, j, LaurentPoly<K>::monomial(g, c));
    }
    return x;
  }

  /// iota(T_s) = -v_s^-1 E_s + v_s (1 - E_s) + x_s.
  LMatrix iota_T(Generator s) const {
    const int L = weight(s);
    const LMatrix e = lift(E(s));
    LMatrix t = times(vpow<K>(-L), -e) + times(vpow<K>(L), LMatrix::identity(rank_) - e);
    return t + x_matrix(s);
  }

  /// iota(C_s) = iota(T_s) - v_s = -(v_s + v_s^-1) E_s + x_s.
  LMatrix iota_C(Generator s) const {
    return iota_T(s) - LMatrix::scalar(rank_, vpow<K>(weight(s)));
  }

  friend bool operator==(const OmegaModule&, const OmegaModule&) = default;

 private:
  Generator checked(Generator s) const {
    if (!J_.contains(s)) throw std::out_of_range("generator " + generator_label(s) + " is not in J");
    return s;
  }
  std::size_t gamma_index(Generator s, int gamma) const {
    const int L = weight(s);
    if (gamma <= -L || gamma >= L)
      throw std::out_of_range("edge degree " + std::to_string(gamma) + " outside (-L, L) for generator " +
                              generator_label(s));
    return static_cast<std::size_t>(gamma + L - 1);
  }
  Matrix checked_shape(Matrix m) const {
    if (m.rows() != rank_ || m.cols() != rank_)
      throw std::invalid_argument("expected a " + std::to_string(rank_) + "x" + std::to_string(rank_) +
                                  " matrix, got " + m.shape());
    return m;
  }

  CoxeterSystem system_;
  GeneratorSet J_;
  std::size_t rank_;
  std::vector<Matrix> E_;
  std::vector<std::vector<Matrix>> X_;
};

/// Rank-1 module with e_s -> 1, x_{s,gamma} -> 0 (iota(T_s) = -v_s^-1).
template <class K = Integer>
OmegaModule<K> sign_module(const CoxeterSystem& system, GeneratorSet J) {
  OmegaModule<K> m(system, J, 1);
  for (Generator s : J.to_vector()) m.set_E(s, SparseMatrix<K>::identity(1));
  return m;
}

/// Rank-1 module with e_s -> 0, x_{s,gamma} -> 0 (iota(T_s) = v_s).
template <class K = Integer>
OmegaModule<K> trivial_module(const CoxeterSystem& system, GeneratorSet J) {
  return OmegaModule<K>(system, J, 1);
}

namespace detail {

template <class K>
LaurentMatrix<K> alternating_product(const std::vector<LaurentMatrix<K>>& iota, Generator first, Generator second,
                                     int factors) {
  LaurentMatrix<K> prod = LaurentMatrix<K>::identity(iota[first].rows());
  for (int k = 0; k < factors; ++k) prod = prod * iota[k % 2 ? second : first];
  return prod;
}

}  // namespace detail

/// Checks every defining relation of Omega_J on the matrices of m.
template <class K>
Report validate(const OmegaModule<K>& m) {
  using Matrix = SparseMatrix<K>;
  Report rep;
  const auto gens = m.J().to_vector();
  for (Generator s : gens) {
    const std::string sl = generator_label(s);
    const Matrix& E = m.E(s);
    rep.check(E * E == E, [&] { return "E_" + sl + " is not idempotent"; });
    const int L = m.weight(s);
    for (int g = -L + 1; g < L; ++g) {
      const Matrix& X = m.X(s, g);
      const std::string xl = "X_{" + sl + "," + std::to_string(g) + "}";
      rep.check(E * X == X, [&] { return "E_" + sl + " " + xl + " != " + xl; });
      rep.check((X * E).is_zero(), [&] { return xl + " E_" + sl + " != 0"; });
      rep.check(X == m.X(s, -g), [&] { return xl + " != X_{" + sl + "," + std::to_string(-g) + "}"; });
    }
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Generator s = gens[a], t = gens[b];
      rep.check(m.E(s) * m.E(t) == m.E(t) * m.E(s),
                [&] { return "E_" + generator_label(s) + " and E_" + generator_label(t) + " do not commute"; });
    }
  std::vector<LaurentMatrix<K>> iota(m.system().rank());
  for (Generator s : gens) iota[s] = m.iota_T(s);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const Generator s = gens[a], t = gens[b];
      const int mst = m.system().bond(s, t);
      if (mst == kInfiniteBond) continue;
      rep.check(detail::alternating_product(iota, s, t, mst) == detail::alternating_product(iota, t, s, mst), [&] {
        return "braid relation fails for (" + generator_label(s) + "," + generator_label(t) + ")";
      });
    }
  return rep;
}

/// iota(T_w) for w in W_J, as the product along the canonical reduced word.
template <class K>
LaurentMatrix<K> hecke_matrix(const OmegaModule<K>& m, const CoxeterGroup& group, ElementId w) {
  if (!group.in_parabolic(w, m.J())) throw std::invalid_argument(group.name(w) + " is not in W_J");
  LaurentMatrix<K> prod = LaurentMatrix<K>::identity(m.rank());
  for (Generator s : group.element(w).word()) prod = prod * m.iota_T(s);
  return prod;
}

/// Forgets the generators outside J2.
template <class K>
OmegaModule<K> restrict_module(const OmegaModule<K>& m, GeneratorSet J2) {
  if (!J2.is_subset_of(m.J())) throw std::invalid_argument("restriction set must be a subset of J");
  OmegaModule<K> r(m.system(), J2, m.rank());
  for (Generator s : J2.to_vector()) {
    r.set_E(s, m.E(s));
    for (int g = -m.weight(s) + 1; g < m.weight(s); ++g) r.set_X(s, g, m.X(s, g));
  }
  return r;
}

/// K ∩ dJd^-1: the s in K with d^-1 s d a generator in J.
inline GeneratorSet conjugate_intersection(const CoxeterGroup& group, ElementId d, GeneratorSet K, GeneratorSet J) {
  GeneratorSet out;
  for (Generator s : K.to_vector()) {
    auto c = group.conjugate_generator(d, s);
    if (c && J.contains(*c)) out.insert(s);
  }
  return out;
}

/// The module ^dM over Omega_{K ∩ dJd^-1}: E'_s = E_{s^d}, X'_{s,gamma} = X_{s^d,gamma}.
template <class K>
OmegaModule<K> conjugate_module(const CoxeterGroup& group, ElementId d, const OmegaModule<K>& m, GeneratorSet Kset) {
  const GeneratorSet J = m.J();
  if (!(group.right_descents(d) & J).empty() || !(group.left_descents(d) & Kset).empty())
    throw std::invalid_argument(group.name(d) + " is not a minimal double coset representative");
  const GeneratorSet I = conjugate_intersection(group, d, Kset, J);
  OmegaModule<K> c(m.system(), I, m.rank());
  for (Generator s : I.to_vector()) {
    const Generator sd = *group.conjugate_generator(d, s);
    if (m.weight(s) != m.weight(sd)) throw std::logic_error("conjugate generators with different weights");
    c.set_E(s, m.E(sd));
    for (int g = -m.weight(s) + 1; g < m.weight(s); ++g) c.set_X(s, g, m.X(sd, g));
  }
  return c;
}

/// Vertex-labelled graph with per-(s, gamma) edge weights m^{s,gamma}_{to,from}.
template <class K = Integer>
struct WGraph {
  struct Edge {
    Generator s;
    std::size_t from;  // source basis vector (column)
    std::size_t to;    // target basis vector (row)
    std::map<int, K> weights;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  CoxeterSystem system;
  GeneratorSet J;
  std::vector<std::string> vertices;
  std::vector<GeneratorSet> labels;
  std::vector<Edge> edges;

  friend bool operator==(const WGraph&, const WGraph&) = default;
};

template <class K>
OmegaModule<K> to_module(const WGraph<K>& g) {
  const std::size_t n = g.vertices.size();
  if (g.labels.size() != n) throw std::invalid_argument("one label set per vertex is required");
  OmegaModule<K> m(g.system, g.J, n);
  for (Generator s : g.J.to_vector()) {
    SparseMatrix<K> E(n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (g.labels[i].contains(s)) E.set(i, i, K(1));
    m.set_E(s, std::move(E));
  }
  for (Generator s : g.J.to_vector()) {
    const int L = g.system.weight(s);
    std::vector<SparseMatrix<K>> X(2 * L - 1, SparseMatrix<K>(n, n));
    for (const auto& e : g.edges) {
      if (e.s != s) continue;
      if (e.from >= n || e.to >= n) throw std::out_of_range("edge endpoint out of range");
      for (const auto& [gamma, c] : e.weights) {
        if (gamma <= -L || gamma >= L)
          throw std::out_of_range("edge degree " + std::to_string(gamma) + " outside (-L, L)");
        X[gamma + L - 1].add(e.to, e.from, c);
      }
    }
    for (int gamma = -L + 1; gamma < L; ++gamma) m.set_X(s, gamma, X[gamma + L - 1]);
  }
  return m;
}

/// Requires every E_s to be diagonal with entries in {0, 1}.
template <class K>
WGraph<K> to_wgraph(const OmegaModule<K>& m, std::vector<std::string> vertex_names = {}) {
  const std::size_t n = m.rank();
  if (vertex_names.empty())
    for (std::size_t i = 0; i < n; ++i) vertex_names.push_back(std::to_string(i));
  if (vertex_names.size() != n) throw std::invalid_argument("one name per basis vector is required");
  WGraph<K> g{m.system(), m.J(), std::move(vertex_names), std::vector<GeneratorSet>(n), {}};
  for (Generator s : m.J().to_vector()) {
    const auto& E = m.E(s);
    if (!E.is_diagonal()) throw std::invalid_argument("E_" + generator_label(s) + " is not diagonal");
    for (std::size_t i = 0; i < n; ++i) {
      const K d = E.at(i, i);
      if (d == K(1))
        g.labels[i].insert(s);
      else if (!hy::is_zero(d))
        throw std::invalid_argument("E_" + generator_label(s) + " has a diagonal entry other than 0 or 1");
    }
  }
  for (Generator s : m.J().to_vector()) {
    std::map<std::pair<std::size_t, std::size_t>, std::map<int, K>> w;  // (from, to)
    const int L = m.weight(s);
    for (int gamma = -L + 1; gamma < L; ++gamma) {
      const auto& X = m.X(s, gamma);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, c] : X.row(i)) w[{j, i}][gamma] = c;
    }
    for (auto& [key, weights] : w) g.edges.push_back({s, key.first, key.second, std::move(weights)});
  }
  return g;
}

/// W-graph support condition: an edge s: y -> x requires s in I(x) \ I(y).
template <class K>
Report check_support_condition(const WGraph<K>& g) {
  Report rep;
  for (const auto& e : g.edges)
    rep.check(g.labels[e.to].contains(e.s) && !g.labels[e.from].contains(e.s), [&] {
      return "edge " + g.vertices[e.from] + " -> " + g.vertices[e.to] + " for generator " + generator_label(e.s) +
             " violates the label condition";
    });
  return rep;
}

}  // namespace hy
