#pragma once

// Left cells of a W-graph: strongly connected components of the edge digraph
// (arc y -> x whenever some X_{s,gamma} maps y|. onto x|. with nonzero
// coefficient) ordered by reachability; plus the induction-of-cells check.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hy/checks.hpp"
#include "hy/coxeter.hpp"
#include "hy/induction.hpp"
#include "hy/report.hpp"
#include "hy/wgraph.hpp"

namespace hy {

struct CellPartition {
  /// Cells, each sorted, ordered by their smallest vertex.
  std::vector<std::vector<std::size_t>> blocks;
  /// Pairs (i, j): cell i is reachable from cell j (i strictly below j); transitively closed.
  std::vector<std::pair<std::size_t, std::size_t>> order;
  /// Cell index of every vertex.
  std::vector<std::size_t> block_of;

  bool below(std::size_t i, std::size_t j) const {
    return std::binary_search(order.begin(), order.end(), std::make_pair(i, j));
  }
  friend bool operator==(const CellPartition&, const CellPartition&) = default;
};

/// Adjacency lists: out[y] = targets x with an arc y -> x.
template <class K>
std::vector<std::vector<std::size_t>> edge_digraph(const OmegaModule<K>& m) {
  std::vector<std::set<std::size_t>> adj(m.rank());
  for (Generator s : m.J().to_vector()) {
    if (!m.E(s).is_diagonal()) throw std::invalid_argument("E_" + generator_label(s) + " is not diagonal");
    for (int g = -m.weight(s) + 1; g < m.weight(s); ++g) {
      const auto& X = m.X(s, g);
      for (std::size_t x = 0; x < X.rows(); ++x)
        for (const auto& [y, c] : X.row(x))
          if (x != y) adj[y].insert(x);
    }
  }
  std::vector<std::vector<std::size_t>> out(m.rank());
  for (std::size_t y = 0; y < adj.size(); ++y) out[y].assign(adj[y].begin(), adj[y].end());
  return out;
}

/// Tarjan's algorithm, iterative. Returns the component index of every vertex.
inline std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, ncomp = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (e < adj[v].size()) {
        const std::size_t w = adj[v][e++];
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

template <class K>
CellPartition cell_partition(const OmegaModule<K>& m) {
  const auto adj = edge_digraph(m);
  const auto comp = strongly_connected_components(adj);
  const std::size_t n = adj.size();
  // renumber components by smallest vertex
  std::vector<std::size_t> renum(n, static_cast<std::size_t>(-1));
  CellPartition cp;
  cp.block_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (renum[comp[v]] == static_cast<std::size_t>(-1)) {
      renum[comp[v]] = cp.blocks.size();
      cp.blocks.emplace_back();
    }
    cp.block_of[v] = renum[comp[v]];
    cp.blocks[cp.block_of[v]].push_back(v);
  }
  const std::size_t nb = cp.blocks.size();
  std::vector<std::set<std::size_t>> succ(nb);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x : adj[y])
      if (cp.block_of[x] != cp.block_of[y]) succ[cp.block_of[y]].insert(cp.block_of[x]);
  std::set<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t j = 0; j < nb; ++j) {
    std::vector<bool> seen(nb, false);
    std::vector<std::size_t> todo(succ[j].begin(), succ[j].end());
    while (!todo.empty()) {
      const std::size_t i = todo.back();
      todo.pop_back();
      if (seen[i]) continue;
      seen[i] = true;
      order.emplace(i, j);
      todo.insert(todo.end(), succ[i].begin(), succ[i].end());
    }
  }
  cp.order.assign(order.begin(), order.end());
  return cp;
}

/// The span of every down-set generated by one cell is stable under all E_s, X_{s,gamma}.
template <class K>
Report check_cell_downsets(const OmegaModule<K>& m, const CellPartition& cp) {
  Report rep;
  for (std::size_t j = 0; j < cp.blocks.size(); ++j) {
    std::vector<bool> in(m.rank(), false);
    for (std::size_t i = 0; i < cp.blocks.size(); ++i)
      if (i == j || cp.below(i, j))
        for (std::size_t v : cp.blocks[i]) in[v] = true;
    auto stable = [&](const SparseMatrix<K>& A) {
      for (std::size_t x = 0; x < A.rows(); ++x)
        for (const auto& [y, c] : A.row(x))
          if (in[y] && !in[x]) return false;
      return true;
    };
    for (Generator s : m.J().to_vector()) {
      rep.check(stable(m.E(s)), [&] { return "down-set of cell " + std::to_string(j) + " not stable under E"; });
      for (int g = -m.weight(s) + 1; g < m.weight(s); ++g)
        rep.check(stable(m.X(s, g)), [&] { return "down-set of cell " + std::to_string(j) + " not stable under X"; });
    }
  }
  return rep;
}

/// True iff the vertex set is a union of cells.
inline bool is_union_of_cells(const CellPartition& cp, const std::vector<bool>& member) {
  for (const auto& b : cp.blocks)
    for (std::size_t v : b)
      if (member[v] != member[b.front()]) return false;
  return true;
}

/// The Kazhdan-Lusztig W-graph of W_K, HY_emptyset^K(Z), as an Omega_K-module
/// with basis indexed by the elements of W_K in (length, ShortLex) order.
template <class K = Integer>
OmegaModule<K> kl_module(std::shared_ptr<const CoxeterGroup> g, GeneratorSet Kset, unsigned jobs = 1) {
  const OmegaModule<K> z = trivial_module<K>(g->system(), GeneratorSet{});
  return induce_direct(std::move(g), z, Kset, jobs);
}

/// C ⊆ W_J (group element ids) must be a union of left cells of W_J; checks
/// that D_J C is a union of left cells of W, both in KL^S and, through
/// w|x -> wx, in HY_J^S(KL^J). Throws if C is not a union of W_J-cells.
template <class K = Integer>
Report induced_cells_check(std::shared_ptr<const CoxeterGroup> g, GeneratorSet J, const std::vector<ElementId>& C) {
  Report rep;
  const CoxeterSystem& sys = g->system();
  const GeneratorSet S = sys.generators();
  const auto wj = std::make_shared<const ParabolicCosets>(g, GeneratorSet{}, J);
  const auto klJ = induce(p_mu_table(wj, trivial_module<K>(sys, GeneratorSet{})));
  const auto cellsJ = cell_partition(klJ);
  std::vector<bool> inC(wj->size(), false);
  for (ElementId c : C) {
    const std::size_t pos = wj->position(c);
    if (pos == ParabolicCosets::kNone) throw std::invalid_argument(g->name(c) + " is not in W_J");
    inC[pos] = true;
  }
  if (!is_union_of_cells(cellsJ, inC)) throw std::invalid_argument("C is not a union of left cells of W_J");

  const auto dj = std::make_shared<const ParabolicCosets>(g, J, S);
  const auto all = std::make_shared<const ParabolicCosets>(g, GeneratorSet{}, S);
  const auto klS = induce(p_mu_table(all, trivial_module<K>(sys, GeneratorSet{})));
  const auto cellsS = cell_partition(klS);
  std::vector<bool> inDC(all->size(), false);
  for (std::size_t d = 0; d < dj->size(); ++d)
    for (std::size_t c = 0; c < wj->size(); ++c)
      if (inC[c]) inDC[all->position(g->mult(dj->rep(d), wj->rep(c)))] = true;
  rep.check(is_union_of_cells(cellsS, inDC), [] { return std::string("D_J C is not a union of left cells of W"); });

  // Same statement inside HY_J^S(KL^J), then carried to KL^S along w|x -> wx.
  const auto induced = induce(p_mu_table(dj, klJ));
  const auto cellsI = cell_partition(induced);
  std::vector<bool> inI(induced.rank(), false);
  std::vector<std::size_t> to_S(induced.rank());
  for (std::size_t d = 0; d < dj->size(); ++d)
    for (std::size_t c = 0; c < wj->size(); ++c) {
      inI[d * wj->size() + c] = inC[c];
      to_S[d * wj->size() + c] = all->position(g->mult(dj->rep(d), wj->rep(c)));
    }
  rep.check(is_union_of_cells(cellsI, inI),
            [] { return std::string("D_J|C is not a union of left cells of HY_J^S(KL^J)"); });
  bool same = true;
  for (std::size_t a = 0; a < induced.rank(); ++a)
    for (std::size_t b = 0; b < induced.rank(); ++b)
      if ((cellsI.block_of[a] == cellsI.block_of[b]) != (cellsS.block_of[to_S[a]] == cellsS.block_of[to_S[b]]))
        same = false;
  rep.check(same, [] { return std::string("cells of HY_J^S(KL^J) and KL^S differ under w|x -> wx"); });
  return rep;
}

}  // namespace hy
