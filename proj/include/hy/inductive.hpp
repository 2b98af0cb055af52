#pragma once

// mu values over D_J^S assembled from a flag J = K_0 ⊂ K_1 ⊂ ... ⊂ K_n = S:
// one independent table per step K_{i-1} ⊂ K_i, merged by the
// mu-factorisation identities. Also the Mackey head start.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hy/checks.hpp"
#include "hy/coxeter.hpp"
#include "hy/induction.hpp"
#include "hy/parallel.hpp"
#include "hy/wgraph.hpp"

namespace hy {

/// Validates a flag: strictly increasing, starting at J, ending at S.
inline void check_flag(const std::vector<GeneratorSet>& flag, GeneratorSet J, GeneratorSet S) {
  if (flag.size() < 2) throw std::invalid_argument("a flag needs at least the two sets J and S");
  if (flag.front() != J) throw std::invalid_argument("flag must start with J");
  if (flag.back() != S) throw std::invalid_argument("flag must end with S");
  for (std::size_t i = 1; i < flag.size(); ++i)
    if (!flag[i - 1].is_subset_of(flag[i]) || flag[i - 1] == flag[i])
      throw std::invalid_argument("flag must be strictly increasing");
}

/// The mu-part of the table for (J, S) on m, where J = flag.front() = m.J().
/// Level tasks run on up to `jobs` workers; the result does not depend on jobs.
template <class K>
PMuTable<K> mu_inductive(std::shared_ptr<const CoxeterGroup> g, const std::vector<GeneratorSet>& flag,
                         const OmegaModule<K>& m, unsigned jobs = 1) {
  const GeneratorSet S = g->system().generators();
  check_flag(flag, m.J(), S);
  const std::size_t n = flag.size() - 1, r = m.rank();
  const GeneratorSet J = m.J();

  // Level i: D_J^{K_{i-1}} cosets and U_i = table of D_{K_{i-1}}^{K_i} on HY_J^{K_{i-1}}(m).
  std::vector<std::shared_ptr<const ParabolicCosets>> lower(n + 1), steps(n + 1);
  std::vector<std::unique_ptr<PMuTable<K>>> U(n + 1);
  for (std::size_t i = 0; i <= n; ++i) lower[i] = std::make_shared<const ParabolicCosets>(g, J, flag[i]);
  parallel_for(n, jobs, [&](std::size_t k) {
    const std::size_t i = k + 1;
    const OmegaModule<K> M = i == 1 ? m : induce(p_mu_table(lower[i - 1], m));
    steps[i] = std::make_shared<const ParabolicCosets>(g, flag[i - 1], flag[i]);
    U[i] = std::make_unique<PMuTable<K>>(p_mu_table(steps[i], M));
  });

  // Merge level by level: prev holds the mu-table of D_J^{K_{i-1}}.
  auto prev = std::make_unique<PMuTable<K>>(lower[0], m, false);
  for (std::size_t i = 1; i <= n; ++i) {
    auto cur = std::make_unique<PMuTable<K>>(lower[i], m, false);
    const ParabolicCosets& c = *lower[i];
    const ParabolicCosets& st = *steps[i];
    const ParabolicCosets& lo = *lower[i - 1];
    std::vector<std::size_t> outer(c.size()), inner(c.size());
    for (std::size_t w = 0; w < c.size(); ++w) {
      const auto [u, v] = g->factorize(J, flag[i - 1], c.rep(w));
      outer[w] = st.position(u);
      inner[w] = lo.position(v);
    }
    for (std::size_t z = 0; z < c.size(); ++z) {
      const std::size_t x = outer[z], y = inner[z];
      for (std::size_t w = 0; w < c.size(); ++w) {
        const std::size_t u = outer[w], v = inner[w];
        if (u == x) {
          for (Generator s : flag[i].to_vector()) {
            const DeodharClass& cx = st.deodhar(x, s);
            if (cx.tag != DeodharTag::zero) continue;
            const auto& mu = prev->mu(v, y, *cx.conj);
            if (!mu.is_zero()) cur->set_mu(w, z, s, mu);
          }
        } else if (st.less(u, x)) {
          for (const auto& [key, mu] : U[i]->mu_column(x)) {
            if (key.second != u) continue;
            auto b = mu.block(v * r, r, y * r, r);
            if (!b.is_zero()) cur->set_mu(w, z, key.first, std::move(b));
          }
        }
      }
    }
    prev = std::move(cur);
  }
  return std::move(*prev);
}

/// Predicted mu^{s,J}_{yd,wd} = mu^{s,K∩dJ}_{y,w} for s in K, d in D_{KJ}:
/// keyed by (position of yd, position of wd, s) in D_J^S. Every (y, w) pair of
/// the inner table is assigned, including zeros; other entries are left open.
template <class K>
std::map<std::tuple<std::size_t, std::size_t, Generator>, LaurentMatrix<K>> mackey_head_start(
    std::shared_ptr<const CoxeterGroup> g, ElementId d, GeneratorSet Kset, const OmegaModule<K>& m,
    const ParabolicCosets& target) {
  const OmegaModule<K> conj = conjugate_module(*g, d, m, Kset);
  const auto inner = std::make_shared<const ParabolicCosets>(g, conj.J(), Kset);
  const auto t = p_mu_table(inner, conj);
  std::map<std::tuple<std::size_t, std::size_t, Generator>, LaurentMatrix<K>> out;
  for (std::size_t w = 0; w < inner->size(); ++w) {
    const std::size_t wd = target.position(g->mult(inner->rep(w), d));
    for (std::size_t y = 0; y < inner->size(); ++y) {
      const std::size_t yd = target.position(g->mult(inner->rep(y), d));
      if (yd == ParabolicCosets::kNone || wd == ParabolicCosets::kNone)
        throw std::logic_error("y d is not a minimal coset representative");
      for (Generator s : Kset.to_vector()) out.emplace(std::make_tuple(yd, wd, s), t.mu(y, w, s));
    }
  }
  return out;
}

}  // namespace hy
