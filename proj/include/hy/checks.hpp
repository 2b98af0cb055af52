#pragma once

// Structural identities of induction, checked by exact matrix comparison:
// transitivity, the Mackey filtration, mu-factorisation, E_J fixing 1|m_0,
// and functoriality.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hy/coxeter.hpp"
#include "hy/induction.hpp"
#include "hy/report.hpp"
#include "hy/wgraph.hpp"

namespace hy {

/// Matrix with entry (perm[i], perm[j]) = M(i, j).
template <class T>
SparseMatrix<T> permute(const SparseMatrix<T>& M, const std::vector<std::size_t>& perm) {
  SparseMatrix<T> out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (const auto& [j, v] : M.row(i)) out.set(perm.at(i), perm.at(j), v);
  return out;
}

/// Compares two Omega-modules over the same J generator by generator.
template <class K>
Report compare_modules(const OmegaModule<K>& a, const OmegaModule<K>& b, const std::string& what) {
  Report rep;
  if (!rep.check(a.rank() == b.rank() && a.J() == b.J(), [&] { return what + ": rank or J differ"; })) return rep;
  for (Generator s : a.J().to_vector()) {
    rep.check(a.E(s) == b.E(s), [&] { return what + ": E_" + generator_label(s) + " differs"; });
    for (int g = -a.weight(s) + 1; g < a.weight(s); ++g)
      rep.check(a.X(s, g) == b.X(s, g),
                [&] { return what + ": X_{" + generator_label(s) + "," + std::to_string(g) + "} differs"; });
  }
  return rep;
}

template <class K>
OmegaModule<K> permute_module(const OmegaModule<K>& m, const std::vector<std::size_t>& perm) {
  OmegaModule<K> out(m.system(), m.J(), m.rank());
  for (Generator s : m.J().to_vector()) {
    out.set_E(s, permute(m.E(s), perm));
    for (int g = -m.weight(s) + 1; g < m.weight(s); ++g) out.set_X(s, g, permute(m.X(s, g), perm));
  }
  return out;
}

/// HY_J^K(m) via the direct table over D_J ∩ W_K.
template <class K>
OmegaModule<K> induce_direct(std::shared_ptr<const CoxeterGroup> g, const OmegaModule<K>& m, GeneratorSet ambient,
                             unsigned jobs = 1) {
  TableOptions opt;
  opt.jobs = jobs;
  return induce(p_mu_table(std::move(g), m, ambient, opt));
}

/// HY_K^S(HY_J^K(m)), reindexed along (w, z) -> wz, equals HY_J^S(m).
template <class K>
Report transitivity_check(std::shared_ptr<const CoxeterGroup> g, GeneratorSet J, GeneratorSet Kset,
                          const OmegaModule<K>& m) {
  if (!J.is_subset_of(Kset)) throw std::invalid_argument("transitivity requires J to be a subset of K");
  if (m.J() != J) throw std::invalid_argument("module is not over Omega_J");
  Report rep;
  const GeneratorSet S = g->system().generators();
  const auto inner = std::make_shared<const ParabolicCosets>(g, J, Kset);
  const auto outer = std::make_shared<const ParabolicCosets>(g, Kset, S);
  const auto direct = std::make_shared<const ParabolicCosets>(g, J, S);
  const OmegaModule<K> mid = induce(p_mu_table(inner, m));
  const OmegaModule<K> nested = induce(p_mu_table(outer, mid));
  const OmegaModule<K> flat = induce(p_mu_table(direct, m));

  const std::size_t r = m.rank(), ni = inner->size();
  std::vector<std::size_t> perm(nested.rank(), ParabolicCosets::kNone);
  std::vector<bool> hit(flat.rank(), false);
  for (std::size_t w = 0; w < outer->size(); ++w)
    for (std::size_t z = 0; z < ni; ++z) {
      const ElementId wz = g->mult(outer->rep(w), inner->rep(z));
      rep.check(g->length(wz) == outer->length(w) + inner->length(z),
                [&] { return "product " + outer->name(w) + "*" + inner->name(z) + " is not length-additive"; });
      const std::size_t pos = direct->position(wz);
      if (!rep.check(pos != ParabolicCosets::kNone, [&] { return "product " + g->name(wz) + " is not in D_J"; })) continue;
      const auto [x, y] = g->factorize(J, Kset, wz);
      rep.check(x == outer->rep(w) && y == inner->rep(z), [&] { return "factorize disagrees at " + g->name(wz); });
      for (std::size_t b = 0; b < r; ++b) {
        perm[(w * ni + z) * r + b] = pos * r + b;
        hit[pos * r + b] = true;
      }
    }
  if (!rep.check(nested.rank() == flat.rank() && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }),
                 [] { return std::string("(w, z) -> wz is not a bijection onto D_J"); }))
    return rep;
  rep.merge(compare_modules(permute_module(nested, perm), flat, "transitivity"));
  return rep;
}

/// Mackey: for K, J and m over Omega_J, the filtration of HY_J^S(m) restricted
/// to Omega_K by double cosets W_K d W_J is stable, and each subquotient is
/// HY_{K ∩ dJd^-1}^K(^d m) under w|b -> wd|b.
template <class K>
Report mackey_check(std::shared_ptr<const CoxeterGroup> g, GeneratorSet Kset, const OmegaModule<K>& m) {
  Report rep;
  const GeneratorSet J = m.J(), S = g->system().generators();
  const auto direct = std::make_shared<const ParabolicCosets>(g, J, S);
  const OmegaModule<K> full = induce(p_mu_table(direct, m));
  const std::size_t r = m.rank(), n = direct->size();
  const auto reps = g->double_coset_reps(Kset, J);

  // double coset of every z in D_J: z = w d with w in W_K and l(z) = l(w) + l(d)
  std::vector<std::size_t> coset_of(n, ParabolicCosets::kNone);
  std::vector<std::vector<std::size_t>> members(reps.size());
  for (std::size_t z = 0; z < n; ++z) {
    ElementId d = direct->rep(z);
    while (true) {
      const auto ld = g->left_descents(d) & Kset;
      if (ld.empty()) break;
      d = g->left_mult(*ld.min(), d);
    }
    const auto it = std::find(reps.begin(), reps.end(), d);
    if (!rep.check(it != reps.end(), [&] { return "no double coset representative for " + direct->name(z); })) return rep;
    coset_of[z] = static_cast<std::size_t>(it - reps.begin());
    members[coset_of[z]].push_back(z);
  }

  for (std::size_t di = 0; di < reps.size(); ++di) {
    const ElementId d = reps[di];
    const std::string dn = g->name(d);
    std::vector<bool> in_filtration(n * r, false);
    for (std::size_t z = 0; z < n; ++z)
      if (g->bruhat_leq(reps[coset_of[z]], d))
        for (std::size_t b = 0; b < r; ++b) in_filtration[z * r + b] = true;
    for (Generator s : Kset.to_vector()) {
      auto stable = [&](const SparseMatrix<K>& A) {
        for (std::size_t i = 0; i < A.rows(); ++i)
          for (const auto& [j, v] : A.row(i))
            if (in_filtration[j] && !in_filtration[i]) return false;
        return true;
      };
      rep.check(stable(full.E(s)), [&] { return "F<=" + dn + " not stable under E_" + generator_label(s); });
      for (int gm = -m.weight(s) + 1; gm < m.weight(s); ++gm)
        rep.check(stable(full.X(s, gm)), [&] {
          return "F<=" + dn + " not stable under X_{" + generator_label(s) + "," + std::to_string(gm) + "}";
        });
    }

    const OmegaModule<K> conj = conjugate_module(*g, d, m, Kset);
    const auto inner = std::make_shared<const ParabolicCosets>(g, conj.J(), Kset);
    const OmegaModule<K> sub = induce(p_mu_table(inner, conj));
    std::vector<std::size_t> rows;  // indices of the d-block of HY_J^S(m), in inner order
    bool ok = rep.check(inner->size() == members[di].size(), [&] {
      return "double coset of " + dn + " has " + std::to_string(members[di].size()) + " elements of D_J, expected " +
             std::to_string(inner->size());
    });
    for (std::size_t w = 0; ok && w < inner->size(); ++w) {
      const ElementId wd = g->mult(inner->rep(w), d);
      const std::size_t pos = direct->position(wd);
      ok = rep.check(pos != ParabolicCosets::kNone && coset_of[pos] == di &&
                         g->length(wd) == inner->length(w) + g->length(d),
                     [&] { return "w d is not a reduced element of D_J in the coset of " + dn; });
      for (std::size_t b = 0; ok && b < r; ++b) rows.push_back(pos * r + b);
    }
    if (!ok) continue;
    OmegaModule<K> quotient(m.system(), Kset, rows.size());
    for (Generator s : Kset.to_vector()) {
      quotient.set_E(s, full.E(s).select(rows, rows));
      for (int gm = -m.weight(s) + 1; gm < m.weight(s); ++gm) quotient.set_X(s, gm, full.X(s, gm).select(rows, rows));
    }
    rep.merge(compare_modules(quotient, sub, "subquotient at d=" + dn));
  }
  return rep;
}

/// The mu-factorisation identities for J ⊆ K ⊆ S.
template <class K>
Report mu_factorize_check(std::shared_ptr<const CoxeterGroup> g, GeneratorSet Kset, const OmegaModule<K>& m) {
  const GeneratorSet J = m.J(), S = g->system().generators();
  if (!J.is_subset_of(Kset)) throw std::invalid_argument("mu-factorize requires J to be a subset of K");
  Report rep;
  const auto cJS = std::make_shared<const ParabolicCosets>(g, J, S);
  const auto cJK = std::make_shared<const ParabolicCosets>(g, J, Kset);
  const auto cKS = std::make_shared<const ParabolicCosets>(g, Kset, S);
  const auto tJS = p_mu_table(cJS, m);
  const auto tJK = p_mu_table(cJK, m);
  const auto tKS = p_mu_table(cKS, induce(tJK));
  const std::size_t r = m.rank();
  const LaurentMatrix<K> zero(r, r);

  for (std::size_t z = 0; z < cJS->size(); ++z) {
    const auto [x, y] = g->factorize(J, Kset, cJS->rep(z));
    const std::size_t xi = cKS->position(x), yi = cJK->position(y);
    for (std::size_t w = 0; w < cJS->size(); ++w) {
      const auto [u, v] = g->factorize(J, Kset, cJS->rep(w));
      const std::size_t ui = cKS->position(u), vi = cJK->position(v);
      for (Generator s : S.to_vector()) {
        const LaurentMatrix<K>& actual = tJS.mu(w, z, s);
        LaurentMatrix<K> expect = zero;
        if (u == x) {
          const DeodharClass& cx = cKS->deodhar(xi, s);
          if (cx.tag == DeodharTag::zero) expect = tJK.mu(vi, yi, *cx.conj);
        } else if (g->bruhat_leq(u, x)) {
          expect = tKS.mu(ui, xi, s).block(vi * r, r, yi * r, r);
        }
        rep.check(actual == expect, [&] {
          return "mu^" + generator_label(s) + "(" + cJS->name(w) + "," + cJS->name(z) + ") != factorised value";
        });
      }
    }
  }
  return rep;
}

/// E_J = prod_{s in J} E_s prod_{s not in J} (1 - E_s) fixes 1|m_0 in HY_J^S(sign).
template <class K = Integer>
Report e_nonzero_check(std::shared_ptr<const CoxeterGroup> g, GeneratorSet J) {
  Report rep;
  const CoxeterSystem& sys = g->system();
  const OmegaModule<K> ind = induce_direct(g, sign_module<K>(sys, J), sys.generators());
  SparseMatrix<K> vec(ind.rank(), 1);
  vec.set(0, 0, K(1));
  SparseMatrix<K> image = vec;
  const auto I = SparseMatrix<K>::identity(ind.rank());
  for (Generator s : sys.generators().to_vector()) image = (J.contains(s) ? ind.E(s) : I - ind.E(s)) * image;
  rep.check(image == vec, [&] {
    std::string js;
    for (Generator s : J.to_vector()) js += generator_label(s);
    return "E_J does not fix 1|m_0 for J={" + js + "}";
  });
  return rep;
}

/// Direct sum of two modules over the same Omega_J.
template <class K>
OmegaModule<K> direct_sum(const OmegaModule<K>& a, const OmegaModule<K>& b) {
  if (a.J() != b.J()) throw std::invalid_argument("direct sum of modules over different J");
  OmegaModule<K> out(a.system(), a.J(), a.rank() + b.rank());
  auto sum = [&](const SparseMatrix<K>& A, const SparseMatrix<K>& B) {
    SparseMatrix<K> M(a.rank() + b.rank(), a.rank() + b.rank());
    M.add_block(0, 0, A);
    M.add_block(a.rank(), a.rank(), B);
    return M;
  };
  for (Generator s : a.J().to_vector()) {
    out.set_E(s, sum(a.E(s), b.E(s)));
    for (int g = -a.weight(s) + 1; g < a.weight(s); ++g) out.set_X(s, g, sum(a.X(s, g), b.X(s, g)));
  }
  return out;
}

/// For phi: a -> b Omega_J-linear (a rank(b) x rank(a) matrix), checks that
/// phi is a module map and that the blockwise map HY(a) -> HY(b) is one too.
template <class K>
Report functoriality_check(std::shared_ptr<const CoxeterGroup> g, const OmegaModule<K>& a, const OmegaModule<K>& b,
                           const SparseMatrix<K>& phi) {
  Report rep;
  auto linear = [&](const OmegaModule<K>& src, const OmegaModule<K>& dst, const SparseMatrix<K>& f,
                    const std::string& what) {
    for (Generator s : src.J().to_vector()) {
      rep.check(f * src.E(s) == dst.E(s) * f, [&] { return what + " does not commute with E_" + generator_label(s); });
      for (int gm = -src.weight(s) + 1; gm < src.weight(s); ++gm)
        rep.check(f * src.X(s, gm) == dst.X(s, gm) * f, [&] {
          return what + " does not commute with X_{" + generator_label(s) + "," + std::to_string(gm) + "}";
        });
    }
  };
  linear(a, b, phi, "phi");
  if (!rep.ok()) return rep;
  const GeneratorSet S = g->system().generators();
  const auto ia = induce_direct(g, a, S), ib = induce_direct(g, b, S);
  const std::size_t n = ia.rank() / a.rank();
  SparseMatrix<K> big(ib.rank(), ia.rank());
  for (std::size_t z = 0; z < n; ++z) big.add_block(z * b.rank(), z * a.rank(), phi);
  linear(ia, ib, big, "HY(phi)");
  return rep;
}

}  // namespace hy
