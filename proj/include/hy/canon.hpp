#pragma once

// Canonicalisation of a graded shadow: given the unitriangular blocks rho_{x,z}
// of an involution over a finite poset, find the unique positive unitriangular
// pi with pi_{x,z} = sum_{x<=y<=z} rho_{x,y} bar(pi_{y,z}). Instantiated with the
// Hecke data of an induced module, this recomputes the p-table from
// R-polynomials without using the mu recursion.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hy/coxeter.hpp"
#include "hy/matrix.hpp"
#include "hy/parallel.hpp"
#include "hy/report.hpp"
#include "hy/wgraph.hpp"

namespace hy {

/// A finite poset graded by k-modules of a common rank, with the blocks of an
/// involution that is unitriangular with respect to the order.
template <class K = Integer>
class GradedShadow {
 public:
  virtual ~GradedShadow() = default;
  /// Elements are 0..size()-1, numbered compatibly with the order (x < z implies x < z as integers).
  virtual std::size_t size() const = 0;
  virtual bool leq(std::size_t x, std::size_t z) const = 0;
  virtual std::size_t block_rank() const = 0;
  /// The (x, z) block of the involution; zero unless x <= z, identity if x == z.
  virtual const LaurentMatrix<K>& rho(std::size_t x, std::size_t z) const = 0;
  virtual std::string name(std::size_t x) const { return std::to_string(x); }
};

/// Upper-triangular block table indexed by a shadow's poset.
template <class K = Integer>
class BlockTable {
 public:
  BlockTable(std::size_t n, std::size_t rank)
      : n_(n), zero_(rank, rank), identity_(LaurentMatrix<K>::identity(rank)), cols_(n) {
    for (std::size_t z = 0; z < n; ++z) cols_[z].assign(z, zero_);
  }
  std::size_t size() const { return n_; }
  const LaurentMatrix<K>& at(std::size_t x, std::size_t z) const {
    if (x == z) return identity_;
    if (x > z) return zero_;
    return cols_[z][x];
  }
  void set(std::size_t x, std::size_t z, LaurentMatrix<K> m) { cols_.at(z).at(x) = std::move(m); }

 private:
  std::size_t n_;
  LaurentMatrix<K> zero_, identity_;
  std::vector<std::vector<LaurentMatrix<K>>> cols_;
};

/// T-basis coefficients of iota(T_z) = T_{z^-1}^{-1}: the map w -> R_{w,z}.
template <class K = Integer>
std::map<ElementId, LaurentPoly<K>> iota_expand(const CoxeterGroup& group, ElementId z) {
  std::map<ElementId, LaurentPoly<K>> h{{group.identity(), LaurentPoly<K>(K(1))}};
  for (Generator s : group.element(z).word()) {
    const int L = group.system().weight(s);
    const LaurentPoly<K> q = vpow<K>(L) - vpow<K>(-L);
    std::map<ElementId, LaurentPoly<K>> next;
    auto add = [&](ElementId w, const LaurentPoly<K>& c) {
      auto [it, fresh] = next.try_emplace(w, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    for (const auto& [w, c] : h) {
      // h * (T_s - q)
      const ElementId ws = group.right_mult(w, s);
      if (ws == kNoElement) throw OutsideEnumeration("interval below " + group.name(z) + " is not enumerated");
      add(ws, c);
      if (group.length(ws) < group.length(w)) add(w, c * q);
      add(w, -(c * q));
    }
    h = std::move(next);
  }
  return h;
}

/// The Hecke shadow of Ind_{H_J}^{H_K}(M): poset D_J ∩ W_K, blocks
/// r_{x,z} = sum_{y in W_J} R_{xy,z} iota_M(T_y).
template <class K = Integer>
class HeckeShadow : public GradedShadow<K> {
 public:
  HeckeShadow(std::shared_ptr<const ParabolicCosets> cosets, const OmegaModule<K>& m, unsigned jobs = 1)
      : cosets_(std::move(cosets)), table_(cosets_->size(), m.rank()) {
    const ParabolicCosets& c = *cosets_;
    const CoxeterGroup& g = c.group();
    if (m.J() != c.J()) throw std::invalid_argument("module and cosets refer to different J");
    std::map<ElementId, LaurentMatrix<K>> hecke;
    for (ElementId y : g.parabolic_elements(c.J())) hecke.emplace(y, hecke_matrix(m, g, y));
    parallel_for(c.size(), jobs, [&](std::size_t z) {
      std::vector<LaurentMatrix<K>> col(z, LaurentMatrix<K>(m.rank(), m.rank()));
      for (const auto& [w, R] : iota_expand<K>(g, c.rep(z))) {
        const auto [x, y] = g.factorize(GeneratorSet{}, c.J(), w);
        const std::size_t xi = c.position(x);
        if (xi == ParabolicCosets::kNone) throw std::logic_error("coset representative outside the shadow");
        if (xi == z) {
          if (!(y == g.identity() && R == LaurentPoly<K>(K(1))))
            throw std::logic_error("leading coefficient of iota(T_z) is not T_z");
          continue;
        }
        if (xi > z) throw std::logic_error("iota(T_z) is not triangular");
        col[xi] = col[xi] + times(R, hecke.at(y));
      }
      for (std::size_t x = 0; x < z; ++x) table_.set(x, z, std::move(col[x]));
    });
  }

  std::size_t size() const override { return cosets_->size(); }
  bool leq(std::size_t x, std::size_t z) const override { return cosets_->leq(x, z); }
  std::size_t block_rank() const override { return table_.at(0, 0).rows(); }
  const LaurentMatrix<K>& rho(std::size_t x, std::size_t z) const override { return table_.at(x, z); }
  std::string name(std::size_t x) const override { return cosets_->name(x); }
  const ParabolicCosets& cosets() const { return *cosets_; }

 private:
  std::shared_ptr<const ParabolicCosets> cosets_;
  BlockTable<K> table_;
};

/// sum_{x<=y<=z} rho_{x,y} bar(rho_{y,z}) == delta_{x,z}: the involution squares to 1.
template <class K>
Report check_involution(const GradedShadow<K>& sh) {
  Report rep;
  const std::size_t n = sh.size(), r = sh.block_rank();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x <= z; ++x) {
      if (!sh.leq(x, z)) {
        rep.check(sh.rho(x, z).is_zero(), [&] { return "rho(" + sh.name(x) + "," + sh.name(z) + ") outside the order"; });
        continue;
      }
      LaurentMatrix<K> sum(r, r);
      for (std::size_t y = x; y <= z; ++y)
        if (sh.leq(x, y) && sh.leq(y, z)) sum = sum + sh.rho(x, y) * bar(sh.rho(y, z));
      const auto expect = x == z ? LaurentMatrix<K>::identity(r) : LaurentMatrix<K>(r, r);
      rep.check(sum == expect, [&] { return "rho composition fails at (" + sh.name(x) + "," + sh.name(z) + ")"; });
    }
  return rep;
}

/// The unique pi: pi_{z,z} = 1, pi_{x,z} strictly positive for x < z, and
/// pi_{x,z} = sum_{x<=y<=z} rho_{x,y} bar(pi_{y,z}). Columns are independent.
template <class K>
BlockTable<K> pi_recursion(const GradedShadow<K>& sh, unsigned jobs = 1) {
  const std::size_t n = sh.size(), r = sh.block_rank();
  BlockTable<K> pi(n, r);
  parallel_for(n, jobs, [&](std::size_t z) {
    std::vector<LaurentMatrix<K>> col(z + 1, LaurentMatrix<K>(r, r));
    col[z] = LaurentMatrix<K>::identity(r);
    for (std::size_t x = z; x-- > 0;) {
      if (!sh.leq(x, z)) continue;
      LaurentMatrix<K> alpha(r, r);
      for (std::size_t y = x + 1; y <= z; ++y)
        if (sh.leq(x, y) && sh.leq(y, z)) alpha = alpha + sh.rho(x, y) * bar(col[y]);
      const auto parts = split(alpha);
      if (!(alpha == -bar(alpha)) || !parts.constant.is_zero())
        throw std::logic_error("canonicalisation: alpha(" + sh.name(x) + "," + sh.name(z) + ") is not antisymmetric");
      col[x] = parts.positive;
    }
    for (std::size_t x = 0; x < z; ++x) pi.set(x, z, std::move(col[x]));
  });
  return pi;
}

/// Residual of the fixed-point equation for a candidate table.
template <class K>
Report check_fixed_point(const GradedShadow<K>& sh, const BlockTable<K>& pi) {
  Report rep;
  const std::size_t n = sh.size(), r = sh.block_rank();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x <= z; ++x) {
      if (!sh.leq(x, z)) continue;
      LaurentMatrix<K> sum(r, r);
      for (std::size_t y = x; y <= z; ++y)
        if (sh.leq(x, y) && sh.leq(y, z)) sum = sum + sh.rho(x, y) * bar(pi.at(y, z));
      rep.check(sum == pi.at(x, z), [&] { return "fixed point fails at (" + sh.name(x) + "," + sh.name(z) + ")"; });
      if (x < z)
        rep.check(strictly_positive(pi.at(x, z)),
                  [&] { return "pi(" + sh.name(x) + "," + sh.name(z) + ") not in positive degrees"; });
    }
  return rep;
}

/// Assembles a block table into one square Laurent matrix.
template <class K>
LaurentMatrix<K> block_matrix(const GradedShadow<K>& sh, const BlockTable<K>& t) {
  const std::size_t n = sh.size(), r = sh.block_rank();
  LaurentMatrix<K> M(n * r, n * r);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x <= z; ++x)
      if (sh.leq(x, z)) M.add_block(x * r, z * r, t.at(x, z));
  return M;
}

template <class K>
LaurentMatrix<K> rho_matrix(const GradedShadow<K>& sh) {
  const std::size_t n = sh.size(), r = sh.block_rank();
  LaurentMatrix<K> M(n * r, n * r);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x <= z; ++x)
      if (sh.leq(x, z)) M.add_block(x * r, z * r, sh.rho(x, z));
  return M;
}

/// The shadow obtained by restricting to a subset of the poset (an order ideal
/// for the restriction to be a shadow again), renumbered in increasing order.
template <class K>
class RestrictedShadow : public GradedShadow<K> {
 public:
  RestrictedShadow(const GradedShadow<K>& base, std::vector<std::size_t> subset)
      : base_(base), idx_(std::move(subset)) {}
  std::size_t size() const override { return idx_.size(); }
  bool leq(std::size_t x, std::size_t z) const override { return base_.leq(idx_[x], idx_[z]); }
  std::size_t block_rank() const override { return base_.block_rank(); }
  const LaurentMatrix<K>& rho(std::size_t x, std::size_t z) const override { return base_.rho(idx_[x], idx_[z]); }
  std::string name(std::size_t x) const override { return base_.name(idx_[x]); }

 private:
  const GradedShadow<K>& base_;
  std::vector<std::size_t> idx_;
};

}  // namespace hy
