#pragma once

// The p/mu recursion over D_J, the induced Omega-module HY_J^K(M), the
// canonicalisation matrix c_M, and exact checks of the identities the tables
// must satisfy.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
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

/// Which left descent t of z drives step 2 of the p recursion.
enum class DescentChoice { smallest, largest };

struct TableOptions {
  unsigned jobs = 1;
  DescentChoice descent = DescentChoice::smallest;
  /// Skip the mu values whose generator lies outside this set (all by default).
  std::optional<GeneratorSet> mu_generators;
};

/// p_{x,z} and mu^s_{x,z} as Laurent matrices acting on a fixed Omega_J-module,
/// indexed by positions in D_J ∩ W_K.
template <class K = Integer>
class PMuTable {
 public:
  using LMatrix = LaurentMatrix<K>;
  /// Column z of the mu data, keyed by (s, x).
  using MuColumn = std::map<std::pair<Generator, std::size_t>, LMatrix>;

  PMuTable(std::shared_ptr<const ParabolicCosets> cosets, OmegaModule<K> module, bool with_p = true)
      : cosets_(std::move(cosets)),
        module_(std::move(module)),
        zero_(module_.rank(), module_.rank()),
        identity_(LMatrix::identity(module_.rank())),
        with_p_(with_p),
        p_(with_p ? cosets_->size() : 0),
        mu_(cosets_->size()) {
    if (module_.J() != cosets_->J()) throw std::invalid_argument("module and cosets refer to different J");
    for (std::size_t z = 0; z < p_.size(); ++z) p_[z].assign(z, zero_);
  }

  const ParabolicCosets& cosets() const { return *cosets_; }
  const std::shared_ptr<const ParabolicCosets>& cosets_ptr() const { return cosets_; }
  const OmegaModule<K>& module() const { return module_; }
  GeneratorSet J() const { return cosets_->J(); }
  GeneratorSet ambient() const { return cosets_->ambient(); }
  std::size_t size() const { return cosets_->size(); }
  std::size_t module_rank() const { return module_.rank(); }
  bool has_p() const { return with_p_; }
  /// True when the table covers only a length-bounded part of an infinite D_J.
  bool truncated() const { return !cosets_->complete(); }

  /// p_{x,z}; zero unless x <= z.
  const LMatrix& p(std::size_t x, std::size_t z) const {
    if (!with_p_) throw std::logic_error("table holds mu values only");
    if (x == z) return identity_;
    if (x > z) return zero_;
    return p_[z][x];
  }
  void set_p(std::size_t x, std::size_t z, LMatrix m) {
    if (x >= z) throw std::invalid_argument("p entries are stored for x < z only");
    p_[z][x] = std::move(m);
  }

  /// mu^s_{x,z} = sum_gamma v^gamma mu^{s,gamma}_{x,z}; zero when not stored.
  const LMatrix& mu(std::size_t x, std::size_t z, Generator s) const {
    const auto& col = mu_.at(z);
    auto it = col.find({s, x});
    return it == col.end() ? zero_ : it->second;
  }
  const MuColumn& mu_column(std::size_t z) const { return mu_.at(z); }
  void set_mu(std::size_t x, std::size_t z, Generator s, LMatrix m) {
    if (m.is_zero())
      mu_.at(z).erase({s, x});
    else
      mu_.at(z)[{s, x}] = std::move(m);
  }
  MuColumn& mutable_mu_column(std::size_t z) { return mu_.at(z); }

  /// mu^{s,gamma}_{x,z} as a k-matrix.
  SparseMatrix<K> mu_coefficient(std::size_t x, std::size_t z, Generator s, int gamma) const {
    return coefficient(mu(x, z, s), gamma);
  }

 private:
  std::shared_ptr<const ParabolicCosets> cosets_;
  OmegaModule<K> module_;
  LMatrix zero_;
  LMatrix identity_;
  bool with_p_;
  std::vector<std::vector<LMatrix>> p_;  // p_[z][x] for x < z
  std::vector<MuColumn> mu_;
};

namespace detail {

template <class K>
LaurentMatrix<K> scalar_matrix(std::size_t r, int exponent, K c = K(1)) {
  return LaurentMatrix<K>::scalar(r, LaurentPoly<K>::monomial(exponent, c));
}

/// R of the mu definition, in its four cases.
template <class K>
LaurentMatrix<K> mu_correction(const PMuTable<K>& t, std::size_t x, std::size_t z, Generator s, const DeodharClass& cx,
                               const DeodharClass& cz) {
  const auto& m = t.module();
  const auto& pxz = t.p(x, z);
  const int L = m.weight(s);
  LaurentMatrix<K> R(m.rank(), m.rank());
  if (cz.tag == DeodharTag::zero) R = pxz * m.iota_C(*cz.conj);
  if (cx.tag == DeodharTag::zero)
    R = R - m.iota_C(*cx.conj) * pxz;
  else
    R = R + times(vpow<K>(-L), pxz);
  return R;
}

/// sum over y with x < y < z of p_{x,y} mu^s_{y,z} (y <= z is implied by mu != 0).
template <class K>
LaurentMatrix<K> mu_tail(const PMuTable<K>& t, std::size_t x, std::size_t z, Generator s, bool include_x) {
  LaurentMatrix<K> sum(t.module_rank(), t.module_rank());
  const auto& col = t.mu_column(z);
  for (auto it = col.lower_bound({s, include_x ? x : x + 1}); it != col.end() && it->first.first == s; ++it) {
    const std::size_t y = it->first.second;
    if (!t.cosets().leq(x, y)) continue;
    sum = sum + t.p(x, y) * it->second;
  }
  return sum;
}

template <class K>
Generator pick_descent(const ParabolicCosets& c, std::size_t z, DescentChoice choice) {
  const auto d = (c.group().left_descents(c.rep(z)) & c.ambient()).to_vector();
  if (d.empty()) throw std::logic_error("element without left descent in the recursion");
  return choice == DescentChoice::smallest ? d.front() : d.back();
}

/// Computes column z (p_{.,z}, then mu_{.,z}); reads only columns of shorter elements.
template <class K>
void compute_column(PMuTable<K>& t, std::size_t z, const TableOptions& opt) {
  using LMatrix = LaurentMatrix<K>;
  const ParabolicCosets& c = t.cosets();
  const auto& m = t.module();

  if (t.has_p() && z > 0) {
    const Generator u = pick_descent<K>(c, z, opt.descent);
    const std::size_t uz = c.left_position(z, u);
    if (uz == ParabolicCosets::kNone) throw std::logic_error("t z left D_J in the recursion");
    const int Lu = m.weight(u);
    for (std::size_t x = z; x-- > 0;) {
      if (!c.leq(x, z)) continue;
      const DeodharClass& cx = c.deodhar(x, u);
      LMatrix p;
      switch (cx.tag) {
        case DeodharTag::plus:
          p = times(vpow<K>(Lu), t.p(c.left_position(x, u), z));
          p = -p;
          break;
        case DeodharTag::zero:
          p = m.iota_C(*cx.conj) * t.p(x, uz) - mu_tail(t, x, uz, u, true);
          break;
        case DeodharTag::minus:
          p = t.p(c.left_position(x, u), uz) - times(vpow<K>(-Lu), t.p(x, uz)) - mu_tail(t, x, uz, u, true);
          break;
      }
      if (!strictly_positive(p))
        throw std::logic_error("p_{" + c.name(x) + "," + c.name(z) + "} is not supported in positive degrees");
      t.set_p(x, z, std::move(p));
    }
  }

  for (Generator s : c.ambient().to_vector()) {
    if (opt.mu_generators && !opt.mu_generators->contains(s)) continue;
    const DeodharClass& cz = c.deodhar(z, s);
    if (cz.tag == DeodharTag::minus) continue;
    const int L = m.weight(s);
    for (std::size_t x = z; x-- > 0;) {
      const DeodharClass& cx = c.deodhar(x, s);
      if (cx.tag == DeodharTag::plus || !c.leq(x, z)) continue;
      const LMatrix alpha = -(mu_correction(t, x, z, s, cx, cz) + mu_tail(t, x, z, s, false));
      auto parts = split(alpha);
      LMatrix mu = parts.negative + parts.constant + bar(parts.negative);
      if (!mu.is_zero() && min_degree(mu, 0) <= -L)
        throw std::logic_error("mu^" + generator_label(s) + "_{" + c.name(x) + "," + c.name(z) +
                               "} has degree outside (-L(s), L(s))");
      t.set_mu(x, z, s, std::move(mu));
    }
  }
}

template <class K>
void run_recursion(PMuTable<K>& t, const TableOptions& opt) {
  const ParabolicCosets& c = t.cosets();
  std::size_t begin = 0;
  while (begin < c.size()) {
    std::size_t end = begin;
    while (end < c.size() && c.length(end) == c.length(begin)) ++end;
    parallel_for(end - begin, opt.jobs, [&](std::size_t i) { compute_column(t, begin + i, opt); });
    begin = end;
  }
}

}  // namespace detail

/// p and mu for D_J ∩ W_K acting on m (an Omega_J-module), by the direct
/// recursion. Columns of equal length are computed concurrently.
template <class K>
PMuTable<K> p_mu_table(std::shared_ptr<const ParabolicCosets> cosets, const OmegaModule<K>& m,
                       const TableOptions& opt = {}) {
  PMuTable<K> t(std::move(cosets), m);
  detail::run_recursion(t, opt);
  return t;
}

template <class K>
PMuTable<K> p_mu_table(std::shared_ptr<const CoxeterGroup> group, const OmegaModule<K>& m, GeneratorSet ambient,
                       const TableOptions& opt = {}) {
  return p_mu_table(std::make_shared<const ParabolicCosets>(std::move(group), m.J(), ambient), m, opt);
}

/// Ambient = all of S.
template <class K>
PMuTable<K> p_mu_table(std::shared_ptr<const CoxeterGroup> group, const OmegaModule<K>& m,
                       const TableOptions& opt = {}) {
  const GeneratorSet S = group->system().generators();
  return p_mu_table(std::move(group), m, S, opt);
}

/// HY_J^K(M): basis z|b at index pos(z) * rank(M) + b.
template <class K>
OmegaModule<K> induce(const PMuTable<K>& t) {
  using Matrix = SparseMatrix<K>;
  if (t.truncated()) throw std::invalid_argument("cannot induce from a length-truncated table");
  const ParabolicCosets& c = t.cosets();
  const auto& m = t.module();
  const std::size_t r = m.rank(), n = c.size();
  OmegaModule<K> out(m.system(), c.ambient(), n * r);
  const Matrix I = Matrix::identity(r);
  for (Generator s : c.ambient().to_vector()) {
    const int L = m.weight(s);
    Matrix E(n * r, n * r);
    std::vector<Matrix> X(2 * L - 1, Matrix(n * r, n * r));
    for (std::size_t z = 0; z < n; ++z) {
      const DeodharClass& cz = c.deodhar(z, s);
      switch (cz.tag) {
        case DeodharTag::plus:
          X[L - 1].add_block(c.left_position(z, s) * r, z * r, I);
          break;
        case DeodharTag::zero:
          E.add_block(z * r, z * r, m.E(*cz.conj));
          for (int g = -L + 1; g < L; ++g) X[g + L - 1].add_block(z * r, z * r, m.X(*cz.conj, g));
          break;
        case DeodharTag::minus:
          E.add_block(z * r, z * r, I);
          break;
      }
      if (cz.tag == DeodharTag::minus) continue;
      const auto& col = t.mu_column(z);
      for (auto it = col.lower_bound({s, 0}); it != col.end() && it->first.first == s; ++it)
        for (int g = -L + 1; g < L; ++g) X[g + L - 1].add_block(it->first.second * r, z * r, coefficient(it->second, g));
    }
    out.set_E(s, std::move(E));
    for (int g = -L + 1; g < L; ++g) out.set_X(s, g, std::move(X[g + L - 1]));
  }
  return out;
}

/// Vertex names "z|b" (or just "z" for rank-1 modules) of the induced module.
template <class K>
std::vector<std::string> induced_basis_names(const PMuTable<K>& t) {
  std::vector<std::string> names;
  for (std::size_t z = 0; z < t.size(); ++z)
    for (std::size_t b = 0; b < t.module_rank(); ++b)
      names.push_back(t.module_rank() == 1 ? t.cosets().name(z) : t.cosets().name(z) + "|" + std::to_string(b));
  return names;
}

/// The matrix of c_M: z|b -> sum_y T_y (x) p_{y,z} b, in the T_y (x) b basis.
template <class K>
LaurentMatrix<K> canonical_matrix(const PMuTable<K>& t) {
  const std::size_t r = t.module_rank(), n = t.size();
  LaurentMatrix<K> C(n * r, n * r);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t y = 0; y <= z; ++y)
      if (t.cosets().leq(y, z)) C.add_block(y * r, z * r, t.p(y, z));
  return C;
}

/// Action of T_s on Ind_{H_J}^H(M) in the T_x (x) b basis.
template <class K>
LaurentMatrix<K> induced_hecke_T(const ParabolicCosets& c, const OmegaModule<K>& m, Generator s) {
  const std::size_t r = m.rank(), n = c.size();
  const int L = m.weight(s);
  LaurentMatrix<K> T(n * r, n * r);
  const auto I = LaurentMatrix<K>::identity(r);
  for (std::size_t x = 0; x < n; ++x) {
    const DeodharClass& cx = c.deodhar(x, s);
    switch (cx.tag) {
      case DeodharTag::plus:
        T.add_block(c.left_position(x, s) * r, x * r, I);
        break;
      case DeodharTag::zero:
        T.add_block(x * r, x * r, m.iota_T(*cx.conj));
        break;
      case DeodharTag::minus:
        T.add_block(c.left_position(x, s) * r, x * r, I);
        T.add_block(x * r, x * r, LaurentMatrix<K>::scalar(r, vpow<K>(L) - vpow<K>(-L)));
        break;
    }
  }
  return T;
}

/// c(omega(C_s) z|b) == C_s c(z|b) for every s and every basis vector.
template <class K>
Report verify_h_linearity(const PMuTable<K>& t, const OmegaModule<K>& induced) {
  Report rep;
  const ParabolicCosets& c = t.cosets();
  const auto C = canonical_matrix(t);
  const std::size_t N = C.rows();
  for (Generator s : c.ambient().to_vector()) {
    const auto Cs_ind =
        induced_hecke_T(c, t.module(), s) - LaurentMatrix<K>::scalar(N, vpow<K>(t.module().weight(s)));
    const auto lhs = (C * induced.iota_C(s)).transpose();
    const auto rhs = (Cs_ind * C).transpose();
    for (std::size_t col = 0; col < N; ++col)
      rep.check(lhs.row(col) == rhs.row(col), [&] {
        return "c(C_" + generator_label(s) + " " + c.name(col / t.module_rank()) + "|" +
               std::to_string(col % t.module_rank()) + ") != C_" + generator_label(s) + " c(...)";
      });
  }
  return rep;
}

template <class K>
Report verify_h_linearity(const PMuTable<K>& t) {
  return verify_h_linearity(t, induce(t));
}

/// Every identity a p/mu table must satisfy: p normalisation and positivity,
/// mu support, bar symmetry, degree range, e-mu relations, and the four-case
/// recurrence linking p and mu.
template <class K>
Report check_table_invariants(const PMuTable<K>& t) {
  using LMatrix = LaurentMatrix<K>;
  Report rep;
  const ParabolicCosets& c = t.cosets();
  const auto& m = t.module();
  const std::size_t n = t.size(), r = m.rank();
  const LMatrix zero(r, r);
  auto pair_name = [&](std::size_t x, std::size_t z) { return "(" + c.name(x) + "," + c.name(z) + ")"; };

  if (t.has_p())
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t x = 0; x < z; ++x) {
        const LMatrix& p = t.p(x, z);
        if (!c.leq(x, z))
          rep.check(p.is_zero(), [&] { return "p" + pair_name(x, z) + " nonzero although x is not below z"; });
        else
          rep.check(strictly_positive(p), [&] { return "p" + pair_name(x, z) + " not in positive degrees"; });
      }

  for (std::size_t z = 0; z < n; ++z)
    for (const auto& [key, mu] : t.mu_column(z)) {
      const auto [s, x] = key;
      const std::string tag = "mu^" + generator_label(s) + pair_name(x, z);
      const DeodharClass& cx = c.deodhar(x, s);
      const DeodharClass& cz = c.deodhar(z, s);
      rep.check(c.less(x, z) && cz.tag != DeodharTag::minus && cx.tag != DeodharTag::plus,
                [&] { return tag + " violates the support condition"; });
      rep.check(bar(mu) == mu, [&] { return tag + " is not bar-invariant"; });
      rep.check(strictly_positive(times(vpow<K>(m.weight(s)), mu)), [&] { return tag + ": v_s mu not positive"; });
      if (cx.tag == DeodharTag::zero)
        rep.check(lift(m.E(*cx.conj)) * mu == mu, [&] { return tag + ": E_{s^x} mu != mu"; });
      if (cz.tag == DeodharTag::zero)
        rep.check((mu * lift(m.E(*cz.conj))).is_zero(), [&] { return tag + ": mu E_{s^z} != 0"; });
    }

  if (!t.has_p()) return rep;
  for (Generator s : c.ambient().to_vector())
    for (std::size_t z = 0; z < n; ++z) {
      const DeodharClass& cz = c.deodhar(z, s);
      if (cz.tag == DeodharTag::plus && c.left_position(z, s) == ParabolicCosets::kNone) continue;
      const int L = m.weight(s);
      for (std::size_t x = 0; x < n; ++x) {
        const DeodharClass& cx = c.deodhar(x, s);
        if (cx.tag != DeodharTag::zero && c.left_position(x, s) == ParabolicCosets::kNone) continue;
        LMatrix lhs;
        switch (cx.tag) {
          case DeodharTag::plus:
            lhs = t.p(c.left_position(x, s), z) - times(vpow<K>(L), t.p(x, z));
            break;
          case DeodharTag::zero:
            lhs = m.iota_C(*cx.conj) * t.p(x, z);
            break;
          case DeodharTag::minus:
            lhs = t.p(c.left_position(x, s), z) - times(vpow<K>(-L), t.p(x, z));
            break;
        }
        LMatrix rhs;
        switch (cz.tag) {
          case DeodharTag::plus:
            rhs = t.p(x, c.left_position(z, s)) + detail::mu_tail(t, x, z, s, true);
            break;
          case DeodharTag::zero:
            rhs = t.p(x, z) * m.iota_C(*cz.conj) + detail::mu_tail(t, x, z, s, true);
            break;
          case DeodharTag::minus:
            rhs = times(-(vpow<K>(L) + vpow<K>(-L)), t.p(x, z));
            break;
        }
        rep.check(lhs == rhs, [&] { return "p/mu recurrence fails for s=" + generator_label(s) + " at " + pair_name(x, z); });
        if (cz.tag == DeodharTag::zero) {
          const LMatrix e = lift(m.E(*cz.conj));
          LMatrix expect;
          switch (cx.tag) {
            case DeodharTag::plus:
              expect = -times(vpow<K>(L), t.p(c.left_position(x, s), z) * e);
              break;
            case DeodharTag::zero:
              expect = lift(m.E(*cx.conj)) * t.p(x, z) * e;
              break;
            case DeodharTag::minus:
              expect = -times(vpow<K>(-L), t.p(c.left_position(x, s), z) * e);
              break;
          }
          rep.check(t.p(x, z) * e == expect, [&] { return "p e relation fails for s=" + generator_label(s) + " at " + pair_name(x, z); });
        }
      }
    }
  return rep;
}

}  // namespace hy
