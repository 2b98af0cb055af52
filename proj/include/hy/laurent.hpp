#pragma once

// Sparse Laurent polynomials k[v, v^-1] with exact coefficients.

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hy {

using Integer = std::int64_t;

template <class T>
bool is_zero(const T& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == T(0);
  }
}

template <class K = Integer>
class LaurentPoly {
 public:
  using coefficient_type = K;
  using TermMap = std::map<int, K>;

  struct Parts {
    LaurentPoly negative;
    LaurentPoly constant;
    LaurentPoly positive;
  };

  LaurentPoly() = default;
  LaurentPoly(K c) {  // NOLINT: constants convert implicitly
    if (!hy::is_zero(c)) terms_.emplace(0, std::move(c));
  }
  template <std::integral I>
    requires(!std::same_as<I, K>)
  LaurentPoly(I c) : LaurentPoly(K(c)) {}  // NOLINT

  /// c * v^exponent
  static LaurentPoly monomial(int exponent, K c = K(1)) {
    LaurentPoly p;
    if (!hy::is_zero(c)) p.terms_.emplace(exponent, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  K coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? K(0) : it->second;
  }

  int min_degree() const {
    if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
    return terms_.begin()->first;
  }
  int max_degree() const {
    if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
    return terms_.rbegin()->first;
  }

  /// The ring involution v -> v^-1.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.begin(), -e, c);
    return r;
  }

  bool is_bar_invariant() const { return *this == bar(); }

  Parts split() const {
    Parts parts;
    for (const auto& [e, c] : terms_) {
      auto& dst = e < 0 ? parts.negative : (e == 0 ? parts.constant : parts.positive);
      dst.terms_.emplace_hint(dst.terms_.end(), e, c);
    }
    return parts;
  }

  LaurentPoly positive_part() const { return split().positive; }

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const {
    if (k == 0) return *this;
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  void add_term(int exponent, const K& c) {
    if (hy::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (hy::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      K mag = c;
      bool negative = c < K(0);
      if (negative) mag = -c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      bool unit = mag == K(1);
      if (e == 0) {
        os << mag;
        continue;
      }
      if (!unit) os << mag;
      os << "v";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  TermMap terms_;
};

using Laurent = LaurentPoly<Integer>;

/// v^k as a Laurent polynomial.
template <class K = Integer>
LaurentPoly<K> vpow(int k) {
  return LaurentPoly<K>::monomial(k);
}

}  // namespace hy
