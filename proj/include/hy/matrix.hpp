#pragma once

// Row-major sparse matrices over an exact ring, and the Laurent-matrix helpers
// (bar, degree splitting, coefficient extraction) the recursions are written in.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hy/laurent.hpp"

namespace hy {

template <class T>
class SparseMatrix {
 public:
  using value_type = T;
  using Entry = std::pair<std::size_t, T>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, T(1));
    return m;
  }

  static SparseMatrix scalar(std::size_t n, const T& c) {
    SparseMatrix m(n, n);
    if (!hy::is_zero(c))
      for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, c);
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return data_.at(i); }

  T at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    const Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : T(0);
  }

  void set(std::size_t i, std::size_t j, T value) {
    check_index(i, j);
    Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    bool present = it != r.end() && it->first == j;
    if (hy::is_zero(value)) {
      if (present) r.erase(it);
    } else if (present) {
      it->second = std::move(value);
    } else {
      r.insert(it, Entry{j, std::move(value)});
    }
  }

  void add(std::size_t i, std::size_t j, const T& value) {
    if (hy::is_zero(value)) return;
    set(i, j, at(i, j) + value);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < data_.size(); ++i)
      for (const auto& [j, v] : data_[i])
        if (j != i) return false;
    return true;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t i = 0; i < data_.size(); ++i)
      for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    return t;
  }

  /// Adds `block` with its top-left corner at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const SparseMatrix& block) {
    if (r0 + block.rows() > rows() || c0 + block.cols() > cols_) throw std::out_of_range("add_block: block does not fit");
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (const auto& [j, v] : block.data_[i]) add(r0 + i, c0 + j, v);
  }

  SparseMatrix block(std::size_t r0, std::size_t nrows, std::size_t c0, std::size_t ncols) const {
    if (r0 + nrows > rows() || c0 + ncols > cols_) throw std::out_of_range("block: range exceeds matrix");
    SparseMatrix b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
      for (const auto& [j, v] : data_[r0 + i])
        if (j >= c0 && j < c0 + ncols) b.data_[i].emplace_back(j - c0, v);
    return b;
  }

  /// Submatrix on the given (ordered) row and column index lists.
  SparseMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t k = 0; k < col_idx.size(); ++k) col_pos.emplace(col_idx[k], k);
    SparseMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a) {
      for (const auto& [j, v] : data_.at(row_idx[a])) {
        auto it = col_pos.find(j);
        if (it != col_pos.end()) s.data_[a].emplace_back(it->second, v);
      }
      std::sort(s.data_[a].begin(), s.data_[a].end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    }
    return s;
  }

  template <class F>
  auto transform(F f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    SparseMatrix<U> out(rows(), cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      for (const auto& [j, v] : data_[i]) out.set(i, j, f(v));
    return out;
  }

  template <class S>
  SparseMatrix scaled(const S& s) const {
    return transform([&](const T& v) { return T(v * s); });
  }

  SparseMatrix& operator+=(const SparseMatrix& o) { return *this = *this + o; }
  SparseMatrix& operator-=(const SparseMatrix& o) { return *this = *this - o; }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }
  friend SparseMatrix operator-(const SparseMatrix& a) {
    return a.transform([](const T& v) { return T(-v); });
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows())
      throw std::invalid_argument("matrix product: dimension mismatch " + a.shape() + " * " + b.shape());
    SparseMatrix c(a.rows(), b.cols_);
    std::map<std::size_t, T> acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      acc.clear();
      for (const auto& [k, av] : a.data_[i])
        for (const auto& [j, bv] : b.data_[k]) {
          auto [it, inserted] = acc.try_emplace(j, av * bv);
          if (!inserted) it->second += av * bv;
        }
      for (auto& [j, v] : acc)
        if (!hy::is_zero(v)) c.data_[i].emplace_back(j, std::move(v));
    }
    return c;
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  std::string shape() const { return std::to_string(rows()) + "x" + std::to_string(cols_); }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape());
  }

  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: dimension mismatch " + a.shape() + " vs " + b.shape());
    SparseMatrix c(a.rows(), a.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Row& ra = a.data_[i];
      const Row& rb = b.data_[i];
      Row& rc = c.data_[i];
      std::size_t p = 0, q = 0;
      while (p < ra.size() || q < rb.size()) {
        if (q == rb.size() || (p < ra.size() && ra[p].first < rb[q].first)) {
          rc.push_back(ra[p++]);
        } else if (p == ra.size() || rb[q].first < ra[p].first) {
          rc.emplace_back(rb[q].first, subtract ? T(-rb[q].second) : rb[q].second);
          ++q;
        } else {
          T v = subtract ? T(ra[p].second - rb[q].second) : T(ra[p].second + rb[q].second);
          if (!hy::is_zero(v)) rc.emplace_back(ra[p].first, std::move(v));
          ++p;
          ++q;
        }
      }
    }
    return c;
  }

  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

template <class K = Integer>
using LaurentMatrix = SparseMatrix<LaurentPoly<K>>;

/// Embeds a k-matrix as a constant Laurent matrix.
template <class K>
LaurentMatrix<K> lift(const SparseMatrix<K>& m) {
  return m.transform([](const K& c) { return LaurentPoly<K>(c); });
}

/// Entrywise v -> v^-1.
template <class K>
LaurentMatrix<K> bar(const LaurentMatrix<K>& m) {
  return m.transform([](const LaurentPoly<K>& p) { return p.bar(); });
}

/// Multiplication by v^k.
template <class K>
LaurentMatrix<K> shifted(const LaurentMatrix<K>& m, int k) {
  return m.transform([k](const LaurentPoly<K>& p) { return p.shifted(k); });
}

/// Multiplication by the scalar Laurent polynomial f.
template <class K>
LaurentMatrix<K> times(const LaurentPoly<K>& f, const LaurentMatrix<K>& m) {
  return m.transform([&](const LaurentPoly<K>& p) { return f * p; });
}

/// The k-matrix of v^gamma coefficients.
template <class K>
SparseMatrix<K> coefficient(const LaurentMatrix<K>& m, int gamma) {
  SparseMatrix<K> c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, p] : m.row(i)) c.set(i, j, p.coeff(gamma));
  return c;
}

template <class K>
struct LaurentMatrixParts {
  LaurentMatrix<K> negative;
  LaurentMatrix<K> constant;
  LaurentMatrix<K> positive;
};

template <class K>
LaurentMatrixParts<K> split(const LaurentMatrix<K>& m) {
  LaurentMatrixParts<K> parts{LaurentMatrix<K>(m.rows(), m.cols()), LaurentMatrix<K>(m.rows(), m.cols()),
                              LaurentMatrix<K>(m.rows(), m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, p] : m.row(i)) {
      auto s = p.split();
      parts.negative.set(i, j, std::move(s.negative));
      parts.constant.set(i, j, std::move(s.constant));
      parts.positive.set(i, j, std::move(s.positive));
    }
  return parts;
}

template <class K>
LaurentMatrix<K> positive_part(const LaurentMatrix<K>& m) {
  return m.transform([](const LaurentPoly<K>& p) { return p.positive_part(); });
}

/// Smallest exponent occurring in any entry; `fallback` for the zero matrix.
template <class K>
int min_degree(const LaurentMatrix<K>& m, int fallback) {
  bool any = false;
  int d = fallback;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, p] : m.row(i)) {
      d = any ? std::min(d, p.min_degree()) : p.min_degree();
      any = true;
    }
  return d;
}

template <class K>
int max_degree(const LaurentMatrix<K>& m, int fallback) {
  bool any = false;
  int d = fallback;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, p] : m.row(i)) {
      d = any ? std::max(d, p.max_degree()) : p.max_degree();
      any = true;
    }
  return d;
}

/// True iff every entry is supported in strictly positive degrees.
template <class K>
bool strictly_positive(const LaurentMatrix<K>& m) {
  return m.is_zero() || min_degree(m, 1) > 0;
}

template <class K>
std::string to_string(const SparseMatrix<K>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m.at(i, j);
  }
  os << "]";
  return os.str();
}

}  // namespace hy
