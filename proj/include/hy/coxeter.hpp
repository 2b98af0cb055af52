#pragma once

// Coxeter systems, canonical (ShortLex-minimal) reduced words, and the
// combinatorics of parabolic cosets: lengths, descents, Bruhat order,
// distinguished coset representatives and Deodhar's partition.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hy {

using Generator = int;  // 0-based; external labels are 1-based

/// Bond value encoding m_st = infinity.
inline constexpr int kInfiniteBond = 0;

class GeneratorSet {
 public:
  static constexpr int kMaxRank = 64;

  constexpr GeneratorSet() = default;
  GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator s : gens) insert(s);
  }
  static GeneratorSet from_bits(std::uint64_t bits) {
    GeneratorSet g;
    g.bits_ = bits;
    return g;
  }
  static GeneratorSet all(int rank) {
    return from_bits(rank >= kMaxRank ? ~std::uint64_t{0} : ((std::uint64_t{1} << rank) - 1));
  }
  template <class Range>
  static GeneratorSet from_range(const Range& r) {
    GeneratorSet g;
    for (Generator s : r) g.insert(s);
    return g;
  }

  bool contains(Generator s) const { return s >= 0 && s < kMaxRank && ((bits_ >> s) & 1U); }
  void insert(Generator s) {
    if (s < 0 || s >= kMaxRank) throw std::out_of_range("generator index out of range");
    bits_ |= std::uint64_t{1} << s;
  }
  void erase(Generator s) { bits_ &= ~(std::uint64_t{1} << s); }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  std::uint64_t bits() const { return bits_; }
  bool is_subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::optional<Generator> min() const {
    if (!bits_) return std::nullopt;
    return std::countr_zero(bits_);
  }

  std::vector<Generator> to_vector() const {
    std::vector<Generator> v;
    for (std::uint64_t b = bits_; b; b &= b - 1) v.push_back(std::countr_zero(b));
    return v;
  }

  friend GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return from_bits(a.bits_ | b.bits_); }
  friend GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return from_bits(a.bits_ & b.bits_); }
  friend GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend bool operator==(GeneratorSet, GeneratorSet) = default;
  friend auto operator<=>(GeneratorSet a, GeneratorSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// 1-based label for an external name ("1".."n").
inline std::string generator_label(Generator s) { return std::to_string(s + 1); }

class CoxeterSystem {
 public:
  /// Validates the Coxeter matrix (0 encodes infinity) and the weight function.
  static CoxeterSystem create(std::vector<std::vector<int>> matrix, std::vector<int> weights) {
    const std::size_t n = matrix.size();
    if (n == 0) throw std::invalid_argument("Coxeter matrix must have positive rank");
    if (n > static_cast<std::size_t>(GeneratorSet::kMaxRank)) throw std::invalid_argument("rank exceeds 64");
    if (weights.size() != n)
      throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
    for (std::size_t s = 0; s < n; ++s) {
      if (matrix[s].size() != n) throw std::invalid_argument("Coxeter matrix is not square");
      if (matrix[s][s] != 1) throw std::invalid_argument("diagonal entry m_ss must be 1 (s = " + generator_label(s) + ")");
      if (weights[s] < 1) throw std::invalid_argument("weight L(" + generator_label(s) + ") must be positive");
    }
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        const int m = matrix[s][t];
        if (m != matrix[t][s]) throw std::invalid_argument("Coxeter matrix is not symmetric");
        if (m != kInfiniteBond && m < 2)
          throw std::invalid_argument("off-diagonal entry m_st must be >= 2 or 0 (infinity)");
        if (m != kInfiniteBond && m % 2 == 1 && weights[s] != weights[t])
          throw std::invalid_argument("odd bond between " + generator_label(s) + " and " + generator_label(t) +
                                      " requires equal weights");
      }
    CoxeterSystem sys;
    sys.matrix_ = std::move(matrix);
    sys.weights_ = std::move(weights);
    return sys;
  }

  /// Equal-parameter system.
  static CoxeterSystem create(std::vector<std::vector<int>> matrix) {
    std::vector<int> w(matrix.size(), 1);
    return create(std::move(matrix), std::move(w));
  }

  int rank() const { return static_cast<int>(matrix_.size()); }
  int bond(Generator s, Generator t) const { return matrix_.at(s).at(t); }
  bool infinite_bond(Generator s, Generator t) const { return bond(s, t) == kInfiniteBond; }
  int weight(Generator s) const { return weights_.at(s); }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  const std::vector<int>& weights() const { return weights_; }
  GeneratorSet generators() const { return GeneratorSet::all(rank()); }

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  CoxeterSystem() = default;
  std::vector<std::vector<int>> matrix_;
  std::vector<int> weights_;
};

/// A group element, carried by its ShortLex-minimal reduced word.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Generator> canonical_word) : word_(std::move(canonical_word)) {}

  const std::vector<Generator>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  /// "e" for the identity, otherwise the 1-based letters ("21"), dot-separated beyond rank 9.
  std::string name(int rank = 9) const {
    if (word_.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (rank > 9 && i) s += '.';
      s += generator_label(word_[i]);
    }
    return s;
  }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<Generator> word_;
};

/// Parses an element name produced by Element::name.
inline std::vector<Generator> parse_word(const std::string& name, int rank) {
  std::vector<Generator> w;
  if (name == "e" || name.empty()) return w;
  auto push = [&](const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed element name '" + name + "'");
    int g = std::stoi(tok);
    if (g < 1 || g > rank) throw std::invalid_argument("generator label " + tok + " out of range in '" + name + "'");
    w.push_back(g - 1);
  };
  if (rank > 9 || name.find('.') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      auto dot = name.find('.', start);
      push(name.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : name) push(std::string(1, c));
  }
  return w;
}

/// ShortLex-minimal reduced word by Tits' rewriting: explore the braid-move
/// class, cancel any adjacent pair ss that appears, repeat.
inline std::vector<Generator> tits_normal_form(const CoxeterSystem& sys, std::vector<Generator> word) {
  for (Generator s : word)
    if (s < 0 || s >= sys.rank()) throw std::out_of_range("generator index " + std::to_string(s) + " out of range");
  while (true) {
    std::set<std::vector<Generator>> seen{word};
    std::deque<std::vector<Generator>> queue{word};
    std::optional<std::vector<Generator>> reducible;
    while (!queue.empty() && !reducible) {
      std::vector<Generator> w = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          reducible = std::move(w);
          break;
        }
        const Generator s = w[i], t = w[i + 1];
        const int m = sys.bond(s, t);
        if (m == kInfiniteBond || i + m > w.size()) continue;
        bool alternating = true;
        for (int k = 0; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 ? t : s);
        if (!alternating) continue;
        std::vector<Generator> moved = w;
        for (int k = 0; k < m; ++k) moved[i + k] = (k % 2 ? s : t);
        if (seen.insert(moved).second) queue.push_back(std::move(moved));
      }
    }
    if (reducible) {
      word = std::move(*reducible);
      continue;
    }
    return *seen.begin();  // all words in the class have equal length; set order is lexicographic
  }
}

enum class DeodharTag { plus, zero, minus };

/// Which of the three cases of Deodhar's lemma applies to (s, w) for w in D_J.
struct DeodharClass {
  DeodharTag tag = DeodharTag::plus;
  std::optional<Generator> conj;  // t in J with sw = wt, only for tag zero

  friend bool operator==(const DeodharClass&, const DeodharClass&) = default;
};

using ElementId = std::size_t;
inline constexpr ElementId kNoElement = std::numeric_limits<ElementId>::max();

/// Thrown when an operation needs elements beyond the enumerated length cutoff.
class OutsideEnumeration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The elements of W of length <= cutoff (all of W when finite and no cutoff is
/// given), numbered in (length, ShortLex) order, with multiplication tables by
/// generators and the Bruhat order. Immutable after construction.
class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultElementLimit = 100000;

  explicit CoxeterGroup(CoxeterSystem system, std::optional<int> max_length = std::nullopt,
                        std::size_t element_limit = kDefaultElementLimit)
      : system_(std::move(system)), max_length_(max_length) {
    enumerate(element_limit);
    build_left_table();
    build_bruhat();
  }

  const CoxeterSystem& system() const { return system_; }
  int rank() const { return system_.rank(); }
  /// True iff W is finite and fully enumerated.
  bool is_complete() const { return complete_; }
  std::optional<int> max_length() const { return max_length_; }
  std::size_t size() const { return elements_.size(); }
  ElementId identity() const { return 0; }

  const Element& element(ElementId w) const { return elements_.at(w); }
  std::string name(ElementId w) const { return elements_.at(w).name(rank()); }

  std::optional<ElementId> find(const Element& x) const {
    auto it = index_.find(x.word());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  ElementId id_of(const Element& x) const {
    auto id = find(x);
    if (!id) throw OutsideEnumeration("element " + x.name(rank()) + " is not in the enumerated range");
    return *id;
  }
  ElementId id_of_word(std::span<const Generator> word) const { return id_of(normalize(word)); }
  ElementId generator(Generator s) const { return right_mult(identity(), s); }

  /// Canonical form of an arbitrary word over the generators.
  Element normalize(std::span<const Generator> word) const {
    ElementId x = identity();
    for (Generator s : word) {
      if (s < 0 || s >= rank()) throw std::out_of_range("generator index " + std::to_string(s) + " out of range");
      x = right_[x][s];
      if (x == kNoElement) return Element(tits_normal_form(system_, std::vector<Generator>(word.begin(), word.end())));
    }
    return elements_[x];
  }

  int length(ElementId w) const { return elements_.at(w).length(); }
  /// L(w), the weight function extended additively along reduced words.
  int weight(ElementId w) const {
    int l = 0;
    for (Generator s : elements_.at(w).word()) l += system_.weight(s);
    return l;
  }

  /// w*s, or kNoElement when it lies beyond the cutoff.
  ElementId right_mult(ElementId w, Generator s) const { return right_.at(w).at(s); }
  /// s*w, or kNoElement when it lies beyond the cutoff.
  ElementId left_mult(Generator s, ElementId w) const { return left_.at(w).at(s); }

  GeneratorSet right_descents(ElementId w) const {
    GeneratorSet d;
    for (Generator s = 0; s < rank(); ++s) {
      ElementId ws = right_[w][s];
      if (ws != kNoElement && length(ws) < length(w)) d.insert(s);
    }
    return d;
  }
  GeneratorSet left_descents(ElementId w) const {
    GeneratorSet d;
    for (Generator s = 0; s < rank(); ++s) {
      ElementId sw = left_[w][s];
      if (sw != kNoElement && length(sw) < length(w)) d.insert(s);
    }
    return d;
  }

  ElementId mult(ElementId x, ElementId y) const {
    for (Generator s : elements_.at(y).word()) {
      x = right_[x][s];
      if (x == kNoElement) throw OutsideEnumeration("product leaves the enumerated range");
    }
    return x;
  }
  Element mult(const Element& x, const Element& y) const {
    std::vector<Generator> w = x.word();
    w.insert(w.end(), y.word().begin(), y.word().end());
    return normalize(w);
  }

  ElementId inverse(ElementId w) const {
    const auto& word = elements_.at(w).word();
    std::vector<Generator> rev(word.rbegin(), word.rend());
    return id_of_word(rev);
  }

  bool bruhat_leq(ElementId x, ElementId z) const {
    if (x > z) return false;  // ids are sorted by length
    return bruhat_.at(z)[x];
  }
  bool bruhat_less(ElementId x, ElementId z) const { return x != z && bruhat_leq(x, z); }

  bool in_parabolic(ElementId w, GeneratorSet J) const {
    return std::all_of(elements_.at(w).word().begin(), elements_.at(w).word().end(),
                       [&](Generator s) { return J.contains(s); });
  }

  std::vector<ElementId> parabolic_elements(GeneratorSet J) const {
    std::vector<ElementId> out;
    for (ElementId w = 0; w < size(); ++w)
      if (in_parabolic(w, J)) out.push_back(w);
    return out;
  }

  /// w has no right descent in J (l(wu) > l(w) for all u in J).
  bool is_min_coset_rep(ElementId w, GeneratorSet J) const { return (right_descents(w) & J).empty(); }

  /// D_J within the enumerated range, sorted by (length, ShortLex).
  std::vector<ElementId> min_coset_reps(GeneratorSet J) const {
    check_subset(J);
    std::vector<ElementId> out;
    for (ElementId w = 0; w < size(); ++w)
      if (is_min_coset_rep(w, J)) out.push_back(w);
    return out;
  }

  DeodharClass deodhar_class(GeneratorSet J, Generator s, ElementId w) const {
    check_subset(J);
    if (s < 0 || s >= rank()) throw std::out_of_range("generator index out of range");
    if (!is_min_coset_rep(w, J)) throw std::invalid_argument(name(w) + " is not a minimal coset representative");
    const ElementId sw = left_mult(s, w);
    if (sw == kNoElement) throw OutsideEnumeration("s*" + name(w) + " lies beyond the length cutoff");
    if (length(sw) < length(w)) return {DeodharTag::minus, std::nullopt};
    if (is_min_coset_rep(sw, J)) return {DeodharTag::plus, std::nullopt};
    for (Generator t : J.to_vector())
      if (right_mult(w, t) == sw) return {DeodharTag::zero, t};
    throw std::logic_error("Deodhar classification failed for " + name(w));
  }

  /// D_{KJ}: minimal (W_K, W_J) double coset representatives.
  std::vector<ElementId> double_coset_reps(GeneratorSet K, GeneratorSet J) const {
    check_subset(K);
    check_subset(J);
    std::vector<ElementId> out;
    for (ElementId w = 0; w < size(); ++w)
      if ((right_descents(w) & J).empty() && (left_descents(w) & K).empty()) out.push_back(w);
    return out;
  }

  /// For J subset of K and w in D_J: the unique (x, y) with x in D_K, y in D_J ∩ W_K, w = xy.
  std::pair<ElementId, ElementId> factorize(GeneratorSet J, GeneratorSet K, ElementId w) const {
    if (!J.is_subset_of(K)) throw std::invalid_argument("factorize requires J to be a subset of K");
    if (!is_min_coset_rep(w, J)) throw std::invalid_argument(name(w) + " is not in D_J");
    ElementId x = w;
    std::vector<Generator> tail;
    while (true) {
      auto d = right_descents(x) & K;
      if (d.empty()) break;
      Generator t = *d.min();
      x = right_mult(x, t);
      tail.push_back(t);
    }
    std::vector<Generator> yword(tail.rbegin(), tail.rend());
    return {x, id_of_word(yword)};
  }

  /// d^-1 s d when it is a simple generator.
  std::optional<Generator> conjugate_generator(ElementId d, Generator s) const {
    ElementId c = mult(inverse(d), left_mult(s, d));
    if (length(c) != 1) return std::nullopt;
    return elements_[c].word()[0];
  }

 private:
  void check_subset(GeneratorSet J) const {
    if (!J.is_subset_of(system_.generators())) throw std::out_of_range("generator subset exceeds the rank");
  }

  // Level-by-level enumeration. For a non-descent s of u, the element g = us has
  // r != s as a right descent iff the alternating {r,s}-suffix of u starting at
  // r has length m_rs - 1; g is then keyed by (g*r_min, r_min), which avoids
  // word rewriting entirely.
  void enumerate(std::size_t element_limit) {
    const int n = rank();
    elements_.emplace_back();
    index_.emplace(std::vector<Generator>{}, 0);
    right_.push_back(std::vector<ElementId>(n, kNoElement));
    std::size_t level_begin = 0, level_end = 1;
    int level = 0;
    std::size_t letters = 0;
    complete_ = false;
    while (true) {
      if (max_length_ && level >= *max_length_) {
        // Products leaving the ball stay kNoElement; the ball may still be all of W.
        bool grows = false;
        for (ElementId u = level_begin; u < level_end && !grows; ++u)
          for (Generator s = 0; s < n && !grows; ++s) grows = right_[u][s] == kNoElement;
        complete_ = !grows;
        break;
      }
      std::map<std::pair<ElementId, Generator>, ElementId> keyed;
      for (ElementId u = level_begin; u < level_end; ++u) {
        for (Generator s = 0; s < n; ++s) {
          if (right_[u][s] != kNoElement) continue;
          Generator rmin = s;
          ElementId below = u;
          for (Generator r = 0; r < s; ++r) {
            auto lower = descent_partner(u, r, s);
            if (lower) {
              rmin = r;
              below = *lower;
              break;
            }
          }
          auto [it, fresh] = keyed.try_emplace({below, rmin}, elements_.size());
          if (fresh) {
            letters += elements_[u].length() + 1;
            if (elements_.size() >= element_limit || letters >= 64 * element_limit)
              throw std::runtime_error("group exceeds the enumeration limit of " + std::to_string(element_limit) +
                                       " elements; supply a length cutoff");
            std::vector<Generator> w = elements_[u].word();
            w.push_back(s);
            index_.emplace(w, elements_.size());
            elements_.emplace_back(std::move(w));
            right_.push_back(std::vector<ElementId>(n, kNoElement));
          }
          right_[u][s] = it->second;
          right_[it->second][s] = u;
        }
      }
      level_begin = level_end;
      level_end = elements_.size();
      ++level;
      if (level_begin == level_end) {
        complete_ = true;
        break;
      }
    }
  }

  // For u with s not a right descent: if r is a right descent of us, returns (us)r.
  std::optional<ElementId> descent_partner(ElementId u, Generator r, Generator s) const {
    const int m = system_.bond(r, s);
    if (m == kInfiniteBond) return std::nullopt;
    ElementId base = u;
    int k = 0;
    for (Generator next = r;; next = (next == r ? s : r)) {
      ElementId stripped = right_[base][next];
      if (stripped == kNoElement || length(stripped) > length(base)) break;
      base = stripped;
      ++k;
    }
    if (k + 1 != m) return std::nullopt;
    // (us)r = base * (alternating word of length m-1 ending in s)
    ElementId x = base;
    for (int j = 0; j < m - 1; ++j) {
      Generator letter = ((m - 2 - j) % 2 == 0) ? s : r;
      x = right_[x][letter];
    }
    return x;
  }

  void build_left_table() {
    const int n = rank();
    left_.assign(size(), std::vector<ElementId>(n, kNoElement));
    for (Generator a = 0; a < n; ++a) left_[0][a] = right_[0][a];
    for (ElementId w = 1; w < size(); ++w) {
      const auto& word = elements_[w].word();
      const Generator last = word.back();
      const ElementId prefix = right_[w][last];
      for (Generator a = 0; a < n; ++a) {
        ElementId ap = left_[prefix][a];
        left_[w][a] = ap == kNoElement ? kNoElement : right_[ap][last];
      }
    }
  }

  // Lifting property: for s a left descent of z, x <= z iff min(x, sx) <= sz.
  void build_bruhat() {
    bruhat_.resize(size());
    bruhat_[0] = {true};
    for (ElementId z = 1; z < size(); ++z) {
      const Generator s = *left_descents(z).min();
      const ElementId sz = left_[z][s];
      std::vector<bool>& row = bruhat_[z];
      row.assign(z + 1, false);
      row[z] = true;
      for (ElementId x = 0; x < z; ++x) {
        if (length(x) >= length(z)) break;
        const ElementId sx = left_[x][s];
        const ElementId y = (sx != kNoElement && length(sx) < length(x)) ? sx : x;
        row[x] = y <= sz && bruhat_[sz][y];
      }
    }
  }

  CoxeterSystem system_;
  std::optional<int> max_length_;
  bool complete_ = false;
  std::vector<Element> elements_;
  std::map<std::vector<Generator>, ElementId> index_;
  std::vector<std::vector<ElementId>> right_;
  std::vector<std::vector<ElementId>> left_;
  std::vector<std::vector<bool>> bruhat_;
};

/// D_J ∩ W_K (K the ambient generator set), indexed 0..n-1 in (length, ShortLex)
/// order, with the Deodhar data needed by the recursions precomputed.
/// With a length cutoff N only representatives of length < N are indexed, so
/// that every s*w is available.
class ParabolicCosets {
 public:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  ParabolicCosets(std::shared_ptr<const CoxeterGroup> group, GeneratorSet J, GeneratorSet ambient)
      : group_(std::move(group)), J_(J), ambient_(ambient) {
    if (!J.is_subset_of(ambient)) throw std::invalid_argument("J must be a subset of the ambient generator set");
    if (!ambient.is_subset_of(group_->system().generators()))
      throw std::out_of_range("ambient generator set exceeds the rank");
    const auto cutoff = group_->max_length();
    for (ElementId w : group_->min_coset_reps(J)) {
      if (!group_->in_parabolic(w, ambient)) continue;
      if (!group_->is_complete() && cutoff && group_->length(w) >= *cutoff) continue;
      position_.emplace(w, reps_.size());
      reps_.push_back(w);
    }
    const int n = group_->rank();
    classes_.assign(reps_.size(), std::vector<DeodharClass>(n));
    left_.assign(reps_.size(), std::vector<ElementId>(n, kNoElement));
    for (std::size_t i = 0; i < reps_.size(); ++i)
      for (Generator s : ambient.to_vector()) {
        classes_[i][s] = group_->deodhar_class(J, s, reps_[i]);
        left_[i][s] = group_->left_mult(s, reps_[i]);
      }
  }

  const CoxeterGroup& group() const { return *group_; }
  const std::shared_ptr<const CoxeterGroup>& group_ptr() const { return group_; }
  GeneratorSet J() const { return J_; }
  GeneratorSet ambient() const { return ambient_; }
  /// True when the representatives are all of D_J ∩ W_K.
  bool complete() const { return group_->is_complete(); }

  std::size_t size() const { return reps_.size(); }
  ElementId rep(std::size_t i) const { return reps_.at(i); }
  const std::vector<ElementId>& reps() const { return reps_; }
  std::size_t position(ElementId w) const {
    auto it = position_.find(w);
    return it == position_.end() ? kNone : it->second;
  }
  std::string name(std::size_t i) const { return group_->name(reps_.at(i)); }
  int length(std::size_t i) const { return group_->length(reps_.at(i)); }

  const DeodharClass& deodhar(std::size_t i, Generator s) const { return classes_.at(i).at(s); }
  /// Group element s*w for the i-th representative.
  ElementId left(std::size_t i, Generator s) const { return left_.at(i).at(s); }
  /// Position of s*w; kNone if it is not an indexed representative.
  std::size_t left_position(std::size_t i, Generator s) const { return position(left(i, s)); }

  bool leq(std::size_t x, std::size_t z) const { return group_->bruhat_leq(reps_.at(x), reps_.at(z)); }
  bool less(std::size_t x, std::size_t z) const { return x != z && leq(x, z); }

 private:
  std::shared_ptr<const CoxeterGroup> group_;
  GeneratorSet J_, ambient_;
  std::vector<ElementId> reps_;
  std::unordered_map<ElementId, std::size_t> position_;
  std::vector<std::vector<DeodharClass>> classes_;
  std::vector<std::vector<ElementId>> left_;
};

}  // namespace hy
