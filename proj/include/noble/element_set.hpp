#ifndef NOBLE_ELEMENT_SET_HPP
#define NOBLE_ELEMENT_SET_HPP

#include <cstdint>
#include <vector>

namespace noble {

/// Subset of the element ids {0..n-1} of a fixed semigroup, stored as a
/// bit mask. Comparison order is numeric mask order (little-endian words),
/// which is what every "ascending carrier mask" guarantee refers to.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static ElementSet full(int n) {
    ElementSet s(n);
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  int universe_size() const { return n_; }

  bool contains(int i) const {
    return (words_[static_cast<size_t>(i) / 64] >> (i % 64)) & 1u;
  }
  void insert(int i) { words_[static_cast<size_t>(i) / 64] |= uint64_t{1} << (i % 64); }
  void erase(int i) { words_[static_cast<size_t>(i) / 64] &= ~(uint64_t{1} << (i % 64)); }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  ElementSet complement() const {
    ElementSet r(n_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  /// Numeric mask order: compare as one big unsigned integer.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t k = a.words_.size(); k-- > 0;)
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int i = 0; i < n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(k * 64) + b);
        w &= w - 1;
      }
    }
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace noble

#endif
