#ifndef NOBLE_PARTIAL_BIJECTION_HPP
#define NOBLE_PARTIAL_BIJECTION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "noble/error.hpp"
#include "noble/semigroup.hpp"

namespace noble {

/// One-to-one partial transformation of the point set {0..m-1}.
/// map[a] is the image of a, or kUndef when a is outside the domain.
/// Composition is left-to-right: a(fg) = (af)g.
class PartialBijection {
 public:
  static constexpr int kUndef = -1;

  PartialBijection() = default;
  explicit PartialBijection(int m) : map_(m, kUndef) {}
  explicit PartialBijection(std::vector<int> map) : map_(std::move(map)) {}

  static PartialBijection identity(int m) {
    PartialBijection f(m);
    for (int a = 0; a < m; ++a) f.map_[a] = a;
    return f;
  }

  int points() const { return static_cast<int>(map_.size()); }
  int at(int a) const { return map_[a]; }
  bool defined(int a) const { return map_[a] != kUndef; }
  const std::vector<int>& raw() const { return map_; }

  int rank() const {
    int r = 0;
    for (int x : map_)
      if (x != kUndef) ++r;
    return r;
  }

  bool is_injective() const {
    std::vector<bool> hit(map_.size(), false);
    for (int x : map_) {
      if (x == kUndef) continue;
      if (x < 0 || x >= points() || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  }

  friend bool operator==(const PartialBijection& a, const PartialBijection& b) {
    return a.map_ == b.map_;
  }
  friend bool operator!=(const PartialBijection& a, const PartialBijection& b) {
    return !(a == b);
  }
  friend bool operator<(const PartialBijection& a, const PartialBijection& b) {
    return a.map_ < b.map_;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (int x : map_) {
      h ^= static_cast<size_t>(x + 1);
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string to_string() const {
    std::string s;
    for (size_t a = 0; a < map_.size(); ++a) {
      if (a) s += ' ';
      s += map_[a] == kUndef ? "-" : std::to_string(map_[a]);
    }
    return s;
  }

 private:
  std::vector<int> map_;
};

struct PartialBijectionHash {
  size_t operator()(const PartialBijection& f) const { return f.hash(); }
};

inline PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  if (f.points() != g.points())
    throw NobleError(ErrorKind::MismatchedPointSets,
                     "compose: point sets of sizes " + std::to_string(f.points()) +
                         " and " + std::to_string(g.points()));
  PartialBijection r(f.points());
  std::vector<int> out(f.points(), PartialBijection::kUndef);
  for (int a = 0; a < f.points(); ++a)
    if (f.defined(a) && g.defined(f.at(a))) out[a] = g.at(f.at(a));
  return PartialBijection(std::move(out));
}

inline PartialBijection invert(const PartialBijection& f) {
  std::vector<int> out(f.points(), PartialBijection::kUndef);
  for (int a = 0; a < f.points(); ++a)
    if (f.defined(a)) out[f.at(a)] = a;
  return PartialBijection(std::move(out));
}

/// Collection of distinct partial bijections over one point set.
struct ConcreteFamily {
  int m = 0;
  std::vector<PartialBijection> elems;
  bool closed = false;
};

/// All partial bijections of an m-point set, ordered by rank ascending,
/// then domain bit mask ascending, then image tuple lexicographically.
inline ConcreteFamily symmetric_inverse_semigroup(int m) {
  if (m > 5)
    throw NobleError(ErrorKind::SizeCapExceeded,
                     "full enumeration capped at 5 points, got " + std::to_string(m));
  ConcreteFamily F;
  F.m = m;
  F.closed = true;
  for (int k = 0; k <= m; ++k) {
    for (int dommask = 0; dommask < (1 << m); ++dommask) {
      if (__builtin_popcount(dommask) != k) continue;
      std::vector<int> dom;
      for (int p = 0; p < m; ++p)
        if (dommask >> p & 1) dom.push_back(p);
      // k-permutations of the point set in lexicographic order
      std::vector<int> img;
      std::vector<bool> used(m, false);
      auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
          std::vector<int> map(m, PartialBijection::kUndef);
          for (int i = 0; i < k; ++i) map[dom[i]] = img[i];
          F.elems.emplace_back(std::move(map));
          return;
        }
        for (int q = 0; q < m; ++q) {
          if (used[q]) continue;
          used[q] = true;
          img.push_back(q);
          self(self, depth + 1);
          img.pop_back();
          used[q] = false;
        }
      };
      rec(rec, 0);
    }
  }
  return F;
}

/// Least family containing the generators and closed under composition and
/// inversion. Worklist closure with a hash-set dedupe; insertion order is the
/// discovery order, which is deterministic for a fixed generator list.
inline ConcreteFamily generate_closure(const std::vector<PartialBijection>& generators,
                                       size_t cap = 100000) {
  if (generators.empty())
    throw NobleError(ErrorKind::EmptyGenerators, "no generators given");
  const int m = generators[0].points();
  for (const auto& g : generators)
    if (g.points() != m)
      throw NobleError(ErrorKind::MismatchedPointSets,
                       "generators over different point sets");

  ConcreteFamily F;
  F.m = m;
  std::unordered_set<PartialBijection, PartialBijectionHash> seen;
  std::vector<PartialBijection> work;
  auto add = [&](const PartialBijection& f) {
    if (seen.insert(f).second) {
      F.elems.push_back(f);
      work.push_back(f);
      if (F.elems.size() > cap)
        throw NobleError(ErrorKind::ExplosionCap,
                         "closure exceeded " + std::to_string(cap) + " elements");
    }
  };
  for (const auto& g : generators) add(g);
  size_t head = 0;
  while (head < work.size()) {
    PartialBijection f = work[head++];
    add(invert(f));
    // products against everything found so far, both sides
    for (size_t i = 0; i < F.elems.size(); ++i) {
      PartialBijection g = F.elems[i];
      add(compose(f, g));
      add(compose(g, f));
    }
  }
  F.closed = true;
  return F;
}

/// True iff the union of the graphs covers every ordered pair of points.
inline bool is_transitive(const ConcreteFamily& F) {
  const int m = F.m;
  std::vector<bool> covered(static_cast<size_t>(m) * m, false);
  int cnt = 0;
  for (const auto& f : F.elems)
    for (int a = 0; a < m; ++a)
      if (f.defined(a) && !covered[static_cast<size_t>(a) * m + f.at(a)]) {
        covered[static_cast<size_t>(a) * m + f.at(a)] = true;
        ++cnt;
      }
  return cnt == m * m;
}

/// Cayley table of a closed family; element ids follow the family's order.
/// The returned family echoes the id-to-map dictionary.
inline std::pair<SemigroupTable, std::vector<PartialBijection>> abstract_table_of(
    const ConcreteFamily& F) {
  const int n = static_cast<int>(F.elems.size());
  std::vector<std::vector<int>> raw(n, std::vector<int>(n));
  std::unordered_map<PartialBijection, int, PartialBijectionHash> idx;
  for (int i = 0; i < n; ++i) idx.emplace(F.elems[i], i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = idx.find(compose(F.elems[i], F.elems[j]));
      if (it == idx.end())
        throw NobleError(ErrorKind::ParseError, "family is not closed under composition");
      raw[i][j] = it->second;
    }
  return {validate_inverse_semigroup(raw), F.elems};
}

}  // namespace noble

#endif
