#ifndef NOBLE_ORACLE_HPP
#define NOBLE_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "noble/element_set.hpp"
#include "noble/error.hpp"
#include "noble/partial_bijection.hpp"
#include "noble/semigroup.hpp"

namespace noble {

using RawTable = std::vector<std::vector<int>>;

// ---------------------------------------------------------------------------
// brute-force embedding search
// ---------------------------------------------------------------------------

struct EmbeddingWitness {
  int degree = 0;
  std::vector<PartialBijection> assignment;  // indexed by element id
  bool transitive = false;
};

namespace detail {

inline std::vector<int> close_under_product(const SemigroupTable& S,
                                            std::vector<int> seed) {
  std::vector<bool> in(S.n, false);
  for (int s : seed) in[s] = true;
  for (;;) {
    bool grew = false;
    for (int a = 0; a < S.n; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < S.n; ++b) {
        if (!in[b]) continue;
        int p = S.product(a, b);
        if (!in[p]) {
          in[p] = true;
          grew = true;
        }
      }
    }
    if (!grew) break;
  }
  std::vector<int> out;
  for (int s = 0; s < S.n; ++s)
    if (in[s]) out.push_back(s);
  return out;
}

/// Small generating set under products, grown greedily by closure size.
inline std::vector<int> greedy_generators(const SemigroupTable& S) {
  std::vector<int> gens;
  std::vector<int> cur;
  while (static_cast<int>(cur.size()) < S.n) {
    int best = -1;
    std::vector<int> best_closure;
    for (int x = 0; x < S.n; ++x) {
      if (std::find(cur.begin(), cur.end(), x) != cur.end()) continue;
      auto seed = cur;
      seed.push_back(x);
      auto c = close_under_product(S, std::move(seed));
      if (best < 0 || c.size() > best_closure.size()) {
        best = x;
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    cur = std::move(best_closure);
  }
  return gens;
}

/// Extends a generator assignment to the generated subsemigroup by closing
/// under products; returns the full element map or nullopt on conflict or
/// non-injectivity.
inline std::optional<std::unordered_map<int, PartialBijection>> extend_assignment(
    const SemigroupTable& S, const std::unordered_map<int, PartialBijection>& assign) {
  std::unordered_map<int, PartialBijection> amap = assign;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, PartialBijection>> items(amap.begin(), amap.end());
    for (const auto& [a, fa] : items)
      for (const auto& [b, fb] : items) {
        int ab = S.product(a, b);
        PartialBijection p = compose(fa, fb);
        auto it = amap.find(ab);
        if (it != amap.end()) {
          if (it->second != p) return std::nullopt;
        } else {
          amap.emplace(ab, p);
          changed = true;
        }
      }
  }
  std::set<PartialBijection> values;
  for (const auto& [a, f] : amap) values.insert(f);
  if (values.size() != amap.size()) return std::nullopt;
  return amap;
}

inline std::optional<std::unordered_map<int, PartialBijection>> embed_search(
    const SemigroupTable& S, const std::vector<int>& gens,
    const std::vector<PartialBijection>& cands, int m, size_t k,
    std::unordered_map<int, PartialBijection> assign) {
  if (k == gens.size()) {
    auto full = extend_assignment(S, assign);
    if (!full || static_cast<int>(full->size()) != S.n) return std::nullopt;
    // products of generator images close the whole image, so the map is a
    // homomorphism by construction; only transitivity remains
    std::vector<bool> covered(static_cast<size_t>(m) * m, false);
    int cnt = 0;
    for (const auto& [a, f] : *full)
      for (int p = 0; p < m; ++p)
        if (f.defined(p) && !covered[static_cast<size_t>(p) * m + f.at(p)]) {
          covered[static_cast<size_t>(p) * m + f.at(p)] = true;
          ++cnt;
        }
    if (cnt != m * m) return std::nullopt;
    return full;
  }
  int g = gens[k];
  bool g_idem = S.is_idempotent(g);
  for (const auto& f : cands) {
    if (g_idem && compose(f, f) != f) continue;
    auto a2 = assign;
    a2.insert_or_assign(g, f);
    if (!extend_assignment(S, a2)) continue;
    auto r = embed_search(S, gens, cands, m, k + 1, std::move(a2));
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace detail

/// Backtracking search for an injective homomorphism onto a transitive
/// family of partial bijections of 1..max_degree points. Absence is bounded
/// evidence, not proof.
inline std::optional<EmbeddingWitness> brute_force_noble(const SemigroupTable& S,
                                                         int max_degree) {
  if (S.n > 10 || max_degree > 5)
    throw NobleError(ErrorKind::SizeCapExceeded,
                     "embedding search capped at 10 elements and degree 5");
  auto gens = detail::greedy_generators(S);
  for (int m = 1; m <= max_degree; ++m) {
    if (S.idempotents.count() > (1 << m)) continue;  // too few partial identities
    auto cands = symmetric_inverse_semigroup(m).elems;
    auto r = detail::embed_search(S, gens, cands, m, 0, {});
    if (r) {
      EmbeddingWitness w;
      w.degree = m;
      w.assignment.resize(S.n, PartialBijection(m));
      for (const auto& [a, f] : *r) w.assignment[a] = f;
      w.transitive = true;
      return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// semigroup isomorphism
// ---------------------------------------------------------------------------

namespace detail {

using Profile = std::tuple<bool, bool, int, int, int, int, int>;

inline std::vector<Profile> iso_profile(const SemigroupTable& S) {
  std::vector<Profile> prof;
  prof.reserve(S.n);
  for (int s = 0; s < S.n; ++s) {
    int up = 0, down = 0, lsz = 0, rsz = 0;
    int ls = S.product(S.inv[s], s), rs = S.product(s, S.inv[s]);
    for (int t = 0; t < S.n; ++t) {
      if (S.natural_leq(s, t)) ++up;
      if (S.natural_leq(t, s)) ++down;
      if (S.product(S.inv[t], t) == ls) ++lsz;
      if (S.product(t, S.inv[t]) == rs) ++rsz;
    }
    // size of the cyclic subsemigroup generated by s (element order in groups)
    int cyc = 1;
    std::vector<bool> seen(S.n, false);
    seen[s] = true;
    for (int p = S.product(s, s); !seen[p]; p = S.product(p, s)) {
      seen[p] = true;
      ++cyc;
    }
    prof.emplace_back(S.is_idempotent(s), S.inv[s] == s, up, down, lsz, rsz, cyc);
  }
  return prof;
}

inline bool iso_extend(const SemigroupTable& S, const SemigroupTable& T,
                       const std::vector<std::vector<int>>& cand,
                       const std::vector<int>& order, size_t k, std::vector<int>& map,
                       std::vector<bool>& used) {
  while (k < order.size() && map[order[k]] >= 0) ++k;
  if (k == order.size()) return true;
  int s = order[k];
  for (int t : cand[s]) {
    if (used[t]) continue;
    auto map2 = map;
    auto used2 = used;
    map2[s] = t;
    used2[t] = true;
    // propagate products of everything already assigned
    bool ok = true;
    std::vector<int> stack{s};
    while (!stack.empty() && ok) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < S.n && ok; ++b) {
        if (map2[b] < 0) continue;
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          int p = S.product(x, y), q = T.product(map2[x], map2[y]);
          if (map2[p] >= 0) {
            if (map2[p] != q) {
              ok = false;
              break;
            }
          } else {
            if (used2[q]) {
              ok = false;
              break;
            }
            map2[p] = q;
            used2[q] = true;
            stack.push_back(p);
          }
        }
      }
    }
    if (ok && iso_extend(S, T, cand, order, k + 1, map2, used2)) {
      map = std::move(map2);
      used = std::move(used2);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Isomorphism search guided by per-element invariant profiles. Absence is
/// definitive: the search is complete.
inline std::optional<std::vector<int>> are_isomorphic(const SemigroupTable& S,
                                                      const SemigroupTable& T) {
  if (S.n != T.n) return std::nullopt;
  auto ps = detail::iso_profile(S), pt = detail::iso_profile(T);
  {
    auto a = ps, b = pt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::vector<int>> cand(S.n);
  for (int s = 0; s < S.n; ++s)
    for (int t = 0; t < T.n; ++t)
      if (ps[s] == pt[t]) cand[s].push_back(t);
  std::vector<int> order(S.n);
  for (int i = 0; i < S.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cand[a].size() < cand[b].size(); });
  std::vector<int> map(S.n, -1);
  std::vector<bool> used(T.n, false);
  if (detail::iso_extend(S, T, cand, order, 0, map, used)) return map;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// group helpers
// ---------------------------------------------------------------------------

/// Intersection of all conjugates u H u^-1; trivial exactly when the coset
/// action of H is faithful.
inline ElementSet group_core(const SemigroupTable& G, const ElementSet& H) {
  if (G.idempotents.count() != 1 || !G.identity)
    throw NobleError(ErrorKind::NotAGroup, "table has more than one idempotent");
  if (!H.contains(*G.identity))
    throw NobleError(ErrorKind::NotASubgroup, "identity not a member");
  auto hv = H.to_vector();
  for (int a : hv) {
    if (!H.contains(G.inv[a]))
      throw NobleError(ErrorKind::NotASubgroup, "not closed under inversion");
    for (int b : hv)
      if (!H.contains(G.product(a, b)))
        throw NobleError(ErrorKind::NotASubgroup, "not closed under product");
  }
  ElementSet core = ElementSet::full(G.n);
  for (int u = 0; u < G.n; ++u) {
    ElementSet K(G.n);
    H.for_each([&](int h) { K.insert(G.product(G.product(u, h), G.inv[u])); });
    core &= K;
  }
  return core;
}

/// All subgroups of a group, grown from the trivial subgroup; sorted by
/// size then carrier.
inline std::vector<ElementSet> all_subgroups(const SemigroupTable& G) {
  if (G.idempotents.count() != 1 || !G.identity)
    throw NobleError(ErrorKind::NotAGroup, "table has more than one idempotent");
  auto close = [&](ElementSet T) {
    for (;;) {
      ElementSet nxt = T;
      T.for_each([&](int a) {
        nxt.insert(G.inv[a]);
        T.for_each([&](int b) { nxt.insert(G.product(a, b)); });
      });
      if (nxt == T) return T;
      T = nxt;
    }
  };
  std::set<ElementSet> seen;
  ElementSet triv(G.n);
  triv.insert(*G.identity);
  seen.insert(close(triv));
  std::vector<ElementSet> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    ElementSet H = frontier.back();
    frontier.pop_back();
    for (int s = 0; s < G.n; ++s) {
      if (H.contains(s)) continue;
      ElementSet T = H;
      T.insert(s);
      auto c = close(T);
      if (seen.insert(c).second) frontier.push_back(c);
    }
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// group constructors and the order <= 24 zoo
// ---------------------------------------------------------------------------

namespace groups {

inline RawTable cyclic(int n) {
  RawTable t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

inline RawTable direct(const RawTable& A, const RawTable& B) {
  int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
  int n = na * nb;
  RawTable t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i][j] = A[i / nb][j / nb] * nb + B[i % nb][j % nb];
  return t;
}

/// Order 2n; element (i,r) is rotation i with r reflections, encoded i+n*r.
inline RawTable dihedral(int n) {
  int N = 2 * n;
  RawTable t(N, std::vector<int>(N));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < 2; ++s) {
          int k = ((r == 0 ? i + j : i - j) % n + n) % n;
          t[i + n * r][j + n * s] = k + n * ((r + s) % 2);
        }
  return t;
}

/// Order 4n; a^i b^j with b^2 = a^n and b a b^-1 = a^-1.
inline RawTable dicyclic(int n) {
  int N = 4 * n;
  RawTable t(N, std::vector<int>(N));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2 * n; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii, jj;
          if (j == 0) {
            ii = (i + k) % (2 * n);
            jj = l;
          } else {
            ii = ((i - k) % (2 * n) + 2 * n) % (2 * n);
            jj = 1 + l;
          }
          if (jj == 2) {
            ii = (ii + n) % (2 * n);
            jj = 0;
          }
          t[i + 2 * n * j][k + 2 * n * l] = ii + 2 * n * jj;
        }
  return t;
}

/// (x,h)(y,g) = (x * act[h](y), h g); act must be a homomorphism into the
/// automorphisms of N, which is verified, not assumed.
inline RawTable semidirect(const RawTable& N, const RawTable& H,
                           const std::vector<std::vector<int>>& act) {
  int nn = static_cast<int>(N.size()), nh = static_cast<int>(H.size());
  for (int h = 0; h < nh; ++h) {
    const auto& a = act[h];
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (a[N[x][y]] != N[a[x]][a[y]])
          throw NobleError(ErrorKind::ParseError, "semidirect: not an automorphism");
  }
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2)
      for (int x = 0; x < nn; ++x)
        if (act[h1][act[h2][x]] != act[H[h1][h2]][x])
          throw NobleError(ErrorKind::ParseError, "semidirect: action not a homomorphism");
  RawTable t(nn * nh, std::vector<int>(nn * nh));
  for (int x = 0; x < nn; ++x)
    for (int h = 0; h < nh; ++h)
      for (int y = 0; y < nn; ++y)
        for (int g = 0; g < nh; ++g)
          t[x + nn * h][y + nn * g] = N[x][act[h][y]] + nn * H[h][g];
  return t;
}

/// Powers of one automorphism: the action of a cyclic group of order k.
inline std::vector<std::vector<int>> cyclic_act(const RawTable& N, int k,
                                                const std::vector<int>& alpha) {
  int nn = static_cast<int>(N.size());
  std::vector<std::vector<int>> acts;
  std::vector<int> cur(nn);
  for (int x = 0; x < nn; ++x) cur[x] = x;
  acts.push_back(cur);
  for (int i = 1; i < k; ++i) {
    std::vector<int> nxt(nn);
    for (int x = 0; x < nn; ++x) nxt[x] = alpha[acts.back()[x]];
    acts.push_back(std::move(nxt));
  }
  return acts;
}

inline RawTable perm_group(const std::vector<std::vector<int>>& gens, int m) {
  std::set<std::vector<int>> elems;
  std::vector<int> id(m);
  for (int i = 0; i < m; ++i) id[i] = i;
  std::vector<std::vector<int>> frontier{id};
  elems.insert(id);
  while (!frontier.empty()) {
    auto p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<int> q(m);
      for (int i = 0; i < m; ++i) q[i] = g[p[i]];
      if (elems.insert(q).second) frontier.push_back(q);
    }
  }
  std::vector<std::vector<int>> sorted_elems(elems.begin(), elems.end());
  std::map<std::vector<int>, int> idx;
  int n = static_cast<int>(sorted_elems.size());
  for (int i = 0; i < n; ++i) idx[sorted_elems[i]] = i;
  RawTable t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> q(m);
      for (int a = 0; a < m; ++a) q[a] = sorted_elems[j][sorted_elems[i][a]];
      t[i][j] = idx[q];
    }
  return t;
}

/// Quaternion units {1,-1,i,-i,j,-j,k,-k} in that order.
inline RawTable quaternion8() {
  // sign in bit 0, axis in bits 1.. : 0->1, 1->i, 2->j, 3->k
  auto enc = [](int axis, int sign) { return 2 * axis + sign; };
  auto mul = [&](int a, int b) {
    int ax = a / 2, bx = b / 2, s = (a % 2) ^ (b % 2);
    if (ax == 0) return enc(bx, s);
    if (bx == 0) return enc(ax, s);
    if (ax == bx) return enc(0, s ^ 1);  // i*i = -1
    // cyclic: i*j=k, j*k=i, k*i=j; reversed order flips sign
    int cx = 6 - ax - bx;  // the third axis among {1,2,3}
    bool forward = (ax == 1 && bx == 2) || (ax == 2 && bx == 3) || (ax == 3 && bx == 1);
    return enc(cx, forward ? s : s ^ 1);
  };
  RawTable t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
  return t;
}

/// Extends generator images to a full automorphism by closing products;
/// throws if the images are inconsistent.
inline std::vector<int> automorphism_from_generators(const RawTable& G,
                                                     const std::map<int, int>& images) {
  int n = static_cast<int>(G.size());
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ident = true;
    for (int j = 0; j < n; ++j)
      if (G[i][j] != j) ident = false;
    if (ident) e = i;
  }
  std::map<int, int> amap{{e, e}};
  for (auto [g, img] : images) amap[g] = img;
  bool changed = true;
  while (changed) {
    changed = false;
    auto items = amap;
    for (auto [a, fa] : items)
      for (auto [b, fb] : items) {
        int ab = G[a][b], fab = G[fa][fb];
        auto it = amap.find(ab);
        if (it != amap.end()) {
          if (it->second != fab)
            throw NobleError(ErrorKind::ParseError, "generator images are inconsistent");
        } else {
          amap[ab] = fab;
          changed = true;
        }
      }
  }
  if (static_cast<int>(amap.size()) != n)
    throw NobleError(ErrorKind::ParseError, "generator images do not generate");
  std::vector<int> out(n);
  for (auto [a, fa] : amap) out[a] = fa;
  return out;
}

/// Every group of order <= 24 appears (possibly with isomorphic repeats);
/// 70 distinct isomorphism types in total.
inline std::vector<std::pair<std::string, RawTable>> zoo() {
  std::vector<std::pair<std::string, RawTable>> out;
  auto add = [&](std::string name, RawTable t) { out.emplace_back(std::move(name), std::move(t)); };
  for (int k = 1; k <= 24; ++k) add("C" + std::to_string(k), cyclic(k));
  add("C2xC2", direct(cyclic(2), cyclic(2)));
  add("C2xC4", direct(cyclic(2), cyclic(4)));
  add("C2xC2xC2", direct(cyclic(2), direct(cyclic(2), cyclic(2))));
  add("C3xC3", direct(cyclic(3), cyclic(3)));
  add("C2xC6", direct(cyclic(2), cyclic(6)));
  add("C2xC8", direct(cyclic(2), cyclic(8)));
  add("C4xC4", direct(cyclic(4), cyclic(4)));
  add("C2xC2xC4", direct(cyclic(2), direct(cyclic(2), cyclic(4))));
  add("C2xC2xC2xC2", direct(cyclic(2), direct(cyclic(2), direct(cyclic(2), cyclic(2)))));
  add("C2xC10", direct(cyclic(2), cyclic(10)));
  add("C3xC6", direct(cyclic(3), cyclic(6)));
  add("C2xC12", direct(cyclic(2), cyclic(12)));
  add("C2xC2xC6", direct(cyclic(2), direct(cyclic(2), cyclic(6))));
  for (int k = 3; k <= 12; ++k) add("D" + std::to_string(k), dihedral(k));
  for (int k = 2; k <= 6; ++k) add("Dic" + std::to_string(k), dicyclic(k));
  add("S4", perm_group({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4));
  add("A4", perm_group({{1, 0, 3, 2}, {1, 2, 0, 3}}, 4));
  add("C2xA4", direct(cyclic(2), perm_group({{1, 0, 3, 2}, {1, 2, 0, 3}}, 4)));
  add("C2xD4", direct(cyclic(2), dihedral(4)));
  add("C2xQ8", direct(cyclic(2), dicyclic(2)));
  add("C3xD4", direct(cyclic(3), dihedral(4)));
  add("C3xQ8", direct(cyclic(3), dicyclic(2)));
  add("C4xS3", direct(cyclic(4), dihedral(3)));
  add("C2xDic3", direct(cyclic(2), dicyclic(3)));
  add("C2xD6", direct(cyclic(2), dihedral(6)));
  add("C3xS3", direct(cyclic(3), dihedral(3)));
  add("C2xD5", direct(cyclic(2), dihedral(5)));

  auto c8 = cyclic(8), c4 = cyclic(4), c2 = cyclic(2), c3 = cyclic(3), c5 = cyclic(5);
  auto mul_mod = [](int k, int n) {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = (k * i) % n;
    return a;
  };
  auto neg_mod = [](int n) {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = ((-i) % n + n) % n;
    return a;
  };
  add("SD16", semidirect(c8, c2, cyclic_act(c8, 2, mul_mod(3, 8))));
  add("M4(2)", semidirect(c8, c2, cyclic_act(c8, 2, mul_mod(5, 8))));
  add("C4:C4", semidirect(c4, c4, cyclic_act(c4, 4, neg_mod(4))));
  auto v4 = direct(c2, c2);
  add("C2^2:C4", semidirect(v4, c4, cyclic_act(v4, 4, {0, 2, 1, 3})));
  // central product of C4 and D4, order 16: act on C4xC2 (x = 2i+j) by
  // a -> a, b -> a^2 b
  auto c4xc2 = direct(c4, c2);
  std::vector<int> pauli_alpha(8);
  for (int x = 0; x < 8; ++x)
    pauli_alpha[x] = 2 * (((x / 2) + (x % 2 == 0 ? 0 : 2)) % 4) + x % 2;
  add("Pauli16", semidirect(c4xc2, c2, cyclic_act(c4xc2, 2, pauli_alpha)));
  auto c3xc3 = direct(c3, c3);
  std::vector<int> inv33(9);
  for (int x = 0; x < 9; ++x) inv33[x] = (((-(x / 3)) % 3 + 3) % 3) * 3 + ((-(x % 3)) % 3 + 3) % 3;
  add("(C3xC3):C2", semidirect(c3xc3, c2, cyclic_act(c3xc3, 2, inv33)));
  add("F20", semidirect(c5, c4, cyclic_act(c5, 4, mul_mod(2, 5))));
  add("C7:C3", semidirect(cyclic(7), c3, cyclic_act(cyclic(7), 3, mul_mod(2, 7))));
  add("C3:C8", semidirect(c3, c8, cyclic_act(c3, 8, neg_mod(3))));
  auto q8 = quaternion8();
  // rotation i -> j -> k of order 3 (ids: i=2, j=4, k=6)
  auto rot = automorphism_from_generators(q8, {{2, 4}, {4, 6}});
  add("SL(2,3)", semidirect(q8, c3, cyclic_act(q8, 3, rot)));
  auto d4 = dihedral(4);
  // D4 acts on C3 through its rotation parity: odd rotations invert
  std::vector<std::vector<int>> act(8);
  auto inv3 = neg_mod(3);
  std::vector<int> id3{0, 1, 2};
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 2; ++r) act[i + 4 * r] = (i % 2 == 1) ? inv3 : id3;
  add("C3:D4", semidirect(c3, d4, act));
  return out;
}

}  // namespace groups

// ---------------------------------------------------------------------------
// semilattices and corpus
// ---------------------------------------------------------------------------

namespace detail {

inline bool tables_isomorphic_by_permutation(const RawTable& t1, const RawTable& t2) {
  int n = static_cast<int>(t1.size());
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (p[t1[i][j]] != t2[p[i]][p[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace detail

/// All meet-semilattice tables on {0..n-1}, one per isomorphism type,
/// labels forming a linear extension of the order.
inline std::vector<RawTable> semilattice_tables(int n) {
  if (n > 6)
    throw NobleError(ErrorKind::SizeCapExceeded, "semilattice enumeration capped at 6");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<RawTable> out;
  for (int mask = 0; mask < (1 << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) rel[pairs[b].first][pairs[b].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
    if (!ok) continue;
    RawTable tab(n, std::vector<int>(n));
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        std::vector<int> lows, meets;
        for (int k = 0; k < n; ++k)
          if (rel[k][i] && rel[k][j]) lows.push_back(k);
        for (int k : lows) {
          bool top = true;
          for (int l : lows)
            if (!rel[l][k]) top = false;
          if (top) meets.push_back(k);
        }
        if (meets.size() != 1) {
          ok = false;
          break;
        }
        tab[i][j] = meets[0];
      }
    if (!ok) continue;
    bool dup = false;
    for (const auto& u : out)
      if (detail::tables_isomorphic_by_permutation(tab, u)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(tab));
  }
  return out;
}

inline RawTable adjoin_zero(const RawTable& tab) {
  int n = static_cast<int>(tab.size());
  RawTable t(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i + 1][j + 1] = tab[i][j] + 1;
  return t;
}

inline RawTable adjoin_identity(const RawTable& tab) {
  int n = static_cast<int>(tab.size());
  RawTable t(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = tab[i][j];
  for (int i = 0; i < n; ++i) {
    t[i][n] = i;
    t[n][i] = i;
  }
  t[n][n] = n;
  return t;
}

/// All inverse subsemigroups of a closed concrete family, as sorted element
/// index sets, found by growing closures from singletons.
inline std::vector<std::vector<int>> inverse_subsemigroups(const ConcreteFamily& F) {
  int n = static_cast<int>(F.elems.size());
  if (n > 64)
    throw NobleError(ErrorKind::SizeCapExceeded, "subsemigroup lattice capped at 64");
  std::unordered_map<PartialBijection, int, PartialBijectionHash> idx;
  for (int i = 0; i < n; ++i) idx.emplace(F.elems[i], i);
  std::vector<int> invmap(n);
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    invmap[i] = idx.at(invert(F.elems[i]));
    for (int j = 0; j < n; ++j) tab[i][j] = idx.at(compose(F.elems[i], F.elems[j]));
  }
  auto close = [&](uint64_t T) {
    for (;;) {
      uint64_t nxt = T;
      for (int a = 0; a < n; ++a) {
        if (!(T >> a & 1)) continue;
        nxt |= uint64_t{1} << invmap[a];
        for (int b = 0; b < n; ++b)
          if (T >> b & 1) nxt |= uint64_t{1} << tab[a][b];
      }
      if (nxt == T) return T;
      T = nxt;
    }
  };
  std::set<uint64_t> seen;
  std::vector<uint64_t> frontier;
  for (int s = 0; s < n; ++s) {
    uint64_t c = close(uint64_t{1} << s);
    if (seen.insert(c).second) frontier.push_back(c);
  }
  while (!frontier.empty()) {
    uint64_t H = frontier.back();
    frontier.pop_back();
    for (int s = 0; s < n; ++s) {
      if (H >> s & 1) continue;
      uint64_t c = close(H | uint64_t{1} << s);
      if (seen.insert(c).second) frontier.push_back(c);
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(seen.size());
  for (uint64_t m : seen) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) v.push_back(i);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// Deterministic test corpus: inverse subsemigroups of the 2- and 3-point
/// symmetric inverse semigroups, groups of order <= 12, semilattices of
/// order <= 5, and adjoined zero/identity variants; one table per
/// isomorphism type.
inline std::vector<SemigroupTable> generate_corpus(int max_order) {
  if (max_order > 12)
    throw NobleError(ErrorKind::SizeCapExceeded, "corpus generation capped at order 12");
  std::vector<RawTable> raw;
  for (int m = 2; m <= 3; ++m) {
    auto I = symmetric_inverse_semigroup(m);
    for (const auto& sub : inverse_subsemigroups(I)) {
      if (static_cast<int>(sub.size()) > max_order) continue;
      ConcreteFamily f;
      f.m = m;
      f.closed = true;
      for (int i : sub) f.elems.push_back(I.elems[i]);
      RawTable t(sub.size(), std::vector<int>(sub.size()));
      std::map<std::vector<int>, int> idx;
      for (size_t i = 0; i < f.elems.size(); ++i) idx[f.elems[i].raw()] = static_cast<int>(i);
      for (size_t i = 0; i < f.elems.size(); ++i)
        for (size_t j = 0; j < f.elems.size(); ++j)
          t[i][j] = idx.at(compose(f.elems[i], f.elems[j]).raw());
      raw.push_back(std::move(t));
    }
  }
  for (const auto& [name, t] : groups::zoo())
    if (static_cast<int>(t.size()) <= std::min(max_order, 12)) raw.push_back(t);
  for (int k = 1; k <= std::min(max_order, 5); ++k)
    for (const auto& t : semilattice_tables(k)) raw.push_back(t);
  size_t base = raw.size();
  for (size_t i = 0; i < base; ++i) {
    if (static_cast<int>(raw[i].size()) + 1 <= max_order) {
      raw.push_back(adjoin_zero(raw[i]));
      raw.push_back(adjoin_identity(raw[i]));
    }
  }
  std::vector<SemigroupTable> out;
  for (const auto& t : raw) {
    SemigroupTable S = validate_inverse_semigroup(t);
    bool dup = false;
    for (const auto& U : out)
      if (U.n == S.n && are_isomorphic(S, U)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(S));
  }
  return out;
}

}  // namespace noble

#endif
