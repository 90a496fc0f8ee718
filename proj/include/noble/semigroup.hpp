#ifndef NOBLE_SEMIGROUP_HPP
#define NOBLE_SEMIGROUP_HPP

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "noble/element_set.hpp"
#include "noble/error.hpp"

namespace noble {

/// A finite inverse semigroup given by its Cayley table. Immutable after
/// validation; every operation below is a pure read.
struct SemigroupTable {
  int n = 0;
  std::vector<int> table;  // row-major, table[s*n + t] = st
  std::vector<int> inv;
  ElementSet idempotents;
  std::optional<int> zero;
  std::optional<int> identity;

  int product(int s, int t) const { return table[static_cast<size_t>(s) * n + t]; }
  int inverse(int s) const { return inv[s]; }
  bool is_idempotent(int s) const { return idempotents.contains(s); }

  /// [stu] = s t^-1 u
  int triple_product(int s, int t, int u) const {
    return product(product(s, inv[t]), u);
  }

  /// s <= t  iff  s = s s^-1 t
  bool natural_leq(int s, int t) const {
    bool r = s == product(product(s, inv[s]), t);
#ifndef NDEBUG
    if (r != natural_leq_all_forms(s, t))
      throw NobleError(ErrorKind::EquivalentFormsDisagree,
                       "natural order forms disagree at (" + std::to_string(s) +
                           "," + std::to_string(t) + ")");
#endif
    return r;
  }

  /// Evaluates all seven equivalent definitions of the natural order and
  /// insists they agree; disagreement means the table is corrupt.
  bool natural_leq_all_forms(int s, int t) const {
    int si = inv[s], ti = inv[t];
    bool forms[7] = {
        s == product(product(s, si), t),  // s = ss^-1 t
        s == product(product(s, ti), s),  // s = st^-1 s
        s == product(product(t, si), s),  // s = ts^-1 s
        product(s, si) == product(s, ti),
        product(s, si) == product(t, si),
        product(si, s) == product(si, t),
        product(si, s) == product(ti, s),
    };
    for (int k = 1; k < 7; ++k)
      if (forms[k] != forms[0])
        throw NobleError(ErrorKind::EquivalentFormsDisagree,
                         "natural order form " + std::to_string(k) +
                             " disagrees at (" + std::to_string(s) + "," +
                             std::to_string(t) + ")");
    return forms[0];
  }
};

/// Green's equivalences as class-id arrays, normalized so that class ids
/// appear in ascending order of their least member.
struct GreenData {
  std::vector<int> L, R, D;

  bool l_related(int s, int t) const { return L[s] == L[t]; }
  bool r_related(int s, int t) const { return R[s] == R[t]; }
  bool d_related(int s, int t) const { return D[s] == D[t]; }
};

namespace detail {

inline std::vector<int> normalize_classes(const std::vector<int>& key) {
  std::vector<int> out(key.size(), -1);
  int next = 0;
  for (size_t i = 0; i < key.size(); ++i) {
    if (out[i] >= 0) continue;
    out[i] = next;
    for (size_t j = i + 1; j < key.size(); ++j)
      if (out[j] < 0 && key[j] == key[i]) out[j] = next;
    ++next;
  }
  return out;
}

}  // namespace detail

inline SemigroupTable validate_inverse_semigroup(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n < 1)
    throw NobleError(ErrorKind::ParseError, "empty table");
  SemigroupTable S;
  S.n = n;
  S.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n)
      throw NobleError(ErrorKind::ParseError,
                       "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      if (raw[i][j] < 0 || raw[i][j] >= n)
        throw NobleError(ErrorKind::ParseError,
                         "entry out of range at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      S.table[static_cast<size_t>(i) * n + j] = raw[i][j];
    }
  }

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        if (S.product(S.product(s, t), u) != S.product(s, S.product(t, u)))
          throw NobleError(ErrorKind::NotAssociative,
                           "associativity fails at (" + std::to_string(s) + "," +
                               std::to_string(t) + "," + std::to_string(u) + ")");

  // inverse map by exhaustive scan; input inverses are never trusted
  S.inv.resize(n);
  for (int s = 0; s < n; ++s) {
    int found = -1;
    for (int t = 0; t < n; ++t) {
      if (S.product(S.product(s, t), s) == s && S.product(S.product(t, s), t) == t) {
        if (found >= 0)
          throw NobleError(ErrorKind::InverseNotUnique,
                           "element " + std::to_string(s) + " has inverses " +
                               std::to_string(found) + " and " + std::to_string(t));
        found = t;
      }
    }
    if (found < 0)
      throw NobleError(ErrorKind::NotRegular,
                       "element " + std::to_string(s) + " has no inverse");
    S.inv[s] = found;
  }

  S.idempotents = ElementSet(n);
  for (int e = 0; e < n; ++e)
    if (S.product(e, e) == e) S.idempotents.insert(e);
  auto idem = S.idempotents.to_vector();
  for (int e : idem)
    for (int f : idem)
      if (S.product(e, f) != S.product(f, e))
        throw NobleError(ErrorKind::IdempotentsDontCommute,
                         "idempotents " + std::to_string(e) + " and " +
                             std::to_string(f) + " do not commute");

  for (int z = 0; z < n; ++z) {
    bool is_zero = true, is_id = true;
    for (int s = 0; s < n; ++s) {
      if (S.product(z, s) != z || S.product(s, z) != z) is_zero = false;
      if (S.product(z, s) != s || S.product(s, z) != s) is_id = false;
    }
    if (is_zero) S.zero = z;
    if (is_id) S.identity = z;
  }
  return S;
}

inline GreenData green_relations_from_divisibility(const SemigroupTable& S);

/// L: s ~ t iff ss^-1 = tt^-1 (equal domain idempotents under left-to-right
/// composition); R: s^-1 s = t^-1 t; D: exists u with ss^-1 = uu^-1 and
/// t^-1 t = u^-1 u.
inline GreenData green_relations(const SemigroupTable& S) {
  const int n = S.n;
  std::vector<int> lkey(n), rkey(n);
  for (int s = 0; s < n; ++s) {
    lkey[s] = S.product(s, S.inv[s]);
    rkey[s] = S.product(S.inv[s], s);
  }
  GreenData g;
  g.L = detail::normalize_classes(lkey);
  g.R = detail::normalize_classes(rkey);
  // D-class key: least element d-related to s
  std::vector<int> dkey(n, -1);
  for (int s = 0; s < n; ++s) {
    if (dkey[s] >= 0) continue;
    for (int t = s; t < n; ++t) {
      if (dkey[t] >= 0) continue;
      bool rel = false;
      for (int u = 0; u < n && !rel; ++u)
        rel = lkey[s] == S.product(u, S.inv[u]) && rkey[t] == S.product(S.inv[u], u);
      if (rel) dkey[t] = s;
    }
  }
  g.D = detail::normalize_classes(dkey);
#ifndef NDEBUG
  {
    GreenData dv = green_relations_from_divisibility(S);
    assert(dv.L == g.L && dv.R == g.R);
  }
#endif
  return g;
}

/// Reference computation of L and R from the divisibility quasi-orders:
/// s divides t on the left iff s = t or t = sr for some r, and L is the
/// symmetric part; dually for R.
inline GreenData green_relations_from_divisibility(const SemigroupTable& S) {
  const int n = S.n;
  auto div_l = [&](int s, int t) {
    if (s == t) return true;
    for (int r = 0; r < n; ++r)
      if (S.product(s, r) == t) return true;
    return false;
  };
  auto div_r = [&](int s, int t) {
    if (s == t) return true;
    for (int r = 0; r < n; ++r)
      if (S.product(r, s) == t) return true;
    return false;
  };
  std::vector<int> lkey(n, -1), rkey(n, -1);
  for (int s = 0; s < n; ++s) {
    if (lkey[s] < 0)
      for (int t = s; t < n; ++t)
        if (lkey[t] < 0 && div_l(s, t) && div_l(t, s)) lkey[t] = s;
    if (rkey[s] < 0)
      for (int t = s; t < n; ++t)
        if (rkey[t] < 0 && div_r(s, t) && div_r(t, s)) rkey[t] = s;
  }
  GreenData g;
  g.L = detail::normalize_classes(lkey);
  g.R = detail::normalize_classes(rkey);
  g.D = g.L;  // placeholder; divisibility route is for L/R cross-checks only
  return g;
}

}  // namespace noble

#endif
