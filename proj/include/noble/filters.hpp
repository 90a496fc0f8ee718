#ifndef NOBLE_FILTERS_HPP
#define NOBLE_FILTERS_HPP

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "noble/element_set.hpp"
#include "noble/error.hpp"
#include "noble/semigroup.hpp"

namespace noble {

/// Nonempty proper subset, upward closed and closed under the triple
/// product. principal_of records the generator when the filter is known to
/// be principal.
struct Filter {
  ElementSet carrier;
  std::optional<int> principal_of;

  friend bool operator==(const Filter& a, const Filter& b) {
    return a.carrier == b.carrier;
  }
  friend bool operator<(const Filter& a, const Filter& b) {
    return a.carrier < b.carrier;
  }
};

/// Witness (u,v) for two filters being of the same magnitude:
/// u F1 v^-1 is inside F2 and u^-1 F2 v is inside F1. In the adjoined
/// identity mode either slot may be kAdjoinedIdentity, meaning the factor
/// is dropped.
struct MagnitudeWitness {
  static constexpr int kAdjoinedIdentity = -1;
  int u = 0;
  int v = 0;
};

inline ElementSet up_closure(const SemigroupTable& S, const ElementSet& T) {
  ElementSet out(S.n);
  for (int t = 0; t < S.n; ++t) {
    bool above = false;
    T.for_each([&](int s) {
      if (!above && S.natural_leq(s, t)) above = true;
    });
    if (above) out.insert(t);
  }
  return out;
}

inline bool is_filter(const SemigroupTable& S, const ElementSet& T) {
  int cnt = T.count();
  if (cnt == 0 || cnt == S.n) return false;
  if (!(up_closure(S, T) == T)) return false;
  auto v = T.to_vector();
  for (int a : v)
    for (int b : v)
      for (int c : v)
        if (!T.contains(S.triple_product(a, b, c))) return false;
  return true;
}

inline Filter principal_filter(const SemigroupTable& S, int s) {
  if (S.zero && *S.zero == s)
    throw NobleError(ErrorKind::ZeroHasNoPrincipalFilter,
                     "element " + std::to_string(s) +
                         " is the zero; its up-set is the whole semigroup");
  ElementSet one(S.n);
  one.insert(s);
  return Filter{up_closure(S, one), s};
}

/// All filters, sorted by ascending carrier mask. Enumerates up-sets by
/// branching on the least undecided element and propagating the order
/// constraints, then keeps the triple-closed proper ones.
inline std::vector<Filter> enumerate_filters(const SemigroupTable& S, int cap = 24) {
  if (S.n > cap)
    throw NobleError(ErrorKind::SizeCapExceeded,
                     "filter enumeration capped at " + std::to_string(cap) +
                         " elements, got " + std::to_string(S.n));
  std::vector<Filter> out;
  // state: 0 undecided, 1 in, 2 out
  std::vector<int> state(S.n, 0);
  auto rec = [&](auto&& self) -> void {
    int pick = -1;
    for (int i = 0; i < S.n; ++i)
      if (state[i] == 0) {
        pick = i;
        break;
      }
    if (pick < 0) {
      ElementSet T(S.n);
      for (int i = 0; i < S.n; ++i)
        if (state[i] == 1) T.insert(i);
      if (is_filter(S, T)) out.push_back(Filter{T, std::nullopt});
      return;
    }
    auto saved = state;
    // include pick: everything above it joins too
    bool ok = true;
    for (int t = 0; t < S.n && ok; ++t)
      if (S.natural_leq(pick, t)) {
        if (state[t] == 2) ok = false;
        state[t] = 1;
      }
    if (ok) self(self);
    state = saved;
    // exclude pick: everything below it leaves too
    ok = true;
    for (int t = 0; t < S.n && ok; ++t)
      if (S.natural_leq(t, pick)) {
        if (state[t] == 1) ok = false;
        state[t] = 2;
      }
    if (ok) self(self);
    state = saved;
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  // mark the principal ones
  for (auto& F : out) {
    for (int s : F.carrier.to_vector()) {
      ElementSet one(S.n);
      one.insert(s);
      if (up_closure(S, one) == F.carrier) {
        F.principal_of = s;
        break;
      }
    }
  }
  return out;
}

namespace detail {

inline ElementSet translate(const SemigroupTable& S, int u, const ElementSet& F, int v) {
  // u F v^-1 with kAdjoinedIdentity factors dropped
  ElementSet out(S.n);
  F.for_each([&](int f) {
    int x = f;
    if (u != MagnitudeWitness::kAdjoinedIdentity) x = S.product(u, x);
    if (v != MagnitudeWitness::kAdjoinedIdentity) x = S.product(x, S.inv[v]);
    out.insert(x);
  });
  return out;
}

}  // namespace detail

/// First witness in ascending (u,v) order, the adjoined identity trying
/// last when enabled. Absent means the filters are of different magnitude.
inline std::optional<MagnitudeWitness> same_magnitude(const SemigroupTable& S,
                                                      const Filter& F1,
                                                      const Filter& F2,
                                                      bool adjoin_identity = false) {
  std::vector<int> units;
  for (int u = 0; u < S.n; ++u) units.push_back(u);
  if (adjoin_identity) units.push_back(MagnitudeWitness::kAdjoinedIdentity);
  for (int u : units)
    for (int v : units) {
      // u F1 v^-1 inside F2
      ElementSet fwd = detail::translate(S, u, F1.carrier, v);
      if (!fwd.is_subset_of(F2.carrier)) continue;
      // u^-1 F2 v inside F1; build directly since the factors differ
      bool ok = true;
      F2.carrier.for_each([&](int f) {
        if (!ok) return;
        int x = f;
        if (u != MagnitudeWitness::kAdjoinedIdentity) x = S.product(S.inv[u], x);
        if (v != MagnitudeWitness::kAdjoinedIdentity) x = S.product(x, v);
        if (!F1.carrier.contains(x)) ok = false;
      });
      if (!ok) continue;
#ifndef NDEBUG
      // a valid witness always normalizes: closing u F1 v^-1 upward gives
      // exactly F2
      if (!(up_closure(S, fwd) == F2.carrier))
        throw NobleError(ErrorKind::EquivalentFormsDisagree,
                         "magnitude witness fails the normalized form");
#endif
      return MagnitudeWitness{u, v};
    }
  return std::nullopt;
}

/// Filters containing an idempotent are exactly the ones closed under
/// product and inversion.
inline bool is_closed_inverse_subsemigroup(const SemigroupTable& S, const Filter& F) {
  bool has_idem = false;
  F.carrier.for_each([&](int e) {
    if (S.is_idempotent(e)) has_idem = true;
  });
#ifndef NDEBUG
  bool closed = true;
  auto v = F.carrier.to_vector();
  for (int a : v) {
    if (!F.carrier.contains(S.inv[a])) closed = false;
    for (int b : v)
      if (!F.carrier.contains(S.product(a, b))) closed = false;
  }
  if (closed != has_idem)
    throw NobleError(ErrorKind::EquivalentFormsDisagree,
                     "idempotent test and direct closure test disagree");
#endif
  return has_idem;
}

/// All conjugates up_closure(u H u^-1) over u with u^-1 u in H, including
/// H itself, sorted by carrier mask.
inline std::vector<Filter> conjugates(const SemigroupTable& S, const Filter& H) {
  if (!is_closed_inverse_subsemigroup(S, H))
    throw NobleError(ErrorKind::NotClosedInverseSubsemigroup,
                     "conjugates: carrier has no idempotent");
  std::vector<Filter> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (int u = 0; u < S.n; ++u) {
    if (!H.carrier.contains(S.product(S.inv[u], u))) continue;
    ElementSet img(S.n);
    H.carrier.for_each([&](int h) { img.insert(S.product(S.product(u, h), S.inv[u])); });
    ElementSet K = up_closure(S, img);
    // symmetric direction must recover H
    ElementSet back(S.n);
    K.for_each([&](int k) { back.insert(S.product(S.product(S.inv[u], k), u)); });
    if (!(up_closure(S, back) == H.carrier))
      throw NobleError(ErrorKind::EquivalentFormsDisagree,
                       "conjugation by " + std::to_string(u) + " is not symmetric");
    if (seen.insert(K).second) out.push_back(Filter{K, std::nullopt});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All closed inverse subsemigroups (proper carriers only), found by
/// growing closures in the subsemigroup lattice. Sorted by carrier mask.
inline std::vector<Filter> enumerate_closed_inverse_subsemigroups(const SemigroupTable& S) {
  auto close = [&](ElementSet T) {
    for (;;) {
      ElementSet nxt = T;
      T.for_each([&](int a) {
        nxt.insert(S.inv[a]);
        T.for_each([&](int b) { nxt.insert(S.product(a, b)); });
      });
      nxt = up_closure(S, nxt);
      if (nxt == T) return T;
      T = nxt;
    }
  };
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> frontier;
  auto push = [&](const ElementSet& C) {
    if (C.count() < S.n && seen.insert(C).second) frontier.push_back(C);
  };
  S.idempotents.for_each([&](int e) {
    ElementSet one(S.n);
    one.insert(e);
    push(close(one));
  });
  while (!frontier.empty()) {
    ElementSet H = frontier.back();
    frontier.pop_back();
    for (int s = 0; s < S.n; ++s) {
      if (H.contains(s)) continue;
      ElementSet T = H;
      T.insert(s);
      push(close(T));
    }
  }
  std::vector<Filter> out;
  out.reserve(seen.size());
  for (const auto& C : seen) out.push_back(Filter{C, std::nullopt});
  std::sort(out.begin(), out.end());
  return out;
}

/// Least upper bound if it exists. The empty set's bound is the zero when
/// there is one; absence is a value, never an error.
inline std::optional<int> lub(const SemigroupTable& S, const ElementSet& T) {
  if (T.empty()) return S.zero;
  std::vector<int> ub;
  for (int u = 0; u < S.n; ++u) {
    bool all_below = true;
    T.for_each([&](int t) {
      if (all_below && !S.natural_leq(t, u)) all_below = false;
    });
    if (all_below) ub.push_back(u);
  }
  std::vector<int> mins;
  for (int u : ub) {
    bool least = true;
    for (int v : ub)
      if (!S.natural_leq(u, v)) {
        least = false;
        break;
      }
    if (least) mins.push_back(u);
  }
  if (mins.size() == 1) return mins[0];
  return std::nullopt;
}

}  // namespace noble

#endif
