#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "noble/oracle.hpp"

using namespace noble;

TEST_CASE("embedding search on the fixtures") {
  CHECK_FALSE(brute_force_noble(fixtures::e3(), 4).has_value());
  auto wb = brute_force_noble(fixtures::b2(), 2);
  REQUIRE(wb.has_value());
  CHECK(wb->degree == 2);
  CHECK(wb->transitive);
  auto wc = brute_force_noble(fixtures::c2(), 2);
  REQUIRE(wc.has_value());
  CHECK(wc->degree <= 2);
  try {
    brute_force_noble(fixtures::c2(), 6);
    FAIL("expected size cap");
  } catch (const NobleError& e) {
    CHECK(e.kind() == ErrorKind::SizeCapExceeded);
  }
}

TEST_CASE("embedding witnesses really are injective transitive homomorphisms") {
  for (const auto& S : {fixtures::b2(), fixtures::c2(), fixtures::i2()}) {
    auto w = brute_force_noble(S, S.n <= 5 ? 2 : 2);
    REQUIRE(w.has_value());
    for (int s = 0; s < S.n; ++s)
      for (int t = 0; t < S.n; ++t)
        CHECK(compose(w->assignment[s], w->assignment[t]) ==
              w->assignment[S.product(s, t)]);
    std::set<PartialBijection> distinct(w->assignment.begin(), w->assignment.end());
    CHECK(static_cast<int>(distinct.size()) == S.n);
    ConcreteFamily F;
    F.m = w->degree;
    F.elems.assign(distinct.begin(), distinct.end());
    F.closed = true;
    CHECK(is_transitive(F));
  }
}

TEST_CASE("isomorphism testing") {
  auto [S2, dict] = abstract_table_of(symmetric_inverse_semigroup(2));
  auto iso = are_isomorphic(S2, fixtures::i2());
  REQUIRE(iso.has_value());
  auto& m = *iso;
  auto I2 = fixtures::i2();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(m[S2.product(i, j)] == I2.product(m[i], m[j]));
  auto e2 = validate_inverse_semigroup({{0, 0}, {0, 1}});
  CHECK_FALSE(are_isomorphic(fixtures::c2(), e2).has_value());
  auto chain5 = validate_inverse_semigroup({{0, 0, 0, 0, 0},
                                            {0, 1, 1, 1, 1},
                                            {0, 1, 2, 2, 2},
                                            {0, 1, 2, 3, 3},
                                            {0, 1, 2, 3, 4}});
  CHECK_FALSE(are_isomorphic(fixtures::b2(), chain5).has_value());
  CHECK(are_isomorphic(fixtures::b2(), fixtures::b2()).has_value());
}

TEST_CASE("subgroups and cores of the symmetric group on three points") {
  auto S3 = validate_inverse_semigroup(groups::dihedral(3));
  auto subs = all_subgroups(S3);
  std::vector<int> sizes;
  for (const auto& H : subs) sizes.push_back(H.count());
  CHECK(sizes == std::vector<int>{1, 2, 2, 2, 3, 6});
  for (const auto& H : subs) {
    auto core = group_core(S3, H);
    if (H.count() == 2) CHECK(core.count() == 1);
    if (H.count() == 3) CHECK(core == H);  // rotations are normal
    if (H.count() == 6) CHECK(core == H);
  }
  try {
    group_core(fixtures::e3(), fixtures::set_of(3, {2}));
    FAIL("expected rejection");
  } catch (const NobleError& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
  }
  try {
    group_core(S3, fixtures::set_of(6, {0, 1}));
    FAIL("expected rejection");
  } catch (const NobleError& e) {
    CHECK(e.kind() == ErrorKind::NotASubgroup);
  }
}

TEST_CASE("group constructors produce valid groups of the right order") {
  for (const auto& [name, t] : groups::zoo()) {
    INFO(name);
    auto G = validate_inverse_semigroup(t);
    CHECK(G.idempotents.count() == 1);
    CHECK(G.identity.has_value());
    CHECK(G.n <= 24);
  }
  CHECK(are_isomorphic(validate_inverse_semigroup(groups::dicyclic(2)),
                       validate_inverse_semigroup(groups::quaternion8()))
            .has_value());
  CHECK_FALSE(are_isomorphic(validate_inverse_semigroup(groups::dihedral(4)),
                             validate_inverse_semigroup(groups::quaternion8()))
                  .has_value());
}

TEST_CASE("semilattice counts up to isomorphism") {
  CHECK(semilattice_tables(1).size() == 1);
  CHECK(semilattice_tables(2).size() == 1);
  CHECK(semilattice_tables(3).size() == 2);
  CHECK(semilattice_tables(4).size() == 5);
  CHECK(semilattice_tables(5).size() == 15);
}

TEST_CASE("subsemigroup lattices of the small symmetric inverse semigroups") {
  CHECK(inverse_subsemigroups(symmetric_inverse_semigroup(2)).size() == 18);
  CHECK(inverse_subsemigroups(symmetric_inverse_semigroup(3)).size() == 488);
}

TEST_CASE("corpus composition, frozen") {
  auto corpus = generate_corpus(12);
  CHECK(corpus.size() == 250);
  std::map<int, int> by_order;
  for (const auto& S : corpus) ++by_order[S.n];
  CHECK(by_order == std::map<int, int>{{1, 1},
                                       {2, 2},
                                       {3, 5},
                                       {4, 14},
                                       {5, 30},
                                       {6, 39},
                                       {7, 25},
                                       {8, 33},
                                       {9, 36},
                                       {10, 24},
                                       {11, 19},
                                       {12, 22}});
  // isomorphic tables got merged: no pair of members is isomorphic
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i + 1; j < corpus.size(); ++j)
      if (corpus[i].n == corpus[j].n && corpus[i].n <= 6)
        CHECK_FALSE(are_isomorphic(corpus[i], corpus[j]).has_value());
}
