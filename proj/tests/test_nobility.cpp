#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "noble/nobility.hpp"

using namespace noble;
using fixtures::filter_of;
using fixtures::set_of;

namespace {
constexpr int U = PartialBijection::kUndef;
PartialBijection pb(std::vector<int> m) { return PartialBijection(std::move(m)); }
}  // namespace

TEST_CASE("infinitesimal subsemigroups") {
  auto S = fixtures::i2();
  CHECK(is_infinitesimal_subsemigroup(S, filter_of(7, {1, 5})));
  int failing = -1;
  CHECK_FALSE(is_infinitesimal_subsemigroup(S, filter_of(7, {5}), &failing));
  CHECK(failing == 1);  // conjugates of {5} never reach the rank-1 idempotents
  auto E = fixtures::e3();
  CHECK_FALSE(is_infinitesimal_subsemigroup(E, filter_of(3, {2}), &failing));
  CHECK(failing == 1);
  CHECK_FALSE(is_infinitesimal_subsemigroup(E, filter_of(3, {1, 2}), &failing));
  CHECK(failing == 2);
}

TEST_CASE("search for an infinitesimal candidate") {
  auto si = find_infinitesimal(fixtures::i2());
  REQUIRE(si.found.has_value());
  CHECK(si.found->carrier.to_vector() == std::vector<int>{1, 5});
  auto se = find_infinitesimal(fixtures::e3());
  CHECK_FALSE(se.found.has_value());
  REQUIRE(se.tested.size() == 2);
  CHECK(se.tested[0].candidate.carrier.to_vector() == std::vector<int>{2});
  CHECK(se.tested[0].failing_idempotent == 1);
  CHECK(se.tested[1].candidate.carrier.to_vector() == std::vector<int>{1, 2});
  CHECK(se.tested[1].failing_idempotent == 2);
  auto sc = find_infinitesimal(fixtures::c2());
  REQUIRE(sc.found.has_value());
  CHECK(sc.found->carrier.to_vector() == std::vector<int>{0});
}

TEST_CASE("coset and magnitude families, frozen") {
  auto S = fixtures::i2();
  auto H = filter_of(7, {1, 5});
  auto orbit = coset_family(S, H);
  CHECK(orbit.kind == FamilyKind::orbit);
  CHECK(fixtures::carriers(orbit.filters) ==
        std::vector<std::vector<int>>{{1, 5}, {3, 6}});
  auto mag = magnitude_family(S, H);
  CHECK(mag.kind == FamilyKind::magnitude);
  CHECK(fixtures::carriers(mag.filters) ==
        std::vector<std::vector<int>>{{1, 5}, {2, 5}, {3, 6}, {4, 6}});
  auto E = fixtures::e3();
  CHECK(fixtures::carriers(coset_family(E, filter_of(3, {1, 2})).filters) ==
        std::vector<std::vector<int>>{{1, 2}});
  try {
    coset_family(S, filter_of(7, {3, 6}));
    FAIL("expected rejection");
  } catch (const NobleError& e) {
    CHECK(e.kind() == ErrorKind::NotClosedInverseSubsemigroup);
  }
}

TEST_CASE("the action on the orbit family of the 2-point fixture") {
  auto S = fixtures::i2();
  auto orbit = coset_family(S, filter_of(7, {1, 5}));
  auto rep = verify_representation(S, build_representation(S, orbit));
  // indices: 0 = {1,5}, 1 = {3,6}
  CHECK(rep.action[0] == pb({U, U}));
  CHECK(rep.action[1] == pb({0, U}));
  CHECK(rep.action[3] == pb({1, U}));
  CHECK(rep.action[5] == PartialBijection::identity(2));
  CHECK(rep.action[6] == pb({1, 0}));
  CHECK(rep.all_verified_true());
  auto mag = magnitude_family(S, filter_of(7, {1, 5}));
  auto mrep = verify_representation(S, build_representation(S, mag));
  CHECK(mrep.is_homomorphism == Flag::verified_true);
  CHECK(mrep.is_faithful == Flag::verified_true);
  CHECK(mrep.is_transitive == Flag::verified_false);
}

TEST_CASE("regular representation of the 2-element group") {
  auto G = fixtures::c2();
  auto fam = coset_family(G, filter_of(2, {0}));
  auto rep = verify_representation(G, build_representation(G, fam));
  CHECK(rep.action[1] == pb({1, 0}));
  CHECK(rep.all_verified_true());
}

TEST_CASE("a single-member family acts faithlessly on the chain") {
  auto E = fixtures::e3();
  FilterFamily fam;
  fam.filters = {filter_of(3, {1, 2})};
  auto rep = verify_representation(E, build_representation(E, fam));
  CHECK(rep.is_faithful == Flag::verified_false);  // 1 and 2 act alike
}

TEST_CASE("infinitesimal basis predicate") {
  auto S = fixtures::i2();
  FilterFamily four;
  four.filters = {filter_of(7, {1, 5}), filter_of(7, {2, 5}), filter_of(7, {3, 6}),
                  filter_of(7, {4, 6})};
  CHECK(is_infinitesimal_basis(S, four));
  auto E = fixtures::e3();
  FilterFamily one;
  one.filters = {filter_of(3, {1, 2})};
  CHECK_FALSE(is_infinitesimal_basis(E, one));  // element 2 gets {1,2}, not {2}
  auto G = fixtures::c2();
  FilterFamily reg;
  reg.filters = {filter_of(2, {0}), filter_of(2, {1})};
  CHECK(is_infinitesimal_basis(G, reg));
  // the orbit family of the 2-point fixture misses the conjugate stabilizer
  CHECK_FALSE(is_infinitesimal_basis(S, coset_family(S, filter_of(7, {1, 5}))));
  CHECK(is_infinitesimal_basis(S, magnitude_family(S, filter_of(7, {1, 5}))));
}

TEST_CASE("basis recovery from a transitive concrete family") {
  auto rb = basis_from_representation(symmetric_inverse_semigroup(2));
  CHECK(fixtures::carriers(rb.family.filters) ==
        std::vector<std::vector<int>>{{1, 5}, {4, 5}, {2, 6}, {3, 6}});
  CHECK(is_infinitesimal_basis(rb.table, rb.family));
  // members with an idempotent are infinitesimal, completing the round trip
  for (const auto& F : rb.family.filters)
    if (is_closed_inverse_subsemigroup(rb.table, F))
      CHECK(is_infinitesimal_subsemigroup(rb.table, F));
  ConcreteFamily bad;
  bad.m = 2;
  bad.elems = {pb({U, U}), pb({0, U})};
  bad.closed = true;
  try {
    basis_from_representation(bad);
    FAIL("expected rejection");
  } catch (const NobleError& e) {
    CHECK(e.kind() == ErrorKind::NotTransitive);
  }
  // one-point identity: trivial image, empty family
  ConcreteFamily one;
  one.m = 1;
  one.elems = {PartialBijection::identity(1)};
  one.closed = true;
  auto rb1 = basis_from_representation(one);
  CHECK(rb1.family.filters.empty());
  CHECK(is_infinitesimal_basis(rb1.table, rb1.family));
}

TEST_CASE("right translation embedding") {
  auto G = fixtures::c2();
  auto F = wagner_preston(G);
  CHECK(F.elems[0] == PartialBijection::identity(2));
  CHECK(F.elems[1] == pb({1, 0}));
  auto E = fixtures::e3();
  auto FE = wagner_preston(E);
  CHECK(FE.elems[0] == pb({0, U, U}));
  CHECK(FE.elems[1] == pb({0, 1, U}));
  CHECK(FE.elems[2] == PartialBijection::identity(3));
  CHECK_FALSE(is_transitive(FE));
  auto [T, dict] = abstract_table_of(FE);
  CHECK(T.n == 3);  // faithful
}

TEST_CASE("uniform bases") {
  auto S = fixtures::i2();
  CHECK(uniform_basis_check(S, set_of(7, {1, 2, 3, 4})));
  CHECK_FALSE(uniform_basis_check(S, set_of(7, {5})));
  auto E = fixtures::e3();
  CHECK_FALSE(uniform_basis_check(E, set_of(3, {1, 2})));
}

TEST_CASE("nobility decisions on the fixtures") {
  auto ce = decide_nobility(fixtures::e3());
  CHECK(ce.verdict == Verdict::not_noble);
  CHECK(ce.refutation.size() == 2);
  CHECK(ce.oracle_bound == 4);
  auto ci = decide_nobility(fixtures::i2());
  CHECK(ci.verdict == Verdict::noble);
  REQUIRE(ci.witness.has_value());
  CHECK(ci.witness->H.carrier.to_vector() == std::vector<int>{1, 5});
  CHECK(ci.witness->family.kind == FamilyKind::orbit);
  CHECK(ci.witness->family.size() == 2);
  CHECK(ci.witness->rep.all_verified_true());
  auto cc = decide_nobility(fixtures::c2());
  CHECK(cc.verdict == Verdict::noble);
  auto c1 = decide_nobility(validate_inverse_semigroup({{0}}));
  CHECK(c1.verdict == Verdict::noble);
  CHECK_FALSE(c1.witness.has_value());
  REQUIRE(c1.findings.size() == 1);
}

TEST_CASE("the orbit versus magnitude discrepancy is reported verbatim") {
  auto cert = decide_nobility(fixtures::i2());
  REQUIRE(cert.findings.size() == 1);
  CHECK(cert.findings[0] ==
        "magnitude family of size 4 is not transitive under the constructed "
        "action; orbit family of size 2 gives a verified transitive faithful "
        "representation");
}
