#include <doctest.h>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "imprim/group.hpp"

using namespace imprim;
using imprim::testing::associative_table;

namespace {

// Independent brute-force center computation.
std::set<int> center_oracle(const FiniteGroup& g) {
  std::set<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) z.insert(a);
  }
  return z;
}

// Closure by repeated multiplication, independent of the library path.
std::set<int> closure_oracle(const FiniteGroup& g, std::set<int> s) {
  s.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = s;
    for (int a : s)
      for (int b : s) next.insert(g.mul(a, b));
    if (next.size() != s.size()) {
      s = std::move(next);
      grew = true;
    }
  }
  return s;
}

}  // namespace

TEST_CASE("group_from_cayley accepts the trivial group and Z2") {
  const GroupPtr trivial = FiniteGroup::from_cayley({{0}}, "1");
  CHECK(trivial->order() == 1);
  CHECK(trivial->identity() == 0);

  const GroupPtr z2 = FiniteGroup::from_cayley({{0, 1}, {1, 0}}, "Z2");
  CHECK(z2->order() == 2);
  CHECK(z2->inv(1) == 1);
  CHECK(z2->is_abelian());
}

TEST_CASE("group_from_cayley rejects a non-associative table") {
  // Has an identity (0) and two-sided inverses but fails (1,1,2).
  const std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 1, 0}, {2, 0, 0}};
  REQUIRE_FALSE(associative_table(bad));
  CHECK_THROWS_WITH_AS(FiniteGroup::from_cayley(bad, "bad"),
                       doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("group_from_cayley reports missing structure") {
  CHECK_THROWS_WITH_AS(FiniteGroup::from_cayley({{1, 1}, {1, 1}}, "noid"),
                       doctest::Contains("NoIdentity"), Error);
  try {
    FiniteGroup::from_cayley({{0, 1}, {1, 1}}, "noinv");
    CHECK(false);
  } catch (const Error& e) {
    // 1*x never reaches 0, so either inverses or associativity must fail.
    CHECK((e.kind() == "NoInverse" || e.kind() == "NotAssociative"));
  }
}

TEST_CASE("catalog orders and structure") {
  CHECK(catalog("Z6")->order() == 6);
  CHECK(catalog("cyclic:6")->is_abelian());

  const GroupPtr s3 = catalog("S3");
  CHECK(s3->order() == 6);
  bool found_noncommuting = false;
  for (int a = 0; a < 6 && !found_noncommuting; ++a)
    for (int b = 0; b < 6 && !found_noncommuting; ++b)
      found_noncommuting = s3->mul(a, b) != s3->mul(b, a);
  CHECK(found_noncommuting);

  CHECK(catalog("D4")->order() == 8);
  CHECK(catalog("S4")->order() == 24);
  CHECK(catalog("Q8")->order() == 8);
  CHECK(center_oracle(*catalog("Q8")).size() == 2);

  const GroupPtr heis = catalog("Heis(Z3)");
  CHECK(heis->order() == 27);
  CHECK(center_oracle(*heis).size() == 3);

  CHECK_THROWS_WITH_AS(catalog("S9"), doctest::Contains("UnsupportedParams"), Error);
  CHECK_THROWS_WITH_AS(catalog("wat"), doctest::Contains("UnsupportedParams"), Error);
}

TEST_CASE("subgroup_from_generators matches the closure oracle") {
  const GroupPtr z6 = catalog("Z6");
  const Subgroup h = subgroup_from_generators(z6, {2});
  CHECK(h.elements == std::vector<int>{0, 2, 4});
  CHECK(h.group->order() == 3);

  const GroupPtr s3 = catalog("S3");
  CHECK(subgroup_from_generators(s3, {}).elements == std::vector<int>{0});

  // Pick an element of order 3 (a 3-cycle) and compare with the oracle.
  int three_cycle = -1;
  for (int a = 0; a < 6 && three_cycle < 0; ++a)
    if (a != s3->identity() && s3->mul(a, s3->mul(a, a)) == s3->identity())
      three_cycle = a;
  REQUIRE(three_cycle >= 0);
  const Subgroup alt = subgroup_from_generators(s3, {three_cycle});
  const auto oracle = closure_oracle(*s3, {three_cycle});
  CHECK(alt.elements == std::vector<int>(oracle.begin(), oracle.end()));
  CHECK(alt.order() == 3);
}

TEST_CASE("coset spaces: base point, partition and action") {
  const GroupPtr z4 = catalog("Z4");
  const CosetSpace x = coset_space(z4, subgroup_from_generators(z4, {2}));
  CHECK(x.size() == 2);
  CHECK(x.reps[0] == z4->identity());
  CHECK(x.action(1, 0) == 1);  // the generator swaps the two cosets
  CHECK(x.action(1, 1) == 0);

  const GroupPtr s3 = catalog("S3");
  int three_cycle = 1;
  for (int a = 1; a < 6; ++a)
    if (s3->mul(a, s3->mul(a, a)) == s3->identity() && a != s3->identity()) {
      three_cycle = a;
      break;
    }
  const Subgroup a3 = subgroup_from_generators(s3, {three_cycle});
  const CosetSpace xs3 = coset_space(s3, a3);
  CHECK(xs3.size() == 2);

  // Full subgroup: one coset, trivial action.
  const CosetSpace one = coset_space(s3, full_subgroup(s3));
  CHECK(one.size() == 1);
  for (int g = 0; g < 6; ++g) CHECK(one.action(g, 0) == 0);

  // Partition: fibers of proj have exactly |H| elements.
  std::vector<int> fiber(xs3.size(), 0);
  for (int g = 0; g < 6; ++g) fiber[xs3.proj[g]]++;
  for (int count : fiber) CHECK(count == a3.order());

  // Action is a left action and H stabilizes the base point.
  for (int g1 = 0; g1 < 6; ++g1)
    for (int g2 = 0; g2 < 6; ++g2)
      for (int x0 = 0; x0 < xs3.size(); ++x0)
        CHECK(xs3.action(s3->mul(g1, g2), x0) == xs3.action(g1, xs3.action(g2, x0)));
  for (int h : a3.elements) CHECK(xs3.action(h, xs3.base_point()) == xs3.base_point());

  // proj(g * reps[x]) = action(g, x) by construction; reps invariant.
  for (int i = 0; i < xs3.size(); ++i) CHECK(xs3.reps[xs3.proj[xs3.reps[i]]] == xs3.reps[i]);

  // Cocycle lands in H and satisfies its defining identity.
  for (int g = 0; g < 6; ++g)
    for (int x0 = 0; x0 < xs3.size(); ++x0) {
      const int h = xs3.cocycle(g, x0);
      CHECK(a3.contains(h));
      CHECK(s3->mul(g, xs3.reps[x0]) == s3->mul(xs3.reps[xs3.action(g, x0)], h));
    }
}

TEST_CASE("subgroup enumeration covers the classical counts") {
  CHECK(all_subgroups(catalog("Z6")).size() == 4);
  CHECK(all_subgroups(catalog("S3")).size() == 6);
  CHECK(all_subgroups(catalog("Q8")).size() == 6);
  CHECK(all_subgroups(catalog("S4")).size() == 30);
  CHECK(subgroup_class_representatives(catalog("S4")).size() == 11);
  CHECK(all_subgroups(catalog("Heis3")).size() == 19);
}

TEST_CASE("generating sets generate") {
  for (const char* name : {"Z6", "S3", "D4", "Q8", "Heis3", "S4"}) {
    const GroupPtr g = catalog(name);
    const auto gens = g->generating_set();
    const auto span = closure_oracle(*g, {gens.begin(), gens.end()});
    CHECK(static_cast<int>(span.size()) == g->order());
    CHECK(gens.size() <= 3);
  }
}
