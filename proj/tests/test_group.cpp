#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "burnside/group.hpp"

using namespace burnside;

TEST_CASE("family constructors") {
  CHECK(cyclic_group(2).order() == 2);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(quaternion_group().order() == 8);
  CHECK(elementary_abelian_group(2, 3).order() == 8);
  CHECK(direct_product(cyclic_group(2), cyclic_group(4)).order() == 8);
}

TEST_CASE("quaternion element orders") {
  Group q = quaternion_group();
  int n1 = 0, n2 = 0, n4 = 0;
  for (int a = 0; a < 8; ++a) {
    int o = q.element_order(a);
    if (o == 1) ++n1;
    if (o == 2) ++n2;
    if (o == 4) ++n4;
  }
  CHECK(n1 == 1);
  CHECK(n2 == 1);  // only -1 has order 2, distinguishing Q8 from D8
  CHECK(n4 == 6);
  CHECK_FALSE(q.is_abelian());
}

TEST_CASE("elementary abelian structure") {
  Group e = elementary_abelian_group(2, 3);
  CHECK(e.is_abelian());
  for (int a = 1; a < e.order(); ++a) CHECK(e.element_order(a) == 2);
}

TEST_CASE("permutation generators give A5") {
  // closure enumeration of <(1 2 3 4 5), (1 2)(3 4)>
  Group g = parse_group_text("perm 5\n(1 2 3 4 5)\n(1 2)(3 4)\n");
  CHECK(g.order() == 60);
}

TEST_CASE("group file directives") {
  Group p = parse_group_text("family cyclic 2\nfamily cyclic 4\nproduct\n");
  CHECK(p.order() == 8);
  CHECK(p.is_abelian());

  Group t = parse_group_text("table 2\n0 1\n1 0\n");
  CHECK(t.order() == 2);

  CHECK_THROWS_AS(parse_group_text("family nosuch 3\n"), SpecError);
  CHECK_THROWS_AS(parse_group_text(""), SpecError);
  CHECK_THROWS_AS(parse_group_text("table 2\n0 1\n1 1\n"), SpecError);
}

TEST_CASE("non-associative table rejected") {
  // cyclic C3 table with one entry corrupted
  std::vector<int> mul = {0, 1, 2, 1, 2, 0, 2, 0, 0};
  CHECK_THROWS_AS(Group::from_table(mul, "bad"), SpecError);
}

TEST_CASE("cap enforcement") {
  CHECK_THROWS_AS(parse_group_text("family symmetric 5\n"), CapError);
  CHECK_THROWS_AS(parse_group_text("perm 7\n(1 2 3 4 5 6 7)\n(1 2)\n", 100),
                  CapError);
  CHECK(parse_group_text("family symmetric 5\n", 120).order() == 120);
}

TEST_CASE("quotient group") {
  Group s3 = symmetric_group(3);
  ElemSet a3(6);
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.add(x);
  CHECK(a3.count() == 3);
  QuotientGroup q = quotient_group(s3, a3);
  CHECK(q.group.order() == 2);
  CHECK(q.proj[0] == 0);

  ElemSet c2(6);
  c2.add(0);
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      c2.add(x);
      break;
    }
  CHECK_THROWS_AS(quotient_group(s3, c2), SpecError);
}

TEST_CASE("subgroup as group") {
  Group s3 = symmetric_group(3);
  ElemSet a3(6);
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.add(x);
  SubgroupGroup h = subgroup_as_group(s3, a3, "A3");
  CHECK(h.group.order() == 3);
  CHECK(h.embed[0] == 0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(h.embed[h.group.op(a, b)] == s3.op(h.embed[a], h.embed[b]));
}

TEST_CASE("generated subgroup closure") {
  Group s4 = symmetric_group(4);
  // full group from a transposition and a 4-cycle
  int four = -1, two = -1;
  for (int x = 0; x < 24; ++x) {
    if (s4.element_order(x) == 4 && four < 0) four = x;
    if (s4.element_order(x) == 2 && two < 0) two = x;
  }
  ElemSet all = s4.generated_subgroup({four, two});
  CHECK((all.count() == 24 || all.count() == 8));  // depends on the pair
  ElemSet one = s4.generated_subgroup({});
  CHECK(one.count() == 1);
}
