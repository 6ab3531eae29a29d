#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "burnside/ring.hpp"

using namespace burnside;

TEST_CASE("parallel kernels match the serial reference") {
  for (Group g : {symmetric_group(3), dihedral_group(6), symmetric_group(4),
                  alternating_group(5)}) {
    SubgroupLattice lat(g);
    SliceTable st(lat);
    CHECK(mark_matrix_parallel(st) == mark_matrix_serial(st));
    CHECK(product_table_parallel(st) == product_table_serial(st));
  }
}

TEST_CASE("parallel runs are deterministic") {
  Group g = symmetric_group(4);
  SubgroupLattice lat(g);
  SliceTable st(lat);
  auto m1 = mark_matrix_parallel(st);
  auto m2 = mark_matrix_parallel(st);
  CHECK(m1 == m2);
  auto p1 = product_table_parallel(st);
  auto p2 = product_table_parallel(st);
  CHECK(p1 == p2);
}

TEST_CASE("concurrent reads of one context are safe and consistent") {
  RingContext ctx(symmetric_group(4));
  int n = ctx.slices().num_classes();
  std::vector<Int> expect(n);
  RingElement x = one(ctx);
  for (int c = 0; c < n; ++c) {
    const Slice& sl = ctx.slices().class_rep(c);
    expect[c] = mark(ctx, sl.t, sl.s, x);
  }
  std::vector<char> good(n, 0);
#pragma omp parallel for
  for (int c = 0; c < n; ++c) {
    const Slice& sl = ctx.slices().class_rep(c);
    good[c] = mark(ctx, sl.t, sl.s, x) == expect[c] &&
              normalizer_cosets(ctx, c, false).index ==
                  ctx.pair_normalizer_index(c);
  }
  for (int c = 0; c < n; ++c) CHECK(good[c]);
}

TEST_CASE("contexts built either way agree") {
  burnside::ContextOptions serial{kDefaultOrderCap, false};
  burnside::ContextOptions parallel{kDefaultOrderCap, true};
  RingContext a(symmetric_group(4), serial);
  RingContext b(symmetric_group(4), parallel);
  CHECK(a.mark_matrix() == b.mark_matrix());
  CHECK(a.products() == b.products());
  CHECK(a.burnside_marks() == b.burnside_marks());
}
