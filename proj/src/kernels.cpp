#include "burnside/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace burnside {

namespace {

// phi_{T,S}(<V,U>) = |{g in G : T^g <= V and S^g <= U}| / |U|
Int mark_entry(const SliceTable& st, int r, int c) {
  const SubgroupLattice& lat = st.lattice();
  const Group& g = lat.group();
  const Slice& ts = st.class_rep(r);
  const Slice& vu = st.class_rep(c);
  long count = 0;
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inverse(x);
    if (lat.leq(lat.conjugate(ts.t, xi), vu.t) &&
        lat.leq(lat.conjugate(ts.s, xi), vu.s))
      ++count;
  }
  return Int(count / lat.order_of(vu.s));
}

std::vector<std::pair<int, int>> product_entry(const SliceTable& st, int c1,
                                               int c2,
                                               const std::vector<int>& sweep) {
  const SubgroupLattice& lat = st.lattice();
  const Group& g = lat.group();
  const Slice& a = st.class_rep(c1);  // (T,S)
  const Slice& b = st.class_rep(c2);  // (Y,X)
  const ElemSet& sm = lat.sub(a.s).members;
  const ElemSet& xm = lat.sub(b.s).members;

  std::vector<int> coeff(st.num_classes(), 0);
  ElemSet covered(g.order());
  for (int w : sweep) {
    if (covered.test(w)) continue;
    // mark the double coset S w X
    for (int s = sm.first(); s >= 0; s = sm.next(s)) {
      int sw = g.op(s, w);
      for (int x = xm.first(); x >= 0; x = xm.next(x)) covered.add(g.op(sw, x));
    }
    int t2 = lat.meet(a.t, lat.conjugate(b.t, w));
    int s2 = lat.meet(a.s, lat.conjugate(b.s, w));
    coeff[st.class_of_pair(t2, s2)]++;
  }
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < st.num_classes(); ++c)
    if (coeff[c]) out.emplace_back(c, coeff[c]);
  return out;
}

}  // namespace

std::vector<Int> mark_matrix_serial(const SliceTable& st) {
  int n = st.num_classes();
  std::vector<Int> m(size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[size_t(r) * n + c] = mark_entry(st, r, c);
  return m;
}

std::vector<Int> mark_matrix_parallel(const SliceTable& st) {
  int n = st.num_classes();
  std::vector<Int> m(size_t(n) * n);
#pragma omp parallel for schedule(dynamic, 16)
  for (int rc = 0; rc < n * n; ++rc)
    m[rc] = mark_entry(st, rc / n, rc % n);
  return m;
}

std::vector<std::pair<int, int>> product_classes_with_sweep(
    const SliceTable& st, int c1, int c2, const std::vector<int>& sweep) {
  return product_entry(st, c1, c2, sweep);
}

ProductTable product_table_serial(const SliceTable& st) {
  int n = st.num_classes();
  std::vector<int> sweep(st.lattice().group().order());
  std::iota(sweep.begin(), sweep.end(), 0);
  ProductTable t(size_t(n) * n);
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = 0; c2 <= c1; ++c2) {
      t[size_t(c1) * n + c2] = product_entry(st, c1, c2, sweep);
      t[size_t(c2) * n + c1] = t[size_t(c1) * n + c2];
    }
  return t;
}

ProductTable product_table_parallel(const SliceTable& st) {
  int n = st.num_classes();
  std::vector<int> sweep(st.lattice().group().order());
  std::iota(sweep.begin(), sweep.end(), 0);
  ProductTable t(size_t(n) * n);
#pragma omp parallel for schedule(dynamic, 4)
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = 0; c2 <= c1; ++c2)
      t[size_t(c1) * n + c2] = product_entry(st, c1, c2, sweep);
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = c1 + 1; c2 < n; ++c2)
      t[size_t(c1) * n + c2] = t[size_t(c2) * n + c1];
  return t;
}

std::vector<Int> burnside_mark_matrix(const SubgroupLattice& lat) {
  const Group& g = lat.group();
  int n = lat.num_classes();
  std::vector<Int> m(size_t(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int a = lat.class_rep(r), b = lat.class_rep(c);
      long count = 0;
      for (int x = 0; x < g.order(); ++x)
        if (lat.leq(lat.conjugate(a, g.inverse(x)), b)) ++count;
      m[size_t(r) * n + c] = Int(count / lat.order_of(b));
    }
  return m;
}

ProductTable burnside_product_table(const SubgroupLattice& lat) {
  const Group& g = lat.group();
  int n = lat.num_classes();
  ProductTable t(size_t(n) * n);
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = 0; c2 < n; ++c2) {
      int a = lat.class_rep(c1), b = lat.class_rep(c2);
      const ElemSet& am = lat.sub(a).members;
      const ElemSet& bm = lat.sub(b).members;
      std::vector<int> coeff(n, 0);
      ElemSet covered(g.order());
      for (int w = 0; w < g.order(); ++w) {
        if (covered.test(w)) continue;
        for (int s = am.first(); s >= 0; s = am.next(s)) {
          int sw = g.op(s, w);
          for (int x = bm.first(); x >= 0; x = bm.next(x))
            covered.add(g.op(sw, x));
        }
        coeff[lat.class_of(lat.meet(a, lat.conjugate(b, w)))]++;
      }
      auto& out = t[size_t(c1) * n + c2];
      for (int c = 0; c < n; ++c)
        if (coeff[c]) out.emplace_back(c, coeff[c]);
    }
  return t;
}

}  // namespace burnside
