#include "burnside/slices.hpp"

#include <algorithm>
#include <numeric>

namespace burnside {

SliceTable::SliceTable(const SubgroupLattice& lat) : lat_(&lat) {
  int m = lat.size();
  pair_index_.assign(size_t(m) * m, -1);
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < m; ++s)
      if (lat.leq(s, t)) {
        pair_index_[size_t(t) * m + s] = int(slices_.size());
        slices_.push_back(Slice{t, s});
      }

  int n = lat.group().order();
  int ns = int(slices_.size());

  // Conjugation orbits; each class keyed first by its lex-least member
  // (subgroup ids are lex-sorted within an order, so pair comparison on
  // (T id, S id) realizes lexicographic-least (T members, S members)).
  std::vector<int> orbit_of(ns, -1);
  std::vector<int> orbit_min;
  int norb = 0;
  for (int i = 0; i < ns; ++i) {
    if (orbit_of[i] >= 0) continue;
    int o = norb++;
    int best = i;
    for (int g = 0; g < n; ++g) {
      int j = conjugate(i, g);
      orbit_of[j] = o;
      if (std::pair(slices_[j].t, slices_[j].s) <
          std::pair(slices_[best].t, slices_[best].s))
        best = j;
    }
    orbit_min.push_back(best);
  }

  // Class ids follow a fixed linear extension of the slice order.
  std::vector<int> order(norb);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int o) {
    const Slice& sl = slices_[orbit_min[o]];
    return std::tuple(lat_->order_of(sl.s), lat_->order_of(sl.t), sl.t, sl.s);
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> rank(norb);
  for (int i = 0; i < norb; ++i) rank[order[i]] = i;

  class_of_.resize(ns);
  class_rep_.assign(norb, -1);
  class_size_.assign(norb, 0);
  for (int i = 0; i < ns; ++i) {
    int c = rank[orbit_of[i]];
    class_of_[i] = c;
    class_rep_[c] = orbit_min[orbit_of[i]];
    class_size_[c]++;
  }

  section_mask_.assign(norb, 0);
  section_pos_.assign(norb, -1);
  for (int c = 0; c < norb; ++c) {
    const Slice& sl = slices_[class_rep_[c]];
    if (lat.is_normal_in(sl.s, sl.t)) {
      section_mask_[c] = 1;
      section_pos_[c] = int(section_classes_.size());
      section_classes_.push_back(c);
    }
  }

  closure_class_.assign(norb, -1);
  for (int c = 0; c < norb; ++c) {
    Slice cl = closed_slice(class_rep(c));
    closure_class_[c] = class_of_pair(cl.t, cl.s);
  }
}

int SliceTable::index_of(int t, int s) const {
  return pair_index_[size_t(t) * lat_->size() + s];
}

SubgroupMobius::SubgroupMobius(const SubgroupLattice& lat) : lat_(&lat) {
  int m = lat.size();
  table_.assign(size_t(m) * m, 0);
  // mu(A,A) = 1; mu(A,B) = -sum over A <= C < B of mu(A,C). Subgroup ids
  // are sorted by order, so increasing B visits C before B.
  for (int a = 0; a < m; ++a) {
    table_[size_t(a) * m + a] = 1;
    for (int b = a + 1; b < m; ++b) {
      if (!lat.leq(a, b)) continue;
      Int acc = 0;
      for (int c = a; c < b; ++c)
        if (lat.leq(a, c) && lat.leq(c, b)) acc += table_[size_t(a) * m + c];
      table_[size_t(a) * m + b] = -acc;
    }
  }
}

const Int& SubgroupMobius::mu(int a, int b) const {
  if (!lat_->leq(a, b)) throw SpecError("mobius: A not contained in B");
  return table_[size_t(a) * lat_->size() + b];
}

Int mobius_pi(const SliceTable& st, const SubgroupMobius& mu, const Slice& a,
              const Slice& b) {
  const SubgroupLattice& lat = st.lattice();
  if (!lat.leq(a.t, b.t) || !lat.leq(a.s, b.s))
    throw SpecError("mobius_pi: first slice not below second");
  if (!lat.leq(b.s, a.t)) return 0;  // needs U <= S <= V <= T
  return mu.mu(a.s, b.s) * mu.mu(a.t, b.t);
}

Int mobius_sigma(const SliceTable& st, const SubgroupMobius& mu,
                 const Slice& a, const Slice& b) {
  const SubgroupLattice& lat = st.lattice();
  if (!lat.is_normal_in(a.s, a.t) || !lat.is_normal_in(b.s, b.t))
    throw SpecError("mobius_sigma: inputs must be sections");
  if (!lat.leq(a.t, b.t) || !lat.leq(a.s, b.s))
    throw SpecError("mobius_sigma: first section not below second");
  Int inner = 0;
  for (int x = 0; x < lat.size(); ++x) {
    if (!lat.leq(a.s, x) || !lat.leq(x, a.t)) continue;
    if (normal_closure(lat, x, b.t) != b.s) continue;
    inner += mu.mu(a.s, x);
  }
  return mu.mu(a.t, b.t) * inner;
}

}  // namespace burnside
