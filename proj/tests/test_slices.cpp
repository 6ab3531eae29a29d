#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "burnside/slices.hpp"

using namespace burnside;

namespace {

struct Tables {
  Group g;
  SubgroupLattice lat;
  SliceTable st;
  SubgroupMobius mu;
  explicit Tables(Group grp) : g(std::move(grp)), lat(g), st(lat), mu(lat) {}
};

// Inverse of the incidence (zeta) matrix of a poset given by a leq
// predicate, via back-substitution along a linear extension.
std::vector<Int> invert_incidence(int n, const std::vector<char>& leq,
                                  const std::vector<int>& ext) {
  // position in the extension
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[ext[i]] = i;
  std::vector<Int> inv(size_t(n) * n, 0);
  // column by column: solve Z * M(.,j) = e_j
  for (int j = 0; j < n; ++j) {
    for (int ii = pos[j]; ii >= 0; --ii) {
      int i = ext[ii];
      if (!leq[size_t(i) * n + j]) continue;
      Int acc = (i == j) ? 1 : 0;
      for (int kk = ii + 1; kk <= pos[j]; ++kk) {
        int k = ext[kk];
        if (leq[size_t(i) * n + k]) acc -= inv[size_t(k) * n + j];
      }
      inv[size_t(i) * n + j] = acc;
    }
  }
  return inv;
}

}  // namespace

TEST_CASE("slice tables for small groups") {
  Tables triv(cyclic_group(1));
  CHECK(triv.st.num_slices() == 1);
  CHECK(triv.st.num_classes() == 1);
  CHECK(triv.st.is_section_class(0));

  Tables c2(cyclic_group(2));
  CHECK(c2.st.num_slices() == 3);
  CHECK(c2.st.num_classes() == 3);
  CHECK(c2.st.num_section_classes() == 3);

  Tables s3(symmetric_group(3));
  CHECK(s3.st.num_classes() == 9);
  CHECK(s3.st.num_section_classes() == 8);
  // the non-section class is (S3, C2)
  for (int c = 0; c < s3.st.num_classes(); ++c)
    if (!s3.st.is_section_class(c)) {
      const Slice& sl = s3.st.class_rep(c);
      CHECK(sl.t == s3.lat.full_id());
      CHECK(s3.lat.order_of(sl.s) == 2);
    }
}

TEST_CASE("every pair appears exactly once") {
  Tables t(dihedral_group(4));
  int count = 0;
  for (int a = 0; a < t.lat.size(); ++a)
    for (int b = 0; b < t.lat.size(); ++b)
      if (t.lat.leq(b, a)) {
        ++count;
        CHECK(t.st.index_of(a, b) >= 0);
      }
  CHECK(count == t.st.num_slices());
}

TEST_CASE("class reps are lexicographically least and conjugation-stable") {
  Tables t(symmetric_group(3));
  for (int i = 0; i < t.st.num_slices(); ++i) {
    int c = t.st.class_of(i);
    for (int g = 0; g < t.g.order(); ++g)
      CHECK(t.st.class_of(t.st.conjugate(i, g)) == c);
    const Slice& rep = t.st.class_rep(c);
    const Slice& sl = t.st.slice(i);
    CHECK(std::pair(rep.t, rep.s) <= std::pair(sl.t, sl.s));
  }
}

TEST_CASE("section mask matches normality and respects conjugation") {
  Tables t(symmetric_group(4));
  for (int i = 0; i < t.st.num_slices(); ++i) {
    const Slice& sl = t.st.slice(i);
    CHECK(t.st.is_section_class(t.st.class_of(i)) ==
          t.lat.is_normal_in(sl.s, sl.t));
  }
}

TEST_CASE("closure map is inflationary, idempotent, lands in sections") {
  Tables t(symmetric_group(4));
  for (int c = 0; c < t.st.num_classes(); ++c) {
    int cc = t.st.closure_class(c);
    CHECK(t.st.is_section_class(cc));
    CHECK(t.st.closure_class(cc) == cc);
    const Slice& a = t.st.class_rep(c);
    Slice cl = t.st.closed_slice(a);
    CHECK(t.lat.leq(a.s, cl.s));
    CHECK(cl.t == a.t);
    if (t.st.is_section_class(c)) CHECK(cc == c);
  }
}

TEST_CASE("subgroup mobius values") {
  Tables t(elementary_abelian_group(2, 2));
  CHECK(t.mu.mu(t.lat.full_id(), t.lat.full_id()) == 1);
  // 3 intermediate subgroups of order 2: mu(1,G) = 2
  CHECK(t.mu.mu(t.lat.trivial_id(), t.lat.full_id()) == 2);
  for (int i = 0; i < t.lat.size(); ++i)
    if (t.lat.order_of(i) == 2)
      CHECK(t.mu.mu(t.lat.trivial_id(), i) == -1);  // covering pair
  CHECK_THROWS_AS(t.mu.mu(t.lat.full_id(), t.lat.trivial_id()), SpecError);
}

TEST_CASE("mobius_pi basics") {
  Tables t(symmetric_group(3));
  for (int c = 0; c < t.st.num_classes(); ++c) {
    const Slice& sl = t.st.class_rep(c);
    CHECK(mobius_pi(t.st, t.mu, sl, sl) == 1);
  }
  // S not <= V forces zero
  Slice bottom{t.lat.trivial_id(), t.lat.trivial_id()};
  int c2 = -1;
  for (int i = 0; i < t.lat.size(); ++i)
    if (t.lat.order_of(i) == 2) c2 = i;
  Slice top{t.lat.full_id(), c2};
  CHECK(mobius_pi(t.st, t.mu, bottom, top) == 0);
  CHECK_THROWS_AS(mobius_pi(t.st, t.mu, top, bottom), SpecError);
}

TEST_CASE("mobius_pi equals inverse incidence matrix") {
  // the always-on oracle: every corpus group has |Pi(G)| <= 400
  for (Group g : {symmetric_group(3), dihedral_group(4), quaternion_group(),
                  cyclic_group(12), alternating_group(4), dihedral_group(6),
                  elementary_abelian_group(2, 3),
                  direct_product(cyclic_group(2), cyclic_group(4)),
                  symmetric_group(4), alternating_group(5)}) {
    Tables t(std::move(g));
    int n = t.st.num_slices();
    std::vector<char> leq(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) leq[size_t(i) * n + j] = t.st.leq(i, j);
    std::vector<int> ext(n);
    std::iota(ext.begin(), ext.end(), 0);
    std::sort(ext.begin(), ext.end(), [&](int a, int b) {
      auto ka = std::tuple(t.lat.order_of(t.st.slice(a).s),
                           t.lat.order_of(t.st.slice(a).t), a);
      auto kb = std::tuple(t.lat.order_of(t.st.slice(b).s),
                           t.lat.order_of(t.st.slice(b).t), b);
      return ka < kb;
    });
    std::vector<Int> inv = invert_incidence(n, leq, ext);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!t.st.leq(i, j)) continue;
        CHECK(mobius_pi(t.st, t.mu, t.st.slice(i), t.st.slice(j)) ==
              inv[size_t(i) * n + j]);
      }
  }
}

TEST_CASE("mobius_sigma equals inverse incidence matrix on sections") {
  for (Group g : {symmetric_group(3), dihedral_group(4), quaternion_group(),
                  symmetric_group(4), dihedral_group(6),
                  alternating_group(4), alternating_group(5)}) {
    Tables t(std::move(g));
    std::vector<int> secs;
    for (int i = 0; i < t.st.num_slices(); ++i)
      if (t.st.is_section_slice(i)) secs.push_back(i);
    int n = int(secs.size());
    std::vector<char> leq(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        leq[size_t(i) * n + j] = t.st.leq(secs[i], secs[j]);
    std::vector<int> ext(n);
    std::iota(ext.begin(), ext.end(), 0);
    std::sort(ext.begin(), ext.end(), [&](int a, int b) {
      auto ka = std::tuple(t.lat.order_of(t.st.slice(secs[a]).s),
                           t.lat.order_of(t.st.slice(secs[a]).t), a);
      auto kb = std::tuple(t.lat.order_of(t.st.slice(secs[b]).s),
                           t.lat.order_of(t.st.slice(secs[b]).t), b);
      return ka < kb;
    });
    std::vector<Int> inv = invert_incidence(n, leq, ext);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!leq[size_t(i) * n + j]) continue;
        CHECK(mobius_sigma(t.st, t.mu, t.st.slice(secs[i]),
                           t.st.slice(secs[j])) == inv[size_t(i) * n + j]);
      }
  }
}

TEST_CASE("mobius_sigma matches mobius_pi on abelian groups") {
  Tables t(direct_product(cyclic_group(2), cyclic_group(4)));
  for (int i = 0; i < t.st.num_slices(); ++i)
    for (int j = 0; j < t.st.num_slices(); ++j) {
      if (!t.st.leq(i, j)) continue;
      CHECK(mobius_sigma(t.st, t.mu, t.st.slice(i), t.st.slice(j)) ==
            mobius_pi(t.st, t.mu, t.st.slice(i), t.st.slice(j)));
    }
}

TEST_CASE("defining recursion for the pair poset") {
  Tables t(symmetric_group(3));
  int n = t.st.num_slices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!t.st.leq(i, j)) continue;
      Int acc = 0;
      for (int k = 0; k < n; ++k)
        if (t.st.leq(i, k) && t.st.leq(k, j))
          acc += mobius_pi(t.st, t.mu, t.st.slice(i), t.st.slice(k));
      CHECK(acc == (i == j ? 1 : 0));
    }
}

TEST_CASE("conjugation invariance of mobius_pi") {
  Tables t(symmetric_group(3));
  for (int i = 0; i < t.st.num_slices(); ++i)
    for (int j = 0; j < t.st.num_slices(); ++j) {
      if (!t.st.leq(i, j)) continue;
      Int base = mobius_pi(t.st, t.mu, t.st.slice(i), t.st.slice(j));
      for (int g = 0; g < t.g.order(); ++g) {
        int gi = t.st.conjugate(i, g), gj = t.st.conjugate(j, g);
        CHECK(mobius_pi(t.st, t.mu, t.st.slice(gi), t.st.slice(gj)) == base);
      }
    }
}
