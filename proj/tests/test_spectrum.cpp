#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "burnside/spectrum.hpp"
#include "test_util.hpp"

using namespace burnside;
using namespace burnside::testutil;

namespace {

bool is_subnormal(const SubgroupLattice& lat, int a, int b) {
  if (!lat.leq(a, b)) return false;
  int cur = b;
  while (true) {
    int next = normal_closure(lat, a, cur);
    if (next == cur) return cur == a;
    cur = next;
  }
}

ElemSet set_product(const Group& g, const ElemSet& a, const ElemSet& b) {
  ElemSet out(g.order());
  for (int x = a.first(); x >= 0; x = a.next(x))
    for (int y = b.first(); y >= 0; y = b.next(y)) out.add(g.op(x, y));
  return out;
}

}  // namespace

TEST_CASE("plus_p basics") {
  RingContext s3(symmetric_group(3));
  int a3 = subgroup_of_order(s3.lattice(), 3);
  int full = s3.lattice().full_id();

  // p not dividing |N| leaves the slice alone
  Slice fixed{full, full};
  CHECK(plus_p(s3, fixed, 5, false) == fixed);

  // S3, (A3,A3), p=2 -> (S3,S3)
  Slice aa{a3, a3};
  Slice up = plus_p(s3, aa, 2, false);
  CHECK(up == Slice{full, full});

  CHECK_THROWS_AS(plus_p(s3, aa, 6, false), SpecError);

  // p-group: (1,1) jumps to (G,G)
  RingContext d8(dihedral_group(4));
  Slice bottom{d8.lattice().trivial_id(), d8.lattice().trivial_id()};
  CHECK(plus_p(d8, bottom, 2, false) ==
        Slice{d8.lattice().full_id(), d8.lattice().full_id()});
}

TEST_CASE("plus_p lands in the same class for every Sylow choice") {
  RingContext ctx(symmetric_group(4));
  const SubgroupLattice& lat = ctx.lattice();
  for (int c = 0; c < ctx.slices().num_classes(); ++c) {
    const Slice& sl = ctx.slices().class_rep(c);
    int n = normalizer_pair(lat, sl.t, sl.s);
    for (int p : {2, 3}) {
      int target = 1, rest = lat.order_of(n);
      while (rest % p == 0) {
        rest /= p;
        target *= p;
      }
      int expect = -1;
      for (int pid = 0; pid < lat.size(); ++pid) {
        if (lat.order_of(pid) != target || !lat.leq(pid, n)) continue;
        int pt = lat.join(pid, sl.t), ps = lat.join(pid, sl.s);
        int cls = ctx.slices().class_of_pair(pt, ps);
        if (expect < 0) expect = cls;
        CHECK(cls == expect);
      }
    }
  }
}

TEST_CASE("hat_p reaches the p-prime locus monotonically") {
  for (Group g : {symmetric_group(3), symmetric_group(4), quaternion_group()}) {
    RingContext ctx(std::move(g));
    for (int c = 0; c < ctx.slices().num_classes(); ++c) {
      const Slice& rep = ctx.slices().class_rep(c);
      for (int p : prime_divisors(ctx.group().order())) {
        Slice h = hat_p(ctx, rep, p, false);
        int hc = ctx.slices().class_of_pair(h.t, h.s);
        CHECK(ctx.pair_normalizer_index(hc) % p != 0);
        CHECK(ctx.lattice().leq(rep.t, h.t));
        CHECK(ctx.lattice().leq(rep.s, h.s));
        // idempotent as a class map
        CHECK(hat_p_class(ctx, hc, p, false) == hc);
        // already in the locus means fixed
        if (ctx.pair_normalizer_index(c) % p != 0)
          CHECK(hc == c);
      }
    }
  }
}

TEST_CASE("hat_p matches the mod-p coincidence of mark rows") {
  for (Group g : {symmetric_group(3), dihedral_group(6)}) {
    RingContext ctx(std::move(g));
    int n = ctx.slices().num_classes();
    const auto& m = ctx.mark_matrix();
    for (int c = 0; c < n; ++c)
      for (int p : prime_divisors(ctx.group().order())) {
        int h = hat_p_class(ctx, c, p, false);
        for (int col = 0; col < n; ++col) {
          Int diff = m[size_t(c) * n + col] - m[size_t(h) * n + col];
          CHECK(diff % p == 0);
        }
      }
  }
}

TEST_CASE("subnormality characterization of the closure") {
  for (Group g : {symmetric_group(4), dihedral_group(6), quaternion_group()}) {
    RingContext ctx(std::move(g));
    const SubgroupLattice& lat = ctx.lattice();
    for (int i = 0; i < ctx.slices().num_slices(); ++i) {
      const Slice& sl = ctx.slices().slice(i);
      for (int p : prime_divisors(ctx.group().order())) {
        Slice h = hat_p(ctx, sl, p, false);
        CHECK(is_subnormal(lat, sl.t, h.t));
        CHECK(is_subnormal(lat, sl.s, h.s));
        int idx = lat.order_of(h.s) / lat.order_of(sl.s);
        while (idx % p == 0) idx /= p;
        CHECK(idx == 1);
        CHECK(set_product(ctx.group(), lat.sub(sl.t).members,
                          lat.sub(h.s).members) == lat.sub(h.t).members);
      }
    }
  }
}

TEST_CASE("section-mode closures stay sections and reach the locus") {
  for (Group g : {symmetric_group(3), symmetric_group(4), quaternion_group()}) {
    RingContext ctx(std::move(g));
    for (int sc : ctx.slices().section_classes()) {
      const Slice& rep = ctx.slices().class_rep(sc);
      for (int p : prime_divisors(ctx.group().order())) {
        Slice up = plus_p(ctx, rep, p, true);
        CHECK(ctx.lattice().is_normal_in(up.s, up.t));
        Slice h = hat_p(ctx, rep, p, true);
        int hc = ctx.slices().class_of_pair(h.t, h.s);
        CHECK(ctx.slices().is_section_class(hc));
        CHECK(ctx.pair_normalizer_index(hc) % p != 0);
        CHECK(hat_p_class(ctx, hc, p, true) == hc);
      }
    }
  }
}

TEST_CASE("section support check matches gamma denominators") {
  RingContext ctx(symmetric_group(4));
  std::mt19937_64 rng(73);
  std::vector<int> primes = prime_divisors(ctx.group().order());
  const auto& secs = ctx.slices().section_classes();
  int n = int(secs.size());
  std::vector<char> all(n, 1);
  CHECK(idempotent_support_check(ctx, all, primes, RingTag::section));
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<char> mask(n);
    for (auto& b : mask) b = rng() % 2;
    QRingElement e;
    e.tag = RingTag::section;
    for (int i = 0; i < n; ++i)
      if (mask[i]) {
        const Slice& sl = ctx.slices().class_rep(secs[i]);
        e = add(e, idempotent_gamma(ctx, sl.t, sl.s));
      }
    bool denom_ok = true;
    for (auto& [c, v] : e.coeffs)
      for (int p : primes)
        if (v.get_den() % p == 0) denom_ok = false;
    CHECK(idempotent_support_check(ctx, mask, primes, RingTag::section) ==
          denom_ok);
  }
}

TEST_CASE("solvable groups have connected spectra") {
  for (Group g : {cyclic_group(6), symmetric_group(3), dihedral_group(4),
                  quaternion_group(), symmetric_group(4)}) {
    RingContext ctx(std::move(g));
    CHECK(spectrum_components(ctx, RingTag::slice).size() == 1);
    CHECK(spectrum_components(ctx, RingTag::section).size() == 1);
  }
}

TEST_CASE("component idempotents over Z are integral and orthogonal") {
  RingContext ctx(symmetric_group(4));
  for (RingTag tag : {RingTag::slice, RingTag::section}) {
    auto comps = spectrum_components(ctx, tag);
    QRingElement total;
    total.tag = tag;
    for (auto& comp : comps) {
      CHECK(is_integral(comp.idempotent));
      CHECK(multiply(ctx, comp.idempotent, comp.idempotent) == comp.idempotent);
      total = add(total, comp.idempotent);
    }
    CHECK(total == to_rational(one(ctx, tag)));
  }
}

TEST_CASE("Z_(p) components are indexed by the p-prime locus") {
  for (Group g : {symmetric_group(3), symmetric_group(4)}) {
    RingContext ctx(std::move(g));
    for (int p : prime_divisors(ctx.group().order())) {
      auto comps = spectrum_components(ctx, RingTag::slice, p);
      int locus = 0;
      for (int c = 0; c < ctx.slices().num_classes(); ++c)
        if (ctx.pair_normalizer_index(c) % p != 0) ++locus;
      CHECK(int(comps.size()) == locus);
      // each component has exactly one class in the locus, and the
      // idempotent denominators avoid p
      for (auto& comp : comps) {
        int in_locus = 0;
        for (int c : comp.classes)
          if (ctx.pair_normalizer_index(c) % p != 0) ++in_locus;
        CHECK(in_locus == 1);
        for (auto& [c, v] : comp.idempotent.coeffs)
          CHECK(v.get_den() % p != 0);
      }
    }
  }
}

TEST_CASE("ideal containment criterion") {
  RingContext ctx(symmetric_group(3));
  int n = ctx.slices().num_classes();
  for (int c = 0; c < n; ++c) {
    PrimeIdealLabel zero{c, 0};
    CHECK(ideal_contains(ctx, zero, zero, RingTag::slice));
    for (int p : {2, 3}) {
      int h = hat_p_class(ctx, c, p, false);
      PrimeIdealLabel hp{h, p};
      REQUIRE(label_valid(ctx, hp, RingTag::slice));
      CHECK(ideal_contains(ctx, hp, zero, RingTag::slice));
      // reverse containment only on equal labels
      CHECK_FALSE(ideal_contains(ctx, zero, hp, RingTag::slice));
    }
    for (int c2 = 0; c2 < n; ++c2)
      if (c2 != c)
        CHECK_FALSE(ideal_contains(ctx, PrimeIdealLabel{c, 0},
                                   PrimeIdealLabel{c2, 0}, RingTag::slice));
  }
  // invalid: characteristic p with p dividing |N/S|
  int bottom = ctx.slices().class_of_pair(ctx.lattice().trivial_id(),
                                          ctx.lattice().trivial_id());
  CHECK_FALSE(label_valid(ctx, PrimeIdealLabel{bottom, 2}, RingTag::slice));
  CHECK_THROWS_AS(ideal_contains(ctx, PrimeIdealLabel{bottom, 2},
                                 PrimeIdealLabel{bottom, 0}, RingTag::slice),
                  SpecError);
}

TEST_CASE("idempotent support check") {
  RingContext ctx(symmetric_group(3));
  std::mt19937_64 rng(67);
  int n = ctx.slices().num_classes();
  std::vector<int> all_primes = prime_divisors(ctx.group().order());

  // the full set carries the idempotent 1
  std::vector<char> all(n, 1);
  CHECK(idempotent_support_check(ctx, all, all_primes, RingTag::slice));

  // single hat-p fibers pass for pi = {p}
  for (int p : all_primes) {
    for (int c = 0; c < n; ++c) {
      if (ctx.pair_normalizer_index(c) % p == 0) continue;
      std::vector<char> fiber(n, 0);
      for (int c2 = 0; c2 < n; ++c2)
        if (hat_p_class(ctx, c2, p, false) == c) fiber[c2] = 1;
      CHECK(idempotent_support_check(ctx, fiber, {p}, RingTag::slice));
    }
  }

  // equivalence with pi-integrality of the summed idempotent
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<char> mask(n);
    for (auto& b : mask) b = rng() % 2;
    QRingElement e;
    e.tag = RingTag::slice;
    for (int c = 0; c < n; ++c)
      if (mask[c]) {
        const Slice& sl = ctx.slices().class_rep(c);
        e = add(e, idempotent_xi(ctx, sl.t, sl.s));
      }
    bool denom_ok = true;
    for (auto& [c, v] : e.coeffs)
      for (int p : all_primes)
        if (v.get_den() % p == 0) denom_ok = false;
    CHECK(idempotent_support_check(ctx, mask, all_primes, RingTag::slice) ==
          denom_ok);
  }
}

TEST_CASE("A5 spectra") {
  RingContext ctx(alternating_group(5));
  auto xi_comps = spectrum_components(ctx, RingTag::slice);
  CHECK(xi_comps.size() >= 2);
  for (auto& comp : xi_comps) CHECK(is_integral(comp.idempotent));

  auto gamma_comps = spectrum_components(ctx, RingTag::section);
  REQUIRE(gamma_comps.size() == 2);
  // labels are the perfect subgroup classes {1, A5}
  std::set<int> labels;
  for (auto& comp : gamma_comps) labels.insert(comp.label_subgroup_class);
  CHECK(labels.count(ctx.lattice().class_of(ctx.lattice().trivial_id())));
  CHECK(labels.count(ctx.lattice().class_of(ctx.lattice().full_id())));

  // Each Gamma component idempotent is i_G of the matching primitive
  // idempotent of B(G): the sum of the rational Burnside idempotents
  // over the subgroup classes whose perfect core is the label. The
  // perfect-subgroup formula itself is the single-class case (here the
  // A5-labeled component).
  for (auto& comp : gamma_comps) {
    QRingElement expect;
    expect.tag = RingTag::section;
    for (int d = 0; d < ctx.lattice().num_classes(); ++d) {
      int rep = ctx.lattice().class_rep(d);
      if (ctx.lattice().class_of(derived_series_limit(ctx.lattice(), rep)) !=
          comp.label_subgroup_class)
        continue;
      QRingElement e = burnside_idempotent(ctx, rep);
      for (auto& [c, v] : e.coeffs) {
        int k = ctx.lattice().class_rep(c);
        expect.addc(ctx.slices().class_of_pair(k, k), v);
      }
    }
    CHECK(comp.idempotent == expect);
    CHECK(is_integral(comp.idempotent));
  }
  // single-class case: the A5 label carries the closed formula
  for (auto& comp : gamma_comps) {
    int h = ctx.lattice().class_rep(comp.label_subgroup_class);
    if (h != ctx.lattice().full_id()) continue;
    QRingElement expect;
    expect.tag = RingTag::section;
    const SubgroupMobius& mu = ctx.mobius();
    Int norm(ctx.lattice().order_of(ctx.lattice().normalizer(h)));
    for (int k = 0; k < ctx.lattice().size(); ++k) {
      if (!ctx.lattice().leq(k, h)) continue;
      Int w = Int(ctx.lattice().order_of(k)) * mu.mu(k, h);
      if (w == 0) continue;
      Rat q(w, norm);
      q.canonicalize();
      expect.addc(ctx.slices().class_of_pair(k, k), q);
    }
    CHECK(comp.idempotent == expect);
  }
}

TEST_CASE("Gamma components count perfect subgroup classes everywhere") {
  for (Group g : {symmetric_group(3), symmetric_group(4), quaternion_group(),
                  cyclic_group(12)}) {
    RingContext ctx(std::move(g));
    int perfect = 0;
    for (int c = 0; c < ctx.lattice().num_classes(); ++c) {
      int rep = ctx.lattice().class_rep(c);
      if (derived_subgroup(ctx.lattice(), rep) == rep) ++perfect;
    }
    CHECK(int(spectrum_components(ctx, RingTag::section).size()) == perfect);
  }
}
