#include "burnside/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace burnside {

Slice plus_p(const RingContext& ctx, const Slice& sl, int p,
             bool section_mode) {
  if (!is_prime(p)) throw SpecError("plus_p: p must be prime");
  const SubgroupLattice& lat = ctx.lattice();
  int n = normalizer_pair(lat, sl.t, sl.s);
  int syl = sylow_subgroup(lat, n, p);
  int pt = lat.join(syl, sl.t);
  int ps = lat.join(syl, sl.s);
  if (section_mode) ps = normal_closure(lat, ps, pt);
  return Slice{pt, ps};
}

Slice hat_p(const RingContext& ctx, const Slice& sl, int p,
            bool section_mode) {
  Slice cur = sl;
  while (true) {
    Slice next = plus_p(ctx, cur, p, section_mode);
    if (next == cur) break;
    cur = next;
  }
  // fixpoint means |N(T,S)/S| is a p'-number
  int c = ctx.slices().class_of_pair(cur.t, cur.s);
  if (ctx.pair_normalizer_index(c) % p == 0)
    throw Error("hat_p: fixpoint not in the p'-locus");
  return cur;
}

int hat_p_class(const RingContext& ctx, int cls, int p, bool section_mode) {
  const Slice& rep = ctx.slices().class_rep(cls);
  Slice h = hat_p(ctx, rep, p, section_mode);
  return ctx.slices().class_of_pair(h.t, h.s);
}

bool label_valid(const RingContext& ctx, const PrimeIdealLabel& a,
                 RingTag tag) {
  if (a.cls < 0 || a.cls >= ctx.slices().num_classes()) return false;
  if (tag == RingTag::section && !ctx.slices().is_section_class(a.cls))
    return false;
  if (a.p == 0) return true;
  if (!is_prime(a.p)) return false;
  return ctx.pair_normalizer_index(a.cls) % a.p != 0;
}

bool ideal_contains(const RingContext& ctx, const PrimeIdealLabel& a,
                    const PrimeIdealLabel& b, RingTag tag) {
  if (!label_valid(ctx, a, tag) || !label_valid(ctx, b, tag))
    throw SpecError("ideal_contains: invalid label");
  if (a.p == b.p) return a.cls == b.cls;
  if (b.p == 0 && a.p > 0)
    return hat_p_class(ctx, b.cls, a.p, tag == RingTag::section) == a.cls;
  return false;
}

std::vector<SpectrumComponent> spectrum_components(const RingContext& ctx,
                                                   RingTag tag, int p) {
  if (tag == RingTag::burnside)
    throw SpecError("spectrum_components: slice or section ring expected");
  bool sections = tag == RingTag::section;
  const SliceTable& st = ctx.slices();
  std::vector<int> classes =
      sections ? st.section_classes() : [&] {
        std::vector<int> all(st.num_classes());
        std::iota(all.begin(), all.end(), 0);
        return all;
      }();

  std::vector<int> primes;
  if (p > 0) {
    if (!is_prime(p)) throw SpecError("spectrum_components: p must be prime");
    primes = {p};
  } else {
    primes = prime_divisors(ctx.group().order());
  }

  // union-find over class ids
  std::vector<int> parent(st.num_classes());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int c : classes)
    for (int q : primes) {
      int h = hat_p_class(ctx, c, q, sections);
      int ra = find(c), rb = find(h);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

  std::map<int, SpectrumComponent> comps;
  for (int c : classes) comps[find(c)].classes.push_back(c);

  std::vector<SpectrumComponent> out;
  for (auto& [root, comp] : comps) {
    std::sort(comp.classes.begin(), comp.classes.end());
    comp.idempotent.tag = tag;
    for (int c : comp.classes) {
      const Slice& sl = st.class_rep(c);
      QRingElement e = sections ? idempotent_gamma(ctx, sl.t, sl.s)
                                : idempotent_xi(ctx, sl.t, sl.s);
      comp.idempotent = add(comp.idempotent, e);
    }
    // denominators must be units in the stated localization; this is
    // the theorem's content, so check rather than assume
    for (auto& [c, v] : comp.idempotent.coeffs) {
      if (p == 0 && v.get_den() != 1)
        throw Error("spectrum: component idempotent not integral");
      if (p > 0 && v.get_den() % p == 0)
        throw Error("spectrum: component idempotent has p in a denominator");
    }
    if (sections && p == 0) {
      int d = derived_series_limit(ctx.lattice(),
                                   st.class_rep(comp.classes.front()).t);
      comp.label_subgroup_class = ctx.lattice().class_of(d);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool idempotent_support_check(const RingContext& ctx,
                              const std::vector<char>& in_f,
                              const std::vector<int>& primes, RingTag tag) {
  if (tag == RingTag::burnside)
    throw SpecError("idempotent_support_check: slice or section ring");
  bool sections = tag == RingTag::section;
  const SliceTable& st = ctx.slices();
  const SubgroupLattice& lat = ctx.lattice();
  size_t expected = sections ? st.section_classes().size()
                             : size_t(st.num_classes());
  if (in_f.size() != expected)
    throw SpecError("idempotent_support_check: wrong mask length");

  auto member = [&](int cls) {
    return sections ? in_f[st.section_pos(cls)] : in_f[cls];
  };

  const std::vector<int>& classes =
      sections ? st.section_classes() : [&] {
        std::vector<int> all(st.num_classes());
        std::iota(all.begin(), all.end(), 0);
        return all;
      }();
  for (int c : classes) {
    const Slice& sl = st.class_rep(c);
    int n = normalizer_pair(lat, sl.t, sl.s);
    for (int p : primes) {
      if (!is_prime(p)) throw SpecError("idempotent_support_check: bad prime");
      for (int pid = 0; pid < lat.size(); ++pid) {
        if (!lat.leq(pid, n)) continue;
        int o = lat.order_of(pid);
        while (o % p == 0) o /= p;
        if (o != 1) continue;
        int pt = lat.join(pid, sl.t);
        int ps = lat.join(pid, sl.s);
        if (sections) ps = normal_closure(lat, ps, pt);
        int image = st.class_of_pair(pt, ps);
        if (member(c) != member(image)) return false;
      }
    }
  }
  return true;
}

}  // namespace burnside
