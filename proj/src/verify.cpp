#include "burnside/verify.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "burnside/io.hpp"
#include "burnside/spectrum.hpp"
#include "burnside/units.hpp"

namespace burnside {

namespace {

using Checks = std::vector<CheckResult>;

RingElement random_element(const RingContext& ctx, std::mt19937_64& rng,
                           RingTag tag, int max_abs = 3) {
  int n = ctx.num_classes(tag);
  RingElement x;
  x.tag = tag;
  for (int i = 0; i < n; ++i) {
    int c = tag == RingTag::section ? ctx.slices().section_classes()[i] : i;
    long v = long(rng() % (2 * max_abs + 1)) - max_abs;
    if (v != 0 && rng() % 2 == 0) x.coeffs[c] = v;
  }
  return x;
}

void report(Checks& out, const std::string& name, bool pass,
            const std::string& detail = "") {
  out.push_back(CheckResult{name, pass, detail});
}

bool g_timing = false;

template <typename F>
void guarded(Checks& out, const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    report(out, name, false, std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  if (g_timing && !out.empty() && out.back().name == name && secs >= 0.05) {
    std::ostringstream ss;
    ss << out.back().detail << (out.back().detail.empty() ? "" : "; ")
       << std::fixed << std::setprecision(2) << secs << "s";
    out.back().detail = ss.str();
  }
}

// ---- ring suite ----

void ring_suite(const RingContext& ctx, std::mt19937_64& rng, Checks& out) {
  const SliceTable& st = ctx.slices();
  int n = st.num_classes();

  guarded(out, "ring/mark_matrix_triangular", [&] {
    bool ok = true;
    const auto& m = ctx.mark_matrix();
    for (int r = 0; r < n && ok; ++r) {
      if (m[size_t(r) * n + r] != ctx.pair_normalizer_index(r)) ok = false;
      for (int c = 0; c < r; ++c)
        if (m[size_t(r) * n + c] != 0) ok = false;
    }
    report(out, "ring/mark_matrix_triangular", ok);
  });

  guarded(out, "ring/kernels_serial_parallel_agree", [&] {
    bool ok = mark_matrix_serial(st) == ctx.mark_matrix() &&
              product_table_serial(st) == ctx.products();
    report(out, "ring/kernels_serial_parallel_agree", ok);
  });

  guarded(out, "ring/multiply_vs_morphism_oracle", [&] {
    bool ok = true;
    bool full = ctx.group().order() <= 24;
    for (int c1 = 0; c1 < n && ok; ++c1)
      for (int c2 = c1; c2 < n && ok; ++c2) {
        if (!full && rng() % 7 != 0) continue;
        const Slice& s1 = st.class_rep(c1);
        const Slice& s2 = st.class_rep(c2);
        GMorphism f1 = transitive_projection(ctx, s1.t, s1.s);
        GMorphism f2 = transitive_projection(ctx, s2.t, s2.s);
        if (linearize(ctx, product_morphism(f1, f2)) !=
            multiply(ctx, basis_element(ctx, s1.t, s1.s),
                     basis_element(ctx, s2.t, s2.s)))
          ok = false;
      }
    report(out, "ring/multiply_vs_morphism_oracle", ok,
           full ? "all basis pairs" : "sampled basis pairs");
  });

  guarded(out, "ring/mark_multiplicativity", [&] {
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      RingElement x = random_element(ctx, rng, RingTag::slice);
      RingElement y = random_element(ctx, rng, RingTag::slice);
      RingElement xy = multiply(ctx, x, y);
      for (int c = 0; c < n; ++c) {
        const Slice& sl = st.class_rep(c);
        if (mark(ctx, sl.t, sl.s, xy) !=
            mark(ctx, sl.t, sl.s, x) * mark(ctx, sl.t, sl.s, y)) {
          ok = false;
          break;
        }
      }
    }
    report(out, "ring/mark_multiplicativity", ok);
  });

  guarded(out, "ring/idempotents_slice", [&] {
    bool ok = true;
    std::vector<QRingElement> xis;
    QRingElement total;
    total.tag = RingTag::slice;
    for (int c = 0; c < n; ++c) {
      const Slice& sl = st.class_rep(c);
      xis.push_back(idempotent_xi(ctx, sl.t, sl.s));
      total = add(total, xis.back());
      std::vector<Rat> gh = ghost(ctx, xis.back());
      for (int r = 0; r < n; ++r)
        if (gh[r] != (r == c ? 1 : 0)) ok = false;
    }
    if (!(total == to_rational(one(ctx)))) ok = false;
    for (int i = 0; i < n && ok; ++i) {
      if (!(multiply(ctx, xis[i], xis[i]) == xis[i])) ok = false;
      for (int j = i + 1; j < n && ok; ++j)
        if (!multiply(ctx, xis[i], xis[j]).is_zero()) ok = false;
    }
    report(out, "ring/idempotents_slice", ok);
  });

  guarded(out, "ring/idempotents_section", [&] {
    bool ok = true;
    const auto& secs = st.section_classes();
    std::vector<QRingElement> gams;
    QRingElement total;
    total.tag = RingTag::section;
    for (size_t i = 0; i < secs.size(); ++i) {
      const Slice& sl = st.class_rep(secs[i]);
      gams.push_back(idempotent_gamma(ctx, sl.t, sl.s));
      total = add(total, gams.back());
      std::vector<Rat> gh = ghost(ctx, gams.back());
      for (size_t r = 0; r < secs.size(); ++r)
        if (gh[r] != (r == i ? 1 : 0)) ok = false;
    }
    if (!(total == to_rational(one(ctx, RingTag::section)))) ok = false;
    for (size_t i = 0; i < gams.size() && ok; ++i) {
      if (!(multiply(ctx, gams[i], gams[i]) == gams[i])) ok = false;
      for (size_t j = i + 1; j < gams.size() && ok; ++j)
        if (!multiply(ctx, gams[i], gams[j]).is_zero()) ok = false;
    }
    report(out, "ring/idempotents_section", ok);
  });

  guarded(out, "ring/ghost_image_characterization", [&] {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      std::vector<Int> m(n);
      std::vector<Rat> q(n);
      for (int c = 0; c < n; ++c) {
        m[c] = Int(long(rng() % 13) - 6);
        q[c] = Rat(m[c]);
      }
      if (ghost_image_check(ctx, m) !=
          is_integral(ghost_pullback(ctx, q, RingTag::slice)))
        ok = false;
    }
    for (int i = 0; i < 200 && ok; ++i) {
      RingElement x = random_element(ctx, rng, RingTag::slice);
      std::vector<Int> m = ghost(ctx, x);
      if (!ghost_image_check(ctx, m)) ok = false;
      if (!(integral_pullback(ctx, m, RingTag::slice) == x)) ok = false;
    }
    report(out, "ring/ghost_image_characterization", ok);
  });

  guarded(out, "ring/ghost_image_sections", [&] {
    bool ok = true;
    int ns = st.num_section_classes();
    for (int i = 0; i < 200 && ok; ++i) {
      std::vector<Int> m(ns);
      std::vector<Rat> q(ns);
      for (int c = 0; c < ns; ++c) {
        m[c] = Int(long(rng() % 13) - 6);
        q[c] = Rat(m[c]);
      }
      if (ghost_image_check_sections(ctx, m) !=
          is_integral(ghost_pullback(ctx, q, RingTag::section)))
        ok = false;
    }
    for (int i = 0; i < 100 && ok; ++i) {
      RingElement x = random_element(ctx, rng, RingTag::section);
      if (!ghost_image_check_sections(ctx, ghost(ctx, x))) ok = false;
    }
    report(out, "ring/ghost_image_sections", ok);
  });

  guarded(out, "ring/mod_p_congruences", [&] {
    bool ok = true;
    const SubgroupLattice& lat = ctx.lattice();
    for (int trial = 0; trial < 50 && ok; ++trial) {
      RingElement x = random_element(ctx, rng, RingTag::slice);
      for (int c = 0; c < n && ok; ++c) {
        const Slice& sl = st.class_rep(c);
        int nid = normalizer_pair(lat, sl.t, sl.s);
        for (int p : prime_divisors(ctx.group().order())) {
          for (int pid = 0; pid < lat.size(); ++pid) {
            if (!lat.leq(pid, nid)) continue;
            int o = lat.order_of(pid);
            while (o % p == 0) o /= p;
            if (o != 1) continue;
            Int diff = mark(ctx, sl.t, sl.s, x) -
                       mark(ctx, lat.join(pid, sl.t), lat.join(pid, sl.s), x);
            if (diff % p != 0) ok = false;
          }
        }
      }
    }
    report(out, "ring/mod_p_congruences", ok);
  });

  guarded(out, "ring/psi_collapse", [&] {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      RingElement x = random_element(ctx, rng, RingTag::section);
      for (int c = 0; c < n; ++c) {
        const Slice& sl = st.class_rep(c);
        Slice cl = st.closed_slice(sl);
        if (mark(ctx, sl.t, sl.s, x) != mark(ctx, cl.t, cl.s, x)) ok = false;
      }
    }
    report(out, "ring/psi_collapse", ok);
  });

  guarded(out, "ring/s_i_maps", [&] {
    bool ok = true;
    for (int c = 0; c < ctx.lattice().num_classes(); ++c) {
      RingElement b = burnside_basis(ctx, ctx.lattice().class_rep(c));
      if (!(s_map(ctx, i_map(ctx, b)) == b)) ok = false;
    }
    for (int i = 0; i < 20 && ok; ++i) {
      RingElement x = random_element(ctx, rng, RingTag::slice);
      RingElement y = random_element(ctx, rng, RingTag::slice);
      if (!(s_map(ctx, multiply(ctx, x, y)) ==
            multiply(ctx, s_map(ctx, x), s_map(ctx, y))))
        ok = false;
    }
    report(out, "ring/s_i_maps", ok);
  });

  guarded(out, "ring/product_sweep_independence", [&] {
    bool ok = true;
    std::vector<int> sweep(ctx.group().order());
    std::iota(sweep.begin(), sweep.end(), 0);
    for (int trial = 0; trial < 20 && ok; ++trial) {
      std::shuffle(sweep.begin(), sweep.end(), rng);
      int c1 = int(rng() % n), c2 = int(rng() % n);
      if (product_classes_with_sweep(st, c1, c2, sweep) !=
          ctx.products()[size_t(c1) * n + c2])
        ok = false;
    }
    report(out, "ring/product_sweep_independence", ok);
  });
}

// ---- galois suite ----

void galois_suite(const RingContext& ctx, std::mt19937_64& rng, Checks& out) {
  const SliceTable& st = ctx.slices();

  guarded(out, "galois/projection_iff_section", [&] {
    bool ok = true;
    for (int c = 0; c < st.num_classes(); ++c) {
      const Slice& sl = st.class_rep(c);
      if (is_galois(transitive_projection(ctx, sl.t, sl.s)) !=
          st.is_section_class(c))
        ok = false;
    }
    report(out, "galois/projection_iff_section", ok);
  });

  guarded(out, "galois/closure_of_projection", [&] {
    bool ok = true;
    for (int c = 0; c < st.num_classes(); ++c) {
      const Slice& sl = st.class_rep(c);
      GaloisClosure cl =
          galois_closure(transitive_projection(ctx, sl.t, sl.s));
      int closed = normal_closure(ctx.lattice(), sl.s, sl.t);
      if (!(linearize(ctx, cl.closed) == basis_element(ctx, sl.t, closed)))
        ok = false;
    }
    report(out, "galois/closure_of_projection", ok);
  });

  guarded(out, "galois/stability_lemmas", [&] {
    bool ok = true;
    for (int i = 0; i < 30 && ok; ++i) {
      GMorphism f = random_morphism(ctx, rng, 3);
      GMorphism g = random_morphism(ctx, rng, 2);
      GMorphism both = coproduct_morphism(f, g);
      if (is_galois(both) != (is_galois(f) && is_galois(g))) ok = false;
      if (is_galois(f)) {
        if (f.dom.size > 0 &&
            !is_galois(restrict_to_subdomain(f, f.dom.orbit_of(0))))
          ok = false;
        if (is_galois(g) && !is_galois(product_morphism(f, g))) ok = false;
      }
    }
    report(out, "galois/stability_lemmas", ok);
  });

  guarded(out, "galois/closure_universal_property", [&] {
    bool ok = true;
    int verified = 0;
    for (int i = 0; i < 40 && verified < 8; ++i) {
      GMorphism f = random_morphism(ctx, rng, 2, 12);
      if (f.dom.size > 12) continue;
      GaloisClosure cl = galois_closure(f);
      GMorphism a = galois_closure(random_morphism(ctx, rng, 2, 12)).closed;
      std::vector<std::vector<int>> alphas, betas;
      try {
        alphas = equivariant_maps(f.dom, a.dom, 20000);
        betas = equivariant_maps(f.cod, a.cod, 20000);
      } catch (const Error&) {
        continue;
      }
      for (auto& alpha : alphas)
        for (auto& beta : betas) {
          bool commutes = true;
          for (int x = 0; x < f.dom.size && commutes; ++x)
            if (a.map[alpha[x]] != beta[f.map[x]]) commutes = false;
          if (!commutes) continue;
          int legs = 0;
          for (auto& tilde : equivariant_maps(cl.closed.dom, a.dom, 20000)) {
            bool good = true;
            for (int x = 0; x < f.dom.size && good; ++x)
              if (tilde[cl.proj[x]] != alpha[x]) good = false;
            for (int y = 0; y < cl.closed.dom.size && good; ++y)
              if (a.map[tilde[y]] != beta[cl.closed.map[y]]) good = false;
            if (good) ++legs;
          }
          if (legs != 1) ok = false;
          ++verified;
        }
    }
    report(out, "galois/closure_universal_property", ok && verified > 0);
  });

  guarded(out, "galois/linearize_relations", [&] {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      GMorphism f = random_morphism(ctx, rng);
      GMorphism g = random_morphism(ctx, rng);
      if (!(linearize(ctx, coproduct_morphism(f, g)) ==
            add(linearize(ctx, f), linearize(ctx, g))))
        ok = false;
      if (!(linearize(ctx, restrict_to_image(f)) == linearize(ctx, f)))
        ok = false;
    }
    report(out, "galois/linearize_relations", ok);
  });

  guarded(out, "galois/hom_count_vs_mark", [&] {
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
      GMorphism f = random_morphism(ctx, rng);
      RingElement lf = linearize(ctx, f);
      for (int c = 0; c < st.num_classes(); ++c) {
        const Slice& sl = st.class_rep(c);
        if (Int(hom_count(ctx, sl.t, sl.s, f)) != mark(ctx, sl.t, sl.s, lf))
          ok = false;
      }
    }
    report(out, "galois/hom_count_vs_mark", ok);
  });

  guarded(out, "galois/section_support_and_restriction", [&] {
    bool ok = true;
    int seen = 0;
    for (int i = 0; i < 40; ++i) {
      GMorphism f = random_morphism(ctx, rng);
      if (is_galois(f)) {
        ++seen;
        for (auto& [c, v] : linearize(ctx, f).coeffs)
          if (!st.is_section_class(c)) ok = false;
      }
      RingElement via_map = section_restriction_map(ctx, linearize(ctx, f));
      RingElement via_cl;
      via_cl.tag = RingTag::section;
      for (int r : f.dom.orbit_reps()) {
        GMorphism piece = restrict_to_subdomain(f, f.dom.orbit_of(r));
        for (auto& [c, v] : linearize(ctx, galois_closure(piece).closed).coeffs)
          via_cl.addc(c, v);
      }
      if (via_map.coeffs != via_cl.coeffs) ok = false;
    }
    report(out, "galois/section_support_and_restriction", ok && seen > 0);
  });
}

// ---- biset suite ----

void biset_suite(const RingContext& ctx, std::mt19937_64& rng, Checks& out) {
  guarded(out, "biset/elemental_vs_quotient_oracle", [&] {
    bool ok = true;
    const SubgroupLattice& lat = ctx.lattice();
    // one proper subgroup and, when available, one proper quotient
    int sub = -1;
    for (int c = 0; c < lat.num_classes(); ++c) {
      int rep = lat.class_rep(c);
      if (lat.order_of(rep) > 1 && lat.order_of(rep) < ctx.group().order())
        sub = rep;
    }
    std::vector<std::unique_ptr<RingContext>> keep;
    std::vector<std::pair<const RingContext*, Biset>> cases;
    if (sub >= 0) {
      SubgroupGroup sg =
          subgroup_as_group(ctx.group(), lat.sub(sub).members, "H");
      keep.push_back(std::make_unique<RingContext>(sg.group));
      cases.emplace_back(keep.back().get(),
                         restriction_biset(ctx.group(), keep.back()->group(),
                                           sg.embed));
    }
    for (int c = 0; c < lat.num_classes(); ++c) {
      int rep = lat.class_rep(c);
      if (lat.order_of(rep) == 1 || rep == lat.full_id()) continue;
      if (!lat.is_normal_in(rep, lat.full_id())) continue;
      QuotientGroup q = quotient_group(ctx.group(), lat.sub(rep).members);
      keep.push_back(std::make_unique<RingContext>(q.group));
      cases.emplace_back(keep.back().get(),
                         deflation_biset(ctx.group(), keep.back()->group(),
                                         q.proj));
      break;
    }
    cases.emplace_back(&ctx, identity_biset(ctx.group()));
    for (auto& [hc, u] : cases)
      for (int c = 0; c < ctx.slices().num_classes() && ok; ++c) {
        const Slice& sl = ctx.slices().class_rep(c);
        GMorphism proj = transitive_projection(ctx, sl.t, sl.s);
        if (!(linearize(*hc, u_times_g(u, proj)) ==
              biset_apply(*hc, ctx, u, basis_element(ctx, sl.t, sl.s))))
          ok = false;
      }
    report(out, "biset/elemental_vs_quotient_oracle", ok);
  });

  guarded(out, "biset/left_inert_and_tensor", [&] {
    bool ok = true;
    Biset id = identity_biset(ctx.group());
    if (!is_left_inert(id)) ok = false;
    for (int i = 0; i < 5 && ok; ++i) {
      RingElement x = random_element(ctx, rng, RingTag::slice, 2);
      if (!(tensor_induction(ctx, ctx, id, x) == x)) ok = false;
      RingElement y = random_element(ctx, rng, RingTag::slice, 1);
      for (auto& [c, v] : x.coeffs) v = abs(v);
      for (auto& [c, v] : y.coeffs) v = abs(v);
      if (!(tensor_induction(ctx, ctx, id, multiply(ctx, x, y)) ==
            multiply(ctx, tensor_induction(ctx, ctx, id, x),
                     tensor_induction(ctx, ctx, id, y))))
        ok = false;
    }
    report(out, "biset/left_inert_and_tensor", ok);
  });

  guarded(out, "biset/counterexample_non_inert", [&] {
    RingContext triv(cyclic_group(1));
    RingContext c2(cyclic_group(2));
    Biset u;
    u.H = &c2.group();
    u.G = &triv.group();
    u.size = 2;
    u.lact = {0, 1, 1, 0};
    u.ract = {0, 1};
    bool ok = !is_left_inert(u);
    GMorphism f;
    f.dom = trivial_gset(triv.group(), 2);
    f.cod = trivial_gset(triv.group(), 1);
    f.map = {0, 0};
    GMorphism idx;
    idx.dom = f.dom;
    idx.cod = f.dom;
    idx.map = {0, 1};
    if (!(linearize(triv, f) == linearize(triv, idx))) ok = false;
    if (is_galois(hom_functor(u, f))) ok = false;
    if (linearize(c2, hom_functor(u, f)) == linearize(c2, hom_functor(u, idx)))
      ok = false;
    bool threw = false;
    try {
      tensor_induction(c2, triv, u, one(triv));
    } catch (const SpecError&) {
      threw = true;
    }
    report(out, "biset/counterexample_non_inert", ok && threw);
  });
}

// ---- spectrum suite ----

void spectrum_suite(const RingContext& ctx, std::mt19937_64& rng, Checks& out) {
  const SliceTable& st = ctx.slices();

  guarded(out, "spectrum/hat_p_locus", [&] {
    bool ok = true;
    for (int c = 0; c < st.num_classes(); ++c)
      for (int p : prime_divisors(ctx.group().order())) {
        int h = hat_p_class(ctx, c, p, false);
        if (ctx.pair_normalizer_index(h) % p == 0) ok = false;
        if (hat_p_class(ctx, h, p, false) != h) ok = false;
      }
    report(out, "spectrum/hat_p_locus", ok);
  });

  guarded(out, "spectrum/connectivity_vs_solvability", [&] {
    bool solvable = is_solvable(ctx.lattice());
    auto xi = spectrum_components(ctx, RingTag::slice);
    auto ga = spectrum_components(ctx, RingTag::section);
    bool ok = (xi.size() == 1) == solvable && (ga.size() == 1) == solvable;
    std::ostringstream detail;
    detail << xi.size() << " slice / " << ga.size() << " section components";
    report(out, "spectrum/connectivity_vs_solvability", ok, detail.str());
  });

  guarded(out, "spectrum/component_idempotents_integral", [&] {
    bool ok = true;
    for (RingTag tag : {RingTag::slice, RingTag::section}) {
      QRingElement total;
      total.tag = tag;
      for (auto& comp : spectrum_components(ctx, tag)) {
        if (!is_integral(comp.idempotent)) ok = false;
        if (!(multiply(ctx, comp.idempotent, comp.idempotent) ==
              comp.idempotent))
          ok = false;
        total = add(total, comp.idempotent);
      }
      if (!(total == to_rational(one(ctx, tag)))) ok = false;
    }
    report(out, "spectrum/component_idempotents_integral", ok);
  });

  guarded(out, "spectrum/gamma_labels_perfect", [&] {
    int perfect = 0;
    for (int c = 0; c < ctx.lattice().num_classes(); ++c) {
      int rep = ctx.lattice().class_rep(c);
      if (derived_subgroup(ctx.lattice(), rep) == rep) ++perfect;
    }
    auto comps = spectrum_components(ctx, RingTag::section);
    bool ok = int(comps.size()) == perfect;
    // i_G of the Dress idempotent of B(G) gives the same element
    for (auto& comp : comps) {
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
      if (!(comp.idempotent == expect)) ok = false;
    }
    report(out, "spectrum/gamma_labels_perfect", ok);
  });

  guarded(out, "spectrum/zp_component_counts", [&] {
    bool ok = true;
    for (int p : prime_divisors(ctx.group().order())) {
      auto comps = spectrum_components(ctx, RingTag::slice, p);
      int locus = 0;
      for (int c = 0; c < st.num_classes(); ++c)
        if (ctx.pair_normalizer_index(c) % p != 0) ++locus;
      if (int(comps.size()) != locus) ok = false;
      for (auto& comp : comps)
        for (auto& [c, v] : comp.idempotent.coeffs)
          if (v.get_den() % p == 0) ok = false;
    }
    report(out, "spectrum/zp_component_counts", ok);
  });

  guarded(out, "spectrum/support_check_equivalence", [&] {
    bool ok = true;
    std::vector<int> primes = prime_divisors(ctx.group().order());
    if (primes.empty()) primes = {2};
    int n = st.num_classes();
    for (int trial = 0; trial < 30 && ok; ++trial) {
      std::vector<char> mask(n);
      for (auto& b : mask) b = rng() % 2;
      QRingElement e;
      e.tag = RingTag::slice;
      for (int c = 0; c < n; ++c)
        if (mask[c]) {
          const Slice& sl = st.class_rep(c);
          e = add(e, idempotent_xi(ctx, sl.t, sl.s));
        }
      bool denom_ok = true;
      for (auto& [c, v] : e.coeffs)
        for (int p : primes)
          if (v.get_den() % p == 0) denom_ok = false;
      if (idempotent_support_check(ctx, mask, primes, RingTag::slice) !=
          denom_ok)
        ok = false;
    }
    report(out, "spectrum/support_check_equivalence", ok);
  });

  if (ctx.group().order() <= 24) {
    guarded(out, "spectrum/subnormality_crosscheck", [&] {
      bool ok = true;
      const SubgroupLattice& lat = ctx.lattice();
      auto subnormal = [&](int a, int b) {
        if (!lat.leq(a, b)) return false;
        int cur = b;
        while (true) {
          int next = normal_closure(lat, a, cur);
          if (next == cur) return cur == a;
          cur = next;
        }
      };
      for (int i = 0; i < st.num_slices() && ok; ++i) {
        const Slice& sl = st.slice(i);
        for (int p : prime_divisors(ctx.group().order())) {
          Slice h = hat_p(ctx, sl, p, false);
          if (!subnormal(sl.t, h.t) || !subnormal(sl.s, h.s)) ok = false;
          int idx = lat.order_of(h.s) / lat.order_of(sl.s);
          while (idx % p == 0) idx /= p;
          if (idx != 1) ok = false;
          ElemSet prod(ctx.group().order());
          for (int x : lat.sub(sl.t).members.elements())
            for (int y : lat.sub(h.s).members.elements())
              prod.add(ctx.group().op(x, y));
          if (!(prod == lat.sub(h.t).members)) ok = false;
        }
      }
      report(out, "spectrum/subnormality_crosscheck", ok);
    });
  }
}

// ---- units suite ----

void units_suite(const RingContext& ctx, std::mt19937_64& rng, Checks& out) {
  guarded(out, "units/basis_valid", [&] {
    bool ok = true;
    for (RingTag tag : {RingTag::slice, RingTag::section}) {
      UnitGroupBasis ub = unit_group(ctx, tag);
      for (const RingElement& u : ub.basis) {
        if (!(multiply(ctx, u, u) == one(ctx, tag))) ok = false;
        if (!verify_unit(ctx, u)) ok = false;
      }
      std::vector<char> all_ones(ctx.num_classes(tag), 1);
      if (!gf2_in_span(ub.sign_vectors, all_ones)) ok = false;
    }
    report(out, "units/basis_valid", ok);
  });

  guarded(out, "units/dimension_structure", [&] {
    bool ok = true;
    std::ostringstream detail;
    UnitGroupBasis slice_units = unit_group(ctx, RingTag::slice);
    UnitGroupBasis section_units = unit_group(ctx, RingTag::section);
    detail << "dim slice " << slice_units.dimension << ", dim section "
           << section_units.dimension;
    if (ctx.group().order() % 2 == 1) {
      if (slice_units.dimension != 1 || section_units.dimension != 1)
        ok = false;
    }
    if (ctx.group().is_abelian()) {
      int r = 0;
      for (int s = 0; s < ctx.lattice().size(); ++s)
        if (2 * ctx.lattice().order_of(s) == ctx.group().order()) ++r;
      if (slice_units.dimension != 2 * r + 1) ok = false;
      UnitGroupBasis closed = abelian_unit_basis(ctx);
      for (auto& v : closed.sign_vectors)
        if (!gf2_in_span(slice_units.sign_vectors, v)) ok = false;
      for (auto& v : slice_units.sign_vectors)
        if (!gf2_in_span(closed.sign_vectors, v)) ok = false;
      UnitGroupBasis ord = ordinary_unit_subgroup(ctx);
      if (ord.dimension != r + 1) ok = false;
      for (auto& v : ord.sign_vectors)
        if (!gf2_in_span(slice_units.sign_vectors, v)) ok = false;
    }
    report(out, "units/dimension_structure", ok, detail.str());
  });

  guarded(out, "units/three_way_agreement", [&] {
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
      RingElement x = random_element(ctx, rng, RingTag::slice);
      verify_unit(ctx, x);  // throws on any disagreement
    }
    report(out, "units/three_way_agreement", ok);
  });

  guarded(out, "units/tensor_stability", [&] {
    bool ok = true;
    const SubgroupLattice& lat = ctx.lattice();
    std::vector<std::unique_ptr<RingContext>> keep;
    std::vector<Biset> bisets;
    int sub = -1;
    for (int c = 0; c < lat.num_classes(); ++c) {
      int rep = lat.class_rep(c);
      if (lat.order_of(rep) > 1 && lat.order_of(rep) < ctx.group().order())
        sub = rep;
    }
    if (sub >= 0) {
      SubgroupGroup sg = subgroup_as_group(ctx.group(), lat.sub(sub).members,
                                           "H");
      keep.push_back(std::make_unique<RingContext>(sg.group));
      bisets.push_back(
          restriction_biset(ctx.group(), keep.back()->group(), sg.embed));
    }
    UnitGroupBasis ub = unit_group(ctx, RingTag::slice);
    for (size_t i = 0; i < bisets.size(); ++i)
      for (const RingElement& u : ub.basis)
        if (!verify_unit(*keep[i], tensor_induction(*keep[i], ctx, bisets[i], u)))
          ok = false;
    report(out, "units/tensor_stability", ok);
  });
}

}  // namespace

std::vector<CheckResult> verify_suite(const RingContext& ctx,
                                      const std::string& suite,
                                      const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  g_timing = opt.timing;
  Checks out;
  bool all = suite == "all";
  if (all || suite == "ring") ring_suite(ctx, rng, out);
  if (all || suite == "galois") galois_suite(ctx, rng, out);
  if (all || suite == "biset") biset_suite(ctx, rng, out);
  if (all || suite == "spectrum") spectrum_suite(ctx, rng, out);
  if (all || suite == "units") units_suite(ctx, rng, out);
  if (out.empty()) throw SpecError("unknown suite: " + suite);
  return out;
}

std::vector<CheckResult> verify_fixture_file(const RingContext& ctx,
                                             const std::string& path) {
  Checks out;
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open fixture file: " + path);
  Json doc = Json::parse(in);
  int k = 0;
  for (const Json& jm : doc.at("morphisms")) {
    std::string name = "fixture/morphism_" + std::to_string(k++);
    guarded(out, name, [&] {
      GMorphism f = morphism_from_json(ctx.group(), jm);  // validates
      bool ok = true;
      RingElement lf = linearize(ctx, f);
      for (int c = 0; c < ctx.slices().num_classes(); ++c) {
        const Slice& sl = ctx.slices().class_rep(c);
        if (Int(hom_count(ctx, sl.t, sl.s, f)) != mark(ctx, sl.t, sl.s, lf))
          ok = false;
      }
      if (is_galois(f))
        for (auto& [c, v] : lf.coeffs)
          if (!ctx.slices().is_section_class(c)) ok = false;
      GaloisClosure cl = galois_closure(f);
      if (!is_galois(cl.closed)) ok = false;
      report(out, name, ok);
    });
  }
  return out;
}

}  // namespace burnside
