#include "burnside/biset.hpp"

#include <algorithm>
#include <numeric>

namespace burnside {

void Biset::validate() const {
  const Group& h = *H;
  const Group& g = *G;
  for (int u = 0; u < size; ++u) {
    if (l(0, u) != u) throw SpecError("biset: H identity acts nontrivially");
    if (r(u, 0) != u) throw SpecError("biset: G identity acts nontrivially");
  }
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      for (int u = 0; u < size; ++u)
        if (l(h.op(a, b), u) != l(a, l(b, u)))
          throw SpecError("biset: left action broken");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int u = 0; u < size; ++u)
        if (r(u, g.op(a, b)) != r(r(u, a), b))
          throw SpecError("biset: right action broken");
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int u = 0; u < size; ++u)
        if (l(a, r(u, b)) != r(l(a, u), b))
          throw SpecError("biset: actions do not commute");
}

namespace {

Biset make_biset(const Group& h, const Group& g, int size) {
  Biset u;
  u.H = &h;
  u.G = &g;
  u.size = size;
  u.lact.resize(size_t(h.order()) * size);
  u.ract.resize(size_t(size) * g.order());
  return u;
}

}  // namespace

Biset identity_biset(const Group& g) {
  Biset u = make_biset(g, g, g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) {
      u.lact[size_t(a) * u.size + x] = g.op(a, x);
      u.ract[size_t(x) * g.order() + a] = g.op(x, a);
    }
  return u;
}

Biset restriction_biset(const Group& g, const Group& h,
                        const std::vector<int>& embed) {
  Biset u = make_biset(h, g, g.order());
  for (int a = 0; a < h.order(); ++a)
    for (int x = 0; x < g.order(); ++x)
      u.lact[size_t(a) * u.size + x] = g.op(embed[a], x);
  for (int x = 0; x < g.order(); ++x)
    for (int b = 0; b < g.order(); ++b)
      u.ract[size_t(x) * g.order() + b] = g.op(x, b);
  return u;
}

Biset induction_biset(const Group& g, const Group& h,
                      const std::vector<int>& embed) {
  Biset u = make_biset(g, h, g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x)
      u.lact[size_t(a) * u.size + x] = g.op(a, x);
  for (int x = 0; x < g.order(); ++x)
    for (int b = 0; b < h.order(); ++b)
      u.ract[size_t(x) * h.order() + b] = g.op(x, embed[b]);
  return u;
}

Biset inflation_biset(const Group& g, const Group& q,
                      const std::vector<int>& proj) {
  Biset u = make_biset(g, q, q.order());
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < q.order(); ++x)
      u.lact[size_t(a) * u.size + x] = q.op(proj[a], x);
  for (int x = 0; x < q.order(); ++x)
    for (int b = 0; b < q.order(); ++b)
      u.ract[size_t(x) * q.order() + b] = q.op(x, b);
  return u;
}

Biset deflation_biset(const Group& g, const Group& q,
                      const std::vector<int>& proj) {
  Biset u = make_biset(q, g, q.order());
  for (int a = 0; a < q.order(); ++a)
    for (int x = 0; x < q.order(); ++x)
      u.lact[size_t(a) * u.size + x] = q.op(a, x);
  for (int x = 0; x < q.order(); ++x)
    for (int b = 0; b < g.order(); ++b)
      u.ract[size_t(x) * g.order() + b] = q.op(x, proj[b]);
  return u;
}

Biset product_biset(const Group& hprod, const Group& gprod, const Biset& a,
                    const Biset& b) {
  int nhb = b.H->order(), ngb = b.G->order();
  if (a.H->order() * nhb != hprod.order() ||
      a.G->order() * ngb != gprod.order())
    throw SpecError("product_biset: product group mismatch");
  Biset u = make_biset(hprod, gprod, a.size * b.size);
  for (int h = 0; h < hprod.order(); ++h)
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < b.size; ++y)
        u.lact[size_t(h) * u.size + x * b.size + y] =
            a.l(h / nhb, x) * b.size + b.l(h % nhb, y);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y)
      for (int g = 0; g < gprod.order(); ++g)
        u.ract[size_t(x * b.size + y) * gprod.order() + g] =
            a.r(x, g / ngb) * b.size + b.r(y, g % ngb);
  return u;
}

Biset isomorphism_biset(const Group& g, const Group& h,
                        const std::vector<int>& iso) {
  if (int(iso.size()) != g.order() || g.order() != h.order())
    throw SpecError("isomorphism_biset: wrong map size");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (iso[g.op(a, b)] != h.op(iso[a], iso[b]))
        throw SpecError("isomorphism_biset: map is not a homomorphism");
  std::vector<char> seen(h.order(), 0);
  for (int v : iso) {
    if (seen[v]) throw SpecError("isomorphism_biset: map is not bijective");
    seen[v] = 1;
  }
  Biset u = make_biset(h, g, h.order());
  for (int a = 0; a < h.order(); ++a)
    for (int x = 0; x < h.order(); ++x)
      u.lact[size_t(a) * u.size + x] = h.op(a, x);
  for (int x = 0; x < h.order(); ++x)
    for (int b = 0; b < g.order(); ++b)
      u.ract[size_t(x) * g.order() + b] = h.op(x, iso[b]);
  return u;
}

Biset disjoint_union_biset(const Biset& a, const Biset& b) {
  if (a.H != b.H || a.G != b.G)
    throw SpecError("disjoint_union_biset: group mismatch");
  Biset u = make_biset(*a.H, *a.G, a.size + b.size);
  for (int h = 0; h < a.H->order(); ++h) {
    for (int x = 0; x < a.size; ++x) u.lact[size_t(h) * u.size + x] = a.l(h, x);
    for (int x = 0; x < b.size; ++x)
      u.lact[size_t(h) * u.size + a.size + x] = a.size + b.l(h, x);
  }
  for (int g = 0; g < a.G->order(); ++g) {
    for (int x = 0; x < a.size; ++x) u.ract[size_t(x) * a.G->order() + g] = a.r(x, g);
    for (int x = 0; x < b.size; ++x)
      u.ract[size_t(a.size + x) * a.G->order() + g] = a.size + b.r(x, g);
  }
  return u;
}

Biset compose_bisets(const Biset& v, const Biset& u) {
  if (v.G != u.H) throw SpecError("compose_bisets: middle group mismatch");
  const Group& k = *v.H;
  const Group& h = *v.G;
  const Group& g = *u.G;
  int nv = v.size, nu = u.size;
  // orbits of (a,b) -> (a*h, h^{-1}*b)
  std::vector<int> label(size_t(nv) * nu, -1);
  std::vector<std::pair<int, int>> reps;
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nu; ++b) {
      size_t p = size_t(a) * nu + b;
      if (label[p] >= 0) continue;
      int id = int(reps.size());
      reps.emplace_back(a, b);
      std::vector<std::pair<int, int>> queue{{a, b}};
      label[p] = id;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto [x, y] = queue[qi];
        for (int mid = 0; mid < h.order(); ++mid) {
          int x2 = v.r(x, mid), y2 = u.l(h.inverse(mid), y);
          size_t p2 = size_t(x2) * nu + y2;
          if (label[p2] < 0) {
            label[p2] = id;
            queue.emplace_back(x2, y2);
          }
        }
      }
    }
  Biset out = make_biset(k, g, int(reps.size()));
  for (int c = 0; c < k.order(); ++c)
    for (size_t i = 0; i < reps.size(); ++i)
      out.lact[size_t(c) * out.size + i] =
          label[size_t(v.l(c, reps[i].first)) * nu + reps[i].second];
  for (size_t i = 0; i < reps.size(); ++i)
    for (int c = 0; c < g.order(); ++c)
      out.ract[i * g.order() + c] =
          label[size_t(reps[i].first) * nu + u.r(reps[i].second, c)];
  return out;
}

namespace {

struct RightOrbits {
  std::vector<int> reps;
  std::vector<int> oidx;
  std::vector<int> move;  // u = r(reps[oidx[u]], move[u])
  std::vector<ElemSet> stab;
};

RightOrbits right_orbits(const Biset& u) {
  const Group& g = *u.G;
  RightOrbits out;
  out.oidx.assign(u.size, -1);
  out.move.assign(u.size, -1);
  for (int start = 0; start < u.size; ++start) {
    if (out.oidx[start] >= 0) continue;
    int id = int(out.reps.size());
    out.reps.push_back(start);
    out.oidx[start] = id;
    out.move[start] = 0;
    std::vector<int> queue{start};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int a = 0; a < g.order(); ++a) {
        int y = u.r(x, a);
        if (out.oidx[y] < 0) {
          out.oidx[y] = id;
          out.move[y] = g.op(out.move[x], a);
          queue.push_back(y);
        }
      }
    }
    ElemSet st(g.order());
    for (int a = 0; a < g.order(); ++a)
      if (u.r(start, a) == start) st.add(a);
    out.stab.push_back(st);
  }
  return out;
}

}  // namespace

bool is_left_inert(const Biset& u) {
  RightOrbits ro = right_orbits(u);
  for (int x = 0; x < u.size; ++x)
    for (int h = 0; h < u.H->order(); ++h)
      if (ro.oidx[u.l(h, x)] != ro.oidx[x]) return false;
  return true;
}

RingElement biset_apply(const RingContext& hc, const RingContext& gc,
                        const Biset& u, const RingElement& x) {
  if (u.H != &hc.group() || u.G != &gc.group())
    throw SpecError("biset_apply: context mismatch");
  if (x.tag == RingTag::burnside)
    throw SpecError("biset_apply: slice/section elements only");
  const Group& h = *u.H;
  RingElement out;
  out.tag = x.tag;
  for (auto& [cls, coef] : x.coeffs) {
    const Slice& sl = gc.slices().class_rep(cls);
    const ElemSet& sm = gc.lattice().sub(sl.s).members;
    const ElemSet& tm = gc.lattice().sub(sl.t).members;
    // double cosets [H \ U / S]
    std::vector<char> covered(u.size, 0);
    for (int w = 0; w < u.size; ++w) {
      if (covered[w]) continue;
      for (int a = 0; a < h.order(); ++a) {
        int aw = u.l(a, w);
        for (int s = sm.first(); s >= 0; s = sm.next(s)) covered[u.r(aw, s)] = 1;
      }
      // ^wT = {a in H : a.w in w.T}
      std::vector<char> wt(u.size, 0), ws(u.size, 0);
      for (int t = tm.first(); t >= 0; t = tm.next(t)) wt[u.r(w, t)] = 1;
      for (int s = sm.first(); s >= 0; s = sm.next(s)) ws[u.r(w, s)] = 1;
      ElemSet top(h.order()), bot(h.order());
      for (int a = 0; a < h.order(); ++a) {
        int aw = u.l(a, w);
        if (wt[aw]) top.add(a);
        if (ws[aw]) bot.add(a);
      }
      int tid = hc.lattice().id_of(top);
      int sid = hc.lattice().id_of(bot);
      if (tid < 0 || sid < 0) throw Error("biset_apply: stabilizer not found");
      out.addc(hc.slices().class_of_pair(tid, sid), coef);
    }
  }
  if (x.tag == RingTag::section)
    for (auto& [c, v] : out.coeffs)
      if (!hc.slices().is_section_class(c))
        throw Error("biset_apply: section element left the section ring");
  return out;
}

GMorphism u_times_g(const Biset& u, const GMorphism& f) {
  if (u.G != f.dom.G) throw SpecError("u_times_g: group mismatch");
  const Group& h = *u.H;
  const Group& g = *u.G;
  auto quotient = [&](const GSet& x, std::vector<int>& label,
                      std::vector<std::pair<int, int>>& reps) {
    label.assign(size_t(u.size) * x.size, -1);
    reps.clear();
    for (int a = 0; a < u.size; ++a)
      for (int p = 0; p < x.size; ++p) {
        size_t key = size_t(a) * x.size + p;
        if (label[key] >= 0) continue;
        int id = int(reps.size());
        reps.emplace_back(a, p);
        std::vector<std::pair<int, int>> queue{{a, p}};
        label[key] = id;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
          auto [b, q] = queue[qi];
          for (int gg = 0; gg < g.order(); ++gg) {
            int b2 = u.r(b, gg), q2 = x.a(g.inverse(gg), q);
            size_t k2 = size_t(b2) * x.size + q2;
            if (label[k2] < 0) {
              label[k2] = id;
              queue.emplace_back(b2, q2);
            }
          }
        }
      }
    GSet out;
    out.G = &h;
    out.size = int(reps.size());
    out.act.resize(size_t(h.order()) * reps.size());
    for (int a = 0; a < h.order(); ++a)
      for (size_t i = 0; i < reps.size(); ++i)
        out.act[size_t(a) * reps.size() + i] =
            label[size_t(u.l(a, reps[i].first)) * x.size + reps[i].second];
    return out;
  };
  std::vector<int> dlab, clab;
  std::vector<std::pair<int, int>> dreps, creps;
  GMorphism out;
  out.dom = quotient(f.dom, dlab, dreps);
  out.cod = quotient(f.cod, clab, creps);
  out.map.resize(dreps.size());
  for (size_t i = 0; i < dreps.size(); ++i)
    out.map[i] = clab[size_t(dreps[i].first) * f.cod.size + f.map[dreps[i].second]];
  return out;
}

GSet hom_functor(const Biset& u, const GSet& x, size_t guard) {
  const Group& h = *u.H;
  const Group& g = *u.G;
  RightOrbits ro = right_orbits(u);
  int k = int(ro.reps.size());
  std::vector<std::vector<int>> choices(k);
  std::vector<std::vector<int>> pos(k);
  size_t total = 1;
  for (int i = 0; i < k; ++i) {
    choices[i] = x.fixed_points(ro.stab[i]);
    pos[i].assign(x.size, -1);
    for (size_t j = 0; j < choices[i].size(); ++j) pos[i][choices[i][j]] = int(j);
    total *= std::max<size_t>(choices[i].size(), 1);
    if (choices[i].empty()) total = 0;
    if (total > guard) throw Error("hom_functor: tuple space too large");
  }
  GSet out;
  out.G = &h;
  out.size = int(total);
  out.act.resize(size_t(h.order()) * total);
  if (total == 0) return out;
  // decode/encode mixed-radix tuples
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) radix[i] = int(choices[i].size());
  std::vector<int> tup(k);
  for (size_t code = 0; code < total; ++code) {
    size_t rem = code;
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = int(rem % radix[i]);
      rem /= radix[i];
    }
    for (int a = 0; a < h.order(); ++a) {
      // (a.phi)(rep_i) = phi(a^{-1} rep_i) = move^{-1} . phi(rep_j)
      size_t ncode = 0;
      int ai = h.inverse(a);
      for (int i = 0; i < k; ++i) {
        int w = u.l(ai, ro.reps[i]);
        int j = ro.oidx[w];
        int val = x.a(g.inverse(ro.move[w]), choices[j][tup[j]]);
        int vpos = pos[i][val];
        if (vpos < 0) throw Error("hom_functor: image not stabilized");
        ncode = ncode * radix[i] + size_t(vpos);
      }
      out.act[size_t(a) * total + code] = int(ncode);
    }
  }
  return out;
}

GMorphism hom_functor(const Biset& u, const GMorphism& f, size_t guard) {
  RightOrbits ro = right_orbits(u);
  int k = int(ro.reps.size());
  GMorphism out;
  out.dom = hom_functor(u, f.dom, guard);
  out.cod = hom_functor(u, f.cod, guard);
  // componentwise application of f on tuples
  std::vector<std::vector<int>> dch(k), cpos(k);
  for (int i = 0; i < k; ++i) {
    dch[i] = f.dom.fixed_points(ro.stab[i]);
    std::vector<int> cch = f.cod.fixed_points(ro.stab[i]);
    cpos[i].assign(f.cod.size, -1);
    for (size_t j = 0; j < cch.size(); ++j) cpos[i][cch[j]] = int(j);
  }
  out.map.resize(out.dom.size);
  std::vector<int> dradix(k), cradix(k);
  for (int i = 0; i < k; ++i) {
    dradix[i] = int(dch[i].size());
    cradix[i] = int(f.cod.fixed_points(ro.stab[i]).size());
  }
  std::vector<int> tup(k);
  for (int code = 0; code < out.dom.size; ++code) {
    size_t rem = size_t(code);
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = int(rem % dradix[i]);
      rem /= dradix[i];
    }
    size_t ncode = 0;
    for (int i = 0; i < k; ++i) {
      int img = f.map[dch[i][tup[i]]];
      int vpos = cpos[i][img];
      if (vpos < 0) throw Error("hom_functor: image not stabilized");
      ncode = ncode * cradix[i] + size_t(vpos);
    }
    out.map[code] = int(ncode);
  }
  return out;
}

RingElement tensor_induction(const RingContext& hc, const RingContext& gc,
                             const Biset& u, const RingElement& x) {
  if (u.H != &hc.group() || u.G != &gc.group())
    throw SpecError("tensor_induction: context mismatch");
  if (!is_left_inert(u))
    throw SpecError(
        "tensor_induction: biset is not left inert; the operation is not "
        "well defined on the slice Burnside ring for such bisets");
  if (x.tag == RingTag::burnside)
    throw SpecError("tensor_induction: slice/section elements only");

  bool nonneg = true;
  for (auto& [c, v] : x.coeffs)
    if (v < 0) nonneg = false;

  RightOrbits ro = right_orbits(u);
  int k = int(ro.reps.size());

  // representing-morphism route for honest (non-virtual) elements
  if (nonneg) {
    // assemble all coefficient-many orbit copies in one pass
    const Group& gg = gc.group();
    long dom_total = 0, cod_total = 0;
    bool sane = true;
    for (auto& [c, v] : x.coeffs) {
      const Slice& sl = gc.slices().class_rep(c);
      Int pts = v * (gg.order() / gc.lattice().order_of(sl.s));
      Int cpts = v * (gg.order() / gc.lattice().order_of(sl.t));
      dom_total += pts.get_si();
      cod_total += cpts.get_si();
      if (dom_total > 300000) {
        sane = false;
        break;
      }
    }
    GMorphism rep;
    if (sane) {
      rep.dom.G = &gg;
      rep.cod.G = &gg;
      rep.dom.size = int(dom_total);
      rep.cod.size = int(cod_total);
      rep.dom.act.resize(size_t(gg.order()) * dom_total);
      rep.cod.act.resize(size_t(gg.order()) * cod_total);
      rep.map.resize(dom_total);
      int doff = 0, coff = 0;
      for (auto& [c, v] : x.coeffs) {
        const Slice& sl = gc.slices().class_rep(c);
        GMorphism p = transitive_projection(gc, sl.t, sl.s);
        for (Int i = 0; i < v; ++i) {
          for (int h = 0; h < gg.order(); ++h) {
            for (int q = 0; q < p.dom.size; ++q)
              rep.dom.act[size_t(h) * dom_total + doff + q] =
                  doff + p.dom.a(h, q);
            for (int q = 0; q < p.cod.size; ++q)
              rep.cod.act[size_t(h) * cod_total + coff + q] =
                  coff + p.cod.a(h, q);
          }
          for (int q = 0; q < p.dom.size; ++q)
            rep.map[doff + q] = coff + p.map[q];
          doff += p.dom.size;
          coff += p.cod.size;
        }
      }
    }
    double est = sane ? 1 : 1e18;
    for (int i = 0; i < k && est <= 200000.0; ++i)
      est *= double(std::max<size_t>(
          rep.dom.fixed_points(ro.stab[i]).size(), 1));
    if (est <= 200000.0) {
      GMorphism image = hom_functor(u, rep);
      RingElement out = linearize(hc, image);
      if (x.tag == RingTag::section) {
        out.tag = RingTag::section;
        for (auto& [c, v] : out.coeffs)
          if (!hc.slices().is_section_class(c))
            throw Error("tensor_induction: section support lost");
      }
      return out;
    }
  }

  // virtual elements: transport marks multiplicatively and pull back
  const Group& g = gc.group();
  auto transported = [&](int b, int a) {
    // subgroup of G generated by the orbit stabilizer and the g_a
    Int val(1);
    for (int i = 0; i < k; ++i) {
      int ur = ro.reps[i];
      ElemSet seed = ro.stab[i];
      ElemSet seed_b = ro.stab[i];
      const ElemSet& am = hc.lattice().sub(a).members;
      const ElemSet& bm = hc.lattice().sub(b).members;
      for (int e = bm.first(); e >= 0; e = bm.next(e)) {
        int target = u.l(e, ur);
        int ga = -1;
        for (int gg = 0; gg < g.order(); ++gg)
          if (u.r(ur, gg) == target) {
            ga = gg;
            break;
          }
        if (ga < 0) throw Error("tensor_induction: orbit not preserved");
        if (am.test(e)) seed.add(ga);
        seed_b.add(ga);
      }
      int da = gc.lattice().generated_by(seed);
      int db = gc.lattice().generated_by(seed_b);
      val *= mark(gc, db, da, x);
    }
    return val;
  };
  if (x.tag == RingTag::section) {
    std::vector<Int> m(hc.slices().num_section_classes());
    const auto& secs = hc.slices().section_classes();
    for (size_t i = 0; i < secs.size(); ++i) {
      const Slice& sl = hc.slices().class_rep(secs[i]);
      m[i] = transported(sl.t, sl.s);
    }
    return integral_pullback(hc, m, RingTag::section);
  }
  std::vector<Int> m(hc.slices().num_classes());
  for (int c = 0; c < hc.slices().num_classes(); ++c) {
    const Slice& sl = hc.slices().class_rep(c);
    m[c] = transported(sl.t, sl.s);
  }
  return integral_pullback(hc, m, RingTag::slice);
}

}  // namespace burnside
