#include "burnside/gset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace burnside {

void GSet::validate() const {
  const Group& g = *G;
  for (int x = 0; x < size; ++x)
    if (a(0, x) != x) throw SpecError("gset: identity does not act trivially");
  for (int h = 0; h < g.order(); ++h)
    for (int k = 0; k < g.order(); ++k) {
      int hk = g.op(h, k);
      for (int x = 0; x < size; ++x)
        if (a(hk, x) != a(h, a(k, x)))
          throw SpecError("gset: action is not a group action");
    }
}

std::vector<int> GSet::orbit_reps() const {
  std::vector<char> seen(size, 0);
  std::vector<int> reps;
  for (int x = 0; x < size; ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int g = 0; g < G->order(); ++g) seen[a(g, x)] = 1;
  }
  return reps;
}

std::vector<int> GSet::orbit_of(int x) const {
  std::vector<char> seen(size, 0);
  std::vector<int> orb;
  for (int g = 0; g < G->order(); ++g) {
    int y = a(g, x);
    if (!seen[y]) {
      seen[y] = 1;
      orb.push_back(y);
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

ElemSet GSet::stabilizer(int x) const {
  ElemSet s(G->order());
  for (int g = 0; g < G->order(); ++g)
    if (a(g, x) == x) s.add(g);
  return s;
}

std::vector<int> GSet::fixed_points(const ElemSet& members) const {
  std::vector<int> out;
  for (int x = 0; x < size; ++x) {
    bool fixed = true;
    for (int g = members.first(); g >= 0 && fixed; g = members.next(g))
      if (a(g, x) != x) fixed = false;
    if (fixed) out.push_back(x);
  }
  return out;
}

GSet trivial_gset(const Group& g, int npoints) {
  GSet x;
  x.G = &g;
  x.size = npoints;
  x.act.resize(size_t(g.order()) * npoints);
  for (int h = 0; h < g.order(); ++h)
    for (int p = 0; p < npoints; ++p) x.act[size_t(h) * npoints + p] = p;
  return x;
}

GSet coset_gset(const RingContext& ctx, int s, std::vector<int>* reps_out) {
  const Group& g = ctx.group();
  const ElemSet& sm = ctx.lattice().sub(s).members;
  int n = g.order();
  // coset of x keyed by its least member
  std::vector<int> coset_rep(n);
  for (int x = 0; x < n; ++x) {
    int rep = n;
    for (int e = sm.first(); e >= 0; e = sm.next(e)) rep = std::min(rep, g.op(x, e));
    coset_rep[x] = rep;
  }
  std::vector<int> reps;
  std::vector<int> point_of(n, -1);
  for (int x = 0; x < n; ++x)
    if (coset_rep[x] == x) {
      point_of[x] = int(reps.size());
      reps.push_back(x);
    }
  GSet out;
  out.G = &g;
  out.size = int(reps.size());
  out.act.resize(size_t(n) * out.size);
  for (int h = 0; h < n; ++h)
    for (int p = 0; p < out.size; ++p)
      out.act[size_t(h) * out.size + p] = point_of[coset_rep[g.op(h, reps[p])]];
  if (reps_out) *reps_out = reps;
  return out;
}

void GMorphism::validate() const {
  if (dom.G != cod.G) throw SpecError("morphism: group mismatch");
  if (int(map.size()) != dom.size) throw SpecError("morphism: wrong map size");
  for (int x = 0; x < dom.size; ++x)
    if (map[x] < 0 || map[x] >= cod.size)
      throw SpecError("morphism: image out of range");
  for (int g = 0; g < dom.G->order(); ++g)
    for (int x = 0; x < dom.size; ++x)
      if (map[dom.a(g, x)] != cod.a(g, map[x]))
        throw SpecError("morphism: not equivariant");
}

void MorphismSquare::validate() const {
  const Group& g = *top.dom.G;
  if (int(alpha.size()) != top.dom.size || int(beta.size()) != top.cod.size)
    throw SpecError("square: wrong leg sizes");
  for (int x = 0; x < top.dom.size; ++x)
    for (int h = 0; h < g.order(); ++h)
      if (alpha[top.dom.a(h, x)] != bottom.dom.a(h, alpha[x]))
        throw SpecError("square: alpha is not equivariant");
  for (int y = 0; y < top.cod.size; ++y)
    for (int h = 0; h < g.order(); ++h)
      if (beta[top.cod.a(h, y)] != bottom.cod.a(h, beta[y]))
        throw SpecError("square: beta is not equivariant");
  for (int x = 0; x < top.dom.size; ++x)
    if (beta[top.map[x]] != bottom.map[alpha[x]])
      throw SpecError("square: legs do not commute");
}

GMorphism transitive_projection(const RingContext& ctx, int t, int s) {
  if (!ctx.lattice().leq(s, t))
    throw SpecError("transitive_projection: S not contained in T");
  std::vector<int> sreps, treps;
  GMorphism f;
  f.dom = coset_gset(ctx, s, &sreps);
  f.cod = coset_gset(ctx, t, &treps);
  const Group& g = ctx.group();
  const ElemSet& tm = ctx.lattice().sub(t).members;
  std::vector<int> tpoint(g.order(), -1);
  for (size_t p = 0; p < treps.size(); ++p) {
    for (int e = tm.first(); e >= 0; e = tm.next(e))
      tpoint[g.op(treps[p], e)] = int(p);
  }
  f.map.resize(f.dom.size);
  for (int p = 0; p < f.dom.size; ++p) f.map[p] = tpoint[sreps[p]];
  return f;
}

RingElement linearize(const RingContext& ctx, const GMorphism& f) {
  RingElement out;
  out.tag = RingTag::slice;
  for (int x : f.dom.orbit_reps()) {
    int s = ctx.lattice().id_of(f.dom.stabilizer(x));
    int t = ctx.lattice().id_of(f.cod.stabilizer(f.map[x]));
    if (s < 0 || t < 0) throw Error("linearize: stabilizer not in lattice");
    out.addc(ctx.slices().class_of_pair(t, s), Int(1));
  }
  return out;
}

long hom_count(const RingContext& ctx, int t, int s, const GMorphism& f) {
  const Group& g = ctx.group();
  std::vector<int> sreps, treps;
  GSet gs = coset_gset(ctx, s, &sreps);
  GSet gt = coset_gset(ctx, t, &treps);
  const ElemSet& tm = ctx.lattice().sub(t).members;
  std::vector<int> tpoint(g.order(), -1);
  for (size_t p = 0; p < treps.size(); ++p)
    for (int e = tm.first(); e >= 0; e = tm.next(e))
      tpoint[g.op(treps[p], e)] = int(p);

  // legs are determined by base-point images: alpha <-> x in X^S,
  // beta <-> y in Y^T
  std::vector<int> xs = f.dom.fixed_points(ctx.lattice().sub(s).members);
  std::vector<int> ys = f.cod.fixed_points(tm);
  long count = 0;
  for (int x : xs)
    for (int y : ys) {
      bool ok = true;
      for (int p = 0; p < gs.size && ok; ++p) {
        int alpha_p = f.dom.a(sreps[p], x);
        int beta_p = f.cod.a(treps[tpoint[sreps[p]]], y);
        if (f.map[alpha_p] != beta_p) ok = false;
      }
      if (ok) ++count;
    }
  return count;
}

GMorphism product_morphism(const GMorphism& f, const GMorphism& g) {
  if (f.dom.G != g.dom.G) throw SpecError("product: group mismatch");
  const Group& grp = *f.dom.G;
  auto prod_set = [&](const GSet& a, const GSet& b) {
    GSet p;
    p.G = &grp;
    p.size = a.size * b.size;
    p.act.resize(size_t(grp.order()) * p.size);
    for (int h = 0; h < grp.order(); ++h)
      for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y)
          p.act[size_t(h) * p.size + x * b.size + y] =
              a.a(h, x) * b.size + b.a(h, y);
    return p;
  };
  GMorphism out;
  out.dom = prod_set(f.dom, g.dom);
  out.cod = prod_set(f.cod, g.cod);
  out.map.resize(out.dom.size);
  for (int x = 0; x < f.dom.size; ++x)
    for (int y = 0; y < g.dom.size; ++y)
      out.map[x * g.dom.size + y] = f.map[x] * g.cod.size + g.map[y];
  return out;
}

GMorphism coproduct_morphism(const GMorphism& f, const GMorphism& g) {
  if (f.dom.G != g.dom.G) throw SpecError("coproduct: group mismatch");
  const Group& grp = *f.dom.G;
  auto union_set = [&](const GSet& a, const GSet& b) {
    GSet u;
    u.G = &grp;
    u.size = a.size + b.size;
    u.act.resize(size_t(grp.order()) * u.size);
    for (int h = 0; h < grp.order(); ++h) {
      for (int x = 0; x < a.size; ++x) u.act[size_t(h) * u.size + x] = a.a(h, x);
      for (int y = 0; y < b.size; ++y)
        u.act[size_t(h) * u.size + a.size + y] = a.size + b.a(h, y);
    }
    return u;
  };
  GMorphism out;
  out.dom = union_set(f.dom, g.dom);
  out.cod = union_set(f.cod, g.cod);
  out.map.resize(out.dom.size);
  for (int x = 0; x < f.dom.size; ++x) out.map[x] = f.map[x];
  for (int y = 0; y < g.dom.size; ++y)
    out.map[f.dom.size + y] = f.cod.size + g.map[y];
  return out;
}

namespace {

// G-subset of the codomain (as point list) reindexed into a GSet.
GSet subset_gset(const GSet& big, const std::vector<int>& points,
                 std::vector<int>& old_to_new) {
  const Group& g = *big.G;
  old_to_new.assign(big.size, -1);
  for (size_t i = 0; i < points.size(); ++i) old_to_new[points[i]] = int(i);
  GSet out;
  out.G = &g;
  out.size = int(points.size());
  out.act.resize(size_t(g.order()) * out.size);
  for (int h = 0; h < g.order(); ++h)
    for (size_t i = 0; i < points.size(); ++i) {
      int img = old_to_new[big.a(h, points[i])];
      if (img < 0) throw Error("subset is not G-stable");
      out.act[size_t(h) * out.size + i] = img;
    }
  return out;
}

}  // namespace

GMorphism restrict_to_image(const GMorphism& f) {
  std::vector<char> hit(f.cod.size, 0);
  for (int v : f.map) hit[v] = 1;
  std::vector<int> points;
  for (int y = 0; y < f.cod.size; ++y)
    if (hit[y]) points.push_back(y);
  std::vector<int> o2n;
  GMorphism out;
  out.dom = f.dom;
  out.cod = subset_gset(f.cod, points, o2n);
  out.map.resize(f.dom.size);
  for (int x = 0; x < f.dom.size; ++x) out.map[x] = o2n[f.map[x]];
  return out;
}

GMorphism restrict_to_subdomain(const GMorphism& f,
                                const std::vector<int>& dom_points) {
  std::vector<int> d2n;
  GMorphism half;
  half.dom = subset_gset(f.dom, dom_points, d2n);
  half.cod = f.cod;
  half.map.resize(dom_points.size());
  for (size_t i = 0; i < dom_points.size(); ++i)
    half.map[i] = f.map[dom_points[i]];
  return restrict_to_image(half);
}

PullbackSquare pullback(const GMorphism& c, const GMorphism& d) {
  if (c.cod.G != d.cod.G || c.cod.size != d.cod.size ||
      c.cod.act != d.cod.act)
    throw SpecError("pullback: codomains differ");
  const Group& g = *c.dom.G;
  std::vector<std::pair<int, int>> pts;
  for (int y = 0; y < c.dom.size; ++y)
    for (int z = 0; z < d.dom.size; ++z)
      if (c.map[y] == d.map[z]) pts.emplace_back(y, z);
  std::vector<int> index(size_t(c.dom.size) * d.dom.size, -1);
  for (size_t i = 0; i < pts.size(); ++i)
    index[size_t(pts[i].first) * d.dom.size + pts[i].second] = int(i);
  PullbackSquare out;
  out.apex.G = &g;
  out.apex.size = int(pts.size());
  out.apex.act.resize(size_t(g.order()) * pts.size());
  for (int h = 0; h < g.order(); ++h)
    for (size_t i = 0; i < pts.size(); ++i) {
      int y = c.dom.a(h, pts[i].first);
      int z = d.dom.a(h, pts[i].second);
      out.apex.act[size_t(h) * pts.size() + i] = index[size_t(y) * d.dom.size + z];
    }
  out.to_cod_of_c.dom = out.apex;
  out.to_cod_of_c.cod = c.dom;
  out.to_cod_of_d.dom = out.apex;
  out.to_cod_of_d.cod = d.dom;
  for (auto& [y, z] : pts) {
    out.to_cod_of_c.map.push_back(y);
    out.to_cod_of_d.map.push_back(z);
  }
  return out;
}

bool is_galois(const GMorphism& f) {
  const Group& g = *f.dom.G;
  // route 1: fibers have constant point stabilizers
  std::vector<ElemSet> fiber_stab(f.cod.size, ElemSet(0));
  std::vector<char> seen(f.cod.size, 0);
  bool constant = true;
  for (int x = 0; x < f.dom.size && constant; ++x) {
    ElemSet st = f.dom.stabilizer(x);
    int y = f.map[x];
    if (!seen[y]) {
      seen[y] = 1;
      fiber_stab[y] = st;
    } else if (!(fiber_stab[y] == st)) {
      constant = false;
    }
  }
  // route 2: constant fibers with stabilizer normal in the image-point
  // stabilizer
  bool normal_route = constant;
  if (constant) {
    for (int y = 0; y < f.cod.size && normal_route; ++y) {
      if (!seen[y]) continue;
      ElemSet gy = f.cod.stabilizer(y);
      const ElemSet& ny = fiber_stab[y];
      if (!ny.subset_of(gy)) {
        normal_route = false;
        break;
      }
      for (int h = gy.first(); h >= 0 && normal_route; h = gy.next(h))
        for (int e = ny.first(); e >= 0; e = ny.next(e))
          if (!ny.test(g.conj(h, e))) {
            normal_route = false;
            break;
          }
    }
  }
  if (constant != normal_route)
    throw Error("is_galois: criteria disagree");  // cannot happen
  return constant;
}

GaloisClosure galois_closure(const GMorphism& f) {
  const Group& g = *f.dom.G;
  int n = f.dom.size;
  // per fiber: subgroup generated by the stabilizers of its points
  std::vector<std::vector<int>> fiber(f.cod.size);
  for (int x = 0; x < n; ++x) fiber[f.map[x]].push_back(x);
  std::vector<ElemSet> fiber_group(f.cod.size);
  for (int y = 0; y < f.cod.size; ++y) {
    if (fiber[y].empty()) continue;
    ElemSet seed(g.order());
    for (int x : fiber[y])
      for (int h = 0; h < g.order(); ++h)
        if (f.dom.a(h, x) == x) seed.add(h);
    fiber_group[y] = g.generated_subgroup(seed.elements());
  }
  // union-find over x ~ hx for h in the fiber group of f(x)
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < n; ++x) {
    const ElemSet& fg = fiber_group[f.map[x]];
    for (int h = fg.first(); h >= 0; h = fg.next(h)) {
      int a = find(x), b = find(f.dom.a(h, x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // classes keyed by least member
  std::vector<int> cls(n, -1), roots;
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (cls[r] < 0) {
      cls[r] = int(roots.size());
      roots.push_back(r);
    }
    cls[x] = cls[r];
  }
  GaloisClosure out;
  out.proj = cls;
  out.closed.dom.G = &g;
  out.closed.dom.size = int(roots.size());
  out.closed.dom.act.resize(size_t(g.order()) * roots.size());
  for (int h = 0; h < g.order(); ++h)
    for (size_t i = 0; i < roots.size(); ++i)
      out.closed.dom.act[size_t(h) * roots.size() + i] = cls[f.dom.a(h, roots[i])];
  out.closed.dom.validate();
  out.closed.cod = f.cod;
  out.closed.map.resize(roots.size());
  for (size_t i = 0; i < roots.size(); ++i)
    out.closed.map[i] = f.map[roots[i]];
  if (!is_galois(out.closed)) throw Error("galois_closure: result not Galois");
  return out;
}

std::vector<std::vector<int>> equivariant_maps(const GSet& dom, const GSet& cod,
                                               size_t guard) {
  const Group& g = *dom.G;
  std::vector<int> reps = dom.orbit_reps();
  // choices per orbit: images fixed by the orbit rep's stabilizer
  std::vector<std::vector<int>> choices;
  size_t total = 1;
  for (int r : reps) {
    choices.push_back(cod.fixed_points(dom.stabilizer(r)));
    total *= std::max<size_t>(choices.back().size(), 1);
    if (choices.back().empty()) return {};
    if (total > guard) throw Error("equivariant_maps: search space too large");
  }
  // transversal: for each point, an element moving its orbit rep onto it
  std::vector<int> rep_of(dom.size, -1), mover(dom.size, -1);
  for (size_t i = 0; i < reps.size(); ++i)
    for (int h = 0; h < g.order(); ++h) {
      int y = dom.a(h, reps[i]);
      if (rep_of[y] < 0) {
        rep_of[y] = int(i);
        mover[y] = h;
      }
    }
  std::vector<std::vector<int>> out;
  std::vector<int> pick(reps.size(), 0);
  while (true) {
    std::vector<int> m(dom.size);
    for (int x = 0; x < dom.size; ++x)
      m[x] = cod.a(mover[x], choices[rep_of[x]][pick[rep_of[x]]]);
    out.push_back(std::move(m));
    size_t k = 0;
    while (k < pick.size() && ++pick[k] == int(choices[k].size())) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

GMorphism random_morphism(const RingContext& ctx, std::mt19937_64& rng,
                          int max_dom_orbits, int max_points) {
  const SubgroupLattice& lat = ctx.lattice();
  auto pick = [&](int lo, int hi) {
    return int(rng() % uint64_t(hi - lo + 1)) + lo;
  };
  std::vector<int> pool;
  for (int s = 0; s < lat.size(); ++s)
    if (max_points <= 0 ||
        ctx.group().order() / lat.order_of(s) <= max_points)
      pool.push_back(s);
  auto pick_subgroup = [&] { return pool[rng() % pool.size()]; };
  int ncod = pick(1, 3);
  GMorphism cur;
  bool have = false;
  for (int attempts = 0; attempts < 200; ++attempts) {
    // codomain: disjoint orbits G/T_j
    std::vector<int> ts;
    for (int j = 0; j < ncod; ++j) ts.push_back(pick_subgroup());
    GSet cod;
    std::vector<int> orbit_start;
    {
      GMorphism acc;
      bool first = true;
      for (int t : ts) {
        GMorphism id;
        id.dom = coset_gset(ctx, t);
        id.cod = id.dom;
        id.map.resize(id.dom.size);
        std::iota(id.map.begin(), id.map.end(), 0);
        acc = first ? id : coproduct_morphism(acc, id);
        first = false;
      }
      cod = acc.cod;
    }
    int ndom = pick(1, max_dom_orbits);
    std::vector<int> ss, targets;
    bool ok = true;
    int budget = max_points;
    for (int i = 0; i < ndom && ok; ++i) {
      int s = pick_subgroup();
      if (max_points > 0) {
        int pts = ctx.group().order() / lat.order_of(s);
        if (pts > budget) break;  // keep what fits
        budget -= pts;
      }
      std::vector<int> fixed = cod.fixed_points(lat.sub(s).members);
      if (fixed.empty()) {
        ok = false;
        break;
      }
      ss.push_back(s);
      targets.push_back(fixed[rng() % fixed.size()]);
    }
    if (!ok || ss.empty()) continue;
    ndom = int(ss.size());
    // assemble domain orbits and the equivariant map orbit by orbit
    GMorphism out;
    bool first = true;
    for (int i = 0; i < ndom; ++i) {
      std::vector<int> reps;
      GSet orb = coset_gset(ctx, ss[i], &reps);
      GMorphism piece;
      piece.dom = orb;
      piece.cod = cod;
      piece.map.resize(orb.size);
      for (int p = 0; p < orb.size; ++p)
        piece.map[p] = cod.a(reps[p], targets[i]);
      if (first) {
        out = piece;
        first = false;
      } else {
        // shared codomain: merge domains only
        GMorphism merged;
        GSet u;
        u.G = out.dom.G;
        u.size = out.dom.size + piece.dom.size;
        u.act.resize(size_t(ctx.group().order()) * u.size);
        for (int h = 0; h < ctx.group().order(); ++h) {
          for (int x = 0; x < out.dom.size; ++x)
            u.act[size_t(h) * u.size + x] = out.dom.a(h, x);
          for (int y = 0; y < piece.dom.size; ++y)
            u.act[size_t(h) * u.size + out.dom.size + y] =
                out.dom.size + piece.dom.a(h, y);
        }
        merged.dom = u;
        merged.cod = cod;
        merged.map = out.map;
        merged.map.insert(merged.map.end(), piece.map.begin(), piece.map.end());
        out = merged;
      }
    }
    out.validate();
    cur = out;
    have = true;
    break;
  }
  if (!have) throw Error("random_morphism: could not build a morphism");
  return cur;
}

}  // namespace burnside
