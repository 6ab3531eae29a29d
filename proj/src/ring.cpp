#include "burnside/ring.hpp"

#include <algorithm>
#include <sstream>

namespace burnside {

std::string to_string(RingTag tag) {
  switch (tag) {
    case RingTag::slice: return "slice";
    case RingTag::section: return "section";
    case RingTag::burnside: return "burnside";
  }
  return "?";
}

QRingElement to_rational(const RingElement& x) {
  QRingElement q;
  q.tag = x.tag;
  for (auto& [c, v] : x.coeffs) q.coeffs[c] = Rat(v);
  return q;
}

bool is_integral(const QRingElement& x) {
  for (auto& [c, v] : x.coeffs)
    if (v.get_den() != 1) return false;
  return true;
}

RingElement to_integral(const QRingElement& x) {
  if (!is_integral(x)) throw Error("element is not integral");
  RingElement r;
  r.tag = x.tag;
  for (auto& [c, v] : x.coeffs) r.coeffs[c] = v.get_num();
  return r;
}

RingContext::RingContext(Group g, ContextOptions opt) : group_(std::move(g)) {
  lattice_ = std::make_unique<SubgroupLattice>(group_, opt.cap);
  slices_ = std::make_unique<SliceTable>(*lattice_);
  mobius_ = std::make_unique<SubgroupMobius>(*lattice_);
  if (opt.parallel) {
    marks_ = mark_matrix_parallel(*slices_);
    products_ = product_table_parallel(*slices_);
  } else {
    marks_ = mark_matrix_serial(*slices_);
    products_ = product_table_serial(*slices_);
  }
  bmarks_ = burnside_mark_matrix(*lattice_);
  bproducts_ = burnside_product_table(*lattice_);

  int nc = slices_->num_classes();
  pair_normalizer_.resize(nc);
  pair_normalizer_index_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const Slice& sl = slices_->class_rep(c);
    int nid = normalizer_pair(*lattice_, sl.t, sl.s);
    pair_normalizer_[c] = lattice_->order_of(nid);
    pair_normalizer_index_[c] = pair_normalizer_[c] / lattice_->order_of(sl.s);
  }

  auto build_cosets = [&](int c, bool section_mode) {
    const SubgroupLattice& lat = *lattice_;
    const SliceTable& st = *slices_;
    const Slice& sl = st.class_rep(c);
    NormalizerCosets out;
    out.normalizer_id = normalizer_pair(lat, sl.t, sl.s);
    const ElemSet& nm = lat.sub(out.normalizer_id).members;
    const ElemSet& sm = lat.sub(sl.s).members;
    out.pos.assign(group_.order(), -1);
    for (int x = nm.first(); x >= 0; x = nm.next(x)) {
      if (out.pos[x] >= 0) continue;
      int p = int(out.reps.size());
      int rep = x;
      for (int s = sm.first(); s >= 0; s = sm.next(s)) {
        int xs = group_.op(x, s);
        out.pos[xs] = p;
        rep = std::min(rep, xs);
      }
      out.reps.push_back(rep);
      int tg = lat.extend_by(sl.t, rep);
      int sg = lat.extend_by(sl.s, rep);
      if (section_mode) sg = normal_closure(lat, sg, tg);
      out.cls.push_back(st.class_of_pair(tg, sg));
    }
    out.index = int(out.reps.size());
    return out;
  };
  cosets_slice_.resize(nc);
  cosets_section_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    cosets_slice_[c] = build_cosets(c, false);
    if (slices_->is_section_class(c)) cosets_section_[c] = build_cosets(c, true);
  }
}

const NormalizerCosets& RingContext::cosets(int c, bool section_mode) const {
  if (section_mode) {
    if (!slices_->is_section_class(c))
      throw SpecError("cosets: section mode needs a section class");
    return cosets_section_[c];
  }
  return cosets_slice_[c];
}

int RingContext::num_classes(RingTag tag) const {
  switch (tag) {
    case RingTag::slice: return slices_->num_classes();
    case RingTag::section: return slices_->num_section_classes();
    case RingTag::burnside: return lattice_->num_classes();
  }
  return 0;
}

RingElement basis_element(const RingContext& ctx, int t, int s, RingTag tag) {
  const SliceTable& st = ctx.slices();
  if (!ctx.lattice().leq(s, t))
    throw SpecError("basis_element: S not contained in T");
  if (tag == RingTag::burnside)
    throw SpecError("basis_element: use burnside_basis for B(G)");
  int c = st.class_of_pair(t, s);
  if (tag == RingTag::section && !st.is_section_class(c))
    throw SpecError("basis_element: (T,S) is not a section");
  RingElement r;
  r.tag = tag;
  r.coeffs[c] = 1;
  return r;
}

RingElement burnside_basis(const RingContext& ctx, int s) {
  RingElement r;
  r.tag = RingTag::burnside;
  r.coeffs[ctx.lattice().class_of(s)] = 1;
  return r;
}

RingElement one(const RingContext& ctx, RingTag tag) {
  if (tag == RingTag::burnside) {
    return burnside_basis(ctx, ctx.lattice().full_id());
  }
  int f = ctx.lattice().full_id();
  return basis_element(ctx, f, f, tag);
}

namespace {

template <typename C>
BasicElement<C> multiply_impl(const RingContext& ctx, const BasicElement<C>& x,
                              const BasicElement<C>& y) {
  if (x.tag != y.tag) throw SpecError("multiply: ring mismatch");
  const ProductTable& table =
      x.tag == RingTag::burnside ? ctx.burnside_products() : ctx.products();
  int n = x.tag == RingTag::burnside ? ctx.lattice().num_classes()
                                     : ctx.slices().num_classes();
  BasicElement<C> r;
  r.tag = x.tag;
  for (auto& [c1, v1] : x.coeffs)
    for (auto& [c2, v2] : y.coeffs) {
      C w = v1 * v2;
      for (auto& [c, mult] : table[size_t(c1) * n + c2])
        r.addc(c, C(w * mult));
    }
  if (x.tag == RingTag::section) {
    // the section ring is closed under products; check, don't assume
    for (auto& [c, v] : r.coeffs)
      if (!ctx.slices().is_section_class(c))
        throw Error("section product left the section ring");
  }
  return r;
}

}  // namespace

RingElement multiply(const RingContext& ctx, const RingElement& x,
                     const RingElement& y) {
  return multiply_impl(ctx, x, y);
}
QRingElement multiply(const RingContext& ctx, const QRingElement& x,
                      const QRingElement& y) {
  return multiply_impl(ctx, x, y);
}

namespace {

template <typename C>
C mark_impl(const RingContext& ctx, int t, int s, const BasicElement<C>& x) {
  if (x.tag == RingTag::burnside)
    throw SpecError("mark: marks over slices need a slice/section element");
  const SliceTable& st = ctx.slices();
  int n = st.num_classes();
  int row = st.class_of_pair(t, s);
  const std::vector<Int>& m = ctx.mark_matrix();
  C acc(0);
  for (auto& [c, v] : x.coeffs) acc += C(v * m[size_t(row) * n + c]);
  return acc;
}

}  // namespace

Int mark(const RingContext& ctx, int t, int s, const RingElement& x) {
  return mark_impl(ctx, t, s, x);
}
Rat mark(const RingContext& ctx, int t, int s, const QRingElement& x) {
  return mark_impl(ctx, t, s, x);
}

namespace {

template <typename C>
std::vector<C> ghost_impl(const RingContext& ctx, const BasicElement<C>& x) {
  if (x.tag == RingTag::burnside) {
    int n = ctx.lattice().num_classes();
    const std::vector<Int>& m = ctx.burnside_marks();
    std::vector<C> out(n, C(0));
    for (int r = 0; r < n; ++r)
      for (auto& [c, v] : x.coeffs) out[r] += C(v * m[size_t(r) * n + c]);
    return out;
  }
  const SliceTable& st = ctx.slices();
  int n = st.num_classes();
  const std::vector<Int>& m = ctx.mark_matrix();
  if (x.tag == RingTag::slice) {
    std::vector<C> out(n, C(0));
    for (int r = 0; r < n; ++r)
      for (auto& [c, v] : x.coeffs) out[r] += C(v * m[size_t(r) * n + c]);
    return out;
  }
  const std::vector<int>& secs = st.section_classes();
  std::vector<C> out(secs.size(), C(0));
  for (size_t i = 0; i < secs.size(); ++i)
    for (auto& [c, v] : x.coeffs)
      out[i] += C(v * m[size_t(secs[i]) * n + c]);
  return out;
}

}  // namespace

std::vector<Int> ghost(const RingContext& ctx, const RingElement& x) {
  return ghost_impl(ctx, x);
}
std::vector<Rat> ghost(const RingContext& ctx, const QRingElement& x) {
  return ghost_impl(ctx, x);
}

QRingElement ghost_pullback(const RingContext& ctx, const std::vector<Rat>& m,
                            RingTag tag) {
  const SliceTable& st = ctx.slices();
  int nfull = st.num_classes();
  std::vector<int> idx;  // row/col class ids in solve order
  const std::vector<Int>* marks = &ctx.mark_matrix();
  int stride = nfull;
  if (tag == RingTag::slice) {
    idx.resize(nfull);
    for (int i = 0; i < nfull; ++i) idx[i] = i;
  } else if (tag == RingTag::section) {
    idx = st.section_classes();
  } else {
    idx.resize(ctx.lattice().num_classes());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    marks = &ctx.burnside_marks();
    stride = ctx.lattice().num_classes();
  }
  int n = int(idx.size());
  if (int(m.size()) != n) throw SpecError("ghost_pullback: wrong vector length");
  // mark matrices are upper triangular in class order
  std::vector<Rat> x(n, Rat(0));
  for (int r = n - 1; r >= 0; --r) {
    Rat acc = m[r];
    for (int c = r + 1; c < n; ++c)
      acc -= Rat((*marks)[size_t(idx[r]) * stride + idx[c]]) * x[c];
    Rat diag((*marks)[size_t(idx[r]) * stride + idx[r]]);
    if (diag == 0) throw Error("ghost_pullback: singular mark matrix");
    x[r] = acc / diag;
  }
  QRingElement out;
  out.tag = tag;
  for (int i = 0; i < n; ++i)
    if (x[i] != 0) out.coeffs[idx[i]] = x[i];
  return out;
}

RingElement integral_pullback(const RingContext& ctx,
                              const std::vector<Int>& m, RingTag tag) {
  std::vector<Rat> q(m.size());
  for (size_t i = 0; i < m.size(); ++i) q[i] = Rat(m[i]);
  QRingElement x = ghost_pullback(ctx, q, tag);
  if (!is_integral(x)) throw Error("pullback is not integral");
  return to_integral(x);
}

QRingElement idempotent_xi(const RingContext& ctx, int t, int s) {
  const SubgroupLattice& lat = ctx.lattice();
  const SliceTable& st = ctx.slices();
  const SubgroupMobius& mob = ctx.mobius();
  if (!lat.leq(s, t)) throw SpecError("idempotent_xi: S not contained in T");
  int nsub = lat.size();
  std::map<int, Int> acc;
  for (int v = 0; v < nsub; ++v) {
    if (!lat.leq(s, v) || !lat.leq(v, t)) continue;
    const Int& mu_vt = mob.mu(v, t);
    if (mu_vt == 0) continue;
    for (int u = 0; u < nsub; ++u) {
      if (!lat.leq(u, s)) continue;
      const Int& mu_us = mob.mu(u, s);
      if (mu_us == 0) continue;
      acc[st.class_of_pair(v, u)] += Int(lat.order_of(u)) * mu_us * mu_vt;
    }
  }
  Int norm(lat.order_of(normalizer_pair(lat, t, s)));
  QRingElement out;
  out.tag = RingTag::slice;
  for (auto& [c, v] : acc) {
    if (v == 0) continue;
    Rat q(v, norm);
    q.canonicalize();
    out.coeffs[c] = q;
  }
  return out;
}

QRingElement idempotent_gamma(const RingContext& ctx, int t, int s) {
  const SubgroupLattice& lat = ctx.lattice();
  const SliceTable& st = ctx.slices();
  const SubgroupMobius& mob = ctx.mobius();
  if (!lat.is_normal_in(s, t))
    throw SpecError("idempotent_gamma: (T,S) is not a section");
  int nsub = lat.size();
  std::map<int, Int> acc;
  // gamma = 1/|N(T,S)| * sum over sections (V,U) <= (T,S) of
  //         |U| mu(V,T) (sum over U <= X <= V with X^{<|T} = S of mu(U,X))
  for (int v = 0; v < nsub; ++v) {
    if (!lat.leq(v, t)) continue;
    const Int& mu_vt = mob.mu(v, t);
    if (mu_vt == 0) continue;
    for (int u = 0; u < nsub; ++u) {
      if (!lat.leq(u, v) || !lat.is_normal_in(u, v)) continue;
      Int inner(0);
      for (int x = 0; x < nsub; ++x) {
        if (!lat.leq(u, x) || !lat.leq(x, v)) continue;
        if (normal_closure(lat, x, t) != s) continue;
        inner += mob.mu(u, x);
      }
      if (inner == 0) continue;
      acc[st.class_of_pair(v, u)] += Int(lat.order_of(u)) * mu_vt * inner;
    }
  }
  Int norm(lat.order_of(normalizer_pair(lat, t, s)));
  QRingElement out;
  out.tag = RingTag::section;
  for (auto& [c, v] : acc) {
    if (v == 0) continue;
    Rat q(v, norm);
    q.canonicalize();
    out.coeffs[c] = q;
  }
  return out;
}

QRingElement burnside_idempotent(const RingContext& ctx, int h) {
  const SubgroupLattice& lat = ctx.lattice();
  const SubgroupMobius& mob = ctx.mobius();
  std::map<int, Int> acc;
  for (int k = 0; k < lat.size(); ++k) {
    if (!lat.leq(k, h)) continue;
    const Int& mu_kh = mob.mu(k, h);
    if (mu_kh == 0) continue;
    acc[lat.class_of(k)] += Int(lat.order_of(k)) * mu_kh;
  }
  Int norm(lat.order_of(lat.normalizer(h)));
  QRingElement out;
  out.tag = RingTag::burnside;
  for (auto& [c, v] : acc) {
    if (v == 0) continue;
    Rat q(v, norm);
    q.canonicalize();
    out.coeffs[c] = q;
  }
  return out;
}

const NormalizerCosets& normalizer_cosets(const RingContext& ctx, int c,
                                          bool section_mode) {
  return ctx.cosets(c, section_mode);
}

bool ghost_image_check(const RingContext& ctx, const std::vector<Int>& m) {
  const SliceTable& st = ctx.slices();
  if (int(m.size()) != st.num_classes())
    throw SpecError("ghost_image_check: wrong vector length");
  for (int c = 0; c < st.num_classes(); ++c) {
    const NormalizerCosets& nc = normalizer_cosets(ctx, c, false);
    Int sigma(0);
    for (int k : nc.cls) sigma += m[k];
    if (sigma % nc.index != 0) return false;
  }
  return true;
}

bool ghost_image_check_sections(const RingContext& ctx,
                                const std::vector<Int>& m) {
  const SliceTable& st = ctx.slices();
  if (int(m.size()) != st.num_section_classes())
    throw SpecError("ghost_image_check_sections: wrong vector length");
  for (int sc : st.section_classes()) {
    const NormalizerCosets& nc = normalizer_cosets(ctx, sc, true);
    Int sigma(0);
    for (int k : nc.cls) {
      int p = st.section_pos(k);
      if (p < 0) throw Error("closure left the section poset");
      sigma += m[p];
    }
    if (sigma % nc.index != 0) return false;
  }
  return true;
}

RingElement section_restriction_map(const RingContext& ctx,
                                    const RingElement& x) {
  if (x.tag == RingTag::burnside)
    throw SpecError("section_restriction_map: slice/section elements only");
  const SliceTable& st = ctx.slices();
  RingElement r;
  r.tag = RingTag::section;
  for (auto& [c, v] : x.coeffs) r.addc(st.closure_class(c), v);
  return r;
}

RingElement s_map(const RingContext& ctx, const RingElement& x) {
  if (x.tag == RingTag::burnside)
    throw SpecError("s_map: slice/section elements only");
  const SliceTable& st = ctx.slices();
  RingElement r;
  r.tag = RingTag::burnside;
  for (auto& [c, v] : x.coeffs)
    r.addc(ctx.lattice().class_of(st.class_rep(c).s), v);
  return r;
}

RingElement i_map(const RingContext& ctx, const RingElement& x) {
  if (x.tag != RingTag::burnside)
    throw SpecError("i_map: B(G) elements only");
  const SliceTable& st = ctx.slices();
  RingElement r;
  r.tag = RingTag::section;
  for (auto& [c, v] : x.coeffs) {
    int s = ctx.lattice().class_rep(c);
    r.addc(st.class_of_pair(s, s), v);
  }
  return r;
}

RingElement external_product(const RingContext& ca, const RingContext& cb,
                             const RingContext& cprod, const RingElement& x,
                             const RingElement& y) {
  if (x.tag == RingTag::burnside || y.tag == RingTag::burnside)
    throw SpecError("external_product: slice/section elements only");
  int nb = cb.group().order();
  if (ca.group().order() * nb != cprod.group().order())
    throw SpecError("external_product: product context mismatch");
  auto embed = [&](int ta, int tb) {
    const ElemSet& ma = ca.lattice().sub(ta).members;
    const ElemSet& mb = cb.lattice().sub(tb).members;
    ElemSet prod(cprod.group().order());
    for (int a = ma.first(); a >= 0; a = ma.next(a))
      for (int b = mb.first(); b >= 0; b = mb.next(b)) prod.add(a * nb + b);
    int id = cprod.lattice().id_of(prod);
    if (id < 0) throw Error("external_product: subgroup not in product lattice");
    return id;
  };
  RingElement r;
  r.tag = (x.tag == RingTag::section && y.tag == RingTag::section)
              ? RingTag::section
              : RingTag::slice;
  for (auto& [c1, v1] : x.coeffs) {
    const Slice& a = ca.slices().class_rep(c1);
    for (auto& [c2, v2] : y.coeffs) {
      const Slice& b = cb.slices().class_rep(c2);
      int t = embed(a.t, b.t), s = embed(a.s, b.s);
      r.addc(cprod.slices().class_of_pair(t, s), Int(v1 * v2));
    }
  }
  return r;
}

namespace {

std::string subgroup_str(const RingContext& ctx, int id) {
  std::ostringstream ss;
  ss << '{';
  bool first = true;
  for (int e : ctx.lattice().sub(id).members.elements()) {
    if (!first) ss << ',';
    ss << e;
    first = false;
  }
  ss << '}';
  return ss.str();
}

template <typename C>
std::string element_str(const RingContext& ctx, const BasicElement<C>& x) {
  if (x.coeffs.empty()) return "0";
  std::ostringstream ss;
  bool first = true;
  for (auto& [c, v] : x.coeffs) {
    if (!first) ss << " + ";
    first = false;
    ss << v << "*";
    if (x.tag == RingTag::burnside) {
      ss << "[G/" << subgroup_str(ctx, ctx.lattice().class_rep(c)) << "]";
    } else {
      const Slice& sl = ctx.slices().class_rep(c);
      ss << "<" << subgroup_str(ctx, sl.t) << "," << subgroup_str(ctx, sl.s)
         << ">";
    }
  }
  return ss.str();
}

}  // namespace

std::string element_to_string(const RingContext& ctx, const RingElement& x) {
  return element_str(ctx, x);
}
std::string element_to_string(const RingContext& ctx, const QRingElement& x) {
  return element_str(ctx, x);
}

}  // namespace burnside
