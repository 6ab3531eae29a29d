#include "burnside/io.hpp"

#include <sstream>

namespace burnside {

Json subgroup_to_json(const RingContext& ctx, int id) {
  return Json(ctx.lattice().sub(id).members.elements());
}

namespace {

template <typename C>
Json element_json_impl(const RingContext& ctx, const BasicElement<C>& x) {
  Json coeffs = Json::array();
  for (auto& [c, v] : x.coeffs) {
    std::ostringstream num;
    num << v;
    if (x.tag == RingTag::burnside) {
      coeffs.push_back({{"s", subgroup_to_json(ctx, ctx.lattice().class_rep(c))},
                        {"c", num.str()}});
    } else {
      const Slice& sl = ctx.slices().class_rep(c);
      coeffs.push_back({{"t", subgroup_to_json(ctx, sl.t)},
                        {"s", subgroup_to_json(ctx, sl.s)},
                        {"c", num.str()}});
    }
  }
  return Json{{"group", ctx.group().name()},
              {"ring", to_string(x.tag)},
              {"coeffs", coeffs}};
}

int subgroup_from_json(const RingContext& ctx, const Json& j) {
  ElemSet m(ctx.group().order());
  for (int e : j.get<std::vector<int>>()) m.add(e);
  int id = ctx.lattice().id_of(m);
  if (id < 0) throw SpecError("element_from_json: not a subgroup");
  return id;
}

}  // namespace

Json element_to_json(const RingContext& ctx, const RingElement& x) {
  return element_json_impl(ctx, x);
}
Json element_to_json(const RingContext& ctx, const QRingElement& x) {
  return element_json_impl(ctx, x);
}

RingElement element_from_json(const RingContext& ctx, const Json& j) {
  RingElement x;
  std::string ring = j.at("ring").get<std::string>();
  if (ring == "slice")
    x.tag = RingTag::slice;
  else if (ring == "section")
    x.tag = RingTag::section;
  else if (ring == "burnside")
    x.tag = RingTag::burnside;
  else
    throw SpecError("element_from_json: unknown ring tag");
  for (const Json& e : j.at("coeffs")) {
    Int c(e.at("c").get<std::string>());
    if (x.tag == RingTag::burnside) {
      x.addc(ctx.lattice().class_of(subgroup_from_json(ctx, e.at("s"))), c);
    } else {
      int t = subgroup_from_json(ctx, e.at("t"));
      int s = subgroup_from_json(ctx, e.at("s"));
      if (!ctx.lattice().leq(s, t))
        throw SpecError("element_from_json: S not contained in T");
      x.addc(ctx.slices().class_of_pair(t, s), c);
    }
  }
  return x;
}

namespace {

std::string subgroup_label(const RingContext& ctx, int id) {
  std::ostringstream ss;
  ss << '{';
  bool first = true;
  for (int e : ctx.lattice().sub(id).members.elements()) {
    if (!first) ss << ' ';
    ss << e;
    first = false;
  }
  ss << '}';
  return ss.str();
}

}  // namespace

std::string marks_csv(const RingContext& ctx, RingTag tag) {
  if (tag == RingTag::burnside) {
    std::ostringstream out;
    int n = ctx.lattice().num_classes();
    out << "phi";
    for (int c = 0; c < n; ++c)
      out << ',' << subgroup_label(ctx, ctx.lattice().class_rep(c));
    out << '\n';
    for (int r = 0; r < n; ++r) {
      out << subgroup_label(ctx, ctx.lattice().class_rep(r));
      for (int c = 0; c < n; ++c)
        out << ',' << ctx.burnside_marks()[size_t(r) * n + c];
      out << '\n';
    }
    return out.str();
  }
  const SliceTable& st = ctx.slices();
  std::vector<int> classes;
  if (tag == RingTag::section)
    classes = st.section_classes();
  else {
    classes.resize(st.num_classes());
    for (int i = 0; i < st.num_classes(); ++i) classes[i] = i;
  }
  auto label = [&](int c) {
    const Slice& sl = st.class_rep(c);
    return subgroup_label(ctx, sl.t) + ":" + subgroup_label(ctx, sl.s);
  };
  std::ostringstream out;
  out << "phi";
  for (int c : classes) out << ',' << label(c);
  out << '\n';
  int n = st.num_classes();
  for (int r : classes) {
    out << label(r);
    for (int c : classes) out << ',' << ctx.mark_matrix()[size_t(r) * n + c];
    out << '\n';
  }
  return out.str();
}

Json morphism_to_json(const GMorphism& f) {
  auto gset_json = [](const GSet& x) {
    Json action = Json::array();
    for (int g = 0; g < x.G->order(); ++g) {
      Json row = Json::array();
      for (int p = 0; p < x.size; ++p) row.push_back(x.a(g, p));
      action.push_back(row);
    }
    return Json{{"points", x.size}, {"action", action}};
  };
  return Json{{"dom", gset_json(f.dom)},
              {"cod", gset_json(f.cod)},
              {"map", f.map}};
}

namespace {

GSet gset_from_json(const Group& g, const Json& j) {
  GSet x;
  x.G = &g;
  x.size = j.at("points").get<int>();
  const Json& action = j.at("action");
  if (int(action.size()) != g.order())
    throw SpecError("gset_from_json: wrong action table height");
  x.act.resize(size_t(g.order()) * x.size);
  for (int h = 0; h < g.order(); ++h) {
    const auto row = action[h].get<std::vector<int>>();
    if (int(row.size()) != x.size)
      throw SpecError("gset_from_json: wrong action row width");
    for (int p = 0; p < x.size; ++p) x.act[size_t(h) * x.size + p] = row[p];
  }
  x.validate();
  return x;
}

}  // namespace

GMorphism morphism_from_json(const Group& g, const Json& j) {
  GMorphism f;
  f.dom = gset_from_json(g, j.at("dom"));
  f.cod = gset_from_json(g, j.at("cod"));
  f.map = j.at("map").get<std::vector<int>>();
  f.validate();
  return f;
}

Json biset_to_json(const Biset& u) {
  Json left = Json::array(), right = Json::array();
  for (int h = 0; h < u.H->order(); ++h) {
    Json row = Json::array();
    for (int x = 0; x < u.size; ++x) row.push_back(u.l(h, x));
    left.push_back(row);
  }
  for (int x = 0; x < u.size; ++x) {
    Json row = Json::array();
    for (int g = 0; g < u.G->order(); ++g) row.push_back(u.r(x, g));
    right.push_back(row);
  }
  return Json{{"points", u.size}, {"left", left}, {"right", right}};
}

Biset biset_from_json(const Group& h, const Group& g, const Json& j) {
  Biset u;
  u.H = &h;
  u.G = &g;
  u.size = j.at("points").get<int>();
  u.lact.resize(size_t(h.order()) * u.size);
  u.ract.resize(size_t(u.size) * g.order());
  const Json& left = j.at("left");
  const Json& right = j.at("right");
  for (int a = 0; a < h.order(); ++a)
    for (int x = 0; x < u.size; ++x)
      u.lact[size_t(a) * u.size + x] = left[a][x].get<int>();
  for (int x = 0; x < u.size; ++x)
    for (int b = 0; b < g.order(); ++b)
      u.ract[size_t(x) * g.order() + b] = right[x][b].get<int>();
  u.validate();
  return u;
}

Json unit_basis_to_json(const RingContext& ctx, const UnitGroupBasis& ub) {
  Json basis = Json::array();
  for (const RingElement& u : ub.basis) basis.push_back(element_to_json(ctx, u));
  return Json{{"ring", to_string(ub.tag)},
              {"dimension", ub.dimension},
              {"basis", basis}};
}

Json components_to_json(const RingContext& ctx, RingTag tag, int p,
                        const std::vector<SpectrumComponent>& comps) {
  Json out;
  out["ring"] = to_string(tag);
  out["localization"] = p == 0 ? Json("Z") : Json("Z_(" + std::to_string(p) + ")");
  Json list = Json::array();
  for (const SpectrumComponent& comp : comps) {
    Json jc;
    Json classes = Json::array();
    for (int c : comp.classes) {
      const Slice& sl = ctx.slices().class_rep(c);
      classes.push_back({{"t", subgroup_to_json(ctx, sl.t)},
                         {"s", subgroup_to_json(ctx, sl.s)}});
    }
    jc["classes"] = classes;
    if (comp.label_subgroup_class >= 0)
      jc["label"] = subgroup_to_json(
          ctx, ctx.lattice().class_rep(comp.label_subgroup_class));
    jc["idempotent"] = element_to_json(ctx, comp.idempotent);
    list.push_back(jc);
  }
  out["components"] = list;
  return out;
}

}  // namespace burnside
