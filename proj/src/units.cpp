#include "burnside/units.hpp"

#include <algorithm>

namespace burnside {

namespace {

// Row-reduce; returns pivot column per reduced row.
std::vector<int> eliminate(BitMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.get(r, col)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) {
      m.xor_rows(row, pr);
      m.xor_rows(pr, row);
      m.xor_rows(row, pr);
    }
    for (int r = 0; r < m.rows(); ++r)
      if (r != row && m.get(r, col)) m.xor_rows(r, row);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<char>> gf2_nullspace(BitMatrix m) {
  std::vector<int> pivots = eliminate(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<char>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<char> v(m.cols(), 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      if (m.get(int(r), free)) v[pivots[r]] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

int gf2_rank(BitMatrix m) { return int(eliminate(m).size()); }

bool gf2_in_span(const std::vector<std::vector<char>>& span,
                 const std::vector<char>& v) {
  if (span.empty()) return std::count(v.begin(), v.end(), 1) == 0;
  int cols = int(span[0].size());
  BitMatrix base(int(span.size()), cols);
  for (size_t r = 0; r < span.size(); ++r)
    for (int c = 0; c < cols; ++c)
      if (span[r][c]) base.flip(int(r), c);
  int rank0 = gf2_rank(base);
  base.append_row();
  for (int c = 0; c < cols; ++c)
    if (v[c]) base.flip(base.rows() - 1, c);
  return gf2_rank(base) == rank0;
}

BitMatrix unit_constraints(const RingContext& ctx, RingTag tag) {
  if (tag == RingTag::burnside)
    throw SpecError("unit_constraints: slice or section ring");
  bool sections = tag == RingTag::section;
  const SliceTable& st = ctx.slices();
  const Group& g = ctx.group();
  int ncols = ctx.num_classes(tag);
  auto unknown = [&](int cls) {
    return sections ? st.section_pos(cls) : cls;
  };

  std::vector<int> classes;
  if (sections) {
    classes = st.section_classes();
  } else {
    classes.resize(st.num_classes());
    for (int i = 0; i < st.num_classes(); ++i) classes[i] = i;
  }
  long nrows = 0;
  for (int c : classes) {
    const NormalizerCosets& nc = normalizer_cosets(ctx, c, sections);
    nrows += long(nc.index) * nc.index;
  }
  BitMatrix m(int(nrows), ncols);
  int r = 0;
  for (int c : classes) {
    const NormalizerCosets& nc = normalizer_cosets(ctx, c, sections);
    int base = unknown(nc.cls[nc.pos[0]]);
    for (int i = 0; i < nc.index; ++i)
      for (int j = 0; j < nc.index; ++j, ++r) {
        int ij = nc.pos[g.op(nc.reps[i], nc.reps[j])];
        // XOR accumulates, so repeated unknowns cancel mod 2
        m.flip(r, unknown(nc.cls[ij]));
        m.flip(r, unknown(nc.cls[i]));
        m.flip(r, unknown(nc.cls[j]));
        m.flip(r, base);
      }
  }
  return m;
}

RingElement unit_from_signs(const RingContext& ctx,
                            const std::vector<char>& lambda, RingTag tag) {
  int n = ctx.num_classes(tag);
  if (int(lambda.size()) != n) throw SpecError("unit_from_signs: wrong length");
  std::vector<Int> m(n);
  for (int i = 0; i < n; ++i) m[i] = lambda[i] ? -1 : 1;
  return integral_pullback(ctx, m, tag);
}

UnitGroupBasis unit_group(const RingContext& ctx, RingTag tag) {
  UnitGroupBasis out;
  out.tag = tag;
  out.sign_vectors = gf2_nullspace(unit_constraints(ctx, tag));
  out.dimension = int(out.sign_vectors.size());
  for (const auto& lambda : out.sign_vectors) {
    RingElement u = unit_from_signs(ctx, lambda, tag);
    RingElement sq = multiply(ctx, u, u);
    if (!(sq == one(ctx, tag))) throw Error("unit_group: basis element u^2 != 1");
    out.basis.push_back(std::move(u));
  }
  return out;
}

UnitGroupBasis abelian_unit_basis(const RingContext& ctx) {
  if (!ctx.group().is_abelian())
    throw SpecError("abelian_unit_basis: group is not abelian");
  const SubgroupLattice& lat = ctx.lattice();
  int full = lat.full_id();
  UnitGroupBasis out;
  out.tag = RingTag::slice;
  std::vector<RingElement> elems;
  elems.push_back(scale(Int(-1), one(ctx)));
  for (int s = 0; s < lat.size(); ++s) {
    if (2 * lat.order_of(s) != ctx.group().order()) continue;
    elems.push_back(sub(one(ctx), basis_element(ctx, s, s)));
    elems.push_back(sub(one(ctx), basis_element(ctx, full, s)));
  }
  for (RingElement& u : elems) {
    if (!(multiply(ctx, u, u) == one(ctx)))
      throw Error("abelian_unit_basis: element does not square to 1");
    std::vector<Int> gh = ghost(ctx, u);
    std::vector<char> lambda(gh.size());
    for (size_t i = 0; i < gh.size(); ++i) {
      if (gh[i] != 1 && gh[i] != -1)
        throw Error("abelian_unit_basis: ghost value not a sign");
      lambda[i] = gh[i] == -1;
    }
    out.sign_vectors.push_back(std::move(lambda));
    out.basis.push_back(std::move(u));
  }
  out.dimension = int(out.basis.size());
  return out;
}

UnitGroupBasis ordinary_unit_subgroup(const RingContext& ctx) {
  if (!ctx.group().is_abelian())
    throw SpecError("ordinary_unit_subgroup: group is not abelian");
  const SubgroupLattice& lat = ctx.lattice();
  UnitGroupBasis out;
  out.tag = RingTag::slice;
  std::vector<RingElement> elems;
  elems.push_back(scale(Int(-1), one(ctx)));
  for (int s = 0; s < lat.size(); ++s)
    if (2 * lat.order_of(s) == ctx.group().order())
      elems.push_back(sub(one(ctx), basis_element(ctx, s, s)));
  for (RingElement& u : elems) {
    std::vector<Int> gh = ghost(ctx, u);
    std::vector<char> lambda(gh.size());
    for (size_t i = 0; i < gh.size(); ++i) lambda[i] = gh[i] == -1;
    out.sign_vectors.push_back(std::move(lambda));
    out.basis.push_back(std::move(u));
  }
  out.dimension = int(out.basis.size());
  return out;
}

bool verify_unit(const RingContext& ctx, const RingElement& u) {
  RingTag tag = u.tag == RingTag::burnside ? RingTag::slice : u.tag;
  std::vector<Int> gh = ghost(ctx, u);
  bool signs_ok = true;
  std::vector<char> lambda(gh.size(), 0);
  for (size_t i = 0; i < gh.size(); ++i) {
    if (gh[i] == -1)
      lambda[i] = 1;
    else if (gh[i] != 1)
      signs_ok = false;
  }
  bool square_ok = multiply(ctx, u, u) == one(ctx, tag);
  bool system_ok = false;
  if (signs_ok) {
    BitMatrix m = unit_constraints(ctx, tag);
    system_ok = true;
    for (int r = 0; r < m.rows() && system_ok; ++r) {
      int parity = 0;
      for (int c = 0; c < m.cols(); ++c)
        if (m.get(r, c) && lambda[c]) parity ^= 1;
      if (parity) system_ok = false;
    }
  }
  if (signs_ok != square_ok || signs_ok != system_ok)
    throw Error("verify_unit: equivalent conditions disagree");
  return signs_ok && square_ok && system_ok;
}

}  // namespace burnside
