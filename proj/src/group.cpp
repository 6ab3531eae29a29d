#include "burnside/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace burnside {

Group Group::from_table(std::vector<int> mul, std::string name) {
  size_t n2 = mul.size();
  int n = int(std::lround(std::sqrt(double(n2))));
  if (size_t(n) * n != n2 || n == 0)
    throw SpecError("multiplication table is not square");
  for (int v : mul)
    if (v < 0 || v >= n) throw SpecError("table entry out of range");

  Group g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.mul_ = std::move(mul);

  for (int a = 0; a < n; ++a)
    if (g.op(0, a) != a || g.op(a, 0) != a)
      throw SpecError("element 0 is not a two-sided identity");

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == 0 && g.op(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) throw SpecError("element without two-sided inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw SpecError("multiplication table is not associative");

  g.elt_order_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g.op(x, a);
      ++k;
    }
    g.elt_order_[a] = k;
  }
  return g;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

ElemSet Group::generated_subgroup(const std::vector<int>& gens) const {
  ElemSet got(n_);
  got.add(0);
  std::vector<int> queue{0};
  for (int g : gens)
    if (!got.test(g)) {
      got.add(g);
      queue.push_back(g);
    }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (size_t j = 0; j < queue.size(); ++j) {
      int p = op(queue[i], queue[j]);
      if (!got.test(p)) {
        got.add(p);
        queue.push_back(p);
      }
      p = op(queue[j], queue[i]);
      if (!got.test(p)) {
        got.add(p);
        queue.push_back(p);
      }
    }
  }
  return got;
}

Group cyclic_group(int n) {
  if (n < 1) throw SpecError("cyclic: order must be positive");
  std::vector<int> mul(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[size_t(a) * n + b] = (a + b) % n;
  return Group::from_table(std::move(mul), "C" + std::to_string(n));
}

namespace {

std::vector<int> perm_compose(const std::vector<int>& p,
                              const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

Group group_from_perm_list(std::vector<std::vector<int>> perms,
                           const std::string& name) {
  int n = int(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<int> mul(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(perm_compose(perms[a], perms[b]));
      if (it == index.end()) throw SpecError("permutation set not closed");
      mul[size_t(a) * n + b] = it->second;
    }
  return Group::from_table(std::move(mul), name);
}

bool perm_is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

Group group_from_permutations(int degree,
                              const std::vector<std::vector<int>>& gens,
                              const std::string& name, int cap) {
  for (const auto& g : gens) {
    if (int(g.size()) != degree) throw SpecError("perm: wrong degree");
    std::vector<int> seen(degree, 0);
    for (int x : g) {
      if (x < 0 || x >= degree || seen[x]) throw SpecError("perm: not a bijection");
      seen[x] = 1;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    const std::vector<int> cur = elems[i];
    for (const auto& g : gens) {
      for (auto p : {perm_compose(g, cur), perm_compose(cur, g)}) {
        if (!index.count(p)) {
          if (int(elems.size()) >= cap)
            throw CapError("perm: generated group exceeds order cap " +
                           std::to_string(cap));
          index[p] = int(elems.size());
          elems.push_back(std::move(p));
        }
      }
    }
  }
  return group_from_perm_list(std::move(elems), name);
}

Group dihedral_group(int n) {
  if (n < 1) throw SpecError("dihedral: n must be positive");
  if (n == 1) return cyclic_group(2);
  std::vector<int> rot(n), refl(n);
  for (int x = 0; x < n; ++x) {
    rot[x] = (x + 1) % n;
    refl[x] = (n - x) % n;
  }
  Group g = group_from_permutations(n, {rot, refl},
                                    "D" + std::to_string(2 * n), 2 * n + 1);
  if (g.order() != 2 * n) throw SpecError("dihedral: construction failed");
  return g;
}

Group symmetric_group(int n) {
  if (n < 1) throw SpecError("symmetric: n must be positive");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return group_from_perm_list(std::move(perms), "S" + std::to_string(n));
}

Group alternating_group(int n) {
  if (n < 1) throw SpecError("alternating: n must be positive");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    if (perm_is_even(base)) perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return group_from_perm_list(std::move(perms), "A" + std::to_string(n));
}

Group quaternion_group() {
  // Elements (sign, basis) with basis 1,i,j,k; index = basis*2 + (sign<0).
  auto mul_basis = [](int a, int b, int& sign) {
    // 0=1, 1=i, 2=j, 3=k
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    // i*j=k, j*k=i, k*i=j; reversed order flips the sign
    int c = 6 - a - b;
    if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) return c;
    sign = -sign;
    return c;
  };
  std::vector<int> mul(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign = (x & 1 ? -1 : 1) * (y & 1 ? -1 : 1);
      int basis = mul_basis(x >> 1, y >> 1, sign);
      mul[size_t(x) * 8 + y] = basis * 2 + (sign < 0 ? 1 : 0);
    }
  return Group::from_table(std::move(mul), "Q8");
}

Group direct_product(const Group& a, const Group& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> mul(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      mul[size_t(x) * n + y] = a.op(xa, ya) * nb + b.op(xb, yb);
    }
  return Group::from_table(std::move(mul), a.name() + "x" + b.name());
}

Group elementary_abelian_group(int p, int k) {
  if (k < 0) throw SpecError("elementary_abelian: k must be >= 0");
  Group g = cyclic_group(1);
  for (int i = 0; i < k; ++i) g = direct_product(g, cyclic_group(p));
  std::vector<int> mul;
  mul.reserve(size_t(g.order()) * g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) mul.push_back(g.op(a, b));
  return Group::from_table(std::move(mul), "E" + std::to_string(p) + "^" +
                                               std::to_string(k));
}

QuotientGroup quotient_group(const Group& g, const ElemSet& n) {
  int order = g.order();
  for (int x = n.first(); x >= 0; x = n.next(x))
    for (int h = 0; h < order; ++h)
      if (!n.test(g.conj(h, x)))
        throw SpecError("quotient: subgroup is not normal");
  // Coset of x is keyed by its least member.
  std::vector<int> coset_rep(order);
  for (int x = 0; x < order; ++x) {
    int rep = order;
    for (int s = n.first(); s >= 0; s = n.next(s)) rep = std::min(rep, g.op(x, s));
    coset_rep[x] = rep;
  }
  std::vector<int> reps;
  for (int x = 0; x < order; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::vector<int> rep_index(order, -1);
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = int(i);

  int q = int(reps.size());
  std::vector<int> mul(size_t(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      mul[size_t(a) * q + b] = rep_index[coset_rep[g.op(reps[a], reps[b])]];
  QuotientGroup out{Group::from_table(std::move(mul), g.name() + "/N" +
                                                          std::to_string(n.count())),
                    {}};
  out.proj.resize(order);
  for (int x = 0; x < order; ++x) out.proj[x] = rep_index[coset_rep[x]];
  return out;
}

SubgroupGroup subgroup_as_group(const Group& g, const ElemSet& members,
                                const std::string& name) {
  std::vector<int> embed = members.elements();
  std::vector<int> back(g.order(), -1);
  for (size_t i = 0; i < embed.size(); ++i) back[embed[i]] = int(i);
  int m = int(embed.size());
  std::vector<int> mul(size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = back[g.op(embed[a], embed[b])];
      if (p < 0) throw SpecError("subgroup_as_group: set not closed");
      mul[size_t(a) * m + b] = p;
    }
  return SubgroupGroup{Group::from_table(std::move(mul), name), std::move(embed)};
}

namespace {

Group family_group(const std::string& fam, const std::vector<int>& args, int cap) {
  auto want = [&](size_t k) {
    if (args.size() != k)
      throw SpecError("family " + fam + ": expected " + std::to_string(k) +
                      " argument(s)");
  };
  Group g = cyclic_group(1);
  if (fam == "cyclic") {
    want(1);
    g = cyclic_group(args[0]);
  } else if (fam == "dihedral") {
    want(1);
    g = dihedral_group(args[0]);
  } else if (fam == "symmetric") {
    want(1);
    g = symmetric_group(args[0]);
  } else if (fam == "alternating") {
    want(1);
    g = alternating_group(args[0]);
  } else if (fam == "quaternion8") {
    want(0);
    g = quaternion_group();
  } else if (fam == "elementary_abelian") {
    want(2);
    g = elementary_abelian_group(args[0], args[1]);
  } else {
    throw SpecError("unknown family: " + fam);
  }
  if (g.order() > cap)
    throw CapError("group order " + std::to_string(g.order()) +
                   " exceeds cap " + std::to_string(cap));
  return g;
}

// Disjoint-cycle notation, 1-based: "(1 2 3)(4 5)". Commas allowed.
std::vector<int> parse_cycles(const std::string& line, int degree) {
  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && (std::isspace((unsigned char)line[i]) || line[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < line.size()) {
    if (line[i] != '(') throw SpecError("perm: expected '(' in cycle line");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < line.size() && line[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < line.size() && std::isdigit((unsigned char)line[j])) ++j;
      if (j == i) throw SpecError("perm: malformed cycle");
      int v = std::stoi(line.substr(i, j - i));
      if (v < 1 || v > degree) throw SpecError("perm: point out of range");
      cyc.push_back(v - 1);
      i = j;
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return perm;
}

}  // namespace

Group parse_group_text(const std::string& text, int cap) {
  std::istringstream in(text);
  std::string line;
  std::vector<Group> stack;
  std::vector<std::vector<int>> pending_gens;
  int pending_degree = -1;
  std::vector<std::vector<int>> pending_rows;
  int pending_table = -1;

  auto flush_pending = [&]() {
    if (pending_degree >= 0) {
      if (pending_gens.empty()) throw SpecError("perm: no generators given");
      Group g = group_from_permutations(pending_degree, pending_gens,
                                        "perm" + std::to_string(pending_degree),
                                        cap);
      stack.push_back(std::move(g));
      pending_degree = -1;
      pending_gens.clear();
    }
    if (pending_table >= 0) {
      if (int(pending_rows.size()) != pending_table)
        throw SpecError("table: wrong number of rows");
      std::vector<int> mul;
      for (auto& r : pending_rows) {
        if (int(r.size()) != pending_table)
          throw SpecError("table: wrong row length");
        mul.insert(mul.end(), r.begin(), r.end());
      }
      if (pending_table > cap) throw CapError("table group exceeds cap");
      stack.push_back(Group::from_table(std::move(mul),
                                        "T" + std::to_string(pending_table)));
      pending_table = -1;
      pending_rows.clear();
    }
  };

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;

    if (pending_degree >= 0 && tok[0] == '(') {
      pending_gens.push_back(parse_cycles(line, pending_degree));
      continue;
    }
    if (pending_table >= 0 && (std::isdigit((unsigned char)tok[0]))) {
      std::vector<int> row;
      std::istringstream rs(line);
      int v;
      while (rs >> v) row.push_back(v);
      pending_rows.push_back(std::move(row));
      continue;
    }
    flush_pending();

    if (tok == "family") {
      std::string fam;
      if (!(ls >> fam)) throw SpecError("family: missing name");
      std::vector<int> args;
      int v;
      while (ls >> v) args.push_back(v);
      stack.push_back(family_group(fam, args, cap));
    } else if (tok == "perm") {
      if (!(ls >> pending_degree) || pending_degree < 1)
        throw SpecError("perm: missing degree");
    } else if (tok == "table") {
      if (!(ls >> pending_table) || pending_table < 1)
        throw SpecError("table: missing size");
    } else if (tok == "product") {
      if (stack.empty()) throw SpecError("product: nothing defined yet");
      Group g = std::move(stack.front());
      for (size_t i = 1; i < stack.size(); ++i) g = direct_product(g, stack[i]);
      if (g.order() > cap) throw CapError("product group exceeds cap");
      stack.clear();
      stack.push_back(std::move(g));
    } else {
      throw SpecError("unknown directive: " + tok);
    }
  }
  flush_pending();
  if (stack.empty()) throw SpecError("empty group description");
  return std::move(stack.back());
}

Group load_group_file(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_text(ss.str(), cap);
}

Group parse_group_args(const std::vector<std::string>& args, int cap) {
  if (args.empty()) throw SpecError("no group specified");
  std::ostringstream ss;
  for (const auto& a : args) ss << a << ' ';
  return parse_group_text(ss.str(), cap);
}

}  // namespace burnside
