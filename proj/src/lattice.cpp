#include "burnside/lattice.hpp"

#include <algorithm>

namespace burnside {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

SubgroupLattice::SubgroupLattice(const Group& g, int cap) : g_(&g) {
  int n = g.order();
  if (n > cap)
    throw CapError("subgroup enumeration: order " + std::to_string(n) +
                   " exceeds cap " + std::to_string(cap));

  // Seed with the trivial and cyclic subgroups, then close under pairwise
  // join to a fixpoint.
  std::unordered_map<ElemSet, int, ElemSetHash> seen;
  std::vector<ElemSet> sets;
  auto insert = [&](const ElemSet& s) -> bool {
    if (seen.count(s)) return false;
    seen.emplace(s, int(sets.size()));
    sets.push_back(s);
    return true;
  };
  ElemSet triv(n);
  triv.add(0);
  insert(triv);
  for (int x = 1; x < n; ++x) insert(g.generated_subgroup({x}));

  bool grew = true;
  while (grew) {
    grew = false;
    size_t m = sets.size();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) {
        ElemSet u = sets[i] | sets[j];
        if (seen.count(u)) continue;
        std::vector<int> gens = u.elements();
        ElemSet closed = g.generated_subgroup(gens);
        if (insert(closed)) grew = true;
      }
  }

  // Deterministic ids: sort by (order, lexicographic member sequence).
  std::sort(sets.begin(), sets.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.lex_less(b);
  });
  subs_.resize(sets.size());
  for (size_t i = 0; i < sets.size(); ++i) {
    subs_[i].members = sets[i];
    subs_[i].id = int(i);
    subs_[i].order = sets[i].count();
    index_.emplace(sets[i], int(i));
    // closure under multiplication and inverses, identity, Lagrange
    const ElemSet& m = sets[i];
    if (!m.test(0)) throw Error("lattice: subgroup misses the identity");
    if (n % subs_[i].order != 0)
      throw Error("lattice: subgroup order violates Lagrange");
    for (int a = m.first(); a >= 0; a = m.next(a)) {
      if (!m.test(g.inverse(a))) throw Error("lattice: not inverse-closed");
      for (int b = m.first(); b >= 0; b = m.next(b))
        if (!m.test(g.op(a, b))) throw Error("lattice: not product-closed");
    }
  }
  trivial_id_ = 0;
  full_id_ = int(subs_.size()) - 1;

  size_t m = subs_.size();
  leq_.assign(m * m, 0);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      leq_[a * m + b] = subs_[a].members.subset_of(subs_[b].members);

  conj_.assign(m * n, -1);
  for (size_t a = 0; a < m; ++a)
    for (int x = 0; x < n; ++x) {
      ElemSet c(n);
      for (int e = subs_[a].members.first(); e >= 0; e = subs_[a].members.next(e))
        c.add(g.conj(x, e));
      auto it = index_.find(c);
      if (it == index_.end()) throw Error("lattice not closed under conjugation");
      conj_[a * n + x] = it->second;
    }

  class_of_.assign(m, -1);
  for (size_t a = 0; a < m; ++a) {
    if (class_of_[a] >= 0) continue;
    int c = int(class_reps_.size());
    class_reps_.push_back(int(a));  // ids sorted lex, so first hit is the rep
    for (int x = 0; x < n; ++x) class_of_[conj_[a * n + x]] = c;
  }

  normalizer_.assign(m, -1);
  for (size_t a = 0; a < m; ++a) {
    ElemSet nm(n);
    for (int x = 0; x < n; ++x)
      if (conj_[a * n + x] == int(a)) nm.add(x);
    normalizer_[a] = id_of(nm);
    if (normalizer_[a] < 0) throw Error("normalizer not in lattice");
  }

  join_.assign(m * m, -1);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      int j;
      if (leq_[a * m + b]) {
        j = int(b);
      } else if (leq_[b * m + a]) {
        j = int(a);
      } else {
        ElemSet u = subs_[a].members | subs_[b].members;
        j = generated_by(u);
      }
      join_[a * m + b] = join_[b * m + a] = j;
    }
}

int SubgroupLattice::id_of(const ElemSet& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

int SubgroupLattice::meet(int a, int b) const {
  int id = id_of(subs_[a].members & subs_[b].members);
  if (id < 0) throw Error("meet not in lattice");
  return id;
}

int SubgroupLattice::join(int a, int b) const {
  return join_[size_t(a) * subs_.size() + b];
}

int SubgroupLattice::generated_by(const ElemSet& seed) const {
  int id = id_of(g_->generated_subgroup(seed.elements()));
  if (id < 0) throw Error("generated subgroup not in lattice");
  return id;
}

int SubgroupLattice::extend_by(int id, int g) const {
  if (subs_[id].members.test(g)) return id;
  std::vector<int> gens = subs_[id].members.elements();
  gens.push_back(g);
  int r = id_of(g_->generated_subgroup(gens));
  if (r < 0) throw Error("extended subgroup not in lattice");
  return r;
}

bool SubgroupLattice::is_normal_in(int a, int b) const {
  if (!leq(a, b)) return false;
  const ElemSet& bm = subs_[b].members;
  for (int x = bm.first(); x >= 0; x = bm.next(x))
    if (conjugate(a, x) != a) return false;
  return true;
}

int normalizer_pair(const SubgroupLattice& lat, int t, int s) {
  if (!lat.leq(s, t)) throw SpecError("normalizer_pair: S not contained in T");
  const Group& g = lat.group();
  ElemSet nm(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (lat.conjugate(t, x) == t && lat.conjugate(s, x) == s) nm.add(x);
  int id = lat.id_of(nm);
  if (id < 0) throw Error("normalizer_pair: result not in lattice");
  return id;
}

int normal_closure(const SubgroupLattice& lat, int s, int t) {
  if (!lat.leq(s, t)) throw SpecError("normal_closure: S not contained in T");
  const Group& g = lat.group();
  const ElemSet& tm = lat.sub(t).members;
  const ElemSet& sm = lat.sub(s).members;
  ElemSet seed(g.order());
  for (int x = tm.first(); x >= 0; x = tm.next(x))
    for (int e = sm.first(); e >= 0; e = sm.next(e)) seed.add(g.conj(x, e));
  return lat.generated_by(seed);
}

int derived_subgroup(const SubgroupLattice& lat, int h) {
  const Group& g = lat.group();
  const ElemSet& hm = lat.sub(h).members;
  ElemSet seed(g.order());
  for (int a = hm.first(); a >= 0; a = hm.next(a))
    for (int b = hm.first(); b >= 0; b = hm.next(b))
      seed.add(g.op(g.op(a, b), g.op(g.inverse(a), g.inverse(b))));
  return lat.generated_by(seed);
}

int derived_series_limit(const SubgroupLattice& lat, int h) {
  int cur = h;
  while (true) {
    int next = derived_subgroup(lat, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

int o_p_residual(const SubgroupLattice& lat, int h, int p) {
  if (!is_prime(p)) throw SpecError("o_p_residual: p must be prime");
  const Group& g = lat.group();
  const ElemSet& hm = lat.sub(h).members;
  ElemSet seed(g.order());
  seed.add(0);
  for (int a = hm.first(); a >= 0; a = hm.next(a))
    if (g.element_order(a) % p != 0) seed.add(a);
  return lat.generated_by(seed);
}

int sylow_subgroup(const SubgroupLattice& lat, int h, int p) {
  if (!is_prime(p)) throw SpecError("sylow_subgroup: p must be prime");
  int target = 1;
  int rest = lat.order_of(h);
  while (rest % p == 0) {
    rest /= p;
    target *= p;
  }
  // ids are sorted by (order, lex), so the first hit is the least bitset
  for (int id = 0; id < lat.size(); ++id)
    if (lat.order_of(id) == target && lat.leq(id, h)) return id;
  throw Error("sylow_subgroup: none found");
}

bool is_solvable(const SubgroupLattice& lat) {
  return derived_series_limit(lat, lat.full_id()) == lat.trivial_id();
}

}  // namespace burnside
