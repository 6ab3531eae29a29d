#pragma once

#include <unordered_map>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

struct Subgroup {
  ElemSet members;
  int id = -1;
  int order = 0;
};

// All subgroups of a group, their inclusion order, conjugation action and
// conjugacy classes. Immutable after construction.
class SubgroupLattice {
 public:
  SubgroupLattice(const Group& g, int cap = kDefaultOrderCap);

  const Group& group() const { return *g_; }
  int size() const { return int(subs_.size()); }
  const Subgroup& sub(int id) const { return subs_[id]; }
  int order_of(int id) const { return subs_[id].order; }

  int trivial_id() const { return trivial_id_; }
  int full_id() const { return full_id_; }

  // -1 when the set is not a subgroup of the lattice.
  int id_of(const ElemSet& members) const;

  bool leq(int a, int b) const { return leq_[size_t(a) * subs_.size() + b]; }
  // id of ^g H = g H g^{-1}
  int conjugate(int id, int g) const { return conj_[size_t(id) * g_->order() + g]; }

  int num_classes() const { return int(class_reps_.size()); }
  int class_of(int id) const { return class_of_[id]; }
  int class_rep(int c) const { return class_reps_[c]; }

  int meet(int a, int b) const;  // intersection
  int join(int a, int b) const;  // generated subgroup
  int generated_by(const ElemSet& seed) const;
  // Subgroup generated by H together with one extra element.
  int extend_by(int id, int g) const;

  int normalizer(int id) const { return normalizer_[id]; }
  bool is_normal_in(int a, int b) const;  // a normal in b (requires a <= b)

 private:
  const Group* g_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElemSet, int, ElemSetHash> index_;
  std::vector<char> leq_;
  std::vector<int> conj_;
  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<int> normalizer_;
  std::vector<int> join_;
  int trivial_id_ = -1, full_id_ = -1;
};

// {g in G | ^gT = T and ^gS = S}; requires S <= T. Always contains S.
int normalizer_pair(const SubgroupLattice& lat, int t, int s);

// Smallest normal subgroup of T containing S; requires S <= T.
int normal_closure(const SubgroupLattice& lat, int s, int t);

int derived_subgroup(const SubgroupLattice& lat, int h);
// Perfect core D^inf(H).
int derived_series_limit(const SubgroupLattice& lat, int h);

// O^p(H): smallest normal subgroup of H with p-group quotient.
int o_p_residual(const SubgroupLattice& lat, int h, int p);

// One Sylow p-subgroup of H (least-bitset choice); trivial if p does not
// divide |H|.
int sylow_subgroup(const SubgroupLattice& lat, int h, int p);

bool is_solvable(const SubgroupLattice& lat);

bool is_prime(int p);
std::vector<int> prime_divisors(int n);

}  // namespace burnside
