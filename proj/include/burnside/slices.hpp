#pragma once

#include <gmpxx.h>

#include <vector>

#include "burnside/lattice.hpp"

namespace burnside {

using Int = mpz_class;
using Rat = mpq_class;

// A slice (T,S): pair of subgroup ids with S <= T. Sections are the
// slices with S normal in T.
struct Slice {
  int t = -1;
  int s = -1;
  bool operator==(const Slice& o) const { return t == o.t && s == o.s; }
};

// Every slice of the group, the conjugation classes, the order
//   (T,S) <= (Y,X)  iff  T <= Y and S <= X,
// and canonical class representatives. Class ids are assigned along a
// linear extension of the order (sort key (|S|, |T|, lex T, lex S)), so
// mark matrices built over class ids come out triangular.
class SliceTable {
 public:
  explicit SliceTable(const SubgroupLattice& lat);

  const SubgroupLattice& lattice() const { return *lat_; }

  int num_slices() const { return int(slices_.size()); }
  const Slice& slice(int idx) const { return slices_[idx]; }
  int index_of(int t, int s) const;  // -1 if S not <= T
  int index_of(const Slice& sl) const { return index_of(sl.t, sl.s); }

  bool leq(int a, int b) const {
    return lat_->leq(slices_[a].t, slices_[b].t) &&
           lat_->leq(slices_[a].s, slices_[b].s);
  }

  int conjugate(int idx, int g) const {
    return index_of(lat_->conjugate(slices_[idx].t, g),
                    lat_->conjugate(slices_[idx].s, g));
  }

  int num_classes() const { return int(class_rep_.size()); }
  int class_of(int idx) const { return class_of_[idx]; }
  int class_of_pair(int t, int s) const { return class_of_[index_of(t, s)]; }
  const Slice& class_rep(int c) const { return slices_[class_rep_[c]]; }
  int class_rep_index(int c) const { return class_rep_[c]; }
  int class_size(int c) const { return class_size_[c]; }

  bool is_section_class(int c) const { return section_mask_[c]; }
  bool is_section_slice(int idx) const {
    return lat_->is_normal_in(slices_[idx].s, slices_[idx].t);
  }
  // Section class ids in class order.
  const std::vector<int>& section_classes() const { return section_classes_; }
  int num_section_classes() const { return int(section_classes_.size()); }
  // Position of a class id within section_classes(), -1 for non-sections.
  int section_pos(int c) const { return section_pos_[c]; }

  // (T,S) -> (T, S^{<| T}) as a class map.
  int closure_class(int c) const { return closure_class_[c]; }
  Slice closed_slice(const Slice& sl) const {
    return Slice{sl.t, normal_closure(*lat_, sl.s, sl.t)};
  }

 private:
  const SubgroupLattice* lat_;
  std::vector<Slice> slices_;
  std::vector<int> pair_index_;  // t * nsubs + s -> slice idx
  std::vector<int> class_of_;
  std::vector<int> class_rep_;
  std::vector<int> class_size_;
  std::vector<char> section_mask_;
  std::vector<int> section_classes_;
  std::vector<int> section_pos_;
  std::vector<int> closure_class_;
};

// Moebius function of the subgroup lattice, all pairs A <= B, computed
// eagerly by the defining downward recursion.
class SubgroupMobius {
 public:
  explicit SubgroupMobius(const SubgroupLattice& lat);
  // requires A <= B
  const Int& mu(int a, int b) const;

 private:
  const SubgroupLattice* lat_;
  std::vector<Int> table_;
};

// Moebius function of the slice poset (product formula): for a=(V,U),
// b=(T,S) with a <= b it is mu(U,S)*mu(V,T) when S <= V, else 0.
Int mobius_pi(const SliceTable& st, const SubgroupMobius& mu, const Slice& a,
              const Slice& b);

// Moebius function of the section poset via the closure-map formula:
// mu(V,T) * sum of mu(U,X) over U <= X <= V with X^{<| T} = S.
Int mobius_sigma(const SliceTable& st, const SubgroupMobius& mu,
                 const Slice& a, const Slice& b);

}  // namespace burnside
