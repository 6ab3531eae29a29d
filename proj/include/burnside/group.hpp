#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "burnside/bitset.hpp"

namespace burnside {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input (bad table, bad file, bad arguments).
struct SpecError : Error {
  using Error::Error;
};
// Group order exceeds the configured cap.
struct CapError : Error {
  using Error::Error;
};

constexpr int kDefaultOrderCap = 100;

// Finite group as a multiplication table over element indices.
// Element 0 is the identity; the table is validated at construction.
class Group {
 public:
  static Group from_table(std::vector<int> mul, std::string name);

  int order() const { return n_; }
  const std::string& name() const { return name_; }

  int op(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  // ^g x = g x g^{-1}
  int conj(int g, int x) const { return op(op(g, x), inv_[g]); }
  int element_order(int a) const { return elt_order_[a]; }

  bool is_abelian() const;

  // Closure of a generating set inside this group.
  ElemSet generated_subgroup(const std::vector<int>& gens) const;

 private:
  Group() = default;
  int n_ = 0;
  std::string name_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
};

// Family constructors.
Group cyclic_group(int n);
Group dihedral_group(int n);  // symmetries of the n-gon, order 2n
Group symmetric_group(int n);
Group alternating_group(int n);
Group quaternion_group();
Group elementary_abelian_group(int p, int k);
Group direct_product(const Group& a, const Group& b);

// Group from permutation generators on `degree` points (0-based images).
Group group_from_permutations(int degree,
                              const std::vector<std::vector<int>>& gens,
                              const std::string& name, int cap);

// Quotient G/N together with the projection element map.
struct QuotientGroup {
  Group group;
  std::vector<int> proj;  // element of G -> element of G/N
};
QuotientGroup quotient_group(const Group& g, const ElemSet& normal_subgroup);

// Subgroup as a standalone group plus the embedding into the parent.
struct SubgroupGroup {
  Group group;
  std::vector<int> embed;  // element of H -> element of G
};
SubgroupGroup subgroup_as_group(const Group& g, const ElemSet& members,
                                const std::string& name);

// Parses the group description format: `family <name> <args>`,
// `perm <degree>` plus one cycle line per generator, `table <n>` plus
// n rows, and `product` collapsing everything defined so far.
Group parse_group_text(const std::string& text, int cap = kDefaultOrderCap);
Group load_group_file(const std::string& path, int cap = kDefaultOrderCap);

// Inline form used by the CLI: "family cyclic 6" etc.
Group parse_group_args(const std::vector<std::string>& args,
                       int cap = kDefaultOrderCap);

}  // namespace burnside
