#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "burnside/kernels.hpp"

namespace burnside {

enum class RingTag { slice, section, burnside };

std::string to_string(RingTag tag);

// Coefficient vector indexed by class ids: slice-class ids for the slice
// and section rings, subgroup-class ids for the ordinary Burnside ring.
// Zero coefficients are absent.
template <typename C>
struct BasicElement {
  RingTag tag = RingTag::slice;
  std::map<int, C> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  C coeff(int c) const {
    auto it = coeffs.find(c);
    return it == coeffs.end() ? C(0) : it->second;
  }
  void set(int c, C v) {
    if (v == 0)
      coeffs.erase(c);
    else
      coeffs[c] = std::move(v);
  }
  void addc(int c, const C& v) {
    auto it = coeffs.emplace(c, C(0)).first;
    it->second += v;
    if (it->second == 0) coeffs.erase(it);
  }
  bool operator==(const BasicElement& o) const {
    return tag == o.tag && coeffs == o.coeffs;
  }
};

using RingElement = BasicElement<Int>;
using QRingElement = BasicElement<Rat>;

template <typename C>
BasicElement<C> add(const BasicElement<C>& a, const BasicElement<C>& b) {
  BasicElement<C> r = a;
  for (auto& [c, v] : b.coeffs) r.addc(c, v);
  return r;
}
template <typename C>
BasicElement<C> sub(const BasicElement<C>& a, const BasicElement<C>& b) {
  BasicElement<C> r = a;
  for (auto& [c, v] : b.coeffs) r.addc(c, C(-v));
  return r;
}
template <typename C>
BasicElement<C> scale(const C& k, const BasicElement<C>& a) {
  BasicElement<C> r;
  r.tag = a.tag;
  if (k == 0) return r;
  for (auto& [c, v] : a.coeffs) r.coeffs[c] = k * v;
  return r;
}

QRingElement to_rational(const RingElement& x);
// Requires all denominators 1.
RingElement to_integral(const QRingElement& x);
bool is_integral(const QRingElement& x);

struct ContextOptions {
  int cap = kDefaultOrderCap;
  bool parallel = true;
};

// Coset structure of N_G(T,S)/S for a slice class, with the class of
// (<g,T>, <g,S>) per coset (normally closed in section mode). Shared by
// the ghost-image criteria and the unit-group constraint builder.
struct NormalizerCosets {
  int normalizer_id = -1;
  int index = 0;            // |N_G(T,S) : S|
  std::vector<int> reps;    // canonical coset representatives
  std::vector<int> cls;     // class id of the generated pair, per coset
  std::vector<int> pos;     // group element -> coset position (-1 outside N)
};

// Everything the ring operations need for one group: the lattice, slice
// classes, Moebius tables, table of marks and structure constants.
// Immutable after construction; safe for concurrent reads.
class RingContext {
 public:
  explicit RingContext(Group g, ContextOptions opt = {});

  RingContext(const RingContext&) = delete;
  RingContext& operator=(const RingContext&) = delete;

  const Group& group() const { return group_; }
  const SubgroupLattice& lattice() const { return *lattice_; }
  const SliceTable& slices() const { return *slices_; }
  const SubgroupMobius& mobius() const { return *mobius_; }

  const std::vector<Int>& mark_matrix() const { return marks_; }
  const ProductTable& products() const { return products_; }
  const std::vector<Int>& burnside_marks() const { return bmarks_; }
  const ProductTable& burnside_products() const { return bproducts_; }

  int num_classes(RingTag tag) const;
  // |N_G(T,S)| and |N_G(T,S)/S| for a slice class.
  int pair_normalizer(int c) const { return pair_normalizer_[c]; }
  int pair_normalizer_index(int c) const { return pair_normalizer_index_[c]; }

  // Precomputed coset tables: slice mode for every class, section mode
  // for section classes.
  const NormalizerCosets& cosets(int c, bool section_mode) const;

 private:
  Group group_;
  std::unique_ptr<SubgroupLattice> lattice_;
  std::unique_ptr<SliceTable> slices_;
  std::unique_ptr<SubgroupMobius> mobius_;
  std::vector<Int> marks_;
  ProductTable products_;
  std::vector<Int> bmarks_;
  ProductTable bproducts_;
  std::vector<int> pair_normalizer_;
  std::vector<int> pair_normalizer_index_;
  std::vector<NormalizerCosets> cosets_slice_;
  std::vector<NormalizerCosets> cosets_section_;
};

// ---- Basis and arithmetic ----

// <T,S> by subgroup ids; section tag requires S normal in T.
RingElement basis_element(const RingContext& ctx, int t, int s,
                          RingTag tag = RingTag::slice);
RingElement burnside_basis(const RingContext& ctx, int s);
RingElement one(const RingContext& ctx, RingTag tag = RingTag::slice);

RingElement multiply(const RingContext& ctx, const RingElement& x,
                     const RingElement& y);
QRingElement multiply(const RingContext& ctx, const QRingElement& x,
                      const QRingElement& y);

// ---- Marks and ghost map ----

// phi_{T,S}(x), (T,S) any slice; works on slice and section elements.
Int mark(const RingContext& ctx, int t, int s, const RingElement& x);
Rat mark(const RingContext& ctx, int t, int s, const QRingElement& x);

// Mark vector over class representatives ([Pi(G)], [Sigma(G)] or subgroup
// classes depending on the element's ring).
std::vector<Int> ghost(const RingContext& ctx, const RingElement& x);
std::vector<Rat> ghost(const RingContext& ctx, const QRingElement& x);

// Exact triangular solve of ghost(x) = m; ring chosen by tag.
QRingElement ghost_pullback(const RingContext& ctx, const std::vector<Rat>& m,
                            RingTag tag);
// Same, asserting the result is integral.
RingElement integral_pullback(const RingContext& ctx,
                              const std::vector<Int>& m, RingTag tag);

// ---- Idempotents ----

QRingElement idempotent_xi(const RingContext& ctx, int t, int s);
QRingElement idempotent_gamma(const RingContext& ctx, int t, int s);
// Primitive idempotent of QB(G) indexed by a subgroup.
QRingElement burnside_idempotent(const RingContext& ctx, int h);

// ---- Ghost image membership ----

// m is indexed by slice classes (resp. section classes), one value per
// conjugacy class.
bool ghost_image_check(const RingContext& ctx, const std::vector<Int>& m);
bool ghost_image_check_sections(const RingContext& ctx,
                                const std::vector<Int>& m);

// Cached in the context; see RingContext::cosets.
const NormalizerCosets& normalizer_cosets(const RingContext& ctx, int c,
                                          bool section_mode);

// ---- Structure maps ----

// (T,S) -> (T, S^{<| T}), summing coefficients; lands in the section ring.
RingElement section_restriction_map(const RingContext& ctx,
                                    const RingElement& x);
// s_G: <T,S> -> [G/S] and i_G: [G/S] -> <S,S>.
RingElement s_map(const RingContext& ctx, const RingElement& x);
RingElement i_map(const RingContext& ctx, const RingElement& x);

// <T,S> x <T',S'> = <TxT', SxS'> in the product group's ring.
RingElement external_product(const RingContext& ca, const RingContext& cb,
                             const RingContext& cprod, const RingElement& x,
                             const RingElement& y);

std::string element_to_string(const RingContext& ctx, const RingElement& x);
std::string element_to_string(const RingContext& ctx, const QRingElement& x);

}  // namespace burnside
